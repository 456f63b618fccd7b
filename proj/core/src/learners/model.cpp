#include "qembed/learners/model.hpp"

#include <cmath>
#include <sstream>

#include "qembed/error.hpp"
#include "qembed/learners/ensemble.hpp"
#include "qembed/learners/knn.hpp"
#include "qembed/learners/logistic_regression.hpp"
#include "qembed/learners/svm.hpp"
#include "qembed/learners/tree.hpp"

namespace qembed::learners {

namespace {

struct KindName {
  ModelKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {ModelKind::LogReg, "logreg"},           {ModelKind::Knn, "knn"},
    {ModelKind::SvmLinear, "svm-linear"},     {ModelKind::SvmPoly, "svm-poly"},
    {ModelKind::SvmRbf, "svm-rbf"},           {ModelKind::SvmSigmoid, "svm-sigmoid"},
    {ModelKind::DecisionTree, "decision-tree"}, {ModelKind::RandomForest, "random-forest"},
    {ModelKind::AdaBoost, "adaboost"},
};

bool is_svm(ModelKind k) {
  return k == ModelKind::SvmLinear || k == ModelKind::SvmPoly || k == ModelKind::SvmRbf ||
         k == ModelKind::SvmSigmoid;
}

// Parameters that must hold non-negative integers.
bool integral_param(const std::string& name) {
  return name == "max_iter" || name == "k" || name == "degree" || name == "max_depth" ||
         name == "min_samples_leaf" || name == "max_features" || name == "n_trees" ||
         name == "n_estimators" || name == "bootstrap";
}

std::size_t as_count(double v) { return static_cast<std::size_t>(std::llround(v)); }

}  // namespace

std::string_view kind_name(ModelKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "unknown";
}

ModelKind parse_kind(std::string_view name) {
  for (const auto& kn : kKindNames)
    if (kn.name == name) return kn.kind;
  throw ConfigError("unknown model kind '" + std::string(name) + "'");
}

const std::vector<ModelKind>& all_kinds() {
  static const std::vector<ModelKind> kinds = [] {
    std::vector<ModelKind> out;
    for (const auto& kn : kKindNames) out.push_back(kn.kind);
    return out;
  }();
  return kinds;
}

std::map<std::string, double> ModelSpec::defaults(ModelKind kind) {
  switch (kind) {
    case ModelKind::LogReg: return {{"l2", 1.0}, {"max_iter", 100}, {"tol", 1e-6}};
    case ModelKind::Knn: return {{"k", 5}};
    case ModelKind::SvmLinear: return {{"C", 1.0}, {"tol", 1e-3}, {"max_iter", 1e6}};
    case ModelKind::SvmPoly:
      return {{"C", 1.0}, {"gamma", 0.0}, {"degree", 3}, {"coef0", 0.0}, {"tol", 1e-3}, {"max_iter", 1e6}};
    case ModelKind::SvmRbf: return {{"C", 1.0}, {"gamma", 0.0}, {"tol", 1e-3}, {"max_iter", 1e6}};
    case ModelKind::SvmSigmoid:
      return {{"C", 1.0}, {"gamma", 0.0}, {"coef0", 0.0}, {"tol", 1e-3}, {"max_iter", 1e6}};
    case ModelKind::DecisionTree: return {{"max_depth", 12}, {"min_samples_leaf", 2}, {"max_features", 0}};
    case ModelKind::RandomForest:
      return {{"n_trees", 100}, {"max_depth", 12}, {"min_samples_leaf", 2}, {"max_features", 0}, {"bootstrap", 1}};
    case ModelKind::AdaBoost: return {{"n_estimators", 100}, {"max_depth", 1}};
  }
  return {};
}

ModelSpec::ModelSpec(ModelKind kind, std::map<std::string, double> hyper, std::uint64_t seed)
    : kind_(kind), hyper_(defaults(kind)), seed_(seed) {
  for (const auto& [name, value] : hyper) {
    if (!hyper_.contains(name)) {
      std::ostringstream msg;
      msg << kind_name(kind) << ": unknown hyperparameter '" << name << "' (accepted:";
      for (const auto& [known, _] : hyper_) msg << " " << known;
      msg << ")";
      throw ConfigError(msg.str());
    }
    if (!std::isfinite(value)) throw ConfigError(std::string(kind_name(kind)) + ": " + name + " must be finite");
    if (integral_param(name) && (value < 0.0 || value != std::floor(value)))
      throw ConfigError(std::string(kind_name(kind)) + ": " + name + " must be a non-negative integer");
    hyper_[name] = value;
  }
  auto positive = [&](const char* name) {
    if (hyper_.contains(name) && !(hyper_.at(name) > 0.0))
      throw ConfigError(std::string(kind_name(kind)) + ": " + name + " must be positive");
  };
  positive("C");
  positive("tol");
  positive("k");
  positive("n_trees");
  positive("n_estimators");
  positive("min_samples_leaf");
  positive("max_iter");
  positive("degree");
  if (hyper_.contains("l2") && hyper_.at("l2") < 0.0) throw ConfigError("logreg: l2 must be >= 0");
  if (hyper_.contains("gamma") && hyper_.at("gamma") < 0.0) throw ConfigError("svm: gamma must be >= 0 (0 = scale)");
  if (hyper_.contains("bootstrap") && hyper_.at("bootstrap") > 1.0) throw ConfigError("random-forest: bootstrap is 0 or 1");
}

double ModelSpec::param(const std::string& name) const {
  const auto it = hyper_.find(name);
  if (it == hyper_.end()) throw ConfigError(std::string(kind_name(kind_)) + ": no hyperparameter named " + name);
  return it->second;
}

std::size_t ModelSpec::count_param(const std::string& name) const { return as_count(param(name)); }

ModelSpec ModelSpec::with_seed(std::uint64_t seed) const {
  ModelSpec out = *this;
  out.seed_ = seed;
  return out;
}

double logistic(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

Labels TrainedModel::predict(const FeatureMatrix& x) const {
  const auto scores = predict_score(x);
  Labels out(scores.size());
  for (std::size_t i = 0; i < scores.size(); ++i) out[i] = scores[i] >= 0.5 ? 1 : 0;
  return out;
}

void TrainedModel::check_width(const FeatureMatrix& x) const {
  if (x.cols() != width_) {
    std::ostringstream msg;
    msg << "predict: model trained on " << width_ << " features, got " << x.cols();
    throw ShapeError(msg.str());
  }
}

void check_training_data(const FeatureMatrix& x, const Labels& y, bool allow_single_class) {
  if (x.rows() != y.size()) throw ShapeError("fit: feature rows and label count differ");
  if (x.rows() == 0) throw TrainingError("fit: empty training set");
  if (!x.all_finite()) throw DataError("fit: non-finite feature value");
  bool seen[2] = {false, false};
  for (int label : y) {
    if (label != 0 && label != 1) throw DataError("fit: labels must be 0 or 1");
    seen[label] = true;
  }
  if (!allow_single_class && !(seen[0] && seen[1]))
    throw TrainingError("fit: training labels contain a single class");
}

std::unique_ptr<TrainedModel> fit(const ModelSpec& spec, const FeatureMatrix& x, const Labels& y) {
  const ModelKind kind = spec.kind();
  check_training_data(x, y, kind == ModelKind::Knn);
  if (is_svm(kind)) {
    Kernel kernel;
    kernel.type = kind == ModelKind::SvmLinear ? KernelType::Linear
                  : kind == ModelKind::SvmPoly ? KernelType::Polynomial
                  : kind == ModelKind::SvmRbf  ? KernelType::Rbf
                                               : KernelType::Sigmoid;
    if (kind != ModelKind::SvmLinear) {
      const double g = spec.param("gamma");
      kernel.gamma = g > 0.0 ? g : SupportVectorMachine::scale_gamma(x);
    }
    if (spec.hyperparameters().contains("coef0")) kernel.coef0 = spec.param("coef0");
    if (spec.hyperparameters().contains("degree")) kernel.degree = static_cast<int>(spec.count_param("degree"));
    SvmOptions opts;
    opts.c = spec.param("C");
    opts.tolerance = spec.param("tol");
    opts.max_iter = spec.count_param("max_iter");
    return std::make_unique<SupportVectorMachine>(SupportVectorMachine::fit(x, y, kernel, opts));
  }
  switch (kind) {
    case ModelKind::LogReg: {
      LogRegOptions opts;
      opts.l2 = spec.param("l2");
      opts.max_iter = spec.count_param("max_iter");
      opts.tolerance = spec.param("tol");
      return std::make_unique<LogisticRegression>(LogisticRegression::fit(x, y, opts));
    }
    case ModelKind::Knn: return std::make_unique<KNearestNeighbors>(x, y, spec.count_param("k"));
    case ModelKind::DecisionTree: {
      TreeOptions opts;
      opts.max_depth = spec.count_param("max_depth");
      opts.min_samples_leaf = spec.count_param("min_samples_leaf");
      opts.max_features = spec.count_param("max_features");
      opts.seed = spec.seed();
      return std::make_unique<DecisionTree>(DecisionTree::fit(x, y, opts));
    }
    case ModelKind::RandomForest: {
      ForestOptions opts;
      opts.n_trees = spec.count_param("n_trees");
      opts.max_depth = spec.count_param("max_depth");
      opts.min_samples_leaf = spec.count_param("min_samples_leaf");
      opts.max_features = spec.count_param("max_features");
      opts.bootstrap = spec.count_param("bootstrap") != 0;
      opts.seed = spec.seed();
      return std::make_unique<RandomForest>(RandomForest::fit(x, y, opts));
    }
    case ModelKind::AdaBoost: {
      AdaBoostOptions opts;
      opts.n_estimators = spec.count_param("n_estimators");
      opts.max_depth = spec.count_param("max_depth");
      return std::make_unique<AdaBoost>(AdaBoost::fit(x, y, opts));
    }
    default: break;
  }
  throw ConfigError("fit: unsupported model kind");
}

}  // namespace qembed::learners
