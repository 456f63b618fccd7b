#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qembed/feature_matrix.hpp"

namespace qembed::learners {

enum class ModelKind {
  LogReg,
  Knn,
  SvmLinear,
  SvmPoly,
  SvmRbf,
  SvmSigmoid,
  DecisionTree,
  RandomForest,
  AdaBoost,
};

std::string_view kind_name(ModelKind kind);
ModelKind parse_kind(std::string_view name);
const std::vector<ModelKind>& all_kinds();

// Model kind, hyperparameters and seed. Unknown hyperparameter names and
// out-of-range values are rejected at construction; missing ones take the
// per-kind defaults (see defaults()).
class ModelSpec {
 public:
  explicit ModelSpec(ModelKind kind, std::map<std::string, double> hyper = {}, std::uint64_t seed = 0);

  static std::map<std::string, double> defaults(ModelKind kind);

  ModelKind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::map<std::string, double>& hyperparameters() const noexcept { return hyper_; }
  double param(const std::string& name) const;
  std::size_t count_param(const std::string& name) const;

  ModelSpec with_seed(std::uint64_t seed) const;
  std::string name() const { return std::string(kind_name(kind_)); }

 private:
  ModelKind kind_;
  std::map<std::string, double> hyper_;
  std::uint64_t seed_;
};

// Fitted classifier. Scores increase with class-1 confidence and lie in
// [0, 1]; labels are scores thresholded at 0.5.
class TrainedModel {
 public:
  virtual ~TrainedModel() = default;

  virtual std::vector<double> predict_score(const FeatureMatrix& x) const = 0;
  Labels predict(const FeatureMatrix& x) const;

  std::size_t input_width() const noexcept { return width_; }

 protected:
  explicit TrainedModel(std::size_t width) : width_(width) {}
  void check_width(const FeatureMatrix& x) const;

 private:
  std::size_t width_;
};

std::unique_ptr<TrainedModel> fit(const ModelSpec& spec, const FeatureMatrix& x, const Labels& y);

// Shared argument checks for fit(): shape agreement, finite features and,
// unless allow_single_class, both labels present.
void check_training_data(const FeatureMatrix& x, const Labels& y, bool allow_single_class = false);

double logistic(double z);

}  // namespace qembed::learners
