#include "qembed/learners/tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qembed/error.hpp"
#include "qembed/random.hpp"

namespace qembed::learners {

namespace {

double gini(double positive, double total) {
  if (total <= 0.0) return 0.0;
  const double p = positive / total;
  return 2.0 * p * (1.0 - p);
}

class TreeBuilder {
 public:
  TreeBuilder(const FeatureMatrix& x, const Labels& y, std::span<const double> w, const TreeOptions& opt,
              std::vector<DecisionTree::Node>& nodes)
      : x_(x), y_(y), w_(w), opt_(opt), nodes_(nodes), rng_(opt.seed) {
    const std::size_t d = x.cols();
    if (opt_.max_features == 0 || opt_.max_features >= d) {
      all_features_.resize(d);
      std::iota(all_features_.begin(), all_features_.end(), std::size_t{0});
    }
  }

  std::size_t build(std::vector<std::size_t>& rows, std::size_t depth) {
    double pos = 0.0;
    double total = 0.0;
    std::size_t pos_count = 0;
    for (auto r : rows) {
      total += w_[r];
      if (y_[r] == 1) {
        pos += w_[r];
        ++pos_count;
      }
    }
    const std::size_t id = nodes_.size();
    nodes_.push_back({});
    nodes_[id].value = total > 0.0 ? pos / total
                                   : static_cast<double>(pos_count) / static_cast<double>(rows.size());

    const bool pure = pos_count == 0 || pos_count == rows.size();
    const bool depth_capped = opt_.max_depth > 0 && depth >= opt_.max_depth;
    if (pure || depth_capped || rows.size() < 2 * opt_.min_samples_leaf) return id;

    const auto split = best_split(rows, pos, total);
    if (split.feature < 0) return id;

    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (auto r : rows) (x_(r, static_cast<std::size_t>(split.feature)) <= split.threshold ? left : right).push_back(r);
    rows.clear();
    rows.shrink_to_fit();

    nodes_[id].feature = split.feature;
    nodes_[id].threshold = split.threshold;
    const std::size_t l = build(left, depth + 1);
    const std::size_t r = build(right, depth + 1);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

 private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
  };

  Split best_split(const std::vector<std::size_t>& rows, double pos, double total) {
    const std::vector<std::size_t> sampled =
        all_features_.empty() ? rng_.sample_without_replacement(x_.cols(), opt_.max_features) : std::vector<std::size_t>{};
    const auto& features = all_features_.empty() ? sampled : all_features_;

    const double parent = gini(pos, total);
    const std::size_t n = rows.size();
    const std::size_t min_leaf = opt_.min_samples_leaf;
    Split best;
    double best_gain = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> order(rows);
    for (auto f : features) {
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double va = x_(a, f);
        const double vb = x_(b, f);
        return va < vb || (va == vb && a < b);
      });
      double left_pos = 0.0;
      double left_total = 0.0;
      for (std::size_t p = 1; p < n; ++p) {
        const auto prev = order[p - 1];
        left_total += w_[prev];
        if (y_[prev] == 1) left_pos += w_[prev];
        if (p < min_leaf || n - p < min_leaf) continue;
        const double lo = x_(prev, f);
        const double hi = x_(order[p], f);
        if (!(lo < hi)) continue;
        const double right_total = total - left_total;
        const double right_pos = pos - left_pos;
        double gain = parent;
        if (total > 0.0)
          gain -= (left_total / total) * gini(left_pos, left_total) + (right_total / total) * gini(right_pos, right_total);
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best.feature = static_cast<int>(f);
          double mid = lo + 0.5 * (hi - lo);
          if (!(mid < hi)) mid = lo;
          best.threshold = mid;
        }
      }
    }
    return best;
  }

  const FeatureMatrix& x_;
  const Labels& y_;
  std::span<const double> w_;
  TreeOptions opt_;
  std::vector<DecisionTree::Node>& nodes_;
  Rng rng_;
  std::vector<std::size_t> all_features_;
};

}  // namespace

DecisionTree DecisionTree::fit(const FeatureMatrix& x, const Labels& y, const TreeOptions& options,
                               std::span<const double> weights) {
  check_training_data(x, y, /*allow_single_class=*/true);
  if (options.min_samples_leaf == 0) throw ConfigError("decision-tree: min_samples_leaf must be >= 1");
  std::vector<double> uniform;
  if (weights.empty()) {
    uniform.assign(x.rows(), 1.0);
    weights = uniform;
  } else if (weights.size() != x.rows()) {
    throw ShapeError("decision-tree: weight count differs from rows");
  }
  DecisionTree tree(x.cols());
  std::vector<std::size_t> rows(x.rows());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  TreeBuilder builder(x, y, weights, options, tree.nodes_);
  builder.build(rows, 0);
  return tree;
}

double DecisionTree::score_row(std::span<const double> row) const {
  std::size_t at = 0;
  while (nodes_[at].feature >= 0) {
    const auto& node = nodes_[at];
    at = row[static_cast<std::size_t>(node.feature)] <= node.threshold ? node.left : node.right;
  }
  return nodes_[at].value;
}

std::vector<double> DecisionTree::predict_score(const FeatureMatrix& x) const {
  check_width(x);
  std::vector<double> out(x.rows());
  for (std::size_t r = 0; r < x.rows(); ++r) out[r] = score_row(x.row(r));
  return out;
}

std::size_t DecisionTree::depth() const {
  std::size_t best = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [at, d] = stack.back();
    stack.pop_back();
    best = std::max(best, d);
    if (nodes_[at].feature >= 0) {
      stack.push_back({nodes_[at].left, d + 1});
      stack.push_back({nodes_[at].right, d + 1});
    }
  }
  return best;
}

}  // namespace qembed::learners
