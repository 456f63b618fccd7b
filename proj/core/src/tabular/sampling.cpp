#include "qembed/tabular/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qembed/error.hpp"
#include "qembed/random.hpp"

namespace qembed::tabular {

LabeledDataset undersample(const LabeledDataset& ds, std::uint64_t seed, std::vector<std::size_t>* kept_rows) {
  std::vector<std::size_t> by_class[2];
  for (std::size_t r = 0; r < ds.row_count(); ++r) by_class[ds.labels()[r]].push_back(r);
  if (by_class[0].empty() || by_class[1].empty())
    throw BalanceError("undersample: both classes must be present");

  const int minority = by_class[1].size() <= by_class[0].size() ? 1 : 0;
  const auto& keep_all = by_class[minority];
  const auto& majority = by_class[1 - minority];

  Rng rng(seed);
  std::vector<std::size_t> rows = keep_all;
  for (auto pick : rng.sample_without_replacement(majority.size(), keep_all.size()))
    rows.push_back(majority[pick]);
  rng.shuffle(rows);
  if (kept_rows) *kept_rows = rows;
  return ds.select_rows(rows);
}

void SplitSpec::validate() const {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ConfigError("split: train_fraction must lie strictly between 0 and 1");
}

Split train_test_split(const LabeledDataset& ds, const SplitSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;

  auto take = [&](std::vector<std::size_t> pool) {
    rng.shuffle(pool);
    const auto n_train = static_cast<std::size_t>(std::floor(static_cast<double>(pool.size()) * spec.train_fraction));
    train.insert(train.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n_train));
    test.insert(test.end(), pool.begin() + static_cast<std::ptrdiff_t>(n_train), pool.end());
  };

  if (spec.stratified) {
    for (int label = 0; label <= 1; ++label) {
      std::vector<std::size_t> pool;
      for (std::size_t r = 0; r < ds.row_count(); ++r)
        if (ds.labels()[r] == label) pool.push_back(r);
      if (pool.size() < 2) {
        std::ostringstream msg;
        msg << "train_test_split: class " << label << " has " << pool.size()
            << " rows; stratification needs at least 2";
        throw StratificationError(msg.str());
      }
      take(std::move(pool));
    }
  } else {
    if (ds.row_count() < 2) throw StratificationError("train_test_split: need at least 2 rows");
    std::vector<std::size_t> pool(ds.row_count());
    for (std::size_t r = 0; r < pool.size(); ++r) pool[r] = r;
    take(std::move(pool));
  }
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  Split out;
  out.train = ds.select_rows(train);
  out.test = ds.select_rows(test);
  out.train_rows = std::move(train);
  out.test_rows = std::move(test);
  return out;
}

}  // namespace qembed::tabular
