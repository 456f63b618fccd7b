#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qembed/error.hpp"
#include "qembed/tabular/churn_csv.hpp"
#include "qembed/tabular/dataset.hpp"
#include "qembed/tabular/pca.hpp"
#include "qembed/tabular/preprocess.hpp"
#include "qembed/tabular/sampling.hpp"
#include "qembed/tabular/scaling.hpp"
#include "qembed/tabular/stats.hpp"
#include "support/oracles.hpp"

namespace {

using namespace qembed::tabular;
using qembed::FeatureMatrix;
using qembed::Labels;

const std::string kFixture = std::string(QEMBED_TEST_DATA_DIR) + "/telco_fixture.csv";

std::string header() {
  std::string h;
  for (std::size_t i = 0; i < kTelcoColumns.size(); ++i) h += (i ? "," : "") + std::string(kTelcoColumns[i]);
  return h;
}

const char* kRowNo =
    "X1,Male,0,Yes,No,10,Yes,No,DSL,Yes,No,No,No,No,No,Month-to-month,Yes,Electronic check,50.00,500.00,No";
const char* kRowYes =
    "X2,Female,1,No,No,2,Yes,Yes,Fiber optic,No,No,No,No,Yes,Yes,Month-to-month,Yes,Electronic check,90.10,180.20,Yes";
const char* kRowBlank =
    "X3,Male,0,Yes,Yes,0,Yes,No,DSL,Yes,No,No,No,No,No,Two year,No,Mailed check,60.00, ,No";

FeatureMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> d;
  FeatureMatrix x(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) x(r, c) = d(gen);
  return x;
}

LabeledDataset imbalanced(std::size_t minority, std::size_t majority) {
  std::vector<double> v;
  Labels y;
  for (std::size_t i = 0; i < minority + majority; ++i) {
    v.push_back(static_cast<double>(i));
    y.push_back(i < minority ? 1 : 0);
  }
  return LabeledDataset({Column::make_numeric("id", v)}, y);
}

TEST(LoadChurnCsv, BundledFixture) {
  LoadReport report;
  const auto ds = load_churn_csv(kFixture, {}, &report);
  EXPECT_EQ(ds.row_count(), 20u);
  EXPECT_EQ(report.rows_read, 20u);
  EXPECT_EQ(ds.column_count(), 19u);
  EXPECT_FALSE(ds.has_column("customerID"));
  EXPECT_FALSE(ds.has_column("Churn"));
  EXPECT_FALSE(ds.column("tenure").categorical());
  EXPECT_TRUE(ds.column("SeniorCitizen").categorical());
  EXPECT_TRUE(ds.column("PaymentMethod").categorical());
  EXPECT_EQ(ds.count_label(1) + ds.count_label(0), 20u);
}

TEST(LoadChurnCsv, MissingFile) {
  EXPECT_THROW(load_churn_csv("/nonexistent/telco.csv"), qembed::IoError);
}

TEST(LoadChurnCsv, RenamedColumnIsNamed) {
  std::string h = header();
  h.replace(h.find("tenure"), 6, "Tenure");
  std::istringstream in(h + "\n" + kRowNo + "\n");
  try {
    read_churn_csv(in);
    FAIL() << "expected SchemaError";
  } catch (const qembed::SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("tenure"), std::string::npos);
  }
}

TEST(LoadChurnCsv, UnparseableNumberNamesRow) {
  std::string bad = kRowYes;
  bad.replace(bad.find("90.10"), 5, "ninety");
  std::istringstream in(header() + "\n" + kRowNo + "\n" + bad + "\n");
  try {
    read_churn_csv(in);
    FAIL() << "expected DataError";
  } catch (const qembed::DataError& e) {
    EXPECT_NE(std::string(e.what()).find("data row 2"), std::string::npos) << e.what();
  }
}

TEST(LoadChurnCsv, BlankTotalChargesPolicies) {
  const std::string text = header() + "\n" + kRowNo + "\n" + kRowYes + "\n" + kRowBlank + "\n";
  {
    std::istringstream in(text);
    LoadReport r;
    const auto ds = read_churn_csv(in, {BlankPolicy::DropRows}, &r);
    EXPECT_EQ(ds.row_count(), 2u);
    EXPECT_EQ(r.rows_read, 3u);
    EXPECT_EQ(r.rows_dropped, 1u);
  }
  {
    std::istringstream in(text);
    LoadReport r;
    const auto ds = read_churn_csv(in, {BlankPolicy::MeanImpute}, &r);
    EXPECT_EQ(ds.row_count(), 3u);
    EXPECT_EQ(r.cells_imputed, 1u);
    EXPECT_DOUBLE_EQ(ds.column("TotalCharges").numeric[2], (500.0 + 180.2) / 2.0);
  }
}

TEST(LoadChurnCsv, QuotedFields) {
  const auto f = split_csv_line(R"(a,"b, c","d ""q""",)");
  ASSERT_EQ(f.size(), 4u);
  EXPECT_EQ(f[1], "b, c");
  EXPECT_EQ(f[2], "d \"q\"");
  EXPECT_EQ(f[3], "");
}

TEST(OneHot, SmallFixture) {
  const LabeledDataset ds({Column::make_categorical("c", {"a", "b", "a"}), Column::make_numeric("v", {1, 2, 3})},
                          {0, 1, 0});
  const auto out = one_hot(ds, {"c"});
  ASSERT_EQ(out.column_count(), 3u);
  EXPECT_EQ(out.column("c_a").numeric, (std::vector<double>{1, 0, 1}));
  EXPECT_EQ(out.column("c_b").numeric, (std::vector<double>{0, 1, 0}));
  EXPECT_EQ(out.column("v").numeric, (std::vector<double>{1, 2, 3}));
}

TEST(OneHot, SingleLevelGivesConstantIndicator) {
  const LabeledDataset ds({Column::make_categorical("c", {"x", "x"})}, {0, 1});
  const auto out = one_hot(ds, {"c"});
  ASSERT_EQ(out.column_count(), 1u);
  EXPECT_EQ(out.column("c_x").numeric, (std::vector<double>{1, 1}));
}

TEST(OneHot, UnseenLevelMapsToZerosAndIsReported) {
  OneHotEncoder enc;
  enc.fit(LabeledDataset({Column::make_categorical("c", {"a", "b"})}, {0, 1}), {"c"});
  OneHotReport report;
  const auto out = enc.transform(LabeledDataset({Column::make_categorical("c", {"a", "z"})}, {0, 1}), &report);
  EXPECT_EQ(out.column("c_a").numeric, (std::vector<double>{1, 0}));
  EXPECT_EQ(out.column("c_b").numeric, (std::vector<double>{0, 0}));
  EXPECT_EQ(report.unseen.at("c"), 1u);
}

TEST(OneHot, MissingColumnIsSchemaError) {
  const LabeledDataset ds({Column::make_numeric("v", {1, 2})}, {0, 1});
  EXPECT_THROW(one_hot(ds, {"c"}), qembed::SchemaError);
}

TEST(OneHot, FixtureAfterDropsHas42Columns) {
  const auto ds = load_churn_csv(kFixture).drop_columns(default_drop_profile());
  std::vector<std::string> cats;
  for (const auto& c : telco_categorical_columns())
    if (ds.has_column(c)) cats.push_back(c);
  const auto out = one_hot(ds, cats);
  EXPECT_EQ(out.column_count(), 42u);
  // Indicator partition: each original column's indicators sum to 1 per row.
  for (const auto& c : cats) {
    for (std::size_t r = 0; r < out.row_count(); ++r) {
      double sum = 0.0;
      for (const auto& col : out.columns())
        if (col.name.rfind(c + "_", 0) == 0) sum += col.numeric[r];
      EXPECT_EQ(sum, 1.0) << c;
    }
  }
}

TEST(PearsonCorr, BasicIdentities) {
  auto x = random_matrix(50, 3, 1);
  for (std::size_t r = 0; r < 50; ++r) x(r, 1) = -x(r, 0);
  for (std::size_t r = 0; r < 50; ++r) x(r, 2) = 7.0;
  const auto c = pearson_corr(x);
  EXPECT_NEAR(c.matrix(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(c.matrix(0, 1), -1.0, 1e-14);
  EXPECT_EQ(c.matrix(0, 2), 0.0);
  EXPECT_TRUE(c.zero_variance[2]);
  EXPECT_FALSE(c.zero_variance[0]);
  EXPECT_EQ(c.matrix(1, 0), c.matrix(0, 1));
}

TEST(PearsonCorr, BoundedAndSymmetric) {
  const auto c = pearson_corr(random_matrix(30, 6, 2));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      EXPECT_LE(std::abs(c.matrix(i, j)), 1.0);
      EXPECT_EQ(c.matrix(i, j), c.matrix(j, i));
    }
}

TEST(Vif, IndependentColumnsNearOne) {
  const auto v = vif_scores(random_matrix(10000, 2, 3));
  EXPECT_NEAR(v.scores[0], 1.0, 0.05);
  EXPECT_NEAR(v.scores[1], 1.0, 0.05);
}

TEST(Vif, DuplicatedColumnsHitCap) {
  auto x = random_matrix(100, 3, 4);
  for (std::size_t r = 0; r < 100; ++r) x(r, 1) = x(r, 0);
  const auto v = vif_scores(x);
  EXPECT_EQ(v.scores[0], kVifCap);
  EXPECT_EQ(v.scores[1], kVifCap);
  EXPECT_LT(v.scores[2], 2.0);
}

TEST(Vif, ConstantColumnFlagged) {
  auto x = random_matrix(100, 3, 5);
  for (std::size_t r = 0; r < 100; ++r) x(r, 2) = 1.5;
  const auto v = vif_scores(x);
  EXPECT_EQ(v.scores[2], kVifCap);
  EXPECT_TRUE(v.degenerate[2]);
  EXPECT_FALSE(v.degenerate[0]);
}

TEST(Vif, CollinearColumnMatchesNormalEquations) {
  std::mt19937_64 gen(6);
  std::normal_distribution<double> d;
  const std::size_t n = 2000;
  FeatureMatrix x(n, 3);
  for (std::size_t r = 0; r < n; ++r) {
    x(r, 0) = d(gen);
    x(r, 1) = 0.9 * x(r, 0) + 0.1 * d(gen);
    x(r, 2) = d(gen);
  }
  const auto v = vif_scores(x);
  EXPECT_GT(v.scores[1], 5.0);
  EXPECT_GT(v.scores[1], 50.0);  // analytic value near 81
  std::vector<std::vector<double>> cols(3);
  for (std::size_t c = 0; c < 3; ++c) cols[c] = x.column(c);
  for (std::size_t j = 0; j < 3; ++j)
    EXPECT_NEAR(v.scores[j] / oracle::vif_normal_equations(cols, j), 1.0, 1e-9);
}

TEST(Vif, OrthogonalDesignGivesOne) {
  // Columns of a 2-level full factorial with zero means are mutually orthogonal.
  FeatureMatrix x(8, 3);
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 3; ++c) x(r, c) = (r >> c) & 1 ? 1.0 : -1.0;
  const auto v = vif_scores(x);
  for (double s : v.scores) EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(Undersample, TenNinety) {
  const auto ds = imbalanced(10, 90);
  std::vector<std::size_t> kept;
  const auto out = undersample(ds, 42, &kept);
  EXPECT_EQ(out.row_count(), 20u);
  EXPECT_EQ(out.count_label(1), 10u);
  EXPECT_EQ(out.count_label(0), 10u);
  for (std::size_t i = 0; i < 10; ++i) EXPECT_NE(std::find(kept.begin(), kept.end(), i), kept.end());
  std::set<std::size_t> unique(kept.begin(), kept.end());
  EXPECT_EQ(unique.size(), kept.size());
  for (std::size_t r = 0; r < out.row_count(); ++r)
    EXPECT_EQ(out.column("id").numeric[r], static_cast<double>(kept[r]));
}

TEST(Undersample, BalancedInputIsPermutation) {
  const auto ds = imbalanced(15, 15);
  const auto out = undersample(ds, 3);
  auto ids = out.column("id").numeric;
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(ids, ds.column("id").numeric);
}

TEST(Undersample, DeterministicAndSeedDependent) {
  const auto ds = imbalanced(20, 200);
  EXPECT_EQ(undersample(ds, 1), undersample(ds, 1));
  EXPECT_NE(undersample(ds, 1), undersample(ds, 2));
}

TEST(Undersample, SingleClassIsError) {
  EXPECT_THROW(undersample(imbalanced(0, 10), 1), qembed::BalanceError);
}

TEST(Split, FloorConventionOnBalancedRows) {
  const auto ds = imbalanced(1869, 1869);
  const auto s = train_test_split(ds, {0.8, 7, true});
  EXPECT_EQ(s.train.row_count(), 2990u);
  EXPECT_EQ(s.test.row_count(), 748u);
  EXPECT_EQ(s.train.count_label(1), 1495u);
  EXPECT_EQ(s.train.count_label(0), 1495u);
}

TEST(Split, DisjointExhaustiveDeterministic) {
  const auto ds = imbalanced(37, 81);
  for (bool strat : {true, false}) {
    const auto a = train_test_split(ds, {0.7, 5, strat});
    const auto b = train_test_split(ds, {0.7, 5, strat});
    EXPECT_EQ(a.train_rows, b.train_rows);
    std::vector<std::size_t> all = a.train_rows;
    all.insert(all.end(), a.test_rows.begin(), a.test_rows.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expect(ds.row_count());
    std::iota(expect.begin(), expect.end(), 0);
    EXPECT_EQ(all, expect);
    EXPECT_TRUE(std::is_sorted(a.train_rows.begin(), a.train_rows.end()));
  }
}

TEST(Split, StratifiedKeepsClassRatio) {
  const auto ds = imbalanced(50, 50);
  const auto s = train_test_split(ds, {0.8, 9, true});
  const auto ones = static_cast<long>(s.train.count_label(1));
  const auto zeros = static_cast<long>(s.train.count_label(0));
  EXPECT_LE(std::abs(ones - zeros), 1);
}

TEST(Split, Errors) {
  EXPECT_THROW(train_test_split(imbalanced(1, 10), {0.8, 1, true}), qembed::StratificationError);
  EXPECT_THROW(SplitSpec({1.0, 1, true}).validate(), qembed::ConfigError);
  EXPECT_THROW(SplitSpec({0.0, 1, true}).validate(), qembed::ConfigError);
}

TEST(Scalers, StandardUsesTrainStatistics) {
  FeatureMatrix train(4, 2, {1, 5, 2, 5, 3, 5, 4, 5}, {});
  StandardScaler s;
  s.fit(train);
  EXPECT_DOUBLE_EQ(s.mean()[0], 2.5);
  EXPECT_DOUBLE_EQ(s.scale()[0], std::sqrt(1.25));
  EXPECT_DOUBLE_EQ(s.scale()[1], 1.0);
  const auto t = s.transform(FeatureMatrix(1, 2, {2.5, 6}, {}));
  EXPECT_DOUBLE_EQ(t(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(t(0, 1), 1.0);
}

TEST(Scalers, MinMaxClipsOutOfRange) {
  FeatureMatrix train(2, 1, {-1, 3}, {});
  MinMaxScaler s;
  s.fit(train);
  const auto t = s.transform(FeatureMatrix(3, 1, {0, 5, -4}, {}));
  EXPECT_DOUBLE_EQ(t(0, 0), 0.25);
  EXPECT_DOUBLE_EQ(t(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(t(2, 0), 0.0);
  MinMaxScaler raw(false);
  raw.fit(train);
  EXPECT_DOUBLE_EQ(raw.transform(FeatureMatrix(1, 1, {5}, {}))(0, 0), 1.5);
}

TEST(Pca, LineDataHasOneComponent) {
  FeatureMatrix x(20, 2);
  for (std::size_t r = 0; r < 20; ++r) x(r, 0) = x(r, 1) = static_cast<double>(r) * 0.3 - 2.0;
  const auto m = pca_fit(x, 2);
  EXPECT_NEAR(m.explained_variance_ratio[0], 1.0, 1e-12);
  EXPECT_NEAR(m.explained_variance_ratio[1], 0.0, 1e-12);
}

TEST(Pca, MatchesJacobiOracle) {
  const auto x = random_matrix(50, 8, 10);
  const auto m = pca_fit(x, 8);
  // Sample covariance by hand.
  std::vector<double> mean(8, 0.0);
  for (std::size_t r = 0; r < 50; ++r)
    for (std::size_t c = 0; c < 8; ++c) mean[c] += x(r, c) / 50.0;
  std::vector<std::vector<double>> cov(8, std::vector<double>(8, 0.0));
  for (std::size_t r = 0; r < 50; ++r)
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) cov[i][j] += (x(r, i) - mean[i]) * (x(r, j) - mean[j]) / 49.0;
  const auto ref = oracle::jacobi_eigen(cov);
  const double total = std::accumulate(ref.values.begin(), ref.values.end(), 0.0);
  for (std::size_t k = 0; k < 8; ++k) {
    EXPECT_NEAR(m.explained_variance[k], ref.values[k], 1e-10);
    EXPECT_NEAR(m.explained_variance_ratio[k], ref.values[k] / total, 1e-8);
    double dot = 0.0;
    for (std::size_t i = 0; i < 8; ++i) dot += m.components(k, i) * ref.vectors[k][i];
    EXPECT_NEAR(std::abs(dot), 1.0, 1e-8);
  }
}

TEST(Pca, InvariantsAndReconstruction) {
  const auto x = random_matrix(40, 6, 11);
  const auto m = pca_fit(x, 6);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      double dot = 0.0;
      for (std::size_t i = 0; i < 6; ++i) dot += m.components(a, i) * m.components(b, i);
      EXPECT_NEAR(dot, a == b ? 1.0 : 0.0, 1e-9);
    }
  EXPECT_TRUE(std::is_sorted(m.explained_variance_ratio.rbegin(), m.explained_variance_ratio.rend()));
  const double sum = std::accumulate(m.explained_variance_ratio.begin(), m.explained_variance_ratio.end(), 0.0);
  EXPECT_NEAR(sum, 1.0, 1e-9);
  const auto scores = pca_transform(m, x);
  for (std::size_t c = 0; c < scores.cols(); ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < scores.rows(); ++r) mean += scores(r, c);
    EXPECT_NEAR(mean / scores.rows(), 0.0, 1e-9);
  }
  const auto back = pca_inverse_transform(m, scores);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) EXPECT_NEAR(back(r, c), x(r, c), 1e-8);
  EXPECT_EQ(scores.names().front(), "pc1");
}

TEST(Pca, TruncateKeepsLeadingComponents) {
  const auto x = random_matrix(30, 5, 12);
  const auto full = pca_fit(x, 5);
  const auto two = pca_truncate(full, 2);
  EXPECT_EQ(two.n_components(), 2u);
  EXPECT_EQ(two.full_spectrum_ratio, full.full_spectrum_ratio);
  const auto direct = pca_fit(x, 2);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(two.components(1, i), direct.components(1, i), 1e-12);
  EXPECT_THROW(pca_fit(x, 6), qembed::ShapeError);
}

TEST(Pca, RankDeficientTailIsZero) {
  auto x = random_matrix(30, 4, 13);
  for (std::size_t r = 0; r < 30; ++r) x(r, 3) = x(r, 0) + x(r, 1);
  const auto m = pca_fit(x, 4);
  EXPECT_NEAR(m.explained_variance_ratio[3], 0.0, 1e-12);
}

TEST(Elbow, HandEvaluatedExample) {
  EXPECT_EQ(elbow_index({0.9, 0.05, 0.03, 0.02}), 1u);
}

TEST(Elbow, LinearCurveTiesToZero) {
  EXPECT_EQ(elbow_index({0.25, 0.25, 0.25, 0.25}), 0u);
}

TEST(Elbow, TooShortIsError) {
  EXPECT_THROW(elbow_index({0.6, 0.4}), qembed::DegenerateCurveError);
}

TEST(Elbow, CumulativeIsMonotone) {
  const auto m = pca_fit(random_matrix(60, 10, 14), 10);
  const auto cum = cumulative(m.full_spectrum_ratio);
  EXPECT_TRUE(std::is_sorted(cum.begin(), cum.end()));
  EXPECT_NEAR(cum.back(), 1.0, 1e-9);
}

}  // namespace
