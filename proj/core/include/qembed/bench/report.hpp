#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qembed/bench/grid.hpp"

namespace qembed::bench {

// Column order of results.csv.
inline constexpr const char* kResultsHeader =
    "encoding,model,pca_dim,seed,accuracy,precision,sensitivity,f1,roc_auc,kappa,encode_ms,train_ms,"
    "predict_ms,status";

std::string results_csv(const std::vector<ExperimentRecord>& records);
std::string summary_csv(const std::vector<ExperimentRecord>& records);
// Per model block, one row per PCA dimension and one accuracy column
// (mean +- std over seeds) per encoding.
std::string grouped_table(const GridResult& result);
std::string variance_curve_csv(const std::vector<double>& ratios);

// Writes results.csv, summary.csv, report.txt and explained_variance.csv.
// Returns the written paths. Throws IoError when the directory is unwritable.
std::vector<std::filesystem::path> write_report(const GridResult& result, const std::filesystem::path& dir);

}  // namespace qembed::bench
