#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "qembed/tabular/dataset.hpp"

namespace qembed::tabular {

// Header of the public Telco customer churn file, in file order.
inline constexpr std::array<std::string_view, 21> kTelcoColumns = {
    "customerID",       "gender",          "SeniorCitizen",    "Partner",        "Dependents",
    "tenure",           "PhoneService",    "MultipleLines",    "InternetService", "OnlineSecurity",
    "OnlineBackup",     "DeviceProtection", "TechSupport",     "StreamingTV",    "StreamingMovies",
    "Contract",         "PaperlessBilling", "PaymentMethod",   "MonthlyCharges", "TotalCharges",
    "Churn"};

inline constexpr std::array<std::string_view, 3> kTelcoNumericColumns = {"tenure", "MonthlyCharges",
                                                                         "TotalCharges"};

enum class BlankPolicy { DropRows, MeanImpute };

struct LoadOptions {
  BlankPolicy blank_total_charges = BlankPolicy::DropRows;
};

struct LoadReport {
  std::size_t rows_read = 0;      // data rows in the file
  std::size_t rows_dropped = 0;   // blank TotalCharges rows removed
  std::size_t cells_imputed = 0;  // blank TotalCharges cells filled with the mean
};

// Every Telco column except customerID becomes a dataset column (text columns,
// SeniorCitizen included, are categorical); Churn becomes the labels.
LabeledDataset load_churn_csv(const std::filesystem::path& path, const LoadOptions& options = {},
                              LoadReport* report = nullptr);
LabeledDataset read_churn_csv(std::istream& in, const LoadOptions& options = {},
                              LoadReport* report = nullptr);

// Splits one CSV record; handles double-quoted fields.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace qembed::tabular
