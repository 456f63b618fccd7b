#pragma once

#include <map>
#include <string>
#include <vector>

#include "qembed/tabular/dataset.hpp"

namespace qembed::tabular {

// Columns removed before encoding: TotalCharges (correlated with tenure),
// PhoneService and MonthlyCharges (multicollinear).
std::vector<std::string> default_drop_profile();

// Telco categorical columns (SeniorCitizen is treated as categorical).
std::vector<std::string> telco_categorical_columns();

struct OneHotReport {
  // Category levels per encoded column, in indicator order.
  std::map<std::string, std::vector<std::string>> levels;
  // Values seen at transform time but absent at fit time, per column.
  std::map<std::string, std::size_t> unseen;
};

// Learns sorted category levels on one dataset and expands categorical
// columns into indicator columns named "<column>_<level>". Unseen levels at
// transform time map to an all-zero indicator group.
class OneHotEncoder {
 public:
  void fit(const LabeledDataset& ds, const std::vector<std::string>& categorical_cols);
  LabeledDataset transform(const LabeledDataset& ds, OneHotReport* report = nullptr) const;

  const std::map<std::string, std::vector<std::string>>& levels() const noexcept { return levels_; }

 private:
  std::vector<std::string> columns_;
  std::map<std::string, std::vector<std::string>> levels_;
};

LabeledDataset one_hot(const LabeledDataset& ds, const std::vector<std::string>& categorical_cols,
                       OneHotReport* report = nullptr);

}  // namespace qembed::tabular
