#include "qembed/tabular/preprocess.hpp"

#include <algorithm>
#include <set>

#include "qembed/error.hpp"

namespace qembed::tabular {

std::vector<std::string> default_drop_profile() { return {"TotalCharges", "PhoneService", "MonthlyCharges"}; }

std::vector<std::string> telco_categorical_columns() {
  return {"gender",         "SeniorCitizen",  "Partner",          "Dependents",  "PhoneService",
          "MultipleLines",  "InternetService", "OnlineSecurity",  "OnlineBackup", "DeviceProtection",
          "TechSupport",    "StreamingTV",    "StreamingMovies",  "Contract",    "PaperlessBilling",
          "PaymentMethod"};
}

void OneHotEncoder::fit(const LabeledDataset& ds, const std::vector<std::string>& categorical_cols) {
  columns_.clear();
  levels_.clear();
  for (const auto& name : categorical_cols) {
    const auto& col = ds.column(name);
    std::set<std::string> seen;
    if (col.categorical()) {
      seen.insert(col.text.begin(), col.text.end());
    } else {
      // Numeric columns listed as categorical are keyed by their printed value.
      for (double v : col.numeric) seen.insert(std::to_string(v));
    }
    columns_.push_back(name);
    levels_[name] = std::vector<std::string>(seen.begin(), seen.end());
  }
}

LabeledDataset OneHotEncoder::transform(const LabeledDataset& ds, OneHotReport* report) const {
  OneHotReport local;
  local.levels = levels_;
  std::vector<Column> out;
  for (const auto& col : ds.columns()) {
    const auto it = levels_.find(col.name);
    if (it == levels_.end()) {
      out.push_back(col);
      continue;
    }
    const auto& levels = it->second;
    std::vector<std::vector<double>> indicators(levels.size(), std::vector<double>(ds.row_count(), 0.0));
    std::size_t unseen = 0;
    for (std::size_t r = 0; r < ds.row_count(); ++r) {
      const std::string value = col.categorical() ? col.text[r] : std::to_string(col.numeric[r]);
      const auto pos = std::lower_bound(levels.begin(), levels.end(), value);
      if (pos == levels.end() || *pos != value) {
        ++unseen;
        continue;
      }
      indicators[static_cast<std::size_t>(pos - levels.begin())][r] = 1.0;
    }
    if (unseen > 0) local.unseen[col.name] = unseen;
    for (std::size_t k = 0; k < levels.size(); ++k)
      out.push_back(Column::make_numeric(col.name + "_" + levels[k], std::move(indicators[k])));
  }
  for (const auto& name : columns_)
    if (!ds.has_column(name)) throw SchemaError("one_hot: no column named '" + name + "'");
  if (report) *report = std::move(local);
  return LabeledDataset(std::move(out), ds.labels());
}

LabeledDataset one_hot(const LabeledDataset& ds, const std::vector<std::string>& categorical_cols,
                       OneHotReport* report) {
  OneHotEncoder enc;
  enc.fit(ds, categorical_cols);
  return enc.transform(ds, report);
}

}  // namespace qembed::tabular
