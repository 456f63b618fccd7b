#include "qembed/tabular/dataset.hpp"

#include <algorithm>

#include "qembed/error.hpp"

namespace qembed::tabular {

Column Column::make_numeric(std::string name, std::vector<double> values) {
  Column c;
  c.name = std::move(name);
  c.kind = Kind::Numeric;
  c.numeric = std::move(values);
  return c;
}

Column Column::make_categorical(std::string name, std::vector<std::string> values) {
  Column c;
  c.name = std::move(name);
  c.kind = Kind::Categorical;
  c.text = std::move(values);
  return c;
}

LabeledDataset::LabeledDataset(std::vector<Column> columns, Labels labels)
    : columns_(std::move(columns)), labels_(std::move(labels)) {
  for (const auto& c : columns_) {
    if (c.size() != labels_.size())
      throw ShapeError("LabeledDataset: column '" + c.name + "' length differs from label count");
  }
  for (int y : labels_)
    if (y != 0 && y != 1) throw DataError("LabeledDataset: labels must be 0 or 1");
}

LabeledDataset::LabeledDataset(const FeatureMatrix& x, Labels labels) {
  if (x.rows() != labels.size()) throw ShapeError("LabeledDataset: rows differ from label count");
  for (std::size_t c = 0; c < x.cols(); ++c) {
    std::string name = c < x.names().size() ? x.names()[c] : "x" + std::to_string(c);
    columns_.push_back(Column::make_numeric(std::move(name), x.column(c)));
  }
  *this = LabeledDataset(std::move(columns_), std::move(labels));
}

bool LabeledDataset::has_column(const std::string& name) const {
  return std::any_of(columns_.begin(), columns_.end(), [&](const Column& c) { return c.name == name; });
}

const Column& LabeledDataset::column(const std::string& name) const {
  for (const auto& c : columns_)
    if (c.name == name) return c;
  throw SchemaError("no column named '" + name + "'");
}

std::vector<std::string> LabeledDataset::column_names() const {
  std::vector<std::string> names;
  names.reserve(columns_.size());
  for (const auto& c : columns_) names.push_back(c.name);
  return names;
}

std::size_t LabeledDataset::count_label(int label) const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), label));
}

LabeledDataset LabeledDataset::select_rows(std::span<const std::size_t> indices) const {
  std::vector<Column> cols;
  cols.reserve(columns_.size());
  for (const auto& c : columns_) {
    Column out;
    out.name = c.name;
    out.kind = c.kind;
    if (c.categorical()) {
      out.text.reserve(indices.size());
      for (auto i : indices) out.text.push_back(c.text.at(i));
    } else {
      out.numeric.reserve(indices.size());
      for (auto i : indices) out.numeric.push_back(c.numeric.at(i));
    }
    cols.push_back(std::move(out));
  }
  Labels labels;
  labels.reserve(indices.size());
  for (auto i : indices) labels.push_back(labels_.at(i));
  return LabeledDataset(std::move(cols), std::move(labels));
}

LabeledDataset LabeledDataset::drop_columns(const std::vector<std::string>& names) const {
  for (const auto& n : names)
    if (!has_column(n)) throw SchemaError("drop_columns: no column named '" + n + "'");
  std::vector<Column> kept;
  for (const auto& c : columns_)
    if (std::find(names.begin(), names.end(), c.name) == names.end()) kept.push_back(c);
  return LabeledDataset(std::move(kept), labels_);
}

FeatureMatrix LabeledDataset::features() const {
  FeatureMatrix x(row_count(), columns_.size());
  std::vector<std::string> names;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].categorical())
      throw DataError("features: column '" + columns_[c].name + "' is categorical; one-hot encode it first");
    for (std::size_t r = 0; r < row_count(); ++r) x(r, c) = columns_[c].numeric[r];
    names.push_back(columns_[c].name);
  }
  x.set_names(std::move(names));
  return x;
}

}  // namespace qembed::tabular
