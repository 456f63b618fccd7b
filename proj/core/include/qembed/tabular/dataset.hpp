#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qembed/feature_matrix.hpp"

namespace qembed::tabular {

struct Column {
  enum class Kind { Numeric, Categorical };

  std::string name;
  Kind kind = Kind::Numeric;
  std::vector<double> numeric;
  std::vector<std::string> text;

  static Column make_numeric(std::string name, std::vector<double> values);
  static Column make_categorical(std::string name, std::vector<std::string> values);

  bool categorical() const noexcept { return kind == Kind::Categorical; }
  std::size_t size() const noexcept { return categorical() ? text.size() : numeric.size(); }

  friend bool operator==(const Column&, const Column&) = default;
};

// Named columns plus binary labels (1 = positive / churned).
class LabeledDataset {
 public:
  LabeledDataset() = default;
  LabeledDataset(std::vector<Column> columns, Labels labels);
  // All-numeric dataset from a matrix; names taken from the matrix.
  LabeledDataset(const FeatureMatrix& x, Labels labels);

  std::size_t row_count() const noexcept { return labels_.size(); }
  std::size_t column_count() const noexcept { return columns_.size(); }
  const std::vector<Column>& columns() const noexcept { return columns_; }
  const Labels& labels() const noexcept { return labels_; }

  bool has_column(const std::string& name) const;
  const Column& column(const std::string& name) const;
  std::vector<std::string> column_names() const;

  std::size_t count_label(int label) const;

  LabeledDataset select_rows(std::span<const std::size_t> indices) const;
  LabeledDataset drop_columns(const std::vector<std::string>& names) const;

  // Numeric columns as a matrix; throws DataError if any column is categorical.
  FeatureMatrix features() const;

  friend bool operator==(const LabeledDataset&, const LabeledDataset&) = default;

 private:
  std::vector<Column> columns_;
  Labels labels_;
};

}  // namespace qembed::tabular
