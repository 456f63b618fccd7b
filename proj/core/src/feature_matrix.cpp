#include "qembed/feature_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "qembed/error.hpp"

namespace qembed {

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols) {}

FeatureMatrix::FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                             std::vector<std::string> names)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) throw ShapeError("FeatureMatrix: value count != rows x cols");
  set_names(std::move(names));
}

FeatureMatrix FeatureMatrix::from_rows(const std::vector<std::vector<double>>& rows,
                                       std::vector<std::string> names) {
  const std::size_t cols = rows.empty() ? names.size() : rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw ShapeError("FeatureMatrix::from_rows: ragged rows");
    values.insert(values.end(), r.begin(), r.end());
  }
  return FeatureMatrix(rows.size(), cols, std::move(values), std::move(names));
}

std::vector<double> FeatureMatrix::column(std::size_t c) const {
  std::vector<double> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void FeatureMatrix::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != cols_)
    throw ShapeError("FeatureMatrix: name count does not match column count");
  names_ = std::move(names);
}

FeatureMatrix FeatureMatrix::select_rows(std::span<const std::size_t> indices) const {
  FeatureMatrix out(indices.size(), cols_);
  out.names_ = names_;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw ShapeError("select_rows: index out of range");
    std::copy_n(values_.begin() + static_cast<std::ptrdiff_t>(indices[i] * cols_), cols_,
                out.values_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
  return out;
}

FeatureMatrix FeatureMatrix::select_cols(std::span<const std::size_t> indices) const {
  FeatureMatrix out(rows_, indices.size());
  if (!names_.empty()) {
    out.names_.reserve(indices.size());
    for (auto c : indices) out.names_.push_back(names_.at(c));
  }
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < indices.size(); ++j) out(r, j) = (*this)(r, indices[j]);
  return out;
}

FeatureMatrix FeatureMatrix::first_cols(std::size_t count) const {
  if (count > cols_) throw ShapeError("first_cols: count exceeds column count");
  std::vector<std::size_t> idx(count);
  for (std::size_t i = 0; i < count; ++i) idx[i] = i;
  return select_cols(idx);
}

bool FeatureMatrix::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

}  // namespace qembed
