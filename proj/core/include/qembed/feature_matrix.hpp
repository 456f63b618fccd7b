#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace qembed {

// Row-major real matrix with optional column names.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(std::size_t rows, std::size_t cols);
  FeatureMatrix(std::size_t rows, std::size_t cols, std::vector<double> values,
                std::vector<std::string> names = {});

  static FeatureMatrix from_rows(const std::vector<std::vector<double>>& rows,
                                 std::vector<std::string> names = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const { return {values_.data() + r * cols_, cols_}; }
  std::span<double> row(std::size_t r) { return {values_.data() + r * cols_, cols_}; }
  std::vector<double> column(std::size_t c) const;

  std::span<const double> values() const noexcept { return values_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  void set_names(std::vector<std::string> names);

  // Rows in the given order (indices may repeat).
  FeatureMatrix select_rows(std::span<const std::size_t> indices) const;
  FeatureMatrix select_cols(std::span<const std::size_t> indices) const;
  FeatureMatrix first_cols(std::size_t count) const;

  bool all_finite() const;

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
  std::vector<std::string> names_;
};

using Labels = std::vector<int>;

}  // namespace qembed
