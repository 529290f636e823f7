#pragma once

#include <cstddef>
#include <vector>

namespace svmkit {

// Dense row-major matrix; just enough for Gram matrices and the dual solver.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }

  double max_abs() const;
  // Largest |A(i,j) - A(j,i)| over all pairs; 0 for non-square is not defined,
  // callers check squareness first.
  double asymmetry() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace svmkit
