// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef GBUSCA_MATRIX_HPP
#define GBUSCA_MATRIX_HPP

#include <cstddef>
#include <sstream>
#include <vector>

#include "gbusca/errors.hpp"

namespace gbusca {

// Dense row-major matrix of doubles. Small and dependency-free; the
// matrices here are K x K causal graphs, not linear-algebra workloads.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double& at(std::size_t i, std::size_t j) {
    check_index(i, j);
    return data_[i * cols_ + j];
  }
  double at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return data_[i * cols_ + j];
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  double row_sum(std::size_t i) const {
    double s = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j);
    return s;
  }

  Matrix multiply(const Matrix& other) const {
    if (cols_ != other.rows_) {
      throw ContractError("matrix multiply: inner dimensions differ");
    }
    Matrix out(rows_, other.cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const double v = (*this)(i, k);
        if (v == 0.0) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          out(i, j) += v * other(k, j);
        }
      }
    }
    return out;
  }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  void check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) {
      std::ostringstream os;
      os << "matrix index (" << i << ", " << j << ") out of range for " << rows_ << "x" << cols_;
      throw ContractError(os.str());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace gbusca

#endif  // GBUSCA_MATRIX_HPP
