#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vfm/errors.hpp"
#include "vfm/scalar.hpp"

namespace vfm {

/// Small dense row-major matrix for exact element types (ExactScalar, Poly,
/// RatFunc). Floating-point work goes through Eigen instead.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  /// Matrix with row `skip_row` and column `skip_col` removed.
  Matrix minor(std::size_t skip_row, std::size_t skip_col) const {
    Matrix out(rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, rr = 0; r < rows_; ++r) {
      if (r == skip_row) continue;
      for (std::size_t c = 0, cc = 0; c < cols_; ++c) {
        if (c == skip_col) continue;
        out(rr, cc++) = (*this)(r, c);
      }
      ++rr;
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product: shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      T sum = a(r, 0) * b(0, c);
      for (std::size_t k = 1; k < a.cols(); ++k) sum += a(r, k) * b(k, c);
      out(r, c) = std::move(sum);
    }
  }
  return out;
}

using ExactMatrix = Matrix<ExactScalar>;
using ExactVector = std::vector<ExactScalar>;

ExactMatrix identity_matrix(std::size_t n);

/// Result of exact Gaussian elimination on A x = b.
struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  ExactVector particular;             // valid when consistent
  std::vector<ExactVector> nullspace; // basis of {x : A x = 0}
};

LinearSolution solve_linear(const ExactMatrix& a, const ExactVector& b);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(ExactMatrix& m);

std::size_t rank(ExactMatrix m);

/// Basis of the null space of `a`.
std::vector<ExactVector> nullspace(const ExactMatrix& a);

ExactScalar determinant(ExactMatrix m);

/// Exact inverse; throws SingularMatrix.
ExactMatrix inverse(const ExactMatrix& m);

ExactMatrix conjugate_transpose(const ExactMatrix& m);

}  // namespace vfm
