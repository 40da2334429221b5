#include "vfm/matrix.hpp"

namespace vfm {

ExactMatrix identity_matrix(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = ExactScalar(1);
  return m;
}

std::vector<std::size_t> row_reduce(ExactMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    const ExactScalar inv = ExactScalar(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const ExactScalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(ExactMatrix m) { return row_reduce(m).size(); }

std::vector<ExactVector> nullspace(const ExactMatrix& a) {
  ExactMatrix m = a;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(a.cols());
    v[free] = ExactScalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear(const ExactMatrix& a, const ExactVector& b) {
  if (b.size() != a.rows()) throw InvalidArgument("solve_linear: rhs length mismatch");
  ExactMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const auto pivots = row_reduce(aug);
  LinearSolution sol;
  sol.nullspace = nullspace(a);
  sol.rank = a.cols() - sol.nullspace.size();
  if (!pivots.empty() && pivots.back() == a.cols()) {
    sol.consistent = false;
    return sol;
  }
  sol.consistent = true;
  sol.particular.assign(a.cols(), ExactScalar());
  for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, a.cols());
  return sol;
}

ExactScalar determinant(ExactMatrix m) {
  if (!m.square()) throw InvalidArgument("determinant of non-square matrix");
  ExactScalar det(1);
  for (std::size_t col = 0; col < m.cols(); ++col) {
    std::size_t pivot = col;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) return ExactScalar();
    if (pivot != col) {
      m.swap_rows(pivot, col);
      det = -det;
    }
    det *= m(col, col);
    const ExactScalar inv = ExactScalar(1) / m(col, col);
    for (std::size_t r = col + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const ExactScalar f = m(r, col) * inv;
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.square()) throw InvalidArgument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = ExactScalar(1);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  ExactMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  return out;
}

ExactMatrix conjugate_transpose(const ExactMatrix& m) {
  ExactMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c).conj();
  return out;
}

}  // namespace vfm
