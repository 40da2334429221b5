#pragma once

#include <initializer_list>
#include <vector>

#include "vfm/cone.hpp"
#include "vfm/numeric.hpp"

namespace vfm::testing {

inline const ExactScalar I = ExactScalar::imaginary_unit();

inline ExactVector e(int n, int j, ExactScalar c = 1) {
  ExactVector v(static_cast<std::size_t>(n), ExactScalar(0));
  v[static_cast<std::size_t>(j)] = c;
  return v;
}

inline LatticeData torus_lattice(int n) {
  std::vector<ExactVector> g;
  for (int j = 0; j < n; ++j) g.push_back(e(n, j, I));
  return LatticeData(n, g);
}

inline ExactMatrix exact(std::initializer_list<std::initializer_list<ExactScalar>> rows) {
  ExactMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

/// Semi-torus lattice with prescribed k, l (k + l = n), in scrambled
/// coordinates: A applied to the adapted generators, plus one redundant sum.
inline LatticeData scrambled_semi_torus(Rng& rng, int n, int k) {
  ExactMatrix A;
  do {
    A = ExactMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < A.rows(); ++r)
      for (std::size_t c = 0; c < A.cols(); ++c) A(r, c) = rng.gaussian_rational(2, 1);
  } while (determinant(A).is_zero());
  std::vector<ExactVector> adapted;
  for (int j = 0; j < n; ++j) {
    adapted.push_back(e(n, j));
    if (j < k) adapted.push_back(e(n, j, I));
  }
  std::vector<ExactVector> g;
  for (const auto& v : adapted) {
    ExactVector w(static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < w.size(); ++r)
      for (std::size_t c = 0; c < w.size(); ++c) w[r] += A(r, c) * v[c];
    g.push_back(w);
  }
  ExactVector sum(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < sum.size(); ++r) sum[r] = g[0][r] + g.back()[r];
  g.push_back(sum);
  return LatticeData(n, g);
}

/// Independent floating-point count of hermitian matrices satisfying every
/// Stokes condition.
inline std::size_t stokes_dim_oracle(const LatticeData& lat) {
  const int n = lat.n;
  std::vector<ComplexMatrix> basis;
  for (int i = 0; i < n; ++i) {
    ComplexMatrix m = ComplexMatrix::Zero(n, n);
    m(i, i) = 1;
    basis.push_back(m);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      ComplexMatrix re = ComplexMatrix::Zero(n, n), im = ComplexMatrix::Zero(n, n);
      re(i, j) = re(j, i) = 1;
      im(i, j) = Complex(0, 1);
      im(j, i) = Complex(0, -1);
      basis.push_back(re);
      basis.push_back(im);
    }
  const auto& g = lat.generators;
  std::vector<Eigen::VectorXcd> gv;
  for (const auto& v : g) {
    Eigen::VectorXcd x(n);
    for (int r = 0; r < n; ++r) x(r) = v[static_cast<std::size_t>(r)].to_complex();
    gv.push_back(x);
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t a = 0; a < gv.size(); ++a)
    for (std::size_t b = a + 1; b < gv.size(); ++b) {
      std::vector<double> row;
      for (const auto& E : basis) row.push_back((gv[a].transpose() * E * gv[b].conjugate())(0).imag());
      rows.push_back(row);
    }
  if (rows.empty()) return basis.size();
  Eigen::MatrixXd M(rows.size(), basis.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) M(r, c) = rows[r][c];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
  lu.setThreshold(1e-9);
  return basis.size() - static_cast<std::size_t>(lu.rank());
}

/// Random hermitian omega in adapted coordinates satisfying the block
/// precondition for (k, l, m).
inline ExactMatrix random_precondition_form(Rng& rng, int k, int l, int m) {
  const int n = k + l + m;
  ExactMatrix w(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  auto block = [&](int i) { return i < k ? 0 : (i < k + l ? 1 : 2); };
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const int bi = block(i), bj = block(j);
      if (bi == 0 && bj != 2) continue;
      ExactScalar v = rng.gaussian_rational(5, 3);
      if (i == j || (bi == 1 && bj == 1)) v = ExactScalar(v.re());
      w(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
      w(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v.conj();
    }
  return w;
}

/// d^2 phi / dz_a d conj(z_b) by central differences, phi evaluated in doubles.
inline ComplexMatrix ddbar_oracle(const QuadPotential& phi) {
  const int n = phi.n;
  const double h = 1e-3;
  auto f = [&](const std::vector<double>& v) {
    double s = 0;
    for (int a = 0; a < 2 * n; ++a)
      for (int b = 0; b < 2 * n; ++b)
        s += v[static_cast<std::size_t>(a)] * phi.Q(static_cast<std::size_t>(a), static_cast<std::size_t>(b)).re().get_d() *
             v[static_cast<std::size_t>(b)];
    return s;
  };
  auto D = [&](int a, int b) {
    std::vector<double> v(static_cast<std::size_t>(2 * n), 0.3);
    auto at = [&](double sa, double sb) {
      auto w = v;
      w[static_cast<std::size_t>(a)] += sa;
      w[static_cast<std::size_t>(b)] += sb;
      return f(w);
    };
    return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
  };
  ComplexMatrix H(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) H(a, b) = Complex(D(a, b) + D(n + a, n + b), D(a, n + b) - D(n + a, b)) / 4.0;
  return H;
}

inline ComplexMatrix to_complex(const ExactMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  return out;
}

}  // namespace vfm::testing
