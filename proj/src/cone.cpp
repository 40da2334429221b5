#include "vfm/cone.hpp"

#include <cmath>

#include "vfm/errors.hpp"
#include "vfm/poly.hpp"

namespace vfm {

namespace {

constexpr double kClassTol = 1e-12;

using RealVector = std::vector<mpq_class>;

/// (Re v, Im v) as a real vector of length 2n.
RealVector realify(const ExactVector& v) {
  const std::size_t n = v.size();
  RealVector out(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = v[j].re();
    out[n + j] = v[j].im();
  }
  return out;
}

ExactVector complexify(const RealVector& r) {
  const std::size_t n = r.size() / 2;
  ExactVector out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = ExactScalar(r[j], r[n + j]);
  return out;
}

/// Multiplication by i on R^2n.
RealVector times_i(const RealVector& r) {
  const std::size_t n = r.size() / 2;
  RealVector out(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = -r[n + j];
    out[n + j] = r[j];
  }
  return out;
}

ExactMatrix rows_to_matrix(const std::vector<RealVector>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = ExactScalar(rows[r][c]);
  return m;
}

RealVector real_part(const ExactVector& v) {
  RealVector out;
  for (const auto& c : v) out.push_back(c.re());
  return out;
}

/// Grows a spanning set, accepting vectors that increase its rank.
class RealSpan {
 public:
  explicit RealSpan(std::size_t dim) : dim_(dim) {}
  bool extends(const RealVector& v) const {
    auto rows = rows_;
    rows.push_back(v);
    return rank(rows_to_matrix(rows, dim_)) > rows_.size();
  }
  void add(const RealVector& v) { rows_.push_back(v); }
  std::size_t size() const { return rows_.size(); }

 private:
  std::size_t dim_;
  std::vector<RealVector> rows_;
};

ExactMatrix conj_entries(const ExactMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).conj();
  return out;
}

ComplexMatrix to_complex_matrix(const ExactMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  return out;
}

ExactMatrix to_exact_matrix(const ComplexMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = ExactScalar::from_complex(m(r, c));
  return out;
}

enum class Block { k, l, m };

Block block_of(const NormalForm& nf, std::size_t index) {
  const auto i = static_cast<int>(index);
  if (i < nf.k) return Block::k;
  if (i < nf.k + nf.l) return Block::l;
  return Block::m;
}

std::string entry_name(std::size_t r, std::size_t c) {
  return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

void require_square(const ExactMatrix& omega, int n) {
  if (omega.rows() != static_cast<std::size_t>(n) || omega.cols() != static_cast<std::size_t>(n))
    throw InvalidArgument("form has the wrong size for this normal form");
}

void require_hermitian(const ExactMatrix& omega) {
  if (!(omega == conjugate_transpose(omega))) throw NotHermitian("form is not hermitian");
}

bool same_normal_form(const NormalForm& a, const NormalForm& b) {
  return a.n == b.n && a.k == b.k && a.l == b.l && a.P == b.P;
}

}  // namespace

LatticeData::LatticeData(int n_in, std::vector<ExactVector> gens) : n(n_in), generators(std::move(gens)) {
  if (n <= 0) throw InvalidArgument("lattice dimension must be positive");
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(n)) throw InvalidArgument("lattice generator has the wrong length");
    bool zero = true;
    for (const auto& c : g) zero = zero && c.is_zero();
    if (zero) throw InvalidArgument("lattice generators must be nonzero");
  }
}

NormalForm normal_form(const LatticeData& lattice) {
  const auto n = static_cast<std::size_t>(lattice.n);
  NormalForm nf;
  nf.n = lattice.n;
  nf.generators = lattice.generators;

  // Basis of the real span, from the reduced row echelon form.
  std::vector<RealVector> basis;
  if (!lattice.generators.empty()) {
    std::vector<RealVector> rows;
    for (const auto& g : lattice.generators) rows.push_back(realify(g));
    ExactMatrix m = rows_to_matrix(rows, 2 * n);
    const auto pivots = row_reduce(m);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      RealVector v(2 * n);
      for (std::size_t c = 0; c < 2 * n; ++c) v[c] = m(r, c).re();
      basis.push_back(std::move(v));
    }
  }
  nf.real_rank = static_cast<int>(basis.size());

  // W = span ∩ i span: coefficients a with <nu, i sum a_j b_j> = 0 for every
  // normal vector nu of the span.
  std::vector<RealVector> w_basis;
  if (!basis.empty()) {
    std::vector<RealVector> normals;
    for (const auto& v : nullspace(rows_to_matrix(basis, 2 * n))) normals.push_back(real_part(v));
    if (normals.empty()) {
      w_basis = basis;
    } else {
      ExactMatrix cond(normals.size(), basis.size());
      for (std::size_t q = 0; q < normals.size(); ++q)
        for (std::size_t j = 0; j < basis.size(); ++j) {
          const RealVector ib = times_i(basis[j]);
          mpq_class dot = 0;
          for (std::size_t c = 0; c < 2 * n; ++c) dot += normals[q][c] * ib[c];
          cond(q, j) = ExactScalar(dot);
        }
      for (const auto& a : nullspace(cond)) {
        RealVector w(2 * n, mpq_class(0));
        for (std::size_t j = 0; j < basis.size(); ++j)
          for (std::size_t c = 0; c < 2 * n; ++c) w[c] += a[j].re() * basis[j][c];
        w_basis.push_back(std::move(w));
      }
    }
  }

  RealSpan span(2 * n);
  std::vector<ExactVector> columns;
  for (const auto& w : w_basis) {
    if (!span.extends(w)) continue;
    span.add(w);
    span.add(times_i(w));
    columns.push_back(complexify(w));
    ++nf.k;
  }
  for (const auto& b : basis) {
    if (!span.extends(b)) continue;
    span.add(b);
    columns.push_back(complexify(b));
    ++nf.l;
  }
  if (2 * nf.k + nf.l != nf.real_rank) throw InvalidArgument("internal: inconsistent lattice normal form");

  // Complete with standard vectors to a complex basis.
  for (std::size_t j = 0; j < n && columns.size() < n; ++j) {
    ExactVector e(n, ExactScalar(0));
    e[j] = ExactScalar(1);
    ExactMatrix trial(columns.size() + 1, n);
    for (std::size_t r = 0; r < columns.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) trial(r, c) = columns[r][c];
    for (std::size_t c = 0; c < n; ++c) trial(columns.size(), c) = e[c];
    if (rank(trial) == columns.size() + 1) columns.push_back(std::move(e));
  }
  nf.m = nf.n - nf.k - nf.l;

  nf.P = ExactMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) nf.P(r, c) = columns[c][r];
  nf.T = inverse(nf.P);
  return nf;
}

bool semi_torus_check(const LatticeData& lattice) { return normal_form(lattice).m == 0; }

ExactMatrix hermitian_from_parameters(int n_in, const std::vector<mpq_class>& params) {
  const auto n = static_cast<std::size_t>(n_in);
  if (params.size() != n * n) throw InvalidArgument("hermitian matrix needs n^2 real parameters");
  ExactMatrix out(n, n);
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) out(i, i) = ExactScalar(params[p++]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out(i, j) = ExactScalar(params[p], params[p + 1]);
      out(j, i) = out(i, j).conj();
      p += 2;
    }
  return out;
}

ExactScalar stokes_value(const ExactVector& a, const ExactMatrix& omega, const ExactVector& b) {
  ExactScalar sum;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) sum += a[r] * omega(r, c) * b[c].conj();
  return ExactScalar(sum.im());
}

double stokes_value(const ExactVector& a, const HermitianMatrix& omega, const ExactVector& b) {
  Complex sum = 0;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c)
      sum += a[r].to_complex() * omega(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) *
             std::conj(b[c].to_complex());
  return sum.imag();
}

StokesSystem stokes_constraints(const LatticeData& lattice) {
  const auto n = static_cast<std::size_t>(lattice.n);
  const std::size_t params = n * n;
  std::vector<ExactMatrix> units;
  for (std::size_t p = 0; p < params; ++p) {
    std::vector<mpq_class> e(params, mpq_class(0));
    e[p] = 1;
    units.push_back(hermitian_from_parameters(lattice.n, e));
  }
  const auto& g = lattice.generators;
  std::vector<RealVector> rows;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      RealVector row(params);
      for (std::size_t p = 0; p < params; ++p) row[p] = stokes_value(g[i], units[p], g[j]).re();
      rows.push_back(std::move(row));
    }
  StokesSystem out;
  out.constraints = rows_to_matrix(rows, params);
  if (rows.empty()) {
    out.solution_dim = params;
    out.solution_basis = units;
    return out;
  }
  for (const auto& v : nullspace(out.constraints)) out.solution_basis.push_back(hermitian_from_parameters(lattice.n, real_part(v)));
  out.solution_dim = out.solution_basis.size();
  return out;
}

ConeDimension cone_dimension(const NormalForm& nf) {
  ConeDimension out;
  out.stokes_dim = stokes_constraints(LatticeData(nf.n, nf.generators)).solution_dim;
  if (nf.m == 0) {
    out.asserted = true;
    out.value = nf.n * nf.n - nf.l * (nf.l + 1) / 2;
  } else {
    out.note = "not a semi-torus (m = " + std::to_string(nf.m) +
               "); exact forms are not classified, only the Stokes dimension is reported";
  }
  return out;
}

ExactMatrix to_adapted(const ExactMatrix& omega, const NormalForm& nf) {
  require_square(omega, nf.n);
  return nf.P.transposed() * omega * conj_entries(nf.P);
}

HermitianMatrix to_adapted(const HermitianMatrix& omega, const NormalForm& nf) {
  if (omega.rows() != nf.n || omega.cols() != nf.n) throw InvalidArgument("form has the wrong size for this normal form");
  const ComplexMatrix P = to_complex_matrix(nf.P);
  return P.transpose() * omega * P.conjugate();
}

ExactScalar QuadPotential::evaluate(const ExactVector& z) const {
  RealVector v = realify(z);
  mpq_class sum = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b < v.size(); ++b) sum += v[a] * Q(a, b).re() * v[b];
  return ExactScalar(sum);
}

ExactMatrix QuadPotential::ddbar() const {
  const auto N = static_cast<std::size_t>(n);
  ExactMatrix h(N, N);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      const mpq_class re = Q(a, b).re() + Q(N + a, N + b).re();
      const mpq_class im = Q(a, N + b).re() - Q(N + a, b).re();
      h(a, b) = ExactScalar(re / 2, im / 2);
    }
  return h;
}

std::string QuadPotential::str() const {
  const auto N = static_cast<std::size_t>(n);
  std::vector<std::string> vars;
  for (std::size_t a = 1; a <= N; ++a) vars.push_back("x" + std::to_string(a));
  for (std::size_t a = 1; a <= N; ++a) vars.push_back("y" + std::to_string(a));
  Poly phi(vars);
  for (std::size_t a = 0; a < 2 * N; ++a)
    for (std::size_t b = 0; b < 2 * N; ++b) {
      Exponent e(2 * N, 0);
      ++e[a];
      ++e[b];
      phi.add_term(e, Q(a, b));
    }
  return phi.str();
}

PotentialResult build_potential(const ExactMatrix& omega, const NormalForm& nf) {
  require_square(omega, nf.n);
  require_hermitian(omega);
  const auto n = static_cast<std::size_t>(nf.n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Block br = block_of(nf, r), bc = block_of(nf, c);
      if (br == Block::k && bc != Block::m && !omega(r, c).is_zero())
        throw PatternViolation("entry " + entry_name(r, c) + " must vanish in adapted coordinates");
      if (bc == Block::k && br == Block::l && !omega(r, c).is_zero())
        throw PatternViolation("entry " + entry_name(r, c) + " must vanish in adapted coordinates");
      if (br == Block::l && bc == Block::l && !omega(r, c).is_real())
        throw PatternViolation("entry " + entry_name(r, c) + " of the l block must be real");
    }

  PotentialResult out;
  out.phi.n = nf.n;
  out.phi.Q = ExactMatrix(2 * n, 2 * n);
  auto x = [](std::size_t a) { return a; };
  auto y = [n](std::size_t a) { return n + a; };
  // Adds c * v_u * v_w, split symmetrically.
  auto add = [&](std::size_t u, std::size_t w, const mpq_class& c) {
    out.phi.Q(u, w) += ExactScalar(c / 2);
    out.phi.Q(w, u) += ExactScalar(c / 2);
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Block bi = block_of(nf, i), bj = block_of(nf, j);
      const mpq_class& a = omega(i, j).re();
      const mpq_class& b = omega(i, j).im();
      if (bi == Block::l && bj == Block::l) {
        if (i == j) add(y(i), y(i), 2 * a);
        if (i < j) add(y(i), y(j), 4 * a);
      } else if (bi == Block::l && bj == Block::m) {
        // -4 Im(z_i) Im(omega_ij conj(z_j))
        add(y(i), x(j), -4 * b);
        add(y(i), y(j), 4 * a);
      } else if (bi == Block::m && bj == Block::m) {
        // Re(omega_ij z_i conj(z_j)), summed over ordered pairs
        add(x(i), x(j), a);
        add(y(i), y(j), a);
        add(y(i), x(j), -b);
        add(x(i), y(j), b);
      }
    }
  }

  const ExactMatrix h = out.phi.ddbar();
  out.residual = ExactMatrix(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      out.residual(r, c) = omega(r, c) - h(r, c);
      const Block br = block_of(nf, r), bc = block_of(nf, c);
      const bool free_block = (br == Block::k && bc == Block::m) || (br == Block::m && bc == Block::k);
      if (!free_block && !out.residual(r, c).is_zero())
        throw PatternViolation("internal: residual entry " + entry_name(r, c) + " is nonzero");
    }
  return out;
}

PotentialResult build_potential(const HermitianMatrix& omega, const NormalForm& nf) {
  return build_potential(to_exact_matrix(omega), nf);
}

ConeClass class_project(const HermitianMatrix& omega, const NormalForm& nf) {
  if (nf.m != 0) throw NotSemiTorus("cone classes are defined here only for semi-tori (m = 0)");
  ConeClass out{nf, to_adapted(omega, nf)};
  for (int a = nf.k; a < nf.k + nf.l; ++a)
    for (int b = nf.k; b < nf.k + nf.l; ++b) out.representative(a, b) = Complex(0, out.representative(a, b).imag());
  return out;
}

ExactConeClass class_project(const ExactMatrix& omega, const NormalForm& nf) {
  if (nf.m != 0) throw NotSemiTorus("cone classes are defined here only for semi-tori (m = 0)");
  ExactConeClass out{nf, to_adapted(omega, nf)};
  for (int a = nf.k; a < nf.k + nf.l; ++a)
    for (int b = nf.k; b < nf.k + nf.l; ++b) {
      auto& e = out.representative(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
      e = ExactScalar(0, e.im());
    }
  return out;
}

bool class_equal(const ConeClass& a, const ConeClass& b) {
  if (!same_normal_form(a.nf, b.nf)) throw InvalidArgument("classes belong to different normal forms");
  const double scale =
      1.0 + std::max(a.representative.cwiseAbs().maxCoeff(), b.representative.cwiseAbs().maxCoeff());
  return (a.representative - b.representative).cwiseAbs().maxCoeff() <= kClassTol * scale;
}

bool class_equal(const ExactConeClass& a, const ExactConeClass& b) {
  if (!same_normal_form(a.nf, b.nf)) throw InvalidArgument("classes belong to different normal forms");
  return a.representative == b.representative;
}

HermitianMatrix c_family(double r) {
  HermitianMatrix c(2, 2);
  c << std::cosh(r), Complex(0, std::sinh(r)), Complex(0, -std::sinh(r)), std::cosh(r);
  return c;
}

}  // namespace vfm
