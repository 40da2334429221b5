#include "vfm/algebra.hpp"

#include <algorithm>
#include <map>

#include "vfm/errors.hpp"

namespace vfm {

namespace {

bool divides_monomial(const Exponent& d, const Exponent& e) {
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] > e[k]) return false;
  return true;
}

Exponent monomial_quotient(const Exponent& e, const Exponent& d) {
  Exponent q(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) q[k] = e[k] - d[k];
  return q;
}

/// Coefficients of p as a polynomial in variable v; each coefficient keeps
/// p's variable list with exponent 0 in v.
std::map<unsigned, Poly> coefficients_in(const Poly& p, std::size_t v) {
  std::map<unsigned, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[v] = 0;
    auto it = out.try_emplace(e[v], Poly(p.vars())).first;
    it->second.add_term(rest, c);
  }
  return out;
}

Poly lead_coefficient_in(const Poly& p, std::size_t v) {
  return coefficients_in(p, v).rbegin()->second;
}

Poly variable_power(const std::vector<std::string>& vars, std::size_t v, unsigned k) {
  Exponent e(vars.size(), 0);
  e[v] = k;
  return Poly::monomial(vars, e, ExactScalar(1));
}

/// First variable used by a or b, or nullopt if both are constants.
std::optional<std::size_t> main_variable(const Poly& a, const Poly& b) {
  for (std::size_t v = 0; v < a.vars().size(); ++v)
    if (a.uses_variable(v) || b.uses_variable(v)) return v;
  return std::nullopt;
}

Poly must_divide(const Poly& a, const Poly& b) {
  auto q = exact_divide(a, b);
  if (!q) throw InvalidArgument("internal: expected exact division");
  return *q;
}

Poly gcd_unified(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, std::size_t v) {
  Poly g(p.vars());
  for (const auto& [deg, c] : coefficients_in(p, v)) {
    g = gcd_unified(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

/// Pseudo-remainder of a by b with respect to variable v.
Poly pseudo_remainder(Poly a, const Poly& b, std::size_t v) {
  const int db = b.degree_in(v);
  const Poly lb = lead_coefficient_in(b, v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const Poly la = lead_coefficient_in(a, v);
    a = lb * a - la * variable_power(a.vars(), v, static_cast<unsigned>(da - db)) * b;
  }
  return a;
}

/// p with every variable except v replaced by a fixed small integer.
Poly specialize_except(const Poly& p, std::size_t v) {
  static constexpr long kValues[] = {3, -5, 7, 11, -13, 17, 19, -23};
  Poly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    mpz_class scale = 1;
    Exponent reduced(e.size(), 0);
    reduced[v] = e[v];
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (k == v) continue;
      mpz_class power;
      mpz_pow_ui(power.get_mpz_t(), mpz_class(kValues[k % 8]).get_mpz_t(), e[k]);
      scale *= power;
    }
    out.add_term(reduced, c * ExactScalar(mpq_class(scale)));
  }
  return out;
}

/// Sound coprimality shortcut: if lc_v(a) survives specialization and the
/// specialized gcd is constant, gcd(a, b) has degree 0 in v.
bool coprime_in_by_specialization(const Poly& a, const Poly& b, std::size_t v) {
  const Poly sa = specialize_except(a, v);
  if (sa.degree_in(v) != a.degree_in(v)) return false;
  const Poly sb = specialize_except(b, v);
  if (sb.is_zero()) return false;
  Poly x = sa.monic(), y = sb.monic();
  if (x.degree_in(v) < y.degree_in(v)) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_remainder(x, y, v);
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return !x.uses_variable(v);
}

Poly gcd_unified(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const auto vopt = main_variable(a, b);
  if (!vopt) return Poly::constant(a.vars(), ExactScalar(1));
  const std::size_t v = *vopt;
  if (!a.uses_variable(v)) return gcd_unified(a, content_in(b, v));
  if (!b.uses_variable(v)) return gcd_unified(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  Poly pa = must_divide(a, ca).monic();
  Poly pb = must_divide(b, cb).monic();
  const Poly c = gcd_unified(ca, cb);
  if (coprime_in_by_specialization(pa, pb, v)) return c.monic();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (!pb.is_zero()) {
    Poly r = pseudo_remainder(pa, pb, v);
    pa = std::move(pb);
    if (r.is_zero()) break;
    if (!r.uses_variable(v)) {
      pa = Poly::constant(a.vars(), ExactScalar(1));
      break;
    }
    pb = must_divide(r, content_in(r, v)).monic();
  }
  if (pa.uses_variable(v)) pa = must_divide(pa, content_in(pa, v));
  return (c * pa).monic();
}

}  // namespace

DivisionResult divide(const Poly& a_in, const Poly& b_in) {
  if (b_in.is_zero()) throw InvalidArgument("division by zero polynomial");
  Poly a = a_in;
  Poly b = b_in;
  unify(a, b);
  Poly quotient(a.vars());
  Poly remainder(a.vars());
  const Exponent& lb = b.leading_exponent();
  const ExactScalar cb = b.leading_coefficient();
  while (!a.is_zero()) {
    const Exponent la = a.leading_exponent();
    const ExactScalar ca = a.leading_coefficient();
    if (divides_monomial(lb, la)) {
      const Poly t = Poly::monomial(a.vars(), monomial_quotient(la, lb), ca / cb);
      quotient += t;
      a -= t * b;
    } else {
      remainder.add_term(la, ca);
      a.add_term(la, -ca);
    }
  }
  return {std::move(quotient), std::move(remainder)};
}

std::optional<Poly> exact_divide(const Poly& a_in, const Poly& b_in) {
  if (b_in.is_zero()) throw InvalidArgument("division by zero polynomial");
  Poly a = a_in;
  Poly b = b_in;
  unify(a, b);
  Poly quotient(a.vars());
  const Exponent& lb = b.leading_exponent();
  const ExactScalar cb = b.leading_coefficient();
  while (!a.is_zero()) {
    const Exponent& la = a.leading_exponent();
    if (!divides_monomial(lb, la)) return std::nullopt;
    const Poly t = Poly::monomial(a.vars(), monomial_quotient(la, lb), a.leading_coefficient() / cb);
    quotient += t;
    a -= t * b;
  }
  return quotient;
}

Poly poly_gcd(const Poly& a_in, const Poly& b_in) {
  Poly a = a_in;
  Poly b = b_in;
  unify(a, b);
  return gcd_unified(a, b);
}

namespace {

/// Yun's algorithm with respect to v for a polynomial primitive in v.
std::vector<SquarefreeFactor> yun(const Poly& f, std::size_t v) {
  std::vector<SquarefreeFactor> out;
  const Poly df = f.derivative(v);
  const Poly a0 = poly_gcd(f, df);
  Poly b = must_divide(f, a0);
  Poly c = must_divide(df, a0);
  Poly d = c - b.derivative(v);
  unsigned i = 1;
  while (!b.is_constant()) {
    const Poly a = poly_gcd(b, d);
    if (!a.is_constant()) out.push_back({a.monic(), i});
    b = must_divide(b, a);
    c = must_divide(d, a);
    d = c - b.derivative(v);
    ++i;
  }
  return out;
}

std::vector<SquarefreeFactor> squarefree_factors(const Poly& p) {
  const auto vopt = main_variable(p, Poly(p.vars()));
  if (!vopt) return {};
  const std::size_t v = *vopt;
  const Poly content = content_in(p, v);
  const Poly primitive = must_divide(p, content);
  std::map<unsigned, Poly> merged;
  auto absorb = [&](const std::vector<SquarefreeFactor>& fs) {
    for (const auto& f : fs) {
      auto [it, inserted] = merged.try_emplace(f.multiplicity, f.factor);
      if (!inserted) it->second = it->second * f.factor;
    }
  };
  absorb(yun(primitive, v));
  absorb(squarefree_factors(content));
  std::vector<SquarefreeFactor> out;
  for (auto& [m, f] : merged) out.push_back({f.monic(), m});
  return out;
}

}  // namespace

SquarefreeDecomposition squarefree_decompose(const Poly& p) {
  if (p.is_zero()) throw InvalidArgument("squarefree_decompose of zero");
  SquarefreeDecomposition d;
  d.factors = squarefree_factors(p);
  Poly assembled = Poly::constant(p.vars(), ExactScalar(1));
  for (const auto& f : d.factors) assembled *= f.factor.pow(f.multiplicity);
  const Poly unit = must_divide(p, assembled);
  if (!unit.is_constant()) throw InvalidArgument("internal: square-free reassembly failed");
  d.unit = unit.constant_value();
  return d;
}

Poly squarefree_part(const SquarefreeDecomposition& d) {
  Poly out = Poly::constant({}, ExactScalar(1));
  for (const auto& f : d.factors) out *= f.factor;
  return out;
}

Poly poly_det(const Matrix<Poly>& input) {
  if (!input.square()) throw InvalidArgument("poly_det: non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return Poly::constant({}, ExactScalar(1));
  Matrix<Poly> m = input;
  std::vector<std::string> vars;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) vars = merge_vars(vars, m(r, c).vars());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, c).with_vars(vars);

  bool negate = false;
  Poly previous = Poly::constant(vars, ExactScalar(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return Poly(vars);
      m.swap_rows(k, pivot);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Poly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = must_divide(num, previous);
      }
      m(i, k) = Poly(vars);
    }
    previous = m(k, k);
  }
  Poly det = m(n - 1, n - 1);
  return negate ? -det : det;
}

std::size_t generic_rank(const Matrix<Poly>& input) {
  // Fraction-free elimination: rank is the number of nonzero pivots.
  Matrix<Poly> m = input;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(row, pivot);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const Poly f = m(r, col);
      const Poly p = m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = p * m(r, c) - f * m(row, c);
      }
    }
    ++row;
  }
  return row;
}

}  // namespace vfm
