#include "vfm/numeric.hpp"

#include <cmath>
#include <optional>

namespace vfm {

double norm(std::span<const Complex> p) {
  double s = 0.0;
  for (const auto& z : p) s += std::norm(z);
  return std::sqrt(s);
}

namespace {

struct Horner {
  Complex value;
  Complex derivative;
};

Horner horner(const std::vector<Complex>& c, Complex t) {
  Complex v = 0.0;
  Complex d = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    d = d * t + v;
    v = v * t + c[k];
  }
  return {v, d};
}

std::optional<Complex> newton(const std::vector<Complex>& c, Complex t, int iterations) {
  for (int it = 0; it < iterations; ++it) {
    const Horner h = horner(c, t);
    if (std::abs(h.derivative) == 0.0) return std::nullopt;
    const Complex step = h.value / h.derivative;
    t -= step;
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) return std::nullopt;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(t))) return t;
  }
  return t;
}

}  // namespace

std::vector<Complex> univariate_roots(const std::vector<Complex>& coeffs, Rng& rng) {
  std::vector<Complex> c = coeffs;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  std::vector<Complex> roots;
  while (c.size() > 1) {
    std::optional<Complex> root;
    for (int attempt = 0; attempt < 50 && !root; ++attempt) {
      root = newton(c, rng.complex_in_box(1.5), 200);
      if (root && std::abs(horner(c, *root).value) > 1e-8 * (1.0 + std::abs(c.front()))) root.reset();
    }
    if (!root) break;
    if (auto polished = newton(coeffs, *root, 20)) root = polished;
    roots.push_back(*root);
    // Synthetic division by (t - root).
    std::vector<Complex> q(c.size() - 1);
    Complex carry = 0.0;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
      carry = c[k + 1] + carry * *root;
      q[k] = carry;
    }
    c = std::move(q);
  }
  return roots;
}

std::vector<Point> sample_zero_set(const Poly& f, std::size_t count, Rng& rng, double radius) {
  std::vector<Point> out;
  if (f.is_constant()) return out;
  const std::size_t n = f.vars().size();
  const std::vector<std::string> tvar{"t"};
  const Poly t = Poly::variable(tvar, 0);
  for (int attempt = 0; attempt < 200 && out.size() < count; ++attempt) {
    std::vector<ExactScalar> base(n);
    std::vector<ExactScalar> dir(n);
    std::vector<Poly> line;
    for (std::size_t k = 0; k < n; ++k) {
      base[k] = rng.gaussian_rational(8, 8);
      dir[k] = rng.gaussian_rational(8, 8);
      line.push_back(Poly::constant(tvar, base[k]) + t * dir[k]);
    }
    const Poly g = f.compose(line).with_vars(tvar);
    if (g.degree() < 1) continue;
    std::vector<Complex> coeffs(static_cast<std::size_t>(g.degree()) + 1);
    for (const auto& [e, c] : g.terms()) coeffs[e[0]] = c.to_complex();
    for (const Complex& root : univariate_roots(coeffs, rng)) {
      Point p(n);
      for (std::size_t k = 0; k < n; ++k) p[k] = base[k].to_complex() + root * dir[k].to_complex();
      if (std::abs(f.evaluate(p)) >= 1e-12 || norm(p) > radius) continue;
      out.push_back(std::move(p));
      if (out.size() == count) break;
    }
  }
  return out;
}

}  // namespace vfm
