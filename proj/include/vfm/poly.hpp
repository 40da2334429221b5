#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vfm/scalar.hpp"

namespace vfm {

using Exponent = std::vector<unsigned>;

/// Graded lexicographic order, largest first: total degree, then the
/// exponent of the first declared variable, then the second, ...
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

unsigned total_degree(const Exponent& e);

/// Sparse multivariate polynomial over the Gaussian rationals.
///
/// A polynomial carries its own ordered variable list. Binary operations on
/// polynomials with different lists first embed both into the union list
/// (left operand's variables first, then the right's new ones), so callers can
/// mix `x` and `x*y` freely. Terms are kept in a map ordered by GrlexGreater
/// with no zero coefficients, which makes the representation canonical.
class Poly {
 public:
  using Terms = std::map<Exponent, ExactScalar, GrlexGreater>;

  Poly() = default;
  explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Poly constant(std::vector<std::string> vars, const ExactScalar& c);
  static Poly variable(std::vector<std::string> vars, std::size_t index);
  static Poly variable(std::vector<std::string> vars, const std::string& name);
  static Poly monomial(std::vector<std::string> vars, Exponent e, const ExactScalar& c);

  const std::vector<std::string>& vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  /// True for zero and for nonzero constants.
  bool is_constant() const;
  ExactScalar constant_value() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Degree in variable `index`; -1 for the zero polynomial.
  int degree_in(std::size_t index) const;
  bool is_homogeneous() const;
  bool uses_variable(std::size_t index) const;

  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const ExactScalar& leading_coefficient() const { return terms_.begin()->second; }
  ExactScalar coefficient(const Exponent& e) const;

  /// Index of `name` in vars(), or -1.
  int var_index(const std::string& name) const;

  /// Re-express over `vars`, which must contain every variable this
  /// polynomial actually uses.
  Poly with_vars(const std::vector<std::string>& vars) const;

  void add_term(const Exponent& e, const ExactScalar& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const ExactScalar& c);
  Poly& operator/=(const ExactScalar& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const ExactScalar& c) { return a *= c; }
  friend Poly operator*(const ExactScalar& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const ExactScalar& c) { return a /= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned k) const;
  Poly derivative(std::size_t index) const;
  Poly derivative(const std::string& name) const;
  /// Multiply by a monomial given as an exponent over vars().
  Poly shifted(const Exponent& e) const;
  /// Divide by the leading coefficient; zero stays zero.
  Poly monic() const;
  /// Replace variable `index` by `value`; the variable list is unchanged.
  Poly substitute(std::size_t index, const Poly& value) const;
  /// Substitute every variable: result is over values' common variables.
  Poly compose(const std::vector<Poly>& values) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
  ExactScalar evaluate(std::span<const ExactScalar> point) const;

  /// Canonical text in the grammar accepted by parse_poly, e.g.
  /// "z0^2*z1 - 3/2*z2 + (1+i)".
  std::string str() const;

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

/// Union of two variable lists; `a` first, then the new names of `b`.
std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b);

/// Bring both polynomials onto a common variable list.
void unify(Poly& a, Poly& b);

std::vector<std::string> z_vars(int first, int last);

}  // namespace vfm
