#pragma once

#include <complex>
#include <span>
#include <string>

#include "vfm/matrix.hpp"
#include "vfm/poly.hpp"

namespace vfm {

/// Reduced fraction num/den: gcd(num, den) = 1 and den is monic in graded-lex
/// order. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant({}, ExactScalar(1))) {}
  RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  RatFunc derivative(std::size_t index) const;
  RatFunc derivative(const std::string& name) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;
  /// Exact value; throws OnDivisor if the denominator vanishes.
  ExactScalar evaluate(std::span<const ExactScalar> point) const;

  /// "num" or "(num)/(den)".
  std::string str() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

/// Gauss-Jordan inverse over the rational-function field. Throws
/// SingularMatrix when det M is identically zero.
Matrix<RatFunc> ratmat_inverse(const Matrix<RatFunc>& m);

/// Inverse of a polynomial matrix as adjugate / det, each entry reduced once.
Matrix<RatFunc> adjugate_inverse(const Matrix<Poly>& m);

Matrix<RatFunc> to_ratmat(const Matrix<Poly>& m);

}  // namespace vfm
