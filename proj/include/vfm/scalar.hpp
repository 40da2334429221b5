#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace vfm {

/// Exact Gaussian rational re + im*i. Both parts are GMP rationals kept in
/// canonical form, so equality is structural.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class re, mpq_class im = 0);

  static ExactScalar imaginary_unit() { return {0, 1}; }
  static ExactScalar from_complex(std::complex<double> z);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return {re_, -im_}; }
  /// |z|^2, always real.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ExactScalar operator-() const { return {-re_, -im_}; }
  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text: "3/2", "-i", "2*i", "(1/2-3*i)". Parenthesized when both
  /// parts are nonzero so it can be used as a factor.
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace vfm
