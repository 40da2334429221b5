#include "vfm/ratfunc.hpp"

#include "vfm/algebra.hpp"
#include "vfm/errors.hpp"

namespace vfm {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.vars(), ExactScalar(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  unify(num_, den_);
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.vars(), ExactScalar(1));
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *exact_divide(num_, g);
      den_ = *exact_divide(den_, g);
    }
  }
  const ExactScalar lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    num_ /= lc;
    den_ /= lc;
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw InvalidArgument("rational function division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

bool operator==(const RatFunc& a, const RatFunc& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::derivative(std::size_t index) const {
  if (den_.is_constant()) return RatFunc(num_.derivative(index) / den_.constant_value());
  return {num_.derivative(index) * den_ - num_ * den_.derivative(index), den_ * den_};
}

RatFunc RatFunc::derivative(const std::string& name) const {
  const int index = num_.var_index(name);
  if (index < 0) return RatFunc(Poly(num_.vars()));
  return derivative(static_cast<std::size_t>(index));
}

std::complex<double> RatFunc::evaluate(std::span<const std::complex<double>> point) const {
  return num_.evaluate(point) / den_.evaluate(point);
}

ExactScalar RatFunc::evaluate(std::span<const ExactScalar> point) const {
  const ExactScalar d = den_.evaluate(point);
  if (d.is_zero()) throw OnDivisor("denominator vanishes at evaluation point");
  return num_.evaluate(point) / d;
}

std::string RatFunc::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Matrix<RatFunc> to_ratmat(const Matrix<Poly>& m) {
  Matrix<RatFunc> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = RatFunc(m(r, c));
  return out;
}

Matrix<RatFunc> ratmat_inverse(const Matrix<RatFunc>& m) {
  if (!m.square()) throw InvalidArgument("ratmat_inverse: non-square matrix");
  const std::size_t n = m.rows();
  Matrix<RatFunc> a = m;
  Matrix<RatFunc> inv(n, n);
  for (std::size_t k = 0; k < n; ++k) inv(k, k) = RatFunc(Poly::constant({}, ExactScalar(1)));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("determinant vanishes identically");
    a.swap_rows(col, pivot);
    inv.swap_rows(col, pivot);
    const RatFunc p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const RatFunc f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Matrix<RatFunc> adjugate_inverse(const Matrix<Poly>& m) {
  if (!m.square()) throw InvalidArgument("adjugate_inverse: non-square matrix");
  const std::size_t n = m.rows();
  const Poly det = poly_det(m);
  if (det.is_zero()) throw SingularMatrix("determinant vanishes identically");
  Matrix<RatFunc> out(n, n);
  if (n == 1) {
    out(0, 0) = RatFunc(Poly::constant(det.vars(), ExactScalar(1)), det);
    return out;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Poly cof = poly_det(m.minor(r, c));
      if ((r + c) % 2 == 1) cof = -cof;
      out(c, r) = RatFunc(cof, det);
    }
  }
  return out;
}

}  // namespace vfm
