#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "vfm/poly.hpp"

namespace vfm {

using Complex = std::complex<double>;
using Point = std::vector<Complex>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Seeded generator. Draws are built from raw 64-bit engine output so the
/// sequence is identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Complex complex_in_box(double half_width) {
    const double re = uniform(-half_width, half_width);
    return {re, uniform(-half_width, half_width)};
  }
  /// Gaussian rational (a + b i)/den with |a|, |b| <= bound.
  ExactScalar gaussian_rational(long bound, long den) {
    const long a = integer(-bound, bound);
    const long b = integer(-bound, bound);
    return {mpq_class(a, den), mpq_class(b, den)};
  }

 private:
  std::mt19937_64 engine_;
};

double norm(std::span<const Complex> p);

/// Roots of sum_k coeffs[k] t^k by Newton iteration with deflation, each
/// polished against the undeflated polynomial.
std::vector<Complex> univariate_roots(const std::vector<Complex>& coeffs, Rng& rng);

/// Points on {f = 0}: intersections with random rational lines, kept when
/// |f| < 1e-12 after refinement and the point norm is at most `radius`.
std::vector<Point> sample_zero_set(const Poly& f, std::size_t count, Rng& rng, double radius = 2.0);

}  // namespace vfm
