#include "vfm/metric.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>

#include "vfm/errors.hpp"
#include "vfm/flow.hpp"

namespace vfm {

namespace {

constexpr double kDivisorFloor = 1e-9;
constexpr double kHermitianTol = 1e-12;

Poly one(const std::vector<std::string>& vars) { return Poly::constant(vars, ExactScalar(1)); }

double divisor_scale(const MetricModel& m, const Point& p) {
  return std::pow(1.0 + norm(p), std::max(m.detS.degree(), 0));
}

ComplexMatrix eval_poly_matrix(const Matrix<Poly>& s, const Point& p) {
  ComplexMatrix out(s.rows(), s.cols());
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c) out(r, c) = s(r, c).evaluate(p);
  return out;
}

Eigen::VectorXcd to_eigen(const Point& p) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) v(static_cast<Eigen::Index>(i)) = p[i];
  return v;
}

Point from_eigen(const Eigen::VectorXcd& v) { return Point(v.data(), v.data() + v.size()); }

/// log det g at p, with det g computed from g = sigma sigma^* itself.
double log_det_metric(const MetricModel& m, const Point& p) {
  const ComplexMatrix s = sigma_at(m, p);
  const ComplexMatrix g = s * s.adjoint();
  return std::log(g.determinant().real());
}

PathVerdict combine(const std::vector<ApproachPath>& paths) {
  if (paths.empty()) return PathVerdict::divergent;
  bool all_divergent = true;
  for (const auto& path : paths) {
    if (path.probe.verdict == PathVerdict::finite) return PathVerdict::finite;
    all_divergent = all_divergent && path.probe.verdict == PathVerdict::divergent;
  }
  return all_divergent ? PathVerdict::divergent : PathVerdict::inconclusive;
}

/// L_j over [scale 2^-j-1, scale 2^-j] for j = 0..depth, and the verdict.
template <class Speed>
CompletenessProbe dyadic_lengths(Speed speed, double scale, int depth) {
  auto safe = [&](double t) {
    const double v = speed(t);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  CompletenessProbe out;
  for (int j = 0; j <= depth; ++j) {
    const double hi = scale * std::ldexp(1.0, -j);
    const double L = boost::math::quadrature::gauss<double, 16>::integrate(safe, hi / 2, hi);
    out.lengths.push_back(std::isnan(L) ? std::numeric_limits<double>::infinity() : L);
    out.total += out.lengths.back();
  }
  const auto tail = out.lengths.end() - 5;
  if (*std::min_element(tail, out.lengths.end()) > 1e-3) {
    out.verdict = PathVerdict::divergent;
  } else {
    bool shrinking = true;
    for (auto it = tail - 1; it + 1 != out.lengths.end(); ++it)
      shrinking = shrinking && *it > 0 && *(it + 1) / *it < 0.75;
    out.verdict = shrinking ? PathVerdict::finite : PathVerdict::inconclusive;
  }
  return out;
}

}  // namespace

MetricModel build_metric(const FieldBasis& basis) {
  if (basis.size() == 0) throw InvalidArgument("empty basis");
  if (generic_rank(basis) < basis.size())
    throw DegenerateBasis("the basis fields are linearly dependent at every point");
  MetricModel m;
  m.basis = basis;
  m.S = basis.matrix();
  m.detS = poly_det(m.S);
  m.sigma = adjugate_inverse(m.S);
  m.detSigma = RatFunc(one(basis.chart().vars), m.detS);
  return m;
}

bool verify_inverse(const MetricModel& m) {
  const auto& vars = m.basis.chart().vars;
  const Matrix<RatFunc> product = to_ratmat(m.S) * m.sigma;
  for (std::size_t r = 0; r < product.rows(); ++r)
    for (std::size_t c = 0; c < product.cols(); ++c)
      if (!(product(r, c) == RatFunc(r == c ? one(vars) : Poly(vars)))) return false;
  return m.detSigma * RatFunc(m.detS) == RatFunc(one(vars));
}

bool off_divisor(const MetricModel& m, const Point& p) {
  return std::abs(m.detS.evaluate(p)) > kDivisorFloor * divisor_scale(m, p);
}

ComplexMatrix sigma_at(const MetricModel& m, const Point& p) {
  const std::size_t n = m.sigma.rows();
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = m.sigma(r, c).evaluate(p);
  return out;
}

HermitianMatrix metric_at(const MetricModel& m, const Point& p) {
  if (p.size() != m.basis.size()) throw InvalidArgument("point has the wrong dimension");
  if (!off_divisor(m, p)) throw OnDivisor("point lies on (or too close to) the divisor");
  const ComplexMatrix s = sigma_at(m, p);
  return s * s.adjoint();
}

double tangent_length(const MetricModel& m, const Point& p, const Point& v) {
  return (sigma_at(m, p).transpose() * to_eigen(v)).norm();
}

KahlerDefect kahler_defect(const MetricModel& m, const std::vector<Point>& samples) {
  const auto& vars = m.basis.chart().vars;
  const std::size_t n = m.sigma.rows();
  // sigma = A / d with A the adjugate of S. Over the common denominator d^2,
  // r = [d (d_l A_ij - d_i A_lj) - (A_ij d_l d - A_lj d_i d)] / d^2, so the
  // exact zero test is a polynomial identity and only nonzero residuals pay
  // for a gcd.
  const Poly& d = m.detS;
  Matrix<Poly> A(n, n, Poly(vars));
  if (n == 1) {
    A(0, 0) = one(vars);
  } else {
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Poly cof = poly_det(m.S.minor(r, c));
        A(c, r) = (r + c) % 2 == 1 ? -cof : cof;
      }
  }
  std::vector<Poly> dd;
  for (const auto& v : vars) dd.push_back(d.derivative(v));
  KahlerDefect out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = i + 1; l < n; ++l)
      for (std::size_t j = 0; j < n; ++j) {
        const Poly num = d * (A(i, j).derivative(vars[l]) - A(l, j).derivative(vars[i])) -
                         (A(i, j) * dd[l] - A(l, j) * dd[i]);
        if (!num.is_zero()) out.residuals.push_back({i, j, l, RatFunc(num, d * d)});
      }
  out.kahler = out.residuals.empty();
  for (const auto& p : samples) {
    for (const auto& r : out.residuals) out.sampled_max = std::max(out.sampled_max, std::abs(r.value.evaluate(p)));
    ++out.sampled_points;
  }
  return out;
}

double ricci_probe(const MetricModel& m, const Point& p, double h) {
  const std::size_t n = p.size();
  if (n != m.basis.size()) throw InvalidArgument("point has the wrong dimension");
  if (!(h > 0)) throw InvalidArgument("stencil step must be positive");
  // Real coordinate a: x_k for a = k, y_k for a = n + k.
  auto shift = [&](Point q, std::size_t a, double t) {
    q[a % n] += a < n ? Complex(t, 0) : Complex(0, t);
    return q;
  };
  auto F = [&](const Point& q) {
    if (!off_divisor(m, q)) throw OnDivisor("stencil reaches the divisor");
    return log_det_metric(m, q);
  };
  auto D = [&](std::size_t a, std::size_t b) {
    return (F(shift(shift(p, a, h), b, h)) - F(shift(shift(p, a, h), b, -h)) -
            F(shift(shift(p, a, -h), b, h)) + F(shift(shift(p, a, -h), b, -h))) /
           (4 * h * h);
  };
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex entry(D(i, j) + D(n + i, n + j), D(i, n + j) - D(n + i, j));
      worst = std::max(worst, std::abs(entry) / 4);
    }
  return worst;
}

RicciCertificate ricci_certificate(const MetricModel& m, const std::vector<ExactVector>& points) {
  RicciCertificate out;
  if (!verify_inverse(m)) {
    out.holds = false;
    out.reason = "S * sigma is not the identity";
    return out;
  }
  const std::size_t n = m.sigma.rows();
  for (const auto& p : points) {
    ExactMatrix s(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) s(r, c) = m.sigma(r, c).evaluate(std::span<const ExactScalar>(p));
    const ExactScalar det_g = determinant(s * conjugate_transpose(s));
    const ExactScalar ds = m.detSigma.evaluate(std::span<const ExactScalar>(p));
    ++out.points;
    if (!(det_g == ExactScalar(ds.norm()))) {
      out.holds = false;
      out.reason = "det g = " + det_g.str() + " but |det sigma|^2 = " + ExactScalar(ds.norm()).str();
      return out;
    }
  }
  return out;
}

std::vector<ExactVector> sample_regular_points(const MetricModel& m, std::size_t count, Rng& rng) {
  const std::size_t n = m.basis.size();
  std::vector<ExactVector> out;
  for (int attempt = 0; out.size() < count && attempt < 1000 * static_cast<int>(count); ++attempt) {
    ExactVector p(n);
    for (auto& c : p) c = rng.gaussian_rational(8, 4);
    const Point q = to_point(p);
    if (std::abs(m.detS.evaluate(q)) > 1e-2 * divisor_scale(m, q)) out.push_back(std::move(p));
  }
  return out;
}

Point to_point(const ExactVector& p) {
  Point out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(c.to_complex());
  return out;
}

bool positive_definite(const HermitianMatrix& h) {
  if (h.rows() != h.cols()) throw NotHermitian("matrix is not square");
  const double scale = 1.0 + h.cwiseAbs().maxCoeff();
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol * scale)
    throw NotHermitian("matrix differs from its conjugate transpose");
  const Eigen::LLT<ComplexMatrix> llt(h);
  return llt.info() == Eigen::Success;
}

std::string to_string(ApproachKind k) { return k == ApproachKind::line ? "line" : "flow"; }

std::string to_string(PathVerdict v) {
  switch (v) {
    case PathVerdict::divergent: return "divergent";
    case PathVerdict::finite: return "finite";
    case PathVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CompletenessProbe completeness_probe(const MetricModel& m, const Point& p_div, const Point& v,
                                     int depth) {
  if (depth < 5) throw InvalidArgument("completeness probe needs depth >= 5");
  if (p_div.size() != m.basis.size() || v.size() != p_div.size())
    throw InvalidArgument("point or direction has the wrong dimension");
  auto along = [&](double t) {
    Point q = p_div;
    for (std::size_t k = 0; k < q.size(); ++k) q[k] += t * v[k];
    return q;
  };
  const std::array<double, 3> checks{0.9, 0.5, 0.1};
  if (std::none_of(checks.begin(), checks.end(), [&](double t) { return off_divisor(m, along(t)); }))
    throw BadDirection("the path stays on the divisor");

  auto speed = [&](double t) { return tangent_length(m, along(t), v); };
  return dyadic_lengths(speed, 1.0, depth);
}

CompletenessProbe flow_approach_probe(const MetricModel& m, const Point& p_div, std::size_t field,
                                      double tau, int depth) {
  if (depth < 5) throw InvalidArgument("completeness probe needs depth >= 5");
  if (field >= m.basis.size() || p_div.size() != m.basis.size())
    throw InvalidArgument("field index or point out of range");
  if (!(tau > 0)) throw InvalidArgument("flow approach needs tau > 0");
  const VectorField& s = m.basis[field];
  auto along = [&](double t) {
    const FlowConfig cfg{t, 32, 1e8};
    return integrate_flow(s, m.detS, p_div, cfg).end;
  };
  const std::array<double, 3> checks{1.0, 0.5, 0.1};
  if (std::none_of(checks.begin(), checks.end(), [&](double c) { return off_divisor(m, along(c * tau)); }))
    throw BadDirection("the integral curve stays on the divisor");
  auto speed = [&](double t) {
    const Point q = along(t);
    return tangent_length(m, q, s.evaluate(q));
  };
  return dyadic_lengths(speed, tau, std::min(depth, 16));
}

CompletenessAssessment assess_completeness(const MetricModel& m, const Poly& reduced_divisor,
                                           Rng& rng, std::size_t points, int depth) {
  const auto& vars = m.basis.chart().vars;
  const std::size_t n = vars.size();
  const Poly f = reduced_divisor.with_vars(vars);
  CompletenessAssessment out;
  if (f.is_constant()) {
    out.verdict = combine(out.paths);
    return out;
  }
  for (const Point& p : sample_zero_set(f, points, rng)) {
    Eigen::VectorXcd grad(static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) grad(static_cast<Eigen::Index>(k)) = f.derivative(k).evaluate(p);
    if (grad.norm() < 1e-8) continue;  // singular point of the reduced divisor
    const Eigen::JacobiSVD<ComplexMatrix> svd(eval_poly_matrix(m.S, p), Eigen::ComputeFullV);
    const Eigen::VectorXcd u = svd.matrixV().col(static_cast<Eigen::Index>(n) - 1);
    const bool aligned = std::abs(u.dot(grad)) >= (1 - 1e-8) * u.norm() * grad.norm();
    Eigen::VectorXcd v = grad.conjugate();
    if (!aligned) v -= (u.transpose() * grad.conjugate())(0) / u.squaredNorm() * u.conjugate();
    v.normalize();
    ApproachPath path;
    path.chart = m.basis.chart().name();
    path.base = p;
    path.direction = from_eigen(v);
    path.kernel_aligned = aligned;
    path.probe = completeness_probe(m, p, path.direction, depth);
    out.paths.push_back(std::move(path));

    for (std::size_t i = 0; i < n; ++i) {
      const Point velocity = m.basis[i].evaluate(p);
      const double speed = norm(velocity);
      if (speed < 1e-8) continue;
      ApproachPath curve;
      curve.kind = ApproachKind::flow;
      curve.chart = m.basis.chart().name();
      curve.base = p;
      curve.direction = velocity;
      curve.field = i;
      try {
        curve.probe = flow_approach_probe(m, p, i, 0.25 / (1 + speed), depth);
      } catch (const BadDirection&) {
        continue;  // tangent to the divisor here
      } catch (const BlowupDetected&) {
        continue;
      }
      out.paths.push_back(std::move(curve));
    }
  }
  out.verdict = combine(out.paths);
  return out;
}

CompletenessAssessment assess_completeness(const std::vector<ProjectiveField>& fields, Rng& rng,
                                           std::size_t points_per_chart, int depth) {
  const DivisorSection divisor = divisor_projective(fields);
  CompletenessAssessment out;
  const int n = fields.empty() ? 0 : fields.front().n();
  for (int i = 0; i <= n; ++i) {
    const DivisorSection local = restrict_to_chart(divisor, i);
    if (local.empty()) continue;
    const MetricModel m = build_metric(localize(fields, i));
    CompletenessAssessment part = assess_completeness(m, local.reduced_section(), rng, points_per_chart, depth);
    for (auto& path : part.paths) out.paths.push_back(std::move(path));
  }
  out.verdict = combine(out.paths);
  return out;
}

}  // namespace vfm
