#pragma once

#include <string>
#include <vector>

#include "vfm/divisor.hpp"
#include "vfm/fields.hpp"
#include "vfm/numeric.hpp"
#include "vfm/ratfunc.hpp"

namespace vfm {

/// Hermitian metric g = sigma sigma^* with sigma = S^-1, where row i of S holds
/// the components of basis field i. g_ij = sum_k s_ik conj(s_jk).
struct MetricModel {
  FieldBasis basis;
  Matrix<Poly> S;
  Matrix<RatFunc> sigma;
  Poly detS;
  RatFunc detSigma;  // 1 / det S
};

/// Pointwise values of g and the cone matrices. Hermitian to 1e-12.
using HermitianMatrix = ComplexMatrix;

/// Throws DegenerateBasis when the basis is not generically of full rank.
MetricModel build_metric(const FieldBasis& basis);

/// Exact identity checks: S * sigma == I and detSigma * det S == 1.
bool verify_inverse(const MetricModel& m);

/// |det S(p)| > 1e-9 (1 + |p|)^deg det S.
bool off_divisor(const MetricModel& m, const Point& p);

ComplexMatrix sigma_at(const MetricModel& m, const Point& p);

/// Throws OnDivisor below the floor of off_divisor.
HermitianMatrix metric_at(const MetricModel& m, const Point& p);

/// sqrt(sum_ij v^i g_ij conj(v^j)): the length of the tangent vector v at p.
double tangent_length(const MetricModel& m, const Point& p, const Point& v);

struct KahlerResidual {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t l = 0;
  RatFunc value;  // d s_ij / dz^l - d s_lj / dz^i
};

struct KahlerDefect {
  bool kahler = true;
  // Nonzero residuals with i < l (the residual is antisymmetric in i, l).
  std::vector<KahlerResidual> residuals;
  double sampled_max = 0.0;
  std::size_t sampled_points = 0;
};

/// Exact residuals; when `samples` is non-empty, also the largest |r| over them.
KahlerDefect kahler_defect(const MetricModel& m, const std::vector<Point>& samples = {});

/// Largest |d^2 F / dz^i d conj(z^j)| with F = log det g, by central
/// differences on a four-point stencil in the real coordinates.
double ricci_probe(const MetricModel& m, const Point& p, double h);

struct RicciCertificate {
  bool holds = true;
  std::size_t points = 0;
  std::string reason;  // first failing point when !holds
};

/// det g(p) == |detSigma(p)|^2 exactly at Gaussian-rational points off the
/// divisor, after checking S * sigma == I symbolically.
RicciCertificate ricci_certificate(const MetricModel& m, const std::vector<ExactVector>& points);

/// Gaussian-rational points with |det S| bounded away from zero, suitable for
/// both the exact certificate and the finite-difference probe.
std::vector<ExactVector> sample_regular_points(const MetricModel& m, std::size_t count, Rng& rng);

Point to_point(const ExactVector& p);

bool positive_definite(const HermitianMatrix& h);

enum class PathVerdict { divergent, finite, inconclusive };
std::string to_string(PathVerdict v);

struct CompletenessProbe {
  PathVerdict verdict = PathVerdict::inconclusive;
  std::vector<double> lengths;  // L_j for j = 0..depth
  double total = 0.0;
};

/// L_j = length of t -> p_div + t v over [2^-j-1, 2^-j], 16-point
/// Gauss-Legendre per block. Divergent if the last five L_j all exceed 1e-3,
/// finite if the last five ratios L_j+1 / L_j stay below 0.75. Throws
/// BadDirection when the path stays on the divisor.
CompletenessProbe completeness_probe(const MetricModel& m, const Point& p_div, const Point& v,
                                     int depth = 24);

/// Same blocks along the integral curve of basis field `field` started at
/// p_div, over t in (0, tau], integrated with RK4. Depth is capped at 16:
/// deeper blocks sit closer to the divisor than sigma can be evaluated
/// reliably. Throws BadDirection when the curve stays on the divisor.
CompletenessProbe flow_approach_probe(const MetricModel& m, const Point& p_div, std::size_t field,
                                      double tau, int depth = 24);

enum class ApproachKind { line, flow };

struct ApproachPath {
  ApproachKind kind = ApproachKind::line;
  std::string chart;
  Point base;
  Point direction;             // initial velocity
  std::size_t field = 0;       // flow paths: the basis field followed
  bool kernel_aligned = false;  // null vector of S(base) parallel to grad f
  CompletenessProbe probe;
};

std::string to_string(ApproachKind k);

struct CompletenessAssessment {
  PathVerdict verdict = PathVerdict::inconclusive;  // divergent = complete
  std::vector<ApproachPath> paths;
};

/// Approaches to sampled points of the reduced divisor. Straight lines: the
/// direction avoids the leading blowup of sigma when it can (with S u = 0 and
/// u not parallel to grad f, take v transverse with u^t v = 0). Curves: the
/// integral curve of each basis field through the point, when it leaves the
/// divisor. Straight lines alone can miss a finite approach that has to bend.
/// Any finite path makes the verdict finite (incomplete).
CompletenessAssessment assess_completeness(const MetricModel& m, const Poly& reduced_divisor,
                                           Rng& rng, std::size_t points = 4, int depth = 24);

/// Runs the affine assessment on every chart U_i that meets the divisor.
CompletenessAssessment assess_completeness(const std::vector<ProjectiveField>& fields, Rng& rng,
                                           std::size_t points_per_chart = 4, int depth = 24);

}  // namespace vfm
