#include <gtest/gtest.h>

#include <cmath>

#include "test_support.hpp"
#include "vfm/divisor.hpp"
#include "vfm/errors.hpp"
#include "vfm/metric.hpp"

using namespace vfm;
using vfm::testing::affine_basis;
using vfm::testing::P;
using vfm::testing::projective_fields;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> Z12{"z1", "z2"};

MetricModel toric() { return build_metric(affine_basis(Z12, {"z1 d1", "z2 d2"})); }
MetricModel shear() { return build_metric(affine_basis(XY, {"dx", "x dx + dy"})); }
MetricModel c2_incomplete() { return build_metric(affine_basis(XY, {"dx", "x^2 dy"})); }

RatFunc R(const std::string& num, const std::string& den, const std::vector<std::string>& vars) {
  return RatFunc(P(num, vars), P(den, vars));
}

void expect_matrix_near(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  ASSERT_EQ(a.rows(), b.rows());
  EXPECT_LT((a - b).cwiseAbs().maxCoeff(), tol) << a << "\nvs\n" << b;
}

}  // namespace

TEST(BuildMetric, Examples) {
  const MetricModel t = toric();
  EXPECT_EQ(t.sigma(0, 0), R("1", "z1", Z12));
  EXPECT_EQ(t.sigma(1, 1), R("1", "z2", Z12));
  EXPECT_TRUE(t.sigma(0, 1).is_zero() && t.sigma(1, 0).is_zero());

  const MetricModel s = shear();
  EXPECT_EQ(s.sigma(0, 0), R("1", "1", XY));
  EXPECT_TRUE(s.sigma(0, 1).is_zero());
  EXPECT_EQ(s.sigma(1, 0), R("-x", "1", XY));
  EXPECT_EQ(s.sigma(1, 1), R("1", "1", XY));

  const MetricModel flat = build_metric(affine_basis(XY, {"dx", "dy"}));
  EXPECT_EQ(flat.sigma, to_ratmat(flat.S));

  for (const auto& m : {t, s, flat}) EXPECT_TRUE(verify_inverse(m));
  EXPECT_THROW(build_metric(affine_basis(XY, {"dx", "x dx"})), DegenerateBasis);
}

TEST(MetricAt, Examples) {
  expect_matrix_near(metric_at(toric(), {1.0, 1.0}), ComplexMatrix::Identity(2, 2), 1e-15);
  ComplexMatrix d(2, 2);
  d << 1, 0, 0, 0.25;
  expect_matrix_near(metric_at(toric(), {1.0, 2.0}), d, 1e-15);
  ComplexMatrix g(2, 2);
  g << 1, -1, -1, 2;
  expect_matrix_near(metric_at(shear(), {1.0, 0.0}), g, 1e-15);
  EXPECT_THROW(metric_at(toric(), {0.0, 1.0}), OnDivisor);
}

TEST(KahlerDefect, Examples) {
  EXPECT_TRUE(kahler_defect(toric()).kahler);
  EXPECT_TRUE(kahler_defect(build_metric(affine_basis(XY, {"dx", "dy"}))).kahler);
  const KahlerDefect d = kahler_defect(shear(), {{0.5, 0.5}});
  ASSERT_FALSE(d.kahler);
  ASSERT_EQ(d.residuals.size(), 1u);
  // d s_11 / dy - d s_21 / dx = 0 - (-1).
  EXPECT_EQ(d.residuals[0].i, 0u);
  EXPECT_EQ(d.residuals[0].j, 0u);
  EXPECT_EQ(d.residuals[0].l, 1u);
  EXPECT_EQ(d.residuals[0].value, R("1", "1", XY));
  EXPECT_DOUBLE_EQ(d.sampled_max, 1.0);
}

TEST(KahlerDefect, PropertyMatchesAbelianOnRandomLinearBases) {
  Rng rng(17);
  int abelian = 0, other = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(rng.integer(2, 3));
    const Chart chart = Chart::affine(n);
    std::vector<VectorField> fields;
    for (int f = 0; f < n; ++f) {
      std::vector<Poly> comps;
      for (int k = 0; k < n; ++k) {
        Poly c = Poly::constant(chart.vars, ExactScalar(rng.integer(-1, 1)));
        for (int j = 0; j < n; ++j)
          if (rng.integer(0, 2) == 0)
            c += ExactScalar(rng.integer(-2, 2)) * Poly::variable(chart.vars, static_cast<std::size_t>(j));
        comps.push_back(c);
      }
      fields.emplace_back(chart, comps);
    }
    const FieldBasis basis(fields);
    if (generic_rank(basis) < basis.size()) continue;
    const bool ab = is_abelian(basis).abelian;
    EXPECT_EQ(kahler_defect(build_metric(basis)).kahler, ab);
    (ab ? abelian : other)++;
  }
  EXPECT_GT(other, 0);
}

TEST(Ricci, ProbeExamples) {
  EXPECT_LT(ricci_probe(toric(), {1.0, 1.0}, 1e-4), 1e-6);
  EXPECT_LT(ricci_probe(shear(), {1.0, 0.0}, 1e-4), 1e-6);
  EXPECT_THROW(ricci_probe(toric(), {1e-12, 1.0}, 1e-4), OnDivisor);
}

TEST(Ricci, ProbeOneDimensional) {
  const MetricModel m = build_metric(affine_basis({"z"}, {"z dz"}));
  EXPECT_LT(ricci_probe(m, {Complex(0.3, -0.7)}, 1e-4), 1e-6);
}

TEST(Ricci, CertificateOnModels) {
  Rng rng(2);
  for (const auto& m : {toric(), shear(), c2_incomplete(),
                        build_metric(localize(projective_fields(2, {"z2 d0", "z2 d1 + z1 d0"}), 0))}) {
    const auto points = sample_regular_points(m, 100, rng);
    ASSERT_EQ(points.size(), 100u);
    const RicciCertificate c = ricci_certificate(m, points);
    EXPECT_TRUE(c.holds) << c.reason;
    EXPECT_EQ(c.points, 100u);
    for (std::size_t k = 0; k < 20; ++k) {
      const Point p = to_point(points[k]);
      const HermitianMatrix g = metric_at(m, p);
      EXPECT_TRUE(positive_definite(g));
      EXPECT_LT(ricci_probe(m, p, 1e-4), 1e-5 * (1 + g.norm()));
    }
  }
}

TEST(Ricci, CertificateDetectsWrongInverse) {
  MetricModel m = shear();
  m.sigma(1, 0) = R("x", "1", XY);
  EXPECT_FALSE(ricci_certificate(m, {}).holds);
}

TEST(PositiveDefinite, Examples) {
  EXPECT_TRUE(positive_definite(ComplexMatrix::Identity(3, 3)));
  ComplexMatrix c(2, 2);
  c << std::cosh(1.0), Complex(0, std::sinh(1.0)), Complex(0, -std::sinh(1.0)), std::cosh(1.0);
  EXPECT_TRUE(positive_definite(c));
  ComplexMatrix b(2, 2);
  b << 1, 2, 2, 1;
  EXPECT_FALSE(positive_definite(b));
  ComplexMatrix nh(2, 2);
  nh << 1, 1, 0, 1;
  EXPECT_THROW(positive_definite(nh), NotHermitian);
}

TEST(CompletenessProbe, Examples) {
  const CompletenessProbe t = completeness_probe(toric(), {0.0, 1.0}, {1.0, 0.0});
  EXPECT_EQ(t.verdict, PathVerdict::divergent);
  for (double L : t.lengths) EXPECT_NEAR(L, std::log(2.0), 1e-9);

  const CompletenessProbe c = completeness_probe(c2_incomplete(), {0.0, 0.0}, {1.0, 0.0});
  EXPECT_EQ(c.verdict, PathVerdict::finite);
  EXPECT_NEAR(c.total, 1.0, 1e-6);

  EXPECT_THROW(completeness_probe(toric(), {0.0, 1.0}, {0.0, 1.0}), BadDirection);
}

TEST(CompletenessAssessment, NilpotentDivergesInU0) {
  Rng rng(4);
  const auto fields = projective_fields(2, {"z2 d0", "z2 d1 + z1 d0"});
  const MetricModel m = build_metric(localize(fields, 0));
  const DivisorSection d = restrict_to_chart(divisor_projective(fields), 0);
  const CompletenessAssessment a = assess_completeness(m, d.reduced_section(), rng);
  ASSERT_FALSE(a.paths.empty());
  EXPECT_EQ(a.verdict, PathVerdict::divergent);
}

TEST(CompletenessAssessment, ThreeWayAgreement) {
  Rng rng(6);
  for (const auto& texts : std::vector<std::vector<std::string>>{
           {"z1 d1", "z2 d2"}, {"z2 d0", "z2 d1 + z1 d0"}, {"z0 d1", "z1 d1 + z2 d2"}, {"z1 d0", "z2 d1"},
           {"z0 d1 + z2 d0", "z1 d2"}}) {
    const auto fields = projective_fields(2, texts);
    const DivisorSection d = divisor_projective(fields);
    bool tangent = true;
    for (const auto& r : tangency_check(fields, d)) tangent = tangent && r.tangent;
    const bool sub = is_subalgebra(localize(fields, 0)).subalgebra;
    const CompletenessAssessment a = assess_completeness(fields, rng);
    EXPECT_EQ(tangent, sub) << texts[0] << ", " << texts[1];
    EXPECT_EQ(a.verdict, sub ? PathVerdict::divergent : PathVerdict::finite) << texts[0] << ", " << texts[1];
  }
  const FieldBasis c2 = affine_basis(XY, {"dx", "x^2 dy"});
  const MetricModel m = build_metric(c2);
  EXPECT_FALSE(is_subalgebra(c2).subalgebra);
  EXPECT_EQ(assess_completeness(m, divisor_affine(c2).reduced_section(), rng).verdict, PathVerdict::finite);
}

TEST(CompletenessProbe, FlowApproachHasUnitSpeed) {
  // An integral curve of basis field i has sigma^t s_i = e_i, so L_j = tau 2^-j-1.
  const MetricModel c2 = c2_incomplete();
  const double tau = 0.2;
  const CompletenessProbe p = flow_approach_probe(c2, {0.0, 0.5}, 0, tau);
  EXPECT_EQ(p.verdict, PathVerdict::finite);
  ASSERT_EQ(p.lengths.size(), 17u);
  for (std::size_t j = 0; j < p.lengths.size(); ++j) EXPECT_NEAR(p.lengths[j], tau * std::ldexp(0.5, -static_cast<int>(j)), 1e-9);
  // x^2 dy is tangent to {x = 0}.
  EXPECT_THROW(flow_approach_probe(c2, {0.0, 0.5}, 1, tau), BadDirection);
}

TEST(CompletenessProbe, BentApproachNeedsTheFlow) {
  // Not a subalgebra, but every straight line into {x1 = 0} has infinite length.
  const auto fields = projective_fields(2, {"z1 d0 + z2 d1", "z1 d1"});
  const MetricModel m = build_metric(localize(fields, 0));
  EXPECT_EQ(completeness_probe(m, {0.0, 1.0}, {1.0, 0.0}).verdict, PathVerdict::divergent);
  EXPECT_EQ(flow_approach_probe(m, {0.0, 1.0}, 0, 0.2).verdict, PathVerdict::finite);
  Rng rng(8);
  EXPECT_EQ(assess_completeness(fields, rng).verdict, PathVerdict::finite);
}
