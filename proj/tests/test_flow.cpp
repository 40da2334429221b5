#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vfm/divisor.hpp"
#include "vfm/errors.hpp"
#include "vfm/flow.hpp"

using namespace vfm;
using vfm::testing::affine_basis;
using vfm::testing::P;
using vfm::testing::projective_fields;

TEST(Flow, ToricFieldFixesItsHyperplane) {
  const FieldBasis b = affine_basis({"z1", "z2"}, {"z1 d1", "z2 d2"});
  const auto report = flow_invariance_probe(b, P("z1 z2", {"z1", "z2"}), 0, {{0.0, 1.0}});
  EXPECT_EQ(report.max_residual, 0.0);
}

TEST(Flow, NilpotentBasisInChartU0) {
  const auto fields = projective_fields(2, {"z2 d0", "z2 d1 + z1 d0"});
  const FieldBasis b = localize(fields, 0);
  const DivisorSection d = restrict_to_chart(divisor_projective(fields), 0);
  Rng rng(1);
  const auto starts = sample_zero_set(d.reduced_section(), 4, rng);
  ASSERT_FALSE(starts.empty());
  for (std::size_t i = 0; i < b.size(); ++i)
    EXPECT_LT(flow_invariance_probe(b, d.section, i, starts).max_residual, 1e-6);
}

TEST(Flow, IncompleteBasisLeavesTheDivisor) {
  const FieldBasis b = affine_basis({"x", "y"}, {"dx", "x^2 dy"});
  const auto report = flow_invariance_probe(b, P("x^2", {"x", "y"}), 0, {{0.0, 0.0}});
  // x(t) = t, so the residual at t = 1 is 1 / (1 + 1).
  EXPECT_NEAR(report.max_residual, 0.5, 1e-9);
  EXPECT_NEAR(report.trajectories[0].t_at_max, 1.0, 1e-12);
}

TEST(Flow, RungeKuttaAccuracy) {
  // dz/dt = z from z = 1: z(1) = e.
  const FieldBasis b = affine_basis({"z"}, {"z dz"});
  const auto t = integrate_flow(b[0], P("z", {"z"}), {1.0});
  EXPECT_NEAR(std::abs(t.end[0] - std::exp(1.0)), 0.0, 1e-12);
}

TEST(Flow, Errors) {
  const FieldBasis blowup = affine_basis({"z"}, {"z^2 dz"});
  FlowConfig cfg;
  cfg.t_max = 2.0;
  EXPECT_THROW(integrate_flow(blowup[0], P("z", {"z"}), {1.0}, cfg), BlowupDetected);
  EXPECT_THROW(flow_invariance_probe(affine_basis({"x", "y"}, {"dx", "x dx"}), P("x", {"x", "y"}), 0, {{0.0, 0.0}}),
               DegenerateBasis);
}
