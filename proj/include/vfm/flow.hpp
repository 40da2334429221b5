#pragma once

#include <vector>

#include "vfm/fields.hpp"
#include "vfm/numeric.hpp"

namespace vfm {

struct FlowConfig {
  double t_max = 1.0;
  int steps = 1000;
  double blowup_bound = 1e8;  // trajectory norm that triggers BlowupDetected
};

struct FlowTrajectory {
  Point start;
  double max_residual = 0.0;  // max_t |f(g(t))| / (1 + |g(t)|^deg f)
  double t_at_max = 0.0;
  Point end;
};

/// Classical fourth-order Runge-Kutta integration of dz/dt = field(z) with
/// fixed step t_max/steps, tracking the relative residual of f along the path.
FlowTrajectory integrate_flow(const VectorField& field, const Poly& f, const Point& start,
                              const FlowConfig& config = {});

struct FlowProbeReport {
  std::size_t field_index = 0;
  std::vector<FlowTrajectory> trajectories;
  double max_residual = 0.0;
};

/// Flow of basis field `field_index` from each start point (normally points
/// on {f = 0}). Throws DegenerateBasis if the basis is not generically of
/// full rank.
FlowProbeReport flow_invariance_probe(const FieldBasis& basis, const Poly& f,
                                      std::size_t field_index, const std::vector<Point>& starts,
                                      const FlowConfig& config = {});

}  // namespace vfm
