#include "vfm/flow.hpp"

#include <cmath>

#include "vfm/errors.hpp"

namespace vfm {

namespace {

double relative_residual(const Poly& f, const Point& z) {
  const double scale = 1.0 + std::pow(norm(z), std::max(f.degree(), 0));
  return std::abs(f.evaluate(z)) / scale;
}

Point axpy(const Point& z, double a, const Point& k) {
  Point out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out[i] = z[i] + a * k[i];
  return out;
}

}  // namespace

FlowTrajectory integrate_flow(const VectorField& field, const Poly& f_in, const Point& start,
                              const FlowConfig& config) {
  if (config.steps <= 0) throw InvalidArgument("flow probe needs a positive step count");
  const Poly f = f_in.with_vars(field.chart().vars);
  const double h = config.t_max / config.steps;
  FlowTrajectory out;
  out.start = start;
  Point z = start;
  out.max_residual = relative_residual(f, z);
  for (int s = 1; s <= config.steps; ++s) {
    const Point k1 = field.evaluate(z);
    const Point k2 = field.evaluate(axpy(z, h / 2, k1));
    const Point k3 = field.evaluate(axpy(z, h / 2, k2));
    const Point k4 = field.evaluate(axpy(z, h, k3));
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += h / 6 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    const double nz = norm(z);
    if (!std::isfinite(nz) || nz > config.blowup_bound) {
      throw BlowupDetected("trajectory norm exceeded " + std::to_string(config.blowup_bound) +
                           " at t = " + std::to_string(s * h));
    }
    const double r = relative_residual(f, z);
    if (r > out.max_residual) {
      out.max_residual = r;
      out.t_at_max = s * h;
    }
  }
  out.end = z;
  return out;
}

FlowProbeReport flow_invariance_probe(const FieldBasis& basis, const Poly& f,
                                      std::size_t field_index, const std::vector<Point>& starts,
                                      const FlowConfig& config) {
  if (field_index >= basis.size()) throw InvalidArgument("flow probe: field index out of range");
  if (generic_rank(basis) < basis.size()) throw DegenerateBasis("basis does not generate generically");
  FlowProbeReport report;
  report.field_index = field_index;
  for (const auto& p : starts) {
    report.trajectories.push_back(integrate_flow(basis[field_index], f, p, config));
    report.max_residual = std::max(report.max_residual, report.trajectories.back().max_residual);
  }
  return report;
}

}  // namespace vfm
