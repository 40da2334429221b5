#include "vfm/report.hpp"

#include <algorithm>
#include <sstream>

#include "vfm/cone.hpp"
#include "vfm/divisor.hpp"
#include "vfm/flow.hpp"
#include "vfm/metric.hpp"
#include "vfm/parse.hpp"

namespace vfm {

namespace {

// Each probe draws from its own stream so `probe --ricci` reproduces the
// ricci section of `analyze` exactly.
constexpr std::uint64_t kCompletenessStream = 0;
constexpr std::uint64_t kRicciStream = 1;
constexpr std::uint64_t kFlowStream = 2;

constexpr double kHermitianTol = 1e-12;
constexpr double kDivisorFloor = 1e-9;

Rng stream(const Scenario& s, std::uint64_t k) { return Rng(s.probe.seed + 0x9e3779b97f4a7c15ULL * k); }

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& z : p) out.push_back(complex_json(z));
  return out;
}

Json matrix_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json header(const Scenario& s, const std::string& command) {
  Json j;
  j["schema"] = kReportSchema;
  j["command"] = command;
  j["scenario"] = s.name;
  j["ambient"] = s.ambient();
  Json fields = Json::array();
  for (std::size_t i = 0; i < s.field_names.size(); ++i)
    fields.push_back({{"name", s.field_names[i]}, {"field", s.field_text(i)}});
  j["fields"] = std::move(fields);
  j["config"] = {{"seed", s.probe.seed},
                 {"h", s.probe.h},
                 {"depth", s.probe.depth},
                 {"points", s.probe.points},
                 {"paths", s.probe.paths},
                 {"steps", s.probe.steps},
                 {"t_max", s.probe.t_max},
                 {"tolerances",
                  {{"ricci", s.probe.ricci_tol},
                   {"flow", s.probe.flow_tol},
                   {"hermitian", kHermitianTol},
                   {"divisor_floor", kDivisorFloor}}}};
  return j;
}

/// The basis used for pointwise work: U0 for projective scenarios.
FieldBasis working_basis(const Scenario& s) {
  if (s.projective) return localize(s.projective_fields, 0);
  return FieldBasis(s.affine_fields);
}

DivisorSection compute_divisor(const Scenario& s) {
  if (s.projective) return divisor_projective(s.projective_fields);
  return divisor_affine(FieldBasis(s.affine_fields));
}

std::vector<TangencyResult> compute_tangency(const Scenario& s, const DivisorSection& d) {
  if (s.projective) return tangency_check(s.projective_fields, d);
  return tangency_check(FieldBasis(s.affine_fields), d);
}

bool all_tangent(const std::vector<TangencyResult>& t) {
  return std::all_of(t.begin(), t.end(), [](const TangencyResult& r) { return r.tangent; });
}

Json divisor_json(const Scenario& s, const DivisorSection& d, const std::vector<TangencyResult>& tangency) {
  Json factors = Json::array();
  for (const auto& f : d.decomposition.factors)
    factors.push_back({{"poly", f.factor.str()}, {"mult", f.multiplicity}});
  Json flags = Json::array();
  Json detail = Json::array();
  for (std::size_t i = 0; i < tangency.size(); ++i) {
    flags.push_back(tangency[i].tangent);
    Json t = {{"field", s.field_names[i]}, {"tangent", tangency[i].tangent}, {"image", tangency[i].image.str()}};
    if (!tangency[i].tangent) t["remainder"] = tangency[i].remainder.str();
    detail.push_back(std::move(t));
  }
  return {{"chart", d.chart.name()},
          {"section", d.section.str()},
          {"degree", d.degree},
          {"factors", std::move(factors)},
          {"reduced", is_reduced(d)},
          {"tangent_fields", std::move(flags)},
          {"tangency", std::move(detail)}};
}

Json witness_json(const Scenario& s, const BracketWitness& w) {
  return {{"first", s.field_names[w.first]},
          {"second", s.field_names[w.second]},
          {"bracket", w.bracket.str()}};
}

Json algebra_json(const Scenario& s, const FieldBasis& basis) {
  const AbelianReport ab = is_abelian(basis);
  const SubalgebraReport sub = is_subalgebra(basis);
  Json j = {{"chart", basis.chart().name()}, {"abelian", ab.abelian}};
  j["abelian_witness"] = ab.witness ? witness_json(s, *ab.witness) : Json(nullptr);
  j["subalgebra"] = sub.subalgebra;
  if (sub.witness) {
    Json w = witness_json(s, *sub.witness);
    if (sub.membership) w["certificate"] = sub.membership->certificate;
    j["subalgebra_witness"] = std::move(w);
  } else {
    j["subalgebra_witness"] = nullptr;
  }
  return j;
}

Json kahler_json(const MetricModel& m) {
  const KahlerDefect kd = kahler_defect(m);
  Json residuals = Json::array();
  for (const auto& r : kd.residuals)
    residuals.push_back({{"i", r.i}, {"j", r.j}, {"l", r.l}, {"value", r.value.str()}});
  return {{"chart", m.basis.chart().name()}, {"kahler", kd.kahler}, {"residuals", std::move(residuals)}};
}

Json ricci_json(const Scenario& s, const MetricModel& m) {
  Rng rng = stream(s, kRicciStream);
  const auto points = sample_regular_points(m, static_cast<std::size_t>(s.probe.points), rng);
  const RicciCertificate cert = ricci_certificate(m, points);
  Json table = Json::array();
  double worst = 0.0;
  bool all_pd = true;
  for (const auto& exact : points) {
    const Point p = to_point(exact);
    const double value = ricci_probe(m, p, s.probe.h);
    const bool pd = positive_definite(metric_at(m, p));
    worst = std::max(worst, value);
    all_pd = all_pd && pd;
    table.push_back({{"z", point_json(p)}, {"value", value}, {"positive_definite", pd}});
  }
  const bool flat = cert.holds && all_pd && worst < s.probe.ricci_tol;
  return {{"chart", m.basis.chart().name()},
          {"ricci_flat", flat},
          {"certificate", {{"holds", cert.holds}, {"points", cert.points}, {"reason", cert.reason}}},
          {"h", s.probe.h},
          {"tolerance", s.probe.ricci_tol},
          {"max", worst},
          {"positive_definite", all_pd},
          {"points", std::move(table)}};
}

std::string completeness_word(PathVerdict v) {
  switch (v) {
    case PathVerdict::divergent: return "complete";
    case PathVerdict::finite: return "incomplete";
    case PathVerdict::inconclusive: break;
  }
  return "inconclusive";
}

Json completeness_json(const Scenario& s, const MetricModel& m, const DivisorSection& d, bool tangent,
                       bool subalgebra) {
  Rng rng = stream(s, kCompletenessStream);
  const auto paths = static_cast<std::size_t>(s.probe.paths);
  const CompletenessAssessment a =
      s.projective ? assess_completeness(s.projective_fields, rng, paths, s.probe.depth)
                   : assess_completeness(m, d.reduced_section(), rng, paths, s.probe.depth);
  const bool complete = a.verdict == PathVerdict::divergent;
  Json table = Json::array();
  for (const auto& p : a.paths) {
    Json row = {{"kind", to_string(p.kind)}, {"chart", p.chart}, {"base", point_json(p.base)}};
    if (p.kind == ApproachKind::flow)
      row["field"] = s.field_names[p.field];
    else
      row["kernel_aligned"] = p.kernel_aligned;
    row["direction"] = point_json(p.direction);
    row["verdict"] = to_string(p.probe.verdict);
    row["total"] = p.probe.total;
    row["lengths"] = p.probe.lengths;
    table.push_back(std::move(row));
  }
  return {{"verdict", completeness_word(a.verdict)},
          {"complete", complete},
          {"tangent", tangent},
          {"subalgebra", subalgebra},
          {"agree", a.verdict != PathVerdict::inconclusive && complete == tangent && tangent == subalgebra},
          {"paths", std::move(table)}};
}

Json flow_json(const Scenario& s, const DivisorSection& d) {
  FieldBasis basis;
  DivisorSection local;
  bool found = false;
  if (s.projective) {
    for (int i = 0; i <= s.n && !found; ++i) {
      local = restrict_to_chart(d, i);
      if (!local.empty()) {
        basis = localize(s.projective_fields, i);
        found = true;
      }
    }
  } else {
    local = d;
    basis = FieldBasis(s.affine_fields);
    found = !local.empty();
  }
  if (!found) return {{"chart", nullptr}, {"invariant", true}, {"note", "empty divisor"}, {"fields", Json::array()}};

  Rng rng = stream(s, kFlowStream);
  const Poly f = local.reduced_section();
  const auto starts = sample_zero_set(f, static_cast<std::size_t>(s.probe.paths), rng);
  FlowConfig cfg;
  cfg.t_max = s.probe.t_max;
  cfg.steps = s.probe.steps;
  bool invariant = true;
  double worst = 0.0;
  Json rows = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Json row = {{"field", s.field_names[i]}};
    try {
      const FlowProbeReport r = flow_invariance_probe(basis, f, i, starts, cfg);
      row["max_residual"] = r.max_residual;
      double t_at = 0.0;
      for (const auto& t : r.trajectories)
        if (t.max_residual == r.max_residual) {
          t_at = t.t_at_max;
          break;
        }
      row["t_at_max"] = t_at;
      row["blowup"] = false;
      worst = std::max(worst, r.max_residual);
      invariant = invariant && r.max_residual < s.probe.flow_tol;
    } catch (const BlowupDetected& e) {
      row["max_residual"] = nullptr;
      row["blowup"] = true;
      row["message"] = e.what();
      invariant = false;
    }
    rows.push_back(std::move(row));
  }
  return {{"chart", basis.chart().name()},
          {"divisor", f.str()},
          {"starts", starts.size()},
          {"invariant", invariant},
          {"max_residual", worst},
          {"tolerance", s.probe.flow_tol},
          {"fields", std::move(rows)}};
}

Json cone_json(const Scenario& s) {
  if (!s.lattice) return nullptr;
  const NormalForm nf = normal_form(*s.lattice);
  const ConeDimension cd = cone_dimension(nf);
  Json j = {{"k", nf.k}, {"l", nf.l}, {"m", nf.m}, {"c_factors", nf.m}, {"semi_torus", semi_torus_check(*s.lattice)}};
  j["cone_dim"] = cd.asserted ? Json(cd.value) : Json("n/a");
  j["stokes_dim"] = cd.stokes_dim;
  j["generators"] = s.lattice->generators.size();
  if (!cd.note.empty()) j["note"] = cd.note;
  return j;
}

void render(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar_like = [](const Json& v) {
    if (!v.is_array()) return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const Json& x) {
      return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return y.is_primitive(); }));
    });
  };
  auto inline_text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (scalar_like(value)) {
        out << pad << key << ": " << inline_text(value) << '\n';
      } else {
        out << pad << key << ":\n";
        render(out, value, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (scalar_like(item)) {
        out << pad << "- " << inline_text(item) << '\n';
      } else {
        std::ostringstream body;
        render(body, item, indent + 1);
        std::string text = body.str();
        text.replace(0, pad.size() + 2, pad + "- ");
        out << text;
      }
    }
  } else {
    out << pad << inline_text(j) << '\n';
  }
}

}  // namespace

Json divisor_report(const Scenario& s) {
  Json j = header(s, "divisor");
  const DivisorSection d = compute_divisor(s);
  j["divisor"] = divisor_json(s, d, compute_tangency(s, d));
  return j;
}

Json analyze_report(const Scenario& s) {
  Json j = header(s, "analyze");
  const DivisorSection d = compute_divisor(s);
  const auto tangency = compute_tangency(s, d);
  const FieldBasis basis = working_basis(s);
  const MetricModel m = build_metric(basis);
  const bool subalgebra = is_subalgebra(basis).subalgebra;

  j["divisor"] = divisor_json(s, d, tangency);
  j["algebra"] = algebra_json(s, basis);
  j["kahler"] = kahler_json(m);
  j["ricci"] = ricci_json(s, m);
  j["completeness"] = completeness_json(s, m, d, all_tangent(tangency), subalgebra);
  j["flow"] = flow_json(s, d);
  j["cone"] = cone_json(s);
  return j;
}

Json metric_report(const Scenario& s, const Point& at, int chart) {
  Json j = header(s, "metric");
  if (static_cast<int>(at.size()) != s.n)
    throw InvalidArgument("point needs " + std::to_string(s.n) + " coordinates, got " + std::to_string(at.size()));
  FieldBasis basis;
  if (s.projective) {
    if (chart < 0 || chart > s.n) throw InvalidArgument("chart index must be in 0.." + std::to_string(s.n));
    basis = localize(s.projective_fields, chart);
  } else {
    if (chart != 0) throw InvalidArgument("affine scenarios have a single chart 0");
    basis = FieldBasis(s.affine_fields);
  }
  const MetricModel m = build_metric(basis);
  const HermitianMatrix g = metric_at(m, at);
  const ComplexMatrix sigma = sigma_at(m, at);
  const Complex det_s = m.detS.evaluate(at);
  j["metric"] = {{"chart", basis.chart().name()},
                 {"vars", basis.chart().vars},
                 {"point", point_json(at)},
                 {"det_S", complex_json(det_s)},
                 {"sigma", matrix_json(sigma)},
                 {"g", matrix_json(g)},
                 {"det_g", g.determinant().real()},
                 {"abs_det_sigma_squared", 1.0 / std::norm(det_s)},
                 {"positive_definite", positive_definite(g)}};
  return j;
}

Json cone_report(const Scenario& s) {
  if (!s.lattice) throw InvalidArgument("scenario '" + s.name + "' declares no lattice");
  Json j = header(s, "cone");
  j["cone"] = cone_json(s);
  return j;
}

Json probe_report(const Scenario& s, ProbeSelection which) {
  if (!which.complete && !which.ricci && !which.flow) which = {true, true, true};
  Json j = header(s, "probe");
  const DivisorSection d = compute_divisor(s);
  const FieldBasis basis = working_basis(s);
  const MetricModel m = build_metric(basis);
  if (which.ricci) j["ricci"] = ricci_json(s, m);
  if (which.complete)
    j["completeness"] = completeness_json(s, m, d, all_tangent(compute_tangency(s, d)), is_subalgebra(basis).subalgebra);
  if (which.flow) j["flow"] = flow_json(s, d);
  return j;
}

Point parse_point(const std::string& text) {
  Point p;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    p.push_back(parse_scalar(std::string_view(text).substr(start, end - start), {1, static_cast<int>(start) + 1})
                    .to_complex());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return p;
}

Json error_report(const std::string& kind, const std::string& what) {
  return {{"schema", kReportSchema}, {"error", {{"kind", kind}, {"message", what}}}};
}

Json error_report(const Error& e) {
  Json j = error_report(e.kind(), e.what());
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["error"]["line"] = pe->line();
    j["error"]["column"] = pe->column();
  }
  return j;
}

std::string render_text(const Json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

int exit_code_for(const std::string& error_kind) {
  if (error_kind == "DegenerateBasis") return 2;
  if (error_kind == "ParseError") return 3;
  return 1;
}

}  // namespace vfm
