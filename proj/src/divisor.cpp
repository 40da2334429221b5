#include "vfm/divisor.hpp"

#include <algorithm>

#include "vfm/errors.hpp"

namespace vfm {

namespace {

DivisorSection make_section(Chart chart, const Poly& det, bool homogeneous) {
  DivisorSection d;
  d.chart = std::move(chart);
  d.section = det.with_vars(d.chart.vars).monic();
  d.decomposition = squarefree_decompose(d.section);
  d.homogeneous = homogeneous;
  d.degree = d.section.degree();
  return d;
}

TangencyResult tangency_of(const Poly& image, const Poly& f) {
  TangencyResult r;
  r.image = image;
  auto [q, rem] = divide(image, f);
  r.quotient = std::move(q);
  r.remainder = std::move(rem);
  r.tangent = r.remainder.is_zero();
  return r;
}

}  // namespace

Poly DivisorSection::reduced_section() const {
  Poly out = Poly::constant(chart.vars, ExactScalar(1));
  for (const auto& f : decomposition.factors) out *= f.factor;
  return out.with_vars(chart.vars);
}

DivisorSection divisor_affine(const FieldBasis& basis) {
  const Poly det = poly_det(basis.matrix());
  if (det.is_zero()) {
    throw DegenerateBasis("the basis fields are everywhere dependent on " + basis.chart().name() +
                          " (det S = 0)");
  }
  return make_section(basis.chart(), det, false);
}

DivisorSection divisor_projective(const std::vector<ProjectiveField>& fields) {
  if (fields.empty()) throw InvalidArgument("no fields");
  const int n = fields.front().n();
  if (fields.size() != static_cast<std::size_t>(n)) {
    throw InvalidArgument("P" + std::to_string(n) + " needs exactly " + std::to_string(n) + " fields");
  }
  const Chart chart = Chart::projective_space(n);
  const std::size_t size = static_cast<std::size_t>(n) + 1;
  Matrix<Poly> m(size, size);
  for (std::size_t c = 0; c < size; ++c) m(0, c) = Poly::variable(chart.vars, c);
  for (std::size_t r = 0; r < fields.size(); ++r) {
    if (fields[r].n() != n) throw ChartMismatch("fields on different projective spaces");
    for (std::size_t c = 0; c < size; ++c) m(r + 1, c) = fields[r].forms()[c];
  }
  const Poly det = poly_det(m);
  if (det.is_zero()) {
    throw DegenerateBasis("v(1) ^ ... ^ v(n) vanishes identically on P" + std::to_string(n) +
                          "; the fields do not act almost transitively");
  }
  return make_section(chart, det, true);
}

DivisorSection restrict_to_chart(const DivisorSection& projective, int chart_index) {
  if (projective.chart.kind != Chart::Kind::projective_space) {
    throw InvalidArgument("restrict_to_chart needs a projective divisor");
  }
  const int n = projective.chart.n;
  return make_section(Chart::projective_chart(n, chart_index),
                      dehomogenize(projective.section, n, chart_index), false);
}

bool is_reduced(const DivisorSection& d) {
  return std::all_of(d.decomposition.factors.begin(), d.decomposition.factors.end(),
                     [](const SquarefreeFactor& f) { return f.multiplicity == 1; });
}

std::vector<TangencyResult> tangency_check(const FieldBasis& basis, const DivisorSection& d) {
  if (!(basis.chart() == d.chart)) {
    throw ChartMismatch("basis on " + basis.chart().name() + ", divisor on " + d.chart.name());
  }
  std::vector<TangencyResult> out;
  for (const auto& s : basis.fields()) out.push_back(tangency_of(s.apply(d.section), d.section));
  return out;
}

std::vector<TangencyResult> tangency_check(const std::vector<ProjectiveField>& fields,
                                           const DivisorSection& d) {
  if (d.chart.kind != Chart::Kind::projective_space) {
    throw ChartMismatch("projective fields need a projective divisor");
  }
  std::vector<TangencyResult> out;
  for (const auto& s : fields) out.push_back(tangency_of(s.apply(d.section), d.section));
  return out;
}

}  // namespace vfm
