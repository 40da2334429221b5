#include "vfm/fields.hpp"

#include <algorithm>
#include <set>

#include "vfm/algebra.hpp"
#include "vfm/errors.hpp"
#include "vfm/parse.hpp"

namespace vfm {

Chart Chart::affine(std::vector<std::string> vars) {
  Chart c;
  c.kind = Kind::affine;
  c.n = static_cast<int>(vars.size());
  c.vars = std::move(vars);
  return c;
}

Chart Chart::affine(int n) { return affine(z_vars(1, n)); }

Chart Chart::projective_chart(int n, int i) {
  if (i < 0 || i > n) throw InvalidArgument("chart index out of range");
  Chart c;
  c.kind = Kind::projective_chart;
  c.n = n;
  c.index = i;
  for (int j = 0; j <= n; ++j)
    if (j != i) c.vars.push_back("z" + std::to_string(j));
  return c;
}

Chart Chart::projective_space(int n) {
  Chart c;
  c.kind = Kind::projective_space;
  c.n = n;
  c.vars = z_vars(0, n);
  return c;
}

std::string Chart::name() const {
  switch (kind) {
    case Kind::affine:
      return "C" + std::to_string(n);
    case Kind::projective_chart:
      return "U" + std::to_string(index) + " of P" + std::to_string(n);
    case Kind::projective_space:
      return "P" + std::to_string(n);
  }
  return {};
}

VectorField::VectorField(Chart chart, std::vector<Poly> components)
    : chart_(std::move(chart)), components_(std::move(components)) {
  if (components_.size() != chart_.vars.size()) {
    throw InvalidArgument("vector field on " + chart_.name() + " needs " +
                          std::to_string(chart_.vars.size()) + " components");
  }
  for (auto& c : components_) c = c.with_vars(chart_.vars);
}

VectorField VectorField::parse(const Chart& chart, std::string_view text) {
  return {chart, parse_field(text, chart.vars)};
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly VectorField::apply(const Poly& f_in) const {
  const Poly f = f_in.with_vars(merge_vars(chart_.vars, f_in.vars()));
  Poly out(f.vars());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (components_[k].is_zero()) continue;
    out += components_[k] * f.derivative(chart_.vars[k]);
  }
  return out;
}

std::vector<std::complex<double>> VectorField::evaluate(std::span<const std::complex<double>> point) const {
  std::vector<std::complex<double>> out(components_.size());
  for (std::size_t k = 0; k < components_.size(); ++k) out[k] = components_[k].evaluate(point);
  return out;
}

VectorField VectorField::operator-() const {
  VectorField out = *this;
  for (auto& c : out.components_) c = -c;
  return out;
}

namespace {

void require_same_chart(const VectorField& a, const VectorField& b) {
  if (!(a.chart() == b.chart())) {
    throw ChartMismatch("fields live on " + a.chart().name() + " and " + b.chart().name());
  }
}

}  // namespace

VectorField operator+(const VectorField& a, const VectorField& b) {
  require_same_chart(a, b);
  VectorField out = a;
  for (std::size_t k = 0; k < out.components_.size(); ++k) out.components_[k] += b.components_[k];
  return out;
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + (-b); }

VectorField operator*(const ExactScalar& c, const VectorField& v) {
  VectorField out = v;
  for (auto& comp : out.components_) comp *= c;
  return out;
}

bool operator==(const VectorField& a, const VectorField& b) {
  return a.chart_ == b.chart_ && a.components_ == b.components_;
}

std::string VectorField::str() const { return field_str(components_, chart_.vars); }

ProjectiveField::ProjectiveField(int n, std::vector<Poly> forms) : n_(n), forms_(std::move(forms)) {
  const auto vars = z_vars(0, n);
  if (forms_.size() != vars.size()) {
    throw InvalidArgument("projective field on P" + std::to_string(n) + " needs " +
                          std::to_string(vars.size()) + " components");
  }
  for (auto& f : forms_) {
    f = f.with_vars(vars);
    if (!f.is_zero() && !(f.is_homogeneous() && f.degree() == 1)) {
      throw InvalidArgument("projective field components must be linear forms, got " + f.str());
    }
  }
}

ProjectiveField ProjectiveField::parse(int n, std::string_view text) {
  return {n, parse_field(text, z_vars(0, n))};
}

Poly ProjectiveField::apply(const Poly& f_in) const {
  const auto vars = z_vars(0, n_);
  const Poly f = f_in.with_vars(vars);
  Poly out(vars);
  for (std::size_t k = 0; k < forms_.size(); ++k) {
    if (!forms_[k].is_zero()) out += forms_[k] * f.derivative(k);
  }
  return out;
}

std::string ProjectiveField::str() const { return field_str(forms_, z_vars(0, n_)); }

Poly dehomogenize(const Poly& f, int n, int chart_index) {
  const auto homogeneous = z_vars(0, n);
  const Chart chart = Chart::projective_chart(n, chart_index);
  const Poly g = f.with_vars(homogeneous)
                     .substitute(static_cast<std::size_t>(chart_index),
                                 Poly::constant(homogeneous, ExactScalar(1)));
  return g.with_vars(chart.vars);
}

VectorField localize(const ProjectiveField& v, int chart_index) {
  const int n = v.n();
  const Chart chart = Chart::projective_chart(n, chart_index);
  const Poly li = dehomogenize(v.forms()[static_cast<std::size_t>(chart_index)], n, chart_index);
  std::vector<Poly> comps;
  for (int j = 0; j <= n; ++j) {
    if (j == chart_index) continue;
    const Poly lj = dehomogenize(v.forms()[static_cast<std::size_t>(j)], n, chart_index);
    const Poly xj = Poly::variable(chart.vars, "z" + std::to_string(j));
    comps.push_back(lj - xj * li);
  }
  return {chart, std::move(comps)};
}

FieldBasis::FieldBasis(std::vector<VectorField> fields) : fields_(std::move(fields)) {
  if (fields_.empty()) throw InvalidArgument("empty field basis");
  chart_ = fields_.front().chart();
  for (const auto& f : fields_) {
    if (!(f.chart() == chart_)) throw ChartMismatch("basis fields live on different charts");
  }
  if (fields_.size() != chart_.vars.size()) {
    throw InvalidArgument("basis on " + chart_.name() + " needs exactly " +
                          std::to_string(chart_.vars.size()) + " fields");
  }
}

Matrix<Poly> FieldBasis::matrix() const {
  Matrix<Poly> m(fields_.size(), chart_.vars.size());
  for (std::size_t i = 0; i < fields_.size(); ++i)
    for (std::size_t k = 0; k < chart_.vars.size(); ++k) m(i, k) = fields_[i][k];
  return m;
}

FieldBasis localize(const std::vector<ProjectiveField>& fields, int chart_index) {
  std::vector<VectorField> out;
  for (const auto& f : fields) out.push_back(localize(f, chart_index));
  return FieldBasis(std::move(out));
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  require_same_chart(v, w);
  std::vector<Poly> comps;
  for (std::size_t k = 0; k < v.dimension(); ++k) comps.push_back(v.apply(w[k]) - w.apply(v[k]));
  return {v.chart(), std::move(comps)};
}

SpanMembership span_membership(const VectorField& w, const FieldBasis& basis) {
  require_same_chart(w, basis[0]);
  const std::size_t m = basis.size();
  // One equation per (slot, monomial), slots in order, monomials grlex-descending.
  std::vector<std::pair<std::size_t, Exponent>> equations;
  for (std::size_t k = 0; k < w.dimension(); ++k) {
    std::set<Exponent, GrlexGreater> monomials;
    for (const auto& [e, c] : w[k].terms()) monomials.insert(e);
    for (std::size_t i = 0; i < m; ++i)
      for (const auto& [e, c] : basis[i][k].terms()) monomials.insert(e);
    for (const auto& e : monomials) equations.emplace_back(k, e);
  }
  ExactMatrix a(equations.size(), m);
  ExactVector b(equations.size());
  for (std::size_t r = 0; r < equations.size(); ++r) {
    const auto& [k, e] = equations[r];
    for (std::size_t i = 0; i < m; ++i) a(r, i) = basis[i][k].coefficient(e);
    b[r] = w[k].coefficient(e);
  }
  SpanMembership out;
  const LinearSolution sol = solve_linear(a, b);
  if (sol.consistent) {
    out.inside = true;
    out.coefficients = sol.particular;
    return out;
  }
  // Smallest inconsistent prefix of the equation list names the certificate.
  std::size_t lo = 1;
  std::size_t hi = equations.size();
  auto prefix_consistent = [&](std::size_t rows) {
    ExactMatrix ap(rows, m);
    ExactVector bp(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t i = 0; i < m; ++i) ap(r, i) = a(r, i);
      bp[r] = b[r];
    }
    return solve_linear(ap, bp).consistent;
  };
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (prefix_consistent(mid)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  const auto& [slot, mono] = equations[lo - 1];
  out.inside = false;
  out.certificate_slot = slot;
  out.certificate_monomial = mono;
  const Poly monomial = Poly::monomial(w.chart().vars, mono, ExactScalar(1));
  out.certificate = "monomial " + monomial.str() + " in the " +
                    derivative_token(w.chart().vars[slot]) + " slot is unmatched";
  return out;
}

AbelianReport is_abelian(const FieldBasis& basis) {
  AbelianReport out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      VectorField b = bracket(basis[i], basis[j]);
      if (!b.is_zero()) {
        out.abelian = false;
        out.witness = BracketWitness{i, j, std::move(b)};
        return out;
      }
    }
  }
  return out;
}

SubalgebraReport is_subalgebra(const FieldBasis& basis) {
  SubalgebraReport out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      VectorField b = bracket(basis[i], basis[j]);
      if (b.is_zero()) continue;
      SpanMembership sm = span_membership(b, basis);
      if (!sm.inside) {
        out.subalgebra = false;
        out.witness = BracketWitness{i, j, std::move(b)};
        out.membership = std::move(sm);
        return out;
      }
    }
  }
  return out;
}

std::size_t generic_rank(const FieldBasis& basis) { return generic_rank(basis.matrix()); }

}  // namespace vfm
