#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vfm/matrix.hpp"
#include "vfm/poly.hpp"

namespace vfm {

/// Coordinate system a vector field lives on.
///
/// - affine: C^n with user-chosen variable names.
/// - projective_chart: U_i = {z_i != 0} in P^n, coordinates z_j/z_i named
///   `z<j>` for j != i.
/// - projective_space: homogeneous coordinates z0..zn of P^n.
struct Chart {
  enum class Kind { affine, projective_chart, projective_space };

  Kind kind = Kind::affine;
  int n = 0;       // complex dimension of the manifold
  int index = -1;  // chart index for projective_chart
  std::vector<std::string> vars;

  static Chart affine(std::vector<std::string> vars);
  static Chart affine(int n);  // variables z1..zn
  static Chart projective_chart(int n, int i);
  static Chart projective_space(int n);

  std::string name() const;
  bool operator==(const Chart&) const = default;
};

/// Holomorphic polynomial vector field sum_k c_k d/d(vars_k) on a chart.
class VectorField {
 public:
  VectorField() = default;
  VectorField(Chart chart, std::vector<Poly> components);
  /// Parse from the field grammar, e.g. "x^2 dy".
  static VectorField parse(const Chart& chart, std::string_view text);

  const Chart& chart() const { return chart_; }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t k) const { return components_[k]; }
  std::size_t dimension() const { return components_.size(); }
  bool is_zero() const;

  /// Derivation applied to f: sum_k c_k * df/d(vars_k).
  Poly apply(const Poly& f) const;
  std::vector<std::complex<double>> evaluate(std::span<const std::complex<double>> point) const;

  VectorField operator-() const;
  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const ExactScalar& c, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b);

  std::string str() const;

 private:
  Chart chart_;
  std::vector<Poly> components_;
};

/// Global field on P^n as n+1 linear forms in z0..zn, a representative of its
/// class modulo the Euler field.
class ProjectiveField {
 public:
  ProjectiveField(int n, std::vector<Poly> forms);
  static ProjectiveField parse(int n, std::string_view text);

  int n() const { return n_; }
  const std::vector<Poly>& forms() const { return forms_; }
  /// Homogeneous derivation sum_k l^k df/dz^k. Modulo the Euler field this
  /// is well defined up to adding deg(f) * f.
  Poly apply(const Poly& f) const;
  std::string str() const;

 private:
  int n_;
  std::vector<Poly> forms_;
};

/// Restriction to U_i: x^j' = l^j - x^j l^i with z^i = 1.
VectorField localize(const ProjectiveField& v, int chart_index);

/// f(z) with z_i = 1, expressed in the chart variables of U_i.
Poly dehomogenize(const Poly& f, int n, int chart_index);

/// Ordered list of n fields on a common chart; row i of matrix() holds the
/// components of field i.
class FieldBasis {
 public:
  FieldBasis() = default;
  explicit FieldBasis(std::vector<VectorField> fields);

  const Chart& chart() const { return chart_; }
  const std::vector<VectorField>& fields() const { return fields_; }
  const VectorField& operator[](std::size_t i) const { return fields_[i]; }
  std::size_t size() const { return fields_.size(); }
  Matrix<Poly> matrix() const;

 private:
  Chart chart_;
  std::vector<VectorField> fields_;
};

FieldBasis localize(const std::vector<ProjectiveField>& fields, int chart_index);

/// [v, w]^k = v(w^k) - w(v^k). Throws ChartMismatch.
VectorField bracket(const VectorField& v, const VectorField& w);

struct SpanMembership {
  bool inside = false;
  ExactVector coefficients;  // w = sum c_i s^(i) when inside
  // When outside: the first (slot, monomial) equation, in canonical order,
  // that makes the constant-coefficient system inconsistent.
  std::size_t certificate_slot = 0;
  Exponent certificate_monomial;
  std::string certificate;
};

SpanMembership span_membership(const VectorField& w, const FieldBasis& basis);

struct BracketWitness {
  std::size_t first = 0;
  std::size_t second = 0;
  VectorField bracket;
};

struct AbelianReport {
  bool abelian = true;
  std::optional<BracketWitness> witness;  // first nonzero bracket
};

AbelianReport is_abelian(const FieldBasis& basis);

struct SubalgebraReport {
  bool subalgebra = true;
  std::optional<BracketWitness> witness;     // first bracket outside the span
  std::optional<SpanMembership> membership;  // its certificate
};

SubalgebraReport is_subalgebra(const FieldBasis& basis);

/// Rank of the component matrix over the rational-function field.
std::size_t generic_rank(const FieldBasis& basis);

}  // namespace vfm
