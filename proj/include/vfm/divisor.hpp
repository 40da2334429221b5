#pragma once

#include <vector>

#include "vfm/algebra.hpp"
#include "vfm/fields.hpp"

namespace vfm {

/// Zero locus of the wedge of the basis fields, as a normalized section f
/// (leading coefficient 1) with its square-free decomposition.
///
/// "Multiplicity" here is the exponent in the square-free decomposition. A
/// square-free factor may itself be reducible over Q[i]; e.g. z0*z1*z2 is a
/// single factor of multiplicity 1 covering three lines.
struct DivisorSection {
  Chart chart;
  Poly section;
  SquarefreeDecomposition decomposition;
  bool homogeneous = false;
  int degree = 0;

  bool empty() const { return section.is_constant(); }
  /// Product of the square-free factors.
  Poly reduced_section() const;
};

/// f = det S on the basis' chart. Throws DegenerateBasis when det S == 0.
DivisorSection divisor_affine(const FieldBasis& basis);

/// f = det of the (n+1)x(n+1) matrix with first row (z0..zn) and row i+1 the
/// linear forms of field i. Homogeneous of degree n+1. Throws DegenerateBasis.
DivisorSection divisor_projective(const std::vector<ProjectiveField>& fields);

/// Dehomogenize a projective divisor to chart U_i.
DivisorSection restrict_to_chart(const DivisorSection& projective, int chart_index);

bool is_reduced(const DivisorSection& d);

struct TangencyResult {
  bool tangent = false;
  Poly image;      // s(f)
  Poly quotient;   // s(f) = quotient * f + remainder
  Poly remainder;  // zero iff tangent
};

/// Exact test f | s(f) for each basis field.
std::vector<TangencyResult> tangency_check(const FieldBasis& basis, const DivisorSection& d);
std::vector<TangencyResult> tangency_check(const std::vector<ProjectiveField>& fields,
                                           const DivisorSection& d);

}  // namespace vfm
