#pragma once

#include <optional>
#include <vector>

#include "vfm/matrix.hpp"
#include "vfm/poly.hpp"

namespace vfm {

struct DivisionResult {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division by a single divisor under graded-lex order. The
/// remainder has no term divisible by the divisor's leading monomial.
DivisionResult divide(const Poly& a, const Poly& b);

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// Monic gcd over Q[i]. gcd(0, 0) is 0; otherwise the result has leading
/// coefficient 1 and divides both inputs.
Poly poly_gcd(const Poly& a, const Poly& b);

struct SquarefreeFactor {
  Poly factor;
  unsigned multiplicity = 1;
};

struct SquarefreeDecomposition {
  ExactScalar unit;                      // p = unit * prod factor^mult
  std::vector<SquarefreeFactor> factors; // monic, pairwise coprime, ascending multiplicity
};

/// Yun decomposition, variable by variable. Throws InvalidArgument for p = 0.
SquarefreeDecomposition squarefree_decompose(const Poly& p);

/// Product of the square-free parts, i.e. the radical up to a unit.
Poly squarefree_part(const SquarefreeDecomposition& d);

/// Fraction-free (Bareiss) determinant with row pivoting.
Poly poly_det(const Matrix<Poly>& m);

/// Rank over the field of rational functions.
std::size_t generic_rank(const Matrix<Poly>& m);

}  // namespace vfm
