#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vfm/matrix.hpp"
#include "vfm/metric.hpp"

namespace vfm {

/// Generators of a lattice in C^n, stored exactly.
struct LatticeData {
  int n = 0;
  std::vector<ExactVector> generators;

  /// Validates dimensions and rejects zero generators.
  LatticeData(int n, std::vector<ExactVector> generators);
};

/// Adapted coordinates zeta = T z in which the real span of the lattice is
/// C^k + Re(C^l) + 0. Columns of P = T^-1 are the adapted basis: k complex
/// directions, l real directions, then m standard vectors.
struct NormalForm {
  int n = 0;
  int k = 0;
  int l = 0;
  int m = 0;  // n - k - l; the number of additive C factors
  int real_rank = 0;  // dim_R of the real span = 2k + l
  ExactMatrix P;
  ExactMatrix T;
  std::vector<ExactVector> generators;  // copied from the lattice
};

NormalForm normal_form(const LatticeData& lattice);

/// True iff the complex span of the generators is C^n, i.e. m = 0.
bool semi_torus_check(const LatticeData& lattice);

/// Hermitian matrices parametrized by n^2 reals: the diagonal entries, then
/// Re and Im of each entry above the diagonal in row-major order.
ExactMatrix hermitian_from_parameters(int n, const std::vector<mpq_class>& params);

struct StokesSystem {
  ExactMatrix constraints;  // one row per generator pair, n^2 columns
  std::size_t solution_dim = 0;
  std::vector<ExactMatrix> solution_basis;  // hermitian matrices
};

/// Im(a^t omega conj(b)), the integral of omega over the torus spanned by a, b
/// up to a factor 2.
ExactScalar stokes_value(const ExactVector& a, const ExactMatrix& omega, const ExactVector& b);
double stokes_value(const ExactVector& a, const HermitianMatrix& omega, const ExactVector& b);

/// Im(g_i^t omega conj(g_j)) = 0 for every generator pair i < j.
StokesSystem stokes_constraints(const LatticeData& lattice);

struct ConeDimension {
  bool asserted = false;  // the closed formula applies only when m = 0
  int value = 0;          // n^2 - l(l+1)/2 when asserted
  std::size_t stokes_dim = 0;
  std::string note;
};

/// Never throws for m > 0; the result then carries only the Stokes diagnostic.
ConeDimension cone_dimension(const NormalForm& nf);

/// Change of coordinates of a (1,1)-form: omega' = P^t omega conj(P).
ExactMatrix to_adapted(const ExactMatrix& omega, const NormalForm& nf);
HermitianMatrix to_adapted(const HermitianMatrix& omega, const NormalForm& nf);

/// Real quadratic form phi(v) = v^t Q v in v = (Re z_1..Re z_n, Im z_1..Im z_n).
struct QuadPotential {
  int n = 0;
  ExactMatrix Q;  // 2n x 2n, real symmetric

  ExactScalar evaluate(const ExactVector& z) const;
  /// The constant matrix H_ab = d^2 phi / dz_a d conj(z_b).
  ExactMatrix ddbar() const;
  std::string str() const;
};

struct PotentialResult {
  QuadPotential phi;
  ExactMatrix residual;  // omega - i ddbar phi
};

/// omega in adapted coordinates with zero k x k and k x l blocks and a real
/// l x l block (PatternViolation otherwise). The residual is supported on the
/// k x m blocks; it vanishes when m = 0.
PotentialResult build_potential(const ExactMatrix& omega, const NormalForm& nf);
/// Converts the entries exactly (every double is a dyadic rational).
PotentialResult build_potential(const HermitianMatrix& omega, const NormalForm& nf);

/// Class of an invariant Kaehler form modulo exact forms, held as the
/// adapted-coordinate matrix with the real part of its l x l block removed.
struct ConeClass {
  NormalForm nf;
  HermitianMatrix representative;
};

struct ExactConeClass {
  NormalForm nf;
  ExactMatrix representative;
};

/// omega in the original coordinates. Throws NotSemiTorus when m > 0.
ConeClass class_project(const HermitianMatrix& omega, const NormalForm& nf);
ExactConeClass class_project(const ExactMatrix& omega, const NormalForm& nf);

/// Representatives agree to 1e-12 relative to their size.
bool class_equal(const ConeClass& a, const ConeClass& b);
bool class_equal(const ExactConeClass& a, const ExactConeClass& b);

/// [[cosh r, i sinh r], [-i sinh r, cosh r]].
HermitianMatrix c_family(double r);

}  // namespace vfm
