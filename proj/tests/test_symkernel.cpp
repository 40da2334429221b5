#include <gtest/gtest.h>

#include "test_support.hpp"
#include "vfm/algebra.hpp"
#include "vfm/errors.hpp"
#include "vfm/ratfunc.hpp"

namespace vfm {
namespace {

using testing::P;
using testing::random_poly;

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> Z012{"z0", "z1", "z2"};

TEST(PolyArith, Examples) {
  EXPECT_EQ((P("x+1", XY) * P("x-1", XY)).str(), "x^2 - 1");
  EXPECT_EQ((P("x", XY) + P("0", XY)), P("x", XY));
  EXPECT_EQ((P("z1", Z012) * P("z2", Z012)).str(), "z1*z2");
}

TEST(PolyArith, MixedVariableListsAreUnified) {
  const Poly a = P("x", {"x"});
  const Poly b = P("y", {"y"});
  const Poly s = a * b + a;
  EXPECT_EQ(s.vars(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(s.str(), "x*y + x");
}

TEST(PolyArith, GrlexPrintingOrder) {
  EXPECT_EQ(P("1 + y + x + x*y + y^2 + x^2", XY).str(), "x^2 + x*y + y^2 + x + y + 1");
}

TEST(Derivative, Examples) {
  EXPECT_EQ(P("x^2", XY).derivative("x").str(), "2*x");
  EXPECT_TRUE(P("x^2", XY).derivative("y").is_zero());
  EXPECT_EQ(P("x^2*y + x", XY).derivative("x").str(), "2*x*y + 1");
}

TEST(Gcd, Examples) {
  EXPECT_EQ(poly_gcd(P("x^2-1", XY), P("x-1", XY)).str(), "x - 1");
  EXPECT_EQ(poly_gcd(P("x", XY), P("y", XY)).str(), "1");
  EXPECT_EQ(poly_gcd(P("z2^3", Z012), P("3*z2^2", Z012)).str(), "z2^2");
}

TEST(Gcd, Multivariate) {
  const Poly g = P("x*y + 2*i*y + 1", XY);
  const Poly a = g * P("x^2 - y", XY);
  const Poly b = g * P("x + y^2 + 3", XY);
  EXPECT_EQ(poly_gcd(a, b), g.monic());
}

TEST(Gcd, PropertyDividesBothAndContainsCommonFactor) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Poly a = random_poly(rng, Z012, 2, 3, true);
    const Poly b = random_poly(rng, Z012, 2, 3, true);
    const Poly c = random_poly(rng, Z012, 2, 3, true);
    if (c.is_zero() || (a.is_zero() && b.is_zero())) continue;
    const Poly ac = a * c;
    const Poly bc = b * c;
    const Poly g = poly_gcd(ac, bc);
    ASSERT_FALSE(g.is_zero());
    EXPECT_TRUE(g.leading_coefficient().is_one());
    EXPECT_TRUE(exact_divide(ac, g).has_value()) << ac.str() << " / " << g.str();
    EXPECT_TRUE(exact_divide(bc, g).has_value()) << bc.str() << " / " << g.str();
    EXPECT_TRUE(exact_divide(g, c.monic()).has_value()) << g.str() << " vs " << c.str();
  }
}

TEST(Squarefree, Examples) {
  auto d = squarefree_decompose(P("z2^3", Z012));
  ASSERT_EQ(d.factors.size(), 1u);
  EXPECT_EQ(d.factors[0].factor.str(), "z2");
  EXPECT_EQ(d.factors[0].multiplicity, 3u);

  d = squarefree_decompose(P("z0*z1*z2", Z012));
  ASSERT_EQ(d.factors.size(), 1u);
  EXPECT_EQ(d.factors[0].factor.str(), "z0*z1*z2");
  EXPECT_EQ(d.factors[0].multiplicity, 1u);

  d = squarefree_decompose(P("x^2*(x-1)", XY));
  ASSERT_EQ(d.factors.size(), 2u);
  EXPECT_EQ(d.factors[0].factor.str(), "x - 1");
  EXPECT_EQ(d.factors[0].multiplicity, 1u);
  EXPECT_EQ(d.factors[1].factor.str(), "x");
  EXPECT_EQ(d.factors[1].multiplicity, 2u);
}

TEST(Squarefree, ZeroIsRejected) { EXPECT_THROW(squarefree_decompose(Poly(XY)), InvalidArgument); }

TEST(Squarefree, PropertyReassemblesExactly) {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(rng, Z012, 1, 3, true);
    const Poly b = random_poly(rng, Z012, 1, 3);
    const Poly c = random_poly(rng, Z012, 2, 2, true);
    Poly p = a * b.pow(2) * c.pow(3) * ExactScalar(mpq_class(3, 2), 1);
    if (p.is_zero()) continue;
    const auto d = squarefree_decompose(p);
    Poly assembled = Poly::constant(Z012, d.unit);
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      const auto& f = d.factors[i];
      assembled *= f.factor.pow(f.multiplicity);
      // Each factor is square-free and the factors are pairwise coprime.
      Poly g = f.factor;
      for (std::size_t v = 0; v < Z012.size(); ++v) g = poly_gcd(g, f.factor.derivative(v));
      EXPECT_TRUE(g.is_constant()) << f.factor.str();
      for (std::size_t j = i + 1; j < d.factors.size(); ++j)
        EXPECT_TRUE(poly_gcd(f.factor, d.factors[j].factor).is_constant());
    }
    EXPECT_EQ(assembled, p);
  }
}

/// Laplace expansion along the first row; independent of Bareiss.
Poly cofactor_det(const Matrix<Poly>& m) {
  if (m.rows() == 1) return m(0, 0);
  Poly sum;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Poly term = m(0, c) * cofactor_det(m.minor(0, c));
    sum = (c % 2 == 0) ? sum + term : sum - term;
  }
  return sum;
}

Matrix<Poly> poly_matrix(const std::vector<std::vector<std::string>>& rows,
                         const std::vector<std::string>& vars) {
  Matrix<Poly> m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = P(rows[r][c], vars);
  return m;
}

TEST(PolyDet, Examples) {
  EXPECT_EQ(poly_det(poly_matrix({{"z1", "0"}, {"0", "z2"}}, Z012)).str(), "z1*z2");
  EXPECT_EQ(poly_det(poly_matrix({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}, Z012)).str(), "1");
  const auto nilpotent = poly_matrix({{"z0", "z1", "z2"}, {"z2", "0", "0"}, {"z1", "z2", "0"}}, Z012);
  EXPECT_EQ(poly_det(nilpotent).str(), "z2^3");
  EXPECT_EQ(cofactor_det(nilpotent).str(), "z2^3");
}

TEST(PolyDet, ZeroPivotNeedsRowSwap) {
  const auto m = poly_matrix({{"0", "x"}, {"y", "1"}}, XY);
  EXPECT_EQ(poly_det(m).str(), "-x*y");
}

TEST(PolyDet, PropertyAgreesWithCofactorExpansion) {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 3 : 4;
    Matrix<Poly> m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, Z012, 1, rng.integer(0, 2), true);
    EXPECT_EQ(poly_det(m), cofactor_det(m));
  }
}

Matrix<RatFunc> rat_matrix(const std::vector<std::vector<std::string>>& rows) {
  return to_ratmat(poly_matrix(rows, XY));
}

Matrix<RatFunc> identity_rat(std::size_t n) {
  Matrix<RatFunc> id(n, n);
  for (std::size_t k = 0; k < n; ++k) id(k, k) = RatFunc(Poly::constant({}, ExactScalar(1)));
  return id;
}

TEST(RatmatInverse, Examples) {
  const auto diag = ratmat_inverse(to_ratmat(poly_matrix({{"z1", "0"}, {"0", "z2"}}, Z012)));
  EXPECT_EQ(diag(0, 0).str(), "(1)/(z1)");
  EXPECT_EQ(diag(1, 1).str(), "(1)/(z2)");
  EXPECT_TRUE(diag(0, 1).is_zero());

  const auto lower = ratmat_inverse(rat_matrix({{"1", "0"}, {"x", "1"}}));
  EXPECT_EQ(lower(1, 0).str(), "-x");
  EXPECT_EQ(lower(0, 0).str(), "1");

  EXPECT_TRUE(ratmat_inverse(identity_rat(3)) == identity_rat(3));
}

TEST(RatmatInverse, SingularThrows) {
  EXPECT_THROW(ratmat_inverse(rat_matrix({{"x", "y"}, {"2*x", "2*y"}})), SingularMatrix);
  EXPECT_THROW(adjugate_inverse(poly_matrix({{"x", "y"}, {"2*x", "2*y"}}, XY)), SingularMatrix);
}

TEST(RatmatInverse, PropertyInverseTimesMatrixIsIdentity) {
  Rng rng(5);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = trial % 2 == 0 ? 2 : 3;
    Matrix<Poly> m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, XY, 1, 2);
    if (poly_det(m).is_zero()) continue;
    const auto inv = ratmat_inverse(to_ratmat(m));
    EXPECT_TRUE(inv * to_ratmat(m) == identity_rat(n));
    EXPECT_TRUE(to_ratmat(m) * inv == identity_rat(n));
    // Gauss-Jordan and adjugate routes agree entry by entry.
    EXPECT_TRUE(inv == adjugate_inverse(m));
    ++checked;
  }
  EXPECT_GT(checked, 15);
}

TEST(RatFunc, PropertyProductOverFactorRecovers) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = random_poly(rng, XY, 2, 3, true);
    const Poly b = random_poly(rng, XY, 2, 3, true);
    if (b.is_zero()) continue;
    const RatFunc q = RatFunc(a * b) / RatFunc(b);
    EXPECT_TRUE(q.is_polynomial());
    EXPECT_EQ(q.num(), a);
  }
}

TEST(RatFunc, NormalizedDenominatorIsMonic) {
  const RatFunc r(P("2*x", XY), P("4*x*y + 2*x", XY));
  EXPECT_EQ(r.str(), "(1/2)/(y + 1/2)");
  EXPECT_TRUE(r.den().leading_coefficient().is_one());
}

TEST(SolveLinear, Examples) {
  ExactMatrix a = identity_matrix(2);
  auto sol = solve_linear(a, {ExactScalar(2), ExactScalar(3)});
  ASSERT_TRUE(sol.consistent);
  EXPECT_EQ(sol.particular, (ExactVector{ExactScalar(2), ExactScalar(3)}));
  EXPECT_TRUE(sol.nullspace.empty());

  ExactMatrix row(1, 2, ExactScalar(1));
  sol = solve_linear(row, {ExactScalar(0)});
  ASSERT_TRUE(sol.consistent);
  ASSERT_EQ(sol.nullspace.size(), 1u);
  EXPECT_EQ(sol.nullspace[0], (ExactVector{ExactScalar(-1), ExactScalar(1)}));

  ExactMatrix twice(2, 1, ExactScalar(1));
  sol = solve_linear(twice, {ExactScalar(0), ExactScalar(1)});
  EXPECT_FALSE(sol.consistent);
}

TEST(Parse, GrammarAndErrors) {
  EXPECT_EQ(P("3/4 z1^2 - i z2", {"z1", "z2"}).str(), "3/4*z1^2 - i*z2");
  EXPECT_EQ(P("(1+i)^2", XY).str(), "2*i");
  EXPECT_THROW(P("x + w", XY), ParseError);
  EXPECT_THROW(P("x / y", XY), ParseError);
  EXPECT_THROW(P("0.5 x", XY), ParseError);
  try {
    parse_poly("x +\n  $", XY);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(Parse, PropertyPrintParseRoundTrip) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Poly p = random_poly(rng, Z012, 3, 4, true);
    p *= ExactScalar(mpq_class(1, rng.integer(1, 5)), mpq_class(rng.integer(-1, 1), 3));
    const std::string text = p.str();
    const Poly q = P(text, Z012);
    EXPECT_EQ(q, p) << text;
    EXPECT_EQ(q.str(), text);
  }
}

TEST(ExactScalar, Arithmetic) {
  const ExactScalar a(mpq_class(1, 2), 1);
  const ExactScalar b(2, -3);
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.conj().im(), -1);
  EXPECT_EQ(a.str(), "(1/2+i)");
  EXPECT_EQ(ExactScalar(0, -1).str(), "-i");
  EXPECT_THROW(a / ExactScalar(), InvalidArgument);
}

}  // namespace
}  // namespace vfm
