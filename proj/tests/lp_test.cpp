#include <gtest/gtest.h>

#include "latc/errors.hpp"
#include "latc/lp.hpp"
#include "oracles.hpp"

namespace latc {
namespace {

Constraint c2(long a, long b, long rhs) { return {{Rational(a), Rational(b)}, Rational(rhs)}; }

TEST(Lp, BoxMaximum) {
  std::vector<Constraint> cons{c2(1, 0, 1), c2(-1, 0, 1), c2(0, 1, 2), c2(0, -1, 2)};
  LpSolution s = lp_max({Rational(3), Rational(-1)}, cons);
  EXPECT_EQ(s.value, 5);
  EXPECT_EQ(s.argmax, (RatVector{Rational(1), Rational(-2)}));
}

TEST(Lp, NegativeBoundsNeedPhaseOne) {
  // x >= 1, y >= 1, x + y <= 3, max x.
  std::vector<Constraint> cons{c2(-1, 0, -1), c2(0, -1, -1), c2(1, 1, 3)};
  LpSolution s = lp_max({Rational(1), Rational(0)}, cons);
  EXPECT_EQ(s.value, 2);
}

TEST(Lp, FractionalOptimum) {
  std::vector<Constraint> cons{c2(2, 1, 1), c2(1, 3, 1), c2(-1, 0, 0), c2(0, -1, 0)};
  LpSolution s = lp_max({Rational(1), Rational(1)}, cons);
  // Vertex (2/5, 1/5).
  EXPECT_EQ(s.value, Rational(3, 5));
}

TEST(Lp, InfeasibleAndUnbounded) {
  EXPECT_THROW(lp_max({Rational(1), Rational(0)}, {c2(1, 0, -1), c2(-1, 0, -1)}), InfeasibleError);
  EXPECT_THROW(lp_max({Rational(1), Rational(0)}, {c2(-1, 0, 0)}), UnboundedError);
}

TEST(Lp, DegenerateVertexTerminates) {
  // Many constraints through the origin.
  std::vector<Constraint> cons{c2(1, 1, 0), c2(1, 2, 0), c2(2, 1, 0), c2(1, -1, 0), c2(-1, 3, 0),
                               c2(1, 0, 1)};
  LpSolution s = lp_max({Rational(0), Rational(1)}, cons);
  EXPECT_EQ(s.value, 0);
}

// Random bounded polygons and 3-polytopes against vertex enumeration.
TEST(Lp, AgreesWithVertexEnumeration) {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = trial % 2 ? 2 : 3;
    RationalMatrix g = RationalMatrix::identity(n);
    std::vector<IntVector> normals;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector e(n, Integer(0));
      e[i] = 1;
      normals.push_back(e);
      normals.push_back(negated(e));
    }
    for (int k = 0; k < 4; ++k) {
      IntVector v(n);
      for (auto& x : v) x = rng.uniform(-2, 2);
      if (!is_zero(v)) normals.push_back(v);
    }
    // Constraints 2 x.v <= |v|^2, as in a Voronoi facet description.
    std::vector<Constraint> cons;
    for (const IntVector& v : normals) {
      RatVector row(n);
      Rational nv = 0;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = 2 * Rational(v[i]);
        nv += Rational(v[i] * v[i]);
      }
      cons.push_back({row, nv});
    }
    RatVector y(n);
    for (auto& x : y) x = rng.rational(3, 3);
    EXPECT_EQ(lp_max(y, cons).value, oracle::vertex_support(g, normals, y));
  }
}

}  // namespace
}  // namespace latc
