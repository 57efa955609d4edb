#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "latc/families.hpp"
#include "latc/voronoi.hpp"
#include "oracles.hpp"

namespace latc {
namespace {

// U^T diag(1,2,3) U with only a few shears, so every relevant vector keeps
// small coefficients and the brute-force box below covers them.
RationalMatrix mild_rank3_gram(oracle::Rng& rng) {
  IntegerMatrix u = oracle::random_unimodular(3, rng, 3);
  IntegerMatrix d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  return to_rational(u.transpose() * d * u);
}

TEST(Voronoi, SquareLattice) {
  Lattice z2(RationalMatrix::identity(2));
  VoronoiData vd = relevant_vectors(z2);
  EXPECT_EQ(vd.strict, (std::vector<LatticeVector>{{0, 1}, {0, -1}, {1, 0}, {-1, 0}}));
  EXPECT_EQ(vd.strict_norms, (RatVector{Rational(1), Rational(1), Rational(1), Rational(1)}));
  EXPECT_EQ(vd.weak.size(), 8u);
  EXPECT_EQ(vd.cosets.size(), 3u);
}

TEST(Voronoi, D4) {
  Lattice d4 = generate({Family::Dn, 4, {}});
  VoronoiData vd = relevant_vectors(d4);
  ASSERT_EQ(vd.strict.size(), 24u);
  for (const Rational& q : vd.strict_norms) EXPECT_EQ(q, 2);
  // The three norm-4 cosets (±2e_i and the two sign-parity classes of ±1
  // vectors) are all weakly relevant: 24 + 3 * 8.
  EXPECT_EQ(vd.weak.size(), 48u);
  std::size_t doubled_units = 0;
  for (const LatticeVector& v : vd.weak) {
    RatVector x = d4.to_ambient(v);
    std::size_t nonzero = std::count_if(x.begin(), x.end(), [](const Rational& r) { return r != 0; });
    if (nonzero == 1) ++doubled_units;
  }
  EXPECT_EQ(doubled_units, 8u);
}

TEST(Voronoi, ZonotopalAnStarHasMaximalFacetCount) {
  for (std::size_t n : {2u, 3u, 4u}) {
    VoronoiData vd = relevant_vectors(generate({Family::AnStar, n, {}}));
    EXPECT_EQ(vd.strict.size(), 2 * ((std::size_t{1} << n) - 1)) << "n=" << n;
  }
}

TEST(Voronoi, Lambda5HasMaximalFacetCount) {
  VoronoiData vd = relevant_vectors(generate({Family::LambdaNA, 5, 3}));
  EXPECT_EQ(vd.strict.size(), 62u);
}

TEST(Voronoi, OrderingAndSymmetry) {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Lattice l(oracle::random_rank3_gram(rng));
    VoronoiData vd = relevant_vectors(l);
    for (const auto* list : {&vd.strict, &vd.weak}) {
      ASSERT_EQ(list->size() % 2, 0u);
      for (std::size_t i = 0; i < list->size(); i += 2) {
        EXPECT_TRUE(first_nonzero_positive((*list)[i]));
        EXPECT_EQ((*list)[i + 1], negated((*list)[i]));
        if (i >= 2) {
          EXPECT_LT((*list)[i - 2], (*list)[i]);
        }
      }
    }
    std::set<LatticeVector> weak(vd.weak.begin(), vd.weak.end());
    for (const LatticeVector& v : vd.strict) EXPECT_TRUE(weak.count(v));
    EXPECT_GE(vd.strict.size(), 6u);
    EXPECT_LE(vd.strict.size(), 14u);
  }
}

TEST(Voronoi, StrictIffCosetHasOnePair) {
  Lattice l = generate({Family::LambdaNA, 4, 2});
  VoronoiData vd = relevant_vectors(l);
  std::set<LatticeVector> strict(vd.strict.begin(), vd.strict.end());
  std::size_t pairs = 0;
  for (const CosetShortest& c : vd.cosets) {
    bool one_pair = c.minimizers.size() == 2;
    for (const LatticeVector& v : c.minimizers) EXPECT_EQ(strict.count(v) == 1, one_pair);
    pairs += one_pair;
  }
  EXPECT_EQ(2 * pairs, vd.strict.size());
}

TEST(Voronoi, AgreesWithDefinitionsOnRandomLattices) {
  oracle::Rng rng(11);
  int compared = 0;
  for (int trial = 0; trial < 12 && compared < 6; ++trial) {
    RationalMatrix g = mild_rank3_gram(rng);
    Lattice l(g);
    VoronoiData vd = relevant_vectors(l);
    long reach = 0;
    for (const LatticeVector& v : vd.weak) reach = std::max(reach, max_abs(v).get_si());
    // The oracle is exact only when its box holds every relevant vector.
    if (reach > 4) continue;
    ++compared;
    oracle::BruteRelevant b = oracle::brute_relevant(g, 4);
    EXPECT_EQ(std::set<LatticeVector>(vd.strict.begin(), vd.strict.end()), b.strict);
    EXPECT_EQ(std::set<LatticeVector>(vd.weak.begin(), vd.weak.end()), b.weak);
  }
  EXPECT_GE(compared, 4);
  Lattice a2(RationalMatrix{{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}});
  VoronoiData vd = relevant_vectors(a2);
  oracle::BruteRelevant b = oracle::brute_relevant(a2.gram(), 4);
  EXPECT_EQ(std::set<LatticeVector>(vd.strict.begin(), vd.strict.end()), b.strict);
  EXPECT_EQ(vd.strict.size(), 6u);
}

TEST(Voronoi, DilatedCell) {
  Lattice z2(RationalMatrix::identity(2));
  VoronoiData vd = relevant_vectors(z2);
  EXPECT_TRUE(in_dilated_cell(vd, z2, RatVector{Rational(1, 2), Rational(0)}, Rational(1)));
  EXPECT_FALSE(in_dilated_cell(vd, z2, RatVector{Rational(3, 4), Rational(0)}, Rational(1)));
  EXPECT_TRUE(in_dilated_cell(vd, z2, RatVector{Rational(3, 4), Rational(0)}, Rational(2)));
}

TEST(Voronoi, WeakVectorsHalveOntoTheBoundary) {
  for (const FamilySpec& spec : {FamilySpec{Family::Dn, 4, {}}, FamilySpec{Family::LambdaNA, 5, 3},
                                 FamilySpec{Family::AnStar, 3, {}}}) {
    Lattice l = generate(spec);
    VoronoiData vd = relevant_vectors(l);
    std::set<LatticeVector> weak(vd.weak.begin(), vd.weak.end());
    for (const LatticeVector& v : vd.weak) {
      RatVector half(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) half[i] = Rational(v[i]) / 2;
      EXPECT_TRUE(in_dilated_cell(vd, l, half, Rational(1)));
      // Equality against v itself when v is strict; weak-only vectors sit on
      // a lower-dimensional face, so some facet is tight there too.
      bool tight = false;
      for (std::size_t j = 0; j < vd.strict.size() && !tight; ++j) {
        tight = 2 * inner(l, half, vd.strict[j]) == vd.strict_norms[j];
      }
      EXPECT_TRUE(tight);
    }
    oracle::Rng rng(57);
    int rejected = 0;
    while (rejected < 50) {
      LatticeVector v(l.rank());
      for (auto& x : v) x = rng.uniform(-3, 3);
      if (is_zero(v) || weak.count(v)) continue;
      RatVector half(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) half[i] = Rational(v[i]) / 2;
      EXPECT_FALSE(in_dilated_cell(vd, l, half, Rational(1)));
      ++rejected;
    }
  }
}

TEST(Voronoi, SupportFunctionOfCube) {
  for (std::size_t n : {2u, 3u, 4u}) {
    Lattice z(RationalMatrix::identity(n));
    VoronoiData vd = relevant_vectors(z);
    oracle::Rng rng(n);
    for (int trial = 0; trial < 10; ++trial) {
      IntVector y(n);
      Integer l1 = 0;
      for (auto& x : y) {
        x = rng.uniform(-5, 5);
        l1 += abs(x);
      }
      EXPECT_EQ(support_function(vd, z, y), make_rational(l1, 2));
    }
    EXPECT_EQ(support_function(vd, z, IntVector(n, Integer(0))), 0);
  }
}

TEST(Voronoi, SupportFunctionMatchesVertexEnumeration) {
  oracle::Rng rng(19);
  for (int trial = 0; trial < 6; ++trial) {
    RationalMatrix g = oracle::random_rank3_gram(rng);
    Lattice l(g);
    VoronoiData vd = relevant_vectors(l);
    for (int k = 0; k < 5; ++k) {
      RatVector y(3);
      for (auto& x : y) x = rng.rational(3, 4);
      EXPECT_EQ(support_function(vd, l, y), oracle::vertex_support(g, vd.strict, y));
    }
  }
}

TEST(Voronoi, ParallelCosetsMatchSerial) {
  Lattice l = generate({Family::LambdaNA, 5, 3});
  VoronoiOptions opt;
  opt.jobs = 4;
  VoronoiData a = relevant_vectors(l);
  VoronoiData b = relevant_vectors(l, opt);
  EXPECT_EQ(a.strict, b.strict);
  EXPECT_EQ(a.weak, b.weak);
}

TEST(Voronoi, RankLimit) {
  VoronoiOptions opt;
  opt.limits.coset_rank_limit = 3;
  EXPECT_THROW(relevant_vectors(generate({Family::Zn, 4, {}}), opt), ResourceLimitError);
}

}  // namespace
}  // namespace latc
