#include <gtest/gtest.h>

#include <set>

#include "latc/compactness.hpp"
#include "latc/cvp.hpp"
#include "latc/families.hpp"
#include "oracles.hpp"

namespace latc {
namespace {

struct Solved {
  Lattice lattice;
  VoronoiData vd;
  CompactnessCertificate cert;
};

Solved prepare(const Lattice& l) {
  VoronoiData vd = relevant_vectors(l);
  CompactnessResult r = compute_c(l, vd, RelevantKind::Strict, 4);
  if (!r.found()) throw std::runtime_error("no certificate within 4");
  return {l, std::move(vd), *r.certificate};
}

RatVector random_target(oracle::Rng& rng, std::size_t n) {
  RatVector t(n);
  for (auto& x : t) x = rng.rational(12, 4);
  return t;
}

TEST(Stream, SizeAndOrder) {
  Lattice z2(RationalMatrix::identity(2));
  CandidateStream s(z2, IntegerMatrix::identity(2), 1);
  EXPECT_EQ(s.size(), 8u);
  std::vector<LatticeVector> seen;
  s.reset();
  while (s.next()) {
    EXPECT_EQ(s.current(), s.coefficients());
    seen.push_back(s.current());
  }
  EXPECT_EQ(seen, (std::vector<LatticeVector>{
                      {-1, -1}, {-1, 0}, {-1, 1}, {0, -1}, {0, 1}, {1, -1}, {1, 0}, {1, 1}}));

  Lattice z4(RationalMatrix::identity(4));
  CandidateStream s4(z4, IntegerMatrix::identity(4), 1);
  std::uint64_t count = 0;
  s4.reset();
  while (s4.next()) ++count;
  EXPECT_EQ(count, 80u);
  EXPECT_EQ(s4.size(), 80u);
}

TEST(Stream, TracksTheTransform) {
  oracle::Rng rng(8);
  Lattice z3(RationalMatrix::identity(3));
  IntegerMatrix u = oracle::random_unimodular(3, rng, 5);
  CandidateStream s(z3, u, 2);
  s.reset();
  std::uint64_t count = 0;
  while (s.next()) {
    EXPECT_EQ(s.current(), multiply(u, s.coefficients()));
    ++count;
  }
  EXPECT_EQ(count, 124u);
}

TEST(Stream, CoversTheFacets) {
  std::vector<Lattice> ls{generate({Family::Dn, 4, {}}), generate({Family::LambdaNA, 5, 3}),
                          generate({Family::AnStar, 4, {}})};
  oracle::Rng rng(12);
  for (int i = 0; i < 3; ++i) ls.emplace_back(oracle::random_rank3_gram(rng));
  for (const Lattice& l : ls) {
    Solved s = prepare(l);
    CandidateStream stream = candidate_stream(l, s.cert);
    std::set<LatticeVector> seen;
    stream.reset();
    while (stream.next()) seen.insert(stream.current());
    for (const LatticeVector& v : s.vd.strict) EXPECT_TRUE(seen.count(v));
  }
}

TEST(Walk, Examples) {
  Solved z = prepare(Lattice(RationalMatrix::identity(2)));
  CvpSolution a = cvp_compact(z.lattice, z.cert, RatVector{Rational(3, 5), Rational(1, 5)});
  EXPECT_EQ(a.closest, (LatticeVector{1, 0}));
  EXPECT_EQ(a.dist2, Rational(1, 5));
  CvpSolution b = cvp_compact(z.lattice, z.cert, RatVector{Rational(2), Rational(-7)});
  EXPECT_EQ(b.closest, (LatticeVector{2, -7}));
  EXPECT_EQ(b.dist2, 0);

  Solved d4 = prepare(generate({Family::Dn, 4, {}}));
  RatVector third(4, Rational(1, 3));
  CvpSolution c = cvp_compact(d4.lattice, d4.cert, third);
  EXPECT_EQ(c.dist2, cvp_bruteforce(d4.lattice, third).dist2);
  for (std::size_t i = 0; i < d4.vd.strict.size(); ++i) {
    RatVector half(4);
    for (std::size_t j = 0; j < 4; ++j) half[j] = Rational(d4.vd.strict[i][j]) / 2;
    EXPECT_EQ(cvp_compact(d4.lattice, d4.cert, half).dist2, d4.vd.strict_norms[i] / 4);
  }
}

TEST(Walk, MatchesBruteForce) {
  std::vector<Lattice> ls{generate({Family::Zn, 3, {}}), generate({Family::Dn, 4, {}}),
                          generate({Family::AnStar, 3, {}}), generate({Family::LambdaNA, 4, 2}),
                          generate({Family::LambdaNA, 5, 3})};
  oracle::Rng rng(100);
  for (const Lattice& l : ls) {
    Solved s = prepare(l);
    const std::size_t n = l.rank();
    for (int k = 0; k < 25; ++k) {
      RatVector t = random_target(rng, n);
      CvpSolution w = cvp_compact(l, s.cert, t, &s.vd);
      ClosestVectors bf = cvp_bruteforce(l, t);
      EXPECT_EQ(w.dist2, bf.dist2);
      EXPECT_TRUE(std::binary_search(bf.closest.begin(), bf.closest.end(), w.closest));
      EXPECT_LE(w.max_level_iterations, std::uint64_t{1} << n);
      EXPECT_LE(w.iterations, (std::uint64_t{1} << n) * (w.scale_k + 1));
      EXPECT_EQ(w.peak_live_vectors, 2u);
      RatVector residual(n);
      for (std::size_t i = 0; i < n; ++i) residual[i] = t[i] - Rational(w.closest[i]);
      EXPECT_TRUE(in_dilated_cell(s.vd, l, residual, Rational(1)));

      CvpSolution m = cvp_materialized(l, s.vd, t, true);
      EXPECT_EQ(m.dist2, bf.dist2);
      EXPECT_EQ(m.peak_live_vectors, s.vd.strict.size());
    }
  }
}

TEST(Walk, RandomLowRank) {
  oracle::Rng rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    Lattice l(trial % 2 ? oracle::random_rank4_gram(rng) : oracle::random_rank3_gram(rng));
    Solved s = prepare(l);
    for (int k = 0; k < 10; ++k) {
      RatVector t = random_target(rng, l.rank());
      EXPECT_EQ(cvp_compact(l, s.cert, t, &s.vd).dist2, cvp_bruteforce(l, t).dist2);
    }
  }
}

TEST(Walk, TranslationEquivariance) {
  Solved s = prepare(generate({Family::LambdaNA, 5, 3}));
  oracle::Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    RatVector t = random_target(rng, 5);
    LatticeVector w(5);
    for (auto& x : w) x = rng.uniform(-6, 6);
    RatVector shifted = t;
    for (std::size_t i = 0; i < 5; ++i) shifted[i] += w[i];
    CvpSolution a = cvp_compact(s.lattice, s.cert, t);
    CvpSolution b = cvp_compact(s.lattice, s.cert, shifted);
    EXPECT_EQ(a.dist2, b.dist2);
    if (cvp_bruteforce(s.lattice, t).closest.size() == 1) {
      LatticeVector back(5);
      for (std::size_t i = 0; i < 5; ++i) back[i] = b.closest[i] - w[i];
      EXPECT_EQ(back, a.closest);
    }
  }
}

TEST(Walk, ScanCountsFollowTheStream) {
  Solved s = prepare(generate({Family::Dn, 4, {}}));
  RatVector t{Rational(7, 2), Rational(-5, 3), Rational(2, 7), Rational(9, 4)};
  CvpSolution w = cvp_compact(s.lattice, s.cert, t);
  std::uint64_t per_scan = candidate_stream(s.lattice, s.cert).size();
  EXPECT_EQ(w.candidates_scanned % per_scan, 0u);
  EXPECT_LE(w.candidates_scanned, per_scan * (w.iterations + w.scale_k + 2));
}

TEST(Walk, AuditCatchesMissingFacets) {
  Lattice z2(RationalMatrix::identity(2));
  VoronoiData vd = relevant_vectors(z2);
  RatVector t{Rational(0), Rational(5, 2)};
  MaterializedCandidates partial(z2, {{1, 0}, {-1, 0}});
  CvpSolution blind = mv_walk(z2, partial, t);
  EXPECT_EQ(blind.closest, (LatticeVector{0, 0}));
  EXPECT_THROW(mv_walk(z2, partial, t, &vd), CertificateUnsoundError);
  MaterializedCandidates full(z2, vd.strict);
  EXPECT_EQ(mv_walk(z2, full, t, &vd).dist2, Rational(1, 4));
}

TEST(Walk, ScaledGramIsIntegral) {
  Lattice a3 = generate({Family::AnStar, 3, {}});
  IntegerMatrix g = scaled_gram(a3);
  RationalMatrix back = to_rational(g);
  Rational ratio = back(0, 0) / a3.gram()(0, 0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(back(i, j), ratio * a3.gram()(i, j));
  EXPECT_EQ(ratio, 4);
}

}  // namespace
}  // namespace latc
