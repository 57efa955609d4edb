#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "latc/lattice.hpp"

namespace latc {

struct EnumerationLimits {
  // Maximum number of search-tree nodes a single ball enumeration may visit.
  std::uint64_t candidate_cap = 10'000'000;
  // Maximum rank for sweeps over the 2^n - 1 cosets of L / 2L.
  std::size_t coset_rank_limit = 12;
};

// Visits every x with norm2(x - center) <= bound. The visitor receives the
// point and its squared distance; it may lower `bound` to prune the rest of
// the search. Bounds are propagated as exact rational inequalities on squared
// partial sums, so no square roots are taken.
using BallVisitor = std::function<void(const LatticeVector&, const Rational&)>;
void enumerate_ball(const Lattice& l, std::span<const Rational> center, Rational& bound,
                    const BallVisitor& visit, const EnumerationLimits& limits = {});

// All v with norm2(v - center) <= r2, sorted lexicographically.
std::vector<LatticeVector> points_in_ball(const Lattice& l,
                                          std::span<const Rational> center,
                                          const Rational& r2,
                                          const EnumerationLimits& limits = {});

struct CosetShortest {
  IntVector residue;
  Rational min_norm2;
  std::vector<LatticeVector> minimizers;  // sorted
};

// Minimal vectors of residue + 2L, residue in {0,1}^n \ {0}.
CosetShortest shortest_in_coset(const Lattice& l, std::span<const Integer> residue,
                                const EnumerationLimits& limits = {});

struct ClosestVectors {
  std::vector<LatticeVector> closest;  // every closest vector, sorted
  Rational dist2;
};

ClosestVectors cvp_bruteforce(const Lattice& l, std::span<const Rational> target,
                              const EnumerationLimits& limits = {});

// Indices of the first points, in order, that are linearly independent of
// the ones picked before; stops after n.
std::vector<std::size_t> greedy_independent(const std::vector<LatticeVector>& points,
                                            std::size_t n);

// Gauge function on integer coordinate vectors of the searched lattice.
using Gauge = std::function<Rational(std::span<const Integer>)>;

struct SuccessiveMinimum {
  Rational lambda;
  LatticeVector witness;
};

// Successive minima of the gauge body over `lattice`, found among the points
// of Euclidean norm^2 <= search_bound^2 (sorted by gauge, then lex, then
// greedily made independent).
//
// When `ball_factor` is given it must satisfy norm2(y) <= ball_factor *
// gauge(y)^2 for all y; the result is then certified exact and
// BoundTooSmallError is raised if the ball might miss points of gauge at most
// lambda_n. BoundTooSmallError is also raised when fewer than n independent
// points are found.
std::vector<SuccessiveMinimum> successive_minima_gauge(
    const Gauge& gauge, const Lattice& lattice, const Rational& search_bound,
    const std::optional<Rational>& ball_factor = std::nullopt,
    const EnumerationLimits& limits = {});

}  // namespace latc
