#include "latc/enumeration.hpp"

#include <algorithm>

#include "latc/errors.hpp"

namespace latc {
namespace {

// Integer range {x : (x - m)^2 <= r}, empty when r < 0.
bool integer_window(const Rational& m, const Rational& r, Integer& lo, Integer& hi) {
  if (r < 0) return false;
  const Integer s = isqrt(floor(r));
  lo = floor(m) - s - 1;
  hi = ceil(m) + s + 1;
  Rational t;
  for (;;) {
    t = lo - m;
    if (t * t <= r) break;
    ++lo;
    if (lo > hi) return false;
  }
  for (;;) {
    t = hi - m;
    if (t * t <= r) break;
    --hi;
  }
  return lo <= hi;
}

class BallWalk {
 public:
  BallWalk(const Lattice& l, std::span<const Rational> center, Rational& bound,
           const BallVisitor& visit, const EnumerationLimits& limits)
      : gs_(l.gram_schmidt()),
        n_(l.rank()),
        center_(center.begin(), center.end()),
        bound_(bound),
        visit_(visit),
        limits_(limits),
        x_(n_),
        offset_(n_) {}

  void run() { descend(n_ - 1, Rational(0)); }

 private:
  void descend(std::size_t level, const Rational& partial) {
    Rational m = center_[level];
    for (std::size_t j = level + 1; j < n_; ++j) {
      m -= gs_.mu(j, level) * offset_[j];
    }
    Rational room = (bound_ - partial) / gs_.d[level];
    Integer lo, hi;
    if (!integer_window(m, room, lo, hi)) return;
    Rational t, contribution;
    for (Integer x = lo; x <= hi; ++x) {
      if (++nodes_ > limits_.candidate_cap) {
        throw ResourceLimitError("ball enumeration exceeded the candidate cap of " +
                                 std::to_string(limits_.candidate_cap));
      }
      t = x - m;
      contribution = partial + gs_.d[level] * t * t;
      // The visitor may have shrunk the bound since the window was computed.
      if (contribution > bound_) {
        if (x > m) break;
        continue;
      }
      x_[level] = x;
      offset_[level] = x - center_[level];
      if (level == 0) {
        visit_(x_, contribution);
      } else {
        descend(level - 1, contribution);
      }
    }
  }

  const GramSchmidt& gs_;
  std::size_t n_;
  RatVector center_;
  Rational& bound_;
  const BallVisitor& visit_;
  const EnumerationLimits& limits_;
  IntVector x_;
  RatVector offset_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void enumerate_ball(const Lattice& l, std::span<const Rational> center, Rational& bound,
                    const BallVisitor& visit, const EnumerationLimits& limits) {
  if (center.size() != l.rank()) throw InvalidArgument("ball center length mismatch");
  if (bound < 0) return;
  BallWalk(l, center, bound, visit, limits).run();
}

std::vector<LatticeVector> points_in_ball(const Lattice& l,
                                          std::span<const Rational> center,
                                          const Rational& r2,
                                          const EnumerationLimits& limits) {
  if (r2 < 0) throw InvalidArgument("negative squared radius");
  std::vector<LatticeVector> out;
  Rational bound = r2;
  enumerate_ball(
      l, center, bound,
      [&](const LatticeVector& x, const Rational&) { out.push_back(x); }, limits);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Minimizers of norm2(x - center) with adaptive pruning; ties are kept.
std::pair<Rational, std::vector<LatticeVector>> closest_to(
    const Lattice& l, std::span<const Rational> center, Rational bound,
    const EnumerationLimits& limits) {
  std::vector<LatticeVector> best;
  Rational best_dist = bound;
  enumerate_ball(
      l, center, bound,
      [&](const LatticeVector& x, const Rational& dist) {
        if (best.empty() || dist < best_dist) {
          best.clear();
          best_dist = dist;
          bound = dist;
        }
        if (dist == best_dist) best.push_back(x);
      },
      limits);
  std::sort(best.begin(), best.end());
  return {best_dist, std::move(best)};
}

}  // namespace

CosetShortest shortest_in_coset(const Lattice& l, std::span<const Integer> residue,
                                const EnumerationLimits& limits) {
  const std::size_t n = l.rank();
  if (residue.size() != n) throw InvalidArgument("residue length mismatch");
  bool nonzero = false;
  for (const Integer& r : residue) {
    if (r != 0 && r != 1) throw InvalidArgument("residue entries must be 0 or 1");
    nonzero |= r != 0;
  }
  if (!nonzero) throw InvalidArgument("residue must be nonzero");

  // u = r + 2w, so norm2(u) = 4 * norm2(w + r/2); the representative itself
  // (w = 0) bounds the minimum.
  RatVector center(n);
  for (std::size_t i = 0; i < n; ++i) center[i] = Rational(-residue[i]) / 2;
  const Rational initial = norm2(l, residue) / 4;
  auto [dist, ws] = closest_to(l, center, initial, limits);

  CosetShortest out;
  out.residue.assign(residue.begin(), residue.end());
  out.min_norm2 = 4 * dist;
  out.minimizers.reserve(ws.size());
  for (const LatticeVector& w : ws) {
    LatticeVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = residue[i] + 2 * w[i];
    out.minimizers.push_back(std::move(u));
  }
  std::sort(out.minimizers.begin(), out.minimizers.end());
  return out;
}

ClosestVectors cvp_bruteforce(const Lattice& l, std::span<const Rational> target,
                              const EnumerationLimits& limits) {
  const std::size_t n = l.rank();
  if (target.size() != n) throw InvalidArgument("target length mismatch");
  RatVector diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = target[i] - round_half_up(target[i]);
  const Rational initial = norm2(l, diff);
  auto [dist, closest] = closest_to(l, target, initial, limits);
  return {std::move(closest), dist};
}

std::vector<std::size_t> greedy_independent(const std::vector<LatticeVector>& points,
                                            std::size_t n) {
  // Incrementally reduced echelon basis of the accepted points.
  std::vector<RatVector> echelon;
  std::vector<std::size_t> pivot_col;
  std::vector<std::size_t> picked;
  for (std::size_t idx = 0; idx < points.size() && picked.size() < n; ++idx) {
    RatVector r = to_rational(points[idx]);
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rational f = r[pivot_col[k]];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r[j] -= f * echelon[k][j];
    }
    std::size_t p = 0;
    while (p < n && r[p] == 0) ++p;
    if (p == n) continue;
    const Rational piv = r[p];
    for (Rational& x : r) x /= piv;
    for (auto& row : echelon) {
      const Rational f = row[p];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) row[j] -= f * r[j];
    }
    echelon.push_back(std::move(r));
    pivot_col.push_back(p);
    picked.push_back(idx);
  }
  return picked;
}

std::vector<SuccessiveMinimum> successive_minima_gauge(
    const Gauge& gauge, const Lattice& lattice, const Rational& search_bound,
    const std::optional<Rational>& ball_factor, const EnumerationLimits& limits) {
  const std::size_t n = lattice.rank();
  const Rational r2 = search_bound * search_bound;
  RatVector origin(n, Rational(0));

  struct Candidate {
    Rational g;
    LatticeVector v;
  };
  std::vector<Candidate> candidates;
  Rational bound = r2;
  enumerate_ball(
      lattice, origin, bound,
      [&](const LatticeVector& x, const Rational&) {
        if (first_nonzero_positive(x)) candidates.push_back({gauge(x), x});
      },
      limits);
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.g != b.g) return a.g < b.g;
    return a.v < b.v;
  });

  std::vector<LatticeVector> sorted;
  sorted.reserve(candidates.size());
  for (Candidate& c : candidates) sorted.push_back(std::move(c.v));
  std::vector<SuccessiveMinimum> minima;
  for (std::size_t idx : greedy_independent(sorted, n)) {
    minima.push_back({gauge(sorted[idx]), sorted[idx]});
  }
  if (minima.size() < n) {
    throw BoundTooSmallError("search ball holds fewer than n independent points");
  }
  if (ball_factor && *ball_factor * minima.back().lambda * minima.back().lambda > r2) {
    throw BoundTooSmallError("search ball does not cover the gauge body at lambda_n");
  }
  return minima;
}

}  // namespace latc
