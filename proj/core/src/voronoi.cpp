#include "latc/voronoi.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

#include "latc/errors.hpp"
#include "latc/lp.hpp"

namespace latc {

void canonical_order(std::vector<LatticeVector>& vectors) {
  std::vector<LatticeVector> positive;
  for (const LatticeVector& v : vectors) {
    if (first_nonzero_positive(v)) positive.push_back(v);
  }
  std::sort(positive.begin(), positive.end());
  positive.erase(std::unique(positive.begin(), positive.end()), positive.end());
  vectors.clear();
  for (const LatticeVector& v : positive) {
    vectors.push_back(v);
    vectors.push_back(negated(v));
  }
}

VoronoiData relevant_vectors(const Lattice& l, const VoronoiOptions& options) {
  CosetResidues residues = cosets_mod_2(l, options.limits.coset_rank_limit);
  std::vector<IntVector> reps(residues.begin(), residues.end());

  VoronoiData vd;
  vd.cosets.resize(reps.size());
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, reps.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      vd.cosets[i] = shortest_in_coset(l, reps[i], options.limits);
    }
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < reps.size(); i += jobs) {
            vd.cosets[i] = shortest_in_coset(l, reps[i], options.limits);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  for (const CosetShortest& c : vd.cosets) {
    for (const LatticeVector& v : c.minimizers) vd.weak.push_back(v);
    if (c.minimizers.size() == 2) {
      for (const LatticeVector& v : c.minimizers) vd.strict.push_back(v);
    }
  }
  canonical_order(vd.strict);
  canonical_order(vd.weak);
  for (const LatticeVector& v : vd.strict) vd.strict_norms.push_back(norm2(l, v));
  for (const LatticeVector& v : vd.weak) vd.weak_norms.push_back(norm2(l, v));
  return vd;
}

bool in_dilated_cell(const VoronoiData& vd, const Lattice& l,
                     std::span<const Rational> x, const Rational& s) {
  if (x.size() != l.rank()) throw InvalidArgument("point length mismatch");
  // <x, v> = (G x) . v
  const RatVector gx = multiply(l.gram(), x);
  for (std::size_t i = 0; i < vd.strict.size(); ++i) {
    if (2 * dot(gx, vd.strict[i]) > s * vd.strict_norms[i]) return false;
  }
  return true;
}

Rational support_function(const VoronoiData& vd, const Lattice& l,
                          std::span<const Rational> y) {
  const std::size_t n = l.rank();
  if (y.size() != n) throw InvalidArgument("dual vector length mismatch");
  bool zero = true;
  for (const Rational& c : y) zero &= c == 0;
  if (zero) return 0;
  // Facets 2 (G v) . x <= norm2(v).
  std::vector<Constraint> rows;
  rows.reserve(vd.strict.size());
  for (std::size_t i = 0; i < vd.strict.size(); ++i) {
    RatVector gv = multiply(l.gram(), vd.strict[i]);
    for (Rational& c : gv) c *= 2;
    rows.push_back({std::move(gv), vd.strict_norms[i]});
  }
  return lp_max(RatVector(y.begin(), y.end()), rows).value;
}

Rational support_function(const VoronoiData& vd, const Lattice& l,
                          std::span<const Integer> y) {
  RatVector yr = to_rational(y);
  return support_function(vd, l, std::span<const Rational>(yr));
}

}  // namespace latc
