#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "latc/compactness.hpp"
#include "latc/lattice.hpp"
#include "latc/voronoi.hpp"

namespace latc {

struct CvpSolution {
  LatticeVector closest;
  Rational dist2;
  std::size_t scale_k = 0;  // smallest k with t in 2^k V
  std::uint64_t iterations = 0;
  std::uint64_t max_level_iterations = 0;
  std::uint64_t candidates_scanned = 0;
  std::uint64_t peak_live_vectors = 0;
};

// A candidate v together with its image under the integer-scaled Gram matrix
// and its scaled squared norm v . gv. The walk compares these exactly.
using CandidateVisitor =
    std::function<void(const IntVector& v, const IntVector& gv, const Integer& q)>;

class CandidateSource {
 public:
  virtual ~CandidateSource() = default;
  virtual void scan(const CandidateVisitor& visit) = 0;
  // Candidate vectors held in memory at once while scanning.
  virtual std::uint64_t live_vectors() const = 0;
};

// Gram matrix times the lcm of its denominators.
IntegerMatrix scaled_gram(const Lattice& l);

// An explicit list, typically the strict relevant vectors.
class MaterializedCandidates : public CandidateSource {
 public:
  MaterializedCandidates(const Lattice& l, std::vector<LatticeVector> vectors);
  void scan(const CandidateVisitor& visit) override;
  std::uint64_t live_vectors() const override { return vectors_.size(); }

 private:
  std::vector<LatticeVector> vectors_;
  std::vector<IntVector> images_;
  std::vector<Integer> norms_;
};

// Every nonzero T z with |z|_inf <= c, in lexicographic order of z starting
// from (-c, ..., -c). Only the current vector and its Gram image are kept;
// both are updated by a column addition per odometer step.
class CandidateStream : public CandidateSource {
 public:
  CandidateStream(const Lattice& l, const IntegerMatrix& transform, long c);
  void scan(const CandidateVisitor& visit) override;
  // The current vector plus the walk's best candidate.
  std::uint64_t live_vectors() const override { return 2; }

  void reset();
  // Advances to the next nonzero combination; false once exhausted.
  bool next();
  const LatticeVector& current() const { return v_; }
  const IntVector& coefficients() const { return z_; }
  std::uint64_t size() const;

 private:
  void step_column(std::size_t i, const Integer& times);

  IntegerMatrix transform_;
  IntegerMatrix gram_image_;  // scaled Gram times transform
  long c_;
  IntVector z_;
  LatticeVector v_;
  IntVector gv_;
  bool started_ = false;
};

CandidateStream candidate_stream(const Lattice& l, const CompactnessCertificate& cert);

// Voronoi walk with the 2^k outer scaling. The candidate source must contain
// the strict relevant vectors. With `audit` the final residual is checked
// against the facet description and CertificateUnsoundError raised when the
// source failed to cover it.
CvpSolution mv_walk(const Lattice& l, CandidateSource& source, std::span<const Rational> t,
                    const VoronoiData* audit = nullptr);

CvpSolution cvp_compact(const Lattice& l, const CompactnessCertificate& cert,
                        std::span<const Rational> t, const VoronoiData* audit = nullptr);

CvpSolution cvp_materialized(const Lattice& l, const VoronoiData& vd,
                             std::span<const Rational> t, bool audit = false);

}  // namespace latc
