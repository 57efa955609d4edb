#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latc/enumeration.hpp"
#include "latc/lattice.hpp"
#include "latc/voronoi.hpp"

namespace latc {

// Which relevant vectors a width refers to: facet normals (c) or all
// supporting normals (chi).
enum class RelevantKind { Strict, Weak };

std::string kind_name(RelevantKind k);
RelevantKind parse_kind(const std::string& s);
const std::vector<LatticeVector>& relevant_set(const VoronoiData& vd, RelevantKind k);

// A basis together with the coefficients of every target in it.
struct CompactnessCertificate {
  IntegerMatrix transform;  // unimodular; column i is basis vector i in working coordinates
  long width = 0;
  RelevantKind kind = RelevantKind::Strict;
  std::vector<LatticeVector> targets;
  std::vector<IntVector> witnesses;  // transform * witness == target
};

struct WidthResult {
  long width = 0;
  std::vector<IntVector> witnesses;
};

// Max infinity norm of transform^{-1} * target. Throws NonUnimodularError.
WidthResult coefficient_width(const Lattice& l, const IntegerMatrix& transform,
                              const std::vector<LatticeVector>& targets);

CompactnessCertificate make_certificate(const Lattice& l, const IntegerMatrix& transform,
                                        RelevantKind kind,
                                        const std::vector<LatticeVector>& targets);

// Checks unimodularity, that every witness rebuilds its target and that the
// recorded width is the true maximum. When `expected_targets` is given the
// target list must also equal it as a set. Throws CertificateUnsoundError.
void verify_certificate(const Lattice& l, const CompactnessCertificate& cert,
                        const std::vector<LatticeVector>* expected_targets = nullptr);

// max over v in targets of |y . v|.
Integer gauge_over(const std::vector<LatticeVector>& targets, std::span<const Integer> y);

struct GaugePoint {
  Integer gauge;
  IntVector y;  // dual coordinates, first nonzero entry positive
};

// Every nonzero dual lattice vector (one per sign pair) whose gauge over
// `targets` is at most c, sorted by gauge then lexicographically. The targets
// must span. Enumeration runs over the pairing box of n independent targets,
// which is exact and finite.
std::vector<GaugePoint> dual_points_with_gauge_at_most(
    std::size_t n, const std::vector<LatticeVector>& targets, long c,
    const EnumerationLimits& limits = {});

struct CompactnessResult {
  // Present iff a basis of width <= c_max was found; its width is then the
  // compactness constant.
  std::optional<CompactnessCertificate> certificate;
  long c_max = 0;
  std::uint64_t search_nodes = 0;

  bool found() const { return certificate.has_value(); }
  long value() const { return certificate ? certificate->width : c_max + 1; }
};

// Smallest c <= c_max such that some basis expresses every target with
// coefficients bounded by c. The targets must span.
CompactnessResult search_compact_basis(const Lattice& l, const std::vector<LatticeVector>& targets,
                                       RelevantKind kind, long c_max,
                                       const EnumerationLimits& limits = {});

// Smallest c <= c_max admitting a dual basis inside c times the polar of the
// target hull, by backtracking over the gauge-bounded dual points.
CompactnessResult compute_c(const Lattice& l, const VoronoiData& vd, RelevantKind kind,
                            long c_max, const EnumerationLimits& limits = {});

struct RelaxedCertificate {
  std::vector<IntVector> generators;  // independent dual vectors
  std::vector<Rational> gauges;       // gauge of each generator
  Rational lambda_n;                  // exact n-th successive minimum
  long width = 0;                     // ceil(lambda_n)
};

// Relaxed constant through the successive minima of the polar body over the
// dual lattice. Throws BoundTooSmallError when lambda_n exceeds c_max.
RelaxedCertificate compute_cbar(const Lattice& l, const VoronoiData& vd, long c_max,
                                const EnumerationLimits& limits = {});

struct LambdaNCertificate {
  Lattice lattice;                      // generate(Λ_n(ceil(n/2)))
  std::vector<RatVector> ambient;       // the explicit y_1..y_n
  RelaxedCertificate certificate;       // the same vectors in dual coordinates
};

// Explicit width-3 relaxed certificate for Λ_n(ceil(n/2)): y_i = (e_i - e_n)/a
// and y_n = 1/a (n even) or (1/a, ..., 1/a, 2/a) (n odd), checked for dual
// membership, independence and gauge.
LambdaNCertificate cbar3_certificate_lambda_n(std::size_t n,
                                              const EnumerationLimits& limits = {});

struct LiftedBasis {
  std::vector<IntVector> basis;
  // sum |coefficient| of u_k over v_1..v_k; at most max(k/2, 1).
  std::vector<Rational> crosspolytope_norms;
};

// Turns independent lattice vectors v_1..v_n into a basis u_1..u_n with
// u_k in max(k/2, 1) * conv{±v_1, ..., ±v_k}. Throws DependenceError.
LiftedBasis lift_independent_to_basis(const Lattice& lattice,
                                      const std::vector<IntVector>& v);

struct N2Basis {
  IntegerMatrix transform;
  std::vector<IntVector> dual_basis;  // rows of transform^{-1}
  long width = 0;                     // over the strict relevant vectors
};

// Recursive dual-basis construction: y_1 minimizes the Voronoi support
// function over the dual lattice, the rest is lifted from the section
// orthogonal to y_1. The certified width never exceeds n^2.
N2Basis n2_compact_basis(const Lattice& l, const EnumerationLimits& limits = {});

struct GeneratingSet {
  std::vector<LatticeVector> vectors;  // 2^j b_i, i-major
  std::size_t levels = 0;              // floor(log2 c) + 1
  std::vector<LatticeVector> targets;
  std::vector<IntVector> witnesses;    // entries in {-1, 0, 1}
};

// Signed binary expansion of a c-compact basis.
GeneratingSet binary_generating_set(const Lattice& l, const IntegerMatrix& transform,
                                    long c, const std::vector<LatticeVector>& targets);

enum class SuperbasisReject { None, Count, Sum, Obtuse, Rank };
std::string reject_name(SuperbasisReject r);

struct SuperbasisResult {
  SuperbasisReject reason = SuperbasisReject::None;
  std::optional<CompactnessCertificate> certificate;  // on acceptance
  bool accepted() const { return reason == SuperbasisReject::None; }
};

// Accepts b_0..b_n summing to zero with pairwise nonpositive inner products
// whose last n vectors form a basis; the certificate is then for b_1..b_n.
SuperbasisResult obtuse_superbasis(const std::vector<LatticeVector>& b, const Lattice& l,
                                   const VoronoiData& vd);

struct PuncturedBasis {
  IntegerMatrix transform;
  long width_without_y = 0;  // over C \ {±y}
  long width_on_y = 0;
};

// Basis of D_4 dual to {y/2, e1, e2, e3}. `d4` must carry an ambient basis;
// y (ambient) must lie in C \ F, otherwise InvalidArgument.
PuncturedBasis d4_punctured_basis(const Lattice& d4, const VoronoiData& vd,
                                  std::span<const Integer> y_ambient);

}  // namespace latc
