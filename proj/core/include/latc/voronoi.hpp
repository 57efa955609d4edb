#pragma once

#include <vector>

#include "latc/enumeration.hpp"
#include "latc/lattice.hpp"

namespace latc {

// Facet data of the Voronoi cell. Both lists are closed under negation and
// ordered by the positive representative (first nonzero entry positive) in
// lexicographic order, each followed by its negation.
struct VoronoiData {
  std::vector<LatticeVector> strict;  // facet normals
  RatVector strict_norms;
  std::vector<LatticeVector> weak;  // supporting normals, strict included
  RatVector weak_norms;
  // Per nonzero coset of L/2L, in residue order.
  std::vector<CosetShortest> cosets;
};

struct VoronoiOptions {
  EnumerationLimits limits;
  // Worker threads for the independent coset subproblems.
  unsigned jobs = 1;
};

// Each coset of L/2L contributes all of its minimal vectors to the weak set,
// and to the strict set exactly when those minima are a single pair ±v.
VoronoiData relevant_vectors(const Lattice& l, const VoronoiOptions& options = {});

// True iff 2 <x, v> <= s * norm2(v) for every strict v.
bool in_dilated_cell(const VoronoiData& vd, const Lattice& l,
                     std::span<const Rational> x, const Rational& s);

// max of x . y over the Voronoi cell, x in basis coordinates and y in dual
// coordinates, by exact LP over the facet description.
Rational support_function(const VoronoiData& vd, const Lattice& l,
                          std::span<const Integer> y);
Rational support_function(const VoronoiData& vd, const Lattice& l,
                          std::span<const Rational> y);

// Sorts a sign-symmetric vector set into the canonical emission order.
void canonical_order(std::vector<LatticeVector>& vectors);

}  // namespace latc
