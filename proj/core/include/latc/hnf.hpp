#pragma once

#include "latc/matrix.hpp"

namespace latc {

struct HermiteResult {
  IntegerMatrix h;  // h = u * m
  IntegerMatrix u;  // unimodular
};

// Row-style Hermite normal form under unimodular row operations.
//
// The nonzero rows of H sit at the bottom with strictly increasing pivot
// columns, where the pivot of a row is its last nonzero entry (so a full-rank
// square input becomes lower triangular). Pivots are positive and every entry
// below a pivot lies in [0, pivot). Zero rows, if any, come first.
HermiteResult hnf(const IntegerMatrix& m);

// Basis (as rows, in Hermite form) of {z in Z^n : m z = 0}. The basis spans the
// full integer kernel, not merely a finite-index sublattice of it.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

// Hermite basis (rows) of the lattice generated by the rows of m.
IntegerMatrix row_lattice_basis(const IntegerMatrix& m);

// True iff the rows of m can be completed to a basis of Z^n, i.e. they are
// independent and span a saturated sublattice.
bool is_primitive_system(const IntegerMatrix& m);

// Integer vector x with v . x = gcd(v); used to complete primitive vectors.
IntVector bezout_vector(std::span<const Integer> v);

}  // namespace latc
