#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <span>

#include "latc/matrix.hpp"

namespace latc {

// Exact Gram-Schmidt data of a positive definite Gram matrix g:
//   x^T g x = sum_i d[i] * (x_i + sum_{j>i} mu(j, i) x_j)^2.
struct GramSchmidt {
  RatVector d;
  RationalMatrix mu;  // mu(j, i) for j > i
};

// A full-rank lattice in quadratic-form representation. All lattice vectors
// are integer coefficient tuples with respect to the (implicit) basis whose
// Gram matrix is stored. An ambient basis may be attached for I/O.
class Lattice {
 public:
  // Throws NotSymmetricError / NotPositiveDefiniteError.
  explicit Lattice(RationalMatrix gram,
                   std::optional<RationalMatrix> ambient_basis = std::nullopt);

  // Lattice spanned by the columns of an ambient basis (d x n, d >= n).
  static Lattice from_basis(const RationalMatrix& basis_columns);

  std::size_t rank() const { return gram_.rows(); }
  const RationalMatrix& gram() const { return gram_; }
  const std::optional<RationalMatrix>& ambient_basis() const { return ambient_; }
  const GramSchmidt& gram_schmidt() const { return gs_; }

  // Ambient coordinates of a lattice vector (requires an ambient basis).
  RatVector to_ambient(std::span<const Integer> v) const;
  // Coefficients of an ambient point; absent when the point is off the span.
  std::optional<RatVector> from_ambient(std::span<const Rational> x) const;

  // Same lattice, basis changed by a unimodular transform whose columns
  // express the new basis vectors in the current basis.
  Lattice with_basis(const IntegerMatrix& transform) const;

 private:
  RationalMatrix gram_;
  std::optional<RationalMatrix> ambient_;
  GramSchmidt gs_;
};

Rational norm2(const Lattice& l, std::span<const Integer> v);
Rational norm2(const Lattice& l, std::span<const Rational> x);
Rational inner(const Lattice& l, std::span<const Integer> a,
               std::span<const Integer> b);
Rational inner(const Lattice& l, std::span<const Rational> a,
               std::span<const Integer> b);

// Lattice with Gram matrix gram^{-1}; coordinates are dual-basis coefficients.
Lattice dual(const Lattice& l);

// Integer tuple iff every basis coordinate of x is integral.
std::optional<LatticeVector> membership(const Lattice& l, std::span<const Rational> x);

// Nonzero residues of Z^n / 2Z^n as {0,1}^n tuples in lexicographic order.
class CosetResidues {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = IntVector;
    using difference_type = std::ptrdiff_t;
    using pointer = const IntVector*;
    using reference = IntVector;

    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}
    IntVector operator*() const;
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    bool operator==(const iterator& o) const { return mask_ == o.mask_; }

   private:
    std::size_t n_;
    std::uint64_t mask_;
  };

  CosetResidues(std::size_t n, std::size_t rank_limit = 12);
  iterator begin() const { return {n_, 1}; }
  iterator end() const { return {n_, std::uint64_t{1} << n_}; }
  std::size_t size() const { return (std::size_t{1} << n_) - 1; }

 private:
  std::size_t n_;
};

CosetResidues cosets_mod_2(const Lattice& l, std::size_t rank_limit = 12);

struct Section {
  Lattice lattice;
  IntegerMatrix embed;  // n x (n-1); columns are section basis vectors in L
};

// Lattice vectors pairing to zero with the dual vector y. The returned basis
// spans the whole section. Throws InvalidArgument for y = 0.
Section sublattice_section(const Lattice& l, const DualVector& y);

// Dual of the section Λ' = Λ ∩ y1^⊥ together with the lift back to Λ*.
class DualProjection {
 public:
  // Throws NonPrimitiveError unless y1 is integral with coprime entries.
  DualProjection(const Lattice& l, const DualVector& y1);

  const Section& section() const { return section_; }
  // Dual lattice of the section (Gram = (E^T G E)^{-1}).
  const Lattice& section_dual() const { return section_dual_; }
  const IntVector& y1() const { return y1_; }

  // Pairings with the section basis: E^T y.
  IntVector project(std::span<const Integer> y) const;
  // Coefficient of y along y1 in the orthogonal decomposition
  // y = (component in span of the section) + alpha * y1.
  Rational alpha(std::span<const Integer> y) const;
  // The unique y in Λ* with project(y) = y_section and alpha(y) in [-1/2, 1/2).
  IntVector lift(std::span<const Integer> y_section) const;

 private:
  IntVector y1_;
  Section section_;
  Lattice section_dual_;
  IntegerMatrix completion_inverse_t_;  // ([E | f]^{-1})^T
  RationalMatrix dual_gram_;
  Rational y1_norm2_;
};

}  // namespace latc
