#include "latc/lattice.hpp"

#include "latc/errors.hpp"
#include "latc/hnf.hpp"

namespace latc {
namespace {

GramSchmidt gram_schmidt_of(const RationalMatrix& g) {
  const std::size_t n = g.rows();
  GramSchmidt gs{RatVector(n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= gs.mu(j, k) * gs.mu(i, k) * gs.d[k];
      gs.mu(i, j) = s / gs.d[j];
    }
    Rational s = g(i, i);
    for (std::size_t k = 0; k < i; ++k) s -= gs.mu(i, k) * gs.mu(i, k) * gs.d[k];
    if (s <= 0) {
      throw NotPositiveDefiniteError("Gram matrix is not positive definite");
    }
    gs.d[i] = s;
  }
  return gs;
}

}  // namespace

Lattice::Lattice(RationalMatrix gram, std::optional<RationalMatrix> ambient_basis)
    : gram_(std::move(gram)), ambient_(std::move(ambient_basis)) {
  if (!gram_.is_square() || gram_.rows() == 0) {
    throw InvalidArgument("Gram matrix must be square and nonempty");
  }
  if (!is_symmetric(gram_)) throw NotSymmetricError("Gram matrix is not symmetric");
  gs_ = gram_schmidt_of(gram_);
  if (ambient_) {
    if (ambient_->cols() != gram_.rows() || ambient_->rows() < gram_.rows()) {
      throw InvalidArgument("ambient basis shape does not match the rank");
    }
    if (ambient_->transpose() * *ambient_ != gram_) {
      throw InvalidArgument("ambient basis does not reproduce the Gram matrix");
    }
  }
}

Lattice Lattice::from_basis(const RationalMatrix& basis_columns) {
  return Lattice(basis_columns.transpose() * basis_columns, basis_columns);
}

RatVector Lattice::to_ambient(std::span<const Integer> v) const {
  if (!ambient_) throw InvalidArgument("lattice has no ambient basis");
  return multiply(*ambient_, v);
}

std::optional<RatVector> Lattice::from_ambient(std::span<const Rational> x) const {
  if (!ambient_) throw InvalidArgument("lattice has no ambient basis");
  if (x.size() != ambient_->rows()) throw InvalidArgument("ambient length mismatch");
  RatVector rhs = multiply(ambient_->transpose(), x);
  RatVector coeffs = solve(gram_, rhs);
  if (multiply(*ambient_, std::span<const Rational>(coeffs)) != RatVector(x.begin(), x.end())) {
    return std::nullopt;
  }
  return coeffs;
}

Lattice Lattice::with_basis(const IntegerMatrix& transform) const {
  RationalMatrix t = to_rational(transform);
  std::optional<RationalMatrix> amb;
  if (ambient_) amb = *ambient_ * t;
  return Lattice(t.transpose() * gram_ * t, std::move(amb));
}

Rational norm2(const Lattice& l, std::span<const Integer> v) {
  return bilinear(l.gram(), v, v);
}

Rational norm2(const Lattice& l, std::span<const Rational> x) {
  return bilinear(l.gram(), x, x);
}

Rational inner(const Lattice& l, std::span<const Integer> a,
               std::span<const Integer> b) {
  return bilinear(l.gram(), a, b);
}

Rational inner(const Lattice& l, std::span<const Rational> a,
               std::span<const Integer> b) {
  return bilinear(l.gram(), a, to_rational(b));
}

Lattice dual(const Lattice& l) { return Lattice(inverse(l.gram())); }

std::optional<LatticeVector> membership(const Lattice& l, std::span<const Rational> x) {
  if (x.size() != l.rank()) throw InvalidArgument("membership: length mismatch");
  if (!is_integral(x)) return std::nullopt;
  return to_integer(x);
}

IntVector CosetResidues::iterator::operator*() const {
  IntVector r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r[i] = (mask_ >> (n_ - 1 - i)) & 1U ? 1 : 0;
  }
  return r;
}

CosetResidues::CosetResidues(std::size_t n, std::size_t rank_limit) : n_(n) {
  if (n > rank_limit || n >= 63) {
    throw ResourceLimitError("coset sweep over rank " + std::to_string(n) +
                             " exceeds the rank limit " + std::to_string(rank_limit));
  }
}

CosetResidues cosets_mod_2(const Lattice& l, std::size_t rank_limit) {
  return CosetResidues(l.rank(), rank_limit);
}

namespace {

IntVector primitive_integer_direction(const DualVector& y) {
  Integer scale = lcm_of_denominators(y);
  IntVector v(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Rational s = y[i] * scale;
    v[i] = s.get_num();
  }
  Integer g = gcd(v);
  if (g == 0) throw InvalidArgument("section direction must be nonzero");
  for (Integer& x : v) x /= g;
  return v;
}

}  // namespace

Section sublattice_section(const Lattice& l, const DualVector& y) {
  if (y.size() != l.rank()) throw InvalidArgument("section: length mismatch");
  IntVector dir = primitive_integer_direction(y);
  IntegerMatrix row(1, dir.size(), dir);
  IntegerMatrix kernel = integer_kernel(row);
  IntegerMatrix embed = kernel.transpose();
  RationalMatrix e = to_rational(embed);
  std::optional<RationalMatrix> amb;
  if (l.ambient_basis()) amb = *l.ambient_basis() * e;
  Lattice section(e.transpose() * l.gram() * e, std::move(amb));
  return {std::move(section), std::move(embed)};
}

namespace {

IntVector checked_primitive(const DualVector& y1) {
  if (!is_integral(y1)) throw NonPrimitiveError("y1 is not a dual lattice vector");
  IntVector v = to_integer(y1);
  if (gcd(v) != 1) throw NonPrimitiveError("y1 is not primitive in the dual lattice");
  return v;
}

}  // namespace

DualProjection::DualProjection(const Lattice& l, const DualVector& y1)
    : y1_(checked_primitive(y1)),
      section_(sublattice_section(l, y1)),
      section_dual_(dual(section_.lattice)),
      dual_gram_(inverse(l.gram())) {
  const std::size_t n = l.rank();
  IntVector f = bezout_vector(y1_);
  IntegerMatrix completion(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j + 1 < n; ++j) completion(i, j) = section_.embed(i, j);
    completion(i, n - 1) = f[i];
  }
  completion_inverse_t_ = unimodular_inverse(completion).transpose();
  y1_norm2_ = bilinear(dual_gram_, y1_, y1_);
}

IntVector DualProjection::project(std::span<const Integer> y) const {
  return left_multiply(y, section_.embed);
}

Rational DualProjection::alpha(std::span<const Integer> y) const {
  return bilinear(dual_gram_, y, y1_) / y1_norm2_;
}

IntVector DualProjection::lift(std::span<const Integer> y_section) const {
  const std::size_t n = y1_.size();
  if (y_section.size() + 1 != n) throw InvalidArgument("lift: length mismatch");
  IntVector rhs(y_section.begin(), y_section.end());
  rhs.push_back(0);
  IntVector y = multiply(completion_inverse_t_, rhs);
  Integer shift = -round_half_up(alpha(y));
  for (std::size_t i = 0; i < n; ++i) y[i] += shift * y1_[i];
  return y;
}

}  // namespace latc
