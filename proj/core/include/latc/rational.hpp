#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latc {

// Arbitrary precision scalars. mpq_class keeps every result of arithmetic in
// lowest terms with a positive denominator, so equality is structural.
using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Integer coefficient tuple with respect to a lattice basis.
using LatticeVector = IntVector;
// Coefficients with respect to the dual basis; the pairing with a
// LatticeVector is the plain dot product.
using DualVector = RatVector;

Rational make_rational(const Integer& num, const Integer& den);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
// Nearest integer, halves rounded up: floor(x + 1/2).
Integer round_half_up(const Rational& x);
// Largest s with s*s <= x, for x >= 0.
Integer isqrt(const Integer& x);

Integer gcd(std::span<const Integer> v);
Integer lcm_of_denominators(std::span<const Rational> v);

// "p/q" always, including q = 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);
// Accepts "p", "p/q" and "-p/q"; rejects zero denominators.
Rational parse_rational(std::string_view text);

RatVector to_rational(std::span<const Integer> v);
bool is_integral(std::span<const Rational> v);
// Throws InvalidArgument when some entry is not integral.
IntVector to_integer(std::span<const Rational> v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Integer> b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

bool is_zero(std::span<const Integer> v);
IntVector negated(std::span<const Integer> v);
// Sign such that the first nonzero entry becomes positive.
bool first_nonzero_positive(std::span<const Integer> v);
IntVector canonical_sign(std::span<const Integer> v);

Integer max_abs(std::span<const Integer> v);

}  // namespace latc
