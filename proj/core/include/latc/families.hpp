#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latc/lattice.hpp"

namespace latc {

enum class Family { Zn, Dn, AnStar, LambdaNA, A2 };

struct FamilySpec {
  Family family = Family::Zn;
  std::size_t n = 2;
  // Modulus of Λ_n(a); defaults to ceil(n/2).
  std::optional<long> a;

  long modulus() const;
};

std::string family_name(Family f);
// Accepts the names printed by family_name; throws InvalidArgument otherwise.
Family parse_family(const std::string& name);
std::string describe(const FamilySpec& spec);

// Z^n; D_n with basis e1+en, e_i - e_{i-1}; A_n^* through the inverse of the
// tridiagonal A_n Gram; Λ_n(a) with basis 1, a e_2, ..., a e_n; A_2.
// Ambient bases are attached whenever they are integral.
Lattice generate(const FamilySpec& spec);

// Strict Voronoi relevant vectors of Λ_n(a), a = ceil(n/2), n >= 4, in
// ambient coordinates: ±1 and the shape vectors with entries a - l on an index
// set S and -l off it, l in {floor(a|S|/n), ceil(a|S|/n)} (a single l when
// a|S|/n is integral). Sorted lexicographically.
std::vector<IntVector> lambda_n_relevant_closed_form(std::size_t n, long a);

// y in (1/a) Z^n with integral coordinate sum.
bool dual_lambda_n_membership(std::size_t n, long a, std::span<const Rational> y);

}  // namespace latc
