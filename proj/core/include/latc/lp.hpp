#pragma once

#include <vector>

#include "latc/rational.hpp"

namespace latc {

// One inequality row . x <= bound.
struct Constraint {
  RatVector row;
  Rational bound;
};

struct LpSolution {
  Rational value;
  RatVector argmax;
  std::size_t pivots = 0;
};

// Maximizes objective . x over {x free : row . x <= bound for every
// constraint} with exact rational simplex pivoting (dictionary form,
// smallest-index entering and leaving rules). Throws InfeasibleError or
// UnboundedError.
LpSolution lp_max(const RatVector& objective,
                  const std::vector<Constraint>& constraints);

}  // namespace latc
