#include "latc/lp.hpp"

#include <optional>

#include "latc/errors.hpp"

namespace latc {
namespace {

// Dictionary form: basic[r] = beta[r] + sum_j alpha[r][j] * nonbasic[j],
// objective = z0 + sum_j cost[j] * nonbasic[j]. Variables below `free_count`
// are unrestricted in sign; all others are nonnegative.
class Dictionary {
 public:
  Dictionary(std::size_t free_count, std::size_t rows, std::size_t cols)
      : free_count_(free_count),
        beta_(rows),
        alpha_(rows, RatVector(cols)),
        cost_(cols),
        basic_(rows),
        nonbasic_(cols) {}

  std::size_t rows() const { return beta_.size(); }
  std::size_t cols() const { return cost_.size(); }
  bool is_free(std::size_t var) const { return var < free_count_; }

  Rational& beta(std::size_t r) { return beta_[r]; }
  Rational& alpha(std::size_t r, std::size_t c) { return alpha_[r][c]; }
  Rational& cost(std::size_t c) { return cost_[c]; }
  Rational& z0() { return z0_; }
  std::size_t& basic(std::size_t r) { return basic_[r]; }
  std::size_t& nonbasic(std::size_t c) { return nonbasic_[c]; }

  void pivot(std::size_t row, std::size_t col) {
    const Rational a = alpha_[row][col];
    const Rational inv = 1 / a;
    // Solve row for the entering variable.
    beta_[row] = -beta_[row] * inv;
    for (std::size_t j = 0; j < cols(); ++j) {
      alpha_[row][j] = j == col ? inv : -alpha_[row][j] * inv;
    }
    for (std::size_t i = 0; i < rows(); ++i) {
      if (i == row) continue;
      const Rational f = alpha_[i][col];
      if (f == 0) continue;
      beta_[i] += f * beta_[row];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (j == col) alpha_[i][j] = f * inv;
        else alpha_[i][j] += f * alpha_[row][j];
      }
    }
    const Rational f = cost_[col];
    if (f != 0) {
      z0_ += f * beta_[row];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (j == col) cost_[j] = f * inv;
        else cost_[j] += f * alpha_[row][j];
      }
    }
    std::swap(basic_[row], nonbasic_[col]);
    ++pivots_;
  }

  // Runs simplex iterations to optimality; false means unbounded.
  bool optimize() {
    for (;;) {
      std::optional<std::size_t> enter;
      int direction = 0;
      for (std::size_t j = 0; j < cols(); ++j) {
        const std::size_t var = nonbasic_[j];
        int dir = 0;
        if (cost_[j] > 0) {
          dir = 1;
        } else if (cost_[j] < 0 && is_free(var)) {
          dir = -1;
        }
        if (dir == 0) continue;
        if (!enter || var < nonbasic_[*enter]) {
          enter = j;
          direction = dir;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (is_free(basic_[r])) continue;
        const Rational rate = direction > 0 ? Rational(alpha_[r][*enter])
                                            : Rational(-alpha_[r][*enter]);
        if (rate >= 0) continue;
        const Rational ratio = beta_[r] / -rate;
        if (!leave || ratio < best ||
            (ratio == best && basic_[r] < basic_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void drop_column(std::size_t col) {
    for (auto& row : alpha_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
    cost_.erase(cost_.begin() + static_cast<std::ptrdiff_t>(col));
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(col));
  }

  void drop_row(std::size_t row) {
    alpha_.erase(alpha_.begin() + static_cast<std::ptrdiff_t>(row));
    beta_.erase(beta_.begin() + static_cast<std::ptrdiff_t>(row));
    basic_.erase(basic_.begin() + static_cast<std::ptrdiff_t>(row));
  }

  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t free_count_;
  RatVector beta_;
  std::vector<RatVector> alpha_;
  RatVector cost_;
  Rational z0_ = 0;
  std::vector<std::size_t> basic_;
  std::vector<std::size_t> nonbasic_;
  std::size_t pivots_ = 0;
};

}  // namespace

LpSolution lp_max(const RatVector& objective,
                  const std::vector<Constraint>& constraints) {
  const std::size_t n = objective.size();
  const std::size_t m = constraints.size();
  for (const Constraint& c : constraints) {
    if (c.row.size() != n) throw InvalidArgument("lp_max: constraint length mismatch");
  }

  bool needs_phase_one = false;
  for (const Constraint& c : constraints) needs_phase_one |= c.bound < 0;

  // Variables: x_0..x_{n-1} free, slacks n..n+m-1, auxiliary n+m.
  const std::size_t aux = n + m;
  Dictionary d(n, m, n + (needs_phase_one ? 1 : 0));
  for (std::size_t j = 0; j < n; ++j) d.nonbasic(j) = j;
  if (needs_phase_one) d.nonbasic(n) = aux;
  for (std::size_t i = 0; i < m; ++i) {
    d.basic(i) = n + i;
    d.beta(i) = constraints[i].bound;
    for (std::size_t j = 0; j < n; ++j) d.alpha(i, j) = -constraints[i].row[j];
    if (needs_phase_one) d.alpha(i, n) = 1;
  }

  if (needs_phase_one) {
    d.cost(n) = -1;
    std::size_t worst = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (d.beta(i) < d.beta(worst)) worst = i;
    }
    d.pivot(worst, n);
    d.optimize();
    if (d.z0() < 0) throw InfeasibleError("lp_max: constraints are infeasible");
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (d.basic(r) != aux) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (d.alpha(r, j) != 0) {
          col = j;
          break;
        }
      }
      if (col) {
        d.pivot(r, *col);
      } else {
        d.drop_row(r);
      }
      break;
    }
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (d.nonbasic(j) == aux) {
        d.drop_column(j);
        break;
      }
    }
    // Re-express the true objective in the current nonbasic variables.
    for (std::size_t j = 0; j < d.cols(); ++j) d.cost(j) = 0;
    d.z0() = 0;
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (d.nonbasic(j) < n) d.cost(j) += objective[d.nonbasic(j)];
    }
    for (std::size_t r = 0; r < d.rows(); ++r) {
      const std::size_t var = d.basic(r);
      if (var >= n || objective[var] == 0) continue;
      d.z0() += objective[var] * d.beta(r);
      for (std::size_t j = 0; j < d.cols(); ++j) {
        d.cost(j) += objective[var] * d.alpha(r, j);
      }
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) d.cost(j) = objective[j];
  }

  if (!d.optimize()) throw UnboundedError("lp_max: objective is unbounded");

  LpSolution sol;
  sol.value = d.z0();
  sol.argmax.assign(n, Rational(0));
  for (std::size_t r = 0; r < d.rows(); ++r) {
    if (d.basic(r) < n) sol.argmax[d.basic(r)] = d.beta(r);
  }
  sol.pivots = d.pivots();
  return sol;
}

}  // namespace latc
