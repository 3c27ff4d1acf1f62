#include "lapvol/lp.hpp"

#include "lapvol/error.hpp"

#include <optional>

namespace lapvol {

namespace {

// Dense tableau in canonical form: rows hold B^{-1}[A | b], basis_[i] is the
// column basic in row i. The rhs lives in the last column.
class Tableau {
public:
  Tableau(Eigen::Index num_vars, std::span<const LinearConstraint> constraints)
      : num_structural_(num_vars) {
    const auto rows = static_cast<Eigen::Index>(constraints.size());
    Eigen::Index num_artificial = 0;
    std::vector<bool> needs_artificial(constraints.size());
    std::vector<int> slack_sign(constraints.size());
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      const auto& c = constraints[i];
      // Flip so that rhs >= 0; a zero rhs is kept in <= form.
      bool flip = c.rhs < 0 || (c.rhs == 0 && c.relation == Relation::GreaterEq);
      Relation rel = c.relation;
      if (flip)
        rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
      slack_sign[i] = rel == Relation::LessEq ? 1 : -1;
      needs_artificial[i] = rel == Relation::GreaterEq;
      num_artificial += needs_artificial[i] ? 1 : 0;
    }
    first_artificial_ = num_vars + rows;
    cols_ = first_artificial_ + num_artificial;
    t_ = RatMatrix::Zero(rows, cols_ + 1);
    basis_.resize(static_cast<std::size_t>(rows));

    Eigen::Index next_artificial = first_artificial_;
    for (Eigen::Index i = 0; i < rows; ++i) {
      const auto& c = constraints[static_cast<std::size_t>(i)];
      if (c.coeffs.size() != num_vars)
        throw Error(Errc::Internal, "constraint width does not match variable count");
      bool flip = c.rhs < 0 || (c.rhs == 0 && c.relation == Relation::GreaterEq);
      Rat s = flip ? Rat(-1) : Rat(1);
      t_.row(i).head(num_vars) = c.coeffs.transpose() * s;
      t_(i, cols_) = c.rhs * s;
      t_(i, num_vars + i) = Rat(slack_sign[static_cast<std::size_t>(i)]);
      if (needs_artificial[static_cast<std::size_t>(i)]) {
        t_(i, next_artificial) = Rat(1);
        basis_[static_cast<std::size_t>(i)] = next_artificial++;
      } else {
        basis_[static_cast<std::size_t>(i)] = num_vars + i;
      }
    }
  }

  bool has_artificials() const { return cols_ > first_artificial_; }

  // Maximizes cost . x over the columns in [0, allowed_end). Returns false
  // when unbounded.
  bool maximize(const RatVector& cost, Eigen::Index allowed_end) {
    for (;;) {
      std::optional<Eigen::Index> entering;
      for (Eigen::Index j = 0; j < allowed_end && !entering; ++j) {
        if (is_basic(j))
          continue;
        Rat reduced = cost(j);
        for (Eigen::Index i = 0; i < t_.rows(); ++i)
          if (!t_(i, j).is_zero())
            reduced -= cost(basis_[static_cast<std::size_t>(i)]) * t_(i, j);
        if (reduced > 0)
          entering = j;
      }
      if (!entering)
        return true;
      std::optional<Eigen::Index> leaving;
      Rat best_ratio;
      for (Eigen::Index i = 0; i < t_.rows(); ++i) {
        if (t_(i, *entering) <= 0)
          continue;
        Rat ratio = t_(i, cols_) / t_(i, *entering);
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(*leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving)
        return false;
      pivot(*leaving, *entering);
    }
  }

  // Phase 1: drive the artificial variables to zero. Returns feasibility.
  bool phase_one() {
    if (!has_artificials())
      return true;
    RatVector cost = RatVector::Zero(cols_);
    for (Eigen::Index j = first_artificial_; j < cols_; ++j)
      cost(j) = Rat(-1);
    maximize(cost, cols_);
    for (Eigen::Index i = 0; i < t_.rows(); ++i)
      if (basis_[static_cast<std::size_t>(i)] >= first_artificial_ && !t_(i, cols_).is_zero())
        return false;
    // Pivot remaining (zero-valued) artificials out where possible; rows
    // where that fails are redundant and stay inert.
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (basis_[static_cast<std::size_t>(i)] < first_artificial_)
        continue;
      for (Eigen::Index j = 0; j < first_artificial_; ++j) {
        if (!t_(i, j).is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  RatVector structural_solution() const {
    RatVector x = RatVector::Zero(num_structural_);
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      Eigen::Index b = basis_[static_cast<std::size_t>(i)];
      if (b < num_structural_)
        x(b) = t_(i, cols_);
    }
    return x;
  }

  Eigen::Index first_artificial() const { return first_artificial_; }
  Eigen::Index cols() const { return cols_; }

private:
  bool is_basic(Eigen::Index j) const {
    for (auto b : basis_)
      if (b == j)
        return true;
    return false;
  }

  void pivot(Eigen::Index r, Eigen::Index c) {
    Rat p = t_(r, c);
    t_.row(r) /= p;
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r || t_(i, c).is_zero())
        continue;
      Rat f = t_(i, c);
      t_.row(i) -= t_.row(r) * f;
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  Eigen::Index num_structural_;
  Eigen::Index first_artificial_ = 0;
  Eigen::Index cols_ = 0;
  RatMatrix t_;
  std::vector<Eigen::Index> basis_;
};

} // namespace

bool satisfies(const RatVector& u, std::span<const LinearConstraint> constraints) {
  for (Eigen::Index j = 0; j < u.size(); ++j)
    if (u(j) < 0)
      return false;
  for (const auto& c : constraints) {
    Rat lhs = c.coeffs.dot(u);
    if (c.relation == Relation::LessEq ? lhs > c.rhs : lhs < c.rhs)
      return false;
  }
  return true;
}

LpFeasibility lp_feasible(Eigen::Index num_vars, std::span<const LinearConstraint> constraints) {
  Tableau tableau(num_vars, constraints);
  if (!tableau.phase_one())
    return {false, {}};
  RatVector witness = tableau.structural_solution();
  if (!satisfies(witness, constraints))
    throw Error(Errc::Internal, "simplex witness fails substitution check");
  return {true, witness};
}

LpOptimum lp_maximize(const RatVector& objective, std::span<const LinearConstraint> constraints) {
  Tableau tableau(objective.size(), constraints);
  if (!tableau.phase_one())
    return {LpStatus::Infeasible, {}, Rat(0)};
  RatVector cost = RatVector::Zero(tableau.cols());
  cost.head(objective.size()) = objective;
  if (!tableau.maximize(cost, tableau.first_artificial()))
    return {LpStatus::Unbounded, {}, Rat(0)};
  RatVector x = tableau.structural_solution();
  if (!satisfies(x, constraints))
    throw Error(Errc::Internal, "simplex optimum fails substitution check");
  Rat value = objective.dot(x);
  return {LpStatus::Optimal, x, value};
}

} // namespace lapvol
