#include "lapvol/polytope.hpp"

#include "lapvol/error.hpp"
#include "lapvol/lp.hpp"

namespace lapvol {

namespace {

RatVector primitive_integer(const RatVector& v) {
  BigInt l(1);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    l = boost::multiprecision::lcm(l, denominator_of(v(i)));
  BigInt g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    g = boost::multiprecision::gcd(g, BigInt(numerator_of(v(i)) * (l / denominator_of(v(i)))));
  if (g == 0)
    return v;
  RatVector out = v;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    out(i) = v(i) * Rat(l) / Rat(g);
  return out;
}

} // namespace

NormalizedInstance normalize(const PolytopeInstance& inst) {
  if (inst.a.rows() != inst.b.size())
    throw Error(Errc::InvalidInput, "A has " + std::to_string(inst.a.rows()) + " rows but b has " +
                                        std::to_string(inst.b.size()) + " entries");
  if (inst.a.rows() < 1 || inst.a.cols() < 1)
    throw Error(Errc::InvalidInput, "instance needs m >= 1 and n >= 1");
  for (Eigen::Index i = 0; i < inst.b.size(); ++i)
    if (inst.b(i) <= 0)
      throw Error(Errc::NonpositiveB, "b[" + std::to_string(i) + "] = " + to_string(inst.b(i)) +
                                          " is not positive; the method requires b > 0");

  NormalizedInstance out;
  std::vector<RatVector> kept;
  for (Eigen::Index i = 0; i < inst.a.rows(); ++i) {
    RatVector row = inst.a.row(i).transpose() / inst.b(i);
    bool zero = true;
    for (Eigen::Index j = 0; j < row.size() && zero; ++j)
      zero = row(j).is_zero();
    if (zero) {
      ++out.dropped_zero_rows;
      continue;
    }
    bool duplicate = false;
    for (const auto& k : kept)
      duplicate = duplicate || k == row;
    if (duplicate) {
      ++out.merged_duplicates;
      continue;
    }
    kept.push_back(row);
    out.source_rows.push_back(i);
  }
  if (kept.empty())
    throw Error(Errc::EmptyAfterCleanup, "every constraint row is vacuous");
  out.a.resize(static_cast<Eigen::Index>(kept.size()), inst.a.cols());
  for (std::size_t i = 0; i < kept.size(); ++i)
    out.a.row(static_cast<Eigen::Index>(i)) = kept[i].transpose();
  return out;
}

std::optional<RatVector> compactness_witness(const RatMatrix& a) {
  // u in R^m_+, (A'u)_j >= 1 for every column j.
  std::vector<LinearConstraint> rows;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    rows.push_back({a.col(j), Relation::GreaterEq, Rat(1)});
  auto result = lp_feasible(a.rows(), rows);
  if (!result.feasible)
    return std::nullopt;
  return result.witness;
}

bool check_compact(const RatMatrix& a) { return compactness_witness(a).has_value(); }

bool is_strict_interior(const RatMatrix& a, const RatVector& c) {
  if (c.size() != a.rows())
    return false;
  for (Eigen::Index i = 0; i < c.size(); ++i)
    if (c(i) <= 0)
      return false;
  RatVector ac = transpose_times(a, c);
  for (Eigen::Index j = 0; j < ac.size(); ++j)
    if (ac(j) <= 0)
      return false;
  return true;
}

RatVector find_strict_interior(const RatMatrix& a) {
  const Eigen::Index m = a.rows();
  // Variables (c_1..c_m, t).
  std::vector<LinearConstraint> rows;
  for (Eigen::Index i = 0; i < m; ++i) {
    RatVector coeffs = RatVector::Zero(m + 1);
    coeffs(i) = Rat(1);
    coeffs(m) = Rat(-1);
    rows.push_back({coeffs, Relation::GreaterEq, Rat(0)});
  }
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    RatVector coeffs(m + 1);
    coeffs.head(m) = a.col(j);
    coeffs(m) = Rat(-1);
    rows.push_back({coeffs, Relation::GreaterEq, Rat(0)});
  }
  RatVector total = RatVector::Ones(m + 1);
  total(m) = Rat(0);
  rows.push_back({total, Relation::LessEq, Rat(1)});

  RatVector objective = RatVector::Zero(m + 1);
  objective(m) = Rat(1);
  auto opt = lp_maximize(objective, rows);
  if (opt.status != LpStatus::Optimal || opt.value <= 0)
    throw Error(Errc::NotPointed,
                "no c > 0 with A'c > 0: {x >= 0, Ax <= 0} has a nonzero solution, so the "
                "Laplace-transform representation does not apply");
  RatVector c = primitive_integer(opt.x.head(m));
  if (!is_strict_interior(a, c))
    throw Error(Errc::Internal, "strict interior witness fails re-verification");
  return c;
}

bool has_blind_direction(const RatMatrix& a) {
  // Gordan: exists lambda (free) with A'lambda > 0  <=>  no x >= 0, x != 0, Ax = 0.
  // Split lambda = plus - minus and scale the strict margin to 1.
  const Eigen::Index m = a.rows();
  std::vector<LinearConstraint> rows;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    RatVector coeffs(2 * m);
    coeffs.head(m) = a.col(j);
    coeffs.tail(m) = -a.col(j);
    rows.push_back({coeffs, Relation::GreaterEq, Rat(1)});
  }
  return !lp_feasible(2 * m, rows).feasible;
}

NormalizedInstance prepare(const PolytopeInstance& inst) {
  NormalizedInstance norm = normalize(inst);
  auto u = compactness_witness(norm.a);
  if (!u) {
    if (has_blind_direction(norm.a))
      throw Error(Errc::NotPointed,
                  "not pointed: some x >= 0, x != 0 satisfies Ax = 0, so no lambda makes "
                  "A'lambda > 0");
    throw Error(Errc::NotCompact, "polytope is unbounded (compactness LP infeasible)");
  }
  norm.compact = true;
  norm.compact_witness = *u;
  norm.interior = find_strict_interior(norm.a);
  norm.pointed = true;
  return norm;
}

} // namespace lapvol
