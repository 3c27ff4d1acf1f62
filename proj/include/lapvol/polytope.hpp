#pragma once

#include "lapvol/rat.hpp"

#include <optional>
#include <vector>

namespace lapvol {

/// {x in R^n_+ | A x <= b}; A is m x n.
struct PolytopeInstance {
  RatMatrix a;
  RatVector b;

  Eigen::Index rows() const { return a.rows(); }
  Eigen::Index dim() const { return a.cols(); }
};

/// Rows scaled so that b = e_m, vacuous and duplicate rows removed.
/// `compact`/`pointed` are only set by prepare().
struct NormalizedInstance {
  RatMatrix a;
  std::vector<Eigen::Index> source_rows; // input row of each kept row
  Eigen::Index dropped_zero_rows = 0;
  Eigen::Index merged_duplicates = 0;

  bool compact = false;
  bool pointed = false;
  RatVector compact_witness; // u >= 0 with A'u >= e_n
  RatVector interior;        // c > 0 with A'c > 0

  Eigen::Index rows() const { return a.rows(); }
  Eigen::Index dim() const { return a.cols(); }
};

/// Divides each row by b_i. Throws NonpositiveB, EmptyAfterCleanup or
/// InvalidInput (shape mismatch).
NormalizedInstance normalize(const PolytopeInstance& inst);

/// u >= 0 with A'u >= e_n, if any (bounded iff one exists).
std::optional<RatVector> compactness_witness(const RatMatrix& a);

bool check_compact(const RatMatrix& a);

/// c > 0 with A'c > 0, found by maximizing a common margin t subject to
/// c >= t, A'c >= t, sum c <= 1. The returned vector is rescaled to a
/// primitive integer vector. Throws NotPointed when the optimal margin is 0.
RatVector find_strict_interior(const RatMatrix& a);

/// True iff some x >= 0, x != 0 has A x = 0, i.e. no lambda of any sign
/// makes A'lambda > 0. Used to tell a non-pointed instance from one that is
/// merely unbounded.
bool has_blind_direction(const RatMatrix& a);

/// normalize + check_compact + find_strict_interior. Throws NotCompact or
/// NotPointed (see has_blind_direction) on failure.
NormalizedInstance prepare(const PolytopeInstance& inst);

/// Exact test that c > 0 and A'c > 0.
bool is_strict_interior(const RatMatrix& a, const RatVector& c);

} // namespace lapvol
