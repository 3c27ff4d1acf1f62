#pragma once

#include "lapvol/polytope.hpp"
#include "lapvol/residue.hpp"

#include <optional>

namespace lapvol {

struct DirectOptions {
  /// Initial abscissae c; must satisfy c > 0, A'c > 0. Defaults to the
  /// strict-interior witness of the instance.
  std::optional<RatVector> abscissae;
};

/// One run of the iterated-residue method. `branch_partials[i]` is the sum of
/// all leaves below the i-th first-level pole.
struct DirectRun {
  RatVector initial_abscissae;
  ContourConfig config;
  std::vector<LevelStats> levels;
  std::vector<Rat> branch_partials;
  std::size_t leaves = 0;
  Rat result{0};
};

/// exp(lambda_1 + ... + lambda_m) / (prod lambda_i * prod_j (A'lambda)_j).
Term initial_term(const NormalizedInstance& norm);

DirectRun run_direct(const NormalizedInstance& norm, const DirectOptions& options = {});

inline Rat volume_direct(const NormalizedInstance& norm) { return run_direct(norm).result; }

/// Domain predicate c > 0, A'c > 0 over the lambda abscissae.
std::function<bool(const Assignment<Rat>&)> direct_domain(const RatMatrix& a);

/// Folds proportional factors into one factor of higher multiplicity. A pole
/// of order > 1 is only an error if a contour closure later selects it.
/// Throws NotPointed on an identically zero factor.
void merge_proportional_factors(Term& term);

} // namespace lapvol
