#pragma once

#include "lapvol/polytope.hpp"
#include "lapvol/residue.hpp"

#include <map>
#include <optional>

namespace lapvol {

struct TransformOptions {
  /// Initial c (length m, c > 0, A'c > 0). p's abscissa is d = sum(c).
  std::optional<RatVector> abscissae;
  /// Per-variable closure override; FewerPoles elsewhere.
  std::map<VarId, SideRule> side_overrides;
};

struct TransformRun {
  RatVector initial_abscissae;
  ContourConfig config;
  std::vector<LevelStats> levels;
  std::size_t surviving_terms = 0;
  Rat h_coefficient{0}; // C in H(p) = C / p^(n+1)
  Rat result{0};        // C / n!
};

/// G(p - lambda_2 - ... - lambda_m, lambda_2, ..., lambda_m) as a single
/// pure-rational term, proportional factors merged.
Term substituted_term(const NormalizedInstance& norm);

TransformRun run_transform(const NormalizedInstance& norm, const TransformOptions& options = {});

inline Rat volume_transform(const NormalizedInstance& norm) { return run_transform(norm).result; }

} // namespace lapvol
