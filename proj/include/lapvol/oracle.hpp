#pragma once

#include "lapvol/polytope.hpp"

#include <cstdint>
#include <variant>

namespace lapvol {

/// Two-constraint closed form, rows a' and b' of A, integrating lambda_1
/// first: h(1) = (1/n!) [1/prod b - sum_{j in J} (a_j-b_j)^n /
/// (a_j b_j prod_{k!=j} (b_k a_j - a_k b_j))], J = {j : a_j > 0, b_j < a_j}.
/// Throws GenericityViolated unless a_j b_j != 0, a_j != b_j and the ratios
/// a_j/b_j are pairwise distinct.
Rat m2_closed_form(const RatVector& a, const RatVector& b);

/// Same volume, integrating lambda_2 first (a and b interchanged).
Rat m2_closed_form_swapped(const RatVector& a, const RatVector& b);

/// sum_j (a_j-b_j)^n / (a_j b_j prod_{k!=j} (b_k a_j - a_k b_j)) ==
/// 1/prod b - 1/prod a, evaluated exactly.
bool identity_check(const RatVector& a, const RatVector& b);

struct Simplex {
  int n;
};
struct Box {
  RatVector sides;
};
struct PaperExample {};

using KnownKind = std::variant<Simplex, Box, PaperExample>;

struct KnownInstance {
  PolytopeInstance instance;
  Rat volume;
};

KnownInstance known_instance(const KnownKind& kind);

struct McEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Rat box_bound{0};
  std::uint64_t hits = 0;
};

/// Hit-or-miss estimate over [0, u'b]^n where u >= 0, A'u >= e_n is the
/// compactness witness. Samples are split over a fixed number of shards, each
/// driven by its own mt19937_64 seeded from splitmix64(seed, shard), so the
/// result depends only on (instance, samples, seed). Throws NotCompact.
McEstimate mc_volume(const PolytopeInstance& inst, std::uint64_t samples, std::uint64_t seed);

} // namespace lapvol
