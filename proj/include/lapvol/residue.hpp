#pragma once

#include "lapvol/linform.hpp"

#include <functional>
#include <span>
#include <vector>

namespace lapvol {

struct Factor {
  LinForm form;
  int multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// coeff * exp(exponent) / prod(factor^multiplicity), z fixed at 1.
/// `branch` tags the first-level pole a term descends from.
struct Term {
  Rat coeff{1};
  LinForm exponent;
  std::vector<Factor> denom;
  std::size_t branch = 0;

  int degree_in(VarId v) const;
  int total_multiplicity() const;
};

std::string to_string(const Term& t);

enum class Side { Left, Right, OnPath };

const char* to_string(Side s);

struct PoleSite {
  LinForm root;
  Rat leading;
  Side side = Side::Left;
  int order = 1;
};

struct PerturbationRecord {
  VarId level;
  Rat delta;   // distance of the nearest pole to the shifted path
  Rat epsilon; // shift applied to the abscissa
};

/// Real abscissae of the Bromwich paths and the shift ledger. `admissible`
/// encodes the domain condition (c > 0, A'c > 0, or its transform-method
/// counterpart) that every shifted configuration must keep.
struct ContourConfig {
  Assignment<Rat> abscissae;
  std::vector<PerturbationRecord> ledger;
  std::function<bool(const Assignment<Rat>&)> admissible;

  const Rat& abscissa(VarId v) const;
};

/// Every distinct pole root seen while integrating one variable, with the
/// side it was classified on.
struct LevelPoles {
  VarId var;
  std::vector<LinForm> roots;
  std::vector<Side> sides;
};
using PoleHistory = std::vector<LevelPoles>;

enum class SideRule {
  ByExponentSign, // direct method
  FewerPoles,     // pure rational terms; either closure is valid
  AlwaysLeft,
  AlwaysRight,
};

struct LevelStats {
  VarId var;
  std::size_t terms_in = 0;
  std::size_t poles_found = 0;
  std::size_t left_closures = 0;
  std::size_t right_closures = 0;
  std::size_t terms_out = 0;
  std::size_t perturbations = 0;
};

Side classify(const LinForm& root, VarId var, const Assignment<Rat>& abscissae);

/// Pole sites of `term` seen as a function of `var`, one per distinct root.
std::vector<PoleSite> poles_of(const Term& term, VarId var, const ContourConfig& config);

/// Residue at a simple pole; the result no longer contains `var`.
/// Throws DegenerateInstance when pole.order > 1.
Term residue_simple(const Term& term, VarId var, const PoleSite& pole);

/// Integrates every term along Re(var) = abscissa(var) by closing the
/// contour on one side. Right closures contribute negated residues.
std::vector<Term> integrate_var(std::span<const Term> terms, VarId var,
                                const ContourConfig& config, SideRule rule,
                                LevelStats* stats = nullptr);

/// (1/2 pi i) integral of K exp(alpha v) / v^q along Re(v) = c > 0:
/// K alpha^(q-1)/(q-1)! for alpha > 0, otherwise 0.
Rat final_level_value(const Term& term, VarId var);

/// Shifts abscissa(level) by some epsilon > 0 so that no pole recorded for
/// `level` lies on the path, every pole of earlier levels keeps its side and
/// the domain stays admissible. Returns `config` unchanged when
/// `offending_poles` is empty.
ContourConfig perturb_abscissa(const ContourConfig& config, VarId level,
                               std::span<const PoleSite> offending_poles,
                               const PoleHistory& history);

/// True iff every root in `history` still sits on its recorded side.
bool sides_stable(const PoleHistory& history, const Assignment<Rat>& abscissae);

/// Integrates out `vars` in order, recording pole history, repairing paths
/// and appending one LevelStats per variable. `rule_for` picks the closure
/// rule for each variable.
std::vector<Term> eliminate(std::vector<Term> terms, std::span<const VarId> vars,
                            ContourConfig& config,
                            const std::function<SideRule(VarId)>& rule_for,
                            PoleHistory& history, std::vector<LevelStats>& stats);

} // namespace lapvol
