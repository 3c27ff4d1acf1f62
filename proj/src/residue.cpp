#include "lapvol/residue.hpp"

#include <algorithm>
#include <map>

namespace lapvol {

int Term::degree_in(VarId v) const {
  int d = 0;
  for (const auto& f : denom)
    if (f.form.contains(v))
      d += f.multiplicity;
  return d;
}

int Term::total_multiplicity() const {
  int d = 0;
  for (const auto& f : denom)
    d += f.multiplicity;
  return d;
}

std::string to_string(const Term& t) {
  std::string out = to_string(t.coeff);
  if (!t.exponent.is_zero())
    out += " * exp(" + to_string(t.exponent) + ")";
  out += " / [";
  for (std::size_t i = 0; i < t.denom.size(); ++i) {
    if (i)
      out += " ";
    out += "(" + to_string(t.denom[i].form) + ")";
    if (t.denom[i].multiplicity != 1)
      out += "^" + std::to_string(t.denom[i].multiplicity);
  }
  return out + "]";
}

const char* to_string(Side s) {
  switch (s) {
  case Side::Left: return "left";
  case Side::Right: return "right";
  case Side::OnPath: return "on-path";
  }
  return "?";
}

const Rat& ContourConfig::abscissa(VarId v) const {
  auto it = abscissae.find(v);
  if (it == abscissae.end())
    throw Error(Errc::Internal, "no abscissa for " + to_string(v));
  return it->second;
}

Side classify(const LinForm& root, VarId var, const Assignment<Rat>& abscissae) {
  Rat value = lf_eval(root, abscissae);
  auto it = abscissae.find(var);
  if (it == abscissae.end())
    throw Error(Errc::Internal, "no abscissa for " + to_string(var));
  if (value < it->second)
    return Side::Left;
  if (value > it->second)
    return Side::Right;
  return Side::OnPath;
}

std::vector<PoleSite> poles_of(const Term& term, VarId var, const ContourConfig& config) {
  std::vector<PoleSite> sites;
  for (const auto& f : term.denom) {
    if (!f.form.contains(var))
      continue;
    auto [leading, root] = lf_solve_for(f.form, var);
    auto it = std::find_if(sites.begin(), sites.end(),
                           [&](const PoleSite& s) { return s.root == root; });
    if (it != sites.end()) {
      it->order += f.multiplicity;
      continue;
    }
    Side side = classify(root, var, config.abscissae);
    sites.push_back({std::move(root), std::move(leading), side, f.multiplicity});
  }
  return sites;
}

Term residue_simple(const Term& term, VarId var, const PoleSite& pole) {
  if (pole.order != 1)
    throw Error(Errc::DegenerateInstance,
                "pole " + to_string(var) + " = " + to_string(pole.root) + " has order " +
                    std::to_string(pole.order) + " in " + to_string(term) +
                    "; coincident poles are not supported. Perturbing the entries of A "
                    "slightly makes the data generic, at the cost of an approximate volume");
  Term out;
  out.branch = term.branch;
  out.denom.reserve(term.denom.size() - 1);
  bool found = false;
  for (const auto& f : term.denom) {
    if (!found && f.form.contains(var)) {
      auto solved = lf_solve_for(f.form, var);
      if (solved.root == pole.root) {
        out.coeff = term.coeff / solved.leading;
        found = true;
        continue;
      }
    }
    LinForm substituted = lf_substitute(f.form, var, pole.root);
    if (substituted.is_zero())
      throw Error(Errc::Internal, "factor vanishes at a simple pole: " + to_string(term));
    out.denom.push_back({std::move(substituted), f.multiplicity});
  }
  if (!found)
    throw Error(Errc::Internal, "no factor of " + to_string(term) + " vanishes at " +
                                    to_string(var) + " = " + to_string(pole.root));
  out.exponent = lf_substitute(term.exponent, var, pole.root);
  return out;
}

namespace {

Side fewer_poles_side(const std::vector<PoleSite>& poles) {
  auto left = std::count_if(poles.begin(), poles.end(),
                            [](const PoleSite& p) { return p.side == Side::Left; });
  auto right = static_cast<std::ptrdiff_t>(poles.size()) - left;
  return right < left ? Side::Right : Side::Left;
}

} // namespace

std::vector<Term> integrate_var(std::span<const Term> terms, VarId var,
                                const ContourConfig& config, SideRule rule,
                                LevelStats* stats) {
  std::vector<Term> out;
  for (const auto& term : terms) {
    auto poles = poles_of(term, var, config);
    for (const auto& p : poles)
      if (p.side == Side::OnPath)
        throw Error(Errc::Internal, "pole " + to_string(var) + " = " + to_string(p.root) +
                                       " lies on the integration path");
    const Rat alpha = term.exponent.coeff(var);
    const int degree = term.degree_in(var);
    if (rule != SideRule::ByExponentSign && !alpha.is_zero())
      throw Error(Errc::Internal, "closure rule requires a pure rational term: " + to_string(term));
    if (alpha.is_zero() && degree <= 1)
      throw Error(Errc::DivergentSlice,
                  "term " + to_string(term) + " has zero exponent and degree " +
                      std::to_string(degree) + " in " + to_string(var) +
                      "; the arc contribution does not vanish");

    Side side = Side::Left;
    switch (rule) {
    case SideRule::ByExponentSign:
      side = alpha > 0 ? Side::Left : alpha < 0 ? Side::Right : fewer_poles_side(poles);
      break;
    case SideRule::FewerPoles: side = fewer_poles_side(poles); break;
    case SideRule::AlwaysLeft: side = Side::Left; break;
    case SideRule::AlwaysRight: side = Side::Right; break;
    }
    if (stats) {
      stats->poles_found += poles.size();
      (side == Side::Left ? stats->left_closures : stats->right_closures) += 1;
    }
    for (const auto& p : poles) {
      if (p.side != side)
        continue;
      Term r = residue_simple(term, var, p);
      if (side == Side::Right)
        r.coeff = -r.coeff;
      out.push_back(std::move(r));
    }
  }
  if (stats) {
    stats->var = var;
    stats->terms_in += terms.size();
    stats->terms_out += out.size();
  }
  return out;
}

Rat final_level_value(const Term& term, VarId var) {
  Rat k = term.coeff;
  int q = 0;
  for (const auto& f : term.denom) {
    if (f.form.entries().size() != 1 || !f.form.contains(var))
      throw Error(Errc::Internal, "final level expects multiples of " + to_string(var) +
                                      ", got " + to_string(f.form));
    k /= pow(f.form.coeff(var), static_cast<unsigned>(f.multiplicity));
    q += f.multiplicity;
  }
  if (!term.exponent.is_zero() &&
      (term.exponent.entries().size() != 1 || !term.exponent.contains(var)))
    throw Error(Errc::Internal, "final level exponent must involve only " + to_string(var));
  Rat alpha = term.exponent.coeff(var);
  if (q == 1 && alpha.is_zero())
    throw Error(Errc::DivergentSlice, "final level term " + to_string(term) + " is 1/v");
  if (alpha <= 0 || q == 0)
    return Rat(0);
  return k * pow(alpha, static_cast<unsigned>(q - 1)) / factorial(static_cast<unsigned>(q - 1));
}

namespace {

bool sides_stable_in(std::span<const LevelPoles> levels, const Assignment<Rat>& abscissae) {
  for (const auto& level : levels)
    for (std::size_t i = 0; i < level.roots.size(); ++i)
      if (classify(level.roots[i], level.var, abscissae) != level.sides[i])
        return false;
  return true;
}

Rat min_gap(const LevelPoles& level, const Assignment<Rat>& abscissae, bool skip_zero) {
  const Rat& c = abscissae.at(level.var);
  std::optional<Rat> best;
  for (const auto& root : level.roots) {
    Rat gap = lf_eval(root, abscissae) - c;
    if (gap < 0)
      gap = -gap;
    if (skip_zero && gap.is_zero())
      continue;
    if (!best || gap < *best)
      best = gap;
  }
  return best.value_or(Rat(0));
}

} // namespace

bool sides_stable(const PoleHistory& history, const Assignment<Rat>& abscissae) {
  return sides_stable_in(history, abscissae);
}

ContourConfig perturb_abscissa(const ContourConfig& config, VarId level,
                               std::span<const PoleSite> offending_poles,
                               const PoleHistory& history) {
  if (offending_poles.empty())
    return config;
  auto current = std::find_if(history.rbegin(), history.rend(),
                              [&](const LevelPoles& l) { return l.var == level; });
  if (current == history.rend())
    throw Error(Errc::Internal, "no pole history for " + to_string(level));
  const std::size_t current_index =
      static_cast<std::size_t>(std::distance(history.begin(), current.base()) - 1);
  std::span<const LevelPoles> earlier(history.data(), current_index);

  Rat epsilon = min_gap(*current, config.abscissae, /*skip_zero=*/true);
  epsilon = epsilon.is_zero() ? Rat(1) : Rat(epsilon / 2);

  ContourConfig next = config;
  for (int attempt = 0; attempt < 4096; ++attempt, epsilon /= 2) {
    next.abscissae[level] = config.abscissa(level) + epsilon;
    if (config.admissible && !config.admissible(next.abscissae))
      continue;
    if (min_gap(*current, next.abscissae, /*skip_zero=*/false).is_zero())
      continue;
    if (!sides_stable_in(earlier, next.abscissae))
      continue;
    next.ledger.push_back({level, min_gap(*current, next.abscissae, false), epsilon});
    return next;
  }
  throw Error(Errc::Internal, "no admissible shift found for " + to_string(level));
}

std::vector<Term> eliminate(std::vector<Term> terms, std::span<const VarId> vars,
                            ContourConfig& config,
                            const std::function<SideRule(VarId)>& rule_for,
                            PoleHistory& history, std::vector<LevelStats>& stats) {
  for (VarId var : vars) {
    LevelStats st;
    st.var = var;
    std::map<LinForm, Side> seen;
    std::vector<PoleSite> offending;
    for (const auto& term : terms) {
      for (auto& p : poles_of(term, var, config)) {
        if (!seen.emplace(p.root, p.side).second)
          continue;
        if (p.side == Side::OnPath)
          offending.push_back(std::move(p));
      }
    }
    LevelPoles level{var, {}, {}};
    for (auto& [root, side] : seen) {
      level.roots.push_back(root);
      level.sides.push_back(side);
    }
    history.push_back(std::move(level));
    if (!offending.empty()) {
      config = perturb_abscissa(config, var, offending, history);
      auto& back = history.back();
      for (std::size_t i = 0; i < back.roots.size(); ++i)
        back.sides[i] = classify(back.roots[i], var, config.abscissae);
      st.perturbations = 1;
    }
    terms = integrate_var(terms, var, config, rule_for(var), &st);
    stats.push_back(st);
  }
  return terms;
}

} // namespace lapvol
