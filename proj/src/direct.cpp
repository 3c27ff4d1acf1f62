#include "lapvol/direct.hpp"

#include <algorithm>

namespace lapvol {

void merge_proportional_factors(Term& term) {
  std::vector<Factor> merged;
  for (auto& f : term.denom) {
    if (f.form.is_zero())
      throw Error(Errc::NotPointed, "a denominator factor is identically zero");
    auto same = std::find_if(merged.begin(), merged.end(),
                             [&](const Factor& g) { return lf_parallel(f.form, g.form).has_value(); });
    if (same == merged.end()) {
      merged.push_back(std::move(f));
      continue;
    }
    // f = r g, so 1/f^k = r^-k / g^k
    Rat r = *lf_parallel(f.form, same->form);
    term.coeff /= pow(r, static_cast<unsigned>(f.multiplicity));
    same->multiplicity += f.multiplicity;
  }
  term.denom = std::move(merged);
}

Term initial_term(const NormalizedInstance& norm) {
  const auto m = norm.rows();
  const auto n = norm.dim();
  Term t;
  for (Eigen::Index i = 0; i < m; ++i)
    t.exponent += LinForm::var(VarId::lambda(static_cast<int>(i + 1)));
  for (Eigen::Index i = 0; i < m; ++i)
    t.denom.push_back({LinForm::var(VarId::lambda(static_cast<int>(i + 1))), 1});
  for (Eigen::Index j = 0; j < n; ++j) {
    LinForm column;
    for (Eigen::Index i = 0; i < m; ++i)
      column += LinForm::var(VarId::lambda(static_cast<int>(i + 1)), norm.a(i, j));
    t.denom.push_back({std::move(column), 1});
  }
  merge_proportional_factors(t);
  return t;
}

std::function<bool(const Assignment<Rat>&)> direct_domain(const RatMatrix& a) {
  return [a](const Assignment<Rat>& abscissae) {
    RatVector c(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      c(i) = abscissae.at(VarId::lambda(static_cast<int>(i + 1)));
    return is_strict_interior(a, c);
  };
}

DirectRun run_direct(const NormalizedInstance& norm, const DirectOptions& options) {
  const auto m = norm.rows();
  const auto n = norm.dim();
  DirectRun run;
  run.initial_abscissae = options.abscissae ? *options.abscissae
                          : norm.interior.size() == m ? norm.interior
                                                      : find_strict_interior(norm.a);
  if (!is_strict_interior(norm.a, run.initial_abscissae))
    throw Error(Errc::InvalidInput, "abscissae must satisfy c > 0 and A'c > 0");

  for (Eigen::Index i = 0; i < m; ++i)
    run.config.abscissae[VarId::lambda(static_cast<int>(i + 1))] = run.initial_abscissae(i);
  run.config.admissible = direct_domain(norm.a);

  std::vector<Term> terms{initial_term(norm)};
  const VarId last = VarId::lambda(static_cast<int>(m));
  PoleHistory history;
  auto rule = [](VarId) { return SideRule::ByExponentSign; };

  if (m > 1) {
    const VarId first = VarId::lambda(1);
    terms = eliminate(std::move(terms), std::span(&first, 1), run.config, rule, history,
                      run.levels);
    for (std::size_t i = 0; i < terms.size(); ++i)
      terms[i].branch = i;
    std::vector<VarId> rest;
    for (Eigen::Index k = 2; k < m; ++k)
      rest.push_back(VarId::lambda(static_cast<int>(k)));
    terms = eliminate(std::move(terms), rest, run.config, rule, history, run.levels);
  }

  const std::size_t branches =
      m > 1 && !run.levels.empty() ? run.levels.front().terms_out : std::size_t{1};
  run.branch_partials.assign(branches, Rat(0));
  for (const auto& t : terms) {
    if (t.degree_in(last) != n + 1 || t.total_multiplicity() != n + 1)
      throw Error(Errc::Internal, "final-level term does not have n+1 factors in " +
                                      to_string(last) + ": " + to_string(t));
    Rat v = final_level_value(t, last);
    run.branch_partials.at(t.branch) += v;
    run.result += v;
  }
  run.leaves = terms.size();
  return run;
}

} // namespace lapvol
