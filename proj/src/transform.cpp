#include "lapvol/transform.hpp"

#include "lapvol/direct.hpp"

namespace lapvol {

namespace {

// lambda_1 = p - sum_{j>=2} lambda_j
LinForm eliminated_first(Eigen::Index m) {
  LinForm f = LinForm::var(VarId::p());
  for (Eigen::Index j = 2; j <= m; ++j)
    f -= LinForm::var(VarId::lambda(static_cast<int>(j)));
  return f;
}

// Domain of H: (d - sum_{j>=2} c_j, c_2, ..., c_m) > 0 with A' of it > 0.
std::function<bool(const Assignment<Rat>&)> transform_domain(const RatMatrix& a) {
  return [a](const Assignment<Rat>& abscissae) {
    RatVector y(a.rows());
    Rat first = abscissae.at(VarId::p());
    for (Eigen::Index i = 1; i < a.rows(); ++i) {
      y(i) = abscissae.at(VarId::lambda(static_cast<int>(i + 1)));
      first -= y(i);
    }
    y(0) = first;
    return is_strict_interior(a, y);
  };
}

} // namespace

Term substituted_term(const NormalizedInstance& norm) {
  const auto m = norm.rows();
  const auto n = norm.dim();
  const LinForm first = eliminated_first(m);
  Term t;
  t.denom.push_back({first, 1});
  for (Eigen::Index i = 2; i <= m; ++i)
    t.denom.push_back({LinForm::var(VarId::lambda(static_cast<int>(i))), 1});
  for (Eigen::Index j = 0; j < n; ++j) {
    LinForm column = first * norm.a(0, j);
    for (Eigen::Index i = 1; i < m; ++i)
      column += LinForm::var(VarId::lambda(static_cast<int>(i + 1)), norm.a(i, j));
    t.denom.push_back({std::move(column), 1});
  }
  merge_proportional_factors(t);
  return t;
}

TransformRun run_transform(const NormalizedInstance& norm, const TransformOptions& options) {
  const auto m = norm.rows();
  const auto n = norm.dim();
  TransformRun run;
  run.initial_abscissae = options.abscissae ? *options.abscissae
                          : norm.interior.size() == m ? norm.interior
                                                      : find_strict_interior(norm.a);
  if (!is_strict_interior(norm.a, run.initial_abscissae))
    throw Error(Errc::InvalidInput, "abscissae must satisfy c > 0 and A'c > 0");

  run.config.abscissae[VarId::p()] = run.initial_abscissae.sum();
  for (Eigen::Index i = 1; i < m; ++i)
    run.config.abscissae[VarId::lambda(static_cast<int>(i + 1))] = run.initial_abscissae(i);
  run.config.admissible = transform_domain(norm.a);

  std::vector<VarId> vars;
  for (Eigen::Index k = 2; k <= m; ++k)
    vars.push_back(VarId::lambda(static_cast<int>(k)));
  auto rule = [&options](VarId v) {
    auto it = options.side_overrides.find(v);
    return it == options.side_overrides.end() ? SideRule::FewerPoles : it->second;
  };
  PoleHistory history;
  auto terms = eliminate({substituted_term(norm)}, vars, run.config, rule, history, run.levels);

  const VarId p = VarId::p();
  for (const auto& t : terms) {
    if (!t.exponent.is_zero())
      throw Error(Errc::MalformedH, "transform term carries an exponential: " + to_string(t));
    Rat k = t.coeff;
    int q = 0;
    for (const auto& f : t.denom) {
      if (f.form.entries().size() != 1 || !f.form.contains(p))
        throw Error(Errc::MalformedH, "surviving factor is not a multiple of p: " + to_string(t));
      k /= pow(f.form.coeff(p), static_cast<unsigned>(f.multiplicity));
      q += f.multiplicity;
    }
    if (q != n + 1)
      throw Error(Errc::MalformedH, "surviving term has p-multiplicity " + std::to_string(q) +
                                        ", expected " + std::to_string(n + 1));
    run.h_coefficient += k;
  }
  run.surviving_terms = terms.size();
  run.result = run.h_coefficient / factorial(static_cast<unsigned>(n));
  return run;
}

} // namespace lapvol
