#pragma once

#include <stdexcept>
#include <string>

namespace lapvol {

enum class Errc {
  InvalidInput,       // malformed instance, bad rational literal, bad contour
  NonpositiveB,       // some b_i <= 0
  EmptyAfterCleanup,  // every row was vacuous
  NotCompact,         // Remark-1 LP infeasible
  NotPointed,         // {x >= 0, Ax <= 0} has a nonzero solution
  DegenerateInstance, // pole of order > 1 selected, or coincident factors
  DivergentSlice,     // zero exponent and denominator degree <= 1
  MalformedH,         // surviving transform term is not C / p^(n+1)
  NotAPoleInVar,      // factor does not contain the variable
  GenericityViolated, // closed-form preconditions fail
  Internal,
};

const char* to_string(Errc code);

/// Stable process exit code for each error category.
int exit_code(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace lapvol
