#pragma once

#include "lapvol/error.hpp"
#include "lapvol/rat.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lapvol {

/// Integration variable: lambda_1 .. lambda_m, or the transform variable p.
/// Ordered lambda_1 < ... < lambda_m < p.
struct VarId {
  std::int32_t index = 0;

  static constexpr VarId lambda(int k) { return VarId{k}; }
  static constexpr VarId p() { return VarId{std::numeric_limits<std::int32_t>::max()}; }

  constexpr bool is_p() const { return index == p().index; }

  friend constexpr auto operator<=>(VarId, VarId) = default;
};

std::string to_string(VarId v);

template <typename Scalar>
using Assignment = std::map<VarId, Scalar>;

/// Homogeneous linear form sum_k coeff_k * v_k with exact coefficients.
/// Stored sorted by variable with no zero entries, so == is mathematical
/// equality.
class LinForm {
public:
  using Entry = std::pair<VarId, Rat>;

  LinForm() = default;
  LinForm(std::initializer_list<Entry> entries);

  static LinForm var(VarId v, const Rat& coeff = Rat(1));

  bool is_zero() const { return entries_.empty(); }
  Rat coeff(VarId v) const;
  bool contains(VarId v) const;
  const std::vector<Entry>& entries() const { return entries_; }

  /// Lowest variable with nonzero coefficient.
  std::optional<VarId> leading_var() const;

  LinForm operator-() const;
  LinForm& operator+=(const LinForm& rhs);
  LinForm& operator-=(const LinForm& rhs);
  LinForm& operator*=(const Rat& s);

  friend LinForm operator+(LinForm a, const LinForm& b) { return a += b; }
  friend LinForm operator-(LinForm a, const LinForm& b) { return a -= b; }
  friend LinForm operator*(LinForm a, const Rat& s) { return a *= s; }
  friend LinForm operator*(const Rat& s, LinForm a) { return a *= s; }

  friend bool operator==(const LinForm&, const LinForm&) = default;
  friend bool operator<(const LinForm& a, const LinForm& b) {
    return a.entries_ < b.entries_;
  }

private:
  void set(VarId v, Rat value);

  std::vector<Entry> entries_;
};

std::string to_string(const LinForm& f);

/// Replaces `var` by `root`: form - c*var + c*root with c = coeff(form, var).
/// `root` must not contain `var` or any variable ordered before it.
LinForm lf_substitute(const LinForm& form, VarId var, const LinForm& root);

/// sum coeff * values[v]. Throws Errc::InvalidInput on a missing variable.
template <typename Scalar>
Scalar lf_eval(const LinForm& form, const Assignment<Scalar>& values) {
  Scalar acc(0);
  for (const auto& [v, c] : form.entries()) {
    auto it = values.find(v);
    if (it == values.end())
      throw Error(Errc::InvalidInput, "lf_eval: no value for " + to_string(v));
    if constexpr (std::is_same_v<Scalar, Rat>)
      acc += c * it->second;
    else
      acc += static_cast<Scalar>(to_double(c)) * it->second;
  }
  return acc;
}

struct SolvedFactor {
  Rat leading;  // coefficient of the variable in the factor
  LinForm root; // value of the variable where the factor vanishes
};

/// Solves factor = 0 for `var`. Throws Errc::NotAPoleInVar when the factor
/// does not contain `var`.
SolvedFactor lf_solve_for(const LinForm& factor, VarId var);

/// Some nonzero r with f = r * g, if one exists. Zero forms are never parallel.
std::optional<Rat> lf_parallel(const LinForm& f, const LinForm& g);

} // namespace lapvol
