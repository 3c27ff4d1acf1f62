#include "lapvol/linform.hpp"

#include <algorithm>
#include <cassert>

namespace lapvol {

std::string to_string(VarId v) {
  if (v.is_p())
    return "p";
  return "l" + std::to_string(v.index);
}

LinForm::LinForm(std::initializer_list<Entry> entries) {
  for (const auto& [v, c] : entries)
    set(v, coeff(v) + c);
}

LinForm LinForm::var(VarId v, const Rat& coeff) {
  LinForm f;
  f.set(v, coeff);
  return f;
}

Rat LinForm::coeff(VarId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VarId key) { return e.first < key; });
  return (it != entries_.end() && it->first == v) ? it->second : Rat(0);
}

bool LinForm::contains(VarId v) const { return !coeff(v).is_zero(); }

std::optional<VarId> LinForm::leading_var() const {
  if (entries_.empty())
    return std::nullopt;
  return entries_.front().first;
}

void LinForm::set(VarId v, Rat value) {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VarId key) { return e.first < key; });
  bool present = it != entries_.end() && it->first == v;
  if (value.is_zero()) {
    if (present)
      entries_.erase(it);
  } else if (present) {
    it->second = std::move(value);
  } else {
    entries_.insert(it, Entry{v, std::move(value)});
  }
}

LinForm LinForm::operator-() const {
  LinForm out = *this;
  for (auto& e : out.entries_)
    e.second = -e.second;
  return out;
}

LinForm& LinForm::operator+=(const LinForm& rhs) {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + rhs.entries_.size());
  auto a = entries_.begin();
  auto b = rhs.entries_.begin();
  while (a != entries_.end() || b != rhs.entries_.end()) {
    if (b == rhs.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rat sum = a->second + b->second;
      if (!sum.is_zero())
        merged.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  return *this;
}

LinForm& LinForm::operator-=(const LinForm& rhs) { return *this += -rhs; }

LinForm& LinForm::operator*=(const Rat& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_)
    e.second *= s;
  return *this;
}

std::string to_string(const LinForm& f) {
  if (f.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [v, c] : f.entries()) {
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1)
      out += to_string(mag) + "*";
    out += to_string(v);
    first = false;
  }
  return out;
}

LinForm lf_substitute(const LinForm& form, VarId var, const LinForm& root) {
  assert(!root.contains(var));
  assert(root.is_zero() || *root.leading_var() > var);
  Rat c = form.coeff(var);
  if (c.is_zero())
    return form;
  LinForm out = form - LinForm::var(var, c);
  out += root * c;
  return out;
}

SolvedFactor lf_solve_for(const LinForm& factor, VarId var) {
  Rat leading = factor.coeff(var);
  if (leading.is_zero())
    throw Error(Errc::NotAPoleInVar, to_string(factor) + " does not contain " + to_string(var));
  LinForm rest = factor - LinForm::var(var, leading);
  return {leading, rest * Rat(-1 / leading)};
}

std::optional<Rat> lf_parallel(const LinForm& f, const LinForm& g) {
  if (f.is_zero() || g.is_zero() || f.entries().size() != g.entries().size())
    return std::nullopt;
  const auto& fe = f.entries();
  const auto& ge = g.entries();
  if (fe.front().first != ge.front().first)
    return std::nullopt;
  Rat ratio = fe.front().second / ge.front().second;
  for (std::size_t i = 0; i < fe.size(); ++i) {
    if (fe[i].first != ge[i].first || fe[i].second != ratio * ge[i].second)
      return std::nullopt;
  }
  return ratio;
}

} // namespace lapvol
