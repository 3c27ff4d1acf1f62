#include "lapvol/rat.hpp"

#include "lapvol/error.hpp"

#include <algorithm>
#include <cctype>

namespace lapvol {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+'))
    s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

BigInt parse_int(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  // a leading 0 would select octal
  while (s.size() > 1 && s.front() == '0')
    s.remove_prefix(1);
  BigInt v{std::string(s)};
  return negative ? BigInt(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Rat parse_decimal(std::string_view s) {
  std::string_view mantissa = s;
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    auto exp_text = s.substr(e + 1);
    if (!is_integer_literal(exp_text))
      throw Error(Errc::InvalidInput, "bad exponent in '" + std::string(s) + "'");
    exponent = std::stol(std::string(exp_text));
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char c : mantissa) {
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point)
        ++frac_digits;
    } else {
      throw Error(Errc::InvalidInput, "bad decimal literal '" + std::string(s) + "'");
    }
  }
  if (digits.empty())
    throw Error(Errc::InvalidInput, "bad decimal literal '" + std::string(s) + "'");
  Rat value{parse_int(digits)};
  long shift = exponent - frac_digits;
  Rat ten(10);
  Rat scale = pow(ten, static_cast<unsigned>(shift < 0 ? -shift : shift));
  value = shift < 0 ? value / scale : value * scale;
  return negative ? Rat(-value) : value;
}

} // namespace

bool looks_decimal(std::string_view text) {
  text = trim(text);
  return text.find_first_of(".eE") != std::string_view::npos;
}

Rat parse_rat(std::string_view text, bool allow_decimal) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw Error(Errc::InvalidInput, "bad rational literal '" + std::string(text) + "'");
    BigInt d = parse_int(den);
    if (d == 0)
      throw Error(Errc::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    return Rat(parse_int(num), d);
  }
  if (is_integer_literal(text))
    return Rat(parse_int(text));
  if (looks_decimal(text)) {
    if (!allow_decimal)
      throw Error(Errc::InvalidInput,
                  "'" + std::string(text) +
                      "' is a decimal literal; coefficients must be exact (write "
                      "integers or p/q, or pass --tolerate-floats)");
    return parse_decimal(text);
  }
  throw Error(Errc::InvalidInput, "bad rational literal '" + std::string(text) + "'");
}

std::string to_string(const Rat& r) {
  if (denominator_of(r) == 1)
    return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

std::string to_decimal(const Rat& r, int digits) {
  BigInt num = numerator_of(r);
  BigInt den = denominator_of(r);
  bool negative = num < 0;
  if (negative)
    num = -num;
  if (digits < 0)
    digits = 0;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i)
    scale *= 10;
  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  // round half away from zero
  if (2 * (scaled % den) >= den)
    ++q;
  std::string out = BigInt(q / scale).str();
  if (digits > 0) {
    std::string frac = BigInt(q % scale).str();
    out.push_back('.');
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  bool all_zero = std::all_of(out.begin(), out.end(), [](char c) { return c == '0' || c == '.'; });
  if (negative && !all_zero)
    out.insert(out.begin(), '-');
  return out;
}

Rat factorial(unsigned k) {
  Rat f(1);
  for (unsigned i = 2; i <= k; ++i)
    f *= i;
  return f;
}

Rat pow(const Rat& x, unsigned k) {
  Rat result(1);
  Rat base = x;
  while (k) {
    if (k & 1u)
      result *= base;
    base *= base;
    k >>= 1u;
  }
  return result;
}

} // namespace lapvol
