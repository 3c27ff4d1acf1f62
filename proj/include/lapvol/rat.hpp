#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace lapvol {

/// Exact rational scalar. GMP-backed, always in lowest terms with a
/// positive denominator. Expression templates are disabled so that the type
/// behaves as a plain value inside Eigen expressions.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rat>;
using RatVector = Vector<Rat>;

inline BigInt numerator_of(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Rat& r) { return r.sign(); }

/// Parses "p/q", "-p/q" or an integer string. Decimal and exponent literals
/// are refused unless `allow_decimal` is set, in which case "0.1" becomes 1/10
/// exactly. Throws lapvol::Error(Errc::InvalidInput).
Rat parse_rat(std::string_view text, bool allow_decimal = false);

/// True iff `text` is a decimal literal ("0.25", "1e-3") rather than p/q.
bool looks_decimal(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rat& r);

/// Decimal expansion rounded half away from zero to `digits` fractional
/// digits, computed exactly in integers.
std::string to_decimal(const Rat& r, int digits);

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// k! as an exact rational.
Rat factorial(unsigned k);

/// x^k for k >= 0.
Rat pow(const Rat& x, unsigned k);

/// Transpose-times-vector for rational data, A'v.
inline RatVector transpose_times(const RatMatrix& a, const RatVector& v) {
  return a.transpose() * v;
}

} // namespace lapvol
