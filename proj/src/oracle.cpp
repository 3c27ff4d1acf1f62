#include "lapvol/oracle.hpp"

#include "lapvol/error.hpp"

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <random>
#include <thread>

namespace lapvol {

namespace {

void require_generic(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size() || a.size() == 0)
    throw Error(Errc::GenericityViolated, "a and b must have the same positive length");
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    if (a(j).is_zero() || b(j).is_zero())
      throw Error(Errc::GenericityViolated, "a_j b_j = 0 at j = " + std::to_string(j));
    if (a(j) == b(j))
      throw Error(Errc::GenericityViolated, "a_j = b_j at j = " + std::to_string(j));
    for (Eigen::Index k = 0; k < j; ++k)
      if (a(j) * b(k) == a(k) * b(j))
        throw Error(Errc::GenericityViolated, "a_j/b_j repeats at j = " + std::to_string(j));
  }
}

// (a_j - b_j)^n / (a_j b_j prod_{k != j} (b_k a_j - a_k b_j))
Rat column_term(const RatVector& a, const RatVector& b, Eigen::Index j) {
  const auto n = static_cast<unsigned>(a.size());
  Rat den = a(j) * b(j);
  for (Eigen::Index k = 0; k < a.size(); ++k)
    if (k != j)
      den *= b(k) * a(j) - a(k) * b(j);
  return pow(a(j) - b(j), n) / den;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

} // namespace

Rat m2_closed_form(const RatVector& a, const RatVector& b) {
  require_generic(a, b);
  // Column j's first-level pole lies left of the path only when a_j > 0; its
  // leaf survives only when the final exponent 1 - b_j/a_j is positive.
  Rat value = Rat(1) / b.prod();
  for (Eigen::Index j = 0; j < a.size(); ++j)
    if (a(j) > 0 && b(j) < a(j))
      value -= column_term(a, b, j);
  return value / factorial(static_cast<unsigned>(a.size()));
}

Rat m2_closed_form_swapped(const RatVector& a, const RatVector& b) {
  return m2_closed_form(b, a);
}

bool identity_check(const RatVector& a, const RatVector& b) {
  require_generic(a, b);
  Rat lhs(0);
  for (Eigen::Index j = 0; j < a.size(); ++j)
    lhs += column_term(a, b, j);
  return lhs == Rat(1) / b.prod() - Rat(1) / a.prod();
}

KnownInstance known_instance(const KnownKind& kind) {
  struct Visitor {
    KnownInstance operator()(const Simplex& s) const {
      if (s.n < 1)
        throw Error(Errc::InvalidInput, "simplex dimension must be >= 1");
      KnownInstance k;
      k.instance.a = RatMatrix::Ones(1, s.n);
      k.instance.b = RatVector::Ones(1);
      k.volume = Rat(1) / factorial(static_cast<unsigned>(s.n));
      return k;
    }
    KnownInstance operator()(const Box& box) const {
      const auto n = box.sides.size();
      if (n < 1)
        throw Error(Errc::InvalidInput, "box dimension must be >= 1");
      KnownInstance k;
      k.instance.a = RatMatrix::Identity(n, n);
      k.instance.b = box.sides;
      k.volume = box.sides.prod();
      return k;
    }
    KnownInstance operator()(const PaperExample&) const {
      KnownInstance k;
      k.instance.a.resize(3, 2);
      k.instance.a << Rat(1), Rat(1), Rat(-2), Rat(2), Rat(2), Rat(-1);
      k.instance.b = RatVector::Ones(3);
      k.volume = Rat(17, 48);
      return k;
    }
  };
  return std::visit(Visitor{}, kind);
}

McEstimate mc_volume(const PolytopeInstance& inst, std::uint64_t samples, std::uint64_t seed) {
  auto u = compactness_witness(inst.a);
  if (!u)
    throw Error(Errc::NotCompact, "polytope is unbounded; no sampling box exists");
  McEstimate out;
  out.samples = samples;
  out.seed = seed;
  out.box_bound = u->dot(inst.b);
  if (out.box_bound <= 0 || samples == 0) {
    // Only the origin is feasible (or nothing was sampled).
    return out;
  }

  const Eigen::MatrixXd a = inst.a.unaryExpr([](const Rat& r) { return to_double(r); });
  const Eigen::VectorXd b = inst.b.unaryExpr([](const Rat& r) { return to_double(r); });
  const double side = to_double(out.box_bound);
  const auto n = a.cols();

  constexpr std::size_t kShards = 8;
  std::array<std::uint64_t, kShards> hits{};
  {
    std::vector<std::jthread> workers;
    for (std::size_t s = 0; s < kShards; ++s) {
      std::uint64_t count = samples / kShards + (s < samples % kShards ? 1 : 0);
      workers.emplace_back([&, s, count] {
        std::mt19937_64 gen(splitmix64(seed ^ splitmix64(s + 1)));
        Eigen::VectorXd x(n);
        std::uint64_t local = 0;
        for (std::uint64_t i = 0; i < count; ++i) {
          for (Eigen::Index j = 0; j < n; ++j)
            x(j) = unit_double(gen) * side;
          bool inside = true;
          for (Eigen::Index r = 0; r < a.rows() && inside; ++r)
            inside = a.row(r).dot(x) <= b(r);
          local += inside;
        }
        hits[s] = local;
      });
    }
  }
  for (auto h : hits)
    out.hits += h;
  const double box_volume = std::pow(side, static_cast<double>(n));
  const double frac = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.estimate = frac * box_volume;
  out.std_error = std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples)) * box_volume;
  return out;
}

} // namespace lapvol
