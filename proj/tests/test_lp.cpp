#include "lapvol/lp.hpp"

#include <doctest.h>

#include <random>

using namespace lapvol;

namespace {

RatVector vec(std::initializer_list<long> xs) {
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs)
    v(i++) = x;
  return v;
}

} // namespace

TEST_CASE("feasibility examples") {
  std::vector<LinearConstraint> ok{{vec({1, 0}), Relation::GreaterEq, Rat(1)}};
  auto f = lp_feasible(2, ok);
  REQUIRE(f.feasible);
  CHECK(f.witness(0) >= 1);
  CHECK(satisfies(f.witness, ok));

  std::vector<LinearConstraint> bad{{vec({-1, 0}), Relation::GreaterEq, Rat(1)}};
  CHECK_FALSE(lp_feasible(2, bad).feasible);
}

TEST_CASE("compactness system of the three-row example") {
  // A' u >= e_2 with A = [[1,1],[-2,2],[2,-1]]
  std::vector<LinearConstraint> sys{
      {vec({1, -2, 2}), Relation::GreaterEq, Rat(1)},
      {vec({1, 2, -1}), Relation::GreaterEq, Rat(1)},
  };
  auto f = lp_feasible(3, sys);
  REQUIRE(f.feasible);
  CHECK(satisfies(f.witness, sys));
  CHECK(satisfies(vec({1, 0, 0}), sys));
}

TEST_CASE("maximize") {
  // max x + y, x + 2y <= 4, 3x + y <= 6
  std::vector<LinearConstraint> sys{
      {vec({1, 2}), Relation::LessEq, Rat(4)},
      {vec({3, 1}), Relation::LessEq, Rat(6)},
  };
  auto opt = lp_maximize(vec({1, 1}), sys);
  REQUIRE(opt.status == LpStatus::Optimal);
  CHECK(opt.value == Rat(14, 5));
  CHECK(opt.x(0) == Rat(8, 5));
  CHECK(opt.x(1) == Rat(6, 5));

  std::vector<LinearConstraint> open{{vec({1, -1}), Relation::LessEq, Rat(1)}};
  CHECK(lp_maximize(vec({0, 1}), open).status == LpStatus::Unbounded);

  std::vector<LinearConstraint> none{{vec({1, 1}), Relation::LessEq, Rat(-1)}};
  CHECK(lp_maximize(vec({1, 1}), none).status == LpStatus::Infeasible);
}

TEST_CASE("degenerate vertices do not cycle") {
  // classic Beale-style degeneracy: many tight constraints at the origin
  std::vector<LinearConstraint> sys{
      {vec({1, -1, 0}), Relation::LessEq, Rat(0)},
      {vec({-1, 1, 0}), Relation::LessEq, Rat(0)},
      {vec({1, 1, -2}), Relation::LessEq, Rat(0)},
      {vec({0, 0, 1}), Relation::LessEq, Rat(1)},
  };
  auto opt = lp_maximize(vec({1, 1, 1}), sys);
  REQUIRE(opt.status == LpStatus::Optimal);
  CHECK(opt.value == 3);
}

TEST_CASE("feasibility agrees with brute-force vertex search in two variables") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LinearConstraint> sys;
    for (int i = 0; i < 3; ++i)
      sys.push_back({vec({c(rng), c(rng)}), i % 2 ? Relation::LessEq : Relation::GreaterEq,
                     Rat(c(rng))});
    // a nonempty polyhedron inside the quadrant contains no line, so it has a
    // vertex where two of the boundary lines meet
    std::vector<std::pair<Rat, Rat>> candidates{{0, 0}};
    std::vector<std::array<Rat, 3>> lines{{1, 0, 0}, {0, 1, 0}};
    for (const auto& k : sys)
      lines.push_back({k.coeffs(0), k.coeffs(1), k.rhs});
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        auto [a, b, e] = lines[i];
        auto [d, g, f] = lines[j];
        Rat det = a * g - b * d;
        if (det != 0)
          candidates.push_back({(e * g - b * f) / det, (a * f - e * d) / det});
      }
    bool brute = false;
    for (const auto& [x, y] : candidates) {
      RatVector u(2);
      u << x, y;
      brute = brute || satisfies(u, sys);
    }
    auto f = lp_feasible(2, sys);
    if (f.feasible)
      CHECK(satisfies(f.witness, sys));
    CHECK(f.feasible == brute);
  }
}
