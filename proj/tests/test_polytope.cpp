#include "lapvol/error.hpp"
#include "lapvol/oracle.hpp"
#include "lapvol/polytope.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace lapvol;
using lapvol::testing::bounded_by_rays;
using lapvol::testing::exact_area_2d;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  RatMatrix a(static_cast<Eigen::Index>(rows.size()),
              static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (auto r : rows) {
    Eigen::Index j = 0;
    for (long x : r)
      a(i, j++) = x;
    ++i;
  }
  return a;
}

RatVector vec(std::initializer_list<long> xs) {
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs)
    v(i++) = x;
  return v;
}

const RatMatrix kExample = mat({{1, 1}, {-2, 2}, {2, -1}});

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

} // namespace

TEST_CASE("normalize examples") {
  auto n1 = normalize({kExample, vec({1, 1, 1})});
  CHECK(n1.a == kExample);

  auto n2 = normalize({mat({{2, 2}}), vec({2})});
  CHECK(n2.a == mat({{1, 1}}));

  auto n3 = normalize({mat({{1, 1}, {2, 2}}), vec({1, 2})});
  CHECK(n3.a == mat({{1, 1}}));
  CHECK(n3.merged_duplicates == 1);

  auto n4 = normalize({mat({{0, 0}, {1, 3}}), vec({5, 3})});
  CHECK(n4.a.rows() == 1);
  CHECK(n4.dropped_zero_rows == 1);
  CHECK(n4.source_rows == std::vector<Eigen::Index>{1});
}

TEST_CASE("normalize errors") {
  CHECK(code_of([] { normalize({mat({{1, 1}}), vec({0})}); }) == Errc::NonpositiveB);
  CHECK(code_of([] { normalize({mat({{1, 1}}), vec({-1})}); }) == Errc::NonpositiveB);
  CHECK(code_of([] { normalize({mat({{0, 0}}), vec({1})}); }) == Errc::EmptyAfterCleanup);
  CHECK(code_of([] { normalize({mat({{1, 1}}), vec({1, 1})}); }) == Errc::InvalidInput);
}

TEST_CASE("compactness examples") {
  auto u = compactness_witness(kExample);
  REQUIRE(u);
  RatVector atu = transpose_times(kExample, *u);
  CHECK(atu(0) >= 1);
  CHECK(atu(1) >= 1);
  CHECK((u->array() >= Rat(0)).all());
  CHECK_FALSE(check_compact(mat({{1, -1}})));
  CHECK(check_compact(RatMatrix::Identity(4, 4)));
}

TEST_CASE("strict interior examples") {
  CHECK(is_strict_interior(kExample, vec({3, 2, 1})));
  CHECK_FALSE(is_strict_interior(kExample, vec({1, 1, 0})));
  CHECK(is_strict_interior(kExample, find_strict_interior(kExample)));
  RatVector c = find_strict_interior(RatMatrix::Identity(3, 3));
  CHECK((c.array() > Rat(0)).all());
  CHECK(code_of([] { find_strict_interior(mat({{-1, 1}})); }) == Errc::NotPointed);
}

TEST_CASE("prepare splits unbounded from not pointed") {
  CHECK(code_of([] { prepare({mat({{1, -1}, {1, -2}}), vec({1, 1})}); }) == Errc::NotCompact);
  CHECK(code_of([] { prepare({mat({{1, -1}}), vec({1})}); }) == Errc::NotPointed);
  CHECK(code_of([] { prepare({mat({{-1, 1}}), vec({1})}); }) == Errc::NotPointed);
  auto norm = prepare({kExample, vec({1, 1, 1})});
  CHECK(norm.compact);
  CHECK(norm.pointed);
  CHECK(is_strict_interior(norm.a, norm.interior));
}

TEST_CASE("compactness agrees with brute-force recession rays") {
  std::mt19937_64 rng(17);
  int bounded = 0, unbounded = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 3, m = 1 + trial % 4;
    auto inst = lapvol::testing::random_instance(rng, m, n, -3, 4, 3);
    if ((inst.a.array() == Rat(0)).all())
      continue;
    auto norm = normalize(inst);
    const bool lp = check_compact(norm.a);
    CHECK(lp == bounded_by_rays(norm.a));
    (lp ? bounded : unbounded) += 1;
    // bounded with b > 0 is the same as pointed
    bool interior = true;
    try {
      find_strict_interior(norm.a);
    } catch (const Error&) {
      interior = false;
    }
    CHECK(interior == lp);
    // a blind direction x >= 0, Ax = 0 makes the polytope unbounded
    if (has_blind_direction(norm.a))
      CHECK_FALSE(lp);
  }
  CHECK(bounded > 30);
  CHECK(unbounded > 30);
}

TEST_CASE("normalization preserves area") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = lapvol::testing::random_instance(rng, 3, 2, -2, 5, 6);
    auto norm = lapvol::testing::try_prepare(inst);
    if (!norm)
      continue;
    PolytopeInstance scaled{norm->a, RatVector::Ones(norm->rows())};
    CHECK(exact_area_2d(inst) == exact_area_2d(scaled));
  }
}

TEST_CASE("normalization preserves volume under sampling") {
  PolytopeInstance inst{mat({{2, 1, 1}, {1, 3, -1}, {-1, 1, 2}}), vec({4, 3, 5})};
  auto norm = prepare(inst);
  auto a = mc_volume(inst, 200000, 3);
  auto b = mc_volume({norm.a, RatVector::Ones(norm.rows())}, 200000, 4);
  const double se = std::hypot(a.std_error, b.std_error);
  CHECK(std::abs(a.estimate - b.estimate) <= 3 * se);
}
