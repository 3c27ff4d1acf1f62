#include "lapvol/direct.hpp"
#include "lapvol/oracle.hpp"
#include "lapvol/transform.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace lapvol;
using lapvol::testing::exact_area_2d;
using lapvol::testing::random_valid;

namespace {

const VarId l1 = VarId::lambda(1), l2 = VarId::lambda(2), l3 = VarId::lambda(3);
const VarId p = VarId::p();

NormalizedInstance example() { return prepare(known_instance(PaperExample{}).instance); }

RatVector vec(std::initializer_list<long> xs) {
  RatVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (long x : xs)
    v(i++) = x;
  return v;
}

NormalizedInstance permute_rows(const NormalizedInstance& norm, const std::vector<int>& order) {
  PolytopeInstance inst;
  inst.a.resize(norm.rows(), norm.dim());
  inst.b = RatVector::Ones(norm.rows());
  for (std::size_t i = 0; i < order.size(); ++i)
    inst.a.row(static_cast<Eigen::Index>(i)) = norm.a.row(order[i]);
  return prepare(inst);
}

bool has_factor(const Term& t, const LinForm& f) {
  return std::any_of(t.denom.begin(), t.denom.end(),
                     [&](const Factor& g) { return g.form == f && g.multiplicity == 1; });
}

} // namespace

TEST_CASE("initial term of the worked example") {
  Term t = initial_term(example());
  CHECK(t.exponent == LinForm{{l1, 1}, {l2, 1}, {l3, 1}});
  CHECK(t.coeff == 1);
  CHECK(t.denom.size() == 5);
  CHECK(has_factor(t, LinForm::var(l1)));
  CHECK(has_factor(t, LinForm::var(l2)));
  CHECK(has_factor(t, LinForm::var(l3)));
  CHECK(has_factor(t, LinForm{{l1, 1}, {l2, -2}, {l3, 2}}));
  CHECK(has_factor(t, LinForm{{l1, 1}, {l2, 2}, {l3, -1}}));
}

TEST_CASE("direct method on the worked example") {
  auto run = run_direct(example(), {vec({3, 2, 1})});
  CHECK(run.result == Rat(17, 48));
  auto partials = run.branch_partials;
  std::sort(partials.begin(), partials.end());
  CHECK(partials == std::vector<Rat>{Rat(-1, 8), Rat(0), Rat(23, 48)});
  CHECK(run.config.ledger.empty());
  REQUIRE(run.levels.size() == 2);
  CHECK(run.levels[0].terms_out == 3);
}

TEST_CASE("direct method repairs paths at c = (1,1,1)") {
  auto run = run_direct(example(), {vec({1, 1, 1})});
  CHECK(run.result == Rat(17, 48));
  CHECK_FALSE(run.config.ledger.empty());
  for (const auto& r : run.config.ledger)
    CHECK(r.epsilon > 0);
}

TEST_CASE("transform method on the worked example") {
  auto run = run_transform(example(), {vec({3, 2, 1}), {}});
  CHECK(run.h_coefficient == Rat(17, 24));
  CHECK(run.result == Rat(17, 48));
}

TEST_CASE("transform method in the worked M form") {
  // rows (3,1,2) turn the substituted integrand into
  // 1 / (l2 l3 (p - l2 - l3)(2p - l2 - 4 l3)(2 l2 + 3 l3 - p))
  auto norm = permute_rows(example(), {2, 0, 1});
  Term m = substituted_term(norm);
  CHECK(m.exponent.is_zero());
  CHECK(m.denom.size() == 5);
  CHECK(has_factor(m, LinForm::var(l2)));
  CHECK(has_factor(m, LinForm::var(l3)));
  CHECK(has_factor(m, LinForm{{p, 1}, {l2, -1}, {l3, -1}}));
  CHECK(has_factor(m, LinForm{{p, 2}, {l2, -1}, {l3, -4}}));
  CHECK(has_factor(m, LinForm{{p, -1}, {l2, 2}, {l3, 3}}));

  // both remaining paths at 1, d = 4, every closure on the left
  TransformOptions opts{vec({2, 1, 1}), {{l2, SideRule::AlwaysLeft}, {l3, SideRule::AlwaysLeft}}};
  auto run = run_transform(norm, opts);
  CHECK(run.h_coefficient == Rat(17, 24));
  CHECK(run.surviving_terms == 3);
}

TEST_CASE("transform closures do not change H") {
  auto norm = example();
  for (auto a : {SideRule::AlwaysLeft, SideRule::AlwaysRight, SideRule::FewerPoles})
    for (auto b : {SideRule::AlwaysLeft, SideRule::AlwaysRight, SideRule::FewerPoles}) {
      auto run = run_transform(norm, {vec({3, 2, 1}), {{l2, a}, {l3, b}}});
      CHECK(run.result == Rat(17, 48));
    }
}

TEST_CASE("m = 1 goes straight to the last level") {
  for (int n = 1; n <= 8; ++n) {
    auto k = known_instance(Simplex{n});
    auto norm = prepare(k.instance);
    auto d = run_direct(norm);
    CHECK(d.levels.empty());
    CHECK(d.result == k.volume);
    auto t = run_transform(norm);
    CHECK(t.h_coefficient == 1);
    CHECK(t.result == k.volume);
  }
  // a single row a > 0 gives 1 / (n! prod a)
  PolytopeInstance inst{RatMatrix(1, 3), vec({1})};
  inst.a << 2, 3, Rat(1, 2);
  CHECK(volume_direct(prepare(inst)) == Rat(1, 18));
  CHECK(volume_transform(prepare(inst)) == Rat(1, 18));
}

TEST_CASE("boxes are degenerate for both methods") {
  auto norm = prepare(known_instance(Box{vec({1, 1})}).instance);
  for (int method = 0; method < 2; ++method) {
    try {
      method ? volume_transform(norm) : volume_direct(norm);
      FAIL("expected DegenerateInstance");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateInstance);
    }
  }
}

TEST_CASE("both methods match exact polygon areas") {
  std::mt19937_64 rng(101);
  int done = 0;
  for (int trial = 0; trial < 80; ++trial) {
    auto norm = random_valid(rng, 2 + trial % 3, 2, -3, 5, 1, false);
    PolytopeInstance unit{norm.a, RatVector::Ones(norm.rows())};
    try {
      Rat d = volume_direct(norm);
      Rat t = volume_transform(norm);
      CHECK(d == exact_area_2d(unit));
      CHECK(t == d);
      ++done;
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateInstance);
    }
  }
  CHECK(done > 40);
}

TEST_CASE("row order does not matter") {
  std::mt19937_64 rng(103);
  int compared = 0;
  for (int trial = 0; trial < 15; ++trial) {
    auto norm = random_valid(rng, 3, 3, -2, 5, 1, false);
    Rat base;
    try {
      base = volume_direct(norm);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateInstance);
      continue;
    }
    std::vector<int> order(3);
    std::iota(order.begin(), order.end(), 0);
    do {
      // a permutation can move a repeated pole off the last level, so each
      // ordering may be degenerate on its own
      try {
        auto perm = permute_rows(norm, order);
        Rat d = volume_direct(perm);
        CHECK(d == base);
        CHECK(volume_transform(perm) == base);
        ++compared;
      } catch (const Error& e) {
        CHECK(e.code() == Errc::DegenerateInstance);
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  CHECK(compared > 40);
}

TEST_CASE("the choice of abscissae does not matter") {
  auto norm = example();
  for (auto c : {vec({3, 2, 1}), vec({1, 1, 1}), vec({5, 1, 2}), vec({7, 3, 3}), vec({2, 1, 1})}) {
    CHECK(run_direct(norm, {c}).result == Rat(17, 48));
    CHECK(run_transform(norm, {c, {}}).result == Rat(17, 48));
  }
  CHECK_THROWS_AS(run_direct(norm, {vec({1, 2, 1})}), Error);
}

TEST_CASE("scaling b by t scales the volume by t^n") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 8; ++trial) {
    auto inst = lapvol::testing::random_instance(rng, 3, 3, -1, 5, 4, false);
    auto norm = lapvol::testing::try_prepare(inst);
    if (!norm || norm->rows() != 3)
      continue;
    try {
      Rat v = volume_direct(*norm);
      for (Rat t : {Rat(1, 2), Rat(3)}) {
        PolytopeInstance scaled{inst.a, inst.b * t};
        CHECK(volume_direct(prepare(scaled)) == pow(t, 3) * v);
      }
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateInstance);
    }
  }
}

TEST_CASE("node counts stay within (n+1)^k") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 2 + trial % 3, n = 2 + trial % 4;
    auto norm = random_valid(rng, m, n, -2, 6, 1, false);
    try {
      auto run = run_direct(norm);
      std::size_t bound = 1;
      for (const auto& level : run.levels) {
        bound *= static_cast<std::size_t>(n + 1);
        CHECK(level.terms_out <= bound);
      }
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegenerateInstance);
    }
  }
}

TEST_CASE("transform terms carry no exponentials") {
  auto norm = example();
  Term t = substituted_term(norm);
  CHECK(t.exponent.is_zero());
  auto run = run_transform(norm);
  CHECK(run.surviving_terms > 0);
}
