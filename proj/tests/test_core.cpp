#include <doctest.h>

#include <random>
#include <set>

#include "kkth/errors.hpp"
#include "kkth/spectral.hpp"

using namespace kkth;
using namespace kkth::spectral;

namespace {

using Mo = std::array<unsigned, 8>;

std::set<Mo> mo_set(const std::vector<CoreSolution>& sols) {
  std::set<Mo> out;
  for (const auto& s : sols) out.insert(s.mo);
  return out;
}

const Mo all_ones{1, 1, 1, 1, 1, 1, 1, 1};

}  // namespace

TEST_CASE("core with Z2 everywhere and vanishing ends") {
  CoreConstraints cons;
  cons.mo_rank = {{0, 0}, {6, 0}, {7, 0}};
  auto sols = enumerate_core_solutions(all_ones, cons);
  CHECK(mo_set(sols) == std::set<Mo>{{0, 1, 1, 2, 1, 1, 0, 0}, {0, 1, 2, 2, 2, 1, 0, 0}});
  CHECK(sols.size() == 2);
  for (const auto& s : sols) CHECK(verify_core_certificate(all_ones, cons, s));
}

TEST_CASE("core constraints from the mixed family") {
  CoreConstraints cons;
  cons.mo_rank = {{0, 1}, {1, 1}, {5, 1}, {6, 1}, {7, 0}};
  auto sols = enumerate_core_solutions(all_ones, cons);
  CHECK(mo_set(sols).count(Mo{1, 1, 1, 2, 1, 1, 1, 0}) == 1);
  for (const auto& s : sols) {
    CHECK(verify_core_certificate(all_ones, cons, s));
    for (const auto& [i, r] : cons.mo_rank) CHECK(s.mo[i] == r);
  }
}

TEST_CASE("trivial MU forces a trivial core") {
  auto sols = enumerate_core_solutions(Mo{}, {});
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].mo == Mo{});
  CoreConstraints cons;
  cons.mo_rank = {{0, 1}};
  CHECK_THROWS_AS(enumerate_core_solutions(Mo{}, cons), NoSolution);
}

TEST_CASE("bound") {
  CHECK_THROWS_AS(enumerate_core_solutions(all_ones, {}, CoreOptions{1}), BoundExceeded);
}

TEST_CASE("arrow constraints narrow the solutions") {
  CoreConstraints cons;
  cons.mo_rank = {{0, 0}, {6, 0}, {7, 0}};
  cons.arrows.push_back({Arrow::Eta, 1, ArrowProperty::Zero});
  auto sols = enumerate_core_solutions(all_ones, cons);
  CHECK(mo_set(sols) == std::set<Mo>{{0, 1, 1, 2, 1, 1, 0, 0}});
  for (const auto& s : sols) CHECK(verify_core_certificate(all_ones, cons, s));
}

TEST_CASE("certificate check rejects tampering") {
  CoreConstraints cons;
  cons.mo_rank = {{0, 0}, {6, 0}, {7, 0}};
  for (auto s : enumerate_core_solutions(all_ones, cons)) {
    auto bad = s;
    bad.mo[3] += 1;
    CHECK_FALSE(verify_core_certificate(all_ones, cons, bad));
    bad = s;
    bad.c[2] = bad.c[2] ? 0 : 1;
    CHECK_FALSE(verify_core_certificate(all_ones, cons, bad));
  }
}

TEST_CASE("random MU: every solution verifies") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<unsigned> dim(0, 2);
  for (int trial = 0; trial < 25; ++trial) {
    Mo mu;
    for (auto& x : mu) x = dim(rng);
    CoreConstraints cons;
    cons.mo_rank[static_cast<int>(trial % 8)] = 0;
    try {
      for (const auto& s : enumerate_core_solutions(mu, cons, CoreOptions{6})) {
        REQUIRE(verify_core_certificate(mu, cons, s));
      }
    } catch (const NoSolution&) {
    } catch (const BoundExceeded&) {
    }
  }
}

TEST_CASE("elementary rank") {
  CHECK(elementary_rank(FgAbGroup()) == 0);
  CHECK(elementary_rank(FgAbGroup::from_invariants({2, 2, 2}, 0)) == 3);
  CHECK_THROWS_AS(elementary_rank(FgAbGroup::cyclic(4)), NoSolution);
  CHECK_THROWS_AS(elementary_rank(FgAbGroup::free(1)), NoSolution);
}

TEST_CASE("a known core is among the solutions for its MU") {
  const Mo mu{1, 0, 1, 0, 1, 0, 1, 0};
  auto sols = enumerate_core_solutions(mu, {});
  CHECK(mo_set(sols).count(Mo{0, 1, 1, 1, 1, 0, 0, 0}) == 1);
  for (const auto& s : sols) CHECK(verify_core_certificate(mu, {}, s));
}
