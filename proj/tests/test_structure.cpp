#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcoh/catalog.hpp"
#include "nilcoh/structure.hpp"
#include "oracles.hpp"

using namespace nilcoh;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

Subgroup gen(GroupPtr const& g, std::vector<elem_t> seeds) { return Subgroup::generated(g, seeds); }

std::vector<GroupPtr> sample_groups() {
  return {cyclic_group(12),   abelian_group({2, 2, 2}), dihedral_group(3),
          dihedral_group(4),  dihedral_group(6),        quaternion_group(),
          heisenberg_group(3), symmetric_group(4),
          direct_product(quaternion_group(), cyclic_group(3)),
          Group::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, 4)};
}

}  // namespace

TEST_CASE("primes") {
  CHECK(prime_divisors(12) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_divisors(1).empty());
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  CHECK(p_part(24, 2) == 8);
  CHECK(is_p_power(27, 3));
  CHECK_FALSE(is_p_power(12, 2));
}

TEST_CASE("lower central series and nilpotency") {
  auto c6 = cyclic_group(6);
  CHECK(is_nilpotent(c6));
  CHECK(lower_central_series(Subgroup::whole(c6)).size() == 2);
  auto s3 = dihedral_group(3);
  CHECK_FALSE(is_nilpotent(s3));
  CHECK(lower_central_series(Subgroup::whole(s3)).back().order() == 3);
  CHECK(is_nilpotent(quaternion_group()));
}

TEST_CASE("Sylow subgroups") {
  CHECK(sylow_subgroup(cyclic_group(6), 2).order() == 2);
  CHECK(sylow_subgroup(dihedral_group(4), 2).is_whole());
  auto s3 = dihedral_group(3);
  auto p  = sylow_subgroup(s3, 2);
  CHECK(p.order() == 2);
  CHECK(all_sylow_subgroups(Subgroup::whole(s3), 2).size() == 3);
  CHECK(all_sylow_subgroups(Subgroup::whole(symmetric_group(4)), 3).size() == 4);
  CHECK(all_sylow_subgroups(Subgroup::whole(symmetric_group(4)), 2).size() == 3);
}

TEST_CASE("Hall p' subgroups") {
  CHECK(hall_pprime(cyclic_group(6), 2).order() == 3);
  CHECK(hall_pprime(cyclic_group(6), 5).is_whole());
  CHECK(code_of([] { hall_pprime(dihedral_group(3), 2); }) == Errc::NotNilpotent);
}

TEST_CASE("nilpotent decomposition") {
  auto d = nilpotent_decomposition(cyclic_group(6));
  CHECK(d.primes == std::vector<std::uint64_t>{2, 3});
  CHECK(d.sylow_parts[0].order() == 2);
  CHECK(d.sylow_parts[1].order() == 3);
  CHECK(nilpotent_decomposition(quaternion_group()).sylow_parts.size() == 1);
  auto c12 = nilpotent_decomposition(cyclic_group(12));
  CHECK(c12.sylow_parts[0].order() == 4);
  CHECK(c12.sylow_parts[1].order() == 3);
  CHECK(code_of([] { nilpotent_decomposition(dihedral_group(3)); }) == Errc::NotNilpotent);
}

TEST_CASE("subgroups of given order in D4") {
  auto d4 = dihedral_group(4);
  CHECK(enumerate_subgroups_of_order(d4, 2, 1).size() == 5);
  CHECK(enumerate_subgroups_of_order(d4, 4, 2).size() == 3);
  CHECK(enumerate_subgroups_of_order(d4, 8, 1).size() == 1);
  CHECK(min_generators(Subgroup::whole(d4)) == 2);
  CHECK(min_generators(Subgroup::whole(abelian_group({2, 2, 2}))) == 3);
}

TEST_CASE("complements") {
  auto d4 = dihedral_group(4);
  CHECK(complements(d4, gen(d4, {1}), 1).size() == 4);
  auto c4 = cyclic_group(4);
  CHECK(complements(c4, gen(c4, {2}), 1).empty());
  auto whole = complements(c4, Subgroup::trivial(c4), 1);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].is_whole());
  CHECK(code_of([&] { complements(d4, gen(d4, {4}), 1); }) == Errc::NotNormal);
}

TEST_CASE("local conjugacy") {
  auto d4 = dihedral_group(4);
  CHECK(locally_conjugate(gen(d4, {4}), gen(d4, {6})));
  CHECK_FALSE(locally_conjugate(gen(d4, {4}), gen(d4, {7})));
  CHECK(locally_conjugate(Subgroup::trivial(d4), Subgroup::trivial(d4)));
}

TEST_CASE("properties: nilpotency and Sylow subgroups against oracles") {
  for (auto const& g : sample_groups()) {
    CAPTURE(g->order());
    CHECK(is_nilpotent(g) == oracle::is_nilpotent(*g));
    for (auto p : prime_divisors(g->order())) {
      auto const s = sylow_subgroup(g, p);
      CHECK(s.order() == p_part(g->order(), p));
      auto const sylows = all_sylow_subgroups(Subgroup::whole(g), p);
      std::vector<oracle::Set> mine;
      for (auto const& x : sylows) {
        mine.push_back(oracle::elements_of(x));
      }
      CHECK(mine == oracle::sylow_subgroups(*g, oracle::all_elements(*g), p));
      if (is_nilpotent(g)) {
        CHECK(is_normal(s));
        CHECK(sylows.size() == 1);
        CHECK(oracle::elements_of(s) == oracle::p_elements(*g, p));
      }
    }
  }
}

TEST_CASE("properties: primary components recombine") {
  for (auto const& g : sample_groups()) {
    for (elem_t x = 0; x < g->order(); ++x) {
      elem_t prod = 0;
      for (auto p : prime_divisors(g->order())) {
        auto const c = primary_component(*g, x, p);
        CHECK(is_p_power(g->element_order(c), p));
        prod = g->mul(prod, c);
      }
      CHECK(prod == x);
    }
  }
}

TEST_CASE("properties: subgroup enumeration is complete for small orders") {
  for (auto const& g : sample_groups()) {
    if (g->order() > 27) {
      continue;
    }
    auto const all = oracle::all_subgroups(*g);
    for (std::size_t m = 1; m <= g->order(); ++m) {
      if (g->order() % m != 0) {
        continue;
      }
      std::vector<oracle::Set> want;
      for (auto const& s : all) {
        if (s.size() == m) {
          want.push_back(s);
        }
      }
      std::vector<oracle::Set> got;
      for (auto const& s : enumerate_subgroups_of_order(g, m, 3)) {
        got.push_back(oracle::elements_of(s));
      }
      std::sort(got.begin(), got.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("properties: complements and their classes against oracles") {
  for (auto const& g : sample_groups()) {
    if (g->order() > 27) {
      continue;
    }
    for (auto const& ns : oracle::all_subgroups(*g)) {
      if (!oracle::is_normal(*g, ns)) {
        continue;
      }
      auto const n    = Subgroup::from_elements(g, ns);
      auto const want = oracle::complements(*g, ns);
      auto const got  = complements(g, n, 3);
      std::vector<oracle::Set> got_sets;
      for (auto const& k : got) {
        got_sets.push_back(oracle::elements_of(k));
      }
      std::sort(got_sets.begin(), got_sets.end());
      CHECK(got_sets == want);
      CHECK(conjugacy_classes_of(got, n).size() == oracle::conjugacy_class_count(*g, want, ns));
    }
  }
}

TEST_CASE("properties: conjugate subgroups are locally conjugate") {
  oracle::Gen rnd(21);
  for (auto const& g : sample_groups()) {
    for (int t = 0; t < 10; ++t) {
      auto const s = Subgroup::from_elements(g, rnd.subgroup(*g));
      auto const c = s.conjugate(rnd.element(*g));
      CHECK(locally_conjugate(s, c));
    }
    if (g->order() > 27) {
      continue;
    }
    auto const all = oracle::all_subgroups(*g);
    for (int t = 0; t < 5; ++t) {
      auto const a = rnd.subgroup(*g);
      for (auto const& b : all) {
        if (b.size() == a.size()) {
          CHECK(locally_conjugate(Subgroup::from_elements(g, a), Subgroup::from_elements(g, b))
                == oracle::locally_conjugate(*g, a, b));
        }
      }
    }
  }
}
