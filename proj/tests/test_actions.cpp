#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nilcoh/catalog.hpp"
#include "nilcoh/harness.hpp"
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

ActionPtr inversion(std::size_t j, std::size_t n) {
  auto nn = cyclic_group(n);
  return ActionOnGroup::from_generator_images(cyclic_group(j), nn, {1},
                                              {named_automorphism(*nn, "inversion")});
}

}  // namespace

TEST_CASE("actions from generator images") {
  auto a = inversion(2, 4);
  CHECK(a->apply(1, 1) == 3);
  CHECK(a->apply(0, 1) == 1);
  CHECK_FALSE(a->is_trivial());
  CHECK(code_of([] { inversion(3, 4); }) == Errc::NotAHomomorphism);

  auto v4   = abelian_group({2, 2});
  auto swap = ActionOnGroup::from_generator_images(cyclic_group(2), v4, {1},
                                                   {named_automorphism(*v4, "swap")});
  CHECK(swap->apply(1, 1) == 2);
  CHECK(swap->apply(1, 3) == 3);

  auto c4 = cyclic_group(4);
  CHECK(code_of([&] {
          ActionOnGroup::from_generator_images(cyclic_group(2), c4, {1}, {{0, 2, 1, 3}});
        })
        == Errc::NotAutomorphism);
  CHECK(code_of([&] {
          ActionOnGroup::from_generator_images(cyclic_group(4), c4, {2}, {{0, 3, 2, 1}});
        })
        == Errc::DoesNotGenerate);
}

TEST_CASE("trivial action") {
  auto a = ActionOnGroup::trivial(cyclic_group(2), cyclic_group(3));
  CHECK(a->is_trivial());
  for (elem_t n = 0; n < 3; ++n) {
    CHECK(a->apply(1, n) == n);
  }
}

TEST_CASE("conjugation actions") {
  auto d4 = dihedral_group(4);
  auto ca = conjugation_action(gen(d4, {1}), gen(d4, {4}));
  auto const& t = *ca.action->target();
  for (elem_t n = 0; n < t.order(); ++n) {
    CHECK(ca.action->apply(1, n) == t.inv(n));
  }
  auto cz = conjugation_action(center(d4), gen(d4, {4, 1}));
  CHECK(cz.action->is_trivial());
  CHECK(code_of([&] { conjugation_action(gen(d4, {4}), gen(d4, {1})); })
        == Errc::NotNormalized);
}

TEST_CASE("semidirect products") {
  auto d = semidirect(inversion(2, 4));
  CHECK(d.group->order() == 8);
  CHECK_FALSE(d.group->is_abelian());
  std::size_t order4 = 0;
  for (elem_t x = 0; x < 8; ++x) {
    order4 += d.group->element_order(x) == 4;
  }
  CHECK(order4 == 2);

  auto v4   = abelian_group({2, 2});
  auto swap = semidirect(ActionOnGroup::from_generator_images(
      cyclic_group(2), v4, {1}, {named_automorphism(*v4, "swap")}));
  CHECK_FALSE(swap.group->is_abelian());
  bool has4 = false;
  for (elem_t x = 0; x < 8; ++x) {
    has4 = has4 || swap.group->element_order(x) == 4;
  }
  CHECK(has4);

  auto triv = semidirect(ActionOnGroup::trivial(cyclic_group(3), cyclic_group(4)));
  auto const tn = triv.normal();
  auto const tj = triv.complement();
  for (auto n : tn.elements()) {
    for (auto j : tj.elements()) {
      CHECK(triv.group->mul(n, j) == triv.group->mul(j, n));
    }
  }
  CHECK(triv.group->is_abelian());

  Limits tight;
  tight.order_cap = 6;
  CHECK(code_of([&] { semidirect(inversion(2, 4), tight); }) == Errc::OrderCapExceeded);
}

TEST_CASE("coset G-sets") {
  auto d4    = dihedral_group(4);
  auto r     = gen(d4, {4});
  auto omega = coset_gset(r);
  CHECK(omega.size() == 4);
  CHECK(coset_gset(Subgroup::whole(d4)).size() == 1);
  CHECK(coset_gset(Subgroup::trivial(cyclic_group(4))).size() == 4);

  auto a = gen(d4, {1});
  CHECK(is_transitive(omega, a));
  CHECK_FALSE(is_transitive(omega, Subgroup::trivial(d4)));
  CHECK(is_transitive(coset_gset(Subgroup::whole(d4)), Subgroup::trivial(d4)));

  auto fr = fixed_points(omega, r);
  REQUIRE_FALSE(fr.empty());
  CHECK(fr.front() == 0);
  CHECK(fixed_points(omega, a).empty());
  CHECK(fixed_points(omega, Subgroup::trivial(d4)).size() == 4);

  CHECK(stabilizer(omega, 0) == r);
  CHECK(stabilizer(coset_gset(Subgroup::trivial(cyclic_group(4))), 0).is_trivial());
  CHECK(orbit(omega, Subgroup::whole(d4), 0).size() * stabilizer(omega, 0).order() == 8);
}

TEST_CASE("G-sets from tables are validated") {
  auto c2 = cyclic_group(2);
  CHECK(GSet::make(c2, 2, {{0, 1}, {1, 0}}).act(1, 0) == 1);
  CHECK(GSet::make(c2, 2, {{0, 1}, {0, 1}}).act(1, 0) == 0);
  CHECK(code_of([&] { GSet::make(c2, 2, {{1, 0}, {1, 0}}); }) == Errc::NotAHomomorphism);
  CHECK(code_of([&] { GSet::make(c2, 2, {{0, 1}, {1, 1}}); }) == Errc::InvalidArgument);
  auto c4 = cyclic_group(4);
  // a acts as a transposition, so a^2 must act trivially
  CHECK(code_of([&] { GSet::make(c4, 2, {{0, 1}, {1, 0}, {1, 0}, {1, 0}}); })
        == Errc::NotAHomomorphism);
}

TEST_CASE("restricting the target to an invariant subgroup") {
  auto c12 = cyclic_group(12);
  auto a   = ActionOnGroup::from_generator_images(cyclic_group(2), c12, {1},
                                                  {named_automorphism(*c12, "inversion")});
  auto m   = gen(c12, {4});
  auto r   = restrict_target(a, m);
  CHECK(r.action->target()->order() == 3);
  for (elem_t x = 0; x < 3; ++x) {
    CHECK(r.inclusion(r.action->apply(1, x)) == a->apply(1, r.inclusion(x)));
  }
  auto v4 = abelian_group({2, 2});
  auto sh = ActionOnGroup::from_generator_images(cyclic_group(2), v4, {1},
                                                 {named_automorphism(*v4, "swap")});
  CHECK(code_of([&] { restrict_target(sh, gen(sh->target(), {1})); }) == Errc::NotNormalized);
}

TEST_CASE("properties: every catalog action is a homomorphism into Aut(N)") {
  auto const cat = default_catalog();
  for (auto const& [name, a] : cat.actions) {
    CAPTURE(name);
    auto const& j = *a->actor();
    auto const& n = *a->target();
    for (elem_t x = 0; x < j.order(); ++x) {
      for (elem_t y = 0; y < j.order(); ++y) {
        for (elem_t m = 0; m < n.order(); m += 1 + n.order() / 7) {
          CHECK(a->apply(j.mul(x, y), m) == a->apply(x, a->apply(y, m)));
        }
      }
      for (elem_t u = 0; u < n.order(); u += 1 + n.order() / 5) {
        for (elem_t v = 0; v < n.order(); ++v) {
          CHECK(a->apply(x, n.mul(u, v)) == n.mul(a->apply(x, u), a->apply(x, v)));
        }
      }
    }
  }
}

TEST_CASE("properties: semidirect multiplication follows the pair formula") {
  auto const cat = default_catalog();
  oracle::Gen rnd(31);
  for (auto const& [name, sd] : cat.products) {
    CAPTURE(name);
    auto const& a = *sd.action;
    auto const& n = *a.target();
    auto const& j = *a.actor();
    for (int t = 0; t < 100; ++t) {
      auto const n1 = rnd.element(n), n2 = rnd.element(n);
      auto const j1 = rnd.element(j), j2 = rnd.element(j);
      auto const lhs = sd.group->mul(sd.element(n1, j1), sd.element(n2, j2));
      CHECK(lhs == sd.element(n.mul(n1, a.apply(j1, n2)), j.mul(j1, j2)));
    }
    CHECK(is_normal(sd.normal()));
    CHECK(oracle::intersect(oracle::elements_of(sd.normal()), oracle::elements_of(sd.complement()))
          == oracle::Set{0});
    for (elem_t x = 0; x < j.order(); ++x) {
      for (elem_t m = 0; m < n.order(); ++m) {
        // j n j^-1 inside the product realises the action
        auto const c = sd.group->conj(sd.embed_n(m), sd.group->inv(sd.embed_j(x)));
        CHECK(c == sd.embed_n(a.apply(x, m)));
      }
    }
  }
}

TEST_CASE("properties: orbit-stabilizer on coset G-sets") {
  oracle::Gen rnd(32);
  for (auto const& g : {dihedral_group(4), symmetric_group(4), quaternion_group(),
                        heisenberg_group(3)}) {
    for (int t = 0; t < 8; ++t) {
      auto const h     = Subgroup::from_elements(g, rnd.subgroup(*g));
      auto const omega = coset_gset(h);
      CHECK(omega.size() * h.order() == g->order());
      for (std::uint32_t x = 0; x < omega.size(); ++x) {
        CHECK(orbit(omega, Subgroup::whole(g), x).size() * stabilizer(omega, x).order()
              == g->order());
      }
      auto const s = Subgroup::from_elements(g, rnd.subgroup(*g));
      CHECK(fixed_points(omega, s) == oracle::fixed_points(omega, oracle::elements_of(s)));
    }
  }
}
