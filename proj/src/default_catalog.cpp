#include <map>
#include <numeric>

#include "nilcoh/harness.hpp"
#include "nilcoh/structure.hpp"

namespace nilcoh {

using json = nlohmann::ordered_json;

namespace {

  json cyc(std::size_t n) { return json{{"builtin", "cyclic"}, {"n", n}}; }
  json ab(std::vector<std::size_t> f) { return json{{"builtin", "abelian"}, {"factors", f}}; }
  json dih(std::size_t n) { return json{{"builtin", "dihedral"}, {"n", n}}; }
  json q8() { return json{{"builtin", "quaternion8"}}; }
  json heis(std::size_t p) { return json{{"builtin", "heisenberg"}, {"p", p}}; }

  json act(json actor, json target, std::vector<elem_t> gens, json images) {
    return json{{"actor", std::move(actor)},
                {"target", std::move(target)},
                {"gens", std::move(gens)},
                {"images", std::move(images)}};
  }
  json trivial(json actor, json target) {
    return json{{"actor", std::move(actor)}, {"target", std::move(target)}, {"builtin", "trivial"}};
  }

  // Spot values worked out by hand.
  struct Expected {
    std::size_t cocycles, classes;
  };

  json catalog_document() {
    json actions = json::object();
    // C3 permuting the non-identity elements of C2 x C2 / Q8 cyclically
    json const v4_cycle = json::array({0, 2, 3, 1});
    json const q8_cycle = json::array({0, 1, 4, 5, 6, 7, 2, 3});
    // (x, y) -> (x + y, y) on C3 x C3
    json const shear = json::array({0, 1, 2, 4, 5, 3, 8, 6, 7});

    actions["c2_inv_c4"]       = act(cyc(2), cyc(4), {1}, {"inversion"});
    actions["c2_swap_v4"]      = act(cyc(2), ab({2, 2}), {1}, {"swap"});
    actions["c3_cyc_q8"]       = act(cyc(3), q8(), {1}, {q8_cycle});
    actions["c6_on_c3"]        = act(cyc(6), cyc(3), {1}, {"inversion"});
    actions["c6_inv_c6"]       = act(cyc(6), cyc(6), {1}, {"inversion"});
    actions["c2_triv_c2"]      = trivial(cyc(2), cyc(2));
    actions["c3_triv_c4"]      = trivial(cyc(3), cyc(4));
    actions["c2_inv_c3"]       = act(cyc(2), cyc(3), {1}, {"inversion"});
    actions["c2_inv_c5"]       = act(cyc(2), cyc(5), {1}, {"inversion"});
    actions["c4_sq_c5"]        = act(cyc(4), cyc(5), {1}, {"power:2"});
    actions["c3_cyc_v4"]       = act(cyc(3), ab({2, 2}), {1}, {v4_cycle});
    actions["c2_inner_q8"]     = act(cyc(2), q8(), {1}, {"inner:2"});
    actions["c2_inv_c2xc4"]    = act(cyc(2), ab({2, 4}), {1}, {"inversion"});
    actions["c2_swap_c3xc3"]   = act(cyc(2), ab({3, 3}), {1}, {"swap"});
    actions["c3_shear_c3xc3"]  = act(cyc(3), ab({3, 3}), {1}, {shear});
    actions["c2_triv_c6"]      = trivial(cyc(2), cyc(6));
    actions["c6_triv_c6"]      = trivial(cyc(6), cyc(6));
    actions["v4_on_c4"]        = act(ab({2, 2}), cyc(4), {1, 2}, {"inversion", "identity"});
    actions["c2_inv_c12"]      = act(cyc(2), cyc(12), {1}, {"inversion"});
    actions["c3_inner_heis3"]  = act(cyc(3), heis(3), {1}, {"inner:1"});
    actions["c4_inv_c4"]       = act(cyc(4), cyc(4), {1}, {"inversion"});
    actions["d4_triv_c2"]      = trivial(dih(4), cyc(2));
    actions["q8_inv_c3"]       = act(q8(), cyc(3), {2, 4}, {"inversion", "inversion"});
    actions["c2_inv3_c2xc3"]   = act(cyc(2), ab({2, 3}), {1}, {"power:5"});
    actions["c6_inv_c2xc3"]    = act(cyc(6), ab({2, 3}), {1}, {"inversion"});
    actions["c2_inner_d4"]     = act(cyc(2), dih(4), {1}, {"inner:4"});
    actions["c5_triv_c2"]      = trivial(cyc(5), cyc(2));
    actions["c2_triv_q8"]      = trivial(cyc(2), q8());
    actions["c4_swap_v4"]      = act(cyc(4), ab({2, 2}), {1}, {"swap"});
    actions["v4_inv_c3"]       = act(ab({2, 2}), cyc(3), {1, 2}, {"inversion", "inversion"});
    actions["c3_triv_heis3"]   = trivial(cyc(3), heis(3));
    // non-nilpotent acting group: S3 = D3 acting through the sign
    actions["s3_sign_c3"]      = act(dih(3), cyc(3), {1, 3}, {"identity", "inversion"});
    actions["s3_sign_c4"]      = act(dih(3), cyc(4), {1, 3}, {"identity", "inversion"});

    json groups = json::object();
    groups["D4"] = dih(4);
    groups["S3"] = dih(3);
    groups["C6"] = cyc(6);
    groups["C2xC4"] = ab({2, 4});
    groups["A4"] = json{{"kind", "perm"}, {"degree", 4},
                        {"generators", json::array({json::array({1, 2, 0, 3}),
                                                    json::array({1, 0, 3, 2})})}};
    groups["S4"] = json{{"builtin", "symmetric"}, {"n", 4}};

    // D4 as C4 x| C2: r = (0,1) has index 4, ra = (3,1) has index 7
    json gsets = json::object();
    gsets["d4_cosets_j"]      = json{{"group", "c2_inv_c4"}, {"coset_of", "J"}};
    gsets["d4_cosets_ra_a2"]  = json{{"group", "c2_inv_c4"},
                                     {"coset_of", json{{"generators", json::array({7, 2})}}}};
    gsets["q8_c3_cosets_j"]   = json{{"group", "c3_cyc_q8"}, {"coset_of", "J"}};

    return json{{"id", "catalog"}, {"groups", groups}, {"actions", actions}, {"gsets", gsets}};
  }

}  // namespace

Scenario default_catalog(Limits const& limits) {
  auto doc    = catalog_document();
  auto checks = json::array();

  // A provisional parse gives the constructed groups for planning the checks.
  auto const base = parse_scenario(doc.dump(), limits);
  std::map<std::string, Expected> const spot{{"c2_inv_c4", {4, 2}}, {"c2_swap_v4", {2, 1}}};

  for (auto const& [name, action] : base.actions) {
    auto const  jn   = action->actor()->order();
    auto const  nn   = action->target()->order();
    bool const  nil  = is_nilpotent(action->actor()) && is_nilpotent(action->target());
    bool const  abel = action->target()->is_abelian();
    bool const  coprime = std::gcd(jn, nn) == 1;
    auto const  sd_order = jn * nn;
    auto const  shared   = shared_primes(*action);
    auto check = [&](char const* kind, json extra = json::object()) {
      json c{{"check", kind}, {"instance", name}, {"action", name}};
      for (auto& [k, v] : extra.items()) {
        c[k] = v;
      }
      checks.push_back(std::move(c));
    };

    json h1_args = json::object();
    if (auto it = spot.find(name); it != spot.end()) {
      h1_args["cocycles"] = it->second.cocycles;
      h1_args["h1"]       = it->second.classes;
    } else if (coprime) {
      h1_args["h1"] = 1;
    }
    check("h1", h1_args);
    if (jn <= 8 && nn <= 8) {
      check("oracle");
    }
    if (sd_order <= 200) {
      check("complements");
    }
    if (nil) {
      check("lemma1");
      check("primary");
      if (!shared.empty()) {
        check("extend");
      }
    }
    if (abel) {
      check("eq3");
    }
    if (nil && sd_order <= 200) {
      check("prop2");
      check("prop3", json{{"expect", "any"}});
    }
    if (nil && sd_order <= 72) {
      check("prop5_sweep");
      check("thm4_sweep");
      if (prime_divisors(nn).size() >= 2) {
        check("intersection");
      }
    }
  }

  auto ambient = [&](char const* id, char const* kind, char const* group, json normal,
                     char const* expect = "pass") {
    checks.push_back(json{{"check", kind},
                          {"instance", id},
                          {"group", group},
                          {"normal", std::move(normal)},
                          {"expect", expect}});
  };
  json const c4_in_d4 = json{{"generators", json::array({1})}};
  ambient("d4_c4", "prop2", "D4", c4_in_d4);
  ambient("d4_c4", "prop3", "D4", c4_in_d4, "hypothesis_fail");
  ambient("d4_trivial", "prop3", "D4", json::array({0}));
  ambient("s3_a3", "prop2", "S3", json{{"generators", json::array({1})}});
  ambient("s3_a3", "prop3", "S3", json{{"generators", json::array({1})}});
  ambient("c6_c3", "prop2", "C6", json{{"generators", json::array({2})}});
  ambient("c6_c3", "prop3", "C6", json{{"generators", json::array({2})}});
  ambient("c2xc4_c4", "prop2", "C2xC4", json{{"generators", json::array({2})}});
  ambient("c2xc4_c4", "prop3", "C2xC4", json{{"generators", json::array({2})}},
          "hypothesis_fail");
  ambient("a4_v4", "prop2", "A4", json{{"derived", 1}});
  ambient("a4_v4", "prop3", "A4", json{{"derived", 1}});
  ambient("s4_v4", "prop2", "S4", json{{"derived", 2}});
  ambient("s4_v4", "prop3", "S4", json{{"derived", 2}}, "hypothesis_fail");

  checks.push_back(json{{"check", "prop5"},
                        {"instance", "d4_prop5_contains"},
                        {"action", "c2_inv_c4"},
                        {"subgroup", json{{"generators", json::array({4, 2})}}}});
  checks.push_back(json{{"check", "prop5"},
                        {"instance", "d4_prop5_no_conjugate"},
                        {"action", "c2_inv_c4"},
                        {"subgroup", json{{"generators", json::array({7, 2})}}},
                        {"expect", "hypothesis_fail"}});
  checks.push_back(json{{"check", "thm4"}, {"instance", "d4_cosets_j"}, {"gset", "d4_cosets_j"}});
  checks.push_back(json{{"check", "thm4"},
                        {"instance", "d4_cosets_ra_a2"},
                        {"gset", "d4_cosets_ra_a2"},
                        {"expect", "hypothesis_fail"}});
  checks.push_back(
      json{{"check", "thm4"}, {"instance", "q8_c3_cosets_j"}, {"gset", "q8_c3_cosets_j"}});

  doc["checks"] = std::move(checks);
  return parse_scenario(doc.dump(), limits);
}

std::vector<CatalogEntry> catalog_entries(Scenario const& catalog) {
  std::vector<CatalogEntry> out;
  for (auto const& [name, action] : catalog.actions) {
    auto const jn = action->actor()->order(), nn = action->target()->order();
    out.push_back(CatalogEntry{name, jn, nn, std::gcd(jn, nn) == 1,
                               is_nilpotent(action->actor()) && is_nilpotent(action->target()),
                               action->target()->is_abelian()});
  }
  return out;
}

}  // namespace nilcoh
