#include <algorithm>
#include <iomanip>
#include <ostream>
#include <set>

#include "nilcoh/cohomology.hpp"
#include "nilcoh/harness.hpp"
#include "nilcoh/structure.hpp"

namespace nilcoh {

using json = nlohmann::ordered_json;

namespace {

  // Kinds whose failure under met hypotheses contradicts a theorem rather
  // than an implementation cross-check.
  bool is_theorem_kind(std::string const& kind) {
    static std::set<std::string> const kinds{"lemma1", "primary",    "extend",     "eq3",
                                             "prop2",  "prop3",      "prop5",      "prop5_sweep",
                                             "thm4",   "thm4_sweep", "intersection"};
    return kinds.count(kind) > 0;
  }

  constexpr std::size_t sweep_order_limit = 72;

  VerificationReport check_h1(ActionPtr const& action, json const& args, Limits const& limits) {
    VerificationReport r;
    auto const         h = h1(action, limits);
    std::vector<std::size_t> sizes;
    for (auto const& c : h.classes()) {
      sizes.push_back(c.size());
    }
    json w{{"cocycles", h.cocycles().size()},
           {"classes", h.size()},
           {"distinguished", h.distinguished()},
           {"class_sizes", sizes}};
    bool ok = true;
    try {
      auto const right = h1_size_right_convention(action, limits);
      w["right_convention_classes"] = right;
      ok = right == h.size();
    } catch (Error const& e) {
      if (e.code() != Errc::BudgetExceeded) {
        throw;
      }
      w["right_convention_classes"] = nullptr;
    }
    if (args.contains("h1")) {
      ok = ok && args["h1"].get<std::size_t>() == h.size();
    }
    if (args.contains("cocycles")) {
      ok = ok && args["cocycles"].get<std::size_t>() == h.cocycles().size();
    }
    r.conclusion_verified = ok;
    r.witness             = std::move(w);
    return r;
  }

  VerificationReport check_oracle(ActionPtr const& action, Limits const& limits) {
    VerificationReport r;
    auto const         whole = Subgroup::whole(action->actor());
    auto const         fast  = cocycles(action, whole, limits);
    auto const         slow  = cocycles_bruteforce(action, whole, limits);
    r.conclusion_verified    = fast == slow;
    r.witness = json{{"cocycles", fast.size()}, {"oracle", slow.size()}};
    return r;
  }

  VerificationReport check_complements(SemidirectProduct const& sd, Limits const& limits) {
    VerificationReport r;
    auto const         n     = sd.normal();
    auto const         comps = all_complements(sd.group, n, limits);
    auto const         classes = conjugacy_classes_of(comps, n);
    auto const         h       = h1(sd.action, limits);

    // cocycle -> complement is a bijection carrying N-classes to H^1 classes
    std::map<std::vector<elem_t>, std::size_t> index;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      index.emplace(std::vector<elem_t>(comps[i].elements().begin(), comps[i].elements().end()), i);
    }
    std::vector<std::size_t> comp_class(comps.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (auto i : classes[c]) {
        comp_class[i] = c;
      }
    }
    bool                               bijective = comps.size() == h.cocycles().size();
    std::map<std::size_t, std::size_t> class_match;
    std::set<std::size_t>              hit;
    for (std::size_t i = 0; i < h.cocycles().size() && bijective; ++i) {
      auto const& phi = h.cocycles()[i];
      auto const  k   = cocycle_to_complement(sd, phi);
      auto        it  = index.find(std::vector<elem_t>(k.elements().begin(), k.elements().end()));
      if (it == index.end() || !(complement_to_cocycle(sd, k) == phi)) {
        bijective = false;
        break;
      }
      hit.insert(it->second);
      auto [pos, fresh] = class_match.emplace(h.class_of_index(i), comp_class[it->second]);
      bijective         = bijective && (fresh || pos->second == comp_class[it->second]);
    }
    std::set<std::size_t> matched;
    for (auto const& [a, b] : class_match) {
      matched.insert(b);
    }
    bijective = bijective && hit.size() == comps.size() && matched.size() == class_match.size();
    r.conclusion_verified = bijective && classes.size() == h.size();
    r.witness = json{{"complements", comps.size()},
                     {"n_classes", classes.size()},
                     {"cocycles", h.cocycles().size()},
                     {"h1", h.size()}};
    return r;
  }

  VerificationReport check_primary(ActionPtr const& action, Limits const& limits) {
    VerificationReport r;
    r.require("J nilpotent", is_nilpotent(action->actor()));
    r.require("N nilpotent", is_nilpotent(action->target()));
    if (!r.hypotheses_met) {
      return r;
    }
    auto const prod = primary_product_check(action, limits);
    bool       ok   = prod.bijective && prod.non_shared_trivial;
    json       inc  = json::array();
    for (auto q : shared_primes(*action)) {
      auto rep = include_coefficients(action, q, limits);
      ok       = ok && rep.bijective && rep.fixed_preserved;
      inc.push_back(json{{"p", q},
                         {"small", rep.small.size()},
                         {"big", rep.big.size()},
                         {"bijective", rep.bijective},
                         {"fixed_preserved", rep.fixed_preserved}});
    }
    r.conclusion_verified = ok;
    r.witness = json{{"primes", prod.primes},
                     {"factor_sizes", prod.factor_sizes},
                     {"h1", prod.source_size},
                     {"inclusion", std::move(inc)}};
    if (!prod.witness.empty()) {
      r.note = prod.witness;
    }
    return r;
  }

  VerificationReport check_extend(ActionPtr const& action, Limits const& limits) {
    VerificationReport r;
    r.require("J nilpotent", is_nilpotent(action->actor()));
    r.require("N nilpotent", is_nilpotent(action->target()));
    if (!r.hypotheses_met) {
      return r;
    }
    bool ok    = true;
    json parts = json::array();
    for (auto q : shared_primes(*action)) {
      auto const nq      = sylow_subgroup(action->target(), q, limits);
      auto const reduced = restrict_target(action, nq);
      auto const jq      = sylow_subgroup(action->actor(), q, limits);
      auto const small   = h1(reduced.action, jq, limits);
      auto const full    = h1(reduced.action, limits);
      auto const fixed   = fixed_classes(small, hall_pprime(action->actor(), q));
      std::size_t           direct = 0;
      std::set<std::size_t> targets;
      for (auto c : fixed) {
        auto const ext = extend_from_sylow(small, c, full, q);
        direct += ext.direct ? 1 : 0;
        targets.insert(ext.target_class);
        ok = ok && small.class_of(restrict(ext.extended, jq)) == c;
      }
      ok = ok && targets.size() == fixed.size() && targets.size() == full.size();
      parts.push_back(json{{"p", q},
                           {"fixed", fixed.size()},
                           {"full", full.size()},
                           {"direct", direct},
                           {"fallback", fixed.size() - direct}});
    }
    r.conclusion_verified = ok;
    r.witness             = std::move(parts);
    return r;
  }

  VerificationReport check_eq3(ActionPtr const& action, Limits const& limits) {
    VerificationReport r;
    r.require("N abelian", action->target()->is_abelian());
    if (!r.hypotheses_met) {
      return r;
    }
    auto const rep   = eq3_check(action, limits);
    json       parts = json::array();
    for (auto const& p : rep.primes) {
      parts.push_back(json{{"p", p.prime},
                           {"sylow_order", p.sylow_order},
                           {"invariant", p.invariant_size},
                           {"primary", p.primary_size},
                           {"bijective", p.bijective}});
    }
    r.conclusion_verified = rep.holds;
    r.witness = json{{"shared_primes", rep.shared_primes},
                     {"h1", rep.h1_size},
                     {"product", rep.product_size},
                     {"group_laws", rep.group_laws},
                     {"primes", std::move(parts)},
                     {"j_nilpotent", is_nilpotent(action->actor())}};
    return r;
  }

  std::vector<Subgroup> sweep_subgroups(SemidirectProduct const& sd, Limits const& limits) {
    return enumerate_subgroups(Subgroup::whole(sd.group), 2, limits);
  }

  json elements_of(Subgroup const& h) {
    return json(std::vector<elem_t>(h.elements().begin(), h.elements().end()));
  }

  // Aggregates one verifier over every subgroup of the semidirect product
  // generated by at most two elements.
  template <typename Fn>
  VerificationReport sweep(SemidirectProduct const& sd, Limits const& limits, Fn&& verify) {
    VerificationReport r;
    r.require("J nilpotent", is_nilpotent(sd.action->actor()));
    r.require("N nilpotent", is_nilpotent(sd.action->target()));
    r.require("|N x| J| <= " + std::to_string(sweep_order_limit),
              sd.group->order() <= sweep_order_limit);
    if (!r.hypotheses_met) {
      return r;
    }
    std::size_t total = 0, met = 0, verified = 0;
    json        failure;
    for (auto const& h : sweep_subgroups(sd, limits)) {
      ++total;
      auto const rep = verify(h);
      if (rep.hypotheses_met) {
        ++met;
        if (rep.conclusion_verified) {
          ++verified;
        } else if (failure.is_null()) {
          failure = json{{"subgroup", elements_of(h)}, {"witness", rep.witness}};
        }
      }
    }
    r.conclusion_verified = met == verified;
    r.witness = json{{"subgroups", total}, {"hypotheses_met", met}, {"verified", verified}};
    if (!failure.is_null()) {
      r.witness["failure"] = std::move(failure);
    }
    return r;
  }

  VerificationReport check_intersection(SemidirectProduct const& sd, Limits const& limits) {
    VerificationReport r;
    auto const         n      = sd.normal();
    auto const         primes = prime_divisors(n.order());
    r.require("N nilpotent", is_nilpotent(n));
    r.require("two primes divide |N|", primes.size() >= 2);
    r.require("|N x| J| <= " + std::to_string(sweep_order_limit),
              sd.group->order() <= sweep_order_limit);
    if (!r.hypotheses_met) {
      return r;
    }
    std::size_t subgroups = 0, pairs = 0, failures = 0;
    for (auto const& h : sweep_subgroups(sd, limits)) {
      ++subgroups;
      for (auto p : primes) {
        ++pairs;
        failures += intersection_lemma_check(h, n, p) ? 0 : 1;
      }
    }
    r.conclusion_verified = failures == 0;
    r.witness = json{{"subgroups", subgroups}, {"pairs", pairs}, {"failures", failures}};
    return r;
  }

  VerificationReport dispatch(Scenario const& s, Check const& c, Limits const& limits) {
    auto const& a = c.args;
    if (c.kind == "thm4") {
      auto const& g = s.gset(a.at("gset").get<std::string>());
      return verify_thm4(s.product(g.group_ref), g.gset, limits);
    }
    if ((c.kind == "prop2" || c.kind == "prop3") && a.contains("group")) {
      auto g = s.group(a.at("group").get<std::string>());
      auto n = resolve_subgroup(s, g, a.at("normal"), std::nullopt);
      return c.kind == "prop2" ? verify_prop2(g, n, limits) : verify_prop3(g, n, limits);
    }
    auto const name   = a.at("action").get<std::string>();
    auto const action = s.action(name);
    if (c.kind == "h1") {
      return check_h1(action, a, limits);
    }
    if (c.kind == "oracle") {
      return check_oracle(action, limits);
    }
    if (c.kind == "lemma1") {
      return verify_lemma1(action, limits);
    }
    if (c.kind == "primary") {
      return check_primary(action, limits);
    }
    if (c.kind == "extend") {
      return check_extend(action, limits);
    }
    if (c.kind == "eq3") {
      return check_eq3(action, limits);
    }
    auto const& sd = s.product(name);
    if (c.kind == "complements") {
      return check_complements(sd, limits);
    }
    if (c.kind == "prop2") {
      return verify_prop2(sd.group, sd.normal(), limits);
    }
    if (c.kind == "prop3") {
      return verify_prop3(sd.group, sd.normal(), limits);
    }
    if (c.kind == "prop5") {
      auto h = resolve_subgroup(s, sd.group, a.at("subgroup"), name);
      return verify_prop5(sd.normal(), sd.complement(), h, limits);
    }
    if (c.kind == "prop5_sweep") {
      return sweep(sd, limits, [&](Subgroup const& h) {
        return verify_prop5(sd.normal(), sd.complement(), h, limits);
      });
    }
    if (c.kind == "thm4_sweep") {
      return sweep(sd, limits, [&](Subgroup const& h) { return verify_thm4(sd, coset_gset(h), limits); });
    }
    if (c.kind == "intersection") {
      return check_intersection(sd, limits);
    }
    throw Error(Errc::UnknownCheck, "'" + c.kind + "'");
  }

  bool selected(Check const& c, SuiteOptions const& options) {
    if (options.instance && c.instance != *options.instance) {
      return false;
    }
    if (options.kind && c.kind != *options.kind && c.kind != *options.kind + "_sweep") {
      return false;
    }
    return true;
  }

  char const* expect_name(Expect e) {
    switch (e) {
      case Expect::pass:
        return "pass";
      case Expect::hypothesis_fail:
        return "hypothesis_fail";
      case Expect::any:
        return "any";
    }
    return "pass";
  }

}  // namespace

CheckRecord run_check(Scenario const& s, Check const& c, SuiteOptions const& options) {
  CheckRecord rec;
  rec.expect = c.expect;
  auto const start = std::chrono::steady_clock::now();
  try {
    rec.report = dispatch(s, c, options.limits);
  } catch (Error const& e) {
    rec.report = VerificationReport{};
    if (e.code() == Errc::HypothesisNotMet) {
      rec.report.require("verifier precondition", false, e.what());
    } else {
      rec.error = e.what();
    }
  }
  rec.report.theorem  = c.kind;
  rec.report.instance = c.instance;
  rec.report.elapsed  = std::chrono::steady_clock::now() - start;

  auto const& r = rec.report;
  if (!rec.error.empty()) {
    rec.ok = false;
    return rec;
  }
  rec.falsification = is_theorem_kind(c.kind) && r.falsification();
  switch (c.expect) {
    case Expect::pass:
      rec.ok = r.pass();
      break;
    case Expect::hypothesis_fail:
      rec.ok = !r.hypotheses_met;
      break;
    case Expect::any:
      rec.ok = !rec.falsification && (!r.hypotheses_met || r.conclusion_verified);
      break;
  }
  if (options.relaxed_hypotheses && !r.hypotheses_met) {
    rec.ok = true;
    rec.report.note += std::string(rec.report.note.empty() ? "" : "; ") + "observation";
  }
  return rec;
}

std::size_t SuiteResult::failures() const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](auto const& r) { return !r.ok; }));
}

std::size_t SuiteResult::falsifications() const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                [](auto const& r) { return r.falsification; }));
}

int SuiteResult::exit_code() const {
  if (falsifications() > 0) {
    return 2;
  }
  return failures() > 0 ? 1 : 0;
}

SuiteResult run_suite(std::vector<Scenario> const& scenarios, SuiteOptions const& options) {
  SuiteResult out;
  for (auto const& s : scenarios) {
    for (auto const& c : s.checks) {
      if (selected(c, options)) {
        out.records.push_back(run_check(s, c, options));
      }
    }
  }
  return out;
}

json to_json(CheckRecord const& r) {
  json hyp = json::object();
  for (auto const& h : r.report.hypotheses) {
    hyp[h.name] = h.met;
  }
  json j{{"theorem", r.report.theorem},
         {"instance", r.report.instance},
         {"hypotheses", std::move(hyp)},
         {"pass", r.ok},
         {"witness", r.report.witness},
         {"falsification", r.falsification}};
  if (r.expect != Expect::pass) {
    j["expect"] = expect_name(r.expect);
  }
  if (!r.report.note.empty()) {
    j["note"] = r.report.note;
  }
  if (!r.error.empty()) {
    j["error"] = r.error;
  }
  return j;
}

void report_emit(std::ostream& out, std::vector<CheckRecord> const& records, Format format) {
  if (format == Format::json) {
    for (auto const& r : records) {
      out << to_json(r).dump() << '\n';
    }
    return;
  }
  std::size_t passed = 0, falsified = 0;
  for (auto const& r : records) {
    char const* status = r.falsification ? "FALSIFIED" : r.ok ? "ok" : "FAIL";
    out << std::left << std::setw(10) << status << std::setw(14) << r.report.theorem
        << std::setw(28) << r.report.instance;
    if (!r.error.empty()) {
      out << r.error;
    } else if (!r.report.hypotheses_met) {
      out << "hypotheses not met";
    }
    if (!r.report.note.empty()) {
      out << (r.error.empty() && r.report.hypotheses_met ? "" : "; ") << r.report.note;
    }
    out << '\n';
    passed += r.ok ? 1 : 0;
    falsified += r.falsification ? 1 : 0;
  }
  out << records.size() << " checks, " << passed << " passed, " << records.size() - passed
      << " failed\n";
  if (falsified > 0) {
    out << "FALSIFICATION: " << falsified << " record(s) contradict a theorem\n";
  }
}

}  // namespace nilcoh
