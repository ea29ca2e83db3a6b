#include "nilcoh/theorems.hpp"

#include <algorithm>
#include <set>

#include "nilcoh/structure.hpp"

namespace nilcoh {

void VerificationReport::require(std::string name, bool met, std::string detail) {
  hypotheses_met = hypotheses_met && met;
  hypotheses.push_back(Hypothesis{std::move(name), met, std::move(detail)});
}

namespace {

  using json = nlohmann::ordered_json;
  using clock = std::chrono::steady_clock;

  json elements_json(Subgroup const& h) {
    return json(std::vector<elem_t>(h.elements().begin(), h.elements().end()));
  }

  // Least j in J with j^-1 g in N, so that g = j n.
  elem_t complement_part(Subgroup const& j, Subgroup const& n, elem_t g) {
    auto const& grp = j.group();
    for (auto x : j.elements()) {
      if (n.contains(grp.mul(grp.inv(x), g))) {
        return x;
      }
    }
    throw Error(Errc::NotAComplement, "element is not in JN");
  }

  bool conjugate_contained(Subgroup const& j, Subgroup const& h, elem_t g) {
    auto const& grp = j.group();
    return std::all_of(j.elements().begin(), j.elements().end(),
                       [&](elem_t x) { return h.contains(grp.conj(x, g)); });
  }

  struct Projected {
    Quotient q;
    Subgroup n, j, h;
  };

  Projected project(Subgroup const& m, Subgroup const& n, Subgroup const& j, Subgroup const& h) {
    auto q = quotient(m);
    auto nn = q.projection.image(n);
    auto jj = q.projection.image(j);
    auto hh = q.projection.image(h);
    return Projected{std::move(q), std::move(nn), std::move(jj), std::move(hh)};
  }

  elem_t proof_guided(Subgroup const& n, Subgroup const& j, Subgroup const& h,
                      Limits const& limits) {
    auto const& g = j.group();
    if (j.is_subset_of(h)) {
      return Group::identity;
    }
    auto const n_primes = prime_divisors(n.order());
    if (prime_divisors(h.order()).size() <= 1) {
      if (auto c = conjugate_into(j, h)) {
        return *c;
      }
      throw Error(Errc::NoConjugatorFound, "p-group case: no conjugate of J inside H");
    }

    if (n_primes.size() >= 2) {
      auto const p     = n_primes.front();
      auto const np    = sylow_subgroup(n, p, limits);
      auto const np_pr = hall_pprime(n, p);
      // J^{n0} <= H N_p with n0 in N_p', and J^{n1} <= H N_p' with n1 in N_p
      auto lift = [&](Subgroup const& m) {
        auto sub = project(m, n, j, h);
        auto gq  = proof_guided(sub.n, sub.j, sub.h, limits);
        auto gl  = sub.q.representatives[gq];
        return g.mul(g.inv(complement_part(j, n, gl)), gl);
      };
      auto const lifted0 = lift(np);
      auto const lifted1 = lift(np_pr);
      auto const n0      = g.mul(lifted0, g.inv(primary_component(g, lifted0, p)));
      auto const n1      = primary_component(g, lifted1, p);
      auto const result  = g.mul(n0, n1);
      if (!conjugate_contained(j, h, result)) {
        throw Error(Errc::NoConjugatorFound, "combined conjugator n0 n1 does not conjugate J into H");
      }
      return result;
    }

    if (n.is_trivial()) {
      throw Error(Errc::NoConjugatorFound, "H does not supplement N");
    }
    // N is a q-group
    auto const q = n_primes.front();
    auto const jq = sylow_subgroup(j, q, limits);
    auto const x  = conjugate_into(jq, h);
    if (!x) {
      throw Error(Errc::NoConjugatorFound, "H contains no conjugate of J_q");
    }
    auto const h1  = h.conjugate(g.inv(*x));
    auto const z   = center(n);
    auto const zh  = intersection(z, h1);
    if (!zh.is_trivial()) {
      auto sub = project(zh, n, j, h1);
      auto gq  = proof_guided(sub.n, sub.j, sub.h, limits);
      auto gl  = sub.q.representatives[gq];
      if (!conjugate_contained(j, h1, gl)) {
        throw Error(Errc::NoConjugatorFound, "lift through G/(Z n H) failed");
      }
      return g.mul(gl, *x);
    }
    auto sub = project(z, n, j, h1);
    auto gq  = proof_guided(sub.n, sub.j, sub.h, limits);
    auto gl  = sub.q.representatives[gq];
    // K = H n J^g Z complements H n N in H and N in G
    auto const jgz = join(j.conjugate(gl), z);
    auto const k   = intersection(h1, jgz);
    auto const hn  = intersection(h1, n);
    if (!intersection(k, n).is_trivial() || k.order() * n.order() != g.order()) {
      throw Error(Errc::Inconsistent, "H n J^g Z does not complement N");
    }
    auto const gens = min_generators(j);
    for (auto const& l : complements(h1, hn, gens, limits)) {
      if (!jq.is_subset_of(l) || l.order() * n.order() != g.order()) {
        continue;
      }
      if (auto c = are_conjugate_subgroups(j, l)) {
        return g.mul(*c, *x);
      }
    }
    throw Error(Errc::NoConjugatorFound, "no complement of H n N in H containing J_q is conjugate to J");
  }

  void check_prop5_hypotheses(Subgroup const& n, Subgroup const& j, Subgroup const& h,
                              Limits const& limits, VerificationReport& r) {
    bool const normal = is_normal(n);
    r.require("N normal", normal);
    r.require("N nilpotent", is_nilpotent(n));
    r.require("J nilpotent", is_nilpotent(j));
    r.require("J complements N",
              intersection(j, n).is_trivial() && j.order() * n.order() == j.group().order());
    for (auto p : prime_divisors(j.order())) {
      auto jp = sylow_subgroup(j, p, limits);
      auto c  = conjugate_into(jp, h);
      r.require("H contains a conjugate of J_" + std::to_string(p), c.has_value(),
                c ? "conjugator " + std::to_string(*c) : "no conjugate of J_p lies in H");
    }
  }

  std::string failed_hypotheses(VerificationReport const& r) {
    std::string out;
    for (auto const& h : r.hypotheses) {
      if (!h.met) {
        out += (out.empty() ? "" : "; ") + h.name + (h.detail.empty() ? "" : " (" + h.detail + ")");
      }
    }
    return out;
  }

}  // namespace

std::vector<Subgroup> all_complements(GroupPtr const& g, Subgroup const& n, Limits const& limits) {
  auto const q    = quotient(n);
  auto const gens = min_generators(Subgroup::whole(q.group));
  return complements(g, n, std::max<std::size_t>(gens, 1), limits);
}

VerificationReport verify_prop2(GroupPtr const& g, Subgroup const& n, Limits const& limits) {
  auto const         start = clock::now();
  VerificationReport r;
  r.theorem = "prop2";
  r.require("N normal", is_normal(n));
  r.require("N nilpotent", is_nilpotent(n));
  if (!r.hypotheses.front().met) {
    r.elapsed = clock::now() - start;
    return r;
  }
  auto const            all = all_complements(g, n, limits);
  std::vector<Subgroup> nil;
  for (auto const& k : all) {
    if (is_nilpotent(k)) {
      nil.push_back(k);
    }
  }
  if (nil.size() < all.size()) {
    r.note = std::to_string(all.size() - nil.size()) + " non-nilpotent complements skipped";
  }
  auto const conj_classes = conjugacy_classes_of(nil, Subgroup::whole(g));

  std::size_t pairs = 0, forward = 0, backward = 0;
  r.conclusion_verified = true;
  for (std::size_t a = 0; a < nil.size(); ++a) {
    for (std::size_t b = a + 1; b < nil.size(); ++b) {
      ++pairs;
      bool const local = locally_conjugate(nil[a], nil[b], limits);
      bool const conj  = are_conjugate_subgroups(nil[a], nil[b]).has_value();
      forward += conj ? 1 : 0;
      backward += local ? 1 : 0;
      if (local != conj && r.conclusion_verified) {
        r.conclusion_verified = false;
        r.witness = json{{"pair", {elements_json(nil[a]), elements_json(nil[b])}},
                         {"locally_conjugate", local},
                         {"conjugate", conj}};
      }
    }
  }
  if (r.conclusion_verified) {
    r.witness = json{{"complements", nil.size()},
                     {"conjugacy_classes", conj_classes.size()},
                     {"pairs", pairs},
                     {"conjugate_pairs", forward},
                     {"locally_conjugate_pairs", backward}};
  }
  if (!r.hypotheses_met) {
    r.note += (r.note.empty() ? "" : "; ") + failed_hypotheses(r);
  }
  r.elapsed = clock::now() - start;
  return r;
}

VerificationReport verify_prop3(GroupPtr const& g, Subgroup const& n, Limits const& limits) {
  auto const         start = clock::now();
  VerificationReport r;
  r.theorem = "prop3";
  auto const         whole = Subgroup::whole(g);
  bool const         normal = is_normal(n);
  r.require("N normal", normal);
  r.require("N nilpotent", is_nilpotent(n));
  if (!normal) {
    r.elapsed = clock::now() - start;
    return r;
  }
  r.require("G/N nilpotent", is_nilpotent(quotient(n).group));
  auto const all = all_complements(g, n, limits);
  r.require("G splits over N", !all.empty());

  json certified = json::object();
  for (auto p : prime_divisors(g->order())) {
    auto const sylows = all_sylow_subgroups(whole, p, limits);
    std::optional<std::size_t> found;
    std::size_t                rejected = 0;
    for (std::size_t i = 0; i < sylows.size() && !found; ++i) {
      auto const& s  = sylows[i];
      auto const  sn = intersection(s, n);
      auto const  cs = complements(s, sn, std::max<std::size_t>(min_generators(s), 1), limits);
      bool all_conj  = true;
      for (std::size_t a = 1; a < cs.size() && all_conj; ++a) {
        all_conj = are_conjugate_subgroups(cs[0], cs[a]).has_value();
      }
      if (all_conj) {
        found = i;
      } else {
        ++rejected;
      }
    }
    std::string detail = std::to_string(sylows.size()) + " Sylow subgroups, "
                         + std::to_string(rejected) + " rejected";
    if (found) {
      certified[std::to_string(p)] = elements_json(sylows[*found]);
    }
    r.require("p=" + std::to_string(p) + ": some Sylow S has all complements of S n N conjugate",
              found.has_value(), detail);
  }

  auto const classes    = conjugacy_classes_of(all, whole);
  r.conclusion_verified = classes.size() <= 1;
  r.witness = json{{"complements", all.size()},
                   {"conjugacy_classes", classes.size()},
                   {"certified_sylow", certified}};
  if (!r.hypotheses_met) {
    r.note = failed_hypotheses(r);
  }
  r.elapsed = clock::now() - start;
  return r;
}

elem_t find_conjugator(Subgroup const& n, Subgroup const& j, Subgroup const& h,
                       Strategy strategy, Limits const& limits) {
  VerificationReport hyp;
  check_prop5_hypotheses(n, j, h, limits, hyp);
  if (!hyp.hypotheses_met) {
    throw Error(Errc::HypothesisNotMet, failed_hypotheses(hyp));
  }
  if (strategy == Strategy::exhaustive) {
    if (auto c = conjugate_into(j, h)) {
      return *c;
    }
    throw Error(Errc::NoConjugatorFound, "no g in G with J^g contained in H");
  }
  auto const c = proof_guided(n, j, h, limits);
  if (!conjugate_contained(j, h, c)) {
    throw Error(Errc::NoConjugatorFound, "proof-guided conjugator fails the elementwise check");
  }
  return c;
}

VerificationReport verify_prop5(Subgroup const& n, Subgroup const& j, Subgroup const& h,
                                Limits const& limits) {
  auto const         start = clock::now();
  VerificationReport r;
  r.theorem = "prop5";
  check_prop5_hypotheses(n, j, h, limits, r);
  if (!r.hypotheses_met) {
    r.note    = failed_hypotheses(r);
    r.elapsed = clock::now() - start;
    return r;
  }
  json w;
  try {
    w["exhaustive"] = find_conjugator(n, j, h, Strategy::exhaustive, limits);
  } catch (Error const& e) {
    w["exhaustive"] = std::string(e.what());
  }
  try {
    w["proof_guided"] = find_conjugator(n, j, h, Strategy::proof_guided, limits);
  } catch (Error const& e) {
    w["proof_guided"] = std::string(e.what());
  }
  r.conclusion_verified = w["exhaustive"].is_number() && w["proof_guided"].is_number();
  r.witness             = std::move(w);
  r.elapsed             = clock::now() - start;
  return r;
}

VerificationReport verify_thm4(SemidirectProduct const& sd, GSet const& omega,
                               Limits const& limits) {
  auto const         start = clock::now();
  VerificationReport r;
  r.theorem = "thm4";
  if (omega.group() != sd.group) {
    throw Error(Errc::DomainMismatch, "G-set is not over the given semidirect product");
  }
  auto const n = sd.normal();
  auto const j = sd.complement();
  r.require("J nilpotent", is_nilpotent(sd.action->actor()));
  r.require("N nilpotent", is_nilpotent(sd.action->target()));
  r.require("omega non-empty", omega.size() > 0);
  if (omega.size() == 0) {
    r.elapsed = clock::now() - start;
    return r;
  }
  r.require("N transitive", is_transitive(omega, n));
  for (auto p : prime_divisors(j.order())) {
    auto const jp  = sylow_subgroup(j, p, limits);
    auto const fix = fixed_points(omega, jp);
    r.require("J_" + std::to_string(p) + " fixes a point", !fix.empty(),
              fix.empty() ? "no fixed point" : "least fixed point " + std::to_string(fix.front()));
  }

  auto const direct = fixed_points(omega, j);
  json       w;
  w["fixed_points"] = direct.size();
  if (!direct.empty()) {
    w["least_fixed_point"] = direct.front();
  }
  if (!r.hypotheses_met) {
    r.note    = failed_hypotheses(r);
    r.witness = std::move(w);
    r.elapsed = clock::now() - start;
    return r;
  }

  // G = N G_alpha, J^g <= G_alpha, and J fixes g.alpha
  std::uint32_t const alpha = 0;
  auto const          stab  = stabilizer(omega, alpha);
  bool const supplement = product_set(n, stab).size() == sd.group->order();
  w["alpha"]            = alpha;
  w["stabilizer_supplements_n"] = supplement;
  try {
    auto const g  = find_conjugator(n, j, stab, Strategy::exhaustive, limits);
    auto const pt = omega.act(g, alpha);
    w["conjugator"] = g;
    w["point"]      = pt;
    try {
      w["proof_guided_conjugator"] = find_conjugator(n, j, stab, Strategy::proof_guided, limits);
    } catch (Error const& e) {
      w["proof_guided_conjugator"] = std::string(e.what());
    }
    bool const confirmed = std::binary_search(direct.begin(), direct.end(), pt);
    w["confirmed_by_scan"] = confirmed;
    r.conclusion_verified =
        supplement && confirmed && w["proof_guided_conjugator"].is_number();
  } catch (Error const& e) {
    if (e.code() != Errc::NoConjugatorFound) {
      throw;
    }
    w["error"]            = std::string(e.what());
    r.conclusion_verified = false;
  }
  if (direct.empty()) {
    r.conclusion_verified = false;
    r.note                = std::string(to_string(Errc::NoFixedPoint));
  }
  r.witness = std::move(w);
  r.elapsed = clock::now() - start;
  return r;
}

VerificationReport verify_lemma1(ActionPtr const& action, Limits const& limits) {
  auto const         start = clock::now();
  VerificationReport r;
  r.theorem = "lemma1";
  r.require("J nilpotent", is_nilpotent(action->actor()));
  r.require("N nilpotent", is_nilpotent(action->target()));
  if (!r.hypotheses_met) {
    r.note    = failed_hypotheses(r);
    r.elapsed = clock::now() - start;
    return r;
  }
  auto const d = decomposition_map(action, limits);
  json       factors = json::array();
  for (auto const& f : d.factors) {
    factors.push_back(json{{"p", f.prime},
                           {"sylow_order", f.sylow.order()},
                           {"h1", f.h1.size()},
                           {"fixed", f.fixed.size()},
                           {"invariant", f.invariant.size()}});
  }
  r.witness = json{{"shared_primes", d.shared_primes},
                   {"h1", d.source.size()},
                   {"cocycles", d.source.cocycles().size()},
                   {"factors", std::move(factors)},
                   {"target", d.target_size},
                   {"bijective", d.bijective},
                   {"point_preserving", d.point_preserving},
                   {"invariant_is_fixed", d.invariant_is_fixed}};
  r.conclusion_verified = d.bijective && d.point_preserving;
  if (!d.witness.empty()) {
    r.note = d.witness;
  }
  r.elapsed = clock::now() - start;
  return r;
}

bool intersection_lemma_check(Subgroup const& h, Subgroup const& n, std::uint64_t p) {
  auto const np    = sylow_subgroup(n, p);
  auto const np_pr = hall_pprime(n, p);
  auto const a     = product_set(h, np);
  auto const b     = product_set(h, np_pr);
  std::vector<elem_t> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return std::equal(both.begin(), both.end(), h.elements().begin(), h.elements().end());
}

}  // namespace nilcoh
