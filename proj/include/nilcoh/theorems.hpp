#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcoh/actions.hpp"
#include "nilcoh/cohomology.hpp"
#include "nilcoh/group.hpp"

namespace nilcoh {

struct Hypothesis {
  std::string name;
  bool        met = false;
  std::string detail;
};

// Outcome of one verifier run. The conclusion only counts when every
// hypothesis holds; a failed conclusion under met hypotheses is a
// falsification.
struct VerificationReport {
  std::string              theorem;
  std::string              instance;
  std::vector<Hypothesis>  hypotheses;
  bool                     hypotheses_met      = true;
  bool                     conclusion_verified = false;
  nlohmann::ordered_json   witness;  // null when there is none
  std::string              note;
  std::chrono::nanoseconds elapsed{};

  bool pass() const noexcept { return hypotheses_met && conclusion_verified; }
  bool falsification() const noexcept { return hypotheses_met && !conclusion_verified; }

  // Appends a hypothesis and folds it into hypotheses_met.
  void require(std::string name, bool met, std::string detail = {});
};

// Complements of N in G, enumerated completely: the generator bound is the
// minimal generator count of G/N. Throws NotNormal, BudgetExceeded.
std::vector<Subgroup> all_complements(GroupPtr const& g, Subgroup const& n,
                                      Limits const& limits = {});

// Over all pairs of nilpotent complements of N: locally conjugate iff
// conjugate in G.
VerificationReport verify_prop2(GroupPtr const& g, Subgroup const& n, Limits const& limits = {});

// Hypothesis per prime p: some Sylow p-subgroup S of G has all complements of
// S n N in S conjugate in G. The first such S is recorded. Conclusion: all
// complements of N in G are conjugate.
VerificationReport verify_prop3(GroupPtr const& g, Subgroup const& n, Limits const& limits = {});

enum class Strategy { exhaustive, proof_guided };

// g in G with J^g <= H. Hypotheses: N normal nilpotent, J a nilpotent
// complement of N, and H contains a conjugate of each Sylow subgroup of J.
// Exhaustive returns the least such g. Proof-guided follows the induction
// through G/N_p, G/N_p', G/(Z n H) and G/Z, replacing the cohomological lift
// by a search for a complement of H n N in H containing J_q.
// Throws HypothesisNotMet, NoConjugatorFound.
elem_t find_conjugator(Subgroup const& n, Subgroup const& j, Subgroup const& h,
                       Strategy strategy, Limits const& limits = {});

// Runs both strategies; the conclusion requires both to succeed.
VerificationReport verify_prop5(Subgroup const& n, Subgroup const& j, Subgroup const& h,
                                Limits const& limits = {});

// The fixed point of J on a G-set of N x| J in which N is transitive, found
// through the stabilizer of point 0 and checked against a direct scan.
VerificationReport verify_thm4(SemidirectProduct const& sd, GSet const& omega,
                               Limits const& limits = {});

// Wraps decomposition_map: passes iff the map is bijective and sends the
// distinguished class to the distinguished tuple.
VerificationReport verify_lemma1(ActionPtr const& action, Limits const& limits = {});

// H N_p n H N_p' = H as sets, for N nilpotent normal in the parent of H.
bool intersection_lemma_check(Subgroup const& h, Subgroup const& n, std::uint64_t p);

}  // namespace nilcoh
