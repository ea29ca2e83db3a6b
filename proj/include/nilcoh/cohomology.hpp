#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilcoh/actions.hpp"
#include "nilcoh/group.hpp"

namespace nilcoh {

// A crossed homomorphism phi : K -> N on a subgroup K of the acting group,
//
//   phi(x y) = phi(x) * x.phi(y)      (x.n = action->apply(x, n)).
//
// Values are stored per element of K in the order of domain.elements().
class Cocycle {
 public:
  Cocycle(ActionPtr action, Subgroup domain, std::vector<elem_t> values);

  // As the constructor, but checks the cocycle identity. Throws NotACocycle.
  static Cocycle make(ActionPtr action, Subgroup domain, std::vector<elem_t> values);
  // The all-identity cocycle.
  static Cocycle trivial(ActionPtr action, Subgroup domain);

  ActionPtr const&           action() const noexcept { return action_; }
  Subgroup const&            domain() const noexcept { return domain_; }
  std::vector<elem_t> const& values() const noexcept { return values_; }

  elem_t operator()(elem_t x) const { return values_[domain_.position(x)]; }

  bool is_trivial() const;

  bool operator==(Cocycle const& other) const {
    return action_ == other.action_ && domain_ == other.domain_ && values_ == other.values_;
  }

 private:
  ActionPtr           action_;
  Subgroup            domain_;
  std::vector<elem_t> values_;
};

bool satisfies_cocycle_identity(ActionOnGroup const& action, Subgroup const& domain,
                                std::span<elem_t const> values);

// Z^1(K, N): values chosen on a generating sequence of K and propagated along
// the Cayley graph, subgroup by subgroup of the chain <g1> <= <g1,g2> <= ...
// Sorted by value table. Throws BudgetExceeded when |N|^#gens exceeds the
// enumeration budget.
std::vector<Cocycle> cocycles(ActionPtr const& action, Subgroup const& domain,
                              Limits const& limits = {});

// Independent definitional oracle: every map K -> N is built element by
// element in index order and tested against the cocycle identity on each
// fully assigned pair. Sorted by value table. Throws BudgetExceeded when more
// than oracle_budget partial maps are visited.
std::vector<Cocycle> cocycles_bruteforce(ActionPtr const& action, Subgroup const& domain,
                                         Limits const& limits = {});

// Least n in N with phi'(x) = n^-1 phi(x) x.n for all x. Throws DomainMismatch.
std::optional<elem_t> cohomologous(Cocycle const& phi, Cocycle const& phi_prime);
// Checks the relation above for one given n.
bool is_coboundary_witness(Cocycle const& phi, Cocycle const& phi_prime, elem_t n);

// The pointed set H^1(K, N): cocycles partitioned into N-orbits under
// (n . phi)(x) = n^-1 phi(x) x.n. Classes are ordered by their least member;
// the representative of a class is its lexicographically least value table.
class CohomologySet {
 public:
  CohomologySet(ActionPtr action, Subgroup domain, std::vector<Cocycle> sorted_cocycles);

  ActionPtr const& action() const noexcept { return action_; }
  Subgroup const&  domain() const noexcept { return domain_; }

  std::size_t size() const noexcept { return classes_.size(); }
  std::size_t distinguished() const noexcept { return distinguished_; }

  std::vector<Cocycle> const&              cocycles() const noexcept { return cocycles_; }
  std::vector<std::vector<std::size_t>> const& classes() const noexcept { return classes_; }
  Cocycle const& representative(std::size_t c) const { return cocycles_[classes_[c].front()]; }
  std::size_t    class_of_index(std::size_t i) const { return class_of_[i]; }

  // Class of a cocycle with the same action and domain. Throws DomainMismatch
  // or NotACocycle.
  std::size_t                class_of(Cocycle const& phi) const;
  std::optional<std::size_t> find(std::span<elem_t const> values) const;

 private:
  ActionPtr                                  action_;
  Subgroup                                   domain_;
  std::vector<Cocycle>                       cocycles_;
  std::vector<std::size_t>                   class_of_;
  std::vector<std::vector<std::size_t>>      classes_;
  std::map<std::vector<elem_t>, std::size_t> index_;
  std::size_t                                distinguished_ = 0;
};

CohomologySet h1(ActionPtr const& action, Subgroup const& domain, Limits const& limits = {});
CohomologySet h1(ActionPtr const& action, Limits const& limits = {});

////////////////////////////////////////////////////////////////////////
// Complements of N in N x| J
////////////////////////////////////////////////////////////////////////

// phi_K(j) = n_j where (n_j, j) is the unique element of K over j.
// Throws NotAComplement.
Cocycle  complement_to_cocycle(SemidirectProduct const& sd, Subgroup const& k);
// F(phi) = {(phi(j), j)}. The cocycle must be defined on all of J.
Subgroup cocycle_to_complement(SemidirectProduct const& sd, Cocycle const& phi);

////////////////////////////////////////////////////////////////////////
// Restriction, conjugation, invariance
////////////////////////////////////////////////////////////////////////

// Throws NotASubgroup unless sub <= phi.domain().
Cocycle restrict(Cocycle const& phi, Subgroup const& sub);

// Class map H^1(K, N) -> H^1(K', N) for K' <= K, evaluated on every cocycle
// so that a failure of well-definedness throws Inconsistent.
std::vector<std::size_t> restriction_map(CohomologySet const& from, CohomologySet const& to);

// phi^j on K^j = j^-1 K j: phi^j(x) = j^-1 . phi(j x j^-1).
Cocycle conjugate_cocycle(Cocycle const& phi, elem_t j);

// Classes [phi] in H^1(K, N) with res_{K n K^j} phi ~ res_{K n K^j} phi^j for
// every j in the acting group. Tested on the class representative.
std::vector<std::size_t> invariant_classes(CohomologySet const& h);

// For S normalizing K: classes with [phi^s] = [phi] for all s in S.
std::vector<std::size_t> fixed_classes(CohomologySet const& h, Subgroup const& s);

////////////////////////////////////////////////////////////////////////
// Sylow-wise decomposition for nilpotent J acting on nilpotent N
////////////////////////////////////////////////////////////////////////

// Primes dividing both |J| and |N|.
std::vector<std::uint64_t> shared_primes(ActionOnGroup const& action);

// Induced action on N_q and the class map H^1(J, N) -> H^1(J, N_q) given by
// the projection N -> N_q along N = N_q x N_q'.
struct PrimaryProjection {
  std::uint64_t            prime;
  ActionPtr                primary_action;  // J acting on N_q as a standalone group
  GroupHom                 inclusion;       // N_q -> N
  GroupHom                 projection;      // N -> N_q
  CohomologySet            target;          // H^1(J, N_q)
  std::vector<std::size_t> class_map;       // per class of the source
};

// Throws NotNilpotent.
PrimaryProjection project_to_primary(CohomologySet const& source, std::uint64_t q,
                                     Limits const& limits = {});

struct PrimaryProductReport {
  std::vector<std::uint64_t> primes;         // all primes dividing |N|
  std::vector<std::size_t>   factor_sizes;   // |H^1(J, N_q)| per prime
  std::size_t                source_size = 0;
  bool                       bijective   = false;
  bool                       non_shared_trivial = false;
  std::string                witness;
};

// The product over q | |N| of the class maps of project_to_primary.
PrimaryProductReport primary_product_check(ActionPtr const& action, Limits const& limits = {});

// The map v : H^1(J_q, N_q) -> H^1(J_q, N) induced by N_q <= N.
struct InclusionReport {
  std::uint64_t            prime;
  CohomologySet            small;  // H^1(J_q, N_q)
  CohomologySet            big;    // H^1(J_q, N)
  std::vector<std::size_t> map;
  bool                     bijective       = false;
  bool                     fixed_preserved = false;
};

InclusionReport include_coefficients(ActionPtr const& action, std::uint64_t q,
                                     Limits const& limits = {});

struct SylowFactor {
  std::uint64_t            prime;
  Subgroup                 sylow;      // J_p
  Subgroup                 hall;       // J'_p
  CohomologySet            h1;         // H^1(J_p, N)
  std::vector<std::size_t> fixed;      // classes fixed by J'_p
  std::vector<std::size_t> invariant;  // J-invariant classes
};

struct DecompositionReport {
  std::vector<std::uint64_t> shared_primes;
  CohomologySet              source;  // H^1(J, N)
  std::vector<SylowFactor>   factors{};
  // Per class of the source: per factor, the index into factor.fixed.
  std::vector<std::vector<std::size_t>> forward{};
  std::size_t                           target_size = 1;

  bool well_defined        = false;
  bool point_preserving    = false;
  bool lands_in_fixed      = false;
  bool invariant_is_fixed  = false;
  bool injective           = false;
  bool surjective          = false;
  bool bijective           = false;
  std::string witness{};
};

// phi -> (phi restricted to J_p)_p into the product of fixed-class sets.
// Throws NotNilpotent, BudgetExceeded.
DecompositionReport decomposition_map(ActionPtr const& action, Limits const& limits = {});

struct ExtensionResult {
  std::size_t target_class;  // class in H^1(J, N_q)
  Cocycle     extended;
  bool        direct;        // the formula phi~(j' j) = phi(j) produced a cocycle
};

// `sylow_h1` is H^1(J_q, N_q) and `full_h1` is H^1(J, N_q) for the same
// action. The input class must be fixed by the Hall q'-subgroup.
// Throws InvalidArgument, NoPreimageFound.
ExtensionResult extend_from_sylow(CohomologySet const& sylow_h1, std::size_t cls,
                                  CohomologySet const& full_h1, std::uint64_t q);

////////////////////////////////////////////////////////////////////////
// Abelian coefficients
////////////////////////////////////////////////////////////////////////

// H^1(K, N) for abelian N with the pointwise product of classes.
struct AbelianH1 {
  CohomologySet                         h1;
  std::vector<std::vector<std::size_t>> product;
  std::vector<std::size_t>              orders;

  // Classes whose order is a power of p.
  std::vector<std::size_t> primary_part(std::uint64_t p) const;
};

// Throws NotAbelian.
AbelianH1 abelian_h1_group(ActionPtr const& action, Subgroup const& domain,
                           Limits const& limits = {});

struct PrimaryRestriction {
  std::uint64_t prime;
  std::size_t   sylow_order;
  std::size_t   invariant_size;  // |inv_J H^1(J_p, N)|
  std::size_t   primary_size;    // |H^1(J, N)_(p)|
  bool          bijective;
};

struct Eq3Report {
  std::vector<std::uint64_t>      shared_primes;
  std::size_t                     h1_size      = 0;
  std::size_t                     product_size = 1;
  std::vector<PrimaryRestriction> primes;
  bool                            group_laws = false;
  bool                            holds      = false;
};

// |H^1(J, N)| = prod |inv_J H^1(J_p, N)| and each restriction of the
// p-primary part onto the invariant classes is a bijection. J may be any
// finite group. Throws NotAbelian.
Eq3Report eq3_check(ActionPtr const& action, Limits const& limits = {});

// Count of classes under the mirrored right-action reading, with
// n^x = x^-1.n:  phi(x y) = phi(x)^y phi(y)  and  phi'(x) = (n^x)^-1 phi(x) n.
// Should always equal |H^1(J, N)|; used to audit the convention choice.
std::size_t h1_size_right_convention(ActionPtr const& action, Limits const& limits = {});

}  // namespace nilcoh
