#pragma once

#include <cstdint>
#include <vector>

#include "nilcoh/group.hpp"

namespace nilcoh {

// Distinct prime divisors, ascending (trial division).
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool                       is_prime(std::uint64_t n);
// Largest power of p dividing n.
std::uint64_t              p_part(std::uint64_t n, std::uint64_t p);
bool                       is_p_power(std::uint64_t n, std::uint64_t p);

// The p-primary part of x: the unique power of x whose order is the p-part of
// the order of x and which differs from x by an element of p'-order.
elem_t primary_component(Group const& g, elem_t x, std::uint64_t p);

// gamma_1 = H, gamma_{i+1} = [gamma_i, H], stopping when the series stabilizes.
std::vector<Subgroup> lower_central_series(Subgroup const& h);
bool                  is_nilpotent(Subgroup const& h);
bool                  is_nilpotent(GroupPtr const& g);

// A Sylow p-subgroup of h. For nilpotent h this is the set of p-elements;
// otherwise a p-subgroup is grown by normalizer climbing.
Subgroup sylow_subgroup(Subgroup const& h, std::uint64_t p, Limits const& limits = {});
Subgroup sylow_subgroup(GroupPtr const& g, std::uint64_t p, Limits const& limits = {});
// Every Sylow p-subgroup of h, sorted by element list.
std::vector<Subgroup> all_sylow_subgroups(Subgroup const& h, std::uint64_t p,
                                          Limits const& limits = {});

// Elements of h of order coprime to p. Throws NotNilpotent.
Subgroup hall_pprime(Subgroup const& h, std::uint64_t p);
Subgroup hall_pprime(GroupPtr const& g, std::uint64_t p);

struct NilpotentDecomposition {
  GroupPtr                   parent;
  std::vector<std::uint64_t> primes;
  std::vector<Subgroup>      sylow_parts;
};

// Throws NotNilpotent.
NilpotentDecomposition nilpotent_decomposition(Subgroup const& h);
NilpotentDecomposition nilpotent_decomposition(GroupPtr const& g);

// All subgroups of `ambient` of order m that are generated by at most
// max_gens elements. Complete whenever every group of order m needs no more
// than max_gens generators (orders <= 8 with max_gens = 3; p-groups of order
// p^k with max_gens = k). The cases m = 1 and m = |ambient| are always exact.
// Throws BudgetExceeded.
std::vector<Subgroup> enumerate_subgroups_of_order(Subgroup const& ambient, std::size_t m,
                                                   std::size_t   max_gens,
                                                   Limits const& limits = {});
std::vector<Subgroup> enumerate_subgroups_of_order(GroupPtr const& g, std::size_t m,
                                                   std::size_t   max_gens,
                                                   Limits const& limits = {});
// Every subgroup generated by at most max_gens elements, ordered by
// (order, elements).
std::vector<Subgroup> enumerate_subgroups(Subgroup const& ambient, std::size_t max_gens,
                                          Limits const& limits = {});

// Fewest elements generating h (brute force, capped at `cap`; returns cap + 1
// if more are needed).
std::size_t min_generators(Subgroup const& h, std::size_t cap = 4);

// All K <= ambient with K n N = 1 and KN = ambient. N must be normal in
// ambient. Throws NotNormal, BudgetExceeded.
std::vector<Subgroup> complements(Subgroup const& ambient, Subgroup const& n,
                                  std::size_t max_gens, Limits const& limits = {});
std::vector<Subgroup> complements(GroupPtr const& g, Subgroup const& n, std::size_t max_gens,
                                  Limits const& limits = {});

// Partition of `subgroups` into classes under conjugation by elements of
// `by`. Classes hold indices and are ordered by their least member.
std::vector<std::vector<std::size_t>> conjugacy_classes_of(std::vector<Subgroup> const& subgroups,
                                                           Subgroup const&              by);

// For every prime dividing |H|, a Sylow p-subgroup of H is conjugate in the
// parent group to a Sylow p-subgroup of K.
bool locally_conjugate(Subgroup const& h, Subgroup const& k, Limits const& limits = {});

}  // namespace nilcoh
