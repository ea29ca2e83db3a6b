#pragma once

// Independent reference computations for the tests. Everything here works
// from the raw multiplication table and action table only, with the most
// direct algorithm available, and shares no code with the library beyond
// Group::mul / Group::inv / ActionOnGroup::apply.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "nilcoh/actions.hpp"
#include "nilcoh/group.hpp"

namespace oracle {

using nilcoh::elem_t;
using nilcoh::Group;
using Set = std::vector<elem_t>;

inline Set elements_of(nilcoh::Subgroup const& h) { return {h.elements().begin(), h.elements().end()}; }

inline Set all_elements(Group const& g) {
  Set s(g.order());
  std::iota(s.begin(), s.end(), elem_t{0});
  return s;
}

// Closure of `seeds` under multiplication (finite, so inverses come free).
inline Set closure(Group const& g, Set const& seeds) {
  std::vector<char> in(g.order(), 0);
  Set               out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : seeds) {
      auto const x = g.mul(out[i], s);
      if (!in[x]) {
        in[x] = 1;
        out.push_back(x);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_subgroup(Group const& g, Set const& s) {
  std::vector<char> in(g.order(), 0);
  for (auto x : s) {
    in[x] = 1;
  }
  if (s.empty() || !in[0]) {
    return false;
  }
  for (auto a : s) {
    for (auto b : s) {
      if (!in[g.mul(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

// Every subgroup is the join of its cyclic subgroups: start from the cyclic
// ones and join pairs until nothing new appears.
inline std::vector<Set> all_subgroups(Group const& g) {
  std::set<Set> found;
  for (elem_t x = 0; x < g.order(); ++x) {
    found.insert(closure(g, {x}));
  }
  std::vector<Set> cyclic(found.begin(), found.end());
  std::vector<Set> frontier = cyclic;
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (auto const& a : frontier) {
      for (auto const& c : cyclic) {
        if (std::includes(a.begin(), a.end(), c.begin(), c.end())) {
          continue;
        }
        Set seeds = a;
        seeds.insert(seeds.end(), c.begin(), c.end());
        auto j = closure(g, seeds);
        if (found.insert(j).second) {
          next.push_back(std::move(j));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Set> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](Set const& a, Set const& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

inline Set conjugate(Group const& g, Set const& s, elem_t by) {
  Set out;
  for (auto x : s) {
    out.push_back(g.mul(g.mul(g.inv(by), x), by));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_normal(Group const& g, Set const& n) {
  for (elem_t x = 0; x < g.order(); ++x) {
    if (conjugate(g, n, x) != n) {
      return false;
    }
  }
  return true;
}

inline Set intersect(Set const& a, Set const& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline std::vector<Set> complements(Group const& g, Set const& n) {
  std::vector<Set> out;
  for (auto const& k : all_subgroups(g)) {
    if (k.size() * n.size() == g.order() && intersect(k, n).size() == 1) {
      out.push_back(k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Number of orbits of `subgroups` under conjugation by elements of `by`.
inline std::size_t conjugacy_class_count(Group const& g, std::vector<Set> const& subgroups,
                                         Set const& by) {
  std::set<Set> seen;
  std::size_t   classes = 0;
  for (auto const& s : subgroups) {
    if (seen.count(s)) {
      continue;
    }
    ++classes;
    for (auto x : by) {
      seen.insert(conjugate(g, s, x));
    }
  }
  return classes;
}

inline bool are_conjugate(Group const& g, Set const& a, Set const& b) {
  for (elem_t x = 0; x < g.order(); ++x) {
    if (conjugate(g, a, x) == b) {
      return true;
    }
  }
  return false;
}

inline std::vector<std::uint64_t> primes_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  return out;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline std::size_t order_of(Group const& g, elem_t x) {
  std::size_t k = 1;
  for (elem_t y = x; y != 0; y = g.mul(y, x)) {
    ++k;
  }
  return k;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

inline Set p_elements(Group const& g, std::uint64_t p) {
  Set out;
  for (elem_t x = 0; x < g.order(); ++x) {
    if (is_p_power(order_of(g, x), p)) {
      out.push_back(x);
    }
  }
  return out;
}

// A finite group is nilpotent iff every Sylow subgroup is normal, iff for
// every p the p-elements number exactly the p-part of the order.
inline bool is_nilpotent(Group const& g) {
  for (auto p : primes_of(g.order())) {
    if (p_elements(g, p).size() != p_part(g.order(), p)) {
      return false;
    }
  }
  return true;
}

inline bool is_nilpotent(Group const& g, Set const& h) {
  for (auto p : primes_of(h.size())) {
    std::size_t count = 0;
    for (auto x : h) {
      count += is_p_power(order_of(g, x), p);
    }
    if (count != p_part(h.size(), p)) {
      return false;
    }
  }
  return true;
}

inline std::vector<Set> sylow_subgroups(Group const& g, Set const& h, std::uint64_t p) {
  std::vector<Set> out;
  auto const       m = p_part(h.size(), p);
  for (auto const& s : all_subgroups(g)) {
    if (s.size() == m && std::includes(h.begin(), h.end(), s.begin(), s.end())) {
      out.push_back(s);
    }
  }
  return out;
}

// Each prime: some Sylow p-subgroup of A is conjugate to one of B.
inline bool locally_conjugate(Group const& g, Set const& a, Set const& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (auto p : primes_of(a.size())) {
    auto const sa = sylow_subgroups(g, a, p);
    auto const sb = sylow_subgroups(g, b, p);
    if (!are_conjugate(g, sa.front(), sb.front())) {
      return false;
    }
  }
  return true;
}

////////////////////////////////////////////////////////////////////////
// Cocycles by the definition
////////////////////////////////////////////////////////////////////////

// Values indexed by position in `domain` (sorted).
using Map = std::vector<elem_t>;

inline bool is_cocycle(nilcoh::ActionOnGroup const& a, Set const& domain, Map const& phi) {
  auto const& j = *a.actor();
  auto const& n = *a.target();
  std::map<elem_t, std::size_t> pos;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    pos[domain[i]] = i;
  }
  for (std::size_t x = 0; x < domain.size(); ++x) {
    for (std::size_t y = 0; y < domain.size(); ++y) {
      auto const xy = pos.at(j.mul(domain[x], domain[y]));
      if (phi[xy] != n.mul(phi[x], a.apply(domain[x], phi[y]))) {
        return false;
      }
    }
  }
  return true;
}

// Every map domain -> N, odometer order. Refuses more than `cap` maps.
inline std::vector<Map> cocycles_naive(nilcoh::ActionOnGroup const& a, Set const& domain,
                                       std::uint64_t cap = 2'000'000) {
  auto const  nn    = a.target()->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    total *= nn;
    if (total > cap) {
      throw std::length_error("cocycles_naive: too many maps");
    }
  }
  std::vector<Map> out;
  Map              phi(domain.size(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    auto c = t;
    for (auto& v : phi) {
      v = static_cast<elem_t>(c % nn);
      c /= nn;
    }
    if (is_cocycle(a, domain, phi)) {
      out.push_back(phi);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// (n . phi)(x) = n^-1 phi(x) x.n
inline Map twist(nilcoh::ActionOnGroup const& a, Set const& domain, Map const& phi, elem_t n) {
  auto const& g = *a.target();
  Map         out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    out[i] = g.mul(g.mul(g.inv(n), phi[i]), a.apply(domain[i], n));
  }
  return out;
}

inline bool cohomologous(nilcoh::ActionOnGroup const& a, Set const& domain, Map const& phi,
                         Map const& psi) {
  for (elem_t n = 0; n < a.target()->order(); ++n) {
    if (twist(a, domain, phi, n) == psi) {
      return true;
    }
  }
  return false;
}

inline std::size_t class_count(nilcoh::ActionOnGroup const& a, Set const& domain,
                               std::vector<Map> const& cocycles) {
  std::set<Map> seen;
  std::size_t   classes = 0;
  for (auto const& phi : cocycles) {
    if (seen.count(phi)) {
      continue;
    }
    ++classes;
    for (elem_t n = 0; n < a.target()->order(); ++n) {
      seen.insert(twist(a, domain, phi, n));
    }
  }
  return classes;
}

inline Map restrict_map(Set const& domain, Map const& phi, Set const& sub) {
  Map out;
  for (auto x : sub) {
    out.push_back(phi[static_cast<std::size_t>(std::lower_bound(domain.begin(), domain.end(), x)
                                               - domain.begin())]);
  }
  return out;
}

// Classes of H^1(K, N) whose restrictions to K n K^j agree with the
// restriction of phi^j for every j in J, computed for every member of the
// class and required to agree.
inline std::size_t invariant_class_count(nilcoh::ActionOnGroup const& a, Set const& k) {
  auto const& j       = *a.actor();
  auto const  cocs    = cocycles_naive(a, k);
  std::set<Map>                   seen;
  std::size_t                     invariant = 0;
  for (auto const& phi : cocs) {
    if (seen.count(phi)) {
      continue;
    }
    std::vector<Map> members;
    for (elem_t n = 0; n < a.target()->order(); ++n) {
      auto m = twist(a, k, phi, n);
      if (seen.insert(m).second) {
        members.push_back(m);
      }
    }
    std::vector<bool> verdicts;
    for (auto const& m : members) {
      bool ok = true;
      for (elem_t g = 0; g < j.order() && ok; ++g) {
        auto const kg    = conjugate(j, k, g);
        auto const inter = intersect(k, kg);
        // phi^g(x) = g^-1 . phi(g x g^-1) for x in K^g
        Map conj;
        for (auto x : inter) {
          auto const y = j.mul(j.mul(g, x), j.inv(g));
          auto const v = m[static_cast<std::size_t>(std::lower_bound(k.begin(), k.end(), y)
                                                    - k.begin())];
          conj.push_back(a.apply(j.inv(g), v));
        }
        ok = cohomologous(a, inter, restrict_map(k, m, inter), conj);
      }
      verdicts.push_back(ok);
    }
    if (std::adjacent_find(verdicts.begin(), verdicts.end(), std::not_equal_to<>()) !=
        verdicts.end()) {
      throw std::logic_error("invariance depends on the class representative");
    }
    invariant += verdicts.front();
  }
  return invariant;
}

////////////////////////////////////////////////////////////////////////
// G-sets
////////////////////////////////////////////////////////////////////////

inline std::vector<std::uint32_t> fixed_points(nilcoh::GSet const& omega, Set const& s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < omega.size(); ++x) {
    bool fixed = true;
    for (auto g : s) {
      fixed = fixed && omega.act(g, x) == x;
    }
    if (fixed) {
      out.push_back(x);
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// Hand-rolled generators for the property tests
////////////////////////////////////////////////////////////////////////

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }
  elem_t element(Group const& g) { return static_cast<elem_t>(below(g.order())); }
  template <typename T>
  T const& pick(std::vector<T> const& v) {
    return v[below(v.size())];
  }
  // Closure of 1 to 2 random elements.
  Set subgroup(Group const& g) {
    Set seeds{element(g)};
    if (below(2)) {
      seeds.push_back(element(g));
    }
    return closure(g, seeds);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
