#include "nilcoh/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

namespace nilcoh {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    out.push_back(n);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) {
    return false;
  }
  auto d = prime_divisors(n);
  return d.size() == 1 && d.front() == n;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_p_power(std::uint64_t n, std::uint64_t p) {
  return p_part(n, p) == n;
}

namespace {

  // Inverse of a modulo m (gcd(a, m) = 1, m >= 1).
  std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    if (m == 1) {
      return 0;
    }
    std::int64_t t = 0, new_t = 1, r = m, new_r = a % m;
    while (new_r != 0) {
      auto q = r / new_r;
      t      = std::exchange(new_t, t - q * new_t);
      r      = std::exchange(new_r, r - q * new_r);
    }
    return t < 0 ? t + m : t;
  }

  void require_prime(std::uint64_t p) {
    if (!is_prime(p)) {
      throw Error(Errc::InvalidArgument, std::to_string(p) + " is not prime");
    }
  }

  // Closure of `seeds` inside the parent of ambient, aborting once more than
  // `bound` elements are found. `member` is scratch of size |G|, all zero on
  // entry and on exit.
  std::optional<std::vector<elem_t>> bounded_closure(Group const&               g,
                                                     std::vector<elem_t> const& seeds,
                                                     std::size_t                bound,
                                                     std::vector<char>&         member) {
    std::vector<elem_t> elts{Group::identity};
    member[Group::identity] = 1;
    bool overflow           = false;
    for (std::size_t head = 0; head < elts.size() && !overflow; ++head) {
      for (auto s : seeds) {
        auto y = g.mul(elts[head], s);
        if (!member[y]) {
          member[y] = 1;
          elts.push_back(y);
          if (elts.size() > bound) {
            overflow = true;
            break;
          }
        }
      }
    }
    for (auto x : elts) {
      member[x] = 0;
    }
    if (overflow) {
      return std::nullopt;
    }
    std::sort(elts.begin(), elts.end());
    return elts;
  }

  // Level-wise search over subgroups generated by <= max_gens elements whose
  // order divides m. Returns every subgroup found, keyed by its element list.
  std::map<std::vector<elem_t>, std::vector<elem_t>> generator_bounded_search(
      Subgroup const& ambient, std::size_t m, std::size_t max_gens, Limits const& limits) {
    auto const& g = ambient.group();
    std::vector<elem_t> candidates;
    for (auto x : ambient.elements()) {
      if (x != Group::identity && m % g.element_order(x) == 0) {
        candidates.push_back(x);
      }
    }
    // element list -> generators used to reach it
    std::map<std::vector<elem_t>, std::vector<elem_t>> found;
    found.emplace(std::vector<elem_t>{Group::identity}, std::vector<elem_t>{});
    std::vector<std::vector<elem_t>> frontier{{Group::identity}};
    std::vector<char>                member(g.order(), 0);
    std::uint64_t                    closures = 0;

    for (std::size_t level = 1; level <= max_gens && !frontier.empty(); ++level) {
      std::vector<std::vector<elem_t>> next;
      for (auto const& key : frontier) {
        if (key.size() >= m) {
          continue;
        }
        auto const gens = found.at(key);
        for (auto x : candidates) {
          if (std::binary_search(key.begin(), key.end(), x)) {
            continue;
          }
          if (++closures > limits.subgroup_budget) {
            throw Error(Errc::BudgetExceeded, "subgroup enumeration exceeded "
                                                  + std::to_string(limits.subgroup_budget)
                                                  + " closures");
          }
          auto seeds = gens;
          seeds.push_back(x);
          auto elts = bounded_closure(g, seeds, m, member);
          if (!elts || m % elts->size() != 0) {
            continue;
          }
          if (found.emplace(*elts, seeds).second) {
            next.push_back(std::move(*elts));
          }
        }
      }
      frontier = std::move(next);
    }
    return found;
  }

}  // namespace

elem_t primary_component(Group const& g, elem_t x, std::uint64_t p) {
  auto const o  = g.element_order(x);
  auto const pa = p_part(o, p);
  auto const m  = o / pa;
  auto const k  = static_cast<std::int64_t>(m) * inverse_mod(static_cast<std::int64_t>(m % pa),
                                                             static_cast<std::int64_t>(pa));
  return g.pow(x, k);
}

std::vector<Subgroup> lower_central_series(Subgroup const& h) {
  std::vector<Subgroup> series{h};
  while (true) {
    auto next = commutator_subgroup(series.back(), h);
    if (next == series.back()) {
      break;
    }
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(Subgroup const& h) {
  return lower_central_series(h).back().is_trivial();
}

bool is_nilpotent(GroupPtr const& g) {
  return is_nilpotent(Subgroup::whole(g));
}

Subgroup sylow_subgroup(Subgroup const& h, std::uint64_t p, Limits const& limits) {
  require_prime(p);
  auto const& g      = h.group();
  auto const  target = p_part(h.order(), p);
  if (target == 1) {
    return Subgroup::trivial(h.parent());
  }
  if (is_nilpotent(h)) {
    std::vector<elem_t> out;
    for (auto x : h.elements()) {
      if (is_p_power(g.element_order(x), p)) {
        out.push_back(x);
      }
    }
    return make_subgroup_unchecked(h.parent(), std::move(out));
  }
  // A p-subgroup P that is not Sylow has p | [N_H(P) : P], so some p-element
  // of N_H(P) lies outside P and P<x> is a larger p-subgroup.
  auto          sylow = Subgroup::trivial(h.parent());
  std::uint64_t steps = 0;
  while (sylow.order() < target) {
    auto const        norm = normalizer(h, sylow);
    std::optional<elem_t> grow;
    for (auto x : norm.elements()) {
      if (++steps > limits.subgroup_budget) {
        throw Error(Errc::SearchBudgetExceeded, "Sylow search exceeded its budget");
      }
      if (!sylow.contains(x) && is_p_power(g.element_order(x), p)) {
        grow = x;
        break;
      }
    }
    if (!grow) {
      throw Error(Errc::SearchBudgetExceeded, "normalizer climbing stalled");
    }
    std::vector<elem_t> seeds(sylow.elements().begin(), sylow.elements().end());
    seeds.push_back(*grow);
    sylow = Subgroup::generated(h.parent(), seeds);
  }
  return sylow;
}

Subgroup sylow_subgroup(GroupPtr const& g, std::uint64_t p, Limits const& limits) {
  return sylow_subgroup(Subgroup::whole(g), p, limits);
}

std::vector<Subgroup> all_sylow_subgroups(Subgroup const& h, std::uint64_t p,
                                          Limits const& limits) {
  auto const                    s = sylow_subgroup(h, p, limits);
  std::set<std::vector<elem_t>> seen;
  std::vector<Subgroup>         out;
  for (auto x : h.elements()) {
    auto c = s.conjugate(x);
    if (seen.emplace(c.elements().begin(), c.elements().end()).second) {
      out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(), [](Subgroup const& a, Subgroup const& b) {
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
  });
  return out;
}

Subgroup hall_pprime(Subgroup const& h, std::uint64_t p) {
  require_prime(p);
  if (!is_nilpotent(h)) {
    throw Error(Errc::NotNilpotent, "Hall p'-subgroup requested for a non-nilpotent group");
  }
  auto const&         g = h.group();
  std::vector<elem_t> out;
  for (auto x : h.elements()) {
    if (g.element_order(x) % p != 0) {
      out.push_back(x);
    }
  }
  return make_subgroup_unchecked(h.parent(), std::move(out));
}

Subgroup hall_pprime(GroupPtr const& g, std::uint64_t p) {
  return hall_pprime(Subgroup::whole(g), p);
}

NilpotentDecomposition nilpotent_decomposition(Subgroup const& h) {
  if (!is_nilpotent(h)) {
    throw Error(Errc::NotNilpotent, "group is not nilpotent");
  }
  NilpotentDecomposition d{h.parent(), prime_divisors(h.order()), {}};
  for (auto p : d.primes) {
    d.sylow_parts.push_back(sylow_subgroup(h, p));
  }
  return d;
}

NilpotentDecomposition nilpotent_decomposition(GroupPtr const& g) {
  return nilpotent_decomposition(Subgroup::whole(g));
}

std::vector<Subgroup> enumerate_subgroups_of_order(Subgroup const& ambient, std::size_t m,
                                                   std::size_t max_gens, Limits const& limits) {
  if (m == 0 || ambient.order() % m != 0) {
    throw Error(Errc::InvalidArgument, "requested order does not divide the group order");
  }
  if (m == 1) {
    return {Subgroup::trivial(ambient.parent())};
  }
  if (m == ambient.order()) {
    return {ambient};
  }
  std::vector<Subgroup> out;
  for (auto& [elts, gens] : generator_bounded_search(ambient, m, max_gens, limits)) {
    if (elts.size() == m) {
      out.push_back(make_subgroup_unchecked(ambient.parent(), elts));
    }
  }
  return out;
}

std::vector<Subgroup> enumerate_subgroups_of_order(GroupPtr const& g, std::size_t m,
                                                   std::size_t max_gens, Limits const& limits) {
  return enumerate_subgroups_of_order(Subgroup::whole(g), m, max_gens, limits);
}

std::vector<Subgroup> enumerate_subgroups(Subgroup const& ambient, std::size_t max_gens,
                                          Limits const& limits) {
  std::vector<Subgroup> out;
  for (auto& [elts, gens] :
       generator_bounded_search(ambient, ambient.order(), max_gens, limits)) {
    out.push_back(make_subgroup_unchecked(ambient.parent(), elts));
  }
  std::stable_sort(out.begin(), out.end(), [](Subgroup const& a, Subgroup const& b) {
    return a.order() < b.order();
  });
  return out;
}

std::size_t min_generators(Subgroup const& h, std::size_t cap) {
  if (h.is_trivial()) {
    return 0;
  }
  auto const&       g = h.group();
  std::vector<char> member(g.order(), 0);
  std::vector<elem_t> elts(h.elements().begin() + 1, h.elements().end());

  // depth-first over increasing index tuples
  std::vector<elem_t> chosen;
  auto search = [&](auto&& self, std::size_t start, std::size_t k) -> bool {
    if (chosen.size() == k) {
      auto c = bounded_closure(g, chosen, h.order(), member);
      return c && c->size() == h.order();
    }
    for (std::size_t i = start; i < elts.size(); ++i) {
      chosen.push_back(elts[i]);
      bool ok = self(self, i + 1, k);
      chosen.pop_back();
      if (ok) {
        return true;
      }
    }
    return false;
  };
  for (std::size_t k = 1; k <= cap; ++k) {
    if (search(search, 0, k)) {
      return k;
    }
  }
  return cap + 1;
}

std::vector<Subgroup> complements(Subgroup const& ambient, Subgroup const& n,
                                  std::size_t max_gens, Limits const& limits) {
  if (!n.is_subset_of(ambient) || !is_normal(ambient, n)) {
    throw Error(Errc::NotNormal, "complements requested for a non-normal subgroup");
  }
  std::vector<Subgroup> out;
  for (auto& k : enumerate_subgroups_of_order(ambient, ambient.order() / n.order(), max_gens,
                                              limits)) {
    if (intersection(k, n).is_trivial()) {
      out.push_back(std::move(k));
    }
  }
  return out;
}

std::vector<Subgroup> complements(GroupPtr const& g, Subgroup const& n, std::size_t max_gens,
                                  Limits const& limits) {
  return complements(Subgroup::whole(g), n, max_gens, limits);
}

std::vector<std::vector<std::size_t>> conjugacy_classes_of(std::vector<Subgroup> const& subgroups,
                                                           Subgroup const&              by) {
  std::map<std::vector<elem_t>, std::size_t> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    index.emplace(std::vector<elem_t>(subgroups[i].elements().begin(),
                                      subgroups[i].elements().end()),
                  i);
  }
  std::vector<std::size_t> parent(subgroups.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      x = parent[x] = parent[parent[x]];
    }
    return x;
  };
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (auto c : by.elements()) {
      auto conj = subgroups[i].conjugate(c);
      auto it   = index.find(std::vector<elem_t>(conj.elements().begin(), conj.elements().end()));
      if (it != index.end()) {
        auto a = find(i), b = find(it->second);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    grouped[find(i)].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : grouped) {
    out.push_back(std::move(members));
  }
  return out;
}

bool locally_conjugate(Subgroup const& h, Subgroup const& k, Limits const& limits) {
  if (h.order() != k.order()) {
    throw Error(Errc::InvalidArgument, "local conjugacy needs subgroups of equal order");
  }
  for (auto p : prime_divisors(h.order())) {
    auto const sh = sylow_subgroup(h, p, limits);
    auto const sk = sylow_subgroup(k, p, limits);
    if (!are_conjugate_subgroups(sh, sk)) {
      return false;
    }
  }
  return true;
}

}  // namespace nilcoh
