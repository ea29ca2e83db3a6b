#include "nilcoh/cohomology.hpp"

#include <algorithm>
#include <functional>

#include "nilcoh/structure.hpp"

namespace nilcoh {

namespace {

  void require_same_setting(Cocycle const& a, Cocycle const& b) {
    if (a.action() != b.action() || !(a.domain() == b.domain())) {
      throw Error(Errc::DomainMismatch, "cocycles have different actions or domains");
    }
  }

  bool value_less(Cocycle const& a, Cocycle const& b) {
    return a.values() < b.values();
  }

  // Greedy generating sequence: each generator is the least element not yet
  // in the subgroup generated so far.
  std::vector<elem_t> generating_sequence(Subgroup const& k) {
    std::vector<elem_t> gens;
    auto                current = Subgroup::trivial(k.parent());
    for (auto x : k.elements()) {
      if (!current.contains(x)) {
        gens.push_back(x);
        current = Subgroup::generated(k.parent(), gens);
      }
    }
    return gens;
  }

}  // namespace

////////////////////////////////////////////////////////////////////////
// Cocycle
////////////////////////////////////////////////////////////////////////

Cocycle::Cocycle(ActionPtr action, Subgroup domain, std::vector<elem_t> values)
    : action_(std::move(action)), domain_(std::move(domain)), values_(std::move(values)) {
  if (domain_.parent() != action_->actor()) {
    throw Error(Errc::DomainMismatch, "cocycle domain is not a subgroup of the acting group");
  }
  if (values_.size() != domain_.order()) {
    throw Error(Errc::InvalidArgument, "cocycle needs one value per domain element");
  }
  for (auto v : values_) {
    if (v >= action_->target()->order()) {
      throw Error(Errc::InvalidArgument, "cocycle value out of range");
    }
  }
}

Cocycle Cocycle::make(ActionPtr action, Subgroup domain, std::vector<elem_t> values) {
  Cocycle phi(std::move(action), std::move(domain), std::move(values));
  if (!satisfies_cocycle_identity(*phi.action(), phi.domain(), phi.values())) {
    throw Error(Errc::NotACocycle, "phi(xy) != phi(x) x.phi(y) for some pair");
  }
  return phi;
}

Cocycle Cocycle::trivial(ActionPtr action, Subgroup domain) {
  std::vector<elem_t> values(domain.order(), Group::identity);
  return Cocycle(std::move(action), std::move(domain), std::move(values));
}

bool Cocycle::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](elem_t v) { return v == Group::identity; });
}

bool satisfies_cocycle_identity(ActionOnGroup const& action, Subgroup const& domain,
                                std::span<elem_t const> values) {
  auto const& j = *action.actor();
  auto const& n = *action.target();
  for (auto x : domain.elements()) {
    auto const vx = values[domain.position(x)];
    for (auto y : domain.elements()) {
      auto const vxy = values[domain.position(j.mul(x, y))];
      if (vxy != n.mul(vx, action.apply(x, values[domain.position(y)]))) {
        return false;
      }
    }
  }
  return true;
}

////////////////////////////////////////////////////////////////////////
// Enumeration
////////////////////////////////////////////////////////////////////////

std::vector<Cocycle> cocycles(ActionPtr const& action, Subgroup const& domain,
                              Limits const& limits) {
  if (domain.parent() != action->actor()) {
    throw Error(Errc::DomainMismatch, "domain is not a subgroup of the acting group");
  }
  auto const& j    = *action->actor();
  auto const& n    = *action->target();
  auto const  gens = generating_sequence(domain);

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    candidates *= n.order();
    if (candidates > limits.enumeration_budget) {
      throw Error(Errc::BudgetExceeded, "|N|^#gens exceeds the enumeration budget of "
                                            + std::to_string(limits.enumeration_budget));
    }
  }

  // chain[i] = elements of <g_1, ..., g_i>
  std::vector<std::vector<elem_t>> chain{{Group::identity}};
  for (std::size_t i = 1; i <= gens.size(); ++i) {
    auto sub = Subgroup::generated(action->actor(), std::span(gens.data(), i));
    chain.emplace_back(sub.elements().begin(), sub.elements().end());
  }

  constexpr elem_t      unset = ~elem_t{0};
  std::vector<Cocycle>  out;
  std::vector<elem_t>   phi(j.order(), unset);
  phi[Group::identity] = Group::identity;

  std::function<void(std::size_t)> extend = [&](std::size_t level) {
    if (level == gens.size()) {
      std::vector<elem_t> values;
      values.reserve(domain.order());
      for (auto x : domain.elements()) {
        values.push_back(phi[x]);
      }
      out.emplace_back(action, domain, std::move(values));
      return;
    }
    auto const  g     = gens[level];
    auto const& outer = chain[level + 1];
    auto const  saved = phi;
    for (elem_t v = 0; v < n.order(); ++v) {
      phi    = saved;
      phi[g] = v;
      // propagate phi(x g_t) = phi(x) x.phi(g_t) from the defined elements
      std::vector<elem_t> queue(chain[level].begin(), chain[level].end());
      queue.push_back(g);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto const x = queue[head];
        for (std::size_t t = 0; t <= level; ++t) {
          auto const y = j.mul(x, gens[t]);
          if (phi[y] == unset) {
            phi[y] = n.mul(phi[x], action->apply(x, phi[gens[t]]));
            queue.push_back(y);
          }
        }
      }
      bool consistent = true;
      for (auto x : outer) {
        for (std::size_t t = 0; t <= level && consistent; ++t) {
          consistent =
              phi[j.mul(x, gens[t])] == n.mul(phi[x], action->apply(x, phi[gens[t]]));
        }
        if (!consistent) {
          break;
        }
      }
      if (consistent) {
        extend(level + 1);
      }
    }
    phi = saved;
  };
  extend(0);
  std::sort(out.begin(), out.end(), value_less);
  return out;
}

namespace {

  // Backtracking over all maps domain -> N, assigning positions in order and
  // checking `holds(x, y)` on every pair (x, y) once x, y and xy all carry a
  // value.
  template <typename Holds>
  std::vector<std::vector<elem_t>> all_maps_satisfying(Subgroup const& domain,
                                                       std::size_t target_order, Holds holds,
                                                       std::uint64_t budget) {
    auto const& j = domain.group();
    auto const  m = domain.order();
    // pairs to test when position t is assigned
    std::vector<std::vector<std::pair<elem_t, elem_t>>> due(m);
    for (auto x : domain.elements()) {
      for (auto y : domain.elements()) {
        auto last = std::max({domain.position(x), domain.position(y),
                              domain.position(j.mul(x, y))});
        due[last].emplace_back(x, y);
      }
    }
    std::vector<std::vector<elem_t>> out;
    std::vector<elem_t>              values(m, 0);
    std::uint64_t                    visited = 0;
    std::function<void(std::size_t)> assign  = [&](std::size_t t) {
      if (t == m) {
        out.push_back(values);
        return;
      }
      for (elem_t v = 0; v < target_order; ++v) {
        if (++visited > budget) {
          throw Error(Errc::BudgetExceeded,
                      "oracle visited more than " + std::to_string(budget) + " partial maps");
        }
        values[t] = v;
        bool ok   = std::all_of(due[t].begin(), due[t].end(),
                                [&](auto const& pr) { return holds(values, pr.first, pr.second); });
        if (ok) {
          assign(t + 1);
        }
      }
    };
    assign(0);
    return out;
  }

}  // namespace

std::vector<Cocycle> cocycles_bruteforce(ActionPtr const& action, Subgroup const& domain,
                                         Limits const& limits) {
  if (domain.parent() != action->actor()) {
    throw Error(Errc::DomainMismatch, "domain is not a subgroup of the acting group");
  }
  auto const& j     = *action->actor();
  auto const& n     = *action->target();
  auto        holds = [&](std::vector<elem_t> const& v, elem_t x, elem_t y) {
    return v[domain.position(j.mul(x, y))]
           == n.mul(v[domain.position(x)], action->apply(x, v[domain.position(y)]));
  };
  std::vector<Cocycle> out;
  for (auto& values : all_maps_satisfying(domain, n.order(), holds, limits.oracle_budget)) {
    out.emplace_back(action, domain, std::move(values));
  }
  std::sort(out.begin(), out.end(), value_less);
  return out;
}

std::size_t h1_size_right_convention(ActionPtr const& action, Limits const& limits) {
  auto const& j      = *action->actor();
  auto const& n      = *action->target();
  auto const  domain = Subgroup::whole(action->actor());
  // n^x = x^-1 . n
  auto right = [&](elem_t v, elem_t x) { return action->apply(j.inv(x), v); };
  auto holds = [&](std::vector<elem_t> const& v, elem_t x, elem_t y) {
    return v[j.mul(x, y)] == n.mul(right(v[x], y), v[y]);
  };
  auto maps = all_maps_satisfying(domain, n.order(), holds, limits.oracle_budget);
  std::sort(maps.begin(), maps.end());
  std::vector<char> seen(maps.size(), 0);
  std::size_t       classes = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    ++classes;
    for (elem_t c = 0; c < n.order(); ++c) {
      std::vector<elem_t> moved(j.order());
      for (elem_t x = 0; x < j.order(); ++x) {
        moved[x] = n.mul(n.mul(n.inv(right(c, x)), maps[i][x]), c);
      }
      auto it = std::lower_bound(maps.begin(), maps.end(), moved);
      if (it == maps.end() || *it != moved) {
        throw Error(Errc::Inconsistent, "right-convention coboundary left the cocycle set");
      }
      seen[static_cast<std::size_t>(it - maps.begin())] = 1;
    }
  }
  return classes;
}

////////////////////////////////////////////////////////////////////////
// Cohomology classes
////////////////////////////////////////////////////////////////////////

bool is_coboundary_witness(Cocycle const& phi, Cocycle const& phi_prime, elem_t c) {
  require_same_setting(phi, phi_prime);
  auto const& n = *phi.action()->target();
  auto const  d = phi.domain().elements();
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto expected = n.mul(n.mul(n.inv(c), phi.values()[i]), phi.action()->apply(d[i], c));
    if (phi_prime.values()[i] != expected) {
      return false;
    }
  }
  return true;
}

std::optional<elem_t> cohomologous(Cocycle const& phi, Cocycle const& phi_prime) {
  require_same_setting(phi, phi_prime);
  for (elem_t c = 0; c < phi.action()->target()->order(); ++c) {
    if (is_coboundary_witness(phi, phi_prime, c)) {
      return c;
    }
  }
  return std::nullopt;
}

CohomologySet::CohomologySet(ActionPtr action, Subgroup domain,
                             std::vector<Cocycle> sorted_cocycles)
    : action_(std::move(action)), domain_(std::move(domain)),
      cocycles_(std::move(sorted_cocycles)) {
  for (std::size_t i = 0; i < cocycles_.size(); ++i) {
    index_.emplace(cocycles_[i].values(), i);
  }
  auto const& n    = *action_->target();
  auto const  dom  = domain_.elements();
  constexpr auto none = ~std::size_t{0};
  class_of_.assign(cocycles_.size(), none);
  for (std::size_t i = 0; i < cocycles_.size(); ++i) {
    if (class_of_[i] != none) {
      continue;
    }
    auto const c = classes_.size();
    classes_.emplace_back();
    auto const& v = cocycles_[i].values();
    for (elem_t m = 0; m < n.order(); ++m) {
      std::vector<elem_t> moved(v.size());
      for (std::size_t t = 0; t < v.size(); ++t) {
        moved[t] = n.mul(n.mul(n.inv(m), v[t]), action_->apply(dom[t], m));
      }
      auto it = index_.find(moved);
      if (it == index_.end()) {
        throw Error(Errc::Inconsistent, "coboundary action left the cocycle set");
      }
      if (class_of_[it->second] == none) {
        class_of_[it->second] = c;
        classes_.back().push_back(it->second);
      }
    }
    std::sort(classes_.back().begin(), classes_.back().end());
  }
  auto trivial = index_.find(std::vector<elem_t>(domain_.order(), Group::identity));
  if (trivial == index_.end()) {
    throw Error(Errc::Inconsistent, "the all-identity map is missing from the cocycle list");
  }
  distinguished_ = class_of_[trivial->second];
}

std::optional<std::size_t> CohomologySet::find(std::span<elem_t const> values) const {
  auto it = index_.find(std::vector<elem_t>(values.begin(), values.end()));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return class_of_[it->second];
}

std::size_t CohomologySet::class_of(Cocycle const& phi) const {
  if (phi.action() != action_ || !(phi.domain() == domain_)) {
    throw Error(Errc::DomainMismatch, "cocycle does not belong to this cohomology set");
  }
  auto c = find(phi.values());
  if (!c) {
    throw Error(Errc::NotACocycle, "map is not among the enumerated cocycles");
  }
  return *c;
}

CohomologySet h1(ActionPtr const& action, Subgroup const& domain, Limits const& limits) {
  return CohomologySet(action, domain, cocycles(action, domain, limits));
}

CohomologySet h1(ActionPtr const& action, Limits const& limits) {
  return h1(action, Subgroup::whole(action->actor()), limits);
}

////////////////////////////////////////////////////////////////////////
// Complements
////////////////////////////////////////////////////////////////////////

Cocycle complement_to_cocycle(SemidirectProduct const& sd, Subgroup const& k) {
  if (k.parent() != sd.group) {
    throw Error(Errc::NotAComplement, "subgroup is not in the semidirect product");
  }
  auto const normal = sd.normal();
  if (!intersection(k, normal).is_trivial()
      || k.order() * normal.order() != sd.group->order()) {
    throw Error(Errc::NotAComplement, "subgroup does not complement N");
  }
  auto const&         j = *sd.action->actor();
  std::vector<elem_t> values(j.order());
  for (auto g : k.elements()) {
    auto [nv, jv] = sd.components(g);
    values[jv]    = nv;
  }
  return Cocycle(sd.action, Subgroup::whole(sd.action->actor()), std::move(values));
}

Subgroup cocycle_to_complement(SemidirectProduct const& sd, Cocycle const& phi) {
  if (phi.action() != sd.action || !phi.domain().is_whole()) {
    throw Error(Errc::DomainMismatch, "cocycle must be defined on all of J for this action");
  }
  std::vector<elem_t> elts;
  for (auto x : phi.domain().elements()) {
    elts.push_back(sd.element(phi(x), x));
  }
  return Subgroup::from_elements(sd.group, std::move(elts));
}

////////////////////////////////////////////////////////////////////////
// Restriction, conjugation, invariance
////////////////////////////////////////////////////////////////////////

Cocycle restrict(Cocycle const& phi, Subgroup const& sub) {
  if (sub.parent() != phi.domain().parent() || !sub.is_subset_of(phi.domain())) {
    throw Error(Errc::NotASubgroup, "restriction target is not a subgroup of the domain");
  }
  std::vector<elem_t> values;
  values.reserve(sub.order());
  for (auto x : sub.elements()) {
    values.push_back(phi(x));
  }
  return Cocycle(phi.action(), sub, std::move(values));
}

std::vector<std::size_t> restriction_map(CohomologySet const& from, CohomologySet const& to) {
  if (from.action() != to.action() || !to.domain().is_subset_of(from.domain())) {
    throw Error(Errc::NotASubgroup, "restriction needs a subgroup of the source domain");
  }
  constexpr auto           none = ~std::size_t{0};
  std::vector<std::size_t> map(from.size(), none);
  for (std::size_t i = 0; i < from.cocycles().size(); ++i) {
    auto const c   = from.class_of_index(i);
    auto const img = to.class_of(restrict(from.cocycles()[i], to.domain()));
    if (map[c] == none) {
      map[c] = img;
    } else if (map[c] != img) {
      throw Error(Errc::Inconsistent, "restriction is not well defined on classes");
    }
  }
  return map;
}

Cocycle conjugate_cocycle(Cocycle const& phi, elem_t j) {
  auto const& grp    = *phi.action()->actor();
  auto const  domain = phi.domain().conjugate(j);
  auto const  jinv   = grp.inv(j);
  std::vector<elem_t> values;
  values.reserve(domain.order());
  for (auto x : domain.elements()) {
    values.push_back(phi.action()->apply(jinv, phi(grp.mul(grp.mul(j, x), jinv))));
  }
  return Cocycle(phi.action(), domain, std::move(values));
}

std::vector<std::size_t> invariant_classes(CohomologySet const& h) {
  auto const&              j = *h.action()->actor();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < h.size(); ++c) {
    auto const& phi       = h.representative(c);
    bool        invariant = true;
    for (elem_t g = 0; g < j.order() && invariant; ++g) {
      auto const conj = conjugate_cocycle(phi, g);
      auto const meet = intersection(h.domain(), conj.domain());
      invariant       = cohomologous(restrict(phi, meet), restrict(conj, meet)).has_value();
    }
    if (invariant) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::size_t> fixed_classes(CohomologySet const& h, Subgroup const& s) {
  for (auto x : s.elements()) {
    if (!(h.domain().conjugate(x) == h.domain())) {
      throw Error(Errc::NotNormalized, "element " + std::to_string(x)
                                           + " does not normalize the cocycle domain");
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < h.size(); ++c) {
    auto const& phi   = h.representative(c);
    bool        fixed = std::all_of(s.elements().begin(), s.elements().end(), [&](elem_t x) {
      auto conj = conjugate_cocycle(phi, x);
      return h.class_of(Cocycle(phi.action(), h.domain(), conj.values())) == c;
    });
    if (fixed) {
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::uint64_t> shared_primes(ActionOnGroup const& action) {
  std::vector<std::uint64_t> out;
  auto const                 n = action.target()->order();
  for (auto p : prime_divisors(action.actor()->order())) {
    if (n % p == 0) {
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace nilcoh
