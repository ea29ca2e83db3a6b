#include "nilcoh/actions.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>

namespace nilcoh {

void require_automorphism(Group const& n, std::span<elem_t const> perm) {
  if (perm.size() != n.order()) {
    throw Error(Errc::NotAutomorphism, "permutation has the wrong length");
  }
  std::vector<char> seen(n.order(), 0);
  for (auto v : perm) {
    if (v >= n.order() || seen[v]) {
      throw Error(Errc::NotAutomorphism, "map is not a bijection");
    }
    seen[v] = 1;
  }
  for (elem_t a = 0; a < n.order(); ++a) {
    for (elem_t b = 0; b < n.order(); ++b) {
      if (perm[n.mul(a, b)] != n.mul(perm[a], perm[b])) {
        throw Error(Errc::NotAutomorphism, "f(ab) != f(a)f(b) at (" + std::to_string(a) + ", "
                                               + std::to_string(b) + ")");
      }
    }
  }
}

ActionPtr ActionOnGroup::make(GroupPtr actor, GroupPtr target,
                              std::vector<std::vector<elem_t>> autos) {
  auto const& j = *actor;
  auto const& n = *target;
  if (autos.size() != j.order()) {
    throw Error(Errc::InvalidArgument, "need one automorphism per acting element");
  }
  std::vector<elem_t> flat;
  flat.reserve(j.order() * n.order());
  for (auto const& a : autos) {
    require_automorphism(n, a);
    flat.insert(flat.end(), a.begin(), a.end());
  }
  for (elem_t x = 0; x < n.order(); ++x) {
    if (autos[Group::identity][x] != x) {
      throw Error(Errc::NotAHomomorphism, "identity does not act trivially");
    }
  }
  for (elem_t a = 0; a < j.order(); ++a) {
    for (elem_t b = 0; b < j.order(); ++b) {
      auto const& ab = autos[j.mul(a, b)];
      for (elem_t x = 0; x < n.order(); ++x) {
        if (ab[x] != autos[a][autos[b][x]]) {
          throw Error(Errc::NotAHomomorphism, "action of " + std::to_string(j.mul(a, b))
                                                  + " is not the composite of "
                                                  + std::to_string(a) + " and "
                                                  + std::to_string(b));
        }
      }
    }
  }
  return ActionPtr(new ActionOnGroup(std::move(actor), std::move(target), std::move(flat)));
}

ActionPtr ActionOnGroup::from_generator_images(GroupPtr actor, GroupPtr target,
                                               std::vector<elem_t> const&              gens,
                                               std::vector<std::vector<elem_t>> const& images) {
  auto const& j = *actor;
  auto const& n = *target;
  if (gens.size() != images.size()) {
    throw Error(Errc::InvalidArgument, "gens and images differ in length");
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] >= j.order()) {
      throw Error(Errc::InvalidArgument, "generator index out of range");
    }
    require_automorphism(n, images[i]);
  }
  std::vector<std::optional<std::vector<elem_t>>> autos(j.order());
  std::vector<elem_t>                             id(n.order());
  for (elem_t x = 0; x < n.order(); ++x) {
    id[x] = x;
  }
  autos[Group::identity] = id;
  std::deque<elem_t> queue{Group::identity};
  while (!queue.empty()) {
    auto const x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto const          y = j.mul(x, gens[i]);
      std::vector<elem_t> candidate(n.order());
      for (elem_t v = 0; v < n.order(); ++v) {
        candidate[v] = (*autos[x])[images[i][v]];
      }
      if (!autos[y]) {
        autos[y] = std::move(candidate);
        queue.push_back(y);
      } else if (*autos[y] != candidate) {
        throw Error(Errc::NotAHomomorphism,
                    "generator images violate a relation of the acting group at element "
                        + std::to_string(y));
      }
    }
  }
  std::vector<elem_t> flat;
  flat.reserve(j.order() * n.order());
  for (elem_t x = 0; x < j.order(); ++x) {
    if (!autos[x]) {
      throw Error(Errc::DoesNotGenerate, "element " + std::to_string(x) + " is not reached");
    }
    flat.insert(flat.end(), autos[x]->begin(), autos[x]->end());
  }
  return ActionPtr(new ActionOnGroup(std::move(actor), std::move(target), std::move(flat)));
}

ActionPtr ActionOnGroup::trivial(GroupPtr actor, GroupPtr target) {
  std::vector<elem_t> flat(actor->order() * target->order());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    flat[i] = static_cast<elem_t>(i % target->order());
  }
  return ActionPtr(new ActionOnGroup(std::move(actor), std::move(target), std::move(flat)));
}

bool ActionOnGroup::is_trivial() const {
  auto const k = target_->order();
  for (std::size_t i = 0; i < autos_.size(); ++i) {
    if (autos_[i] != i % k) {
      return false;
    }
  }
  return true;
}

ConjugationAction conjugation_action(Subgroup const& n, Subgroup const& j) {
  if (n.parent() != j.parent()) {
    throw Error(Errc::InvalidArgument, "subgroups of different groups");
  }
  auto const& g = n.group();
  for (auto x : j.elements()) {
    for (auto y : n.elements()) {
      if (!n.contains(g.mul(g.mul(x, y), g.inv(x)))) {
        throw Error(Errc::NotNormalized, "element " + std::to_string(x)
                                             + " does not normalize the target subgroup");
      }
    }
  }
  auto actor  = as_group(j);
  auto target = as_group(n);
  std::vector<elem_t> flat;
  flat.reserve(j.order() * n.order());
  for (auto x : j.elements()) {
    for (auto y : n.elements()) {
      flat.push_back(static_cast<elem_t>(n.position(g.mul(g.mul(x, y), g.inv(x)))));
    }
  }
  std::vector<std::vector<elem_t>> autos(j.order());
  for (std::size_t a = 0; a < j.order(); ++a) {
    autos[a].assign(flat.begin() + a * n.order(), flat.begin() + (a + 1) * n.order());
  }
  return ConjugationAction{ActionOnGroup::make(actor.group, target.group, std::move(autos)),
                           std::move(actor), std::move(target)};
}

RestrictedAction restrict_target(ActionPtr const& action, Subgroup const& m) {
  if (m.parent() != action->target()) {
    throw Error(Errc::InvalidArgument, "subgroup is not in the target group");
  }
  auto const& j = *action->actor();
  for (elem_t a = 0; a < j.order(); ++a) {
    for (auto x : m.elements()) {
      if (!m.contains(action->apply(a, x))) {
        throw Error(Errc::NotNormalized, "subgroup is not invariant under element "
                                             + std::to_string(a));
      }
    }
  }
  auto                             sub = as_group(m);
  std::vector<std::vector<elem_t>> autos(j.order());
  for (elem_t a = 0; a < j.order(); ++a) {
    for (auto x : m.elements()) {
      autos[a].push_back(static_cast<elem_t>(m.position(action->apply(a, x))));
    }
  }
  return RestrictedAction{ActionOnGroup::make(action->actor(), sub.group, std::move(autos)),
                          std::move(sub.embedding)};
}

SemidirectProduct semidirect(ActionPtr action, Limits const& limits) {
  auto const& n     = *action->target();
  auto const& j     = *action->actor();
  auto const  order = n.order() * j.order();
  if (order > limits.order_cap) {
    throw Error(Errc::OrderCapExceeded, "semidirect product of order " + std::to_string(order)
                                            + " exceeds cap " + std::to_string(limits.order_cap));
  }
  auto const k = n.order();
  Table      t(order, std::vector<elem_t>(order));
  for (elem_t g1 = 0; g1 < order; ++g1) {
    auto const n1 = g1 % k, j1 = g1 / k;
    for (elem_t g2 = 0; g2 < order; ++g2) {
      auto const n2 = g2 % k, j2 = g2 / k;
      t[g1][g2] = static_cast<elem_t>(n.mul(static_cast<elem_t>(n1),
                                            action->apply(static_cast<elem_t>(j1),
                                                          static_cast<elem_t>(n2)))
                                      + k * j.mul(static_cast<elem_t>(j1), static_cast<elem_t>(j2)));
    }
  }
  std::vector<std::string> names;
  if (n.has_names() || j.has_names()) {
    for (elem_t g = 0; g < order; ++g) {
      names.push_back("(" + n.name(static_cast<elem_t>(g % k)) + ","
                      + j.name(static_cast<elem_t>(g / k)) + ")");
    }
  }
  auto group = Group::from_table(t, std::move(names), limits.order_cap);

  std::vector<elem_t> in_n(k), in_j(j.order()), out_j(order);
  for (elem_t x = 0; x < k; ++x) {
    in_n[x] = x;
  }
  for (elem_t x = 0; x < j.order(); ++x) {
    in_j[x] = static_cast<elem_t>(k * x);
  }
  for (elem_t g = 0; g < order; ++g) {
    out_j[g] = static_cast<elem_t>(g / k);
  }
  auto embed_n   = GroupHom::make(action->target(), group, std::move(in_n));
  auto embed_j   = GroupHom::make(action->actor(), group, std::move(in_j));
  auto project_j = GroupHom::make(group, action->actor(), std::move(out_j));
  return SemidirectProduct{std::move(action), std::move(group), std::move(embed_n),
                           std::move(embed_j), std::move(project_j)};
}

////////////////////////////////////////////////////////////////////////
// G-sets
////////////////////////////////////////////////////////////////////////

GSet GSet::make(GroupPtr group, std::size_t size, std::vector<std::vector<std::uint32_t>> table) {
  auto const& g = *group;
  if (table.size() != g.order()) {
    throw Error(Errc::InvalidArgument, "G-set table needs one row per group element");
  }
  std::vector<std::uint32_t> flat;
  flat.reserve(g.order() * size);
  for (auto const& row : table) {
    if (row.size() != size) {
      throw Error(Errc::InvalidArgument, "G-set row has the wrong length");
    }
    std::vector<char> seen(size, 0);
    for (auto v : row) {
      if (v >= size || seen[v]) {
        throw Error(Errc::InvalidArgument, "G-set row is not a permutation");
      }
      seen[v] = 1;
    }
    flat.insert(flat.end(), row.begin(), row.end());
  }
  for (std::uint32_t x = 0; x < size; ++x) {
    if (table[Group::identity][x] != x) {
      throw Error(Errc::NotAHomomorphism, "identity moves point " + std::to_string(x));
    }
  }
  for (elem_t a = 0; a < g.order(); ++a) {
    for (elem_t b = 0; b < g.order(); ++b) {
      auto const& ab = table[g.mul(a, b)];
      for (std::uint32_t x = 0; x < size; ++x) {
        if (ab[x] != table[a][table[b][x]]) {
          throw Error(Errc::NotAHomomorphism, "(ab).x != a.(b.x) for (a, b, x) = ("
                                                  + std::to_string(a) + ", " + std::to_string(b)
                                                  + ", " + std::to_string(x) + ")");
        }
      }
    }
  }
  return GSet(std::move(group), size, std::move(flat));
}

GSet coset_gset(Subgroup const& h) {
  auto const&                g = h.group();
  std::vector<std::uint32_t> point(g.order(), static_cast<std::uint32_t>(g.order()));
  std::vector<elem_t>        reps;
  for (elem_t x = 0; x < g.order(); ++x) {
    if (point[x] != g.order()) {
      continue;
    }
    for (auto y : h.elements()) {
      point[g.mul(x, y)] = static_cast<std::uint32_t>(reps.size());
    }
    reps.push_back(x);
  }
  std::vector<std::uint32_t> flat(g.order() * reps.size());
  for (elem_t a = 0; a < g.order(); ++a) {
    for (std::size_t c = 0; c < reps.size(); ++c) {
      flat[a * reps.size() + c] = point[g.mul(a, reps[c])];
    }
  }
  return GSet(h.parent(), reps.size(), std::move(flat));
}

std::vector<std::uint32_t> orbit(GSet const& omega, Subgroup const& s, std::uint32_t x) {
  std::vector<char>          seen(omega.size(), 0);
  std::vector<std::uint32_t> out{x};
  seen[x] = 1;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (auto g : s.elements()) {
      auto y = omega.act(g, out[head]);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(GSet const& omega, Subgroup const& s) {
  return omega.size() > 0 && orbit(omega, s, 0).size() == omega.size();
}

std::vector<std::uint32_t> fixed_points(GSet const& omega, Subgroup const& s) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < omega.size(); ++x) {
    bool fixed = std::all_of(s.elements().begin(), s.elements().end(),
                             [&](elem_t g) { return omega.act(g, x) == x; });
    if (fixed) {
      out.push_back(x);
    }
  }
  return out;
}

Subgroup stabilizer(GSet const& omega, std::uint32_t x) {
  if (x >= omega.size()) {
    throw Error(Errc::InvalidArgument, "point out of range");
  }
  std::vector<elem_t> out;
  for (elem_t g = 0; g < omega.group()->order(); ++g) {
    if (omega.act(g, x) == x) {
      out.push_back(g);
    }
  }
  return make_subgroup_unchecked(omega.group(), std::move(out));
}

}  // namespace nilcoh
