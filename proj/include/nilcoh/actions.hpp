#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "nilcoh/group.hpp"

namespace nilcoh {

class ActionOnGroup;
using ActionPtr = std::shared_ptr<ActionOnGroup const>;

// A homomorphism J -> Aut(N), stored as one permutation of N per element of
// J. Left action: apply(j, n) is the image of n under j, and
// apply(j j', n) = apply(j, apply(j', n)).
class ActionOnGroup {
 public:
  // Full validation of a table with one automorphism per element of J.
  static ActionPtr make(GroupPtr actor, GroupPtr target, std::vector<std::vector<elem_t>> autos);

  // Extends images of generators along the Cayley graph of J. Throws
  // NotAutomorphism, NotAHomomorphism (relations of J violated) or
  // DoesNotGenerate.
  static ActionPtr from_generator_images(GroupPtr actor, GroupPtr target,
                                         std::vector<elem_t> const&              gens,
                                         std::vector<std::vector<elem_t>> const& images);

  static ActionPtr trivial(GroupPtr actor, GroupPtr target);

  GroupPtr const& actor() const noexcept { return actor_; }
  GroupPtr const& target() const noexcept { return target_; }

  elem_t apply(elem_t j, elem_t n) const { return autos_[j * target_->order() + n]; }
  std::span<elem_t const> automorphism(elem_t j) const {
    return {autos_.data() + j * target_->order(), target_->order()};
  }

  bool is_trivial() const;

 private:
  ActionOnGroup(GroupPtr actor, GroupPtr target, std::vector<elem_t> autos)
      : actor_(std::move(actor)), target_(std::move(target)), autos_(std::move(autos)) {}

  GroupPtr            actor_;
  GroupPtr            target_;
  std::vector<elem_t> autos_;
};

// Throws NotAutomorphism naming the failing pair.
void require_automorphism(Group const& n, std::span<elem_t const> perm);

// Conjugation action of J on N inside a common parent, on the standalone
// groups as_group(J) and as_group(N): j acts by n -> j n j^-1.
// Throws NotNormalized.
struct ConjugationAction {
  ActionPtr       action;
  SubgroupAsGroup actor;
  SubgroupAsGroup target;
};
ConjugationAction conjugation_action(Subgroup const& n, Subgroup const& j);

// The same action with the target cut down to a J-invariant subgroup M of N.
// Throws NotNormalized if M is not invariant.
struct RestrictedAction {
  ActionPtr action;
  GroupHom  inclusion;  // as_group(M) -> N
};
RestrictedAction restrict_target(ActionPtr const& action, Subgroup const& m);

// N x| J on pairs (n, j) with (n1, j1)(n2, j2) = (n1 * j1(n2), j1 j2). The
// pair (n, j) has index n + |N| * j.
struct SemidirectProduct {
  ActionPtr action;
  GroupPtr  group;
  GroupHom  embed_n;
  GroupHom  embed_j;
  GroupHom  project_j;

  elem_t element(elem_t n, elem_t j) const {
    return static_cast<elem_t>(n + action->target()->order() * j);
  }
  std::pair<elem_t, elem_t> components(elem_t g) const {
    auto const k = action->target()->order();
    return {static_cast<elem_t>(g % k), static_cast<elem_t>(g / k)};
  }
  Subgroup normal() const { return embed_n.image(); }
  Subgroup complement() const { return embed_j.image(); }
  // Image of a subgroup of J.
  Subgroup lift(Subgroup const& k) const { return embed_j.image(k); }
};

// Throws OrderCapExceeded.
SemidirectProduct semidirect(ActionPtr action, Limits const& limits = {});

// A finite G-set: act(g, x) is a left action on points 0..size-1.
class GSet {
 public:
  // Throws NotAHomomorphism (or InvalidArgument for malformed tables).
  static GSet make(GroupPtr group, std::size_t size, std::vector<std::vector<std::uint32_t>> table);

  GroupPtr const& group() const noexcept { return group_; }
  std::size_t     size() const noexcept { return size_; }
  std::uint32_t   act(elem_t g, std::uint32_t x) const { return table_[g * size_ + x]; }

 private:
  GSet(GroupPtr g, std::size_t size, std::vector<std::uint32_t> table)
      : group_(std::move(g)), size_(size), table_(std::move(table)) {}

  GroupPtr                   group_;
  std::size_t                size_;
  std::vector<std::uint32_t> table_;

  friend GSet coset_gset(Subgroup const& h);
};

// Left cosets gH under left multiplication. Point 0 is H itself; other points
// are ordered by their least element.
GSet coset_gset(Subgroup const& h);

std::vector<std::uint32_t> orbit(GSet const& omega, Subgroup const& s, std::uint32_t x);
bool                       is_transitive(GSet const& omega, Subgroup const& s);
std::vector<std::uint32_t> fixed_points(GSet const& omega, Subgroup const& s);
Subgroup                   stabilizer(GSet const& omega, std::uint32_t x);

}  // namespace nilcoh
