#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilcoh/error.hpp"

namespace nilcoh {

class Group;
using GroupPtr = std::shared_ptr<Group const>;
using Table = std::vector<std::vector<elem_t>>;
using Permutation = std::vector<std::uint32_t>;

// A finite group stored as a dense multiplication table. Element 0 is always
// the identity. Instances are immutable and shared through GroupPtr.
class Group {
 public:
  static constexpr elem_t identity = 0;

  // Validates the axioms; the identity element is relabelled to index 0 and
  // `names` (if given) are permuted along with it.
  static GroupPtr from_table(Table const&              table,
                             std::vector<std::string> names     = {},
                             std::size_t              order_cap = Limits{}.order_cap);

  // Closure of the generators under composition. Permutations are image
  // lists on {0, ..., degree-1}; the product a*b applies a first, then b.
  static GroupPtr from_permutations(std::vector<Permutation> const& generators,
                                    std::size_t                     degree,
                                    std::size_t order_cap = Limits{}.order_cap);

  std::size_t order() const noexcept { return n_; }

  elem_t mul(elem_t a, elem_t b) const { return table_[a * n_ + b]; }
  elem_t inv(elem_t a) const { return inv_[a]; }
  // by^-1 * g * by
  elem_t conj(elem_t g, elem_t by) const { return mul(mul(inv_[by], g), by); }
  // a^-1 b^-1 a b
  elem_t commutator(elem_t a, elem_t b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  elem_t pow(elem_t a, std::int64_t k) const;

  std::size_t element_order(elem_t a) const { return orders_[a]; }
  bool        is_abelian() const noexcept { return abelian_; }

  bool                            has_names() const noexcept { return !names_.empty(); }
  std::string                     name(elem_t a) const;
  std::vector<std::string> const& names() const noexcept { return names_; }

  Table table() const;

 private:
  Group(std::size_t n, std::vector<elem_t> table, std::vector<std::string> names);

  std::size_t              n_;
  std::vector<elem_t>      table_;
  std::vector<elem_t>      inv_;
  std::vector<std::size_t> orders_;
  std::vector<std::string> names_;
  bool                     abelian_ = true;
};

// A validated subgroup of a parent group. Cheap to copy: the element list and
// the membership index are shared immutable data.
class Subgroup {
 public:
  // Validates closure; throws NotASubgroup.
  static Subgroup from_elements(GroupPtr parent, std::vector<elem_t> elements);
  static Subgroup generated(GroupPtr parent, std::span<elem_t const> seeds);
  static Subgroup whole(GroupPtr parent);
  static Subgroup trivial(GroupPtr parent);

  GroupPtr const& parent() const noexcept { return data_->parent; }
  Group const&    group() const noexcept { return *data_->parent; }

  std::span<elem_t const> elements() const noexcept { return data_->elements; }
  std::size_t             order() const noexcept { return data_->elements.size(); }

  bool contains(elem_t x) const {
    return x < data_->position.size() && data_->position[x] >= 0;
  }
  // Position of x in elements(), which is the index used by per-element
  // tables such as cocycle values.
  std::size_t position(elem_t x) const { return static_cast<std::size_t>(data_->position[x]); }

  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == group().order(); }
  bool is_subset_of(Subgroup const& other) const;

  // by^-1 H by
  Subgroup conjugate(elem_t by) const;

  bool operator==(Subgroup const& other) const;

 private:
  struct Data {
    GroupPtr                  parent;
    std::vector<elem_t>       elements;
    std::vector<std::int32_t> position;
  };

  explicit Subgroup(std::shared_ptr<Data const> data) : data_(std::move(data)) {}

  std::shared_ptr<Data const> data_;

  friend Subgroup make_subgroup_unchecked(GroupPtr, std::vector<elem_t>);
};

// Internal fast path for code that has already established closure.
Subgroup make_subgroup_unchecked(GroupPtr parent, std::vector<elem_t> sorted_elements);

struct GroupHom {
  GroupPtr            source;
  GroupPtr            target;
  std::vector<elem_t> images;

  // Throws NotAHomomorphism.
  static GroupHom make(GroupPtr source, GroupPtr target, std::vector<elem_t> images);

  elem_t operator()(elem_t x) const { return images[x]; }

  Subgroup kernel() const;
  Subgroup image() const;
  Subgroup image(Subgroup const& h) const;
  Subgroup preimage(Subgroup const& h) const;
};

// Same group, presented as a standalone Group with its inclusion map.
struct SubgroupAsGroup {
  GroupPtr group;
  GroupHom embedding;
};
SubgroupAsGroup as_group(Subgroup const& h);

struct Quotient {
  GroupPtr            group;
  GroupHom            projection;
  std::vector<elem_t> representatives;  // least element of each coset
};

Subgroup            intersection(Subgroup const& a, Subgroup const& b);
Subgroup            join(Subgroup const& a, Subgroup const& b);
// The set {ab : a in A, b in B}, sorted. Not necessarily a subgroup.
std::vector<elem_t> product_set(Subgroup const& a, Subgroup const& b);

Subgroup center(GroupPtr const& g);
// Center of h as a subgroup of h's parent.
Subgroup center(Subgroup const& h);
Subgroup centralizer(Subgroup const& ambient, Subgroup const& x);
Subgroup normalizer(Subgroup const& ambient, Subgroup const& x);
Subgroup centralizer(GroupPtr const& g, Subgroup const& x);
Subgroup normalizer(GroupPtr const& g, Subgroup const& x);
// [A, B] = <a^-1 b^-1 a b>
Subgroup commutator_subgroup(Subgroup const& a, Subgroup const& b);

bool is_normal(Subgroup const& ambient, Subgroup const& n);
bool is_normal(Subgroup const& n);

// Throws NotNormal.
Quotient quotient(Subgroup const& n);

// Least g in the parent group with H^g = K, if any.
std::optional<elem_t> are_conjugate_subgroups(Subgroup const& h, Subgroup const& k);
// Least g with H^g contained in K, if any.
std::optional<elem_t> conjugate_into(Subgroup const& h, Subgroup const& k);

}  // namespace nilcoh
