#include "nilcoh/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace nilcoh {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::NotAHomomorphism: return "NotAHomomorphism";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotAutomorphism: return "NotAutomorphism";
    case Errc::DoesNotGenerate: return "DoesNotGenerate";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::NotACocycle: return "NotACocycle";
    case Errc::NotAComplement: return "NotAComplement";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::NoPreimageFound: return "NoPreimageFound";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::NoConjugatorFound: return "NoConjugatorFound";
    case Errc::NoFixedPoint: return "NoFixedPoint";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnknownCheck: return "UnknownCheck";
  }
  return "Unknown";
}

namespace {

  std::string triple(std::size_t a, std::size_t b, std::size_t c) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
  }

  // Light's associativity test: if (x g) y = x (g y) for every g in a set that
  // generates the table as a magma, the operation is associative. Returns a
  // witness triple on failure.
  std::optional<std::array<std::size_t, 3>> light_test(std::size_t                n,
                                                       std::vector<elem_t> const& t) {
    auto mul = [&](std::size_t a, std::size_t b) -> std::size_t { return t[a * n + b]; };

    std::vector<std::size_t> gens;
    std::vector<char>        reached(n, 0);
    std::size_t              count = 0;
    for (std::size_t next = 0; count < n;) {
      while (reached[next]) {
        ++next;
      }
      gens.push_back(next);
      std::fill(reached.begin(), reached.end(), 0);
      std::deque<std::size_t> queue(gens.begin(), gens.end());
      count = 0;
      for (auto g : gens) {
        if (!reached[g]) {
          reached[g] = 1;
          ++count;
        }
      }
      while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto g : gens) {
          auto y = mul(x, g);
          if (!reached[y]) {
            reached[y] = 1;
            ++count;
            queue.push_back(y);
          }
        }
      }
      next = 0;
    }
    for (auto g : gens) {
      for (std::size_t x = 0; x < n; ++x) {
        auto xg = mul(x, g);
        for (std::size_t y = 0; y < n; ++y) {
          if (mul(xg, y) != mul(x, mul(g, y))) {
            return std::array<std::size_t, 3>{x, g, y};
          }
        }
      }
    }
    return std::nullopt;
  }

  struct PermHash {
    std::size_t operator()(Permutation const& p) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto v : p) {
        h = (h ^ v) * 1099511628211ULL;
      }
      return h;
    }
  };

}  // namespace

////////////////////////////////////////////////////////////////////////
// Group
////////////////////////////////////////////////////////////////////////

Group::Group(std::size_t n, std::vector<elem_t> table, std::vector<std::string> names)
    : n_(n), table_(std::move(table)), inv_(n), orders_(n), names_(std::move(names)) {
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      if (table_[a * n_ + b] == identity) {
        inv_[a] = static_cast<elem_t>(b);
        break;
      }
    }
    std::size_t k = 1;
    elem_t      x = static_cast<elem_t>(a);
    while (x != identity) {
      x = mul(x, static_cast<elem_t>(a));
      ++k;
    }
    orders_[a] = k;
  }
  for (std::size_t a = 0; a < n_ && abelian_; ++a) {
    for (std::size_t b = a + 1; b < n_; ++b) {
      if (table_[a * n_ + b] != table_[b * n_ + a]) {
        abelian_ = false;
        break;
      }
    }
  }
}

GroupPtr Group::from_table(Table const& table, std::vector<std::string> names,
                           std::size_t order_cap) {
  std::size_t const n = table.size();
  if (n == 0) {
    throw Error(Errc::InvalidArgument, "empty multiplication table");
  }
  if (n > order_cap) {
    throw Error(Errc::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
  }
  if (!names.empty() && names.size() != n) {
    throw Error(Errc::InvalidArgument, "element_names has the wrong length");
  }
  std::vector<elem_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw Error(Errc::InvalidArgument, "row " + std::to_string(a) + " is not of length n");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) {
        throw Error(Errc::InvalidArgument, "entry (" + std::to_string(a) + ", "
                                               + std::to_string(b) + ") out of range");
      }
      flat[a * n + b] = table[a][b];
    }
  }

  std::optional<std::size_t> e;
  for (std::size_t c = 0; c < n && !e; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = flat[c * n + x] == x && flat[x * n + c] == x;
    }
    if (ok) {
      e = c;
    }
  }
  if (!e) {
    throw Error(Errc::NoIdentity, "no two-sided identity element");
  }

  // Relabel so that the identity is element 0.
  if (*e != 0) {
    std::vector<std::size_t> relabel(n);
    for (std::size_t i = 0; i < n; ++i) {
      relabel[i] = i;
    }
    std::swap(relabel[0], relabel[*e]);
    std::vector<elem_t> swapped(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        swapped[relabel[a] * n + relabel[b]] =
            static_cast<elem_t>(relabel[flat[a * n + b]]);
      }
    }
    flat = std::move(swapped);
    if (!names.empty()) {
      std::swap(names[0], names[*e]);
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      found = flat[a * n + b] == 0 && flat[b * n + a] == 0;
    }
    if (!found) {
      throw Error(Errc::NoInverse, "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  if (auto w = light_test(n, flat)) {
    auto [x, g, y] = *w;
    throw Error(Errc::NotAssociative, "(ab)c != a(bc) for (a, b, c) = " + triple(x, g, y));
  }

  return GroupPtr(new Group(n, std::move(flat), std::move(names)));
}

GroupPtr Group::from_permutations(std::vector<Permutation> const& generators,
                                  std::size_t degree, std::size_t order_cap) {
  for (auto const& g : generators) {
    if (g.size() != degree) {
      throw Error(Errc::InvalidArgument, "generator has wrong degree");
    }
    std::vector<char> seen(degree, 0);
    for (auto v : g) {
      if (v >= degree || seen[v]) {
        throw Error(Errc::InvalidArgument, "generator is not a permutation");
      }
      seen[v] = 1;
    }
  }
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    id[i] = static_cast<std::uint32_t>(i);
  }
  auto compose = [degree](Permutation const& a, Permutation const& b) {
    Permutation c(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      c[i] = b[a[i]];
    }
    return c;
  };

  std::vector<Permutation>                                      elements{id};
  std::unordered_map<Permutation, std::size_t, PermHash>        index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (auto const& g : generators) {
      auto p = compose(elements[head], g);
      if (index.emplace(p, elements.size()).second) {
        elements.push_back(std::move(p));
        if (elements.size() > order_cap) {
          throw Error(Errc::OrderCapExceeded,
                      "closure exceeds order cap " + std::to_string(order_cap));
        }
      }
    }
  }
  std::size_t const n = elements.size();
  Table             table(n, std::vector<elem_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = static_cast<elem_t>(index.at(compose(elements[a], elements[b])));
    }
  }
  return from_table(table, {}, order_cap);
}

elem_t Group::pow(elem_t a, std::int64_t k) const {
  auto const m = static_cast<std::int64_t>(orders_[a]);
  k %= m;
  if (k < 0) {
    k += m;
  }
  elem_t x = identity;
  for (std::int64_t i = 0; i < k; ++i) {
    x = mul(x, a);
  }
  return x;
}

std::string Group::name(elem_t a) const {
  if (names_.empty()) {
    return std::to_string(a);
  }
  return names_[a];
}

Table Group::table() const {
  Table t(n_, std::vector<elem_t>(n_));
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      t[a][b] = table_[a * n_ + b];
    }
  }
  return t;
}

////////////////////////////////////////////////////////////////////////
// Subgroup
////////////////////////////////////////////////////////////////////////

Subgroup make_subgroup_unchecked(GroupPtr parent, std::vector<elem_t> sorted_elements) {
  Subgroup::Data data;
  data.position.assign(parent->order(), -1);
  for (std::size_t i = 0; i < sorted_elements.size(); ++i) {
    data.position[sorted_elements[i]] = static_cast<std::int32_t>(i);
  }
  data.parent   = std::move(parent);
  data.elements = std::move(sorted_elements);
  return Subgroup(std::make_shared<Subgroup::Data const>(std::move(data)));
}

Subgroup Subgroup::from_elements(GroupPtr parent, std::vector<elem_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto const& g = *parent;
  if (elements.empty() || elements.front() != Group::identity) {
    throw Error(Errc::NotASubgroup, "subset does not contain the identity");
  }
  if (elements.back() >= g.order()) {
    throw Error(Errc::NotASubgroup, "element index out of range");
  }
  std::vector<char> member(g.order(), 0);
  for (auto x : elements) {
    member[x] = 1;
  }
  for (auto x : elements) {
    if (!member[g.inv(x)]) {
      throw Error(Errc::NotASubgroup, "not closed under inverse at " + std::to_string(x));
    }
    for (auto y : elements) {
      if (!member[g.mul(x, y)]) {
        throw Error(Errc::NotASubgroup, "not closed under product of " + std::to_string(x)
                                            + " and " + std::to_string(y));
      }
    }
  }
  if (g.order() % elements.size() != 0) {
    throw Error(Errc::NotASubgroup, "order does not divide the parent order");
  }
  return make_subgroup_unchecked(std::move(parent), std::move(elements));
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<elem_t const> seeds) {
  auto const& g = *parent;
  for (auto s : seeds) {
    if (s >= g.order()) {
      throw Error(Errc::InvalidArgument, "seed index out of range");
    }
  }
  std::vector<char>   member(g.order(), 0);
  std::vector<elem_t> elements{Group::identity};
  member[Group::identity] = 1;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (auto s : seeds) {
      auto y = g.mul(elements[head], s);
      if (!member[y]) {
        member[y] = 1;
        elements.push_back(y);
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return make_subgroup_unchecked(std::move(parent), std::move(elements));
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<elem_t> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = static_cast<elem_t>(i);
  }
  return make_subgroup_unchecked(std::move(parent), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return make_subgroup_unchecked(std::move(parent), {Group::identity});
}

bool Subgroup::is_subset_of(Subgroup const& other) const {
  return std::all_of(elements().begin(), elements().end(),
                     [&](elem_t x) { return other.contains(x); });
}

Subgroup Subgroup::conjugate(elem_t by) const {
  std::vector<elem_t> out;
  out.reserve(order());
  for (auto x : elements()) {
    out.push_back(group().conj(x, by));
  }
  std::sort(out.begin(), out.end());
  return make_subgroup_unchecked(parent(), std::move(out));
}

bool Subgroup::operator==(Subgroup const& other) const {
  return parent() == other.parent() && data_->elements == other.data_->elements;
}

////////////////////////////////////////////////////////////////////////
// GroupHom
////////////////////////////////////////////////////////////////////////

GroupHom GroupHom::make(GroupPtr source, GroupPtr target, std::vector<elem_t> images) {
  if (images.size() != source->order()) {
    throw Error(Errc::NotAHomomorphism, "image table has the wrong length");
  }
  for (auto y : images) {
    if (y >= target->order()) {
      throw Error(Errc::NotAHomomorphism, "image index out of range");
    }
  }
  auto const& s = *source;
  auto const& t = *target;
  for (elem_t x = 0; x < s.order(); ++x) {
    for (elem_t y = 0; y < s.order(); ++y) {
      if (images[s.mul(x, y)] != t.mul(images[x], images[y])) {
        throw Error(Errc::NotAHomomorphism, "f(xy) != f(x)f(y) at (" + std::to_string(x) + ", "
                                                + std::to_string(y) + ")");
      }
    }
  }
  return GroupHom{std::move(source), std::move(target), std::move(images)};
}

Subgroup GroupHom::kernel() const {
  std::vector<elem_t> k;
  for (elem_t x = 0; x < source->order(); ++x) {
    if (images[x] == Group::identity) {
      k.push_back(x);
    }
  }
  return make_subgroup_unchecked(source, std::move(k));
}

Subgroup GroupHom::image() const {
  return image(Subgroup::whole(source));
}

Subgroup GroupHom::image(Subgroup const& h) const {
  std::vector<elem_t> out;
  for (auto x : h.elements()) {
    out.push_back(images[x]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return make_subgroup_unchecked(target, std::move(out));
}

Subgroup GroupHom::preimage(Subgroup const& h) const {
  std::vector<elem_t> out;
  for (elem_t x = 0; x < source->order(); ++x) {
    if (h.contains(images[x])) {
      out.push_back(x);
    }
  }
  return make_subgroup_unchecked(source, std::move(out));
}

////////////////////////////////////////////////////////////////////////
// Constructions and scans
////////////////////////////////////////////////////////////////////////

SubgroupAsGroup as_group(Subgroup const& h) {
  auto const& g    = h.group();
  auto const  elts = h.elements();
  Table       t(elts.size(), std::vector<elem_t>(elts.size()));
  for (std::size_t i = 0; i < elts.size(); ++i) {
    for (std::size_t j = 0; j < elts.size(); ++j) {
      t[i][j] = static_cast<elem_t>(h.position(g.mul(elts[i], elts[j])));
    }
  }
  std::vector<std::string> names;
  if (g.has_names()) {
    for (auto x : elts) {
      names.push_back(g.name(x));
    }
  }
  auto sub = Group::from_table(t, std::move(names), g.order());
  return SubgroupAsGroup{sub,
                         GroupHom{sub, h.parent(), std::vector<elem_t>(elts.begin(), elts.end())}};
}

Subgroup intersection(Subgroup const& a, Subgroup const& b) {
  std::vector<elem_t> out;
  for (auto x : a.elements()) {
    if (b.contains(x)) {
      out.push_back(x);
    }
  }
  return make_subgroup_unchecked(a.parent(), std::move(out));
}

Subgroup join(Subgroup const& a, Subgroup const& b) {
  std::vector<elem_t> seeds(a.elements().begin(), a.elements().end());
  seeds.insert(seeds.end(), b.elements().begin(), b.elements().end());
  return Subgroup::generated(a.parent(), seeds);
}

std::vector<elem_t> product_set(Subgroup const& a, Subgroup const& b) {
  auto const&       g = a.group();
  std::vector<char> member(g.order(), 0);
  for (auto x : a.elements()) {
    for (auto y : b.elements()) {
      member[g.mul(x, y)] = 1;
    }
  }
  std::vector<elem_t> out;
  for (elem_t x = 0; x < g.order(); ++x) {
    if (member[x]) {
      out.push_back(x);
    }
  }
  return out;
}

Subgroup centralizer(Subgroup const& ambient, Subgroup const& x) {
  auto const&         g = ambient.group();
  std::vector<elem_t> out;
  for (auto c : ambient.elements()) {
    bool ok = std::all_of(x.elements().begin(), x.elements().end(),
                          [&](elem_t y) { return g.mul(c, y) == g.mul(y, c); });
    if (ok) {
      out.push_back(c);
    }
  }
  return make_subgroup_unchecked(ambient.parent(), std::move(out));
}

Subgroup normalizer(Subgroup const& ambient, Subgroup const& x) {
  auto const&         g = ambient.group();
  std::vector<elem_t> out;
  for (auto c : ambient.elements()) {
    bool ok = std::all_of(x.elements().begin(), x.elements().end(),
                          [&](elem_t y) { return x.contains(g.conj(y, c)); });
    if (ok) {
      out.push_back(c);
    }
  }
  return make_subgroup_unchecked(ambient.parent(), std::move(out));
}

Subgroup centralizer(GroupPtr const& g, Subgroup const& x) {
  return centralizer(Subgroup::whole(g), x);
}

Subgroup normalizer(GroupPtr const& g, Subgroup const& x) {
  return normalizer(Subgroup::whole(g), x);
}

Subgroup center(Subgroup const& h) {
  return centralizer(h, h);
}

Subgroup center(GroupPtr const& g) {
  return center(Subgroup::whole(g));
}

Subgroup commutator_subgroup(Subgroup const& a, Subgroup const& b) {
  auto const&         g = a.group();
  std::vector<char>   seen(g.order(), 0);
  std::vector<elem_t> seeds;
  for (auto x : a.elements()) {
    for (auto y : b.elements()) {
      auto c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  }
  return Subgroup::generated(a.parent(), seeds);
}

bool is_normal(Subgroup const& ambient, Subgroup const& n) {
  auto const& g = ambient.group();
  for (auto c : ambient.elements()) {
    for (auto y : n.elements()) {
      if (!n.contains(g.conj(y, c))) {
        return false;
      }
    }
  }
  return true;
}

bool is_normal(Subgroup const& n) {
  return is_normal(Subgroup::whole(n.parent()), n);
}

Quotient quotient(Subgroup const& n) {
  if (!is_normal(n)) {
    throw Error(Errc::NotNormal, "subgroup is not normal");
  }
  auto const&              g = n.group();
  std::vector<std::size_t> coset(g.order(), g.order());
  std::vector<elem_t>      reps;
  for (elem_t x = 0; x < g.order(); ++x) {
    if (coset[x] != g.order()) {
      continue;
    }
    // x is the least element of its coset since we scan in ascending order
    for (auto y : n.elements()) {
      coset[g.mul(x, y)] = reps.size();
    }
    reps.push_back(x);
  }
  Table t(reps.size(), std::vector<elem_t>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      t[i][j] = static_cast<elem_t>(coset[g.mul(reps[i], reps[j])]);
    }
  }
  std::vector<std::string> names;
  if (g.has_names()) {
    for (auto r : reps) {
      names.push_back(g.name(r) + "N");
    }
  }
  auto                q = Group::from_table(t, std::move(names), g.order());
  std::vector<elem_t> images(g.order());
  for (elem_t x = 0; x < g.order(); ++x) {
    images[x] = static_cast<elem_t>(coset[x]);
  }
  return Quotient{q, GroupHom{n.parent(), q, std::move(images)}, std::move(reps)};
}

std::optional<elem_t> conjugate_into(Subgroup const& h, Subgroup const& k) {
  if (k.order() % h.order() != 0) {
    return std::nullopt;
  }
  auto const& g = h.group();
  for (elem_t c = 0; c < g.order(); ++c) {
    bool ok = std::all_of(h.elements().begin(), h.elements().end(),
                          [&](elem_t y) { return k.contains(g.conj(y, c)); });
    if (ok) {
      return c;
    }
  }
  return std::nullopt;
}

std::optional<elem_t> are_conjugate_subgroups(Subgroup const& h, Subgroup const& k) {
  if (h.parent() != k.parent()) {
    throw Error(Errc::InvalidArgument, "subgroups of different groups");
  }
  if (h.order() != k.order()) {
    return std::nullopt;
  }
  return conjugate_into(h, k);
}

}  // namespace nilcoh
