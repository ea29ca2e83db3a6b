#include <algorithm>
#include <set>
#include <string>

#include "nilcoh/cohomology.hpp"
#include "nilcoh/structure.hpp"

namespace nilcoh {

namespace {

  void require_nilpotent(GroupPtr const& g, char const* what) {
    if (!is_nilpotent(g)) {
      throw Error(Errc::NotNilpotent, std::string(what) + " is not nilpotent");
    }
  }

  std::string join_indices(std::vector<std::size_t> const& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
  }

  // Class of the image of every cocycle of `from` under a coefficient map;
  // throws Inconsistent if two members of a class disagree.
  template <typename Map>
  std::vector<std::size_t> induced_class_map(CohomologySet const& from, CohomologySet const& to,
                                             Map&& coeff) {
    constexpr auto           none = ~std::size_t{0};
    std::vector<std::size_t> out(from.size(), none);
    for (std::size_t i = 0; i < from.cocycles().size(); ++i) {
      auto const&         phi = from.cocycles()[i];
      std::vector<elem_t> mapped;
      mapped.reserve(phi.values().size());
      for (auto v : phi.values()) {
        mapped.push_back(coeff(v));
      }
      auto img = to.find(mapped);
      if (!img) {
        throw Error(Errc::Inconsistent, "coefficient map does not send cocycles to cocycles");
      }
      auto const c = from.class_of_index(i);
      if (out[c] == none) {
        out[c] = *img;
      } else if (out[c] != *img) {
        throw Error(Errc::Inconsistent, "coefficient map is not well defined on classes");
      }
    }
    return out;
  }

  bool is_bijection(std::vector<std::size_t> const& map, std::size_t target_size) {
    std::set<std::size_t> image(map.begin(), map.end());
    return map.size() == target_size && image.size() == target_size;
  }

}  // namespace

PrimaryProjection project_to_primary(CohomologySet const& source, std::uint64_t q,
                                     Limits const& limits) {
  auto const& action = source.action();
  require_nilpotent(action->target(), "N");
  auto const& n       = *action->target();
  auto const  nq      = sylow_subgroup(action->target(), q, limits);
  auto        reduced = restrict_target(action, nq);

  std::vector<elem_t> images(n.order());
  for (elem_t x = 0; x < n.order(); ++x) {
    images[x] = static_cast<elem_t>(nq.position(primary_component(n, x, q)));
  }
  auto projection = GroupHom::make(action->target(), reduced.action->target(), std::move(images));
  auto target     = h1(reduced.action, source.domain(), limits);
  auto class_map  = induced_class_map(source, target, [&](elem_t v) { return projection(v); });
  return PrimaryProjection{q,
                           std::move(reduced.action),
                           std::move(reduced.inclusion),
                           std::move(projection),
                           std::move(target),
                           std::move(class_map)};
}

PrimaryProductReport primary_product_check(ActionPtr const& action, Limits const& limits) {
  PrimaryProductReport report;
  auto const           source = h1(action, limits);
  report.source_size          = source.size();
  report.primes               = prime_divisors(action->target()->order());
  report.non_shared_trivial   = true;

  std::vector<std::vector<std::size_t>> tuples(source.size());
  std::size_t                           product = 1;
  for (auto q : report.primes) {
    auto proj = project_to_primary(source, q, limits);
    report.factor_sizes.push_back(proj.target.size());
    product *= proj.target.size();
    for (std::size_t c = 0; c < source.size(); ++c) {
      tuples[c].push_back(proj.class_map[c]);
    }
    if (action->actor()->order() % q != 0 && proj.target.size() != 1) {
      report.non_shared_trivial = false;
      report.witness = "H^1(J, N_" + std::to_string(q) + ") has "
                       + std::to_string(proj.target.size()) + " classes for q not dividing |J|";
    }
  }
  std::set<std::vector<std::size_t>> distinct(tuples.begin(), tuples.end());
  report.bijective = distinct.size() == source.size() && product == source.size();
  if (!report.bijective && report.witness.empty()) {
    report.witness = std::to_string(source.size()) + " classes against a product of "
                     + std::to_string(product) + " with " + std::to_string(distinct.size())
                     + " distinct images";
  }
  return report;
}

InclusionReport include_coefficients(ActionPtr const& action, std::uint64_t q,
                                     Limits const& limits) {
  require_nilpotent(action->actor(), "J");
  require_nilpotent(action->target(), "N");
  auto const jq      = sylow_subgroup(action->actor(), q, limits);
  auto const hall    = hall_pprime(action->actor(), q);
  auto const nq      = sylow_subgroup(action->target(), q, limits);
  auto       reduced = restrict_target(action, nq);

  InclusionReport report{q, h1(reduced.action, jq, limits), h1(action, jq, limits), {}, false,
                         false};
  report.map = induced_class_map(report.small, report.big,
                                 [&](elem_t v) { return reduced.inclusion(v); });
  report.bijective = is_bijection(report.map, report.big.size());

  auto small_fixed = fixed_classes(report.small, hall);
  auto big_fixed   = fixed_classes(report.big, hall);
  report.fixed_preserved = true;
  for (std::size_t c = 0; c < report.small.size(); ++c) {
    bool a = std::binary_search(small_fixed.begin(), small_fixed.end(), c);
    bool b = std::binary_search(big_fixed.begin(), big_fixed.end(), report.map[c]);
    report.fixed_preserved = report.fixed_preserved && a == b;
  }
  return report;
}

DecompositionReport decomposition_map(ActionPtr const& action, Limits const& limits) {
  require_nilpotent(action->actor(), "J");
  require_nilpotent(action->target(), "N");
  DecompositionReport report{shared_primes(*action), h1(action, limits)};
  auto const&         source = report.source;

  report.invariant_is_fixed = true;
  for (auto p : report.shared_primes) {
    auto jp   = sylow_subgroup(action->actor(), p, limits);
    auto hall = hall_pprime(action->actor(), p);
    auto hp   = h1(action, jp, limits);
    auto fix  = fixed_classes(hp, hall);
    auto inv  = invariant_classes(hp);
    if (fix != inv) {
      report.invariant_is_fixed = false;
      if (report.witness.empty()) {
        report.witness = "p=" + std::to_string(p) + ": fixed " + join_indices(fix)
                         + " vs invariant " + join_indices(inv);
      }
    }
    report.target_size *= fix.size();
    report.factors.push_back(
        SylowFactor{p, std::move(jp), std::move(hall), std::move(hp), std::move(fix),
                    std::move(inv)});
  }

  // Raw restriction classes per cocycle, then per class.
  report.well_defined   = true;
  report.lands_in_fixed = true;
  std::vector<std::vector<std::size_t>> raw(source.size());
  std::vector<char>                     seen(source.size(), 0);
  for (std::size_t i = 0; i < source.cocycles().size(); ++i) {
    auto const&              phi = source.cocycles()[i];
    std::vector<std::size_t> tuple;
    for (auto const& f : report.factors) {
      tuple.push_back(f.h1.class_of(restrict(phi, f.sylow)));
    }
    auto const c = source.class_of_index(i);
    if (!seen[c]) {
      seen[c] = 1;
      raw[c]  = std::move(tuple);
    } else if (raw[c] != tuple) {
      report.well_defined = false;
      if (report.witness.empty()) {
        report.witness = "class " + std::to_string(c) + " restricts to both " + join_indices(raw[c])
                         + " and " + join_indices(tuple);
      }
    }
  }

  constexpr auto none = ~std::size_t{0};
  report.forward.assign(source.size(), {});
  for (std::size_t c = 0; c < source.size(); ++c) {
    for (std::size_t f = 0; f < report.factors.size(); ++f) {
      auto const& fix = report.factors[f].fixed;
      auto        it  = std::lower_bound(fix.begin(), fix.end(), raw[c][f]);
      if (it == fix.end() || *it != raw[c][f]) {
        report.lands_in_fixed = false;
        if (report.witness.empty()) {
          report.witness = "class " + std::to_string(c) + " restricts to a non-fixed class at p="
                           + std::to_string(report.factors[f].prime);
        }
        report.forward[c].push_back(none);
      } else {
        report.forward[c].push_back(static_cast<std::size_t>(it - fix.begin()));
      }
    }
  }

  std::vector<std::size_t> base;
  for (auto const& f : report.factors) {
    auto it = std::find(f.fixed.begin(), f.fixed.end(), f.h1.distinguished());
    base.push_back(it == f.fixed.end() ? none : static_cast<std::size_t>(it - f.fixed.begin()));
  }
  report.point_preserving = report.forward[source.distinguished()] == base;

  std::set<std::vector<std::size_t>> image(report.forward.begin(), report.forward.end());
  report.injective  = image.size() == source.size();
  report.surjective = report.lands_in_fixed && image.size() == report.target_size;
  report.bijective  = report.well_defined && report.lands_in_fixed && report.injective
                     && report.surjective;
  if (!report.bijective && report.witness.empty()) {
    report.witness = std::to_string(source.size()) + " classes map onto "
                     + std::to_string(image.size()) + " of " + std::to_string(report.target_size)
                     + " tuples";
  }
  return report;
}

ExtensionResult extend_from_sylow(CohomologySet const& sylow_h1, std::size_t cls,
                                  CohomologySet const& full_h1, std::uint64_t q) {
  if (sylow_h1.action() != full_h1.action() || !full_h1.domain().is_whole()
      || !sylow_h1.domain().is_subset_of(full_h1.domain())) {
    throw Error(Errc::InvalidArgument, "need H^1(J_q, M) and H^1(J, M) for one action");
  }
  if (cls >= sylow_h1.size()) {
    throw Error(Errc::InvalidArgument, "class index out of range");
  }
  auto const& action = full_h1.action();
  auto const& j      = *action->actor();
  auto const  hall   = hall_pprime(action->actor(), q);
  auto const  fixed  = fixed_classes(sylow_h1, hall);
  if (!std::binary_search(fixed.begin(), fixed.end(), cls)) {
    throw Error(Errc::InvalidArgument, "class " + std::to_string(cls)
                                           + " is not fixed by the Hall q'-subgroup");
  }

  // j = j' j_q with j' a q'-element; try phi~(j) = phi(j_q) on each member.
  for (auto idx : sylow_h1.classes()[cls]) {
    auto const&         phi = sylow_h1.cocycles()[idx];
    std::vector<elem_t> values(j.order());
    for (elem_t x = 0; x < j.order(); ++x) {
      values[x] = phi(primary_component(j, x, q));
    }
    if (satisfies_cocycle_identity(*action, full_h1.domain(), values)) {
      Cocycle ext(action, full_h1.domain(), std::move(values));
      return ExtensionResult{full_h1.class_of(ext), std::move(ext), true};
    }
  }

  for (std::size_t c = 0; c < full_h1.size(); ++c) {
    auto const& phi = full_h1.representative(c);
    if (sylow_h1.class_of(restrict(phi, sylow_h1.domain())) == cls) {
      return ExtensionResult{c, phi, false};
    }
  }
  throw Error(Errc::NoPreimageFound, "no class of H^1(J, M) restricts to class "
                                         + std::to_string(cls));
}

////////////////////////////////////////////////////////////////////////
// Abelian coefficients
////////////////////////////////////////////////////////////////////////

std::vector<std::size_t> AbelianH1::primary_part(std::uint64_t p) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < orders.size(); ++c) {
    if (is_p_power(orders[c], p)) {
      out.push_back(c);
    }
  }
  return out;
}

AbelianH1 abelian_h1_group(ActionPtr const& action, Subgroup const& domain, Limits const& limits) {
  auto const& n = *action->target();
  if (!n.is_abelian()) {
    throw Error(Errc::NotAbelian, "coefficient group is not abelian");
  }
  AbelianH1   out{h1(action, domain, limits), {}, {}};
  auto const& h = out.h1;
  auto        pointwise = [&](Cocycle const& a, Cocycle const& b) {
    std::vector<elem_t> v(a.values().size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = n.mul(a.values()[i], b.values()[i]);
    }
    auto c = h.find(v);
    if (!c) {
      throw Error(Errc::Inconsistent, "pointwise product of cocycles is not a cocycle");
    }
    return *c;
  };
  out.product.assign(h.size(), std::vector<std::size_t>(h.size()));
  for (std::size_t a = 0; a < h.size(); ++a) {
    for (std::size_t b = 0; b < h.size(); ++b) {
      out.product[a][b] = pointwise(h.representative(a), h.representative(b));
    }
  }
  // independence of the chosen representatives
  for (std::size_t i = 0; i < h.cocycles().size(); ++i) {
    auto const a = h.class_of_index(i);
    for (std::size_t b = 0; b < h.size(); ++b) {
      if (pointwise(h.cocycles()[i], h.representative(b)) != out.product[a][b]) {
        throw Error(Errc::Inconsistent, "class product depends on the representative");
      }
    }
  }
  auto const e = h.distinguished();
  for (std::size_t a = 0; a < h.size(); ++a) {
    std::size_t k = 1;
    for (auto x = a; x != e; x = out.product[x][a]) {
      if (k > h.size()) {
        throw Error(Errc::Inconsistent, "class product has no finite order");
      }
      ++k;
    }
    out.orders.push_back(k);
  }
  return out;
}

Eq3Report eq3_check(ActionPtr const& action, Limits const& limits) {
  Eq3Report report;
  report.shared_primes = shared_primes(*action);
  auto const whole     = Subgroup::whole(action->actor());
  auto const ab        = abelian_h1_group(action, whole, limits);
  auto const& h        = ab.h1;
  report.h1_size       = h.size();

  auto const e    = h.distinguished();
  bool       laws = true;
  for (std::size_t a = 0; a < h.size(); ++a) {
    laws = laws && ab.product[a][e] == a && ab.product[e][a] == a;
    bool has_inverse = false;
    for (std::size_t b = 0; b < h.size(); ++b) {
      has_inverse = has_inverse || ab.product[a][b] == e;
      laws        = laws && ab.product[a][b] == ab.product[b][a];
      for (std::size_t c = 0; c < h.size() && laws; ++c) {
        laws = ab.product[ab.product[a][b]][c] == ab.product[a][ab.product[b][c]];
      }
    }
    laws = laws && has_inverse;
  }
  report.group_laws = laws;

  bool all_bijective = true;
  for (auto p : report.shared_primes) {
    auto       jp  = sylow_subgroup(action->actor(), p, limits);
    auto       hp  = h1(action, jp, limits);
    auto const inv = invariant_classes(hp);
    auto const primary = ab.primary_part(p);

    std::set<std::size_t> image;
    bool                   into_inv = true;
    for (auto c : primary) {
      auto r = hp.class_of(restrict(h.representative(c), jp));
      into_inv = into_inv && std::binary_search(inv.begin(), inv.end(), r);
      image.insert(r);
    }
    bool bij = into_inv && image.size() == primary.size() && image.size() == inv.size();
    all_bijective = all_bijective && bij;
    report.product_size *= inv.size();
    report.primes.push_back(PrimaryRestriction{p, jp.order(), inv.size(), primary.size(), bij});
  }
  report.holds = report.group_laws && all_bijective && report.h1_size == report.product_size;
  return report;
}

}  // namespace nilcoh
