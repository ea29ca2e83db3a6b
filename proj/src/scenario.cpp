#include <algorithm>
#include <fstream>
#include <sstream>

#include "nilcoh/catalog.hpp"
#include "nilcoh/harness.hpp"

namespace nilcoh {

using json = nlohmann::ordered_json;

std::vector<std::string> const& check_kinds() {
  static std::vector<std::string> const kinds{
      "h1",    "oracle", "complements", "lemma1",     "primary",     "extend",      "eq3",
      "prop2", "prop3",  "prop5",       "prop5_sweep", "thm4",       "thm4_sweep", "intersection"};
  return kinds;
}

namespace {

  template <typename T>
  auto find_named(std::vector<std::pair<std::string, T>> const& v, std::string const& name) {
    return std::find_if(v.begin(), v.end(), [&](auto const& e) { return e.first == name; });
  }

  std::string type_error(std::string const& what, json const& j) {
    return what + " has unexpected JSON " + std::string(j.type_name());
  }

  template <typename T>
  T field(json const& j, char const* key) {
    if (!j.is_object() || !j.contains(key)) {
      throw Error(Errc::InvalidArgument, std::string("missing field '") + key + "'");
    }
    try {
      return j.at(key).get<T>();
    } catch (json::exception const& e) {
      throw Error(Errc::InvalidArgument, std::string("field '") + key + "': " + e.what());
    }
  }

  GroupPtr build_group(json const& j, Scenario const& s, Limits const& limits) {
    if (j.is_string()) {
      return s.group(j.get<std::string>());
    }
    if (!j.is_object()) {
      throw Error(Errc::InvalidArgument, type_error("group", j));
    }
    if (j.contains("kind")) {
      auto const kind = field<std::string>(j, "kind");
      if (kind == "table") {
        auto const n   = field<std::size_t>(j, "n");
        auto       mul = field<Table>(j, "mul");
        if (mul.size() != n) {
          throw Error(Errc::InvalidArgument, "table has " + std::to_string(mul.size())
                                                 + " rows but n = " + std::to_string(n));
        }
        return Group::from_table(mul, {}, limits.order_cap);
      }
      if (kind == "perm") {
        return Group::from_permutations(field<std::vector<Permutation>>(j, "generators"),
                                        field<std::size_t>(j, "degree"), limits.order_cap);
      }
      throw Error(Errc::InvalidArgument, "unknown group kind '" + kind + "'");
    }
    auto const b = field<std::string>(j, "builtin");
    if (b == "cyclic") {
      return cyclic_group(field<std::size_t>(j, "n"));
    }
    if (b == "abelian") {
      return abelian_group(field<std::vector<std::size_t>>(j, "factors"));
    }
    if (b == "dihedral") {
      return dihedral_group(field<std::size_t>(j, "n"));
    }
    if (b == "quaternion8") {
      return quaternion_group();
    }
    if (b == "heisenberg") {
      return heisenberg_group(field<std::uint64_t>(j, "p"));
    }
    if (b == "symmetric") {
      return symmetric_group(field<std::size_t>(j, "n"));
    }
    if (b == "direct_product") {
      auto const& factors = j.at("factors");
      if (!factors.is_array() || factors.empty()) {
        throw Error(Errc::InvalidArgument, "direct_product needs a non-empty factor list");
      }
      auto g = build_group(factors[0], s, limits);
      for (std::size_t i = 1; i < factors.size(); ++i) {
        g = direct_product(g, build_group(factors[i], s, limits));
      }
      return g;
    }
    throw Error(Errc::InvalidArgument, "unknown builtin group '" + b + "'");
  }

  ActionPtr build_action(json const& j, Scenario const& s, Limits const& limits) {
    auto actor  = build_group(j.at("actor"), s, limits);
    auto target = build_group(j.at("target"), s, limits);
    if (j.contains("builtin")) {
      auto const b = field<std::string>(j, "builtin");
      if (b != "trivial") {
        throw Error(Errc::InvalidArgument, "unknown builtin action '" + b + "'");
      }
      return ActionOnGroup::trivial(std::move(actor), std::move(target));
    }
    auto const                       gens = field<std::vector<elem_t>>(j, "gens");
    std::vector<std::vector<elem_t>> images;
    for (auto const& img : j.at("images")) {
      if (img.is_string()) {
        images.push_back(named_automorphism(*target, img.get<std::string>()));
      } else {
        images.push_back(img.get<std::vector<elem_t>>());
      }
    }
    return ActionOnGroup::from_generator_images(std::move(actor), std::move(target), gens, images);
  }

  // The group a G-set or subgroup argument lives in: a group name or an
  // action name (its semidirect product).
  GroupPtr resolve_ambient(Scenario const& s, std::string const& ref) {
    if (find_named(s.groups, ref) != s.groups.end()) {
      return s.group(ref);
    }
    return s.product(ref).group;
  }

  void validate_check(Scenario const& s, Check const& c);

  Check build_check(json const& j, Scenario const& s, std::size_t index) {
    Check c;
    c.kind = field<std::string>(j, "check");
    if (std::find(check_kinds().begin(), check_kinds().end(), c.kind) == check_kinds().end()) {
      throw Error(Errc::UnknownCheck, "'" + c.kind + "'");
    }
    auto const expect = j.value("expect", std::string("pass"));
    if (expect == "pass") {
      c.expect = Expect::pass;
    } else if (expect == "hypothesis_fail") {
      c.expect = Expect::hypothesis_fail;
    } else if (expect == "any") {
      c.expect = Expect::any;
    } else {
      throw Error(Errc::InvalidArgument, "unknown expectation '" + expect + "'");
    }
    c.args = j;
    if (j.contains("instance")) {
      c.instance = field<std::string>(j, "instance");
    } else {
      std::string subject = j.value("action", j.value("group", j.value("gset", std::string())));
      c.instance = s.id + "/" + (subject.empty() ? std::to_string(index) : subject);
    }
    validate_check(s, c);
    return c;
  }

}  // namespace

Subgroup resolve_subgroup(Scenario const& s, GroupPtr const& ambient, json const& spec,
                          std::optional<std::string> const& action_name) {
  if (spec.is_string() && action_name) {
    auto const& sd = s.product(*action_name);
    if (spec == "N") {
      return sd.normal();
    }
    if (spec == "J") {
      return sd.complement();
    }
  }
  if (spec.is_array()) {
    return Subgroup::from_elements(ambient, spec.get<std::vector<elem_t>>());
  }
  if (spec.is_object() && spec.contains("generators")) {
    auto gens = spec.at("generators").get<std::vector<elem_t>>();
    for (auto g : gens) {
      if (g >= ambient->order()) {
        throw Error(Errc::InvalidArgument, "generator out of range");
      }
    }
    return Subgroup::generated(ambient, gens);
  }
  if (spec.is_object() && spec.contains("derived")) {
    auto h = Subgroup::whole(ambient);
    for (auto k = spec.at("derived").get<int>(); k > 0; --k) {
      h = commutator_subgroup(h, h);
    }
    return h;
  }
  throw Error(Errc::InvalidArgument, type_error("subgroup", spec));
}

namespace {

  void validate_check(Scenario const& s, Check const& c) {
    auto const& a = c.args;
    if (c.kind == "thm4") {
      auto const& g = s.gset(field<std::string>(a, "gset"));
      if (s.products.find(g.group_ref) == s.products.end()) {
        throw Error(Errc::InvalidArgument, "thm4 needs a G-set over an action's semidirect product");
      }
      return;
    }
    if (c.kind == "prop2" || c.kind == "prop3") {
      if (a.contains("group")) {
        auto g = s.group(field<std::string>(a, "group"));
        resolve_subgroup(s, g, a.at("normal"), std::nullopt);
        return;
      }
    }
    auto const name = field<std::string>(a, "action");
    static std::vector<std::string> const need_product{
        "complements", "prop2", "prop3", "prop5", "prop5_sweep", "thm4_sweep", "intersection"};
    if (std::find(need_product.begin(), need_product.end(), c.kind) != need_product.end()) {
      s.product(name);
    } else {
      s.action(name);
    }
    if (c.kind == "prop5") {
      resolve_subgroup(s, s.product(name).group, a.at("subgroup"), name);
    }
  }

}  // namespace

GroupPtr Scenario::group(std::string const& name) const {
  auto it = find_named(groups, name);
  if (it == groups.end()) {
    throw Error(Errc::InvalidArgument, "unknown group '" + name + "'");
  }
  return it->second;
}

ActionPtr Scenario::action(std::string const& name) const {
  auto it = find_named(actions, name);
  if (it == actions.end()) {
    throw Error(Errc::InvalidArgument, "unknown action '" + name + "'");
  }
  return it->second;
}

NamedGSet const& Scenario::gset(std::string const& name) const {
  auto it = find_named(gsets, name);
  if (it == gsets.end()) {
    throw Error(Errc::InvalidArgument, "unknown G-set '" + name + "'");
  }
  return it->second;
}

SemidirectProduct const& Scenario::product(std::string const& action_name) const {
  auto it = products.find(action_name);
  if (it == products.end()) {
    action(action_name);
    throw Error(Errc::OrderCapExceeded, "no semidirect product for action '" + action_name + "'");
  }
  return it->second;
}

Scenario parse_scenario(std::string const& text, Limits const& limits) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) {
    throw Error(Errc::ParseError, "scenario must be a JSON object");
  }
  Scenario s;
  s.id = doc.value("id", std::string("scenario"));

  auto validating = [&](std::string const& what, auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      throw Error(Errc::ValidationError, what + ": " + e.what());
    } catch (json::exception const& e) {
      throw Error(Errc::ValidationError, what + ": " + e.what());
    }
  };
  auto unique = [&](auto const& v, std::string const& name, std::string const& what) {
    if (find_named(v, name) != v.end()) {
      throw Error(Errc::ValidationError, what + " '" + name + "' defined twice");
    }
  };

  auto const groups = doc.value("groups", json::object());
  for (auto const& [name, spec] : groups.items()) {
    unique(s.groups, name, "group");
    validating("group '" + name + "'",
               [&] { s.groups.emplace_back(name, build_group(spec, s, limits)); });
  }
  auto const actions = doc.value("actions", json::object());
  for (auto const& [name, spec] : actions.items()) {
    unique(s.actions, name, "action");
    validating("action '" + name + "'", [&] {
      auto act = build_action(spec, s, limits);
      s.actions.emplace_back(name, act);
      if (act->actor()->order() * act->target()->order() <= limits.order_cap) {
        s.products.emplace(name, semidirect(act, limits));
      }
    });
  }
  auto const gsets = doc.value("gsets", json::object());
  for (auto const& [name, spec] : gsets.items()) {
    unique(s.gsets, name, "G-set");
    validating("G-set '" + name + "'", [&] {
      auto const ref     = field<std::string>(spec, "group");
      auto       ambient = resolve_ambient(s, ref);
      if (spec.contains("coset_of")) {
        std::optional<std::string> act;
        if (s.products.count(ref)) {
          act = ref;
        }
        auto h = resolve_subgroup(s, ambient, spec.at("coset_of"), act);
        s.gsets.emplace_back(name, NamedGSet{ref, coset_gset(h)});
      } else {
        auto table = field<std::vector<std::vector<std::uint32_t>>>(spec, "table");
        s.gsets.emplace_back(
            name, NamedGSet{ref, GSet::make(ambient, field<std::size_t>(spec, "size"), table)});
      }
    });
  }
  auto const checks = doc.value("checks", json::array());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    validating("check " + std::to_string(i),
               [&] { s.checks.push_back(build_check(checks[i], s, i)); });
  }
  return s;
}

Scenario load_scenario(std::filesystem::path const& path, Limits const& limits) {
  std::ifstream in(path);
  if (!in) {
    throw Error(Errc::ParseError, "cannot open " + path.string());
  }
  std::stringstream buf;
  buf << in.rdbuf();
  auto s = parse_scenario(buf.str(), limits);
  return s;
}

}  // namespace nilcoh
