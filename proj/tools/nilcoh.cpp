#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "nilcoh/cohomology.hpp"
#include "nilcoh/harness.hpp"
#include "nilcoh/structure.hpp"

using namespace nilcoh;
using json = nlohmann::ordered_json;

namespace {

struct Input {
  std::vector<std::string> scenarios;
  std::string              instance;
  std::uint64_t            budget = 0;
  std::string              format = "human";
  bool                     relaxed = false;
};

std::vector<Scenario> load_pool(Input const& in, Limits const& limits) {
  std::vector<Scenario> pool;
  for (auto const& path : in.scenarios) {
    pool.push_back(load_scenario(path, limits));
  }
  if (pool.empty()) {
    pool.push_back(default_catalog(limits));
  }
  return pool;
}

std::pair<Scenario const*, std::string> find_action(std::vector<Scenario> const& pool,
                                                    std::string const&           name) {
  if (name.empty()) {
    throw Error(Errc::InvalidArgument, "--instance is required");
  }
  for (auto const& s : pool) {
    for (auto const& [n, a] : s.actions) {
      if (n == name) {
        return {&s, n};
      }
    }
  }
  throw Error(Errc::InvalidArgument, "no action named '" + name + "'");
}

json cocycle_json(Cocycle const& phi) {
  return json{{"domain", std::vector<elem_t>(phi.domain().elements().begin(),
                                             phi.domain().elements().end())},
              {"values", phi.values()}};
}

int cmd_h1(Input const& in, Limits const& limits) {
  auto const pool      = load_pool(in, limits);
  auto [scenario, name] = find_action(pool, in.instance);
  auto const h         = h1(scenario->action(name), limits);
  if (in.format == "json") {
    json classes = json::array();
    for (std::size_t c = 0; c < h.size(); ++c) {
      auto rep    = cocycle_json(h.representative(c));
      rep["size"] = h.classes()[c].size();
      classes.push_back(std::move(rep));
    }
    std::cout << json{{"instance", name},
                      {"cocycles", h.cocycles().size()},
                      {"distinguished", h.distinguished()},
                      {"classes", std::move(classes)}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << name << ": |Z^1| = " << h.cocycles().size() << ", |H^1| = " << h.size() << '\n';
  for (std::size_t c = 0; c < h.size(); ++c) {
    std::cout << "  [" << c << "]" << (c == h.distinguished() ? "*" : " ") << " size "
              << h.classes()[c].size() << "  rep " << json(h.representative(c).values()).dump()
              << '\n';
  }
  return 0;
}

int cmd_complements(Input const& in, Limits const& limits) {
  auto const  pool      = load_pool(in, limits);
  auto [scenario, name] = find_action(pool, in.instance);
  auto const& sd        = scenario->product(name);
  auto const  comps     = all_complements(sd.group, sd.normal(), limits);
  auto const  classes   = conjugacy_classes_of(comps, sd.normal());
  if (in.format == "json") {
    json list = json::array();
    for (auto const& k : comps) {
      list.push_back(std::vector<elem_t>(k.elements().begin(), k.elements().end()));
    }
    std::cout << json{{"instance", name},
                      {"order", sd.group->order()},
                      {"complements", std::move(list)},
                      {"n_classes", classes}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << name << ": " << comps.size() << " complements of N in a group of order "
            << sd.group->order() << ", " << classes.size() << " classes under N\n";
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::cout << "  class " << c << ":";
    for (auto i : classes[c]) {
      std::cout << ' '
                << json(std::vector<elem_t>(comps[i].elements().begin(), comps[i].elements().end()))
                       .dump();
    }
    std::cout << '\n';
  }
  return 0;
}

int emit(SuiteResult const& result, Input const& in) {
  report_emit(std::cout, result.records, in.format == "json" ? Format::json : Format::human);
  if (in.format == "json") {
    std::cerr << result.records.size() << " checks, " << result.failures() << " failed, "
              << result.falsifications() << " falsifications\n";
  }
  return result.exit_code();
}

int cmd_decompose(Input const& in, Limits const& limits) {
  auto const pool       = load_pool(in, limits);
  auto [scenario, name] = find_action(pool, in.instance);
  CheckRecord rec;
  rec.report = verify_lemma1(scenario->action(name), limits);
  rec.report.instance = name;
  rec.ok              = rec.report.pass();
  rec.falsification   = rec.report.falsification();
  SuiteResult result{{std::move(rec)}};
  return emit(result, in);
}

int cmd_suite(Input const& in, Limits const& limits, std::optional<std::string> kind) {
  auto const   pool = load_pool(in, limits);
  SuiteOptions options{limits, in.relaxed, std::nullopt, std::move(kind)};
  if (!in.instance.empty()) {
    options.instance = in.instance;
  }
  return emit(run_suite(pool, options), in);
}

int cmd_catalog(Input const& in, Limits const& limits) {
  auto const entries = catalog_entries(default_catalog(limits));
  if (in.format == "json") {
    for (auto const& e : entries) {
      std::cout << json{{"id", e.id},
                        {"actor_order", e.actor_order},
                        {"target_order", e.target_order},
                        {"coprime", e.coprime},
                        {"nilpotent", e.nilpotent},
                        {"abelian_target", e.abelian_target}}
                       .dump()
                << '\n';
    }
    return 0;
  }
  for (auto const& e : entries) {
    std::cout << e.id << "  |J|=" << e.actor_order << " |N|=" << e.target_order
              << (e.coprime ? "  coprime" : "  shared primes")
              << (e.nilpotent ? "" : "  non-nilpotent") << '\n';
  }
  std::cout << entries.size() << " actions\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonabelian H^1 for nilpotent actions, with theorem verifiers"};
  app.require_subcommand(1);
  app.fallthrough();

  Input in;
  app.add_option("--scenario", in.scenarios, "Scenario file (JSON); repeatable")
      ->check(CLI::ExistingFile);
  app.add_option("--instance", in.instance, "Instance id (action name or check instance)");
  app.add_option("--budget", in.budget, "Enumeration budget (|N|^#generators)");
  app.add_option("--format", in.format, "Output format")
      ->check(CLI::IsMember({"json", "human"}));
  app.add_flag("--relaxed-hypotheses", in.relaxed,
               "Record checks with unmet hypotheses as observations");

  auto* h1_cmd   = app.add_subcommand("h1", "List H^1 classes of an action");
  auto* comp_cmd = app.add_subcommand("complements", "Complements of N in N x| J");
  auto* dec_cmd  = app.add_subcommand("decompose", "Sylow-wise decomposition report");
  auto* ver_cmd  = app.add_subcommand("verify", "Run one verifier over the selected instances");
  std::string theorem;
  ver_cmd->add_option("theorem", theorem, "Verifier")
      ->required()
      ->check(CLI::IsMember({"lemma1", "prop2", "prop3", "prop5", "thm4"}));
  auto* suite_cmd = app.add_subcommand("suite", "Run every check");
  auto* cat_cmd   = app.add_subcommand("catalog", "List the default catalog");

  CLI11_PARSE(app, argc, argv);

  Limits limits;
  if (in.budget > 0) {
    limits.enumeration_budget = in.budget;
  }
  try {
    if (*h1_cmd) {
      return cmd_h1(in, limits);
    }
    if (*comp_cmd) {
      return cmd_complements(in, limits);
    }
    if (*dec_cmd) {
      return cmd_decompose(in, limits);
    }
    if (*ver_cmd) {
      return cmd_suite(in, limits, theorem);
    }
    if (*suite_cmd) {
      return cmd_suite(in, limits, std::nullopt);
    }
    if (*cat_cmd) {
      return cmd_catalog(in, limits);
    }
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
