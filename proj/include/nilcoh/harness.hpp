#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nilcoh/actions.hpp"
#include "nilcoh/theorems.hpp"

namespace nilcoh {

enum class Expect { pass, hypothesis_fail, any };

struct Check {
  std::string            kind;
  std::string            instance;
  nlohmann::ordered_json args;
  Expect                 expect = Expect::pass;
};

struct NamedGSet {
  std::string group_ref;
  GSet        gset;
};

// Groups, actions and G-sets are kept in file order.
struct Scenario {
  std::string                                            id;
  std::vector<std::pair<std::string, GroupPtr>>          groups;
  std::vector<std::pair<std::string, ActionPtr>>         actions;
  std::map<std::string, SemidirectProduct>               products;  // per action name
  std::vector<std::pair<std::string, NamedGSet>>         gsets;
  std::vector<Check>                                     checks;

  GroupPtr          group(std::string const& name) const;
  ActionPtr         action(std::string const& name) const;
  NamedGSet const&  gset(std::string const& name) const;
  SemidirectProduct const& product(std::string const& action_name) const;
};

// A subgroup argument of `ambient`: a sorted element list, {"generators":
// [...]}, {"derived": k} for the k-th derived subgroup, or "N" / "J" for the
// factors of the semidirect product of `action_name`.
Subgroup resolve_subgroup(Scenario const& s, GroupPtr const& ambient,
                          nlohmann::ordered_json const& spec,
                          std::optional<std::string> const& action_name);

// Check kinds understood by run_check.
std::vector<std::string> const& check_kinds();

// Throws ParseError (with line and column) or ValidationError naming the
// failing constructor.
Scenario parse_scenario(std::string const& text, Limits const& limits = {});
Scenario load_scenario(std::filesystem::path const& path, Limits const& limits = {});

// The shipped default catalog.
Scenario default_catalog(Limits const& limits = {});

struct CatalogEntry {
  std::string   id;
  std::size_t   actor_order;
  std::size_t   target_order;
  bool          coprime;
  bool          nilpotent;
  bool          abelian_target;
};
std::vector<CatalogEntry> catalog_entries(Scenario const& catalog);

struct SuiteOptions {
  Limits                     limits;
  bool                       relaxed_hypotheses = false;
  std::optional<std::string> instance;  // only checks with this instance id
  std::optional<std::string> kind;      // only checks of this kind
};

struct CheckRecord {
  VerificationReport report;
  Expect             expect = Expect::pass;
  bool               ok     = false;
  bool               falsification = false;
  std::string        error;
};

struct SuiteResult {
  std::vector<CheckRecord> records;

  std::size_t failures() const;
  std::size_t falsifications() const;
  // 0 pass, 1 check failure, 2 falsification.
  int exit_code() const;
};

CheckRecord run_check(Scenario const& s, Check const& c, SuiteOptions const& options);
SuiteResult run_suite(std::vector<Scenario> const& scenarios, SuiteOptions const& options);

enum class Format { json, human };

nlohmann::ordered_json to_json(CheckRecord const& r);
void                   report_emit(std::ostream& out, std::vector<CheckRecord> const& records,
                                   Format format);

}  // namespace nilcoh
