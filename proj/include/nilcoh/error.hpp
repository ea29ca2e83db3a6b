#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nilcoh {

using elem_t = std::uint32_t;

enum class Errc {
  InvalidArgument,
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderCapExceeded,
  NotASubgroup,
  NotAHomomorphism,
  NotNormal,
  NotNilpotent,
  SearchBudgetExceeded,
  BudgetExceeded,
  NotAutomorphism,
  DoesNotGenerate,
  NotNormalized,
  NotACocycle,
  NotAComplement,
  DomainMismatch,
  NoPreimageFound,
  NotAbelian,
  HypothesisNotMet,
  NoConjugatorFound,
  NoFixedPoint,
  Inconsistent,
  ParseError,
  ValidationError,
  UnknownCheck,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string const& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Caps shared by every enumeration in the library. Passed explicitly so that
// callers (CLI --budget, tests) can tighten them without global state.
struct Limits {
  std::size_t order_cap = 2048;
  // |N|^#generators candidate assignments for generator-driven cocycle search
  std::uint64_t enumeration_budget = 10'000'000;
  // search nodes visited by the definitional cocycle oracle
  std::uint64_t oracle_budget = 1'000'000;
  // subgroup closures performed by generator-bounded subgroup enumeration
  std::uint64_t subgroup_budget = 2'000'000;
};

}  // namespace nilcoh
