#pragma once

#include <exception>
#include <string>

#include "json.hpp"

#include "msa/request.hpp"

namespace msa {

enum class Command { Ideal, Components, Orbits, FiniteOrbit, Oracle, Analyze };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitMismatch = 4;

struct RunOutcome {
  nlohmann::ordered_json report;
  std::string text;
  int exit_code = kExitOk;
};

/// Runs one subcommand. Deterministic for a fixed request: byte-identical
/// JSON across runs. Library errors propagate as exceptions.
RunOutcome run(Command command, const AnalysisRequest& request);

/// 2 for ParseError, 3 for BudgetError, 1 for any other error.
int exit_code_for(const std::exception& e) noexcept;

std::string to_string(Command command);

}  // namespace msa
