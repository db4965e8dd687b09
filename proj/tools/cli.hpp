#pragma once

// Command layer behind the lstrat executable. run() never throws: library
// errors become exit codes (2 for bad input, 1 for failed checks and guards).

#include <optional>
#include <string>

#include "lstrat/exact.hpp"

namespace lstrat::cli {

struct CommandRequest {
  std::string command;  // solve, quotient, stratify-game, fiber, convert, verify
  std::optional<std::string> game, strata, monoid, morphism, generators;
  std::optional<std::size_t> element;
  std::optional<Int> threshold, delta, window;
  std::optional<int> form;
};

struct Report {
  int exit_code = 0;
  std::string artifact;  // JSON document, empty when the command has none
  std::string summary;   // one human-readable line
  std::string json;      // machine-readable run report
};

int exit_code_for(ErrorCode code);

// Caps from LSTRAT_MAX_THRESHOLD and LSTRAT_MAX_ESCALATIONS.
struct Limits {
  Int max_threshold = 400;
  int max_escalations = 4;
};
Limits limits_from_env();

Report run(const CommandRequest& req, const Limits& limits = limits_from_env());

}  // namespace lstrat::cli
