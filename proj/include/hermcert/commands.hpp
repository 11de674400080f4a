#pragma once

// Command-line stages. Each command reads its input files, runs one stage and
// returns a JSON document with the process exit code.

#include "hermcert/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hermcert {

enum ExitCode : int {
  kExitOk = 0,            // success, or verdict true
  kExitUsage = 1,         // bad arguments or unreadable input
  kExitConstruction = 2,  // Hermite construction or numerical failure
  kExitCertFail = 3,      // certification failed
  kExitVerdictFalse = 4,
};

struct RunConfig {
  std::string command;
  std::optional<std::string> system;
  std::optional<std::string> system_b;
  std::optional<std::string> roots;
  std::optional<std::string> roots_b;
  std::optional<std::string> hermite;
  std::optional<std::string> basis;  // comma-separated monomials
  std::optional<std::string> g;
  std::optional<std::string> center;  // comma-separated rationals
  std::optional<std::string> eps2;
  std::optional<std::string> value;
  std::optional<std::string> bound;
  std::uint64_t seed = CertifyOptions{}.seed;
  int retries = CertifyOptions{}.retries;
  int iterations = 8;
  bool assume_smooth_bounded = false;
};

struct CommandResult {
  Json output;
  int exit_code = kExitOk;
};

inline constexpr const char* kCommandNames[] = {"build",  "certify",      "ball",                 "nonneg",  "count-real",
                                               "refine", "filter-roots", "reconstruct-rational", "pipeline"};

CommandResult run_command(const RunConfig& config);

}  // namespace hermcert
