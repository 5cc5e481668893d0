#pragma once

// The batch commands behind the command-line tool. Each takes a parsed job
// and returns the JSON document to print; run_command adds error handling
// and exit codes so that every path yields JSON.

#include <string>

#include "addpoly/codec.hpp"

namespace addpoly {

Json cmd_species(const JobSpec& job);
Json cmd_count(const JobSpec& job);
Json cmd_count_general(const JobSpec& job);
Json cmd_mhat(const JobSpec& job);
Json cmd_pi(const JobSpec& job);
/// Report of fast-path versus oracle checks; "passed" is false on any mismatch.
Json cmd_verify(const JobSpec& job);

struct CommandResult {
  Json output;
  int exit_code = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInternal = 4;

/// {"error": {"kind": ..., "message": ...}}
Json error_json(const std::string& kind, const std::string& message);

/// Parses the job, runs the named command and maps failures to exit codes.
CommandResult run_command(const std::string& name, const Json& job);

}  // namespace addpoly
