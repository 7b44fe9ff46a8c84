#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kneserlab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFinding = 1,         // a checked property does not hold
  kDomainError = 2,     // bad arguments, precondition or parse failure
  kBudgetError = 3,     // enumeration cap exceeded
  kProofViolation = 4,  // a construction the proof guarantees did not go through
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;

// Runs one command line (without the program name). Reports go to `out` unless
// --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kneserlab::cli
