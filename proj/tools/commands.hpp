#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ordsplit::cli {

constexpr std::uint64_t kDefaultSeed = 20240601;
constexpr const char* kVersion = "0.1.0";

enum ExitCode { ok = 0, error = 1, not_found = 2 };

// Runs one command line. Results go to `out` (or --output), diagnostics to
// `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ordsplit::cli
