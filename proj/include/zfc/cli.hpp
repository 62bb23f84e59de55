#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zfc {

inline constexpr std::uint64_t kDefaultSeed = 7;
inline constexpr int kDefaultSamples = 100;

enum ExitCode : int { kExitOk = 0, kExitInputError = 2, kExitDisagreement = 3 };

// Runs the `zfc` command line. `args` excludes the program name. Reports go
// to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zfc
