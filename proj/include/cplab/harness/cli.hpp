#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <mpfr.h>

namespace cplab::harness {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Working precision default: $CPLAB_PRECISION when set, else 256 bits.
/// Throws std::invalid_argument on a malformed value.
mpfr_prec_t default_precision_from_env();

/// Parses argv (config file first, then command-line overrides), runs one
/// subcommand and persists its artifacts. Returns kExitPass, kExitCheckFailed
/// (with a JSON failure report on `err`) or kExitUsage.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cplab::harness
