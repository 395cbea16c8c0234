#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace slopekit::cli {

/// Exit statuses of the command-line tool.
enum Exit : int {
  kOk = 0,
  kPrecondition = 2,
  kCertificateFailure = 3,
  kParseError = 4,
};

enum class Format { Text, Json, Svg };

/// Options shared by every subcommand.
struct RunConfig {
  std::uint64_t seed = 0;
  /// Witt length for named bases, 0 for the default.
  int precision = 0;
  std::uint64_t guard = 10'000'000;
  Format format = Format::Text;
  std::uint32_t p = 3;
  /// Empty for standard output. Relative paths resolve against
  /// SLOPEKIT_OUTPUT_DIR when that variable is set.
  std::string output;
};

/// Runs the tool and returns its exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slopekit::cli
