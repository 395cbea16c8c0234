#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slopekit/monodromy/equation.hpp"
#include "slopekit/monodromy/laurent.hpp"
#include "slopekit/unitgroup/units.hpp"

namespace slopekit::monodromy {

/// Shape data of the level-l graded equation used for piece l.
struct PieceEvidence {
  int level = 0;
  std::vector<Point> stratum;
  std::optional<Point> pivot;
  std::string symbol;
  /// The pivot monomial is z1^M t^{-N}.
  std::int64_t M = 0, N = 0;
  bool monomial_present = false;
  bool isolated = false;
  int subgroups = 0;
  int certified_subgroups = 0;
  /// Method counts: "degree", "search", "constant-term".
  std::vector<std::pair<std::string, int>> methods;
  bool operator==(const PieceEvidence&) const = default;
};

struct LargenessLeg {
  int piece = 0;
  bool certified = false;
  /// Name of the failing stratum or check, empty when certified.
  std::string failure;
  std::optional<FirstWittCheck> first_witt;
  std::optional<PieceEvidence> evidence;
  bool operator==(const LargenessLeg&) const = default;
};

struct LargenessOptions {
  std::uint64_t seed = 0;
  int samples = 16;
  std::uint64_t search_guard = 1'000'000;
  std::uint64_t closure_guard = 10'000'000;
};

struct LargenessCertificate {
  std::uint32_t p = 0;
  int h = 0, d = 0;
  Rational lambda;
  std::vector<int> pieces;
  std::vector<LargenessLeg> legs;
  std::optional<unitgroup::GenerationReport> closure;
  std::string verdict;
  bool operator==(const LargenessCertificate&) const = default;
};

/// Requires the deformation preconditions plus r != s - 1 and s >= 3.
void check_largeness_preconditions(const display::Display& D0, Rational lambda);

/// Certifies graded pieces 0, 1 and s and the closure step. Each failing
/// leg names its stratum; the verdict is "large" only when every leg holds.
LargenessCertificate largeness_certificate(const display::DeformationSpec& spec,
                                           const LargenessOptions& opt = {});

}  // namespace slopekit::monodromy
