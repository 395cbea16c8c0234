#pragma once

#include <string>
#include <vector>

#include "slopekit/display/display.hpp"
#include "slopekit/display/strata.hpp"

namespace slopekit::display {

/// One symbolic term p^y <u_{x,y}>^{sigma^{h-d-y}} F^{h-x} of the deformed
/// characteristic polynomial.
struct DeformationTerm {
  Point xy;
  int layer = 0;
  int twist = 0;
  std::string symbol;
  bool operator==(const DeformationTerm&) const = default;
};

struct DeformationSpec {
  Display base;
  Rational lambda;
  Stratification strata;
  Display deformed;
  CharPoly chi0;
  CharPoly chi;
  std::vector<DeformationTerm> terms;
};

/// Specializes the universal deformation of D0 by u_{x,y} -> u_{x,y} on
/// P(*) and 0 elsewhere. Requires D0 in normal form and lambda attainable
/// and strictly below every slope of D0.
DeformationSpec deformation(const Display& D0, Rational lambda);

/// Checks the deformation preconditions; throws Precondition or
/// NotNormalForm with the reason.
void check_deformation_preconditions(const Display& D0, Rational lambda);

}  // namespace slopekit::display
