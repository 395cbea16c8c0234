#include "slopekit/display/deformation.hpp"

#include "slopekit/error.hpp"

namespace slopekit::display {

void check_deformation_preconditions(const Display& D0, Rational lambda) {
  require(normal_form_check(D0), ErrorKind::NotNormalForm, "base display is not in normal form");
  require(lambda > 0 && lambda < 1, ErrorKind::Precondition, "slope must lie in (0,1)");
  const auto np0 = charpoly(D0).newton_polygon();
  require(lambda < np0.min_slope(), ErrorKind::Precondition,
          "slope " + to_string(lambda) + " is not below every slope of " + np0.to_compact());
  require(polygon::attainable(np0, lambda).has_value(), ErrorKind::Precondition,
          "slope " + to_string(lambda) + " is not attainable from " + np0.to_compact());
}

DeformationSpec deformation(const Display& D0, Rational lambda) {
  check_deformation_preconditions(D0, lambda);
  const auto chi0 = charpoly(D0);
  const int d = D0.d(), c = D0.c(), h = D0.h();
  auto st = strata(d, c, chi0.newton_polygon(), lambda);

  const auto& ops = D0.ops();
  FormalMatrix T(d, c, ops.zero());
  std::vector<DeformationTerm> terms;
  for (const auto& xy : st.P_star) {
    const auto [i, j] = position_of(xy, d);
    // a_{ij} receives t_{i,j+1}, which sits in column j + 1 - d of T.
    const auto name = u_symbol(xy);
    T.at(i, j + 1 - d) = ops.symbol(name);
    terms.push_back({xy, layer_index(lambda, xy), h - d - static_cast<int>(xy.y), name});
  }
  auto deformed = deform_with(D0, T);
  auto chi = charpoly(deformed);
  return DeformationSpec{D0, lambda, std::move(st), std::move(deformed), chi0, std::move(chi),
                         std::move(terms)};
}

}  // namespace slopekit::display
