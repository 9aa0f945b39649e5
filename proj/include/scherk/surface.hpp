#pragma once

#include "scherk/moebius.hpp"
#include "scherk/params_geometry.hpp"
#include "scherk/weierstrass.hpp"

namespace scherk {

/// Everything derived from (p, q) that the evaluators need, computed once.
struct ScherkSurface {
  ScherkParams params;
  QuadGeometry geom;
  MoebiusMap moebius;
  WeierstrassData data;
};

/// Throws DomainError / DegenerateError for invalid parameters. Does not
/// check origin containment; see in_region_R.
ScherkSurface make_surface(const ScherkParams& params);

/// Same as make_surface but also requires in_region_R.
ScherkSurface make_region_surface(const ScherkParams& params);

}  // namespace scherk
