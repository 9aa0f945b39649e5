#pragma once

#include <array>

#include "scherk/params_geometry.hpp"
#include "scherk/surface.hpp"
#include "scherk/weierstrass.hpp"

namespace scherk {

/// Point of the conformal minimal graph (u, v, T) over the parameter z.
struct SurfacePoint {
  cplx z;
  double u = 0.0;
  double v = 0.0;
  double T = 0.0;
};

/// Step boundary datum on the unit circle: value k on [start[k], start[k+1]).
struct BoundaryStep {
  std::array<double, 5> start{};
  std::array<cplx, 4> value{};

  cplx at(double psi) const;
};

BoundaryStep boundary_step(const QuadGeometry& geom);

/// Im of the integral of 1/(zeta - e^{i gamma}) along [0, z], |z| < 1.
/// Equals Im log(1 - e^{-i gamma} z) on the principal branch.
double log_integral(double gamma, cplx z);

/// f(0), the average of the boundary datum.
cplx f_zero(const QuadGeometry& geom);

/// Closed form u + i v + f(0) of the harmonic map.
cplx f_closed(const QuadGeometry& geom, cplx z);

/// Composite Gauss-Legendre evaluation of the Poisson integral of the step
/// datum, split at its four jumps. Requires |z| <= 0.999 and panels >= 64
/// (per arc); throws DomainError otherwise.
cplx poisson_oracle(const QuadGeometry& geom, cplx z, int panels);

/// Height coordinate T(z) = Re of the integral of phi3 along [0, z].
double T_closed(const WeierstrassData& data, cplx z);

/// Radial limits of f at the jump points: midpoints of the quadrilateral's
/// sides.
std::array<cplx, 4> boundary_midpoints(const QuadGeometry& geom);

SurfacePoint surface_point(const ScherkSurface& surface, cplx z);

}  // namespace scherk
