#pragma once

#include <string>
#include <vector>

#include "scherk/surface.hpp"
#include "scherk/sweep.hpp"

namespace scherk {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured discrepancy (0 for boolean checks)
  double tolerance = 0.0;
};

/// Fixed interior sample: radii {0.1, 0.45, 0.8}, seven angles offset from
/// the jump points.
std::vector<cplx> sample_points();

/// Wirtinger derivatives of the closed-form f by central differences.
struct Wirtinger {
  cplx f_z;
  cplx f_zbar;
};
Wirtinger wirtinger_fd(const QuadGeometry& geom, cplx z, double h = 1e-5);

/// |conj(f_zbar) - q^2 f_z| with finite-difference derivatives.
double beltrami_residual(const ScherkSurface& surface, cplx z);

/// Largest five-point Laplacian among u, v and T.
double max_laplacian(const ScherkSurface& surface, cplx z, double h = 1e-4);

/// Re of the integral of phi3 along the segment [0, z] (Gauss-Legendre).
double T_quadrature(const WeierstrassData& data, cplx z, int panels = 32);

/// |phi1^2 + phi2^2 + phi3^2|.
double null_residual(const WeierstrassData& data, cplx z);

/// Every per-module property for one surface; the surface may be altered
/// (e.g. theta) to exercise failures.
std::vector<CheckResult> verify_point(const ScherkSurface& surface);

/// Runs the sweep and verify_point on every node of it.
std::vector<CheckResult> verify_sweep(const SweepSpec& spec);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace scherk
