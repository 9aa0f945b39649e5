#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "scherk/params_geometry.hpp"
#include "scherk/surface.hpp"

namespace scherk {

/// Open angular interval (lo, hi) with 0 <= lo < hi <= lo + 2 pi.
struct Sector {
  double lo = 0.0;
  double hi = 0.0;

  /// True if `angle` (any branch) lies in (lo - tol, hi + tol).
  bool contains(double angle, double tol = 0.0) const;
};

struct ZeroResult {
  cplx z_zero;
  double residual = 0.0;
  Sector sector;
  CaseLabel label = CaseLabel::Center;
  int iterations = 0;
  // Set for q = 2p or q = pi, where the sector is the union of the two
  // neighbouring sectors rather than a sharp claim.
  bool boundary = false;
};

/// Sector containing the zero for each of the four strict cases.
/// Boundary labels get the union of the two adjacent sectors. Throws
/// DomainError for Center.
Sector sector_of_case(CaseLabel label, const QuadGeometry& geom);

inline constexpr double kZeroResidualTarget = 1e-10;
inline constexpr int kNewtonBudget = 200;

/// Damped Newton on (u, v) with the exact Jacobian from f_z = p(z) and
/// f_zbar = conj(p(z) q(z)^2), seeded at radius 0.6 on the sector bisector.
/// Falls back to a polar scan of |f| if an attempt stalls. Throws
/// ConvergenceError once kNewtonBudget Newton steps are spent.
ZeroResult locate_zero(const ScherkSurface& surface);
ZeroResult locate_zero(const ScherkParams& params);

/// One of the four rays bounding the case sectors.
enum class Ray { Zero, Alpha, Pi, PiPlusAlpha };

std::string_view to_string(Ray ray);
double ray_angle(Ray ray, const QuadGeometry& geom);

/// Coefficients of tan(Psi) = P/Q for the radial curve r -> f(r e^{i phi}):
///   P = A (1 + r^2 + 2r cos a) + B (1 + r^2 - 2r cos a)
///   Q = C (1 + r^2 + 2r cos a) + D (1 + r^2 - 2r cos a)
/// so that P'Q - Q'P = 4 (1 - r^2)(AD - BC) cos a.
struct MonotonicityDiagnostic {
  Ray ray = Ray::Zero;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double D = 0.0;
  // Product-to-sum factorized forms of A, B, C, D and AD - BC.
  std::array<double, 4> factorized{};
  double ad_minus_bc = 0.0;
  double ad_minus_bc_factorized = 0.0;
  double cos_alpha = 0.0;
  int sign_pq = 0;  // sign of (AD - BC) cos a

  double factorization_residual() const;
  /// P'Q - Q'P from the expanded polynomials at radius r.
  double wronskian(double r) const;
  /// The closed form 4 (1 - r^2)(AD - BC) cos a.
  double wronskian_closed(double r) const;
};

MonotonicityDiagnostic monotonicity_diagnostic(const QuadGeometry& geom, Ray ray);

/// Known sign of P'Q - Q'P for the two rays that bound each case;
/// nullopt for rays the case does not use.
std::optional<int> documented_sign(CaseLabel label, Ray ray);

}  // namespace scherk
