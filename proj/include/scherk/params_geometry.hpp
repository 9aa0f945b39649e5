#pragma once

#include <array>
#include <complex>
#include <numbers>
#include <string_view>

namespace scherk {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Angle-space tolerance for degeneracy and case-boundary decisions.
inline constexpr double kAngleTol = 1e-10;

/// One member of the two-parameter Scherk family: the first two jump points
/// s1 = p and s2 = q of the step boundary datum (the third is pi + q - p).
struct ScherkParams {
  double p = 0.0;
  double q = 0.0;
};

/// Throws DomainError unless 0 < p < q, q - p < pi and sin p, sin(q - p) > 0.
void validate(const ScherkParams& params);

/// Derived angles of the bicentric target quadrilateral.
struct QuadGeometry {
  ScherkParams params;
  double beta = 0.0;
  double alpha = 0.0;
  double cos_alpha = 0.0;
  double sin_alpha = 0.0;
  // Vertex angles; the vertices are e^{ip}, e^{ix}, e^{iy}, e^{is} in
  // counterclockwise order.
  double x = 0.0;
  double y = 0.0;
  double s = 0.0;
  std::array<cplx, 4> vertices{};
};

QuadGeometry derive_geometry(const ScherkParams& params);

/// Checks p <= x <= y <= s <= 2 pi + p (up to kAngleTol).
bool ordering_holds(const QuadGeometry& geom);

/// Strict interior test of the origin against the quadrilateral.
/// Throws DegenerateError when two vertices coincide.
bool contains_origin(const QuadGeometry& geom);

/// Membership in the admissible region; never throws.
bool in_region_R(const ScherkParams& params);

enum class CaseLabel {
  A,  // q < pi, q < 2p
  B,  // q > pi, q > 2p
  C,  // pi < q < 2p
  D,  // 2p < q < pi
  BoundaryTrapezoidQ2P,
  BoundaryTrapezoidQPi,
  Center,
};

CaseLabel classify_case(const ScherkParams& params);

std::string_view to_string(CaseLabel label);

}  // namespace scherk
