#pragma once

#include <string>
#include <vector>

#include "scherk/params_geometry.hpp"
#include "scherk/surface.hpp"
#include "scherk/weierstrass.hpp"
#include "scherk/zero_locator.hpp"

namespace scherk {

inline constexpr double kHeinzConstant = kPi * kPi / 2.0;

/// Gaussian curvature at the point of the graph above the origin.
struct CurvatureReport {
  double p = 0.0;
  double q = 0.0;
  double beta = 0.0;
  double alpha = 0.0;
  double theta = 0.0;
  cplx z_zero;
  cplx a;
  cplx b;
  CaseLabel label = CaseLabel::Center;
  double residual = 0.0;
  int iterations = 0;
  double K = 0.0;        // modulus form in a, b and z0
  double K_cross = 0.0;  // -4|q'|^2 / (|p|^2 (1 + |q|^2)^4) at z0
  // Form with sin p sin(q - p) substituted for |a|, |b|; K_sin_form uses
  // |1 - z0^2 e^{-2ia}|, K_sin_form_plus the e^{+2ia} variant.
  double K_sin_form = 0.0;
  double K_sin_form_plus = 0.0;
  double re_za = 0.0;  // Re(z0 conj(a))
  double bound_margin = 0.0;
};

/// Names of the report invariants that fail (empty when all hold).
std::vector<std::string> invariant_failures(const CurvatureReport& report);

double curvature_general(const WeierstrassData& data, cplx z);
double curvature_modulus_form(const WeierstrassData& data, cplx z0);
double curvature_sin_form(const ScherkParams& params, double alpha, cplx a, cplx z0,
                          bool plus_exponent);

CurvatureReport curvature_at_zero(const ScherkSurface& surface);
CurvatureReport curvature_at_zero(const ScherkParams& params);

/// Re(z0 conj(a)) and the per-case sign argument behind its non-positivity.
struct ScalarProductCheck {
  double re_za = 0.0;
  double re_za_factored = 0.0;
  // sin(q/2 - p) cos t0 + cos(q/2) sin t0 sqrt(sin p sin(q - p)); >= 0.
  double bracket = 0.0;
  double t0 = 0.0;  // arg z0 in [0, 2 pi)
  bool t0_in_quadrant = true;
  bool bracket_nonnegative = true;
};

ScalarProductCheck scalar_product_sign(const ScherkParams& params, cplx z_zero, cplx a);

/// |K| <= (pi^2/2) |1 - z0^2|^2 |z0^2 - e^{2ia}|^2 / (1 + |z0|^2)^4 <= pi^2/2.
struct BoundChain {
  double abs_K = 0.0;
  double middle = 0.0;
  double cap = kHeinzConstant;
  bool holds = false;
};

BoundChain bound_chain(const CurvatureReport& report);

struct HeinzBound {
  double R = 1.0;
  double bound = kHeinzConstant;
};

/// pi^2 / (2 R^2); DomainError for R <= 0.
HeinzBound heinz_bound(double R);

}  // namespace scherk
