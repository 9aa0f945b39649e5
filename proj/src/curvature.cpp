#include "scherk/curvature.hpp"

#include <algorithm>
#include <cmath>

#include "scherk/errors.hpp"

namespace scherk {

double curvature_general(const WeierstrassData& d, cplx z) {
  const double w = std::norm(1.0 - std::conj(d.a) * z);
  const double dq = (1.0 - std::norm(d.a)) / w;  // |q'(z)|
  const double q2 = std::norm(q_fn(d, z));
  const double s = (1.0 + q2) * (1.0 + q2);
  return -4.0 * dq * dq / (std::norm(p_fn(d, z)) * s * s);
}

double curvature_modulus_form(const WeierstrassData& d, cplx z0) {
  const double one_minus = 1.0 - std::norm(d.a);
  const cplx z2 = z0 * z0;
  const double num = std::norm(z2 - 1.0) * std::norm(z2 - std::polar(1.0, 2.0 * d.alpha));
  const double den = std::norm(1.0 - z0 * std::conj(d.a)) + std::norm(z0 - d.a);
  const double den2 = den * den;
  return -4.0 * one_minus * one_minus / std::norm(d.b) * num / (den2 * den2);
}

double curvature_sin_form(const ScherkParams& params, double alpha, cplx a, cplx z0,
                          bool plus_exponent) {
  const double sps = std::sin(params.p) * std::sin(params.q - params.p);
  const double root = 1.0 + std::sqrt(sps);
  const double root2 = root * root;
  const cplx z2 = z0 * z0;
  const cplx turn = std::polar(1.0, (plus_exponent ? 2.0 : -2.0) * alpha);
  const double num = std::norm(1.0 - z2) * std::norm(1.0 - z2 * turn);
  const double den =
      (1.0 + std::norm(z0)) * (1.0 + std::norm(a)) - 4.0 * (a * std::conj(z0)).real();
  const double den2 = den * den;
  return -4.0 * kPi * kPi * (1.0 + sps) / (root2 * root2) * num / (den2 * den2);
}

CurvatureReport curvature_at_zero(const ScherkSurface& s) {
  const ZeroResult zero = locate_zero(s);
  CurvatureReport r;
  r.p = s.params.p;
  r.q = s.params.q;
  r.beta = s.geom.beta;
  r.alpha = s.geom.alpha;
  r.theta = s.data.theta;
  r.z_zero = zero.z_zero;
  r.a = s.data.a;
  r.b = s.data.b;
  r.label = zero.label;
  r.residual = zero.residual;
  r.iterations = zero.iterations;
  r.K = curvature_modulus_form(s.data, zero.z_zero);
  r.K_cross = curvature_general(s.data, zero.z_zero);
  r.K_sin_form = curvature_sin_form(s.params, s.geom.alpha, s.data.a, zero.z_zero, false);
  r.K_sin_form_plus =
      curvature_sin_form(s.params, s.geom.alpha, s.data.a, zero.z_zero, true);
  r.re_za = (zero.z_zero * std::conj(s.data.a)).real();
  r.bound_margin = kHeinzConstant - std::abs(r.K);
  return r;
}

CurvatureReport curvature_at_zero(const ScherkParams& params) {
  return curvature_at_zero(make_region_surface(params));
}

std::vector<std::string> invariant_failures(const CurvatureReport& r) {
  std::vector<std::string> failed;
  if (!(r.K < 0.0)) failed.emplace_back("K < 0");
  if (!(std::abs(r.K - r.K_cross) <= 1e-9 * std::abs(r.K))) {
    failed.emplace_back("|K - K_cross| <= 1e-9 |K|");
  }
  if (!(r.re_za <= 1e-12)) failed.emplace_back("Re(z0 conj a) <= 1e-12");
  if (!(r.bound_margin >= -1e-9)) failed.emplace_back("bound_margin >= -1e-9");
  if (!(r.residual < kZeroResidualTarget)) failed.emplace_back("|f(z0)| < 1e-10");
  return failed;
}

ScalarProductCheck scalar_product_sign(const ScherkParams& params, cplx z_zero, cplx a) {
  const double p = params.p;
  const double q = params.q;
  const double sps = std::sin(p) * std::sin(q - p);

  ScalarProductCheck c;
  c.re_za = (z_zero * std::conj(a)).real();
  c.t0 = std::arg(z_zero);
  if (c.t0 < 0.0) c.t0 += kTwoPi;
  c.bracket = std::sin(0.5 * q - p) * std::cos(c.t0) +
              std::cos(0.5 * q) * std::sin(c.t0) * std::sqrt(sps);
  const double denom = std::sin(0.5 * q) * std::sqrt(std::max(0.0, 1.0 - sps));
  c.re_za_factored = denom > 0.0 ? -std::abs(z_zero) * std::abs(a) / denom * c.bracket : 0.0;

  // Quadrant of t0 in each strict case; the bracket is then a sum of
  // two non-negative terms.
  double lo = 0.0;
  double hi = kTwoPi;
  switch (in_region_R(params) ? classify_case(params) : CaseLabel::Center) {
    case CaseLabel::A: lo = 0.5 * kPi; hi = kPi; break;
    case CaseLabel::B: lo = 1.5 * kPi; hi = kTwoPi; break;
    case CaseLabel::C: lo = kPi; hi = 1.5 * kPi; break;
    case CaseLabel::D: lo = 0.0; hi = 0.5 * kPi; break;
    default: break;
  }
  c.t0_in_quadrant = c.t0 >= lo && c.t0 <= hi;
  // The bracket carries the scale |z0| |a|; compare against that scale.
  c.bracket_nonnegative = c.bracket * std::abs(z_zero) * std::abs(a) >= -1e-12;
  return c;
}

BoundChain bound_chain(const CurvatureReport& r) {
  BoundChain b;
  b.abs_K = std::abs(r.K);
  const cplx z2 = r.z_zero * r.z_zero;
  const double s = 1.0 + std::norm(r.z_zero);
  const double s2 = s * s;
  b.middle = kHeinzConstant * std::norm(1.0 - z2) *
             std::norm(z2 - std::polar(1.0, 2.0 * r.alpha)) / (s2 * s2);
  constexpr double kSlack = 1e-12;
  b.holds = b.abs_K <= b.middle * (1.0 + kSlack) && b.middle <= b.cap * (1.0 + kSlack);
  return b;
}

HeinzBound heinz_bound(double R) {
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("disk radius must be positive");
  return {R, kHeinzConstant / (R * R)};
}

}  // namespace scherk
