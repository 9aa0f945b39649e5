#include "scherk/weierstrass.hpp"

#include <cmath>

#include "scherk/errors.hpp"

namespace scherk {

namespace {

constexpr cplx kI{0.0, 1.0};

double radicand(const ScherkParams& params) {
  validate(params);
  const double sps = std::sin(params.p) * std::sin(params.q - params.p);
  if (!(sps > 0.0)) {
    throw DomainError("sin p * sin(q - p) must be positive");
  }
  return sps;
}

cplx e2ia(double alpha) { return std::polar(1.0, 2.0 * alpha); }

}  // namespace

cplx compute_a(const ScherkParams& params) {
  const double sq = std::sqrt(radicand(params));
  const double p = params.p;
  const double q = params.q;
  const double half_q = std::sin(0.5 * q);
  const cplx num{std::cos(q - p) - std::cos(p), -std::sin(q)};
  // 1 - cos q written as 2 sin^2(q/2) to avoid cancellation for small q.
  const cplx den{2.0 * half_q * half_q + 2.0 * sq, std::sin(q - p) - std::sin(p)};
  return num / den;
}

double a_modulus(const ScherkParams& params) {
  const double sq = std::sqrt(radicand(params));
  return std::sqrt((1.0 - sq) / (1.0 + sq));
}

double a_argument(const ScherkParams& params) {
  const double sq = std::sqrt(radicand(params));
  // cos(delta) and sin(delta) share the positive factor
  // 1 / (sin(q/2) sqrt(1 - sin p sin(q - p))); atan2 does not need it.
  return std::atan2(-std::cos(0.5 * params.q) * sq, -std::sin(0.5 * params.q - params.p));
}

cplx a_polar(const ScherkParams& params) {
  return std::polar(a_modulus(params), a_argument(params));
}

cplx compute_b(const ScherkParams& params, const QuadGeometry& geom) {
  radicand(params);
  const cplx ea = std::polar(1.0, geom.alpha);
  const cplx e2b = std::polar(1.0, 2.0 * geom.beta);
  const double sp = std::sin(params.p);
  const double spq = std::sin(params.p - params.q);
  return -ea * ((1.0 + ea) * sp + e2b * (ea - 1.0) * spq) / kPi;
}

double b_modulus_squared(const ScherkParams& params) {
  const double sps = radicand(params);
  const double t = sps + std::sqrt(sps);
  return 4.0 * t * t / (kPi * kPi * (1.0 + sps));
}

std::array<cplx, 3> numerator_coefficients(const QuadGeometry& geom) {
  const cplx X = geom.vertices[1];
  const cplx Y = geom.vertices[2];
  const cplx S = geom.vertices[3];
  const cplx P = geom.vertices[0];
  const cplx e = std::polar(1.0, geom.alpha);
  const cplx e2 = e * e;
  const cplx scale = 1.0 / (2.0 * kPi * kI);
  const cplx c2 = e * (X - Y) - (Y - S) - e * (S - P) + P - X;
  const cplx c1 = -(X - Y + e2 * (Y - S) + S - P + e2 * (P - X));
  const cplx c0 = -e * (X - Y) + e2 * (Y - S) + e * (S - P) - e2 * (P - X);
  return {c2 * scale, c1 * scale, c0 * scale};
}

double compute_theta(const ScherkParams& params, const QuadGeometry& geom,
                     const MoebiusMap& moebius) {
  // The pulled-back dilatation is -e^{-i(2 beta + q)} M(z)^2 and
  // M(z) = lambda (z - a)/(1 - conj(a) z), so
  // e^{2i theta} = -e^{-i(2 beta + q)} lambda^2. The root with the +pi/2
  // shift is the one that reduces to -pi/4 on the square.
  const double lambda_arg = std::arg(rotation_factor(moebius));
  const double theta = lambda_arg - geom.beta - 0.5 * params.q + 0.5 * kPi;
  return std::remainder(theta, kTwoPi);
}

double compute_theta(const ScherkParams& params) {
  const QuadGeometry geom = derive_geometry(params);
  return compute_theta(params, geom, build_moebius(params, geom));
}

cplx q0_squared(const ScherkParams& params, const QuadGeometry& geom) {
  const cplx ea = std::polar(1.0, geom.alpha);
  const cplx e2b = std::polar(1.0, 2.0 * geom.beta);
  const double sp = std::sin(params.p);
  const double spq = std::sin(params.p - params.q);
  const cplx num = -e2b * (1.0 + ea) * sp - (ea - 1.0) * spq;
  const cplx den = (1.0 + ea) * sp + e2b * (ea - 1.0) * spq;
  return std::conj(e2b) * num / den;
}

WeierstrassData make_weierstrass(const ScherkParams& params, const QuadGeometry& geom,
                                 const MoebiusMap& moebius) {
  WeierstrassData d;
  d.params = params;
  d.alpha = geom.alpha;
  d.beta = geom.beta;
  d.a = compute_a(params);
  d.b = compute_b(params, geom);
  d.theta = compute_theta(params, geom, moebius);
  d.delta = a_argument(params);
  return d;
}

WeierstrassData make_weierstrass(const ScherkParams& params) {
  const QuadGeometry geom = derive_geometry(params);
  return make_weierstrass(params, geom, build_moebius(params, geom));
}

cplx p_fn(const WeierstrassData& d, cplx z) {
  const cplx w = 1.0 - z * std::conj(d.a);
  return d.b * w * w / ((z * z - 1.0) * (z * z - e2ia(d.alpha)));
}

cplx q_fn(const WeierstrassData& d, cplx z) {
  return std::polar(1.0, d.theta) * (z - d.a) / (1.0 - z * std::conj(d.a));
}

cplx q_prime(const WeierstrassData& d, cplx z) {
  const cplx w = 1.0 - z * std::conj(d.a);
  return std::polar(1.0, d.theta) * (1.0 - std::norm(d.a)) / (w * w);
}

PhiTriple phi_triple(const WeierstrassData& d, cplx z) {
  const cplx p = p_fn(d, z);
  const cplx q = q_fn(d, z);
  const cplx q2 = q * q;
  return {p * (1.0 + q2), -kI * p * (1.0 - q2), -2.0 * kI * p * q};
}

cplx dilatation(const WeierstrassData& d, cplx z) {
  const cplx q = q_fn(d, z);
  return q * q;
}

namespace {

// Sum over the four jumps of the boundary datum: values[k] is the jump
// across the pole poles[k].
cplx pole_sum(const std::array<cplx, 4>& jumps, double alpha, cplx z) {
  const cplx ea = std::polar(1.0, alpha);
  return jumps[0] / (z - ea) + jumps[1] / (z + 1.0) + jumps[2] / (z + ea) +
         jumps[3] / (z - 1.0);
}

}  // namespace

cplx h_prime_partial(const QuadGeometry& g, cplx z) {
  const auto& v = g.vertices;  // e^{ip}, e^{ix}, e^{iy}, e^{is}
  return pole_sum({v[1] - v[2], v[2] - v[3], v[3] - v[0], v[0] - v[1]}, g.alpha, z) /
         (2.0 * kPi * kI);
}

cplx g_prime_partial(const QuadGeometry& g, cplx z) {
  std::array<cplx, 4> v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = std::conj(g.vertices[i]);
  return pole_sum({v[1] - v[2], v[2] - v[3], v[3] - v[0], v[0] - v[1]}, g.alpha, z) /
         (2.0 * kPi * kI);
}

cplx phi1_partial(const QuadGeometry& g, cplx z) {
  const double cp = std::cos(g.params.p);
  const double cx = std::cos(g.x);
  const double cy = std::cos(g.y);
  const double cs = std::cos(g.s);
  return pole_sum({cx - cy, cy - cs, cs - cp, cp - cx}, g.alpha, z) / (kPi * kI);
}

cplx phi2_partial(const QuadGeometry& g, cplx z) {
  const double sp = std::sin(g.params.p);
  const double sx = std::sin(g.x);
  const double sy = std::sin(g.y);
  const double ss = std::sin(g.s);
  return pole_sum({sx - sy, sy - ss, ss - sp, sp - sx}, g.alpha, z) / (kPi * kI);
}

cplx phi3_factorized(const WeierstrassData& d, cplx z) {
  return -2.0 * kI * std::polar(1.0, d.theta) * d.b * (z - d.a) *
         (1.0 - z * std::conj(d.a)) / ((z * z - 1.0) * (z * z - e2ia(d.alpha)));
}

}  // namespace scherk
