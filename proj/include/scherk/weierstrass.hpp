#pragma once

#include <array>

#include "scherk/moebius.hpp"
#include "scherk/params_geometry.hpp"

namespace scherk {

/// Enneper-Weierstrass data of one surface:
///   p(z) = b (1 - conj(a) z)^2 / ((z^2 - 1)(z^2 - e^{2i alpha}))
///   q(z) = e^{i theta} (z - a) / (1 - conj(a) z)
struct WeierstrassData {
  ScherkParams params;
  double alpha = 0.0;
  double beta = 0.0;
  cplx a;
  cplx b;
  double theta = 0.0;
  double delta = 0.0;  // arg a
};

struct PhiTriple {
  cplx phi1;
  cplx phi2;
  cplx phi3;
};

WeierstrassData make_weierstrass(const ScherkParams& params, const QuadGeometry& geom,
                                 const MoebiusMap& moebius);
WeierstrassData make_weierstrass(const ScherkParams& params);

/// Rational closed form of a.
cplx compute_a(const ScherkParams& params);
/// Polar form |a| (cos delta + i sin delta) with the modulus and argument
/// evaluated independently of the rational form.
cplx a_polar(const ScherkParams& params);
double a_modulus(const ScherkParams& params);
double a_argument(const ScherkParams& params);

cplx compute_b(const ScherkParams& params, const QuadGeometry& geom);
/// |b|^2 in terms of sin p sin(q - p) only.
double b_modulus_squared(const ScherkParams& params);

/// Coefficients {z^2, z, 1} of (z^2 - 1)(z^2 - e^{2i alpha}) h'(z), expanded
/// from the partial-fraction form of h'. The z-coefficient equals
/// -2 conj(a) b.
std::array<cplx, 3> numerator_coefficients(const QuadGeometry& geom);

/// theta from the rotation factor of the Moebius map, wrapped to (-pi, pi].
double compute_theta(const ScherkParams& params, const QuadGeometry& geom,
                     const MoebiusMap& moebius);
double compute_theta(const ScherkParams& params);

/// q(0)^2 = g'(0)/h'(0) in closed form.
cplx q0_squared(const ScherkParams& params, const QuadGeometry& geom);

cplx p_fn(const WeierstrassData& data, cplx z);
cplx q_fn(const WeierstrassData& data, cplx z);
cplx q_prime(const WeierstrassData& data, cplx z);
PhiTriple phi_triple(const WeierstrassData& data, cplx z);
/// Second Beltrami coefficient g'/h' = q^2.
cplx dilatation(const WeierstrassData& data, cplx z);

// Partial-fraction forms built straight from the step boundary datum; they
// share no code with p_fn / q_fn.
cplx h_prime_partial(const QuadGeometry& geom, cplx z);
cplx g_prime_partial(const QuadGeometry& geom, cplx z);
cplx phi1_partial(const QuadGeometry& geom, cplx z);
cplx phi2_partial(const QuadGeometry& geom, cplx z);
/// -2i e^{i theta} b (z - a)(1 - conj(a) z) / ((z^2 - 1)(z^2 - e^{2i alpha}))
cplx phi3_factorized(const WeierstrassData& data, cplx z);

}  // namespace scherk
