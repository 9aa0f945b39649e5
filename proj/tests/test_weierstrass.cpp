#include <doctest.h>

#include "scherk/harmonic_map.hpp"
#include "scherk/surface.hpp"
#include "scherk/weierstrass.hpp"
#include "support.hpp"

using namespace scherk;
using namespace scherk::testing;

namespace {

double rel(cplx x, cplx y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); }

// Wirtinger derivatives of the closed-form harmonic map; shares nothing with
// the Weierstrass evaluators.
std::pair<cplx, cplx> wirtinger(const QuadGeometry& g, cplx z) {
  const double h = 1e-5;
  const cplx ih{0, h};
  const cplx fx = (f_closed(g, z + h) - f_closed(g, z - h)) / (2 * h);
  const cplx fy = (f_closed(g, z + ih) - f_closed(g, z - ih)) / (2 * h);
  const cplx i{0, 1};
  return {0.5 * (fx - i * fy), 0.5 * (fx + i * fy)};
}

}  // namespace

TEST_CASE("a at the reference points") {
  CHECK(std::abs(compute_a(kSquare)) < 1e-15);
  CHECK(std::abs(compute_a(kThirds) - cplx(0, -(2 - std::sqrt(3.0)))) < 1e-12);
  CHECK(std::abs(compute_a(kTilted) - cplx(0.0752828117368420, -0.0248635806200079)) < 1e-13);
  CHECK(a_modulus(kThirds) == doctest::Approx(2 - std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("rational, polar and Moebius forms of a agree") {
  for (const auto& prm : region_sample(200)) {
    const cplx a = compute_a(prm);
    CHECK(std::abs(a_polar(prm) - a) < 1e-10);
    CHECK(std::abs(std::abs(a) - a_modulus(prm)) < 1e-10);
    CHECK(std::abs(a) < 1.0);
    if (std::abs(a) > 1e-6) {
      CHECK(std::abs(std::remainder(std::arg(a) - a_argument(prm), kTwoPi)) < 1e-8);
    }
  }
}

TEST_CASE("|b|^2 closed forms") {
  const QuadGeometry gs = derive_geometry(kSquare);
  CHECK(std::norm(compute_b(kSquare, gs)) == doctest::Approx(8 / (kPi * kPi)).epsilon(1e-14));
  CHECK(b_modulus_squared(kSquare) == doctest::Approx(8 / (kPi * kPi)).epsilon(1e-14));
  const double thirds = (21 + 12 * std::sqrt(3.0)) / (7 * kPi * kPi);
  CHECK(std::abs(b_modulus_squared(kThirds) - thirds) < 1e-14);
  CHECK(std::abs(b_modulus_squared(kThirds) - 0.60480944455823444) < 1e-14);
  CHECK(std::abs(std::norm(compute_b(kThirds, derive_geometry(kThirds))) - thirds) < 1e-14);
  CHECK(std::abs(b_modulus_squared(kTilted) - 0.79041206524585378) < 1e-14);
  for (const auto& prm : region_sample(200)) {
    CHECK(std::abs(std::norm(compute_b(prm, derive_geometry(prm))) - b_modulus_squared(prm)) <
          1e-10);
  }
}

TEST_CASE("expanded numerator coefficients are b conj(a)^2, -2 conj(a) b, b") {
  for (const auto& prm : region_sample(200)) {
    const WeierstrassData d = make_weierstrass(prm);
    const auto k = numerator_coefficients(derive_geometry(prm));
    const cplx ac = std::conj(d.a);
    CHECK(std::abs(k[0] - d.b * ac * ac) < 1e-10);
    CHECK(std::abs(k[1] + 2.0 * ac * d.b) < 1e-10);
    CHECK(std::abs(k[2] - d.b) < 1e-10);
  }
}

TEST_CASE("theta reference values and the q(0)^2 identity") {
  CHECK(compute_theta(kSquare) == doctest::Approx(-kPi / 4).epsilon(1e-14));
  CHECK(std::abs(compute_theta(kThirds) + std::atan(std::sqrt(3.0) / 2)) < 1e-12);
  CHECK(std::abs(compute_theta(kTilted) - (-0.7941816209)) < 1e-9);
  for (const auto& prm : region_sample(300)) {
    const QuadGeometry g = derive_geometry(prm);
    const WeierstrassData d = make_weierstrass(prm);
    const cplx q0 = q_fn(d, 0.0);
    CHECK(std::abs(q0 * q0 - q0_squared(prm, g)) < 1e-10);
    CHECK(d.theta > -kPi);
    CHECK(d.theta <= kPi);
  }
}

TEST_CASE("negative control: the bare arctangent theta breaks the q(0)^2 identity") {
  WeierstrassData d = make_weierstrass(kThirds);
  d.theta = std::atan(std::cos(kThirds.p - kThirds.q) * std::tan(kThirds.p));
  const cplx q0 = q_fn(d, 0.0);
  CHECK(std::abs(q0 * q0 - q0_squared(kThirds, derive_geometry(kThirds))) > 1e-3);
}

TEST_CASE("p at special points") {
  const WeierstrassData sq = make_weierstrass(kSquare);
  CHECK(std::abs(p_fn(sq, 0.0) + sq.b) < 1e-15);
  for (const auto& prm : {kTilted, kCaseB, kCaseC, kCaseD}) {
    const WeierstrassData d = make_weierstrass(prm);
    const cplx a = d.a;
    const cplx e2a = std::polar(1.0, 2 * d.alpha);
    const cplx expect = d.b * std::pow(1 - std::norm(a), 2) / ((a * a - 1.0) * (a * a - e2a));
    CHECK(rel(p_fn(d, a), expect) < 1e-13);
  }
}

TEST_CASE("p and p q^2 match the partial fractions and the harmonic map") {
  for (const auto& prm : region_sample(40)) {
    const QuadGeometry g = derive_geometry(prm);
    const WeierstrassData d = make_weierstrass(prm);
    for (cplx z : disk_sample(100, 0.95)) {
      const cplx p = p_fn(d, z);
      const cplx q = q_fn(d, z);
      CHECK(rel(p, h_prime_partial(g, z)) < 1e-10);
      CHECK(rel(p * q * q, g_prime_partial(g, z)) < 1e-10);
    }
    for (cplx z : disk_sample(10, 0.8, 200)) {
      const auto [fz, fzbar] = wirtinger(g, z);
      CHECK(rel(p_fn(d, z), fz) < 1e-7);
      const cplx q = q_fn(d, z);
      CHECK(std::abs(p_fn(d, z) * q * q - std::conj(fzbar)) < 1e-7 * std::abs(fz));
    }
  }
  const WeierstrassData f = make_weierstrass(kTilted);
  CHECK(rel(p_fn(f, {0, 0.3}), h_prime_partial(derive_geometry(kTilted), {0, 0.3})) < 1e-10);
}

TEST_CASE("q special values") {
  for (const auto& prm : {kTilted, kThirds, kCaseB, kCaseC, kCaseD}) {
    const WeierstrassData d = make_weierstrass(prm);
    CHECK(std::abs(q_fn(d, d.a)) < 1e-15);
    CHECK(std::abs(q_fn(d, 0.0) + d.a * std::polar(1.0, d.theta)) < 1e-15);
    for (cplx z : disk_sample(20, 0.95)) {
      const double h = 1e-6;
      const cplx fd = (q_fn(d, z + h) - q_fn(d, z - h)) / (2 * h);
      CHECK(std::abs(q_prime(d, z) - fd) < 1e-8);
      CHECK(std::abs(q_fn(d, z)) < 1.0);
    }
  }
  const WeierstrassData sq = make_weierstrass(kSquare);
  for (cplx z : disk_sample(20, 0.95)) {
    CHECK(std::abs(q_fn(sq, z) - std::polar(1.0, -kPi / 4) * z) < 1e-14);
  }
}

TEST_CASE("Weierstrass triple") {
  const WeierstrassData fig = make_weierstrass(kTilted);
  const QuadGeometry gf = derive_geometry(kTilted);
  const cplx z0{0.2, 0.1};
  CHECK(rel(phi_triple(fig, z0).phi1, phi1_partial(gf, z0)) < 1e-10);
  CHECK(rel(phi_triple(fig, z0).phi2, phi2_partial(gf, z0)) < 1e-10);
  CHECK(std::abs(phi_triple(fig, fig.a).phi3) < 1e-15);

  for (const auto& prm : region_sample(60)) {
    const QuadGeometry g = derive_geometry(prm);
    const WeierstrassData d = make_weierstrass(prm);
    for (cplx z : disk_sample(30, 0.9)) {
      const PhiTriple phi = phi_triple(d, z);
      const cplx sum = phi.phi1 * phi.phi1 + phi.phi2 * phi.phi2 + phi.phi3 * phi.phi3;
      CHECK(std::abs(sum) < 1e-12);
      CHECK(rel(phi.phi1, phi1_partial(g, z)) < 1e-10);
      CHECK(rel(phi.phi2, phi2_partial(g, z)) < 1e-10);
      const cplx expect3 = cplx(0, -2) * p_fn(d, z) * q_fn(d, z);
      CHECK(std::abs(phi3_factorized(d, z) - expect3) < 1e-12 * std::max(1.0, std::abs(expect3)));
    }
  }
}

TEST_CASE("dilatation") {
  const WeierstrassData sq = make_weierstrass(kSquare);
  for (cplx z : disk_sample(20, 0.95)) {
    CHECK(std::abs(dilatation(sq, z) - cplx(0, -1) * z * z) < 1e-14);
  }
  const WeierstrassData d = make_weierstrass(kCaseC);
  CHECK(std::abs(dilatation(d, d.a)) < 1e-15);
  for (int k = 0; k < 16; ++k) {
    const cplx z = std::polar(1 - 1e-9, kTwoPi * k / 16 + 0.1);
    CHECK(std::abs(std::abs(dilatation(d, z)) - 1) < 1e-8);
    const cplx q = q_fn(d, z);
    CHECK(std::abs(dilatation(d, z) - q * q) < 1e-15);
  }
}
