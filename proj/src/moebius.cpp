#include "scherk/moebius.hpp"

#include <cmath>

#include "scherk/errors.hpp"

namespace scherk {

namespace {
constexpr double kDetTol = 1e-12;
constexpr double kPoleTol = 1e-14;
}  // namespace

MoebiusMap build_moebius(const ScherkParams& params, const QuadGeometry& geom) {
  // Cross-ratio form:
  //   M(z) = 1 + (z - 1) / (c1 (z - e^{ia}) + c2 (z + 1))
  // with c1 = 2 / ((e^{ia} + 1)(e^{iq} - 1)),
  //      c2 = (e^{ia} - 1) / ((e^{ia} + 1)(e^{ip} - 1)).
  const cplx ea = std::polar(1.0, geom.alpha);
  const cplx eq = std::polar(1.0, params.q);
  const cplx ep = std::polar(1.0, params.p);
  const cplx c1 = 2.0 / ((ea + 1.0) * (eq - 1.0));
  const cplx c2 = (ea - 1.0) / ((ea + 1.0) * (ep - 1.0));

  MoebiusMap m;
  m.d1 = c1 + c2;
  m.d0 = c2 - c1 * ea;
  m.n1 = m.d1 + 1.0;
  m.n0 = m.d0 - 1.0;

  const double scale = std::abs(m.n1) * std::abs(m.d0) + std::abs(m.n0) * std::abs(m.d1);
  if (!(std::abs(m.determinant()) > kDetTol * scale)) {
    throw DegenerateError("Moebius determinant vanishes");
  }
  if (std::abs(m.d0) > 0.0) {
    const cplx inv = 1.0 / m.d0;
    m.n1 *= inv;
    m.n0 *= inv;
    m.d1 *= inv;
    m.d0 = 1.0;
  }
  return m;
}

cplx apply(const MoebiusMap& map, cplx z) {
  const cplx den = map.d1 * z + map.d0;
  const double scale = std::abs(map.d1) * std::abs(z) + std::abs(map.d0);
  if (std::abs(den) <= kPoleTol * scale) {
    throw PoleError("Moebius map evaluated at its pole");
  }
  return (map.n1 * z + map.n0) / den;
}

cplx zero_of(const MoebiusMap& map) {
  if (std::abs(map.n1) <= kPoleTol * (std::abs(map.n0) + 1.0)) {
    throw DegenerateError("Moebius map has no finite zero");
  }
  return -map.n0 / map.n1;
}

cplx rotation_factor(const MoebiusMap& map) { return map.n1 / map.d0; }

}  // namespace scherk
