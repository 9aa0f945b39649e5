#include "scherk/harmonic_map.hpp"

#include <cmath>

#include "scherk/errors.hpp"
#include "scherk/quadrature.hpp"

namespace scherk {

cplx BoundaryStep::at(double psi) const {
  psi = psi - kTwoPi * std::floor(psi / kTwoPi);
  for (std::size_t k = 0; k < 4; ++k) {
    if (psi < start[k + 1]) return value[k];
  }
  return value[3];
}

BoundaryStep boundary_step(const QuadGeometry& geom) {
  BoundaryStep step;
  step.start = {0.0, geom.alpha, kPi, kPi + geom.alpha, kTwoPi};
  step.value = {geom.vertices[1], geom.vertices[2], geom.vertices[3], geom.vertices[0]};
  return step;
}

double log_integral(double gamma, cplx z) {
  const double r = std::abs(z);
  const double t = std::arg(z);
  // 1 - r cos(gamma - t) > 0 on the open disk, so atan2 is the principal
  // arctangent of the ratio.
  return std::atan2(r * std::sin(gamma - t), 1.0 - r * std::cos(gamma - t));
}

cplx f_zero(const QuadGeometry& geom) {
  const double p = geom.params.p;
  const double q = geom.params.q;
  return (geom.alpha * std::polar(std::cos(p - q), 2.0 * geom.beta) +
          (kPi - geom.alpha) * std::cos(p)) /
         kPi;
}

cplx f_closed(const QuadGeometry& geom, cplx z) {
  const double p = geom.params.p;
  const double q = geom.params.q;
  const double b2 = 2.0 * geom.beta;
  const double al = geom.alpha;

  const double l_alpha = log_integral(al, z);
  const double l_pi = log_integral(kPi, z);
  const double l_pi_alpha = log_integral(kPi + al, z);
  const double l_zero = log_integral(0.0, z);

  const double c1 = std::cos(q - p + b2) - std::cos(p);
  const double c2 = std::cos(p) - std::cos(p - q + b2);
  const double u = (c1 * l_alpha + c2 * l_pi - c2 * l_pi_alpha - c1 * l_zero) / kPi;

  const double s1 = std::sin(q - p + b2) + std::sin(p);
  const double s2 = std::sin(p) + std::sin(p - q + b2);
  const double s3 = std::sin(p) - std::sin(p - q + b2);
  const double s4 = std::sin(q - p + b2) - std::sin(p);
  const double v = (s1 * l_alpha - s2 * l_pi - s3 * l_pi_alpha - s4 * l_zero) / kPi;

  return cplx{u, v} + f_zero(geom);
}

cplx poisson_oracle(const QuadGeometry& geom, cplx z, int panels) {
  if (!(std::abs(z) <= 0.999)) throw DomainError("poisson_oracle requires |z| <= 0.999");
  if (panels < 64) throw DomainError("poisson_oracle requires at least 64 panels per arc");

  const BoundaryStep step = boundary_step(geom);
  const double r = std::abs(z);
  const double t = std::arg(z);
  auto kernel = [r, t](double psi) {
    return (1.0 - r * r) / (1.0 + r * r - 2.0 * r * std::cos(t - psi)) / kTwoPi;
  };
  cplx total{0.0, 0.0};
  for (std::size_t k = 0; k < 4; ++k) {
    const double weight =
        quad::composite_gauss<8>(kernel, step.start[k], step.start[k + 1], panels);
    total += weight * step.value[k];
  }
  return total;
}

double T_closed(const WeierstrassData& d, cplx z) {
  const cplx em = std::polar(1.0, -d.alpha);
  const cplx prefactor = d.b * std::polar(1.0, d.theta - d.alpha) / (em - std::conj(em));
  // Re(1 - z^2) and Re(1 - e^{-2ia} z^2) are at least 1 - |z|^2 > 0, so the
  // principal logs and atanh need no branch tracking.
  const cplx log_term = std::log(1.0 - z * z) - std::log(1.0 - em * em * z * z);
  const cplx bracket = (1.0 + std::norm(d.a)) * log_term +
                       4.0 * d.a.real() * std::atanh(z) -
                       4.0 * (d.a * em).real() * std::atanh(em * z);
  return (prefactor * bracket).imag();
}

std::array<cplx, 4> boundary_midpoints(const QuadGeometry& geom) {
  const auto& v = geom.vertices;
  return {0.5 * (v[0] + v[1]), 0.5 * (v[1] + v[2]), 0.5 * (v[2] + v[3]),
          0.5 * (v[3] + v[0])};
}

SurfacePoint surface_point(const ScherkSurface& surface, cplx z) {
  const cplx f = f_closed(surface.geom, z);
  return {z, f.real(), f.imag(), T_closed(surface.data, z)};
}

}  // namespace scherk
