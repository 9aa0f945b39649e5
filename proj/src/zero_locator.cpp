#include "scherk/zero_locator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scherk/errors.hpp"
#include "scherk/harmonic_map.hpp"
#include "scherk/weierstrass.hpp"

namespace scherk {

bool Sector::contains(double angle, double tol) const {
  for (double shift : {-kTwoPi, 0.0, kTwoPi}) {
    const double a = angle + shift;
    if (a > lo - tol && a < hi + tol) return true;
  }
  return false;
}

Sector sector_of_case(CaseLabel label, const QuadGeometry& geom) {
  const double al = geom.alpha;
  const double q = geom.params.q;
  const double p = geom.params.p;
  switch (label) {
    case CaseLabel::A: return {al, kPi};
    case CaseLabel::B: return {kPi + al, kTwoPi};
    case CaseLabel::C: return {kPi, kPi + al};
    case CaseLabel::D: return {0.0, al};
    case CaseLabel::BoundaryTrapezoidQ2P:
      // q = 2p: between D and A below pi, between C and B above.
      return q < kPi ? Sector{0.0, kPi} : Sector{kPi, kTwoPi};
    case CaseLabel::BoundaryTrapezoidQPi:
      // q = pi: between A and C when q < 2p, between B and D otherwise.
      return q < 2.0 * p ? Sector{al, kPi + al} : Sector{kPi + al, kTwoPi + al};
    case CaseLabel::Center:
      break;
  }
  throw DomainError("the symmetric case has its zero at the origin; no sector");
}

namespace {

struct NewtonOutcome {
  cplx z;
  double residual;
  bool converged;
};

// Damped Newton for f(z) = 0 where f = h + conj(g). Solving
// f + A dz + B conj(dz) = 0 with A = f_z, B = f_zbar gives
// dz = -(conj(A) f - B conj(f)) / (|A|^2 - |B|^2).
NewtonOutcome newton(const ScherkSurface& s, cplx z, int& budget, int& iterations) {
  constexpr double kMaxRadius = 0.999;
  cplx f = f_closed(s.geom, z);
  double res = std::abs(f);
  while (budget > 0) {
    if (res < 1e-14) break;
    --budget;
    ++iterations;
    const cplx A = p_fn(s.data, z);
    const cplx q = q_fn(s.data, z);
    const cplx B = std::conj(A * q * q);
    const double jac = std::norm(A) - std::norm(B);
    if (!(jac > 0.0)) break;
    const cplx dz = -(std::conj(A) * f - B * std::conj(f)) / jac;

    double t = 1.0;
    bool moved = false;
    for (int halvings = 0; halvings < 30; ++halvings, t *= 0.5) {
      const cplx trial = z + t * dz;
      if (std::abs(trial) > kMaxRadius) continue;
      const cplx ft = f_closed(s.geom, trial);
      if (std::abs(ft) < res) {
        z = trial;
        f = ft;
        res = std::abs(ft);
        moved = true;
        break;
      }
    }
    if (!moved || std::abs(t * dz) < 1e-17) break;
  }
  return {z, res, res < kZeroResidualTarget};
}

// Coarse polar scan of |f| used as a fallback seed.
cplx scan_seed(const ScherkSurface& s) {
  constexpr int kRadii = 40;
  constexpr int kAngles = 80;
  cplx best{0.0, 0.0};
  double best_res = std::abs(f_closed(s.geom, best));
  for (int i = 1; i <= kRadii; ++i) {
    const double r = 0.998 * i / kRadii;
    for (int k = 0; k < kAngles; ++k) {
      const cplx z = std::polar(r, kTwoPi * k / kAngles);
      const double res = std::abs(f_closed(s.geom, z));
      if (res < best_res) {
        best_res = res;
        best = z;
      }
    }
  }
  return best;
}

}  // namespace

ZeroResult locate_zero(const ScherkSurface& s) {
  ZeroResult out;
  out.label = classify_case(s.params);
  out.boundary = out.label == CaseLabel::BoundaryTrapezoidQ2P ||
                 out.label == CaseLabel::BoundaryTrapezoidQPi ||
                 out.label == CaseLabel::Center;

  cplx seed{0.0, 0.0};
  if (out.label == CaseLabel::Center) {
    out.sector = {0.0, kTwoPi};
  } else {
    out.sector = sector_of_case(out.label, s.geom);
    seed = std::polar(0.6, 0.5 * (out.sector.lo + out.sector.hi));
  }

  int budget = kNewtonBudget;
  NewtonOutcome result = newton(s, seed, budget, out.iterations);
  if (!result.converged && budget > 0) {
    result = newton(s, scan_seed(s), budget, out.iterations);
  }
  if (!result.converged) {
    throw ConvergenceError("zero of f not found for p=" + std::to_string(s.params.p) +
                           " q=" + std::to_string(s.params.q));
  }
  out.z_zero = result.z;
  out.residual = result.residual;
  return out;
}

ZeroResult locate_zero(const ScherkParams& params) {
  return locate_zero(make_region_surface(params));
}

std::string_view to_string(Ray ray) {
  switch (ray) {
    case Ray::Zero: return "0";
    case Ray::Alpha: return "alpha";
    case Ray::Pi: return "pi";
    case Ray::PiPlusAlpha: return "pi+alpha";
  }
  return "?";
}

double ray_angle(Ray ray, const QuadGeometry& geom) {
  switch (ray) {
    case Ray::Zero: return 0.0;
    case Ray::Alpha: return geom.alpha;
    case Ray::Pi: return kPi;
    case Ray::PiPlusAlpha: return kPi + geom.alpha;
  }
  return 0.0;
}

double MonotonicityDiagnostic::factorization_residual() const {
  const double raw[] = {A, B, C, D};
  double worst = std::abs(ad_minus_bc - ad_minus_bc_factorized);
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(raw[i] - factorized[i]));
  return worst;
}

double MonotonicityDiagnostic::wronskian(double r) const {
  const double c = cos_alpha;
  const double plus = 1.0 + r * r + 2.0 * r * c;
  const double minus = 1.0 + r * r - 2.0 * r * c;
  const double P = A * plus + B * minus;
  const double Q = C * plus + D * minus;
  const double dP = A * (2.0 * r + 2.0 * c) + B * (2.0 * r - 2.0 * c);
  const double dQ = C * (2.0 * r + 2.0 * c) + D * (2.0 * r - 2.0 * c);
  return dP * Q - dQ * P;
}

double MonotonicityDiagnostic::wronskian_closed(double r) const {
  return 4.0 * (1.0 - r * r) * ad_minus_bc * cos_alpha;
}

MonotonicityDiagnostic monotonicity_diagnostic(const QuadGeometry& geom, Ray ray) {
  const double p = geom.params.p;
  const double q = geom.params.q;
  const double b = geom.beta;
  const double h = 0.5 * q;
  using std::cos;
  using std::sin;

  // Coefficients of the closed forms of u and v.
  const double c1 = cos(q - p + 2 * b) - cos(p);
  const double c2 = cos(p) - cos(p - q + 2 * b);
  const double s1 = sin(q - p + 2 * b) + sin(p);
  const double s2 = sin(p) + sin(p - q + 2 * b);
  const double s3 = sin(p) - sin(p - q + 2 * b);
  const double s4 = sin(q - p + 2 * b) - sin(p);

  MonotonicityDiagnostic d;
  d.ray = ray;
  d.cos_alpha = geom.cos_alpha;
  switch (ray) {
    case Ray::Alpha:
      d.A = s4;
      d.B = -s2;
      d.C = c1;
      d.D = c2;
      d.factorized = {2 * sin(h - p + b) * cos(b + h), -2 * sin(p + b - h) * cos(h - b),
                      -2 * sin(b + h) * sin(h + b - p), -2 * sin(p + b - h) * sin(h - b)};
      d.ad_minus_bc_factorized = -4 * sin(b + h - p) * sin(b + p - h) * sin(q);
      break;
    case Ray::Pi:
      d.A = -s3;
      d.B = -s1;
      d.C = -c2;
      d.D = -c1;
      d.factorized = {2 * sin(b - h) * cos(p + b - h), -2 * sin(b + h) * cos(p - b - h),
                      -2 * sin(p + b - h) * sin(b - h), -2 * sin(b + h) * sin(p - b - h)};
      d.ad_minus_bc_factorized = -4 * sin(b + h) * sin(b - h) * sin(2 * p - q);
      break;
    case Ray::Zero:
      d.A = s1;
      d.B = s3;
      d.C = c1;
      d.D = c2;
      d.factorized = {2 * sin(b + h) * cos(b + h - p), 2 * sin(h - b) * cos(p + b - h),
                      -2 * sin(b + h) * sin(h + b - p), 2 * sin(b - h) * sin(p + b - h)};
      d.ad_minus_bc_factorized = 4 * sin(b + h) * sin(b - h) * sin(2 * p - q);
      break;
    case Ray::PiPlusAlpha:
      d.A = s2;
      d.B = -s4;
      d.C = -c2;
      d.D = -c1;
      d.factorized = {2 * sin(p + b - h) * cos(h - b), 2 * sin(p - h - b) * cos(h + b),
                      -2 * sin(p + b - h) * sin(b - h), -2 * sin(b + h) * sin(p - b - h)};
      d.ad_minus_bc_factorized = -4 * sin(p - b - h) * sin(p + b - h) * sin(q);
      break;
  }
  d.ad_minus_bc = d.A * d.D - d.B * d.C;
  const double w = d.ad_minus_bc * d.cos_alpha;
  d.sign_pq = (w > 0.0) - (w < 0.0);
  return d;
}

std::optional<int> documented_sign(CaseLabel label, Ray ray) {
  switch (label) {
    case CaseLabel::A:
      if (ray == Ray::Alpha) return 1;
      if (ray == Ray::Pi) return -1;
      break;
    case CaseLabel::B:
      if (ray == Ray::Zero) return -1;
      if (ray == Ray::PiPlusAlpha) return 1;
      break;
    case CaseLabel::C:
      if (ray == Ray::Pi) return 1;
      if (ray == Ray::PiPlusAlpha) return -1;
      break;
    case CaseLabel::D:
      if (ray == Ray::Zero) return 1;
      if (ray == Ray::Alpha) return -1;
      break;
    default:
      break;
  }
  return std::nullopt;
}

}  // namespace scherk
