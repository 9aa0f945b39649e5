#include "scherk/verify.hpp"

#include <algorithm>
#include <cmath>

#include "scherk/curvature.hpp"
#include "scherk/errors.hpp"
#include "scherk/harmonic_map.hpp"
#include "scherk/quadrature.hpp"
#include "scherk/zero_locator.hpp"

namespace scherk {

std::vector<cplx> sample_points() {
  std::vector<cplx> pts;
  for (double r : {0.1, 0.45, 0.8}) {
    for (int k = 0; k < 7; ++k) pts.push_back(std::polar(r, 0.3 + kTwoPi * k / 7.0));
  }
  return pts;
}

Wirtinger wirtinger_fd(const QuadGeometry& geom, cplx z, double h) {
  const cplx fx = (f_closed(geom, z + h) - f_closed(geom, z - h)) / (2.0 * h);
  const cplx ih{0.0, h};
  const cplx fy = (f_closed(geom, z + ih) - f_closed(geom, z - ih)) / (2.0 * h);
  const cplx i{0.0, 1.0};
  return {0.5 * (fx - i * fy), 0.5 * (fx + i * fy)};
}

double beltrami_residual(const ScherkSurface& s, cplx z) {
  const Wirtinger w = wirtinger_fd(s.geom, z);
  const cplx q = q_fn(s.data, z);
  return std::abs(std::conj(w.f_zbar) - q * q * w.f_z);
}

double max_laplacian(const ScherkSurface& s, cplx z, double h) {
  const cplx ih{0.0, h};
  const std::array<cplx, 5> at = {z, z + h, z - h, z + ih, z - ih};
  std::array<SurfacePoint, 5> pt;
  for (std::size_t i = 0; i < 5; ++i) pt[i] = surface_point(s, at[i]);
  auto lap = [&](auto get) {
    return std::abs(get(pt[1]) + get(pt[2]) + get(pt[3]) + get(pt[4]) - 4.0 * get(pt[0])) /
           (h * h);
  };
  return std::max({lap([](const SurfacePoint& x) { return x.u; }),
                   lap([](const SurfacePoint& x) { return x.v; }),
                   lap([](const SurfacePoint& x) { return x.T; })});
}

double T_quadrature(const WeierstrassData& data, cplx z, int panels) {
  auto integrand = [&](double s) { return (phi_triple(data, s * z).phi3 * z).real(); };
  return quad::composite_gauss<10>(integrand, 0.0, 1.0, panels);
}

double null_residual(const WeierstrassData& data, cplx z) {
  const PhiTriple phi = phi_triple(data, z);
  return std::abs(phi.phi1 * phi.phi1 + phi.phi2 * phi.phi2 + phi.phi3 * phi.phi3);
}

namespace {

void add(std::vector<CheckResult>& out, std::string name, double value, double tol) {
  out.push_back({std::move(name), value <= tol, value, tol});
}

void add_flag(std::vector<CheckResult>& out, std::string name, bool ok) {
  out.push_back({std::move(name), ok, 0.0, 0.0});
}

}  // namespace

std::vector<CheckResult> verify_point(const ScherkSurface& s) {
  std::vector<CheckResult> out;
  const ScherkParams& prm = s.params;
  const WeierstrassData& d = s.data;

  add_flag(out, "geometry.ordering", ordering_holds(s.geom));
  add_flag(out, "geometry.origin_inside", in_region_R(prm));

  add(out, "moebius.zero_is_a", std::abs(zero_of(s.moebius) - compute_a(prm)), 1e-10);
  add(out, "weierstrass.a_polar", std::abs(a_polar(prm) - d.a), 1e-10);
  add(out, "weierstrass.a_modulus", std::abs(std::abs(d.a) - a_modulus(prm)), 1e-10);
  add(out, "weierstrass.b_squared", std::abs(std::norm(d.b) - b_modulus_squared(prm)), 1e-10);
  const auto coeffs = numerator_coefficients(s.geom);
  add(out, "weierstrass.linear_coefficient", std::abs(coeffs[1] + 2.0 * std::conj(d.a) * d.b), 1e-10);
  const cplx q0 = q_fn(d, 0.0);
  add(out, "weierstrass.q0_squared", std::abs(q0 * q0 - q0_squared(prm, s.geom)), 1e-10);

  const auto pts = sample_points();
  double null_res = 0.0, poisson = 0.0, tquad = 0.0, beltrami = 0.0, laplace = 0.0;
  double t_deriv = 0.0;
  for (cplx z : pts) {
    null_res = std::max(null_res, null_residual(d, z));
    poisson = std::max(poisson, std::abs(f_closed(s.geom, z) - poisson_oracle(s.geom, z, 512)));
    tquad = std::max(tquad, std::abs(T_closed(d, z) - T_quadrature(d, z)));
    beltrami = std::max(beltrami, beltrami_residual(s, z));
    laplace = std::max(laplace, max_laplacian(s, z));
    // 2 dT/dz = phi3 for T = Re of its primitive.
    const double h = 1e-5;
    const cplx ih{0.0, h};
    const double tx = (T_closed(d, z + h) - T_closed(d, z - h)) / (2.0 * h);
    const double ty = (T_closed(d, z + ih) - T_closed(d, z - ih)) / (2.0 * h);
    t_deriv = std::max(t_deriv, std::abs(cplx(tx, -ty) - phi_triple(d, z).phi3));
  }
  add(out, "weierstrass.null_condition", null_res, 1e-12);
  add(out, "harmonic.poisson_oracle", poisson, 1e-7);
  add(out, "harmonic.T_quadrature", tquad, 1e-8);
  add(out, "harmonic.T_derivative", t_deriv, 1e-6);
  add(out, "harmonic.beltrami", beltrami, 1e-6);
  add(out, "harmonic.laplacian", laplace, 1e-4);

  const CaseLabel label = classify_case(prm);
  try {
    const CurvatureReport rep = curvature_at_zero(s);
    add(out, "zero.residual", rep.residual, kZeroResidualTarget);
    if (label != CaseLabel::Center) {
      add_flag(out, "zero.sector",
               sector_of_case(label, s.geom).contains(std::arg(rep.z_zero), 1e-9));
    }
    const auto failed = invariant_failures(rep);
    add_flag(out, "curvature.invariants", failed.empty());
    add(out, "curvature.sin_form", std::abs(rep.K - rep.K_sin_form) / std::abs(rep.K), 1e-9);
    add_flag(out, "curvature.bound_chain", bound_chain(rep).holds);
    const ScalarProductCheck sk = scalar_product_sign(prm, rep.z_zero, rep.a);
    add_flag(out, "curvature.scalar_product", sk.t0_in_quadrant && sk.bracket_nonnegative);
  } catch (const std::exception&) {
    add_flag(out, "zero.converged", false);
  }

  for (Ray ray : {Ray::Zero, Ray::Alpha, Ray::Pi, Ray::PiPlusAlpha}) {
    const auto expected = documented_sign(label, ray);
    if (!expected) continue;
    const auto diag = monotonicity_diagnostic(s.geom, ray);
    add_flag(out, "monotonicity.ray_" + std::string(to_string(ray)), diag.sign_pq == *expected);
  }
  return out;
}

std::vector<CheckResult> verify_sweep(const SweepSpec& spec) {
  const SweepResult result = sweep_region(spec);
  std::vector<CheckResult> out;
  add(out, "sweep.violations", result.violations, 0.0);
  add(out, "sweep.failures", static_cast<double>(result.failures.size()), 0.0);
  add(out, "sweep.max_absK", std::max(0.0, result.max_absK - kHeinzConstant), 1e-9);
  int failing_nodes = 0;
  for (const auto& row : result.rows) {
    if (!all_passed(verify_point(make_region_surface({row.p, row.q})))) ++failing_nodes;
  }
  add(out, "sweep.node_checks", failing_nodes, 0.0);
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace scherk
