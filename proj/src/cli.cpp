#include "scherk/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <string>

#include "scherk/curvature.hpp"
#include "scherk/errors.hpp"
#include "scherk/export.hpp"
#include "scherk/harmonic_map.hpp"
#include "scherk/sweep.hpp"
#include "scherk/verify.hpp"

namespace scherk::cli {

namespace {

using nlohmann::ordered_json;

struct PointArgs {
  double p = 0.0;
  double q = 0.0;
  bool deg = false;
  double theta_offset = 0.0;  // test hook: corrupts theta after construction

  ScherkParams params() const {
    const double k = deg ? kPi / 180.0 : 1.0;
    return {p * k, q * k};
  }
};

void add_point_options(CLI::App* cmd, PointArgs& args) {
  cmd->add_option("--p", args.p, "first vertex angle (radians)")->required();
  cmd->add_option("--q", args.q, "second parameter (radians)")->required();
  cmd->add_flag("--deg", args.deg, "read --p and --q in degrees");
  cmd->add_option("--theta-offset", args.theta_offset)->group("");
}

ScherkSurface build(const PointArgs& args) {
  ScherkSurface s = make_region_surface(args.params());
  s.data.theta += args.theta_offset;
  return s;
}

ordered_json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string fmt(cplx z) {
  return fmt(z.real()) + (std::signbit(z.imag()) ? " - " : " + ") + fmt(std::abs(z.imag())) +
         "i";
}

ordered_json report_json(const ScherkSurface& s, const CurvatureReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["beta"] = r.beta;
  j["alpha"] = r.alpha;
  j["a"] = cjson(r.a);
  j["b"] = cjson(r.b);
  j["theta"] = s.data.theta;
  j["z_zero"] = cjson(r.z_zero);
  j["K"] = r.K;
  j["K_cross"] = r.K_cross;
  j["re_za"] = r.re_za;
  j["bound_margin"] = r.bound_margin;
  j["case"] = std::string(to_string(r.label));
  return j;
}

int cmd_derive(const PointArgs& args, bool json, std::ostream& out) {
  const ScherkSurface s = build(args);
  const CurvatureReport r = curvature_at_zero(s);
  const QuadGeometry& g = s.geom;
  const cplx f0 = f_zero(g);
  if (json) {
    ordered_json j = report_json(s, r);
    j["x"] = g.x;
    j["y"] = g.y;
    j["s"] = g.s;
    j["f0"] = cjson(f0);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "p      " << fmt(r.p) << '\n'
      << "q      " << fmt(r.q) << '\n'
      << "beta   " << fmt(g.beta) << '\n'
      << "alpha  " << fmt(g.alpha) << '\n'
      << "x      " << fmt(g.x) << '\n'
      << "y      " << fmt(g.y) << '\n'
      << "s      " << fmt(g.s) << '\n'
      << "a      " << fmt(s.data.a) << '\n'
      << "b      " << fmt(s.data.b) << '\n'
      << "theta  " << fmt(s.data.theta) << '\n'
      << "f(0)   " << fmt(f0) << '\n'
      << "case   " << to_string(r.label) << '\n';
  return kExitOk;
}

int cmd_curvature(const PointArgs& args, bool json, std::ostream& out, std::ostream& err) {
  const ScherkSurface s = build(args);
  const CurvatureReport r = curvature_at_zero(s);
  const auto failed = invariant_failures(r);
  if (json) {
    out << report_json(s, r).dump(2) << '\n';
  } else {
    out << "z0            " << fmt(r.z_zero) << '\n'
        << "K             " << fmt(r.K) << '\n'
        << "K_cross       " << fmt(r.K_cross) << '\n'
        << "re_za         " << fmt(r.re_za) << '\n'
        << "bound_margin  " << fmt(r.bound_margin) << '\n'
        << "case          " << to_string(r.label) << '\n';
  }
  for (const auto& f : failed) err << "invariant failed: " << f << '\n';
  return failed.empty() ? kExitOk : kExitVerification;
}

int print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (c.tolerance > 0.0) out << "  " << fmt(c.value) << " <= " << fmt(c.tolerance);
    out << '\n';
  }
  return all_passed(checks) ? kExitOk : kExitVerification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scherk-type minimal graphs over bicentric quadrilaterals", "scherk"};
  app.require_subcommand(1);

  PointArgs pt;
  bool json = false;
  std::string path;
  MeshSpec mesh;
  SweepSpec sweep;
  bool sweep_mode = false;
  bool no_filter = false;

  auto* derive = app.add_subcommand("derive", "geometry and Weierstrass data");
  add_point_options(derive, pt);
  derive->add_flag("--json", json);

  auto* curv = app.add_subcommand("curvature", "curvature above the origin");
  add_point_options(curv, pt);
  curv->add_flag("--json", json);

  auto* meshc = app.add_subcommand("mesh", "write the surface as a triangle mesh");
  add_point_options(meshc, pt);
  meshc->add_option("--out", path)->required();
  meshc->add_option("--nr", mesh.n_r);
  meshc->add_option("--nt", mesh.n_t);
  meshc->add_option("--rmax", mesh.r_max);

  auto* quadc = app.add_subcommand("quad", "quadrilateral, circle and ray images as CSV");
  add_point_options(quadc, pt);
  quadc->add_option("--out", path)->required();

  auto* ver = app.add_subcommand("verify", "run the invariant checks");
  ver->add_option("--p", pt.p);
  ver->add_option("--q", pt.q);
  ver->add_flag("--deg", pt.deg);
  ver->add_option("--theta-offset", pt.theta_offset)->group("");
  ver->add_flag("--sweep", sweep_mode, "check a grid sweep instead of one point");
  ver->add_option("--psteps", sweep.p_steps);
  ver->add_option("--qsteps", sweep.q_steps);
  ver->add_flag("--refine", sweep.refine);

  auto* sw = app.add_subcommand("sweep", "tabulate curvature over region R");
  sw->add_option("--psteps", sweep.p_steps);
  sw->add_option("--qsteps", sweep.q_steps);
  sw->add_flag("--refine", sweep.refine);
  sw->add_flag("--no-filter", no_filter, "evaluate nodes outside R and report them as failures");
  sw->add_option("--out", path, "CSV path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }

  try {
    if (*derive) return cmd_derive(pt, json, out);
    if (*curv) return cmd_curvature(pt, json, out, err);
    if (*meshc) {
      mesh.validate();
      export_mesh(build(pt), mesh, path);
      return kExitOk;
    }
    if (*quadc) {
      export_quad(build(pt), path);
      return kExitOk;
    }
    if (*ver) {
      if (sweep_mode) return print_checks(verify_sweep(sweep), out);
      if (ver->count("--p") == 0 || ver->count("--q") == 0) {
        err << "verify needs --p and --q, or --sweep\n";
        return kExitDomain;
      }
      return print_checks(verify_point(build(pt)), out);
    }
    if (*sw) {
      sweep.r_filter = !no_filter;
      const SweepResult result = sweep_region(sweep);
      if (path.empty()) {
        write_csv(result, out);
      } else {
        export_csv(result, path);
      }
      err << "rows " << result.rows.size() + result.refinement_rows.size() << ", max |K| "
          << fmt(result.max_absK) << " at (" << fmt(result.argmax.p) << ", "
          << fmt(result.argmax.q) << "), violations " << result.violations << ", failures "
          << result.failures.size() << '\n';
      return result.violations == 0 && result.failures.empty() ? kExitOk : kExitVerification;
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConvergence;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace scherk::cli
