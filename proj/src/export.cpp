#include "scherk/export.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>

#include "scherk/errors.hpp"
#include "scherk/harmonic_map.hpp"
#include "scherk/zero_locator.hpp"

namespace scherk {

namespace {

std::string g9(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string g17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
  body(file);
  file.flush();
  if (!file) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void MeshSpec::validate() const {
  if (n_r < 2) throw DomainError("mesh needs n_r >= 2");
  if (n_t < 3) throw DomainError("mesh needs n_t >= 3");
  if (!(r_max > 0.0 && r_max < 1.0)) throw DomainError("mesh needs 0 < r_max < 1");
}

void write_mesh(const ScherkSurface& surface, const MeshSpec& spec, std::ostream& out) {
  spec.validate();
  for (int j = 0; j < spec.n_r; ++j) {
    const double r = spec.r_max * static_cast<double>(j) / (spec.n_r - 1);
    for (int k = 0; k < spec.n_t; ++k) {
      const double t = kTwoPi * static_cast<double>(k) / spec.n_t;
      const SurfacePoint pt = surface_point(surface, std::polar(r, t));
      out << "v " << g9(pt.u) << ' ' << g9(pt.v) << ' ' << g9(pt.T) << '\n';
    }
  }
  auto index = [&](int j, int k) { return j * spec.n_t + (k % spec.n_t) + 1; };
  for (int j = 0; j + 1 < spec.n_r; ++j) {
    for (int k = 0; k < spec.n_t; ++k) {
      const int a = index(j, k), b = index(j, k + 1);
      const int c = index(j + 1, k + 1), d = index(j + 1, k);
      out << "f " << a << ' ' << d << ' ' << c << '\n';
      out << "f " << a << ' ' << c << ' ' << b << '\n';
    }
  }
}

void export_mesh(const ScherkSurface& surface, const MeshSpec& spec,
                 const std::filesystem::path& path) {
  spec.validate();
  write_file(path, [&](std::ostream& out) { write_mesh(surface, spec, out); });
}

void write_quad_csv(const ScherkSurface& surface, std::ostream& out) {
  const QuadGeometry& g = surface.geom;
  out << "series,index,x,y\n";
  auto row = [&](std::string_view series, int i, cplx w) {
    out << series << ',' << i << ',' << g17(w.real()) << ',' << g17(w.imag()) << '\n';
  };
  for (int i = 0; i <= 4; ++i) row("vertex", i, g.vertices[i % 4]);
  for (int i = 0; i < kCircleSamples; ++i) {
    row("circle", i, std::polar(1.0, kTwoPi * i / kCircleSamples));
  }
  constexpr Ray rays[] = {Ray::Zero, Ray::Alpha, Ray::Pi, Ray::PiPlusAlpha};
  for (Ray ray : rays) {
    const double phi = ray_angle(ray, g);
    const std::string series = "ray_" + std::string(to_string(ray));
    for (int i = 0; i < kRaySamples; ++i) {
      const double r = kRayRadius * i / (kRaySamples - 1);
      row(series, i, f_closed(g, std::polar(r, phi)));
    }
  }
}

void export_quad(const ScherkSurface& surface, const std::filesystem::path& path) {
  write_file(path, [&](std::ostream& out) { write_quad_csv(surface, out); });
}

}  // namespace scherk
