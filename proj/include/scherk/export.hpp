#pragma once

#include <filesystem>
#include <ostream>

#include "scherk/surface.hpp"

namespace scherk {

struct MeshSpec {
  int n_r = 64;
  int n_t = 128;
  double r_max = 0.995;

  /// Throws DomainError unless n_r >= 2, n_t >= 3 and 0 < r_max < 1.
  void validate() const;
};

/// Polar grid r_j = r_max j / (n_r - 1), t_k = 2 pi k / n_t, mapped through
/// (u, v, T). Vertices row-major (j outer), two triangles per cell, 1-based.
/// The r = 0 ring is kept as n_t coincident vertices.
void write_mesh(const ScherkSurface& surface, const MeshSpec& spec, std::ostream& out);
void export_mesh(const ScherkSurface& surface, const MeshSpec& spec,
                 const std::filesystem::path& path);

inline constexpr int kCircleSamples = 256;
inline constexpr int kRaySamples = 64;
inline constexpr double kRayRadius = 0.995;

/// CSV "series,index,x,y": the closed vertex polyline, the unit circle, and
/// the images f(r e^{i phi_k}) of the four sector rays, each starting at f(0).
void write_quad_csv(const ScherkSurface& surface, std::ostream& out);
void export_quad(const ScherkSurface& surface, const std::filesystem::path& path);

}  // namespace scherk
