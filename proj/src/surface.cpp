#include "scherk/surface.hpp"

#include "scherk/errors.hpp"

namespace scherk {

ScherkSurface make_surface(const ScherkParams& params) {
  ScherkSurface s;
  s.params = params;
  s.geom = derive_geometry(params);
  s.moebius = build_moebius(params, s.geom);
  s.data = make_weierstrass(params, s.geom, s.moebius);
  return s;
}

ScherkSurface make_region_surface(const ScherkParams& params) {
  if (!in_region_R(params)) {
    throw DomainError("(p, q) is outside region R");
  }
  return make_surface(params);
}

}  // namespace scherk
