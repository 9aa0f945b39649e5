#include "scherk/params_geometry.hpp"

#include <cmath>
#include <string>

#include "scherk/errors.hpp"

namespace scherk {

void validate(const ScherkParams& params) {
  const double p = params.p;
  const double q = params.q;
  if (!std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("p and q must be finite");
  }
  if (!(p > 0.0 && p < q && q - p < kPi)) {
    throw DomainError("require 0 < p < q < p + pi, got p=" + std::to_string(p) +
                      " q=" + std::to_string(q));
  }
  if (!(std::sin(p) > 0.0 && std::sin(q - p) > 0.0)) {
    throw DomainError("require sin p > 0 and sin(q - p) > 0");
  }
}

QuadGeometry derive_geometry(const ScherkParams& params) {
  validate(params);
  const double p = params.p;
  const double q = params.q;

  const double c = std::cos(0.5 * q - p);
  if (std::abs(c) < kAngleTol) {
    throw DegenerateError("cos(q/2 - p) vanishes; beta is undefined");
  }

  QuadGeometry g;
  g.params = params;
  // tan(beta) = sin(q/2) / cos(q/2 - p); both terms are positive on the
  // admissible range so beta lands in (0, pi/2).
  g.beta = std::atan2(std::sin(0.5 * q), c);

  const double sp = std::sin(p);
  const double sqp = std::sin(q - p);
  g.cos_alpha = (sqp - sp) / (sqp + sp);
  g.sin_alpha = 2.0 * std::sqrt(sp * sqp) / (sp + sqp);
  g.alpha = std::atan2(g.sin_alpha, g.cos_alpha);

  g.x = q - p + 2.0 * g.beta;
  g.y = kTwoPi - p;
  g.s = kTwoPi - q + p + 2.0 * g.beta;
  g.vertices = {std::polar(1.0, p), std::polar(1.0, g.x), std::polar(1.0, g.y),
                std::polar(1.0, g.s)};
  return g;
}

bool ordering_holds(const QuadGeometry& geom) {
  const double chain[] = {geom.params.p, geom.x, geom.y, geom.s,
                          kTwoPi + geom.params.p};
  for (int i = 0; i < 4; ++i) {
    if (chain[i] > chain[i + 1] + kAngleTol) return false;
  }
  return true;
}

bool contains_origin(const QuadGeometry& geom) {
  const auto& v = geom.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (std::abs(v[i] - v[j]) < kAngleTol) {
        throw DegenerateError("quadrilateral has coincident vertices");
      }
    }
  }
  // The origin is strictly left of the directed edge a -> b iff
  // cross(a, b) > 0.
  for (std::size_t k = 0; k < v.size(); ++k) {
    const cplx a = v[k];
    const cplx b = v[(k + 1) % v.size()];
    const double cross = a.real() * b.imag() - a.imag() * b.real();
    if (!(cross > 0.0)) return false;
  }
  return true;
}

bool in_region_R(const ScherkParams& params) {
  try {
    const QuadGeometry g = derive_geometry(params);
    return ordering_holds(g) && contains_origin(g);
  } catch (const std::exception&) {
    return false;
  }
}

CaseLabel classify_case(const ScherkParams& params) {
  if (!in_region_R(params)) {
    throw DomainError("(p, q) is outside region R");
  }
  const double to_pi = params.q - kPi;
  const double to_2p = params.q - 2.0 * params.p;
  const bool on_pi = std::abs(to_pi) < kAngleTol;
  const bool on_2p = std::abs(to_2p) < kAngleTol;
  if (on_pi && on_2p) return CaseLabel::Center;
  if (on_2p) return CaseLabel::BoundaryTrapezoidQ2P;
  if (on_pi) return CaseLabel::BoundaryTrapezoidQPi;
  if (to_pi < 0.0) return to_2p < 0.0 ? CaseLabel::A : CaseLabel::D;
  return to_2p > 0.0 ? CaseLabel::B : CaseLabel::C;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::A: return "A";
    case CaseLabel::B: return "B";
    case CaseLabel::C: return "C";
    case CaseLabel::D: return "D";
    case CaseLabel::BoundaryTrapezoidQ2P: return "BoundaryTrapezoidQ2P";
    case CaseLabel::BoundaryTrapezoidQPi: return "BoundaryTrapezoidQPi";
    case CaseLabel::Center: return "Center";
  }
  return "?";
}

}  // namespace scherk
