#pragma once

#include "scherk/params_geometry.hpp"

namespace scherk {

/// z -> (n1 z + n0) / (d1 z + d0), normalized so that d0 = 1 whenever the
/// unnormalized d0 is nonzero.
struct MoebiusMap {
  cplx n1{1.0, 0.0};
  cplx n0{0.0, 0.0};
  cplx d1{0.0, 0.0};
  cplx d0{1.0, 0.0};

  cplx determinant() const { return n1 * d0 - n0 * d1; }
};

/// The disk automorphism sending (1, e^{i alpha}, -1, -e^{i alpha}) to
/// (1, e^{ip}, e^{iq}, -e^{i(q-p)}).
MoebiusMap build_moebius(const ScherkParams& params, const QuadGeometry& geom);

/// Throws PoleError when d1 z + d0 vanishes.
cplx apply(const MoebiusMap& map, cplx z);

/// The preimage of 0. Throws DegenerateError if n1 vanishes.
cplx zero_of(const MoebiusMap& map);

/// Unimodular lambda in M(z) = lambda (z - a) / (1 - conj(a) z); valid for
/// disk automorphisms normalized with d0 = 1.
cplx rotation_factor(const MoebiusMap& map);

}  // namespace scherk
