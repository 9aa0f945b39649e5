#pragma once

// Shared sample sets and independent oracles for the test binaries.

#include <cmath>
#include <complex>
#include <vector>

#include "scherk/params_geometry.hpp"

namespace scherk::testing {

inline const ScherkParams kSquare{kPi / 2.0, kPi};
inline const ScherkParams kTilted{kPi / 2.0 + 0.1, kPi - 0.1};  // case A
inline const ScherkParams kThirds{kPi / 3.0, 2.0 * kPi / 3.0};  // q = 2p
inline const ScherkParams kCaseB{1.2, 3.5};
inline const ScherkParams kCaseC{2.0, 3.5};
inline const ScherkParams kCaseD{0.7, 2.0};

// Radical inverse in base b.
inline double halton(int index, int base) {
  double f = 1.0, r = 0.0;
  for (int i = index; i > 0; i /= base) {
    f /= base;
    r += f * (i % base);
  }
  return r;
}

/// First `count` Halton points (p, q - p) in (0, pi)^2 that land in R.
inline std::vector<ScherkParams> region_sample(int count) {
  std::vector<ScherkParams> out;
  for (int i = 1; static_cast<int>(out.size()) < count; ++i) {
    const ScherkParams prm{kPi * halton(i, 2), 0.0};
    const ScherkParams full{prm.p, prm.p + kPi * halton(i, 3)};
    if (in_region_R(full)) out.push_back(full);
  }
  return out;
}

/// Interior points r e^{it} with r in [0.05, r_max], Halton-distributed.
inline std::vector<cplx> disk_sample(int count, double r_max, int offset = 0) {
  std::vector<cplx> out;
  for (int i = 1; i <= count; ++i) {
    const double r = 0.05 + (r_max - 0.05) * std::sqrt(halton(i + offset, 5));
    out.push_back(std::polar(r, kTwoPi * halton(i + offset, 7)));
  }
  return out;
}

/// Composite Simpson on [lo, hi] with n (even) intervals.
template <typename F>
auto simpson(F&& fn, double lo, double hi, int n) {
  const double h = (hi - lo) / n;
  auto total = fn(lo) + fn(hi);
  for (int k = 1; k < n; ++k) total += (k % 2 ? 4.0 : 2.0) * fn(lo + k * h);
  return total * (h / 3.0);
}

inline double side(cplx a, cplx b) { return std::abs(a - b); }

}  // namespace scherk::testing
