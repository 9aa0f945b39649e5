#pragma once

#include <boost/math/quadrature/gauss.hpp>

namespace scherk::quad {

/// [lo, hi] split into `panels` equal panels, N-point Gauss-Legendre on each.
template <unsigned N, typename F>
double composite_gauss(F&& fn, double lo, double hi, int panels) {
  const double h = (hi - lo) / panels;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    total += boost::math::quadrature::gauss<double, N>::integrate(fn, lo + k * h,
                                                                  lo + (k + 1) * h);
  }
  return total;
}

}  // namespace scherk::quad
