#pragma once

#include <complex>
#include <cstddef>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "crank/error.hpp"

namespace crank {

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;  // estimated absolute error
  double l1 = 0.0;     // integral of |f|
  std::size_t evaluations = 0;
};

/// Adaptive 61-point Gauss-Kronrod with interval bisection. Throws when the
/// estimated error stays above rel_tol * L1 at the maximum depth.
template <class F>
QuadratureResult integrate_complex(F&& f, double a, double b, double rel_tol = 1e-12, unsigned max_depth = 18) {
  std::size_t calls = 0;
  auto counted = [&](double x) {
    ++calls;
    return std::complex<double>(f(x));
  };
  QuadratureResult out;
  out.value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(counted, a, b, max_depth, rel_tol,
                                                                            &out.error, &out.l1);
  out.evaluations = calls;
  if (!(out.error <= 10 * rel_tol * out.l1) && out.error > 0)
    throw ConvergenceError("quadrature missed its error target", out.l1 > 0 ? out.error / out.l1 : out.error);
  return out;
}

}  // namespace crank
