#pragma once

#include <cmath>
#include <functional>

#include "lvhg/errors.hpp"

namespace lvhg {

namespace detail {

template <class F>
double adaptive_simpson_rec(const F& f, double a, double b, double fa,
                            double fm, double fb, double whole, double tol,
                            int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0) throw QuadratureFailure("adaptive Simpson: depth exhausted");
  if (std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol,
                              depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol,
                              depth - 1);
}

}  // namespace detail

/// Adaptive Simpson on [a,b] to absolute tolerance tol.
template <class F>
double integrate(const F& f, double a, double b, double tol,
                 int max_depth = 50) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fm = f(m), fb = f(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol,
                                      max_depth);
}

/// Integral of an oscillatory integrand: panels no longer than panel_len,
/// adaptive Simpson inside each panel.
template <class F>
double integrate_paneled(const F& f, double a, double b, double panel_len,
                         double tol) {
  long n = std::max(1L, static_cast<long>(std::ceil((b - a) / panel_len)));
  double h = (b - a) / static_cast<double>(n);
  double s = 0.0;
  double per_panel_tol = tol / static_cast<double>(n);
  for (long i = 0; i < n; ++i)
    s += integrate(f, a + i * h, a + (i + 1) * h, per_panel_tol);
  return s;
}

}  // namespace lvhg
