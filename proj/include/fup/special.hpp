#pragma once

namespace fup {

// Regularized incomplete gamma functions, series / continued-fraction hybrid,
// relative error <= 1e-13 on the ranges used here (a <= ~2000, x <= ~2000).
double reg_gamma_lower(double a, double x); // P(a, x)
double reg_gamma_upper(double a, double x); // Q(a, x) = 1 - P(a, x)

// kappa_d(x) = (x^d/d!) / (1 - e^{-x} sum_{j<d} x^j/j!), the subaveraging
// constant. Strictly increasing, >= 1, -> 1 as x -> 0+. The denominator
// equals P(d, x), which the series branch evaluates termwise, so the ratio
// stays fully accurate for tiny x.
double kappa(int d, double x);

// 1 - e^{-y} sum_{j<d} y^j/j!  (= P(d, y) for integer d >= 1)
double gamma_tail_denominator(int d, double y);

} // namespace fup
