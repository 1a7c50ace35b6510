#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "fup/hermite.hpp"

namespace fup {

// Phase-space point z = (x, omega) in R^d x R^d, identified with x + i omega.
struct PhasePoint {
    std::vector<double> x;
    std::vector<double> omega;

    static PhasePoint at(double x0, double w0) { return {{x0}, {w0}}; }

    int dim() const { return static_cast<int>(x.size()); }
    double norm_sq() const;
    std::complex<double> z(int j) const { return {x[j], omega[j]}; }
};

inline constexpr int kMaxHermiteOrder = 512;

// Bargmann image of the |k|-th normalized Hermite tensor:
// prod_j sqrt(pi^{k_j}/k_j!) z_j^{k_j}.
std::complex<double> bargmann_hermite(const std::vector<int>& k,
                                      const std::vector<std::complex<double>>& z);

struct QuadratureValue {
    std::complex<double> value;
    double error_estimate = 0.0; // full-vs-half resolution difference
    bool decay_ok = true;        // boundary samples below 1e-12 of the peak
};

// Direct quadrature of the Bargmann integral for a sampled 1-d signal.
QuadratureValue bargmann_quadrature(const SampledSignal& f, std::complex<double> z);

// Tensorized d = 2 version for separable signals f(t1, t2) = f1(t1) f2(t2).
QuadratureValue bargmann_quadrature2(const SampledSignal& f1, const SampledSignal& f2,
                                     std::complex<double> z1, std::complex<double> z2);

// V_{phi0} f(x, omega) by quadrature on the sample grid.
std::complex<double> stft_gauss(const SampledSignal& f, double x, double omega);

// max over the grid of |V(x,-w) - e^{i pi x w} Bf(z) e^{-pi|z|^2/2}|, z = x+iw.
double check_identity_2_4(const SampledSignal& f,
                          const std::vector<std::pair<double, double>>& grid);

// Closed-form <pi(l) phi_0, pi(m) phi_0>; the constants are frozen against the
// quadrature oracle (see tests), magnitude e^{-pi |l-m|^2 / 2}.
std::complex<double> gauss_tf_inner(const PhasePoint& l, const PhasePoint& m);

} // namespace fup
