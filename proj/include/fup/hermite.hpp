#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace fup {

// Uniformly sampled signal on [t0, t0 + (n-1) dt]; quadratures are plain
// trapezoid sums, which converge geometrically for these Gaussian-decay
// integrands.
struct SampledSignal {
    double t0 = 0.0;
    double dt = 0.0;
    std::vector<std::complex<double>> values;

    std::size_t size() const { return values.size(); }
    double t(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
    double peak_abs() const;
    double boundary_abs() const;
};

// k-th L^2-normalized Hermite function with Gaussian h_0(t) = 2^{1/4} e^{-pi t^2},
// evaluated by the normalized three-term recurrence.
double hermite_function(int k, double t);

// Default sampling used by the oracles: [-T, T] at step dt.
SampledSignal sample_hermite(int k, double T = 12.0, double dt = 1.0 / 64.0);

SampledSignal sample_function(const std::function<std::complex<double>(double)>& f, double T,
                              double dt);

// Time-frequency shifted Gaussian pi(x, w) phi_0 as a sampled signal.
SampledSignal sample_shifted_gaussian(double x, double omega, double T = 12.0,
                                      double dt = 1.0 / 64.0);

} // namespace fup
