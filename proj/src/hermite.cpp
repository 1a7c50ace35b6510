#include "fup/hermite.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace fup {

double SampledSignal::peak_abs() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
}

double SampledSignal::boundary_abs() const {
    if (values.empty()) return 0.0;
    return std::max(std::abs(values.front()), std::abs(values.back()));
}

double hermite_function(int k, double t) {
    if (k < 0) throw std::invalid_argument("hermite_function: k must be >= 0");
    const double u = std::sqrt(2.0 * M_PI) * t;
    // hhat_k = H_k(u)/sqrt(2^k k!) satisfies
    // hhat_{k+1} = u sqrt(2/(k+1)) hhat_k - sqrt(k/(k+1)) hhat_{k-1}
    double prev = 0.0, cur = 1.0;
    for (int j = 0; j < k; ++j) {
        const double next =
            u * std::sqrt(2.0 / (j + 1.0)) * cur - std::sqrt(j / (j + 1.0)) * prev;
        prev = cur;
        cur = next;
    }
    return std::pow(2.0, 0.25) * cur * std::exp(-M_PI * t * t);
}

SampledSignal sample_function(const std::function<std::complex<double>(double)>& f, double T,
                              double dt) {
    SampledSignal s;
    s.t0 = -T;
    s.dt = dt;
    const auto n = static_cast<std::size_t>(std::llround(2.0 * T / dt)) + 1;
    s.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) s.values.push_back(f(s.t(i)));
    return s;
}

SampledSignal sample_hermite(int k, double T, double dt) {
    return sample_function([k](double t) { return std::complex<double>(hermite_function(k, t)); },
                           T, dt);
}

SampledSignal sample_shifted_gaussian(double x, double omega, double T, double dt) {
    return sample_function(
        [=](double t) {
            const double g = std::pow(2.0, 0.25) * std::exp(-M_PI * (t - x) * (t - x));
            return std::polar(g, 2.0 * M_PI * omega * t);
        },
        T, dt);
}

} // namespace fup
