#include "fup/bargmann.hpp"

#include <cmath>
#include <stdexcept>

namespace fup {

double PhasePoint::norm_sq() const {
    double s = 0.0;
    for (double v : x) s += v * v;
    for (double v : omega) s += v * v;
    return s;
}

std::complex<double> bargmann_hermite(const std::vector<int>& k,
                                      const std::vector<std::complex<double>>& z) {
    if (k.size() != z.size())
        throw std::invalid_argument("bargmann_hermite: index/point dimension mismatch");
    int total = 0;
    for (int kj : k) {
        if (kj < 0) throw std::invalid_argument("bargmann_hermite: negative order");
        total += kj;
    }
    if (total > kMaxHermiteOrder) throw std::range_error("bargmann_hermite: order above cap");

    std::complex<double> out = 1.0;
    for (std::size_t j = 0; j < k.size(); ++j) {
        const double lc = 0.5 * (k[j] * std::log(M_PI) - std::lgamma(k[j] + 1.0));
        out *= std::exp(lc) * std::pow(z[j], k[j]);
    }
    return out;
}

namespace {

// trapezoid sum of g over the sample grid, optionally skipping odd samples
std::complex<double> trapezoid(const SampledSignal& f,
                               const std::function<std::complex<double>(double, std::complex<double>)>& g,
                               int stride) {
    std::complex<double> acc = 0.0;
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; i += stride) {
        const auto term = g(f.t(i), f.values[i]);
        const bool endpoint = (i == 0) || (i + stride >= n);
        acc += endpoint ? 0.5 * term : term;
    }
    return acc * (f.dt * stride);
}

} // namespace

QuadratureValue bargmann_quadrature(const SampledSignal& f, std::complex<double> z) {
    if (f.size() < 5) throw std::invalid_argument("bargmann_quadrature: too few samples");
    auto integrand = [&](double t, std::complex<double> v) {
        return v * std::exp(2.0 * M_PI * t * z - M_PI * t * t - 0.5 * M_PI * z * z);
    };
    QuadratureValue q;
    const auto full = trapezoid(f, integrand, 1) * std::pow(2.0, 0.25);
    const auto half = trapezoid(f, integrand, 2) * std::pow(2.0, 0.25);
    q.value = full;
    q.error_estimate = std::abs(full - half);
    q.decay_ok = f.boundary_abs() <= 1e-12 * f.peak_abs();
    return q;
}

QuadratureValue bargmann_quadrature2(const SampledSignal& f1, const SampledSignal& f2,
                                     std::complex<double> z1, std::complex<double> z2) {
    const auto a = bargmann_quadrature(f1, z1);
    const auto b = bargmann_quadrature(f2, z2);
    QuadratureValue q;
    q.value = a.value * b.value;
    q.error_estimate = a.error_estimate * std::abs(b.value) + b.error_estimate * std::abs(a.value);
    q.decay_ok = a.decay_ok && b.decay_ok;
    return q;
}

std::complex<double> stft_gauss(const SampledSignal& f, double x, double omega) {
    auto integrand = [&](double t, std::complex<double> v) {
        const double window = std::pow(2.0, 0.25) * std::exp(-M_PI * (t - x) * (t - x));
        return v * window * std::polar(1.0, -2.0 * M_PI * omega * t);
    };
    return trapezoid(f, integrand, 1);
}

double check_identity_2_4(const SampledSignal& f,
                          const std::vector<std::pair<double, double>>& grid) {
    double max_err = 0.0;
    for (const auto& [x, w] : grid) {
        const std::complex<double> z(x, w);
        const auto lhs = stft_gauss(f, x, -w);
        const auto rhs = std::polar(1.0, M_PI * x * w) * bargmann_quadrature(f, z).value *
                         std::exp(-0.5 * M_PI * std::norm(z));
        max_err = std::max(max_err, std::abs(lhs - rhs));
    }
    return max_err;
}

std::complex<double> gauss_tf_inner(const PhasePoint& l, const PhasePoint& m) {
    if (l.dim() != m.dim()) throw std::invalid_argument("gauss_tf_inner: dimension mismatch");
    double quad = 0.0;  // sum (dx^2 + dw^2)
    double phase = 0.0; // pi sum dw (x_l + x_m)
    for (int j = 0; j < l.dim(); ++j) {
        const double dx = l.x[j] - m.x[j];
        const double dw = l.omega[j] - m.omega[j];
        quad += dx * dx + dw * dw;
        phase += M_PI * dw * (l.x[j] + m.x[j]);
    }
    return std::polar(std::exp(-0.5 * M_PI * quad), phase);
}

} // namespace fup
