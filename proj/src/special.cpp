#include "fup/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fup {

namespace {

constexpr int kMaxIter = 2000;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

// ascending series for P(a,x), good for x < a+1
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps)
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("reg_gamma_lower: series did not converge");
}

// modified Lentz continued fraction for Q(a,x), good for x >= a+1
double gamma_q_contfrac(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps)
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw std::runtime_error("reg_gamma_upper: continued fraction did not converge");
}

} // namespace

double reg_gamma_lower(double a, double x) {
    if (!(a > 0)) throw std::domain_error("reg_gamma_lower: a must be positive");
    if (x < 0) throw std::domain_error("reg_gamma_lower: x must be >= 0");
    if (x == 0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double reg_gamma_upper(double a, double x) {
    if (!(a > 0)) throw std::domain_error("reg_gamma_upper: a must be positive");
    if (x < 0) throw std::domain_error("reg_gamma_upper: x must be >= 0");
    if (x == 0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double kappa(int d, double x) {
    if (d < 1) throw std::domain_error("kappa: d must be >= 1");
    if (!(x > 0)) throw std::domain_error("kappa: x must be positive");
    const double num = std::exp(d * std::log(x) - std::lgamma(d + 1.0));
    return num / reg_gamma_lower(static_cast<double>(d), x);
}

double gamma_tail_denominator(int d, double y) {
    if (d < 1) throw std::domain_error("gamma_tail_denominator: d must be >= 1");
    if (!(y > 0)) throw std::domain_error("gamma_tail_denominator: y must be positive");
    return reg_gamma_lower(static_cast<double>(d), y);
}

} // namespace fup
