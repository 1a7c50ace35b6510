#include "fup/density.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "fup/quadrature.hpp"

namespace fup {

DensityResult rho_exact_1d(const IntervalUnion& set, double window_length) {
    if (!(window_length > 0)) throw std::invalid_argument("rho_exact_1d: window must be positive");
    DensityResult res;
    res.kind = DensityResult::Kind::Exact;
    res.window_radius = window_length / 2.0;
    if (set.empty()) return res;

    std::vector<double> candidates;
    candidates.reserve(4 * set.size());
    for (const auto& iv : set.intervals()) {
        candidates.push_back(iv.lo);
        candidates.push_back(iv.hi);
        candidates.push_back(iv.lo - window_length);
        candidates.push_back(iv.hi - window_length);
    }
    double best = 0.0, arg = candidates.front();
    for (double a : candidates) {
        const double c = set.measure_in(a, a + window_length);
        if (c > best) { best = c; arg = a; }
    }
    res.value = best;
    res.argmax = {arg};
    return res;
}

DensityResult rho_product_bound(const ProductCantor& set, double r) {
    if (!(r > 0)) throw std::invalid_argument("rho_product_bound: r must be positive");
    if (set.factors.empty()) throw std::invalid_argument("rho_product_bound: no factors");
    DensityResult res;
    res.kind = DensityResult::Kind::UpperBound;
    res.window_radius = r;
    double v = 1.0;
    for (const auto& f : set.factors) v *= rho_exact_1d(build_iterate(f), 2.0 * r).value;
    res.value = v;
    return res;
}

namespace {

double ball_volume(int d, double r) { // in R^{2d}
    return std::pow(M_PI * r * r, d) / std::tgamma(d + 1.0);
}

// fraction of the sphere S^{2d-1} covered by a cap of half-angle theta
double cap_fraction(int d, double theta) {
    const int m = 2 * d - 2; // sin^m weight
    if (m == 0) return theta / M_PI;
    static std::map<int, QuadratureRule> rules;
    static std::mutex mu;
    QuadratureRule rule;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = rules.find(m);
        if (it == rules.end()) it = rules.emplace(m, gauss_legendre(64)).first;
        rule = it->second;
    }
    auto integral = [&](double up) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double phi = 0.5 * up * (rule.nodes[i] + 1.0);
            s += 0.5 * up * rule.weights[i] * std::pow(std::sin(phi), m);
        }
        return s;
    };
    return integral(theta) / integral(M_PI);
}

// max over sphere radii eta in [1-tau, 1+tau] of the cap fraction cut out of
// S_eta by a unit-distance ball of radius tau
double max_cap_fraction(int d, double tau) {
    auto frac = [&](double eta) {
        const double c = (eta * eta + 1.0 - tau * tau) / (2.0 * eta);
        if (c >= 1.0) return 0.0;
        if (c <= -1.0) return 1.0;
        return cap_fraction(d, std::acos(c));
    };
    double lo = 1.0 - tau, hi = 1.0 + tau;
    double best = 0.0;
    for (int i = 0; i <= 64; ++i) best = std::max(best, frac(lo + (hi - lo) * i / 64.0));
    // golden-section refinement around the grid optimum
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    for (int it = 0; it < 80; ++it) {
        if (frac(c1) < frac(c2)) a = c1; else b = c2;
        c1 = b - gr * (b - a);
        c2 = a + gr * (b - a);
    }
    return std::max(best, frac(0.5 * (a + b)));
}

} // namespace

double radial_cap_constant(double N, int d) {
    if (!(N > 1)) throw std::invalid_argument("radial_cap_constant: need N > 1");
    if (d < 1) throw std::invalid_argument("radial_cap_constant: need d >= 1");
    static std::map<std::pair<double, int>, double> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({N, d});
        if (it != cache.end()) return it->second;
    }
    double alpha = 0.0;
    const double tau_max = 1.0 / N;
    for (int i = 0; i <= 200; ++i) {
        const double tau = tau_max * std::pow(1e-4, 1.0 - i / 200.0);
        alpha = std::max(alpha, max_cap_fraction(d, tau) / std::pow(tau, 2 * d - 1));
    }
    std::lock_guard<std::mutex> lock(mu);
    cache[{N, d}] = alpha;
    return alpha;
}

DensityResult rho_radial_bound(const RadialCantorSpec& spec, double r, double N) {
    spec.validate();
    if (!(r > 0)) throw std::invalid_argument("rho_radial_bound: r must be positive");
    if (!(N > 1)) throw std::invalid_argument("rho_radial_bound: need N > 1");
    const int d = spec.half_dim;
    const double reff = std::max(r, 1.0);
    const double unit_ball = std::pow(M_PI, d) / std::tgamma(d + 1.0); // pi^d/d!

    const auto t_set = radial_slice(spec);
    CantorSpec bar = spec.t_domain_spec();
    bar.alphabet = canonical_alphabet(bar);
    const auto t_set_bar = build_iterate(bar);

    const double near_window = std::pow((N + 1.0) * reff, 2 * d);
    const double case_near = unit_ball * t_set.measure_below(near_window);

    const double far_window = std::pow(1.0 + reff, 2 * d) - std::pow(1.0 - reff, 2 * d);
    const double alpha = radial_cap_constant(N, d);
    const double case_far = alpha * unit_ball * std::pow(reff, 2 * d - 1) *
                            (1.0 + std::pow(N * reff, 1.0 - 2 * d)) *
                            t_set_bar.measure_below(far_window);

    DensityResult res;
    res.kind = DensityResult::Kind::UpperBound;
    res.window_radius = r;
    res.value = std::min({std::max(case_near, case_far), spec.volume(), ball_volume(d, r)});
    return res;
}

DensityResult rho_monte_carlo(const MembershipFn& member, double r, const SearchBox& box,
                              long trials, std::uint64_t seed, long points_per_ball) {
    if (trials < 1) throw std::invalid_argument("rho_monte_carlo: trials must be >= 1");
    if (!(r > 0)) throw std::invalid_argument("rho_monte_carlo: r must be positive");
    const std::size_t dim = box.range.size();
    if (dim == 0 || dim > 8) throw std::invalid_argument("rho_monte_carlo: dimension 1..8");

    const double vol_ball =
        std::pow(M_PI, dim / 2.0) * std::pow(r, static_cast<double>(dim)) /
        std::tgamma(dim / 2.0 + 1.0);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    // one fixed point cloud in the unit ball, reused for every center
    std::vector<std::vector<double>> cloud;
    cloud.reserve(points_per_ball);
    while (static_cast<long>(cloud.size()) < points_per_ball) {
        std::vector<double> p(dim);
        double n2 = 0.0;
        for (auto& c : p) { c = sym(rng); n2 += c * c; }
        if (n2 <= 1.0) cloud.push_back(std::move(p));
    }

    DensityResult res;
    res.kind = DensityResult::Kind::MonteCarloLowerBound;
    res.window_radius = r;

    std::vector<double> pt(dim);
    for (long t = 1; t <= trials; ++t) {
        std::vector<double> center(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            const auto [lo, hi] = box.range[k];
            center[k] = lo + (hi - lo) * halton(static_cast<std::uint64_t>(t) + seed % 9973,
                                                kHaltonPrimes[k]);
        }
        long inside = 0;
        for (const auto& p : cloud) {
            for (std::size_t k = 0; k < dim; ++k) pt[k] = center[k] + r * p[k];
            if (member(pt)) ++inside;
        }
        const double v = vol_ball * static_cast<double>(inside) / cloud.size();
        if (v > res.value) { res.value = v; res.argmax = center; }
    }
    return res;
}

double rho_porous_bound(double nu, double r, int d) {
    if (!(nu > 0) || !(nu < 1)) throw std::invalid_argument("rho_porous_bound: need 0 < nu < 1");
    if (!(r > 0)) throw std::invalid_argument("rho_porous_bound: r must be positive");
    if (d < 1) throw std::invalid_argument("rho_porous_bound: need d >= 1");
    return (1.0 - std::pow(nu, 2 * d)) * ball_volume(d, r);
}

std::vector<int> canonical_alphabet(const CantorSpec& spec) {
    std::vector<int> a(spec.alphabet.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = static_cast<int>(i);
    return a;
}

SubadditivityReport check_weak_subadditivity(const CantorSpec& spec,
                                             const std::vector<std::pair<double, double>>& pairs) {
    spec.validate();
    CantorSpec bar = spec;
    bar.alphabet = canonical_alphabet(spec);
    constexpr double kTol = 1e-12;
    SubadditivityReport rep;
    for (const auto& [x, y] : pairs) {
        if (x > y) throw std::invalid_argument("check_weak_subadditivity: need x <= y per pair");
        const double lhs = cantor_function(spec, y) - cantor_function(spec, x);
        const double rhs = cantor_function(bar, y - x);
        if (lhs > rhs + kTol) {
            rep.pass = false;
            rep.first_violation = SubadditivityReport::Violation{x, y, lhs, rhs};
            return rep;
        }
    }
    return rep;
}

DensityDecayReport check_density_decay(std::int64_t M, const std::vector<int>& alphabet,
                                       const std::function<double(int)>& length_rule, int n_min,
                                       int n_max, double x, const GrowthCondition& cond) {
    if (n_min < 0 || n_max < n_min) throw std::invalid_argument("check_density_decay: bad n range");
    std::vector<std::pair<int, double>> samples;
    for (int n = n_min; n <= n_max; ++n) samples.emplace_back(n, length_rule(n));
    const auto growth = check_growth(cond, samples);
    if (!growth.pass)
        throw std::invalid_argument("check_density_decay: length rule violates growth condition at n=" +
                                    std::to_string(*growth.first_violation));

    DensityDecayReport rep;
    const double q = static_cast<double>(alphabet.size()) / static_cast<double>(M);
    for (int n = n_min; n <= n_max; ++n) {
        CantorSpec s(M, alphabet, n, length_rule(n));
        const double val = iterate_measure_below(s, x);
        const double ratio = val / std::pow(q, n / 2.0);
        rep.ratios.push_back(ratio);
        rep.gamma = std::max(rep.gamma, ratio);
    }
    // least-squares slope of log(ratio) on n; flat or decreasing passes
    double sn = 0, sy = 0, snn = 0, sny = 0;
    const int count = n_max - n_min + 1;
    for (int i = 0; i < count; ++i) {
        const double n = n_min + i;
        const double y = std::log(std::max(rep.ratios[i], 1e-300));
        sn += n; sy += y; snn += n * n; sny += n * y;
    }
    rep.slope = count > 1 ? (count * sny - sn * sy) / (count * snn - sn * sn) : 0.0;
    rep.pass = rep.slope <= 1e-6;
    return rep;
}

} // namespace fup
