#include "fup/porosity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace fup {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Gap {
    double lo; // -inf for the leading gap
    double hi; // +inf for the trailing gap
};

std::vector<Gap> complement_gaps(const IntervalUnion& set) {
    std::vector<Gap> gaps;
    gaps.push_back({-kInf, set.empty() ? kInf : set.span_lo()});
    for (std::size_t i = 0; i + 1 < set.size(); ++i)
        gaps.push_back({set[i].hi, set[i + 1].lo});
    if (!set.empty()) gaps.push_back({set.span_hi(), kInf});
    return gaps;
}

// largest single gap inside [x-r, x+r]
double max_gap_in_window(const std::vector<Gap>& gaps, double x, double r) {
    const double lo = x - r, hi = x + r;
    double best = 0.0;
    for (const auto& g : gaps) {
        const double a = std::max(g.lo, lo);
        const double b = std::min(g.hi, hi);
        if (b > a) best = std::max(best, b - a);
    }
    return best;
}

} // namespace

std::optional<double> porosity_violation_at_scale(const IntervalUnion& set, double nu, double r) {
    if (set.empty()) return std::nullopt;
    const auto gaps = complement_gaps(set);
    const double need = 2.0 * nu * r;
    const double slack = 1e-12 * std::max(1.0, need);

    std::vector<double> candidates;
    candidates.reserve(4 * set.size() + gaps.size() * gaps.size() / 2 + 4);
    for (const auto& iv : set.intervals()) {
        candidates.push_back(iv.lo - r);
        candidates.push_back(iv.lo + r);
        candidates.push_back(iv.hi - r);
        candidates.push_back(iv.hi + r);
    }
    // local minima of the max-gap envelope sit where the falling edge of an
    // earlier gap meets the rising edge of a later one
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (!std::isfinite(gaps[i].hi)) continue;
        for (std::size_t j = i + 1; j < gaps.size(); ++j) {
            if (!std::isfinite(gaps[j].lo)) continue;
            candidates.push_back(0.5 * (gaps[i].hi + gaps[j].lo));
        }
    }
    candidates.push_back(set.span_lo());
    candidates.push_back(set.span_hi());

    double worst_val = kInf, worst_x = 0.0;
    for (double x : candidates) {
        const double g = max_gap_in_window(gaps, x, r);
        if (g < worst_val) { worst_val = g; worst_x = x; }
    }
    if (worst_val + slack < need) return worst_x;
    return std::nullopt;
}

PorosityWitness verify_porosity_1d(const IntervalUnion& set, double nu, double alpha_min,
                                   double alpha_max, const PorosityScanOptions& opts) {
    if (!(nu > 0) || !(nu < 1)) throw std::invalid_argument("verify_porosity_1d: need 0 < nu < 1");
    if (!(alpha_min <= alpha_max) || !(alpha_min > 0) || !std::isfinite(alpha_max))
        throw std::invalid_argument("verify_porosity_1d: bad scale range");

    PorosityWitness w;
    w.nu = nu;
    w.alpha_min = alpha_min;
    w.alpha_max = alpha_max;
    if (set.empty()) return w; // nothing to avoid

    std::vector<double> scales;
    for (double r = alpha_min; r < alpha_max * (1 + 1e-12); r *= opts.grid_ratio)
        scales.push_back(std::min(r, alpha_max));
    if (scales.empty() || scales.back() < alpha_max) scales.push_back(alpha_max);

    if (opts.include_critical) {
        std::vector<double> es;
        for (const auto& iv : set.intervals()) { es.push_back(iv.lo); es.push_back(iv.hi); }
        std::vector<double> crit;
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                const double d = 0.5 * std::abs(es[j] - es[i]);
                if (d >= alpha_min && d <= alpha_max) crit.push_back(d);
            }
        std::sort(crit.begin(), crit.end());
        crit.erase(std::unique(crit.begin(), crit.end(),
                               [](double a, double b) { return std::abs(a - b) < 1e-15; }),
                   crit.end());
        scales.insert(scales.end(), crit.begin(), crit.end());
        std::sort(scales.begin(), scales.end());
    }

    for (double r : scales) {
        w.scales_checked.push_back(r);
        if (auto x = porosity_violation_at_scale(set, nu, r)) {
            w.status = PorosityWitness::Status::Refuted;
            w.counterexample = {*x, r};
            return w;
        }
    }
    return w;
}

PorosityWitness certify_cantor_porosity(const CantorSpec& spec) {
    spec.validate();
    const double M = static_cast<double>(spec.base);
    const double nu = 1.0 / (M * M);
    const double alpha_min = spec.length * std::pow(M, -(spec.iterate - 1));

    PorosityWitness w;
    w.nu = nu;
    w.alpha_min = alpha_min;
    w.alpha_max = kInf;

    const auto set = build_iterate(spec);
    auto cross = verify_porosity_1d(set, nu, alpha_min, spec.length * M);
    w.scales_checked = cross.scales_checked;
    if (!cross.verified()) {
        w.status = PorosityWitness::Status::Refuted;
        w.counterexample = cross.counterexample;
    }
    return w;
}

IntervalUnion thicken_1d(const IntervalUnion& set, double r) {
    if (r < 0) throw std::invalid_argument("thicken_1d: r must be >= 0");
    if (set.empty() || r == 0) return set;
    std::vector<IntervalUnion::Interval> iv;
    iv.reserve(set.size());
    for (const auto& p : set.intervals()) iv.push_back({p.lo - r, p.hi + r});
    return IntervalUnion(std::move(iv));
}

ThickenedPorosity thickened_porosity(double nu, double r, double R, double alpha_max) {
    if (!(nu > 0) || !(nu < 1)) throw std::invalid_argument("thickened_porosity: need 0 < nu < 1");
    if (r < 0 || !(r < nu * alpha_max))
        throw std::invalid_argument("thickened_porosity: need 0 <= r < nu*alpha_max");
    if (!(r / nu < R) || R > alpha_max)
        throw std::invalid_argument("thickened_porosity: need r/nu < R <= alpha_max");
    return {nu - r / R, R, alpha_max};
}

namespace {

// distance from a coordinate to the nearest interval of a sorted union
double axis_distance(const IntervalUnion& u, double x) {
    if (u.empty()) return kInf;
    const auto& iv = u.intervals();
    auto it = std::lower_bound(iv.begin(), iv.end(), x,
                               [](const IntervalUnion::Interval& p, double v) { return p.hi < v; });
    if (it == iv.end()) return x - iv.back().hi;
    if (x >= it->lo) return 0.0;
    double d = it->lo - x;
    if (it != iv.begin()) d = std::min(d, x - std::prev(it)->hi);
    return d;
}

// clearance(y) = Euclidean distance from y to the product set; 1-Lipschitz
double clearance(const std::vector<IntervalUnion>& axes, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t k = 0; k < axes.size(); ++k) {
        const double d = axis_distance(axes[k], y[k]);
        if (!std::isfinite(d)) return kInf;
        s += d * d;
    }
    return std::sqrt(s);
}

struct BnbBox {
    std::vector<double> lo, hi;
    double upper; // clearance bound over the box
};

// Decide sup{ clearance(y) : |y-x| <= rho } >= target, by branch-and-bound on
// the 1-Lipschitz clearance. Returns true when a witness point is found,
// false when the certified upper bound over the ball drops below target.
bool gap_ball_exists(const std::vector<IntervalUnion>& axes, const std::vector<double>& x,
                     double rho, double target, long node_budget = 200000) {
    const std::size_t dim = x.size();
    auto center = [&](const BnbBox& b) {
        std::vector<double> c(dim);
        for (std::size_t k = 0; k < dim; ++k) c[k] = 0.5 * (b.lo[k] + b.hi[k]);
        return c;
    };
    auto half_diag = [&](const BnbBox& b) {
        double s = 0.0;
        for (std::size_t k = 0; k < dim; ++k) s += 0.25 * (b.hi[k] - b.lo[k]) * (b.hi[k] - b.lo[k]);
        return std::sqrt(s);
    };
    auto clamp_to_ball = [&](std::vector<double> c) {
        double d2 = 0.0;
        for (std::size_t k = 0; k < dim; ++k) d2 += (c[k] - x[k]) * (c[k] - x[k]);
        const double d = std::sqrt(d2);
        if (d > rho && d > 0) {
            const double s = rho / d;
            for (std::size_t k = 0; k < dim; ++k) c[k] = x[k] + s * (c[k] - x[k]);
        }
        return c;
    };

    BnbBox root;
    root.lo.resize(dim);
    root.hi.resize(dim);
    for (std::size_t k = 0; k < dim; ++k) { root.lo[k] = x[k] - rho; root.hi[k] = x[k] + rho; }
    root.upper = clearance(axes, clamp_to_ball(center(root))) + half_diag(root);

    std::vector<BnbBox> heap{root};
    auto cmp = [](const BnbBox& a, const BnbBox& b) { return a.upper < b.upper; };
    std::make_heap(heap.begin(), heap.end(), cmp);

    const double eps = 1e-12 * std::max(1.0, target);
    for (long node = 0; node < node_budget && !heap.empty(); ++node) {
        std::pop_heap(heap.begin(), heap.end(), cmp);
        BnbBox b = std::move(heap.back());
        heap.pop_back();
        if (b.upper < target) return false; // certified: no gap ball
        const auto c = clamp_to_ball(center(b));
        if (clearance(axes, c) >= target - eps) return true;
        // split longest edge
        std::size_t axis = 0;
        double len = 0.0;
        for (std::size_t k = 0; k < dim; ++k)
            if (b.hi[k] - b.lo[k] > len) { len = b.hi[k] - b.lo[k]; axis = k; }
        if (len < eps) continue;
        for (int side = 0; side < 2; ++side) {
            BnbBox child = b;
            const double mid = 0.5 * (b.lo[axis] + b.hi[axis]);
            (side == 0 ? child.hi[axis] : child.lo[axis]) = mid;
            // skip children entirely outside the search ball
            double d2 = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                const double d = std::max({child.lo[k] - x[k], x[k] - child.hi[k], 0.0});
                d2 += d * d;
            }
            if (d2 > rho * rho) continue;
            child.upper = clearance(axes, clamp_to_ball(center(child))) + half_diag(child);
            heap.push_back(std::move(child));
            std::push_heap(heap.begin(), heap.end(), cmp);
        }
    }
    return true; // budget exhausted: treat as porous (never refute without a certificate)
}

} // namespace

PorosityWitness sample_porosity_product(const ProductCantor& set, double nu, double alpha_min,
                                        double alpha_max, long trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("sample_porosity_product: trials must be >= 1");
    if (!(nu > 0) || !(nu < 1))
        throw std::invalid_argument("sample_porosity_product: need 0 < nu < 1");
    if (set.factors.empty()) throw std::invalid_argument("sample_porosity_product: no factors");

    std::vector<IntervalUnion> axes;
    axes.reserve(set.factors.size());
    for (const auto& f : set.factors) axes.push_back(build_iterate(f));

    PorosityWitness w;
    w.nu = nu;
    w.alpha_min = alpha_min;
    w.alpha_max = alpha_max;
    w.seed = seed;
    w.trials = trials;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t dim = axes.size();

    for (long t = 0; t < trials; ++t) {
        const double r =
            alpha_min * std::pow(alpha_max / alpha_min, unit(rng)); // log-uniform scale
        std::vector<double> x(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            const double lo = axes[k].span_lo() - r;
            const double hi = axes[k].span_hi() + r;
            x[k] = lo + (hi - lo) * unit(rng);
        }
        if (!gap_ball_exists(axes, x, (1.0 - nu) * r, nu * r)) {
            w.status = PorosityWitness::Status::Refuted;
            w.counterexample = {x[0], r};
            w.counterexample_center = x;
            w.scales_checked.push_back(r);
            return w;
        }
    }
    return w;
}

} // namespace fup
