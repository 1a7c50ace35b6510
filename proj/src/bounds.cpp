#include "fup/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "fup/density.hpp"

namespace fup {

double density_bound_prefactor(double R, int d, double p) {
    if (!(R > 0)) throw std::invalid_argument("density_bound_prefactor: R must be positive");
    if (d < 1) throw std::invalid_argument("density_bound_prefactor: d must be >= 1");
    if (!(p >= 1)) throw std::invalid_argument("density_bound_prefactor: p must be >= 1");
    const double y = 0.5 * p * M_PI * R * R;
    return std::pow(0.5 * p, d) / gamma_tail_denominator(d, y);
}

double optimized_density_prefactor(double R, int d) { return density_bound_prefactor(R, d, 1.0); }

double local_density_bound(double rho, double R, int d, double p) {
    if (rho < 0) throw std::invalid_argument("local_density_bound: rho must be >= 0");
    return rho == 0 ? 0.0 : density_bound_prefactor(R, d, p) * rho;
}

double local_density_bound_optimized(double rho, double R, int d) {
    return local_density_bound(rho, R, d, 1.0);
}

double min_density_bound_over_grid(const std::vector<double>& r_grid, int d,
                                   const std::function<double(double)>& rho_of_r) {
    if (r_grid.empty()) throw std::invalid_argument("min_density_bound_over_grid: empty grid");
    double best = std::numeric_limits<double>::infinity();
    for (double R : r_grid)
        best = std::min(best, local_density_bound_optimized(rho_of_r(R), R, d));
    return best;
}

double porous_step_factor(double nu, double R, int d, double p) {
    if (!(nu > 0) || !(nu < 1)) throw std::invalid_argument("porous_step_factor: need 0 < nu < 1");
    if (!(R > 0)) throw std::invalid_argument("porous_step_factor: R must be positive");
    return kappa(d, 0.5 * p * M_PI * R * R) * (1.0 - std::pow(nu, 2 * d));
}

namespace {

// unique r with kappa_d((p/2) pi r^2) (1 - (nu/2)^{2d}) = 1, by bisection
double solve_unit_step_radius(double nu, int d, double p) {
    const double target = 1.0 / (1.0 - std::pow(0.5 * nu, 2 * d));
    auto f = [&](double r) { return kappa(d, 0.5 * p * M_PI * r * r) - target; };
    double lo = 1e-12, hi = 1.0;
    while (f(hi) < 0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0 ? lo : hi) = mid;
        if (hi - lo < 1e-12 * hi) break;
    }
    return 0.5 * (lo + hi);
}

} // namespace

ThickeningSchedule build_schedule(double nu, double h, int d, double p, double r0_fraction) {
    if (!(nu > 0) || !(nu < 1)) throw std::invalid_argument("build_schedule: need 0 < nu < 1");
    if (!(h > 0) || h > 1) throw std::invalid_argument("build_schedule: need 0 < h <= 1");
    if (d < 1) throw std::invalid_argument("build_schedule: need d >= 1");
    if (!(p >= 1)) throw std::invalid_argument("build_schedule: need p >= 1");
    if (!(r0_fraction > 0) || !(r0_fraction < 1))
        throw std::invalid_argument("build_schedule: need 0 < r0_fraction < 1");

    ThickeningSchedule s;
    s.nu = nu;
    s.h = h;
    s.d = d;
    s.p = p;
    s.c = h * nu / 3.0;

    const double a = 3.0 / nu;
    for (double R = h; R <= 1.0 + 1e-15; R *= a) s.radii.push_back(R);
    s.n = static_cast<int>(s.radii.size());

    double partial = 0.0;
    s.porosities.push_back(nu); // nu_0, no thickening yet
    for (int j = 1; j < s.n; ++j) {
        partial += s.radii[j - 1];
        s.porosities.push_back(nu - partial / s.radii[j]);
    }
    for (int j = 1; j <= s.n; ++j)
        s.step_factors.push_back(porous_step_factor(s.porosities[j - 1], s.radii[j - 1], d, p));

    s.r_root = solve_unit_step_radius(nu, d, p);
    s.r0 = r0_fraction * s.r_root;
    int n0 = 0;
    while (s.radii[s.n - 1] * std::pow(nu / 3.0, n0) > s.r0) ++n0;
    s.n0 = n0;
    s.epsilon = 1.0 - kappa(d, 0.5 * p * M_PI * s.r0 * s.r0) * (1.0 - std::pow(0.5 * nu, 2 * d));
    s.beta = -std::log1p(-s.epsilon) / std::log(3.0 / nu);
    s.C = std::pow(1.0 - s.epsilon, -(s.n0 + 1));

    if (s.n - s.n0 <= 0) {
        s.below_threshold = true;
        s.product_bound = 1.0;
        return s;
    }
    double prod = 1.0;
    for (int j = 0; j < s.n - s.n0; ++j) prod *= s.step_factors[j];
    s.product_bound = prod;
    if (s.product_bound > s.C * std::pow(h, s.beta) * (1.0 + 1e-12))
        throw std::logic_error("build_schedule: product bound exceeds C*h^beta envelope");
    return s;
}

namespace {

std::vector<std::pair<int, double>> rule_samples(const std::function<double(int)>& rule, int n_min,
                                                 int n_max) {
    std::vector<std::pair<int, double>> s;
    for (int n = n_min; n <= n_max; ++n) s.emplace_back(n, rule(n));
    return s;
}

void gate_growth(const GrowthCondition& cond, const std::function<double(int)>& rule, int n_min,
                 int n_max) {
    const auto res = check_growth(cond, rule_samples(rule, n_min, n_max));
    if (!res.pass)
        throw std::invalid_argument("cantor_fup_table: growth condition fails at n=" +
                                    std::to_string(*res.first_violation));
}

} // namespace

BoundTable cantor_fup_table_radial(std::int64_t M, const std::vector<int>& alphabet, int d,
                                   const std::function<double(int)>& radius_rule, int n_min,
                                   int n_max, const std::vector<double>& r_grid,
                                   const GrowthCondition& cond, double N) {
    gate_growth(cond, radius_rule, n_min, n_max);
    const double q = static_cast<double>(alphabet.size()) / static_cast<double>(M);

    BoundTable table;
    for (int n = n_min; n <= n_max; ++n) {
        RadialCantorSpec spec;
        spec.half_dim = d;
        spec.base = M;
        spec.alphabet = alphabet;
        spec.iterate = n;
        spec.radius = std::pow(radius_rule(n), 1.0 / (2.0 * d)); // rule gives R^{2d}
        spec.validate();

        BoundRow row;
        row.n = n;
        row.scale = spec.radius;
        double best = std::numeric_limits<double>::infinity();
        for (double R : r_grid) {
            const double rho = rho_radial_bound(spec, R, N).value;
            const double b = local_density_bound_optimized(rho, R, d);
            if (b < best) {
                best = b;
                row.rho = rho;
                row.prefactor = optimized_density_prefactor(R, d);
            }
        }
        row.bound = best;
        table.gamma = std::max(table.gamma, row.bound / std::pow(q, n / 2.0));
        table.rows.push_back(row);
    }
    for (auto& row : table.rows) row.asymptote = table.gamma * std::pow(q, row.n / 2.0);
    return table;
}

BoundTable cantor_fup_table_product(std::int64_t M, const std::vector<int>& alphabet, int axes,
                                    const std::function<double(int)>& length_rule, int n_min,
                                    int n_max, const std::vector<double>& r_grid,
                                    const GrowthCondition& cond) {
    if (axes < 2 || axes % 2 != 0)
        throw std::invalid_argument("cantor_fup_table_product: axes must be even and >= 2");
    gate_growth(cond, length_rule, n_min, n_max);
    const int d = axes / 2;
    const double q = static_cast<double>(alphabet.size()) / static_cast<double>(M);

    BoundTable table;
    for (int n = n_min; n <= n_max; ++n) {
        ProductCantor prod;
        for (int k = 0; k < axes; ++k)
            prod.factors.emplace_back(M, alphabet, n, length_rule(n));

        BoundRow row;
        row.n = n;
        row.scale = length_rule(n);
        double best = std::numeric_limits<double>::infinity();
        for (double R : r_grid) {
            const double rho = rho_product_bound(prod, R).value;
            const double b = local_density_bound_optimized(rho, R, d);
            if (b < best) {
                best = b;
                row.rho = rho;
                row.prefactor = optimized_density_prefactor(R, d);
            }
        }
        row.bound = best;
        table.gamma = std::max(table.gamma, row.bound / std::pow(q, axes * n / 2.0));
        table.rows.push_back(row);
    }
    for (auto& row : table.rows)
        row.asymptote = table.gamma * std::pow(q, axes * row.n / 2.0);
    return table;
}

ImprovementReport check_improvement(const std::vector<double>& r_grid) {
    ImprovementReport rep;
    for (double R : r_grid) {
        if (!(R > 0)) throw std::invalid_argument("check_improvement: R must be positive");
        const double lhs = optimized_density_prefactor(R, 1);
        const double rhs = 1.0 / (1.0 - std::exp(-M_PI * R * R));
        if (lhs > rhs * (1.0 + 1e-12)) {
            rep.pass = false;
            rep.first_violation = R;
            return rep;
        }
    }
    return rep;
}

} // namespace fup
