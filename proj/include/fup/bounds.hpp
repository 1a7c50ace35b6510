#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fup/cantor.hpp"
#include "fup/special.hpp"

namespace fup {

// Prefactor of the single-step density bound: (p/2)^d / (1 - e^{-y} sum_{j<d}
// y^j/j!) with y = (p/2) pi R^2. The p = 1 case dominates every p >= 1.
double density_bound_prefactor(double R, int d, double p);

// p-independent optimized prefactor (the p = 1 prefactor).
double optimized_density_prefactor(double R, int d);

// prefactor * rho
double local_density_bound(double rho, double R, int d, double p);
double local_density_bound_optimized(double rho, double R, int d);

// min over an R grid of prefactor(R) * rho(R), optimized form.
double min_density_bound_over_grid(const std::vector<double>& r_grid, int d,
                                   const std::function<double(double)>& rho_of_r);

// kappa_d((p/2) pi R^2) * (1 - nu^{2d}); the per-step contraction when the
// set is nu-porous at scale R.
double porous_step_factor(double nu, double R, int d, double p);

// Iterated-thickening schedule: radii R_j = c (3/nu)^j with R_1 = h, the
// carried porosities nu_j, the index cut n0, the certified product bound and
// the synthesized (C, beta) envelope.
struct ThickeningSchedule {
    double nu = 0.0;
    double h = 0.0;
    int d = 1;
    double p = 2.0;
    double c = 0.0;                  // = h*nu/3
    std::vector<double> radii;       // R_1..R_n
    std::vector<double> porosities;  // nu_0..nu_{n-1}
    int n = 0;
    int n0 = 0;
    double r_root = 0.0;     // solves kappa_d((p/2) pi r^2)(1-(nu/2)^{2d}) = 1
    double r0 = 0.0;         // r0_fraction * r_root
    double epsilon = 0.0;
    std::vector<double> step_factors;
    double product_bound = 1.0; // prod of step factors up to n - n0
    double beta = 0.0;
    double C = 0.0;
    bool below_threshold = false; // n - n0 <= 0: h not small enough for decay
};

ThickeningSchedule build_schedule(double nu, double h, int d, double p,
                                  double r0_fraction = 0.9);

struct BoundRow {
    int n = 0;
    double scale = 0.0; // R(n) for radial families, L(n) for products
    double rho = 0.0;
    double prefactor = 0.0;
    double bound = 0.0;
    double asymptote = 0.0;
    std::optional<double> measured_norm;
    bool pass = true;
};

struct BoundTable {
    std::vector<BoundRow> rows;
    double gamma = 0.0; // max_n bound(n) / decay(n)
};

// Theorem-level bound rows for the radial family R^{2d}(n) = scale_rule(n),
// with the density bound minimized over the R grid per row.
BoundTable cantor_fup_table_radial(std::int64_t M, const std::vector<int>& alphabet, int d,
                                   const std::function<double(int)>& radius_rule, int n_min,
                                   int n_max, const std::vector<double>& r_grid,
                                   const GrowthCondition& cond, double N = 4.0);

// Same for the symmetric product family with per-axis length rule L(n).
BoundTable cantor_fup_table_product(std::int64_t M, const std::vector<int>& alphabet, int axes,
                                    const std::function<double(int)>& length_rule, int n_min,
                                    int n_max, const std::vector<double>& r_grid,
                                    const GrowthCondition& cond);

struct ImprovementReport {
    bool pass = true;
    std::optional<double> first_violation; // R value
};

// Optimized d = 1 prefactor never exceeds the Gaussian large-sieve prefactor
// 1/(1 - e^{-pi R^2}).
ImprovementReport check_improvement(const std::vector<double>& r_grid);

} // namespace fup
