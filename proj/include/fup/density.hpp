#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fup/cantor.hpp"
#include "fup/interval_union.hpp"

namespace fup {

// Maximal Nyquist density rho(Omega, R) = sup_z |Omega cap B_R(z)| and its
// bounds. `value` never exceeds min(total measure, window volume).
struct DensityResult {
    enum class Kind { Exact, UpperBound, MonteCarloLowerBound };
    double value = 0.0;
    Kind kind = Kind::Exact;
    double window_radius = 0.0;
    std::vector<double> argmax; // maximizing window position, when known
};

// Exact sup_a |set cap [a, a+window]| by breakpoint enumeration: the coverage
// is piecewise linear in a with breakpoints where a window edge meets an
// interval endpoint.
DensityResult rho_exact_1d(const IntervalUnion& set, double window_length);

// Per-axis bound for a Cartesian product: any ball of radius r sits inside a
// hypercube of side 2r, so rho <= prod_j rho_exact_1d(factor_j, 2r).
DensityResult rho_product_bound(const ProductCantor& set, double r);

// Surface-quotient constant for the radial far-field case: cap fraction of
// S^{2d-1} maximized over sphere radii, scaled by (|a|/r)^{2d-1}, for
// |a| >= N r. Cached per (N, d).
double radial_cap_constant(double N, int d);

// Near/far case bound for the radial Cantor iterate; window radii below 1 are
// lifted to 1 first (rho is monotone in the radius), then capped by the
// trivial min(total, ball volume) estimate.
DensityResult rho_radial_bound(const RadialCantorSpec& spec, double r, double N = 4.0);

struct SearchBox {
    std::vector<std::pair<double, double>> range; // per-coordinate [lo, hi]
};

using MembershipFn = std::function<bool(const std::vector<double>&)>;

// Statistical lower bound: quasi-random ball centers over the search box,
// membership quadrature inside each ball.
DensityResult rho_monte_carlo(const MembershipFn& member, double r, const SearchBox& box,
                              long trials, std::uint64_t seed, long points_per_ball = 4096);

// (1 - nu^{2d}) (pi r^2)^d / d!, valid whenever r lies in the porosity scales.
double rho_porous_bound(double nu, double r, int d);

struct SubadditivityReport {
    bool pass = true;
    struct Violation {
        double x, y, lhs, rhs;
    };
    std::optional<Violation> first_violation;
};

// Canonical (compressed) alphabet {0,...,|A|-1} of the same cardinality.
std::vector<int> canonical_alphabet(const CantorSpec& spec);

// Checks G_{n,M,A}(y) - G_{n,M,A}(x) <= G_{n,M,Abar}(y-x) over the given
// pairs, with Abar the canonical alphabet.
SubadditivityReport check_weak_subadditivity(const CantorSpec& spec,
                                             const std::vector<std::pair<double, double>>& pairs);

struct DensityDecayReport {
    double gamma = 0.0; // max_n |C_n(L,M,A) cap [0,x]| / (|A|/M)^{n/2}
    bool pass = false;
    double slope = 0.0; // least-squares slope of log ratio vs n
    std::vector<double> ratios;
};

// Growth of |C_n(L(n),M,A) cap [0,x]| against the (|A|/M)^{n/2} asymptote for
// an interval-length rule satisfying the growth condition.
DensityDecayReport check_density_decay(std::int64_t M, const std::vector<int>& alphabet,
                                       const std::function<double(int)>& length_rule, int n_min,
                                       int n_max, double x, const GrowthCondition& cond);

} // namespace fup
