#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fup/cantor.hpp"
#include "fup/interval_union.hpp"

namespace fup {

// nu-porosity certificate: every ball of radius r in [alpha_min, alpha_max]
// contains a gap ball of radius nu*r. Refutations carry the offending ball.
struct PorosityWitness {
    double nu = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
    enum class Status { Verified, Refuted } status = Status::Verified;
    std::optional<std::pair<double, double>> counterexample; // (center, radius), 1-d checks
    std::vector<double> counterexample_center;               // full center for product checks
    std::vector<double> scales_checked;
    std::uint64_t seed = 0; // fixed RNG seed for statistical witnesses
    long trials = 0;

    bool verified() const { return status == Status::Verified; }
};

struct PorosityScanOptions {
    double grid_ratio = 1.05;      // geometric scale grid density
    bool include_critical = true;  // add half pairwise endpoint differences
};

// Exact per-scale sweep: the largest complement gap inside the sliding window
// [x-r, x+r] is piecewise linear in x, so its global minimum is attained at
// endpoint offsets e +- r or at midpoints between a gap end and a later gap
// start. The only incompleteness is between grid scales (<= 5% apart).
PorosityWitness verify_porosity_1d(const IntervalUnion& set, double nu, double alpha_min,
                                   double alpha_max, const PorosityScanOptions& opts = {});

// Refuting x for a single scale; nullopt when porous at that scale.
std::optional<double> porosity_violation_at_scale(const IntervalUnion& set, double nu, double r);

// Certificate (nu = M^-2, scales L*M^{-n+1} to infinity) for a Cantor iterate,
// cross-checked by the sweep on [L*M^{-n+1}, L*M]; above L*M the window is
// wider than the whole set and porosity is trivial.
PorosityWitness certify_cantor_porosity(const CantorSpec& spec);

IntervalUnion thicken_1d(const IntervalUnion& set, double r);

struct ThickenedPorosity {
    double nu = 0.0;
    double alpha_min = 0.0;
    double alpha_max = 0.0;
};

// Porosity carried to the r-thickened set: nu' = nu - r/R on scales R to
// alpha_max. Requires 0 <= r < nu*alpha_max and r/nu < R <= alpha_max.
ThickenedPorosity thickened_porosity(double nu, double r, double R, double alpha_max);

// Monte-Carlo porosity check for Cartesian products. Each trial decides
// exactly (Lipschitz branch-and-bound on the clearance function) whether the
// sampled ball contains a gap ball, so a refutation is exact; verification
// only covers the sampled trials.
PorosityWitness sample_porosity_product(const ProductCantor& set, double nu, double alpha_min,
                                        double alpha_max, long trials, std::uint64_t seed);

} // namespace fup
