#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fup/interval_union.hpp"
#include "fup/rational.hpp"

namespace fup {

// n-iterate Cantor set with base M and alphabet A, scaled into [0, L].
// The alphabet must be a nonempty proper subset of {0,...,M-1}, sorted.
struct CantorSpec {
    std::int64_t base = 3;
    std::vector<int> alphabet = {0, 2};
    int iterate = 0;
    double length = 1.0;
    // Set when L was given as a ratio; enables exact endpoint arithmetic.
    std::optional<Rational> exact_length = Rational(1);

    CantorSpec() = default;
    CantorSpec(std::int64_t M, std::vector<int> A, int n, double L);
    CantorSpec(std::int64_t M, std::vector<int> A, int n, Rational L);

    void validate() const;

    int alphabet_size() const { return static_cast<int>(alphabet.size()); }
    // (|A|/M)^n * L
    double measure() const;
    std::optional<Rational> exact_measure() const;
};

// Cartesian product of 1-d iterates, one per phase-space axis.
struct ProductCantor {
    std::vector<CantorSpec> factors;

    int dimension() const { return static_cast<int>(factors.size()); }
    double measure() const;
};

// Radially symmetric iterate in R^{2d}: the set {x : (|x|^2)^d in C_n(R^{2d},M,A)}.
struct RadialCantorSpec {
    int half_dim = 1; // d; ambient dimension is 2d
    double radius = 1.0;
    std::int64_t base = 3;
    std::vector<int> alphabet = {0, 2};
    int iterate = 0;

    void validate() const;
    double t_domain_length() const; // R^{2d}
    CantorSpec t_domain_spec() const;
    // (|A|/M)^n (pi R^2)^d / d!
    double volume() const;
};

struct GrowthCondition {
    enum class Kind { IM, DM };
    Kind kind = Kind::IM;
    double c1 = 1.0;
    double c2 = 1.0;
    std::int64_t base = 3;

    void validate() const;
};

struct GrowthCheckResult {
    bool pass = true;
    std::optional<int> first_violation; // iterate n of the first failing sample
};

// Max iterate for which endpoints are kept as exact rationals (see
// build_iterate_exact); beyond it, or on int64 overflow, callers use doubles.
inline constexpr int kExactIterateCap = 16;

std::vector<std::int64_t> discrete_iterate(const CantorSpec& spec);

IntervalUnion build_iterate(const CantorSpec& spec);

// Exact-endpoint variant. Requires a rational L, iterate <= cap and no
// int64 overflow; returns nullopt when any of those fail.
std::optional<RationalIntervalUnion> build_iterate_exact(const CantorSpec& spec,
                                                         int cap = kExactIterateCap);

// Normalized Cantor function G(x/L): 0 for x<=0, 1 for x>=L, and
// |C_n cap [0,x]| / ((|A|/M)^n L) in between. O(n) digit recursion.
double cantor_function(const CantorSpec& spec, double x);

// |C_n(L,M,A) cap [0,x]| computed from the digit recursion (not the intervals).
double iterate_measure_below(const CantorSpec& spec, double x);

// t-domain iterate C_n(R^{2d}, M, A) of a radial spec.
IntervalUnion radial_slice(const RadialCantorSpec& spec);

// Membership of a point with given |x|^2 in the radial iterate.
bool radial_contains(const RadialCantorSpec& spec, double norm_sq);

GrowthCheckResult check_growth(const GrowthCondition& cond,
                               const std::vector<std::pair<int, double>>& samples);

} // namespace fup
