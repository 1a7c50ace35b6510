#pragma once

#include <cstdint>
#include <vector>

namespace fup {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1]; nodes by Newton iteration on P_n.
QuadratureRule gauss_legendre(int n);

// Same rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

// Halton low-discrepancy point, one coordinate.
double halton(std::uint64_t index, unsigned base);

inline constexpr unsigned kHaltonPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

} // namespace fup
