#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fup/bargmann.hpp"
#include "fup/cantor.hpp"
#include "fup/lattice.hpp"

namespace fup {

// Computed eigenvalues in descending order with a certified truncation tail.
struct Spectrum {
    std::vector<double> eigenvalues;
    int truncation_index = 0;
    double tail_bound = 0.0;

    double norm() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
    double sum() const;
};

inline constexpr int kDefaultMatrixCap = 4096;

// Hermitian Gram matrix G_{lm} = <pi(m) phi_0, pi(l) phi_0> over the
// restriction points.
Eigen::MatrixXcd gabor_gram(const LatticeRestriction& restriction);

struct EigenEstimate {
    double value = 0.0;    // Rayleigh quotient at the returned vector
    double residual = 0.0; // ||G v - value v||, certifies |value - lambda|
    int iterations = 0;
};

// Plain power iteration with Rayleigh-residual stopping; `shift` iterates on
// G - shift I (the estimate is reported unshifted).
EigenEstimate power_iteration_largest(const Eigen::MatrixXcd& G, double rel_tol = 1e-10,
                                      std::uint64_t seed = 1, double shift = 0.0,
                                      int max_iter = 100000);

// Lanczos with full reorthogonalization, residual-certified; used for the
// larger Gram matrices where clustered top eigenvalues stall power iteration.
EigenEstimate lanczos_largest(const Eigen::MatrixXcd& G, double rel_tol = 1e-10,
                              std::uint64_t seed = 1, int max_iter = 600);

struct GaborNorm {
    double norm = 0.0;       // |A_Lambda| * lambda_max(G)
    double lambda_max = 0.0;
    int matrix_size = 0;
    double certified_residual = 0.0; // residual * cell volume
};

// Operator norm of the Gabor multiplier restricted to the given lattice
// points. Throws when the restriction exceeds `matrix_cap` (advising a
// block/sparsified run with a reduced range).
GaborNorm gabor_multiplier_norm(const LatticeRestriction& restriction,
                                int matrix_cap = kDefaultMatrixCap, std::uint64_t seed = 1);

struct RadialSpectrum {
    std::vector<double> lambda; // indexed by Hermite order k
    double tail_bound = 0.0;    // bound on every omitted lambda_k
    double norm() const;
    double trace() const;
    Spectrum spectrum() const; // descending view
};

// Eigenvalues lambda_k = int_T s^k e^{-s}/k! ds of the Daubechies operator on
// a radial Cantor iterate (d = 1), T = pi * C_n(R^2, M, A), via differences of
// regularized incomplete gammas.
RadialSpectrum daubechies_radial_spectrum(const RadialCantorSpec& spec, double tail_tol = 1e-12);

// Termwise identity |<f, pi(conj l) phi_0>|^2 = |Bf(l)|^2 e^{-pi |l|^2} for
// Hermite test signals; returns the max absolute error.
double check_lemma_5_2(const std::vector<int>& hermite_orders,
                       const std::vector<PhasePoint>& points);

struct SubaveragingCheck {
    enum class Status { Pass, Fail, Inconclusive } status = Status::Pass;
    double lhs = 0.0;
    double rhs = 0.0;        // prefactor times ball integral
    double quad_error = 0.0; // refinement-step difference
};

// Point evaluation vs. ball average for monomials z^k in F^p(C^d), d in {1,2};
// `budget` is the relative quadrature tolerance.
SubaveragingCheck check_subaveraging(const std::vector<int>& k,
                                     const std::vector<std::complex<double>>& z, double R,
                                     double p, double budget = 1e-6);

struct StftQuotient {
    double value = 0.0;      // ||V f chi_Omega||_p^p / ||V f||_p^p
    double numerator = 0.0;
    double denominator = 0.0;
};

// Concentration quotient of a Hermite signal on a two-axis product set (d=1).
StftQuotient eval_stft_quotient(int hermite_order, const IntervalUnion& time_axis,
                                const IntervalUnion& freq_axis, double p);

} // namespace fup
