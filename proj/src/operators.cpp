#include "fup/operators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "fup/quadrature.hpp"
#include "fup/special.hpp"

namespace fup {

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : eigenvalues) s += v;
    return s;
}

Eigen::MatrixXcd gabor_gram(const LatticeRestriction& restriction) {
    const auto& pts = restriction.points;
    const auto n = static_cast<Eigen::Index>(pts.size());
    const int d = restriction.lattice.d;
    Eigen::MatrixXcd G(n, n);
    auto as_point = [&](const std::vector<double>& coords) {
        PhasePoint p;
        p.x.assign(coords.begin(), coords.begin() + d);
        p.omega.assign(coords.begin() + d, coords.end());
        return p;
    };
    std::vector<PhasePoint> P;
    P.reserve(pts.size());
    for (const auto& c : pts) P.push_back(as_point(c));
    for (Eigen::Index i = 0; i < n; ++i) {
        G(i, i) = 1.0;
        for (Eigen::Index j = 0; j < i; ++j) {
            const auto v = gauss_tf_inner(P[j], P[i]); // G_{lm} = <pi(m)phi, pi(l)phi>
            G(i, j) = v;
            G(j, i) = std::conj(v);
        }
    }
    return G;
}

namespace {

Eigen::VectorXcd random_unit(Eigen::Index n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = std::complex<double>(gauss(rng), gauss(rng));
    v.normalize();
    return v;
}

} // namespace

EigenEstimate power_iteration_largest(const Eigen::MatrixXcd& G, double rel_tol,
                                      std::uint64_t seed, double shift, int max_iter) {
    const Eigen::Index n = G.rows();
    if (n == 0) return {};
    Eigen::VectorXcd v = random_unit(n, seed);
    EigenEstimate est;
    for (int it = 1; it <= max_iter; ++it) {
        Eigen::VectorXcd w = G * v;
        if (shift != 0.0) w -= shift * v;
        const double theta = w.dot(v).real(); // v^H (G - shift) v
        const double lambda = theta + shift;
        const double resid = (G * v - lambda * v).norm();
        est.value = lambda;
        est.residual = resid;
        est.iterations = it;
        if (resid <= rel_tol * std::max(std::abs(lambda), 1e-300)) return est;
        const double nw = w.norm();
        if (nw == 0.0) return est;
        v = w / nw;
    }
    return est;
}

EigenEstimate lanczos_largest(const Eigen::MatrixXcd& G, double rel_tol, std::uint64_t seed,
                              int max_iter) {
    const Eigen::Index n = G.rows();
    if (n == 0) return {};
    max_iter = static_cast<int>(std::min<Eigen::Index>(max_iter, n));

    std::vector<Eigen::VectorXcd> basis;
    std::vector<double> alpha, beta; // tridiagonal entries
    Eigen::VectorXcd v = random_unit(n, seed);
    basis.push_back(v);

    EigenEstimate est;
    for (int m = 1; m <= max_iter; ++m) {
        Eigen::VectorXcd w = G * basis.back();
        const double a = w.dot(basis.back()).real();
        alpha.push_back(a);
        w -= a * basis.back();
        if (basis.size() > 1) w -= beta.back() * basis[basis.size() - 2];
        // full reorthogonalization keeps the certificate honest
        for (const auto& q : basis) w -= q.dot(w) * q;
        const double b = w.norm();

        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (int i = 0; i < m; ++i) {
            T(i, i) = alpha[i];
            if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        const int top = m - 1;
        const double theta = es.eigenvalues()(top);
        const double resid_bound = b * std::abs(es.eigenvectors()(m - 1, top));
        est.value = theta;
        est.residual = resid_bound;
        est.iterations = m;
        if (resid_bound <= rel_tol * std::max(std::abs(theta), 1e-300) || b < 1e-14) {
            // explicit residual at the Ritz vector
            Eigen::VectorXcd y = Eigen::VectorXcd::Zero(n);
            for (int i = 0; i < m; ++i) y += es.eigenvectors()(i, top) * basis[i];
            y.normalize();
            est.residual = (G * y - theta * y).norm();
            return est;
        }
        beta.push_back(b);
        basis.push_back(w / b);
    }
    return est;
}

GaborNorm gabor_multiplier_norm(const LatticeRestriction& restriction, int matrix_cap,
                                std::uint64_t seed) {
    const auto size = restriction.points.size();
    GaborNorm out;
    out.matrix_size = static_cast<int>(size);
    if (size == 0) return out;
    if (static_cast<int>(size) > matrix_cap)
        throw std::invalid_argument(
            "gabor_multiplier_norm: restriction exceeds the matrix cap (" +
            std::to_string(size) + " > " + std::to_string(matrix_cap) +
            "); run a block/sparsified mode or reduce the iterate range");

    const auto G = gabor_gram(restriction);
    // Gram spectra cluster near the top, which stalls plain power iteration;
    // Lanczos reaches the same residual certificate in a few dozen matvecs.
    const EigenEstimate est = size <= 64 ? power_iteration_largest(G, 1e-10, seed)
                                         : lanczos_largest(G, 1e-10, seed);
    const double cell = restriction.lattice.cell_volume();
    out.lambda_max = est.value;
    out.norm = cell * est.value;
    out.certified_residual = cell * est.residual;
    return out;
}

double RadialSpectrum::norm() const {
    double m = 0.0;
    for (double v : lambda) m = std::max(m, v);
    return m;
}

double RadialSpectrum::trace() const {
    double s = 0.0;
    for (double v : lambda) s += v;
    return s;
}

Spectrum RadialSpectrum::spectrum() const {
    Spectrum s;
    s.eigenvalues = lambda;
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<double>());
    s.truncation_index = static_cast<int>(lambda.size());
    s.tail_bound = tail_bound;
    return s;
}

RadialSpectrum daubechies_radial_spectrum(const RadialCantorSpec& spec, double tail_tol) {
    spec.validate();
    if (spec.half_dim != 1)
        throw std::invalid_argument("daubechies_radial_spectrum: only d = 1 is supported");

    const auto t_set = radial_slice(spec); // C_n(R^2, M, A)
    const double t_max = M_PI * t_set.span_hi();

    // smallest K with P(K+1, t_max) < tail_tol; every omitted lambda_k is below it
    int K = static_cast<int>(std::ceil(t_max));
    while (reg_gamma_lower(K + 1.0, t_max) >= tail_tol) ++K;

    RadialSpectrum rs;
    rs.tail_bound = reg_gamma_lower(K + 1.0, t_max);
    rs.lambda.resize(K + 1, 0.0);
    for (int k = 0; k <= K; ++k) {
        double lam = 0.0;
        for (const auto& iv : t_set.intervals())
            lam += reg_gamma_lower(k + 1.0, M_PI * iv.hi) - reg_gamma_lower(k + 1.0, M_PI * iv.lo);
        rs.lambda[k] = lam;
    }
    return rs;
}

double check_lemma_5_2(const std::vector<int>& hermite_orders,
                       const std::vector<PhasePoint>& points) {
    double max_err = 0.0;
    for (int k : hermite_orders) {
        const auto f = sample_hermite(k);
        for (const auto& l : points) {
            if (l.dim() != 1)
                throw std::invalid_argument("check_lemma_5_2: d = 1 points expected");
            const double x = l.x[0], w = l.omega[0];
            // <f, pi(conj l) phi_0> = V_{phi0} f(x, -w)
            const double lhs = std::norm(stft_gauss(f, x, -w));
            const auto bf = bargmann_hermite({k}, {std::complex<double>(x, w)});
            const double rhs = std::norm(bf) * std::exp(-M_PI * (x * x + w * w));
            max_err = std::max(max_err, std::abs(lhs - rhs));
        }
    }
    return max_err;
}

namespace {

// int_0^{2pi} |w + r e^{i theta}|^{q} e^{-(p/2) pi |w + r e^{i theta}|^2} dtheta
double angular_integral(std::complex<double> w, double r, double q, double p, int n_theta) {
    const double aw = std::abs(w);
    double acc = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        const double th = 2.0 * M_PI * i / n_theta;
        const double m2 = aw * aw + r * r + 2.0 * r * aw * std::cos(th);
        double f = std::exp(-0.5 * p * M_PI * m2);
        if (q > 0) f *= std::pow(m2, 0.5 * q);
        acc += f;
    }
    return acc * 2.0 * M_PI / n_theta;
}

double ball_integral_d1(const std::vector<int>& k, const std::vector<std::complex<double>>& z,
                        double R, double p, int nr, int n_theta) {
    const auto rule = gauss_legendre(nr, 0.0, R);
    double acc = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double r = rule.nodes[i];
        acc += rule.weights[i] * r * angular_integral(z[0], r, p * k[0], p, n_theta);
    }
    return acc;
}

double ball_integral_d2(const std::vector<int>& k, const std::vector<std::complex<double>>& z,
                        double R, double p, int nr, int n_theta) {
    // product-polar: r1 = rho cos phi, r2 = rho sin phi over the quarter disk
    const auto rho_rule = gauss_legendre(nr, 0.0, R);
    const auto phi_rule = gauss_legendre(nr, 0.0, 0.5 * M_PI);
    double acc = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double rho = rho_rule.nodes[i];
        for (int j = 0; j < nr; ++j) {
            const double phi = phi_rule.nodes[j];
            const double r1 = rho * std::cos(phi), r2 = rho * std::sin(phi);
            const double g1 = angular_integral(z[0], r1, p * k[0], p, n_theta);
            const double g2 = angular_integral(z[1], r2, p * k[1], p, n_theta);
            acc += rho_rule.weights[i] * phi_rule.weights[j] * g1 * g2 * rho * rho * rho *
                   std::cos(phi) * std::sin(phi);
        }
    }
    return acc;
}

} // namespace

SubaveragingCheck check_subaveraging(const std::vector<int>& k,
                                     const std::vector<std::complex<double>>& z, double R,
                                     double p, double budget) {
    const int d = static_cast<int>(k.size());
    if (d != 1 && d != 2) throw std::invalid_argument("check_subaveraging: d must be 1 or 2");
    if (z.size() != k.size())
        throw std::invalid_argument("check_subaveraging: point dimension mismatch");
    if (!(R > 0) || !(p >= 1)) throw std::invalid_argument("check_subaveraging: bad R or p");

    SubaveragingCheck chk;
    double lhs = 1.0;
    for (int j = 0; j < d; ++j) lhs *= std::pow(std::abs(z[j]), k[j]);
    chk.lhs = std::pow(lhs, p) * std::exp(-0.5 * p * M_PI *
                                          (std::norm(z[0]) + (d == 2 ? std::norm(z[1]) : 0.0)));

    const double prefactor =
        std::pow(0.5 * p, d) / gamma_tail_denominator(d, 0.5 * p * M_PI * R * R);

    int nr = 48, n_theta = 96;
    double prev = d == 1 ? ball_integral_d1(k, z, R, p, nr, n_theta)
                         : ball_integral_d2(k, z, R, p, nr, n_theta);
    for (int round = 0; round < 4; ++round) {
        nr = nr * 3 / 2;
        n_theta *= 2;
        const double cur = d == 1 ? ball_integral_d1(k, z, R, p, nr, n_theta)
                                  : ball_integral_d2(k, z, R, p, nr, n_theta);
        chk.quad_error = std::abs(cur - prev);
        prev = cur;
        if (chk.quad_error <= 0.25 * budget * std::max(cur, 1e-300)) break;
    }
    chk.rhs = prefactor * prev;
    if (chk.quad_error > budget * std::max(prev, 1e-300)) {
        chk.status = SubaveragingCheck::Status::Inconclusive;
        return chk;
    }
    chk.status = chk.lhs <= chk.rhs * (1.0 + budget) + 1e-300
                     ? SubaveragingCheck::Status::Pass
                     : SubaveragingCheck::Status::Fail;
    return chk;
}

StftQuotient eval_stft_quotient(int hermite_order, const IntervalUnion& time_axis,
                                const IntervalUnion& freq_axis, double p) {
    if (hermite_order < 0 || !(p >= 1))
        throw std::invalid_argument("eval_stft_quotient: bad order or p");
    StftQuotient q;

    const int k = hermite_order;
    const double log_c = 0.5 * (k * std::log(M_PI) - std::lgamma(k + 1.0)); // log sqrt(pi^k/k!)
    // |V f(x,w)|^p = exp(p log_c) (x^2+w^2)^{pk/2} e^{-p pi (x^2+w^2)/2}
    auto integrand = [&](double x, double w) {
        const double r2 = x * x + w * w;
        double f = std::exp(p * log_c - 0.5 * p * M_PI * r2);
        if (k > 0) f *= std::pow(r2, 0.5 * p * k);
        return f;
    };

    const auto rule = gauss_legendre(32);
    double num = 0.0;
    for (const auto& ix : time_axis.intervals()) {
        for (const auto& iw : freq_axis.intervals()) {
            const double cx = 0.5 * (ix.lo + ix.hi), hx = 0.5 * (ix.hi - ix.lo);
            const double cw = 0.5 * (iw.lo + iw.hi), hw = 0.5 * (iw.hi - iw.lo);
            double cell = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i)
                for (std::size_t j = 0; j < rule.nodes.size(); ++j)
                    cell += rule.weights[i] * rule.weights[j] *
                            integrand(cx + hx * rule.nodes[i], cw + hw * rule.nodes[j]);
            num += cell * hx * hw;
        }
    }
    // ||V f||_p^p = e^{p log_c} * pi * Gamma(pk/2 + 1) * (2/(p pi))^{pk/2 + 1}
    const double log_den = p * log_c + std::log(M_PI) + std::lgamma(0.5 * p * k + 1.0) +
                           (0.5 * p * k + 1.0) * std::log(2.0 / (p * M_PI));
    q.numerator = num;
    q.denominator = std::exp(log_den);
    q.value = num / q.denominator;
    return q;
}

} // namespace fup
