#include "fup/cantor.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fup {

CantorSpec::CantorSpec(std::int64_t M, std::vector<int> A, int n, double L)
    : base(M), alphabet(std::move(A)), iterate(n), length(L), exact_length(std::nullopt) {
    validate();
}

CantorSpec::CantorSpec(std::int64_t M, std::vector<int> A, int n, Rational L)
    : base(M), alphabet(std::move(A)), iterate(n), length(L.to_double()), exact_length(L) {
    validate();
}

void CantorSpec::validate() const {
    if (base <= 1) throw std::invalid_argument("CantorSpec: base must exceed 1");
    if (alphabet.empty()) throw std::invalid_argument("CantorSpec: empty alphabet");
    if (static_cast<std::int64_t>(alphabet.size()) >= base)
        throw std::invalid_argument("CantorSpec: alphabet must be a proper subset of the digit set");
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        if (alphabet[i] < 0 || alphabet[i] >= base)
            throw std::invalid_argument("CantorSpec: digit out of [0, M-1]");
        if (i > 0 && alphabet[i] <= alphabet[i - 1])
            throw std::invalid_argument("CantorSpec: digits must be strictly increasing");
    }
    if (iterate < 0) throw std::invalid_argument("CantorSpec: iterate must be >= 0");
    if (!(length > 0)) throw std::invalid_argument("CantorSpec: length must be positive");
}

double CantorSpec::measure() const {
    return std::pow(static_cast<double>(alphabet.size()) / static_cast<double>(base), iterate) *
           length;
}

std::optional<Rational> CantorSpec::exact_measure() const {
    if (!exact_length) return std::nullopt;
    try {
        Rational ratio(static_cast<std::int64_t>(alphabet.size()), base);
        Rational m = *exact_length;
        for (int i = 0; i < iterate; ++i) m = m * ratio;
        return m;
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

double ProductCantor::measure() const {
    double m = 1.0;
    for (const auto& f : factors) m *= f.measure();
    return m;
}

void RadialCantorSpec::validate() const {
    if (half_dim < 1) throw std::invalid_argument("RadialCantorSpec: half_dim must be >= 1");
    if (!(radius > 0)) throw std::invalid_argument("RadialCantorSpec: radius must be positive");
    t_domain_spec().validate();
}

double RadialCantorSpec::t_domain_length() const {
    return std::pow(radius, 2 * half_dim);
}

CantorSpec RadialCantorSpec::t_domain_spec() const {
    CantorSpec s;
    s.base = base;
    s.alphabet = alphabet;
    s.iterate = iterate;
    s.length = t_domain_length();
    s.exact_length = std::nullopt;
    return s;
}

double RadialCantorSpec::volume() const {
    double ball = std::pow(M_PI * radius * radius, half_dim) / std::tgamma(half_dim + 1.0);
    return std::pow(static_cast<double>(alphabet.size()) / static_cast<double>(base), iterate) *
           ball;
}

void GrowthCondition::validate() const {
    if (!(c1 > 0) || !(c2 > 0) || c1 > c2)
        throw std::invalid_argument("GrowthCondition: need 0 < c1 <= c2");
    if (base <= 1) throw std::invalid_argument("GrowthCondition: base must exceed 1");
}

namespace {

std::int64_t checked_pow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / base)
            throw std::range_error("Cantor iterate: M^n exceeds 64-bit range");
        r *= base;
    }
    return r;
}

} // namespace

std::vector<std::int64_t> discrete_iterate(const CantorSpec& spec) {
    spec.validate();
    checked_pow(spec.base, spec.iterate);
    const auto& A = spec.alphabet;
    std::vector<std::int64_t> weights(spec.iterate, 1);
    for (int j = 1; j < spec.iterate; ++j) weights[j] = weights[j - 1] * spec.base;
    // most-significant digit first with a sorted alphabet yields ascending sums
    std::vector<std::int64_t> vals{0};
    for (int j = spec.iterate - 1; j >= 0; --j) {
        std::vector<std::int64_t> next;
        next.reserve(vals.size() * A.size());
        for (std::int64_t v : vals)
            for (int a : A) next.push_back(v + a * weights[j]);
        vals.swap(next);
    }
    return vals;
}

IntervalUnion build_iterate(const CantorSpec& spec) {
    auto digits = discrete_iterate(spec);
    const double w = spec.length / std::pow(static_cast<double>(spec.base), spec.iterate);
    std::vector<IntervalUnion::Interval> iv;
    iv.reserve(digits.size());
    for (std::int64_t k : digits)
        iv.push_back({static_cast<double>(k) * w, static_cast<double>(k + 1) * w});
    return IntervalUnion(std::move(iv));
}

std::optional<RationalIntervalUnion> build_iterate_exact(const CantorSpec& spec, int cap) {
    if (!spec.exact_length || spec.iterate > cap) return std::nullopt;
    try {
        auto digits = discrete_iterate(spec);
        Rational w = *spec.exact_length / Rational::pow_int(spec.base, spec.iterate);
        std::vector<RationalIntervalUnion::Interval> iv;
        iv.reserve(digits.size());
        for (std::int64_t k : digits)
            iv.push_back({Rational(k) * w, Rational(k + 1) * w});
        return RationalIntervalUnion(std::move(iv));
    } catch (const std::overflow_error&) {
        return std::nullopt;
    } catch (const std::range_error&) {
        return std::nullopt;
    }
}

namespace {

// G_n on the unit iterate: share of the measure of C_n(1,M,A) below t.
double unit_cantor_function(const CantorSpec& spec, double t, int level) {
    if (t <= 0) return 0.0;
    if (t >= 1) return 1.0;
    if (level == 0) return t;
    const double s = t * static_cast<double>(spec.base);
    int k = static_cast<int>(std::floor(s));
    if (k >= spec.base) k = static_cast<int>(spec.base) - 1;
    int below = 0;
    bool hit = false;
    for (int a : spec.alphabet) {
        if (a < k) ++below;
        if (a == k) hit = true;
    }
    double acc = static_cast<double>(below);
    if (hit) acc += unit_cantor_function(spec, s - k, level - 1);
    return acc / static_cast<double>(spec.alphabet.size());
}

} // namespace

double cantor_function(const CantorSpec& spec, double x) {
    spec.validate();
    return unit_cantor_function(spec, x / spec.length, spec.iterate);
}

double iterate_measure_below(const CantorSpec& spec, double x) {
    return cantor_function(spec, x) * spec.measure();
}

IntervalUnion radial_slice(const RadialCantorSpec& spec) {
    spec.validate();
    return build_iterate(spec.t_domain_spec());
}

bool radial_contains(const RadialCantorSpec& spec, double norm_sq) {
    if (norm_sq < 0) return false;
    const double t = std::pow(norm_sq, spec.half_dim);
    return radial_slice(spec).contains(t);
}

GrowthCheckResult check_growth(const GrowthCondition& cond,
                               const std::vector<std::pair<int, double>>& samples) {
    cond.validate();
    if (samples.empty()) throw std::invalid_argument("check_growth: no samples");
    constexpr double kRelTol = 1e-9;
    GrowthCheckResult res;
    for (const auto& [n, value] : samples) {
        const double scale = std::pow(static_cast<double>(cond.base), n / 2.0);
        const double lo = cond.c1 * scale;
        const double hi = cond.c2 * scale;
        if (value < lo * (1 - kRelTol) || value > hi * (1 + kRelTol)) {
            res.pass = false;
            res.first_violation = n;
            return res;
        }
    }
    return res;
}

} // namespace fup
