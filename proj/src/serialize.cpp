#include "fup/serialize.hpp"

#include <cstdio>

namespace fup {

json to_json(const CantorSpec& spec) {
    json j;
    j["M"] = spec.base;
    j["alphabet"] = spec.alphabet;
    j["n"] = spec.iterate;
    j["L"] = spec.length;
    return j;
}

CantorSpec cantor_spec_from_json(const json& j) {
    CantorSpec s;
    s.base = j.at("M").get<std::int64_t>();
    s.alphabet = j.at("alphabet").get<std::vector<int>>();
    s.iterate = j.at("n").get<int>();
    if (j.at("L").is_number_integer()) {
        s.exact_length = Rational(j.at("L").get<std::int64_t>());
        s.length = s.exact_length->to_double();
    } else {
        s.length = j.at("L").get<double>();
        s.exact_length = std::nullopt;
    }
    s.validate();
    return s;
}

json to_json(const IntervalUnion& u) {
    json j = json::array();
    for (const auto& iv : u.intervals()) j.push_back({iv.lo, iv.hi});
    return j;
}

IntervalUnion interval_union_from_json(const json& j) {
    std::vector<IntervalUnion::Interval> iv;
    for (const auto& p : j) iv.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return IntervalUnion(std::move(iv));
}

json to_json(const PorosityWitness& w) {
    json j;
    j["nu"] = w.nu;
    j["alpha_min"] = w.alpha_min;
    j["alpha_max"] = std::isfinite(w.alpha_max) ? json(w.alpha_max) : json("inf");
    j["status"] = w.verified() ? "verified" : "refuted";
    if (w.counterexample)
        j["counterexample"] = {{"center", w.counterexample->first},
                               {"radius", w.counterexample->second}};
    if (!w.counterexample_center.empty()) j["counterexample_center"] = w.counterexample_center;
    j["scales_checked"] = w.scales_checked.size();
    j["seed"] = w.seed;
    j["trials"] = w.trials;
    return j;
}

json to_json(const DensityResult& r) {
    json j;
    j["value"] = r.value;
    switch (r.kind) {
        case DensityResult::Kind::Exact: j["kind"] = "exact"; break;
        case DensityResult::Kind::UpperBound: j["kind"] = "upperBound"; break;
        case DensityResult::Kind::MonteCarloLowerBound: j["kind"] = "monteCarloLowerBound"; break;
    }
    j["window_radius"] = r.window_radius;
    if (!r.argmax.empty()) j["argmax"] = r.argmax;
    return j;
}

json to_json(const Spectrum& s) {
    json j;
    j["eigenvalues"] = s.eigenvalues;
    j["truncation_index"] = s.truncation_index;
    j["tail_bound"] = s.tail_bound;
    return j;
}

json to_json(const ThickeningSchedule& s) {
    json j;
    j["nu"] = s.nu;
    j["h"] = s.h;
    j["d"] = s.d;
    j["p"] = s.p;
    j["c"] = s.c;
    j["radii"] = s.radii;
    j["porosities"] = s.porosities;
    j["n"] = s.n;
    j["n0"] = s.n0;
    j["r_root"] = s.r_root;
    j["r0"] = s.r0;
    j["epsilon"] = s.epsilon;
    j["step_factors"] = s.step_factors;
    j["product_bound"] = s.product_bound;
    j["beta"] = s.beta;
    j["C"] = s.C;
    j["below_threshold"] = s.below_threshold;
    return j;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace fup
