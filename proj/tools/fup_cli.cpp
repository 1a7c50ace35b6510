// Command-line front end: Cantor constructions, porosity certificates,
// Nyquist densities, bound tables and the experiment sweeps, with CSV/JSON
// output suitable for scripting.

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fup/experiments.hpp"
#include "fup/porosity.hpp"
#include "fup/serialize.hpp"

namespace {

using fup::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

fup::CantorSpec spec_from_flags(std::int64_t M, const std::vector<int>& alphabet, int n,
                                double L) {
    return fup::CantorSpec(M, alphabet, n, L);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cantor sets, porosity certificates, Nyquist densities and "
                 "time-frequency localization bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    std::string config_path;
    std::vector<std::string> overrides;
    std::uint64_t seed = 1;
    app.add_option("--out", out_path, "write output to this file instead of stdout");
    app.add_option("--config", config_path, "flat JSON config file for `run`");
    app.add_option("--set", overrides, "config override key=value (repeatable)");
    app.add_option("--seed", seed, "seed for randomized checks");

    std::int64_t M = 3;
    std::vector<int> alphabet = {0, 2};
    int iterate = 1;
    double length = 1.0;
    auto add_spec_flags = [&](CLI::App* cmd) {
        cmd->add_option("--base,-M", M, "Cantor base M");
        cmd->add_option("--alphabet,-A", alphabet, "alphabet digits");
        cmd->add_option("--iterate,-n", iterate, "iterate n");
        cmd->add_option("--length,-L", length, "interval length L");
    };

    // cantor
    auto* cantor = app.add_subcommand("cantor", "Cantor iterate constructions");
    auto* cantor_build = cantor->add_subcommand("build", "emit the interval union");
    add_spec_flags(cantor_build);
    auto* cantor_measure = cantor->add_subcommand("measure", "emit the iterate measure");
    add_spec_flags(cantor_measure);
    auto* cantor_function_cmd = cantor->add_subcommand("function", "evaluate the Cantor function");
    add_spec_flags(cantor_function_cmd);
    std::vector<double> xs = {0.5};
    cantor_function_cmd->add_option("--x", xs, "evaluation points");

    // porosity
    auto* porosity = app.add_subcommand("porosity", "porosity certificates");
    auto* por_verify = porosity->add_subcommand("verify", "sweep-check an iterate");
    add_spec_flags(por_verify);
    double nu = 1.0 / 9.0, amin = 0.1, amax = 10.0;
    por_verify->add_option("--nu", nu, "porosity constant");
    por_verify->add_option("--alpha-min", amin, "lower scale");
    por_verify->add_option("--alpha-max", amax, "upper scale");
    auto* por_certify = porosity->add_subcommand("certify", "closed-form certificate");
    add_spec_flags(por_certify);

    // density
    auto* density = app.add_subcommand("density", "maximal Nyquist densities");
    auto* den_rho = density->add_subcommand("rho", "exact 1-d sliding-window density");
    add_spec_flags(den_rho);
    double window = 1.0 / 3.0;
    den_rho->add_option("--window", window, "window length");
    auto* den_subadd = density->add_subcommand("subadd", "weak subadditivity sweep");
    add_spec_flags(den_subadd);
    long pairs = 10000;
    den_subadd->add_option("--pairs", pairs, "number of random pairs");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "explicit constants");
    auto* b_kappa = bounds->add_subcommand("kappa", "evaluate kappa_d");
    int kd = 1;
    double kx = 1.0;
    b_kappa->add_option("-d", kd, "dimension");
    b_kappa->add_option("-x", kx, "argument");
    auto* b_schedule = bounds->add_subcommand("schedule", "thickening schedule");
    double s_nu = 1.0 / 9.0, s_h = 1e-3, s_p = 2.0, s_r0 = 0.9;
    int s_d = 1;
    b_schedule->add_option("--nu", s_nu, "porosity");
    b_schedule->add_option("--scale", s_h, "lower scale h");
    b_schedule->add_option("-d", s_d, "dimension");
    b_schedule->add_option("-p", s_p, "integrability exponent");
    b_schedule->add_option("--r0-fraction", s_r0, "r0 as a fraction of the unit-step radius");
    auto* b_table = bounds->add_subcommand("table", "radial bound table (CSV)");
    add_spec_flags(b_table);
    int t_nmax = 8;
    b_table->add_option("--n-max", t_nmax, "largest iterate");
    auto* b_improve = bounds->add_subcommand("improvement", "prefactor comparison sweep");
    int grid_size = 1000;
    b_improve->add_option("--grid", grid_size, "number of R values in (0, 10]");

    // ops
    auto* ops = app.add_subcommand("ops", "operator computations");
    auto* o_radial = ops->add_subcommand("radial-spectrum", "Daubechies radial eigenvalues");
    add_spec_flags(o_radial);
    double radius = 1.0;
    o_radial->add_option("--radius,-R", radius, "ball radius R");
    auto* o_gabor = ops->add_subcommand("gabor-norm", "Gabor multiplier norm for a product iterate");
    add_spec_flags(o_gabor);
    double spacing = 1.0 / 3.0;
    o_gabor->add_option("--spacing,-a", spacing, "square lattice spacing");
    auto* o_verify = ops->add_subcommand("verify", "identity and inequality spot checks");
    long cases = 50;
    o_verify->add_option("--cases", cases, "number of random cases");

    // run
    auto* run = app.add_subcommand("run", "experiment sweeps");
    std::string experiment;
    run->add_option("experiment", experiment, "radial-fup | gabor-fup | properties")
        ->required();
    std::vector<std::string> suites;
    run->add_option("--suite", suites, "property suites to run (default: all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cantor_build->parsed()) {
            const auto u = fup::build_iterate(spec_from_flags(M, alphabet, iterate, length));
            emit(fup::to_json(u).dump(2), out_path);
        } else if (cantor_measure->parsed()) {
            fup::CantorSpec s = spec_from_flags(M, alphabet, iterate, length);
            json j;
            j["measure"] = s.measure();
            if (auto em = s.exact_measure()) j["exact"] = em->str();
            emit(j.dump(2), out_path);
        } else if (cantor_function_cmd->parsed()) {
            fup::CantorSpec s = spec_from_flags(M, alphabet, iterate, length);
            json j = json::array();
            for (double x : xs) j.push_back({{"x", x}, {"G", fup::cantor_function(s, x)}});
            emit(j.dump(2), out_path);
        } else if (por_verify->parsed()) {
            const auto u = fup::build_iterate(spec_from_flags(M, alphabet, iterate, length));
            emit(fup::to_json(fup::verify_porosity_1d(u, nu, amin, amax)).dump(2), out_path);
        } else if (por_certify->parsed()) {
            const auto w =
                fup::certify_cantor_porosity(spec_from_flags(M, alphabet, iterate, length));
            emit(fup::to_json(w).dump(2), out_path);
        } else if (den_rho->parsed()) {
            const auto u = fup::build_iterate(spec_from_flags(M, alphabet, iterate, length));
            emit(fup::to_json(fup::rho_exact_1d(u, window)).dump(2), out_path);
        } else if (den_subadd->parsed()) {
            fup::CantorSpec s = spec_from_flags(M, alphabet, iterate, length);
            std::mt19937_64 rng(seed);
            std::uniform_real_distribution<double> unit(-0.5 * length, 1.5 * length);
            std::vector<std::pair<double, double>> ps;
            for (long i = 0; i < pairs; ++i) {
                double x = unit(rng), y = unit(rng);
                if (x > y) std::swap(x, y);
                ps.emplace_back(x, y);
            }
            const auto rep = fup::check_weak_subadditivity(s, ps);
            json j;
            j["pass"] = rep.pass;
            j["pairs"] = pairs;
            j["seed"] = seed;
            if (rep.first_violation)
                j["violation"] = {{"x", rep.first_violation->x},
                                  {"y", rep.first_violation->y},
                                  {"lhs", rep.first_violation->lhs},
                                  {"rhs", rep.first_violation->rhs}};
            emit(j.dump(2), out_path);
            return rep.pass ? 0 : 1;
        } else if (b_kappa->parsed()) {
            json j;
            j["d"] = kd;
            j["x"] = kx;
            j["kappa"] = fup::kappa(kd, kx);
            emit(j.dump(2), out_path);
        } else if (b_schedule->parsed()) {
            emit(fup::to_json(fup::build_schedule(s_nu, s_h, s_d, s_p, s_r0)).dump(2), out_path);
        } else if (b_table->parsed()) {
            fup::RadialFupConfig cfg;
            cfg.M = M;
            cfg.alphabet = alphabet;
            cfg.n_max = t_nmax;
            cfg.seed = seed;
            emit(fup::run_radial_fup(cfg).csv, out_path);
        } else if (b_improve->parsed()) {
            std::vector<double> grid;
            for (int i = 1; i <= grid_size; ++i) grid.push_back(10.0 * i / grid_size);
            const auto rep = fup::check_improvement(grid);
            json j;
            j["pass"] = rep.pass;
            if (rep.first_violation) j["first_violation_R"] = *rep.first_violation;
            emit(j.dump(2), out_path);
            return rep.pass ? 0 : 1;
        } else if (o_radial->parsed()) {
            fup::RadialCantorSpec s;
            s.half_dim = 1;
            s.base = M;
            s.alphabet = alphabet;
            s.iterate = iterate;
            s.radius = radius;
            const auto rs = fup::daubechies_radial_spectrum(s);
            json j = fup::to_json(rs.spectrum());
            j["norm"] = rs.norm();
            j["trace"] = rs.trace();
            emit(j.dump(2), out_path);
        } else if (o_gabor->parsed()) {
            fup::CantorSpec s = spec_from_flags(M, alphabet, iterate, length);
            const auto axis = fup::build_iterate(s);
            const auto lattice = fup::Lattice2d::square(spacing, 1);
            const auto restriction = fup::lattice_restriction(lattice, {axis, axis});
            const auto res = fup::gabor_multiplier_norm(restriction);
            json j;
            j["points"] = res.matrix_size;
            j["lambda_max"] = res.lambda_max;
            j["norm"] = res.norm;
            j["certified_residual"] = res.certified_residual;
            emit(j.dump(2), out_path);
        } else if (o_verify->parsed()) {
            const auto res = fup::run_property_suites({"lemma52", "subaveraging"}, seed);
            emit(res.report.dump(2), out_path);
            return res.pass ? 0 : 1;
        } else if (run->parsed()) {
            json cfg = config_path.empty() ? json::object() : fup::load_config_file(config_path);
            fup::apply_overrides(cfg, overrides);
            if (!cfg.contains("seed")) cfg["seed"] = seed;
            if (experiment == "radial-fup") {
                const auto res = fup::run_radial_fup(fup::radial_config_from_json(cfg));
                emit(res.csv, out_path);
                return res.pass ? 0 : 1;
            } else if (experiment == "gabor-fup") {
                const auto res = fup::run_gabor_fup(fup::gabor_config_from_json(cfg));
                emit(res.csv, out_path);
                return res.pass ? 0 : 1;
            } else if (experiment == "properties") {
                const auto res = fup::run_property_suites(suites, cfg["seed"].get<std::uint64_t>());
                emit(res.report.dump(2), out_path);
                return res.pass ? 0 : 1;
            }
            std::cerr << "unknown experiment: " << experiment << "\n";
            return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
