// Command-line front end: spectra, packet evolution, Ehrenfest verification,
// symbolic derivations, and the finite-well convergence study.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "isqw/config.hpp"
#include "isqw/isqw.hpp"
#include "isqw/serialize.hpp"

namespace {

using isqw::RunConfig;

RunConfig load_config(const std::string& path) {
    if (path.empty()) return RunConfig{};
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("config " + path + ": " + e.what());
    }
    return RunConfig::from_json(j);
}

std::ostream& open_output(const RunConfig& cfg, std::ofstream& file) {
    if (cfg.out_path.empty()) return std::cout;
    file.open(cfg.out_path);
    if (!file)
        throw std::runtime_error("cannot write output: " + cfg.out_path);
    return file;
}

void write_series(const isqw::TimeSeries& ts, const RunConfig& cfg,
                  const std::string& suffix) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.out_path.empty()) {
        const std::string path = cfg.out_path + "_" + suffix + "." + cfg.format;
        file.open(path);
        if (!file) throw std::runtime_error("cannot write output: " + path);
        os = &file;
    }
    if (cfg.format == "json")
        *os << isqw::to_json(ts).dump(2) << "\n";
    else
        ts.write_csv(*os);
}

int cmd_eigen(const RunConfig& cfg, int count) {
    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    if (cfg.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (int n = 1; n <= count; ++n)
            rows.push_back({{"n", n},
                            {"E", isqw::eigenvalue(n, cfg.well)},
                            {"k", isqw::wavenumber(n, cfg.well)}});
        os << nlohmann::json{{"eigenpairs", rows}}.dump(2) << "\n";
    } else {
        os << "n,E,k\n";
        os.precision(17);
        for (int n = 1; n <= count; ++n)
            os << n << "," << isqw::eigenvalue(n, cfg.well) << ","
               << isqw::wavenumber(n, cfg.well) << "\n";
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, double threshold) {
    const auto packet = cfg.build_packet();
    const auto times = cfg.time_grid();
    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    os << "t,p,dpdt,dVdx,residual\n";
    os.precision(17);
    double max_resid = 0.0;
    for (double t : times) {
        const double p = isqw::momentum_expectation(packet, t, cfg.well);
        const double rate = isqw::momentum_rate(packet, t, cfg.well);
        const double fv = isqw::force_expectation(packet, t, cfg.well);
        const double resid = rate + fv;
        max_resid = std::max(max_resid, std::abs(resid));
        os << t << "," << p << "," << rate << "," << fv << "," << resid << "\n";
    }
    std::cerr.precision(6);
    std::cerr << "max |d<p>/dt + <dV/dx>| = " << max_resid
              << (max_resid <= threshold ? "  (ok)" : "  (EXCEEDS threshold)")
              << "\n";
    return max_resid <= threshold ? 0 : 1;
}

int cmd_symbolic(const RunConfig& cfg, int n) {
    const auto& w = cfg.well;
    const auto psi = isqw::eigenfunction_expr(n, w);
    const auto second = psi.differentiate().differentiate();
    const auto vterm = isqw::potential_term(n, w);
    const auto symm = isqw::symmetric_specification_form(n, w);
    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    os << "Psi_" << n << "          = " << psi.str() << "\n";
    os << "Psi_" << n << "''        = " << second.str() << "\n";
    os << "V*Psi_" << n << "        = " << vterm.str() << "\n";
    os << "symmetric form = " << symm.str() << "\n";
    const bool equal = vterm.approx_equal(symm, 1e-12);
    os << "equality check: " << (equal ? "PASS" : "FAIL") << "\n";
    return equal ? 0 : 1;
}

int cmd_oracle(const RunConfig& cfg) {
    std::vector<double> ladder;
    const double e1 = isqw::eigenvalue(1, cfg.well);
    for (double mult : cfg.ladder_e1_multiples) ladder.push_back(mult * e1);
    const auto rows =
        isqw::convergence_study(cfg.well, cfg.oracle_pairs, ladder);
    std::ofstream file;
    std::ostream& os = open_output(cfg, file);
    if (cfg.format == "json")
        os << isqw::to_json(rows).dump(2) << "\n";
    else
        isqw::write_convergence_csv(rows, os);
    return 0;
}

int cmd_evolve(const RunConfig& cfg) {
    const auto packet = cfg.build_packet();
    const auto times = cfg.time_grid();
    const std::map<std::string, std::string> meta = {
        {"packet", packet.digest()},
        {"L", std::to_string(cfg.well.L)},
        {"m", std::to_string(cfg.well.m)},
        {"hbar", std::to_string(cfg.well.hbar)},
    };
    auto series = [&](const std::string& label, auto f) {
        isqw::TimeSeries ts;
        ts.label = label;
        ts.metadata = meta;
        ts.times = times;
        for (double t : times) ts.values.push_back(f(t));
        return ts;
    };
    write_series(series("p", [&](double t) {
                     return isqw::momentum_expectation(packet, t, cfg.well);
                 }),
                 cfg, "p");
    write_series(series("x", [&](double t) {
                     return isqw::position_expectation(packet, t, cfg.well);
                 }),
                 cfg, "x");
    write_series(series("dVdx", [&](double t) {
                     return isqw::force_expectation(packet, t, cfg.well);
                 }),
                 cfg, "dVdx");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Infinite square well toolkit: boundary-delta potential "
                 "terms, wave-packet expectation values, Ehrenfest checks, "
                 "and finite-well oracles"};
    app.require_subcommand(1);

    std::string config_path, out_path, format;
    double threshold = 1e-9;
    int n = 0;

    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--out", out_path, "output path (default stdout)");
    app.add_option("--format", format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* eigen = app.add_subcommand("eigen", "print the first N eigenpairs");
    eigen->add_option("--n", n, "number of levels")->default_val(10);

    auto* verify = app.add_subcommand(
        "verify", "check d<p>/dt = -<dV/dx> over the time grid");
    verify->add_option("--threshold", threshold, "max residual for exit 0");

    auto* symbolic = app.add_subcommand(
        "symbolic", "print the delta-function derivation for level n");
    symbolic->add_option("--n", n, "quantum number")->default_val(1);

    auto* oracle = app.add_subcommand(
        "oracle", "finite-well convergence study against the closed form");

    auto* evolve = app.add_subcommand(
        "evolve", "write <p>(t), <x>(t), <dV/dx>(t) series files");

    // let the global --config/--out/--format flags appear after a subcommand
    for (auto* sub : {eigen, verify, symbolic, oracle, evolve})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg = load_config(config_path);
        if (!out_path.empty()) cfg.out_path = out_path;
        if (!format.empty()) cfg.format = format;

        if (eigen->parsed()) return cmd_eigen(cfg, n);
        if (verify->parsed()) return cmd_verify(cfg, threshold);
        if (symbolic->parsed()) return cmd_symbolic(cfg, n);
        if (oracle->parsed()) return cmd_oracle(cfg);
        if (evolve->parsed()) return cmd_evolve(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
