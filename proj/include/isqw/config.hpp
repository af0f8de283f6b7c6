#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isqw/packet.hpp"
#include "isqw/well.hpp"

namespace isqw {

/// Run configuration for the command-line tools, parsed from a single JSON
/// document. Every field has a usable default; flags may override any of
/// them.
struct RunConfig {
    WellConfig well;

    // packet as (n, re, im) triples; mode indices may be sparse
    std::vector<std::tuple<int, double, double>> packet_spec = {{1, 1.0, 0.0}};
    bool renormalize = false;
    double normalization_tol = 1e-12;

    double t_start = 0.0;
    double t_end = 1.0;
    int time_steps = 100;

    std::vector<double> ladder_e1_multiples = {1e2, 1e3, 1e4, 1e5};
    std::vector<std::pair<int, int>> oracle_pairs = {{1, 2}, {2, 3}};
    int grid_points = 4096;

    std::string format = "csv";  // csv | json
    std::string out_path;        // empty = stdout

    static RunConfig from_json(const nlohmann::json& j) {
        RunConfig cfg;
        try {
            if (j.contains("well")) {
                const auto& w = j.at("well");
                cfg.well.L = w.value("L", 1.0);
                cfg.well.m = w.value("m", 1.0);
                cfg.well.hbar = w.value("hbar", 1.0);
            }
            if (!cfg.well.valid())
                throw std::invalid_argument("well: L, m, hbar must be positive");
            if (j.contains("packet")) {
                cfg.packet_spec.clear();
                for (const auto& row : j.at("packet")) {
                    if (!row.is_array() || row.size() != 3)
                        throw std::invalid_argument(
                            "packet: expected [n, re, im] triples");
                    cfg.packet_spec.emplace_back(row[0].get<int>(),
                                                 row[1].get<double>(),
                                                 row[2].get<double>());
                }
            }
            cfg.renormalize = j.value("renormalize", false);
            if (j.contains("time")) {
                const auto& t = j.at("time");
                cfg.t_start = t.value("start", 0.0);
                cfg.t_end = t.value("end", 1.0);
                cfg.time_steps = t.value("steps", 100);
            }
            if (cfg.time_steps < 1 || cfg.t_end <= cfg.t_start)
                throw std::invalid_argument("time: need steps >= 1 and end > start");
            if (j.contains("oracle")) {
                const auto& o = j.at("oracle");
                if (o.contains("ladder"))
                    cfg.ladder_e1_multiples =
                        o.at("ladder").get<std::vector<double>>();
                if (o.contains("pairs")) {
                    cfg.oracle_pairs.clear();
                    for (const auto& pr : o.at("pairs"))
                        cfg.oracle_pairs.emplace_back(pr.at(0).get<int>(),
                                                      pr.at(1).get<int>());
                }
                cfg.grid_points = o.value("grid_points", 4096);
            }
            cfg.format = j.value("format", std::string("csv"));
            if (cfg.format != "csv" && cfg.format != "json")
                throw std::invalid_argument("format: must be csv or json");
            cfg.out_path = j.value("out", std::string());
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument(std::string("config: ") + e.what());
        }
        return cfg;
    }

    nlohmann::json to_json() const {
        nlohmann::json packet = nlohmann::json::array();
        for (const auto& [n, re, im] : packet_spec)
            packet.push_back({n, re, im});
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [n, j] : oracle_pairs) pairs.push_back({n, j});
        return {
            {"well", {{"L", well.L}, {"m", well.m}, {"hbar", well.hbar}}},
            {"packet", packet},
            {"renormalize", renormalize},
            {"time",
             {{"start", t_start}, {"end", t_end}, {"steps", time_steps}}},
            {"oracle",
             {{"ladder", ladder_e1_multiples},
              {"pairs", pairs},
              {"grid_points", grid_points}}},
            {"format", format},
            {"out", out_path},
        };
    }

    /// Assemble the wave packet from the sparse (n, re, im) triples.
    WavePacket build_packet() const {
        int max_n = 0;
        for (const auto& [n, re, im] : packet_spec) {
            if (n < 1) throw std::invalid_argument("packet: mode index must be >= 1");
            max_n = std::max(max_n, n);
        }
        std::vector<std::complex<double>> coeffs(
            static_cast<std::size_t>(max_n), {0.0, 0.0});
        for (const auto& [n, re, im] : packet_spec)
            coeffs[static_cast<std::size_t>(n - 1)] += std::complex<double>(re, im);
        if (renormalize) return WavePacket::normalized(std::move(coeffs));
        return WavePacket(std::move(coeffs), normalization_tol);
    }

    std::vector<double> time_grid() const {
        std::vector<double> ts;
        ts.reserve(static_cast<std::size_t>(time_steps));
        for (int i = 0; i < time_steps; ++i) {
            ts.push_back(time_steps == 1
                             ? t_start
                             : t_start + (t_end - t_start) * i / (time_steps - 1));
        }
        return ts;
    }
};

}  // namespace isqw
