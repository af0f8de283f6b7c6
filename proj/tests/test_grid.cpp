#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "isqw/grid.hpp"
#include "isqw/packet.hpp"
#include "isqw/spectral.hpp"

using isqw::GridField;
using isqw::Observable;
using isqw::WavePacket;
using isqw::WellConfig;

namespace {
constexpr double kPi = std::numbers::pi;

WavePacket random_packet(std::mt19937& rng, int modes) {
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    std::vector<std::complex<double>> c(static_cast<std::size_t>(modes));
    for (auto& a : c) a = {comp(rng), comp(rng)};
    return WavePacket::normalized(std::move(c));
}

GridField sample(const WavePacket& p, double t, const WellConfig& cfg,
                 int intervals = 4096) {
    return GridField(
        [&p, t, &cfg](double x) { return isqw::packet_value(p, x, t, cfg); },
        cfg, intervals);
}
}  // namespace

TEST_CASE("eigenstate norm and momentum") {
    const WellConfig cfg;
    const auto field = sample(WavePacket::eigenstate(1), 0.0, cfg);
    CHECK_THAT(isqw::grid_expectation(field, Observable::Probability, cfg, 1e-8),
               Catch::Matchers::WithinAbs(1.0, 1e-8));
    // real wave function carries no current
    CHECK_THAT(isqw::grid_expectation(field, Observable::Momentum, cfg, 1e-6),
               Catch::Matchers::WithinAbs(0.0, 1e-8));
    CHECK_THAT(isqw::grid_expectation(field, Observable::Position, cfg, 1e-8),
               Catch::Matchers::WithinAbs(cfg.L / 2.0, 1e-8));
}

TEST_CASE("two-state packet at quarter beat phase") {
    const WellConfig cfg;
    const auto p = WavePacket::normalized({{1.0, 0.0}, {1.0, 0.0}});
    const double w12 =
        isqw::angular_frequency(2, cfg) - isqw::angular_frequency(1, cfg);
    const double t = 0.5 * kPi / w12;
    const auto field = sample(p, t, cfg);
    const double mom = isqw::grid_expectation(field, Observable::Momentum, cfg, 1e-6);
    CHECK_THAT(std::abs(mom),
               Catch::Matchers::WithinAbs(8.0 / (3.0 * cfg.L), 1e-6));
    CHECK_THAT(mom, Catch::Matchers::WithinAbs(
                        isqw::momentum_expectation(p, t, cfg), 1e-6));
}

TEST_CASE("grid oracle matches closed forms for random packets") {
    const WellConfig cfg;
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> times(0.0, 5.0);
    for (int trial = 0; trial < 5; ++trial) {
        const auto p = random_packet(rng, 5);
        for (int i = 0; i < 10; ++i) {
            const double t = times(rng);
            const auto field = sample(p, t, cfg);
            CHECK_THAT(isqw::grid_expectation(field, Observable::Momentum, cfg, 1e-6),
                       Catch::Matchers::WithinAbs(
                           isqw::momentum_expectation(p, t, cfg), 1e-6));
            CHECK_THAT(isqw::grid_expectation(field, Observable::Position, cfg, 1e-6),
                       Catch::Matchers::WithinAbs(
                           isqw::position_expectation(p, t, cfg), 1e-6));
        }
    }
}

TEST_CASE("padding does not move the integrals") {
    const WellConfig cfg;
    const auto p = WavePacket::normalized({{1.0, 0.0}, {0.0, 1.0}});
    const GridField plain(
        [&](double x) { return isqw::packet_value(p, x, 0.4, cfg); }, cfg, 4096, 0);
    const GridField padded(
        [&](double x) { return isqw::packet_value(p, x, 0.4, cfg); }, cfg, 4096, 64);
    for (auto obs : {Observable::Probability, Observable::Position,
                     Observable::Momentum})
        CHECK(isqw::grid_expectation(plain, obs, cfg, 1e-6) ==
              isqw::grid_expectation(padded, obs, cfg, 1e-6));
}

TEST_CASE("coarse grids are rejected") {
    const WellConfig cfg;
    std::mt19937 rng(89);
    const auto p = random_packet(rng, 8);
    const auto field = sample(p, 0.3, cfg, 16);
    CHECK_THROWS_AS(isqw::grid_expectation(field, Observable::Probability, cfg, 1e-10),
                    isqw::GridTooCoarse);
}
