// Acceptance suite: end-to-end checks of the toolkit's headline results,
// one pass/fail line per criterion.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "isqw/isqw.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] %d. %s  (%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.c_str());
    if (!ok) ++failures;
}

isqw::WavePacket random_packet(std::mt19937& rng, int max_modes) {
    std::uniform_int_distribution<int> nmodes(2, max_modes);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    std::vector<std::complex<double>> c(static_cast<std::size_t>(nmodes(rng)));
    for (auto& a : c) a = {comp(rng), comp(rng)};
    return isqw::WavePacket::normalized(std::move(c));
}

// 1. V Psi_n reduces to the boundary-delta pair with coefficients
//    sqrt(2/L) (hbar^2/2m) k_n {1, -cos(k_n L)}, n = 1..50, rel err < 1e-12.
void criterion1(const isqw::WellConfig& cfg) {
    double worst = 0.0;
    bool windowed_clean = true;
    for (int n = 1; n <= 50; ++n) {
        const auto p = isqw::potential_term(n, cfg);
        windowed_clean = windowed_clean && p.windowed_part().is_zero();
        const double base = std::sqrt(2.0 / cfg.L) * cfg.hbar * cfg.hbar /
                            (2.0 * cfg.m) * isqw::wavenumber(n, cfg);
        const double cosknl = (n % 2 == 0) ? 1.0 : -1.0;
        worst = std::max(worst,
                         std::abs(p.delta_coefficient(isqw::Site::Left) - base) /
                             base);
        worst = std::max(
            worst, std::abs(p.delta_coefficient(isqw::Site::Right) +
                            cosknl * base) / base);
    }
    report(1, "potential term reduces to boundary deltas",
           windowed_clean && worst < 1e-12,
           "max rel err " + std::to_string(worst));
}

// 2. Symmetric specification form equals the direct result, n = 1..20.
void criterion2(const isqw::WellConfig& cfg) {
    bool ok = true;
    for (int n = 1; n <= 20; ++n)
        ok = ok && isqw::symmetric_specification_form(n, cfg).approx_equal(
                       isqw::potential_term(n, cfg), 1e-12);
    report(2, "symmetric delta/x form matches term by term", ok,
           "n = 1..20, tol 1e-12");
}

// 3. Assembled force matrix elements equal the closed form on 1..20 x 1..20.
void criterion3(const isqw::WellConfig& cfg) {
    double worst = 0.0;
    bool structure_ok = true;
    for (int n = 1; n <= 20; ++n) {
        for (int j = 1; j <= 20; ++j) {
            const double assembled =
                -2.0 * isqw::force_term(n, j, cfg).integrate_over_well();
            const double closed = isqw::force_matrix_element(n, j, cfg);
            const double expect =
                ((n + j) % 2 == 0)
                    ? 0.0
                    : -(cfg.hbar * cfg.hbar / (cfg.m * cfg.L)) *
                          isqw::wavenumber(n, cfg) * isqw::wavenumber(j, cfg) *
                          2.0;
            structure_ok = structure_ok && closed == expect;
            const double scale = std::abs(expect) + 1.0;
            worst = std::max(worst, std::abs(assembled - closed) / scale);
        }
    }
    report(3, "force matrix elements, symbolic vs closed form",
           structure_ok && worst < 1e-12,
           "max scaled err " + std::to_string(worst));
}

// 4. Worked two-state example: <dV/dx>(t) = -(8 E1/L) cos(w12 t) at 1000
//    time points, 1e-12 absolute.
void criterion4(const isqw::WellConfig& cfg) {
    const auto p = isqw::WavePacket::normalized({{1.0, 0.0}, {1.0, 0.0}});
    const double w12 =
        isqw::angular_frequency(2, cfg) - isqw::angular_frequency(1, cfg);
    const double amp = 8.0 * isqw::eigenvalue(1, cfg) / cfg.L;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double t = 10.0 * i / 999.0;
        worst = std::max(worst, std::abs(isqw::force_expectation(p, t, cfg) +
                                         amp * std::cos(w12 * t)));
    }
    report(4, "two-state worked example, 8E1/L = 4pi^2", worst < 1e-12,
           "max abs err " + std::to_string(worst));
}

// 5. Ehrenfest residual for 100 random packets x 100 random times < 1e-9.
void criterion5(const isqw::WellConfig& cfg) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> times(-50.0, 50.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_packet(rng, 15);
        for (int i = 0; i < 100; ++i)
            worst = std::max(
                worst, std::abs(isqw::ehrenfest_residual(p, times(rng), cfg)));
    }
    report(5, "Ehrenfest residual over random packets", worst < 1e-9,
           "max |residual| " + std::to_string(worst));
}

// 6. Richardson-extrapolated centered difference of <p>(t) matches the
//    closed-form rate within 1e-6 for 10 random packets.
void criterion6(const isqw::WellConfig& cfg) {
    std::mt19937 rng(54321);
    std::uniform_real_distribution<double> times(0.0, 5.0);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::complex<double>> c(5);
        for (auto& a : c) a = {comp(rng), comp(rng)};
        const auto p = isqw::WavePacket::normalized(std::move(c));
        auto f = [&](double t) { return isqw::momentum_expectation(p, t, cfg); };
        for (int i = 0; i < 10; ++i) {
            const double t = times(rng);
            worst = std::max(
                worst, std::abs(isqw::numerical_time_derivative(f, t, 1e-6) -
                                isqw::momentum_rate(p, t, cfg)));
        }
    }
    report(6, "d<p>/dt against numerical differentiation", worst < 1e-6,
           "max abs err " + std::to_string(worst));
}

// 7. Finite-well limit: (1,2) and (2,3) within 2% at V0 = 1e5 E1, with
//    strictly decreasing relative error along the ladder.
void criterion7(const isqw::WellConfig& cfg) {
    const double e1 = isqw::eigenvalue(1, cfg);
    const std::vector<double> ladder = {1e2 * e1, 1e3 * e1, 1e4 * e1, 1e5 * e1};
    const auto rows = isqw::convergence_study(cfg, {{1, 2}, {2, 3}}, ladder);
    bool ok = true;
    double final_worst = 0.0;
    for (std::size_t p = 0; p < 2; ++p) {
        double prev = 1e300;
        for (std::size_t r = 0; r < 4; ++r) {
            const auto& row = rows[p * 4 + r];
            ok = ok && row.rel_err < prev;
            prev = row.rel_err;
        }
        ok = ok && prev < 0.02;
        final_worst = std::max(final_worst, prev);
    }
    report(7, "finite-well limit of the force matrix elements", ok,
           "final rel err " + std::to_string(final_worst));
}

// 8. Grid quadrature vs closed forms: 5 random packets x 10 times, 1e-6;
//    single-mode norm within 1e-8.
void criterion8(const isqw::WellConfig& cfg) {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> times(0.0, 4.0);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        std::uniform_real_distribution<double> comp(-1.0, 1.0);
        std::vector<std::complex<double>> c(5);
        for (auto& a : c) a = {comp(rng), comp(rng)};
        const auto p = isqw::WavePacket::normalized(std::move(c));
        for (int i = 0; i < 10; ++i) {
            const double t = times(rng);
            const isqw::GridField field(
                [&](double x) { return isqw::packet_value(p, x, t, cfg); }, cfg,
                4096);
            worst = std::max(
                worst,
                std::abs(isqw::grid_expectation(field, isqw::Observable::Momentum,
                                                cfg, 1e-6) -
                         isqw::momentum_expectation(p, t, cfg)));
            worst = std::max(
                worst,
                std::abs(isqw::grid_expectation(field, isqw::Observable::Position,
                                                cfg, 1e-6) -
                         isqw::position_expectation(p, t, cfg)));
        }
    }
    const isqw::GridField ground(
        [&](double x) {
            return isqw::packet_value(isqw::WavePacket::eigenstate(1), x, 0.0, cfg);
        },
        cfg, 4096);
    const double norm_err = std::abs(
        isqw::grid_expectation(ground, isqw::Observable::Probability, cfg, 1e-8) -
        1.0);
    report(8, "grid quadrature oracle", worst < 1e-6 && norm_err < 1e-8,
           "max abs err " + std::to_string(worst) + ", norm err " +
               std::to_string(norm_err));
}

// 9. Psi_n V Psi_j sifts to zero at both walls, (n, j) in 1..10 x 1..10.
void criterion9(const isqw::WellConfig& cfg) {
    bool ok = true;
    for (int n = 1; n <= 10; ++n)
        for (int j = 1; j <= 10; ++j)
            ok = ok && isqw::force_boundary_term(n, j, cfg).is_zero();
    report(9, "boundary term Psi_n V Psi_j vanishes at the walls", ok,
           "(n, j) in 1..10 x 1..10");
}

}  // namespace

int main() {
    const isqw::WellConfig cfg;  // natural units L = m = hbar = 1
    criterion1(cfg);
    criterion2(cfg);
    criterion3(cfg);
    criterion4(cfg);
    criterion5(cfg);
    criterion6(cfg);
    criterion7(cfg);
    criterion8(cfg);
    criterion9(cfg);
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all criteria passed\n");
    return failures == 0 ? 0 : 1;
}
