#pragma once

#include <cmath>
#include <complex>

#include "isqw/packet.hpp"
#include "isqw/well.hpp"

namespace isqw {

/// Parity selection factor beta_nj = 1 - (-1)^(n+j): 0 for even n+j, 2 for odd.
inline int beta(int n, int j) {
    require_level(n, "beta");
    require_level(j, "beta");
    return ((n + j) % 2 == 0) ? 0 : 2;
}

/// <Psi_n| dV/dx |Psi_j> = -(hbar^2 / mL) k_n k_j beta_nj.
inline double force_matrix_element(int n, int j, const WellConfig& cfg) {
    const int b = beta(n, j);
    if (b == 0) return 0.0;
    const double kn = wavenumber(n, cfg);
    const double kj = wavenumber(j, cfg);
    return -(cfg.hbar * cfg.hbar / (cfg.m * cfg.L)) * kn * kj * b;
}

/// Position matrix element <n|x|j> of the box eigenbasis:
/// L/2 on the diagonal, -(4L/pi^2) beta_nj n j / (n^2-j^2)^2 off it.
inline double position_matrix_element(int n, int j, const WellConfig& cfg) {
    require_level(n, "position_matrix_element");
    require_level(j, "position_matrix_element");
    if (n == j) return 0.5 * cfg.L;
    const int b = beta(n, j);
    if (b == 0) return 0.0;
    const double pi = std::numbers::pi;
    const double nj = static_cast<double>(n) * j;
    const double d2 = static_cast<double>(n) * n - static_cast<double>(j) * j;
    return -cfg.L * b * 4.0 * nj / (pi * pi * d2 * d2);
}

namespace detail {

/// The shared Hermitian double sum
///   S(t) = sum_{n,j} a_n^* a_j k_n k_j beta_nj e^{i(w_n - w_j) t}.
/// Assembled pairwise: the (n,j) and (j,n) terms are complex conjugates, so
/// each pair contributes 2 Re(a_n^* a_j e^{i dw t}) k_n k_j beta_nj and the
/// sum is real by construction. The diagonal drops out (beta_nn = 0).
inline double force_sum(const WavePacket& p, double t, const WellConfig& cfg) {
    const int N = p.modes();
    double s = 0.0;
    for (int n = 1; n <= N; ++n) {
        for (int j = n + 1; j <= N; ++j) {
            const int b = beta(n, j);
            if (b == 0) continue;
            const double dw =
                angular_frequency(n, cfg) - angular_frequency(j, cfg);
            const std::complex<double> z =
                std::conj(p.coeff(n)) * p.coeff(j) *
                std::polar(1.0, dw * t);
            s += 2.0 * z.real() * wavenumber(n, cfg) * wavenumber(j, cfg) * b;
        }
    }
    return s;
}

}  // namespace detail

/// <dV/dx>(t) = -(hbar^2 / mL) S(t).
inline double force_expectation(const WavePacket& p, double t,
                                const WellConfig& cfg) {
    return -(cfg.hbar * cfg.hbar / (cfg.m * cfg.L)) * detail::force_sum(p, t, cfg);
}

/// d<p>/dt (t) = +(hbar^2 / mL) S(t), the exact negative of <dV/dx>.
inline double momentum_rate(const WavePacket& p, double t,
                            const WellConfig& cfg) {
    return (cfg.hbar * cfg.hbar / (cfg.m * cfg.L)) * detail::force_sum(p, t, cfg);
}

/// <p>(t) = (-i hbar)(2/L) sum_{n != j} a_n^* a_j k_n k_j/(k_n^2-k_j^2)
///          beta_nj e^{i(w_n-w_j)t}.
/// The coefficient is antisymmetric in (n,j), so each pair contributes
/// (4 hbar / L) X_nj Im(a_n^* a_j e^{i dw t}) — real by construction.
inline double momentum_expectation(const WavePacket& p, double t,
                                   const WellConfig& cfg) {
    const int N = p.modes();
    double s = 0.0;
    for (int n = 1; n <= N; ++n) {
        for (int j = n + 1; j <= N; ++j) {
            const int b = beta(n, j);
            if (b == 0) continue;
            const double kn = wavenumber(n, cfg);
            const double kj = wavenumber(j, cfg);
            const double x = kn * kj / (kn * kn - kj * kj) * b;
            const double dw =
                angular_frequency(n, cfg) - angular_frequency(j, cfg);
            const std::complex<double> z =
                std::conj(p.coeff(n)) * p.coeff(j) *
                std::polar(1.0, dw * t);
            s += 2.0 * x * z.imag();
        }
    }
    return 2.0 * cfg.hbar / cfg.L * s;
}

/// d<p>/dt + <dV/dx>: identically zero in exact arithmetic; the return is
/// the floating-point residual. With the shared-sum assembly above it is
/// exactly zero.
inline double ehrenfest_residual(const WavePacket& p, double t,
                                 const WellConfig& cfg) {
    return momentum_rate(p, t, cfg) + force_expectation(p, t, cfg);
}

/// Psi(x, t) = sum_n a_n Psi_n(x) e^{-i w_n t} over the truncated basis.
inline std::complex<double> packet_value(const WavePacket& p, double x,
                                         double t, const WellConfig& cfg) {
    if (x <= 0.0 || x >= cfg.L) return {0.0, 0.0};
    std::complex<double> v{0.0, 0.0};
    for (int n = 1; n <= p.modes(); ++n) {
        const auto a = p.coeff(n);
        if (a == std::complex<double>{0.0, 0.0}) continue;
        v += a * eigenfunction_value(n, x, cfg) *
             std::polar(1.0, -angular_frequency(n, cfg) * t);
    }
    return v;
}

/// <x>(t) from the closed-form position matrix elements.
inline double position_expectation(const WavePacket& p, double t,
                                   const WellConfig& cfg) {
    const int N = p.modes();
    double s = 0.0;
    for (int n = 1; n <= N; ++n) {
        s += std::norm(p.coeff(n)) * position_matrix_element(n, n, cfg);
        for (int j = n + 1; j <= N; ++j) {
            const double xnj = position_matrix_element(n, j, cfg);
            if (xnj == 0.0) continue;
            const double dw =
                angular_frequency(n, cfg) - angular_frequency(j, cfg);
            const std::complex<double> z =
                std::conj(p.coeff(n)) * p.coeff(j) *
                std::polar(1.0, dw * t);
            s += 2.0 * xnj * z.real();
        }
    }
    return s;
}

}  // namespace isqw
