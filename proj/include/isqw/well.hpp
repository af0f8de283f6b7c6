#pragma once

#include <cmath>
#include <numbers>

#include "isqw/errors.hpp"

namespace isqw {

/// Physical parameters of the well. The well occupies [0, L].
struct WellConfig {
    double L = 1.0;
    double m = 1.0;
    double hbar = 1.0;

    constexpr bool valid() const { return L > 0.0 && m > 0.0 && hbar > 0.0; }
};

inline void require_level(int n, const char* who) {
    if (n < 1) throw InvalidQuantumNumber(std::string(who) + ": n must be >= 1");
}

/// k_n = n*pi/L
inline double wavenumber(int n, const WellConfig& cfg) {
    require_level(n, "wavenumber");
    return static_cast<double>(n) * std::numbers::pi / cfg.L;
}

/// E_n = hbar^2 k_n^2 / 2m
inline double eigenvalue(int n, const WellConfig& cfg) {
    const double k = wavenumber(n, cfg);
    return cfg.hbar * cfg.hbar * k * k / (2.0 * cfg.m);
}

/// omega_n = E_n / hbar
inline double angular_frequency(int n, const WellConfig& cfg) {
    return eigenvalue(n, cfg) / cfg.hbar;
}

/// sqrt(2/L) sin(k_n x) inside the well, 0 outside (walls included).
inline double eigenfunction_value(int n, double x, const WellConfig& cfg) {
    require_level(n, "eigenfunction_value");
    if (x <= 0.0 || x >= cfg.L) return 0.0;
    return std::sqrt(2.0 / cfg.L) * std::sin(wavenumber(n, cfg) * x);
}

}  // namespace isqw
