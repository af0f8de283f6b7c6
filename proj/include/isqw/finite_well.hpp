#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "isqw/errors.hpp"
#include "isqw/well.hpp"

namespace isqw {

/// Finite-depth square well: V = 0 on [0, L], V = V0 outside. Shares
/// coordinates with the infinite well so level-by-level comparisons need no
/// shift bookkeeping.
struct FiniteWell {
    double V0;
    WellConfig cfg;
};

/// One bound state of the finite well, in the three-region piecewise form.
/// States are classified by parity about the well center x = L/2:
/// parity_sign = +1 for even (cos) interior, -1 for odd (sin) interior.
struct FiniteWellLevel {
    int index = 0;       // 1-based, ordered by energy
    double energy = 0.0;
    double k = 0.0;      // interior wavenumber sqrt(2mE)/hbar
    double kappa = 0.0;  // exterior decay rate sqrt(2m(V0-E))/hbar
    double amplitude = 0.0;
    int parity_sign = +1;
    double half_width = 0.0;  // a = L/2
    double center = 0.0;      // L/2

    double value(double x) const {
        const double xi = x - center;
        const double axi = std::abs(xi);
        if (axi <= half_width) {
            return parity_sign > 0 ? amplitude * std::cos(k * xi)
                                   : amplitude * std::sin(k * xi);
        }
        const double tail = std::exp(-kappa * (axi - half_width));
        if (parity_sign > 0) return amplitude * std::cos(k * half_width) * tail;
        const double edge = amplitude * std::sin(k * half_width);
        return (xi > 0 ? edge : -edge) * tail;
    }

    double interior_derivative(double x) const {
        const double xi = x - center;
        return parity_sign > 0 ? -amplitude * k * std::sin(k * xi)
                               : amplitude * k * std::cos(k * xi);
    }

    /// Relative mismatch of the log-derivative at the right wall; the
    /// eigenvalue condition makes this zero for an exact root.
    double matching_residual() const {
        const double a = half_width;
        const double psi = parity_sign > 0 ? std::cos(k * a) : std::sin(k * a);
        const double dpsi_in = parity_sign > 0 ? -k * std::sin(k * a)
                                               : k * std::cos(k * a);
        const double dpsi_out = -kappa * psi;
        const double scale = std::abs(dpsi_in) + std::abs(dpsi_out) + k;
        return std::abs(dpsi_in - dpsi_out) / scale;
    }

    /// Interior nodes, counted by sign changes on a fine sample.
    int node_count(int samples = 4000) const {
        int nodes = 0;
        double prev = value(center - half_width + 1e-9);
        for (int i = 1; i <= samples; ++i) {
            const double x = center - half_width +
                             (2.0 * half_width) * i / (samples + 1);
            const double v = value(x);
            if (v == 0.0) continue;
            if (prev != 0.0 && ((prev < 0) != (v < 0))) ++nodes;
            prev = v;
        }
        return nodes;
    }
};

namespace detail {

template <typename F>
double bisect(F f, double lo, double hi, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0) == (fhi < 0))
        throw BracketingFailure("bisect: no sign change in bracket");
    for (int i = 0; i < max_iter; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0 || (hi - lo) < 1e-15 * (std::abs(lo) + 1.0)) return mid;
        if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; }
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// Solve the lowest `count` bound states by bisection on the even/odd
/// matching conditions about the well center. With z = k L/2 and
/// z0 = (L/2) sqrt(2 m V0) / hbar:
///   even:  z sin z - sqrt(z0^2 - z^2) cos z = 0
///   odd:   z cos z + sqrt(z0^2 - z^2) sin z = 0
/// Brackets come from a sign-change scan at resolution well below the ~pi/2
/// spacing of the roots.
inline std::vector<FiniteWellLevel> solve_finite_well_levels(
    const FiniteWell& fw, int count) {
    if (count < 1) throw std::invalid_argument("solve_finite_well_levels: count");
    const double a = 0.5 * fw.cfg.L;
    const double z0 = a * std::sqrt(2.0 * fw.cfg.m * fw.V0) / fw.cfg.hbar;

    auto q = [z0](double z) { return std::sqrt(std::max(z0 * z0 - z * z, 0.0)); };
    auto f_even = [&](double z) { return z * std::sin(z) - q(z) * std::cos(z); };
    auto f_odd = [&](double z) { return z * std::cos(z) + q(z) * std::sin(z); };

    struct Root { double z; int parity_sign; };
    std::vector<Root> roots;
    const int scan = std::max(4000, 64 * (count + 2));
    for (int parity : {+1, -1}) {
        auto f = [&](double z) { return parity > 0 ? f_even(z) : f_odd(z); };
        double zprev = z0 * 1e-12;
        double fprev = f(zprev);
        for (int i = 1; i <= scan; ++i) {
            const double z = z0 * i / scan;
            const double fz = f(z);
            if (fz == 0.0) { roots.push_back({z, parity}); }
            else if ((fprev < 0) != (fz < 0)) {
                roots.push_back({detail::bisect(f, zprev, z), parity});
            }
            zprev = z;
            fprev = fz;
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Root& l, const Root& r) { return l.z < r.z; });

    if (static_cast<int>(roots.size()) < count)
        throw InsufficientDepth("solve_finite_well_levels: only " +
                                std::to_string(roots.size()) + " bound states");

    std::vector<FiniteWellLevel> levels;
    levels.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        const Root& r = roots[static_cast<std::size_t>(i)];
        FiniteWellLevel lv;
        lv.index = i + 1;
        lv.parity_sign = r.parity_sign;
        lv.k = r.z / a;
        lv.kappa = q(r.z) / a;
        lv.energy = fw.cfg.hbar * fw.cfg.hbar * lv.k * lv.k / (2.0 * fw.cfg.m);
        lv.half_width = a;
        lv.center = a;

        // closed-form norm: interior trig integral plus exponential tails
        const double ka = lv.k * a;
        const double interior =
            a + lv.parity_sign * std::sin(2.0 * ka) / (2.0 * lv.k);
        const double edge =
            lv.parity_sign > 0 ? std::cos(ka) : std::sin(ka);
        const double tails = edge * edge / lv.kappa;
        lv.amplitude = 1.0 / std::sqrt(interior + tails);

        // sign convention: slope at the left wall positive, matching
        // sqrt(2/L) sin(n pi x / L) in the infinite limit
        if (lv.interior_derivative(0.0) < 0.0) lv.amplitude = -lv.amplitude;
        levels.push_back(lv);
    }
    return levels;
}

/// Matrix element <psi_n| dV/dx |psi_j> for the finite well. dV/dx is
/// -V0 delta(x) + V0 delta(x - L) exactly, so only the continuous boundary
/// values of the eigenfunctions enter; no quadrature.
inline double finite_force_matrix_element(const FiniteWell& fw,
                                          const FiniteWellLevel& n,
                                          const FiniteWellLevel& j) {
    if (n.amplitude == 0.0 || j.amplitude == 0.0)
        throw UnsolvedLevel("finite_force_matrix_element: unsolved level");
    return fw.V0 * (n.value(fw.cfg.L) * j.value(fw.cfg.L) -
                    n.value(0.0) * j.value(0.0));
}

}  // namespace isqw
