#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <utility>
#include <vector>

#include "isqw/finite_well.hpp"
#include "isqw/spectral.hpp"
#include "isqw/well.hpp"

namespace isqw {

/// One rung of the barrier-height ladder for one (n, j) pair.
struct ConvergenceRow {
    int n = 0;
    int j = 0;
    double V0 = 0.0;
    double finite_value = 0.0;
    double target = 0.0;  // -(hbar^2/mL) k_n k_j beta_nj
    double abs_err = 0.0;
    double rel_err = 0.0;
    // error decay exponent between this rung and the previous one,
    // err ~ V0^(-order); NaN on the first rung and for zero targets
    double empirical_order = std::numeric_limits<double>::quiet_NaN();
};

/// Solve the finite well at each barrier height in the ladder and compare
/// its force matrix elements against the infinite-well closed form. Each
/// rung is an independent pure computation.
inline std::vector<ConvergenceRow> convergence_study(
    const WellConfig& cfg, const std::vector<std::pair<int, int>>& pairs,
    const std::vector<double>& ladder) {
    std::vector<ConvergenceRow> rows;
    for (const auto& [n, j] : pairs) {
        const int levels_needed = std::max(n, j);
        const double target = force_matrix_element(n, j, cfg);
        double prev_err = std::numeric_limits<double>::quiet_NaN();
        double prev_v0 = 0.0;
        for (double v0 : ladder) {
            const FiniteWell fw{v0, cfg};
            const auto levels = solve_finite_well_levels(fw, levels_needed);
            ConvergenceRow row;
            row.n = n;
            row.j = j;
            row.V0 = v0;
            row.target = target;
            row.finite_value = finite_force_matrix_element(
                fw, levels[static_cast<std::size_t>(n - 1)],
                levels[static_cast<std::size_t>(j - 1)]);
            row.abs_err = std::abs(row.finite_value - target);
            row.rel_err = target != 0.0 ? row.abs_err / std::abs(target)
                                        : row.abs_err;
            if (!std::isnan(prev_err) && prev_err > 0.0 && row.abs_err > 0.0)
                row.empirical_order =
                    std::log(prev_err / row.abs_err) / std::log(v0 / prev_v0);
            prev_err = row.abs_err;
            prev_v0 = v0;
            rows.push_back(row);
        }
    }
    return rows;
}

inline void write_convergence_csv(const std::vector<ConvergenceRow>& rows,
                                  std::ostream& os) {
    os << "n,j,V0,finite_value,target,abs_err,rel_err,empirical_order\n";
    os.precision(17);
    for (const auto& r : rows)
        os << r.n << "," << r.j << "," << r.V0 << "," << r.finite_value << ","
           << r.target << "," << r.abs_err << "," << r.rel_err << ","
           << r.empirical_order << "\n";
}

}  // namespace isqw
