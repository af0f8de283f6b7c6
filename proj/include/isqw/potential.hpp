#pragma once

#include <cmath>

#include "isqw/dist_expr.hpp"
#include "isqw/smooth_fn.hpp"
#include "isqw/well.hpp"

namespace isqw {

/// u_n(x) = sqrt(2/L) sin(n pi x / L), the interior factor of the
/// eigenfunction Psi_n = u_n * theta(x) * theta(L-x).
inline SmoothFn interior_eigenfunction(int n, const WellConfig& cfg) {
    require_level(n, "interior_eigenfunction");
    return SmoothFn::sine(std::sqrt(2.0 / cfg.L), n);
}

/// Psi_n as a windowed distribution.
inline DistExpr eigenfunction_expr(int n, const WellConfig& cfg) {
    return DistExpr::windowed(interior_eigenfunction(n, cfg), cfg.L);
}

/// V(x) Psi_n(x) computed from the rearranged eigenvalue equation,
///   V Psi_n = (hbar^2/2m) Psi_n'' + E_n Psi_n.
/// The windowed part cancels exactly; what remains is the pair of boundary
/// deltas sqrt(2/L) (hbar^2/2m) k_n [delta(x) - cos(k_n L) delta(L-x)].
inline DistExpr potential_term(int n, const WellConfig& cfg) {
    require_level(n, "potential_term");
    const DistExpr psi = eigenfunction_expr(n, cfg);
    const double h2_2m = cfg.hbar * cfg.hbar / (2.0 * cfg.m);
    DistExpr second = psi.differentiate().differentiate();
    return (second * h2_2m + psi * eigenvalue(n, cfg)).canonical();
}

/// The product-rule piece (d Psi_n / dx) V(x) Psi_j(x): multiply V Psi_j by
/// u_n'. The theta-theta-times-delta products collapse to boundary deltas
///   (hbar^2/mL) k_n k_j [delta(x) - (-1)^(n+j) delta(L-x)].
inline DistExpr force_term(int n, int j, const WellConfig& cfg) {
    require_level(n, "force_term");
    require_level(j, "force_term");
    const SmoothFn dun = interior_eigenfunction(n, cfg).derivative(cfg.L);
    return potential_term(j, cfg).multiply(dun);
}

/// The boundary term Psi_n(x) V(x) Psi_j(x) of the product-rule split.
/// Sifting multiplies the V Psi_j deltas by u_n, which vanishes at both
/// walls, so the whole expression is zero — its x-derivative contributes
/// nothing to the force integral.
inline DistExpr force_boundary_term(int n, int j, const WellConfig& cfg) {
    require_level(n, "force_boundary_term");
    require_level(j, "force_boundary_term");
    const SmoothFn un = interior_eigenfunction(n, cfg);
    return potential_term(j, cfg).multiply(un);
}

/// V Psi_n in the wall-symmetric form
///   (hbar^2/2m) [delta(x)/x + delta(L-x)/(L-x)] u_n(x),
/// built with rational-prefactor coefficients. u_n is attached to the
/// right-wall delta through its shifted rewriting
///   u_n(x) = sqrt(2/L) sin(k_n (x-L)) cos(k_n L),
/// so both removable singularities resolve by the same sifting rule.
/// After sifting the result equals potential_term(n) term by term.
inline DistExpr symmetric_specification_form(int n, const WellConfig& cfg) {
    require_level(n, "symmetric_specification_form");
    const double h2_2m = cfg.hbar * cfg.hbar / (2.0 * cfg.m);
    const double amp = std::sqrt(2.0 / cfg.L);

    const SmoothFn un = SmoothFn::sine(amp, n);
    const SmoothFn un_shifted =
        SmoothFn::sine_shifted(amp * SmoothFn::parity(n), n);  // cos(k_n L) = (-1)^n

    DistExpr e = DistExpr::boundary_delta(
        Site::Left, (un * h2_2m).with_prefactor(Prefactor::OverX), cfg.L);
    e += DistExpr::boundary_delta(
        Site::Right, (un_shifted * h2_2m).with_prefactor(Prefactor::OverLMinusX),
        cfg.L);
    return e.sift();
}

}  // namespace isqw
