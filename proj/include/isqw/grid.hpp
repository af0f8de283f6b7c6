#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "isqw/errors.hpp"
#include "isqw/well.hpp"

namespace isqw {

enum class Observable { Probability, Position, Momentum };

/// Uniform complex-valued samples on [-pad, L+pad], with x = 0 and x = L on
/// the grid. The wave function is identically zero outside [0, L] for box
/// packets, so quadrature and derivative stencils are confined to the well
/// segment where the samples are smooth.
class GridField {
public:
    GridField(std::function<std::complex<double>(double)> psi,
              const WellConfig& cfg, int intervals = 4096, int pad_intervals = 0)
        : L_(cfg.L), n_(intervals), pad_(pad_intervals) {
        if (intervals < 8 || intervals % 2 != 0)
            throw std::invalid_argument("GridField: need an even interval count >= 8");
        h_ = L_ / intervals;
        const int total = intervals + 2 * pad_intervals;
        samples_.resize(static_cast<std::size_t>(total) + 1);
        for (int i = 0; i <= total; ++i)
            samples_[static_cast<std::size_t>(i)] = psi(x(i));
    }

    double spacing() const { return h_; }
    double x(int i) const { return (i - pad_) * h_; }
    int well_begin() const { return pad_; }          // index of x = 0
    int well_end() const { return pad_ + n_; }       // index of x = L
    const std::vector<std::complex<double>>& samples() const { return samples_; }

    std::complex<double> at(int i) const {
        return samples_[static_cast<std::size_t>(i)];
    }

private:
    double L_;
    double h_ = 0.0;
    int n_;
    int pad_;
    std::vector<std::complex<double>> samples_;
};

namespace detail {

/// Composite Simpson over the well segment of a sampled integrand.
template <typename Integrand>
std::complex<double> simpson_well(const GridField& f, Integrand g, int stride = 1) {
    const int b = f.well_begin();
    const int e = f.well_end();
    std::complex<double> acc = g(b) + g(e);
    for (int i = b + stride; i < e; i += stride)
        acc += g(i) * (((i - b) / stride) % 2 == 1 ? 4.0 : 2.0);
    return acc * (f.spacing() * stride / 3.0);
}

/// Fourth-order first derivative at index i, using stencils that never
/// cross the walls (the derivative jumps there).
inline std::complex<double> derivative4(const GridField& f, int i) {
    const int b = f.well_begin();
    const int e = f.well_end();
    const double h = f.spacing();
    auto s = [&f](int idx) { return f.at(idx); };
    if (i - b >= 2 && e - i >= 2)
        return (-s(i + 2) + 8.0 * s(i + 1) - 8.0 * s(i - 1) + s(i - 2)) /
               (12.0 * h);
    if (i - b < 2) {
        const int o = i - b;  // 0 or 1
        if (o == 0)
            return (-25.0 * s(b) + 48.0 * s(b + 1) - 36.0 * s(b + 2) +
                    16.0 * s(b + 3) - 3.0 * s(b + 4)) / (12.0 * h);
        return (-3.0 * s(b) - 10.0 * s(b + 1) + 18.0 * s(b + 2) -
                6.0 * s(b + 3) + s(b + 4)) / (12.0 * h);
    }
    const int o = e - i;  // 0 or 1
    if (o == 0)
        return (25.0 * s(e) - 48.0 * s(e - 1) + 36.0 * s(e - 2) -
                16.0 * s(e - 3) + 3.0 * s(e - 4)) / (12.0 * h);
    return (3.0 * s(e) + 10.0 * s(e - 1) - 18.0 * s(e - 2) +
            6.0 * s(e - 3) - s(e - 4)) / (12.0 * h);
}

}  // namespace detail

/// Quadrature expectation value from a sampled field: norm of |psi|^2,
/// position int x |psi|^2, or momentum Re int psi^* (-i hbar) psi'.
/// The step-halving Simpson estimate guards the requested tolerance.
inline double grid_expectation(const GridField& field, Observable obs,
                               const WellConfig& cfg, double tol = 1e-6) {
    auto real_integral = [&](auto integrand) {
        const std::complex<double> full =
            detail::simpson_well(field, integrand, 1);
        const std::complex<double> half =
            detail::simpson_well(field, integrand, 2);
        const double est = std::abs(full - half) / 15.0;
        if (est > tol)
            throw GridTooCoarse("grid_expectation: error estimate " +
                                std::to_string(est));
        return full;
    };

    switch (obs) {
        case Observable::Probability:
            return real_integral([&](int i) {
                       return std::complex<double>(std::norm(field.at(i)), 0.0);
                   }).real();
        case Observable::Position:
            return real_integral([&](int i) {
                       return std::complex<double>(
                           field.x(i) * std::norm(field.at(i)), 0.0);
                   }).real();
        case Observable::Momentum: {
            const std::complex<double> j = real_integral([&](int i) {
                return std::conj(field.at(i)) * detail::derivative4(field, i);
            });
            // (-i hbar) * J: the real part of J is a pure boundary term and
            // vanishes for vanishing wall values
            const std::complex<double> p =
                std::complex<double>(0.0, -cfg.hbar) * j;
            if (std::abs(p.imag()) > 1e-6 * (1.0 + std::abs(p.real())))
                throw GridTooCoarse("grid_expectation: momentum not real");
            return p.real();
        }
    }
    return 0.0;
}

}  // namespace isqw
