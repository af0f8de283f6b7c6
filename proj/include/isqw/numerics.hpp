#pragma once

#include <functional>

namespace isqw {

/// Centered difference (f(t+h) - f(t-h)) / 2h.
inline double central_difference(const std::function<double(double)>& f,
                                 double t, double h) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

/// Centered difference with one Richardson step: combines h and h/2
/// estimates to cancel the leading O(h^2) error.
inline double numerical_time_derivative(const std::function<double(double)>& f,
                                        double t, double h,
                                        bool richardson = true) {
    const double d_h = central_difference(f, t, h);
    if (!richardson) return d_h;
    const double d_h2 = central_difference(f, t, 0.5 * h);
    return (4.0 * d_h2 - d_h) / 3.0;
}

}  // namespace isqw
