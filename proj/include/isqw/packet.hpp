#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "isqw/errors.hpp"

namespace isqw {

/// Truncated expansion of a wave packet over the energy eigenbasis:
/// coefficients a_1 .. a_N. Must be normalized on construction; use
/// normalized() to rescale explicitly. Off-tolerance packets are rejected,
/// not silently fixed.
class WavePacket {
public:
    using Complex = std::complex<double>;

    explicit WavePacket(std::vector<Complex> coeffs, double tol = 1e-12)
        : coeffs_(std::move(coeffs)) {
        const double n2 = norm_squared();
        if (std::abs(n2 - 1.0) > tol)
            throw NormalizationViolation("WavePacket: |a|^2 sums to " +
                                         std::to_string(n2));
    }

    /// Build from arbitrary coefficients, rescaling to unit norm.
    static WavePacket normalized(std::vector<Complex> coeffs) {
        double n2 = 0.0;
        for (const auto& a : coeffs) n2 += std::norm(a);
        if (n2 <= 0.0)
            throw NormalizationViolation("WavePacket::normalized: zero packet");
        const double s = 1.0 / std::sqrt(n2);
        for (auto& a : coeffs) a *= s;
        return WavePacket(std::move(coeffs));
    }

    /// Packet concentrated in a single eigenstate n.
    static WavePacket eigenstate(int n) {
        if (n < 1) throw InvalidQuantumNumber("WavePacket::eigenstate");
        std::vector<Complex> c(static_cast<std::size_t>(n), Complex{0.0, 0.0});
        c.back() = Complex{1.0, 0.0};
        return WavePacket(std::move(c));
    }

    int modes() const { return static_cast<int>(coeffs_.size()); }

    /// a_n, 1-based; zero beyond the truncation.
    Complex coeff(int n) const {
        if (n < 1 || n > modes()) return {0.0, 0.0};
        return coeffs_[static_cast<std::size_t>(n - 1)];
    }

    const std::vector<Complex>& coeffs() const { return coeffs_; }

    double norm_squared() const {
        double n2 = 0.0;
        for (const auto& a : coeffs_) n2 += std::norm(a);
        return n2;
    }

    /// Short fingerprint of the coefficient list, for output metadata.
    std::string digest() const {
        // FNV-1a over the coefficient bytes
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](double v) {
            unsigned char b[sizeof(double)];
            std::memcpy(b, &v, sizeof(double));
            for (unsigned char c : b) { h ^= c; h *= 1099511628211ull; }
        };
        for (const auto& a : coeffs_) { mix(a.real()); mix(a.imag()); }
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(h));
        return buf;
    }

private:
    std::vector<Complex> coeffs_;
};

}  // namespace isqw
