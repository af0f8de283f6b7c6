#pragma once

#include <cmath>
#include <compare>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "isqw/errors.hpp"

namespace isqw {

/// Which wall of the well a boundary object sits on.
enum class Site { Left, Right };  // x = 0, x = L

/// Optional rational prefactor attached to a smooth function.
enum class Prefactor { None, OverX, OverLMinusX };  // 1, 1/x, 1/(L-x)

/// Trigonometric polynomial over the well harmonics:
///   sum of c * sin(m*pi*x/L) and c * cos(m*pi*x/L), integer m >= 0,
/// optionally divided by x or by (L-x).
///
/// Wavenumbers are stored as the integer harmonic m, so wall identities
/// sin(m*pi) = 0 and cos(m*pi) = (-1)^m are applied exactly. A term written
/// with a shifted argument, c * sin(m*pi*(x-L)/L), folds to the same basis
/// via the exact sign (-1)^m.
class SmoothFn {
public:
    enum class Trig { Sin, Cos };

    struct Key {
        Trig trig;
        int harmonic;
        auto operator<=>(const Key&) const = default;
    };

    SmoothFn() = default;

    static SmoothFn zero() { return {}; }

    static SmoothFn constant(double c) { return cosine(c, 0); }

    /// c * sin(m*pi*x/L)
    static SmoothFn sine(double c, int m) {
        SmoothFn f;
        if (m < 0) { m = -m; c = -c; }  // sin is odd
        f.add_term({Trig::Sin, m}, c);
        return f;
    }

    /// c * cos(m*pi*x/L)
    static SmoothFn cosine(double c, int m) {
        SmoothFn f;
        if (m < 0) m = -m;  // cos is even
        f.add_term({Trig::Cos, m}, c);
        return f;
    }

    /// c * sin(m*pi*(x-L)/L), folded exactly: sin(u - m*pi) = (-1)^m sin(u).
    static SmoothFn sine_shifted(double c, int m) {
        return sine(parity(m) * c, m);
    }

    /// c * cos(m*pi*(x-L)/L) = (-1)^m c * cos(m*pi*x/L), exactly.
    static SmoothFn cosine_shifted(double c, int m) {
        return cosine(parity(m) * c, m);
    }

    Prefactor prefactor() const { return prefactor_; }
    bool has_prefactor() const { return prefactor_ != Prefactor::None; }

    SmoothFn with_prefactor(Prefactor p) const {
        if (has_prefactor() && p != Prefactor::None && p != prefactor_)
            throw NonRemovableSingularity("SmoothFn: stacking distinct rational prefactors");
        SmoothFn f = *this;
        f.prefactor_ = p;
        return f;
    }

    bool is_zero() const { return terms_.empty(); }

    double coeff(Trig t, int m) const {
        auto it = terms_.find({t, m});
        return it == terms_.end() ? 0.0 : it->second;
    }

    const std::map<Key, double>& terms() const { return terms_; }

    SmoothFn& operator+=(const SmoothFn& o) {
        if (prefactor_ != o.prefactor_) {
            if (is_zero()) prefactor_ = o.prefactor_;
            else if (!o.is_zero())
                throw NonRemovableSingularity("SmoothFn: adding mismatched rational prefactors");
        }
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }

    SmoothFn& operator*=(double s) {
        if (s == 0.0) { terms_.clear(); return *this; }
        for (auto& [key, c] : terms_) c *= s;
        return *this;
    }

    friend SmoothFn operator+(SmoothFn a, const SmoothFn& b) { return a += b; }
    friend SmoothFn operator*(SmoothFn f, double s) { return f *= s; }
    friend SmoothFn operator*(double s, SmoothFn f) { return f *= s; }
    friend SmoothFn operator-(SmoothFn f) { return f *= -1.0; }

    /// Product of two trig polynomials via product-to-sum identities.
    /// Exact on the harmonic lattice. At most one factor may carry a
    /// rational prefactor; the product inherits it.
    friend SmoothFn operator*(const SmoothFn& a, const SmoothFn& b) {
        if (a.has_prefactor() && b.has_prefactor())
            throw NonRemovableSingularity("SmoothFn: product of two rational prefactors");
        SmoothFn out;
        out.prefactor_ = a.has_prefactor() ? a.prefactor_ : b.prefactor_;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.accumulate_product(ka, ca, kb, cb);
        return out;
    }

    /// d/dx. Requires no rational prefactor (the calculus never
    /// differentiates 1/x factors).
    SmoothFn derivative(double L) const {
        if (has_prefactor())
            throw NonRemovableSingularity("SmoothFn::derivative: rational prefactor present");
        SmoothFn out;
        for (const auto& [key, c] : terms_) {
            const double k = key.harmonic * std::numbers::pi / L;
            if (key.trig == Trig::Sin)
                out.add_term({Trig::Cos, key.harmonic}, c * k);
            else if (key.harmonic > 0)
                out.add_term({Trig::Sin, key.harmonic}, -c * k);
        }
        return out;
    }

    /// Value of the trig part at a wall, by the exact identities.
    double trig_value_at(Site s) const {
        double v = 0.0;
        for (const auto& [key, c] : terms_) {
            if (key.trig == Trig::Sin) continue;  // sin(m*pi) = 0
            v += (s == Site::Left) ? c : c * parity(key.harmonic);
        }
        return v;
    }

    /// Derivative of the trig part at a wall, exact.
    double trig_derivative_at(Site s, double L) const {
        double v = 0.0;
        for (const auto& [key, c] : terms_) {
            if (key.trig == Trig::Cos) continue;  // cos' = -k sin, sin(m*pi) = 0
            const double k = key.harmonic * std::numbers::pi / L;
            v += (s == Site::Left) ? c * k : c * k * parity(key.harmonic);
        }
        return v;
    }

    /// Sifted value at a wall: the value the function contributes when it
    /// multiplies a delta at that site. A rational prefactor is resolved as
    /// a removable singularity when its trig numerator vanishes there.
    double value_at_site(Site s, double L) const {
        switch (prefactor_) {
            case Prefactor::None:
                return trig_value_at(s);
            case Prefactor::OverX:
                if (s == Site::Right) {
                    if (L == 0.0) throw NonRemovableSingularity("value_at_site: L = 0");
                    return trig_value_at(Site::Right) / L;
                }
                if (trig_value_at(Site::Left) != 0.0)
                    throw NonRemovableSingularity(
                        "value_at_site: numerator of 1/x does not vanish at x = 0");
                return trig_derivative_at(Site::Left, L);  // lim N(x)/x = N'(0)
            case Prefactor::OverLMinusX:
                if (s == Site::Left) return trig_value_at(Site::Left) / L;
                if (trig_value_at(Site::Right) != 0.0)
                    throw NonRemovableSingularity(
                        "value_at_site: numerator of 1/(L-x) does not vanish at x = L");
                return -trig_derivative_at(Site::Right, L);  // lim N(x)/(L-x) = -N'(L)
        }
        return 0.0;
    }

    /// Pointwise evaluation for 0 < x < L (and at the walls where defined).
    double value(double x, double L) const {
        double n = 0.0;
        for (const auto& [key, c] : terms_) {
            const double arg = key.harmonic * std::numbers::pi * x / L;
            n += (key.trig == Trig::Sin) ? c * std::sin(arg) : c * std::cos(arg);
        }
        switch (prefactor_) {
            case Prefactor::None: return n;
            case Prefactor::OverX:
                if (x == 0.0) return value_at_site(Site::Left, L);
                return n / x;
            case Prefactor::OverLMinusX:
                if (x == L) return value_at_site(Site::Right, L);
                return n / (L - x);
        }
        return n;
    }

    /// Drop terms that are numerically dead relative to the given scale.
    SmoothFn pruned(double scale, double rel_tol = 1e-14) const {
        SmoothFn out;
        out.prefactor_ = prefactor_;
        for (const auto& [key, c] : terms_)
            if (std::abs(c) > rel_tol * scale) out.terms_[key] = c;
        return out;
    }

    double max_abs_coeff() const {
        double m = 0.0;
        for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
        return m;
    }

    bool approx_equal(const SmoothFn& o, double tol = 1e-12) const {
        if (prefactor_ != o.prefactor_) return false;
        SmoothFn d = *this + (o * -1.0);
        return d.max_abs_coeff() <= tol;
    }

    std::string str(int precision = 6) const;

    static constexpr double parity(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

private:
    void add_term(Key key, double c) {
        if (c == 0.0) return;
        if (key.harmonic == 0 && key.trig == Trig::Sin) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0.0) terms_.erase(it);
        }
    }

    void accumulate_product(Key a, double ca, Key b, double cb) {
        const double c = ca * cb;
        const int sum = a.harmonic + b.harmonic;
        const int dif = a.harmonic - b.harmonic;
        if (a.trig == Trig::Sin && b.trig == Trig::Sin) {
            // sin A sin B = (cos(A-B) - cos(A+B)) / 2
            add_term({Trig::Cos, std::abs(dif)}, 0.5 * c);
            add_term({Trig::Cos, sum}, -0.5 * c);
        } else if (a.trig == Trig::Cos && b.trig == Trig::Cos) {
            // cos A cos B = (cos(A-B) + cos(A+B)) / 2
            add_term({Trig::Cos, std::abs(dif)}, 0.5 * c);
            add_term({Trig::Cos, sum}, 0.5 * c);
        } else {
            // sin A cos B = (sin(A+B) + sin(A-B)) / 2, with A the sin factor
            const int d = (a.trig == Trig::Sin) ? dif : -dif;
            add_term({Trig::Sin, sum}, 0.5 * c);
            if (d >= 0) add_term({Trig::Sin, d}, 0.5 * c);
            else add_term({Trig::Sin, -d}, -0.5 * c);
        }
    }

    std::map<Key, double> terms_;
    Prefactor prefactor_ = Prefactor::None;
};

inline std::string SmoothFn::str(int precision) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os.precision(precision);
    bool first = true;
    for (const auto& [key, c] : terms_) {
        const double mag = std::abs(c);
        if (first) { if (c < 0) os << "-"; first = false; }
        else os << (c < 0 ? " - " : " + ");
        if (key.harmonic == 0) { os << mag; continue; }
        os << mag << "*" << (key.trig == Trig::Sin ? "sin" : "cos")
           << "(" << key.harmonic << "*pi*x/L)";
    }
    std::string body = os.str();
    switch (prefactor_) {
        case Prefactor::None: return body;
        case Prefactor::OverX: return "[" + body + "]/x";
        case Prefactor::OverLMinusX: return "[" + body + "]/(L-x)";
    }
    return body;
}

}  // namespace isqw
