#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "isqw/errors.hpp"
#include "isqw/smooth_fn.hpp"

namespace isqw {

/// One term of a distribution on [0, L]:
///   Windowed       smooth(x) * theta(x) * theta(L-x)
///   BoundaryDelta  coeff(x) * delta(x)  or  coeff(x) * delta(L-x)
struct DistTerm {
    enum class Kind { Windowed, BoundaryDelta };

    Kind kind;
    Site site = Site::Left;  // meaningful for BoundaryDelta only
    SmoothFn fn;             // smooth part or delta coefficient

    static DistTerm windowed(SmoothFn f) {
        return {Kind::Windowed, Site::Left, std::move(f)};
    }
    static DistTerm delta(Site s, SmoothFn coeff) {
        return {Kind::BoundaryDelta, s, std::move(coeff)};
    }

    /// A delta coefficient is sifted when it is a plain constant.
    bool is_sifted() const {
        if (kind != Kind::BoundaryDelta) return true;
        if (fn.has_prefactor()) return false;
        for (const auto& [key, c] : fn.terms())
            if (key.harmonic != 0) return false;
        return true;
    }
};

/// Linear combination of windowed smooth parts and boundary deltas on [0, L].
class DistExpr {
public:
    explicit DistExpr(double L) : L_(L) {}

    static DistExpr zero(double L) { return DistExpr(L); }

    static DistExpr windowed(SmoothFn f, double L) {
        DistExpr e(L);
        if (!f.is_zero()) e.terms_.push_back(DistTerm::windowed(std::move(f)));
        return e;
    }

    static DistExpr boundary_delta(Site s, SmoothFn coeff, double L) {
        DistExpr e(L);
        if (!coeff.is_zero()) e.terms_.push_back(DistTerm::delta(s, std::move(coeff)));
        return e;
    }

    double domain_length() const { return L_; }
    const std::vector<DistTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DistExpr& operator+=(const DistExpr& o) {
        if (o.L_ != L_ && !o.is_zero() && !is_zero())
            throw std::invalid_argument("DistExpr: mismatched domain lengths");
        for (const auto& t : o.terms_) terms_.push_back(t);
        return *this;
    }

    DistExpr& operator*=(double s) {
        if (s == 0.0) { terms_.clear(); return *this; }
        for (auto& t : terms_) t.fn *= s;
        return *this;
    }

    friend DistExpr operator+(DistExpr a, const DistExpr& b) { return a += b; }
    friend DistExpr operator*(DistExpr e, double s) { return e *= s; }
    friend DistExpr operator*(double s, DistExpr e) { return e *= s; }
    friend DistExpr operator-(DistExpr e) { return e *= -1.0; }
    friend DistExpr operator-(DistExpr a, const DistExpr& b) {
        return a += b * -1.0;
    }

    /// d/dx with theta'(x) = delta(x) and d/dx theta(L-x) = -delta(L-x).
    /// New delta coefficients are sifted immediately to wall values.
    /// Differentiating an existing delta would create delta', which this
    /// calculus excludes.
    DistExpr differentiate() const {
        DistExpr out(L_);
        for (const auto& t : terms_) {
            if (t.kind == DistTerm::Kind::BoundaryDelta)
                throw DeltaDerivativeUnsupported(
                    "differentiate: delta' terms are outside this calculus");
            if (t.fn.has_prefactor())
                throw NonRemovableSingularity(
                    "differentiate: windowed part carries a rational prefactor");
            out += windowed(t.fn.derivative(L_), L_);
            out += boundary_delta(Site::Left,
                                  SmoothFn::constant(t.fn.trig_value_at(Site::Left)), L_);
            out += boundary_delta(Site::Right,
                                  SmoothFn::constant(-t.fn.trig_value_at(Site::Right)), L_);
        }
        return out.canonical();
    }

    /// Replace every delta coefficient by its (possibly limit) value at the
    /// delta's site. f(x) delta(x) = f(0) delta(x); removable 1/x and
    /// 1/(L-x) singularities are resolved by their limits.
    DistExpr sift() const {
        DistExpr out(L_);
        for (const auto& t : terms_) {
            if (t.kind == DistTerm::Kind::Windowed) { out.terms_.push_back(t); continue; }
            const double v = t.fn.value_at_site(t.site, L_);
            out += boundary_delta(t.site, SmoothFn::constant(v), L_);
        }
        return out.canonical();
    }

    /// Multiply by a smooth function: distributes over terms, theta^2 = theta,
    /// delta coefficients re-sifted.
    DistExpr multiply(const SmoothFn& s) const {
        DistExpr out(L_);
        for (const auto& t : terms_) {
            if (t.kind == DistTerm::Kind::Windowed) {
                out += windowed(t.fn * s, L_);
            } else {
                SmoothFn coeff = t.fn * s;
                const double v = coeff.value_at_site(t.site, L_);
                out += boundary_delta(t.site, SmoothFn::constant(v), L_);
            }
        }
        return out.canonical();
    }

    bool is_sifted() const {
        for (const auto& t : terms_)
            if (!t.is_sifted()) return false;
        return true;
    }

    /// Integral over [0, L]. Windowed trig parts integrate in closed form;
    /// each boundary delta contributes half its coefficient,
    /// int_0^L delta(x) dx = int_0^L delta(L-x) dx = 1/2. Pass
    /// full_weight = true for integration over the whole line.
    double integrate_over_well(bool full_weight = false) const {
        double acc = 0.0;
        for (const auto& t : terms_) {
            if (t.kind == DistTerm::Kind::BoundaryDelta) {
                if (!t.is_sifted())
                    throw UnsiftedDelta("integrate_over_well: sift the expression first");
                const double w = full_weight ? 1.0 : 0.5;
                acc += w * t.fn.trig_value_at(t.site);
            } else {
                if (t.fn.has_prefactor())
                    throw NonRemovableSingularity(
                        "integrate_over_well: rational prefactor in a windowed part");
                for (const auto& [key, c] : t.fn.terms()) {
                    if (key.trig == SmoothFn::Trig::Cos) {
                        if (key.harmonic == 0) acc += c * L_;
                        // int_0^L cos(m pi x / L) dx = 0 for m >= 1
                    } else {
                        const double m = key.harmonic;
                        acc += c * L_ / (m * std::numbers::pi) *
                               (1.0 - SmoothFn::parity(key.harmonic));
                    }
                }
            }
        }
        return acc;
    }

    /// Merge to at most one windowed term and one delta per site; drop
    /// coefficients that cancelled to numerical noise.
    DistExpr canonical() const {
        SmoothFn win, left, right;
        double scale = 0.0;
        for (const auto& t : terms_) scale = std::max(scale, t.fn.max_abs_coeff());

        DistExpr out(L_);
        for (const auto& t : terms_) {
            // unsifted deltas and singular windowed parts stay as-is
            if (!t.is_sifted() ||
                (t.kind == DistTerm::Kind::Windowed && t.fn.has_prefactor())) {
                out.terms_.push_back(t);
                continue;
            }
            if (t.kind == DistTerm::Kind::Windowed) win += t.fn;
            else if (t.site == Site::Left) left += t.fn;
            else right += t.fn;
        }
        win = win.pruned(scale);
        left = left.pruned(scale);
        right = right.pruned(scale);
        if (!win.is_zero())
            out.terms_.insert(out.terms_.begin(), DistTerm::windowed(win));
        if (!left.is_zero()) out.terms_.push_back(DistTerm::delta(Site::Left, left));
        if (!right.is_zero()) out.terms_.push_back(DistTerm::delta(Site::Right, right));
        return out;
    }

    /// Merged windowed part (zero function if none).
    SmoothFn windowed_part() const {
        SmoothFn f;
        for (const auto& t : terms_)
            if (t.kind == DistTerm::Kind::Windowed) f += t.fn;
        return f;
    }

    /// Sifted coefficient of the delta at the given site (0 if absent).
    double delta_coefficient(Site s) const {
        double v = 0.0;
        for (const auto& t : terms_)
            if (t.kind == DistTerm::Kind::BoundaryDelta && t.site == s) {
                if (!t.is_sifted())
                    throw UnsiftedDelta("delta_coefficient: expression not sifted");
                v += t.fn.trig_value_at(s);
            }
        return v;
    }

    bool approx_equal(const DistExpr& o, double tol = 1e-12) const {
        DistExpr d = (*this - o).canonical();
        for (const auto& t : d.terms_)
            if (t.fn.max_abs_coeff() > tol) return false;
        return true;
    }

    std::string str(int precision = 6) const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) os << " + ";
            first = false;
            if (t.kind == DistTerm::Kind::Windowed) {
                os << "(" << t.fn.str(precision) << ")*[theta]";
            } else {
                os << "(" << t.fn.str(precision) << ")*["
                   << (t.site == Site::Left ? "d(0)" : "d(L)") << "]";
            }
        }
        return os.str();
    }

private:
    double L_;
    std::vector<DistTerm> terms_;
};

}  // namespace isqw
