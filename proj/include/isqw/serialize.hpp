#pragma once

#include <string>

#include <json.hpp>

#include "isqw/convergence.hpp"
#include "isqw/dist_expr.hpp"
#include "isqw/smooth_fn.hpp"
#include "isqw/time_series.hpp"

namespace isqw {

inline std::string to_string(Site s) {
    return s == Site::Left ? "left" : "right";
}

inline std::string to_string(Prefactor p) {
    switch (p) {
        case Prefactor::None: return "none";
        case Prefactor::OverX: return "over_x";
        case Prefactor::OverLMinusX: return "over_L_minus_x";
    }
    return "none";
}

inline nlohmann::json to_json(const SmoothFn& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : f.terms()) {
        terms.push_back({
            {"trig", key.trig == SmoothFn::Trig::Sin ? "sin" : "cos"},
            {"harmonic", key.harmonic},
            {"coeff", c},
        });
    }
    return {{"prefactor", to_string(f.prefactor())}, {"terms", terms}};
}

inline nlohmann::json to_json(const DistExpr& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : e.terms()) {
        nlohmann::json jt = {{"fn", to_json(t.fn)}};
        if (t.kind == DistTerm::Kind::Windowed) {
            jt["kind"] = "windowed";
        } else {
            jt["kind"] = "boundary_delta";
            jt["site"] = to_string(t.site);
        }
        terms.push_back(std::move(jt));
    }
    return {{"L", e.domain_length()}, {"terms", terms}};
}

inline nlohmann::json to_json(const TimeSeries& ts) {
    ts.validate();
    return {
        {"label", ts.label},
        {"metadata", ts.metadata},
        {"times", ts.times},
        {"values", ts.values},
    };
}

inline nlohmann::json to_json(const std::vector<ConvergenceRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({
            {"n", r.n},
            {"j", r.j},
            {"V0", r.V0},
            {"finite_value", r.finite_value},
            {"target", r.target},
            {"abs_err", r.abs_err},
            {"rel_err", r.rel_err},
            {"empirical_order", std::isnan(r.empirical_order)
                                    ? nlohmann::json(nullptr)
                                    : nlohmann::json(r.empirical_order)},
        });
    }
    return {{"rows", arr}};
}

}  // namespace isqw
