// Copyright the dunklkit authors. Licensed under the terms of the Apache 2.0 license. See LICENSE in the project root.
#include "dunklkit/reports_json.hpp"

namespace dunklkit::reports {

Json to_json(const mono::CMReport& r) {
    Json j;
    j["k"] = r.k;
    j["sigma"] = r.sigma;
    j["orders_checked"] = r.orders_checked;
    j["mode"] = r.mode == mono::CMMode::exact ? "exact" : "numeric";
    j["grid"] = r.grid;
    j["per_order_min"] = r.per_order_min;
    j["verdict"] = r.pass ? "pass" : "fail";
    if (r.first_violation) {
        j["first_violation"] = Json{{"order", r.first_violation->order},
                                    {"x", r.first_violation->x},
                                    {"value", r.first_violation->value}};
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

Json to_json(const mono::GramReport& r) {
    Json j;
    j["points"] = r.points;
    Json re = Json::array(), im = Json::array();
    for (const auto& z : r.gram) {
        re.push_back(z.real());
        im.push_back(z.imag());
    }
    j["gram_re"] = re;
    j["gram_im"] = im;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["hermitian_defect"] = r.hermitian_defect;
    j["verdict"] = r.psd ? "psd" : "indefinite";
    return j;
}

Json to_json(const mono::SchoenbergReport& r) {
    Json j;
    j["cm"] = to_json(r.cm);
    j["pd"] = to_json(r.pd);
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

Json to_json(const mono::ConvexityReport& r) {
    Json j;
    j["grid"] = r.grid;
    j["phi_k_values"] = r.phi_k_values;
    j["hypothesis_convex"] = r.hypothesis_convex;
    j["hypothesis_decay"] = r.hypothesis_decay;
    j["applicable"] = r.applicable;
    j["conclusion_w_min"] = r.conclusion_w_min;
    j["conclusion_w_nonneg"] = r.conclusion_w_nonneg;
    j["conclusion_cm_pass"] = r.conclusion_cm_pass;
    switch (r.verdict) {
        case mono::ConvexityReport::Verdict::silent:
            j["verdict"] = "theorem silent";
            break;
        case mono::ConvexityReport::Verdict::pass:
            j["verdict"] = "pass";
            break;
        case mono::ConvexityReport::Verdict::fail:
            j["verdict"] = "fail";
            break;
    }
    return j;
}

Json to_json(const kummer::AdjudicationRecord& r) {
    Json j;
    j["k_list"] = r.k_list;
    j["p_list"] = r.p_list;
    j["x_grid"] = r.x_grid;
    Json combos = Json::array();
    for (const auto& c : r.combos) {
        combos.push_back(Json{{"closed_form", c.uses_psi ? "psi" : "phi"},
                              {"rho", c.rho_is_2k ? "2k" : "2k+1"},
                              {"sign", c.sign},
                              {"max_rel_err", c.max_rel_err}});
    }
    j["combos"] = combos;
    j["match_tol"] = r.match_tol;
    j["matched_combo"] = r.matched_combo;
    j["unique_match"] = r.unique_match;
    j["mirror_match"] = r.mirror_match;
    j["cm_pass"] = r.cm_pass;
    return j;
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

} // namespace

std::string schema_mismatch(const Json& value, const Json& schema) {
    if (schema.contains("type")) {
        const auto& ty = schema.at("type");
        bool ok = false;
        if (ty.is_string()) {
            ok = type_matches(value, ty.get<std::string>());
        } else if (ty.is_array()) {
            for (const auto& t : ty)
                ok = ok || type_matches(value, t.get<std::string>());
        }
        if (!ok)
            return "type mismatch: expected " + ty.dump() + ", got " + value.dump().substr(0, 60);
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& e : schema.at("enum"))
            ok = ok || e == value;
        if (!ok)
            return "enum mismatch: " + value.dump();
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return "missing required key '" + key.get<std::string>() + "'";
        }
        if (schema.contains("properties")) {
            for (const auto& [key, sub] : schema.at("properties").items()) {
                if (value.contains(key)) {
                    const std::string err = schema_mismatch(value.at(key), sub);
                    if (!err.empty())
                        return "at '" + key + "': " + err;
                }
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& item : value) {
            const std::string err = schema_mismatch(item, schema.at("items"));
            if (!err.empty())
                return "in array item: " + err;
        }
    }
    return {};
}

} // namespace dunklkit::reports
