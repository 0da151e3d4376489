#pragma once

// JSON forms of the library's values. Keys come out sorted (nlohmann's default map),
// terms in ascending exponent order, so equal inputs give byte-identical text.

#include <functional>

#include <json.hpp>

#include "branching.hpp"
#include "wigner.hpp"

namespace qwig::io {

using json = nlohmann::json;

inline json to_json(const HalfLaurent& p)
{
    json a = json::array();
    for (const auto& [e2, c] : p.terms()) a.push_back(json::array({e2, c.get_str()}));
    return a;
}

inline HalfLaurent laurent_from_json(const json& j)
{
    std::vector<HalfLaurent::Term> t;
    for (const auto& x : j) t.emplace_back(x.at(0).get<long>(), Rational(x.at(1).get<std::string>()));
    for (auto& [e, c] : t) c.canonicalize();
    return HalfLaurent::from_terms(std::move(t));
}

inline json to_json(const QFraction& f)
{
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}, {"text", to_string(f)}};
}

inline QFraction qfraction_from_json(const json& j)
{
    return QFraction(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

inline json ints_json(const std::vector<int>& v) { return json(v); }

inline json to_json(const RootSet& r)
{
    json d = json::array();
    for (const auto& x : r.deformed) d.push_back(to_string(x));
    return json{{"variant", to_string(r.variant)}, {"classical", r.classical}, {"deformed", d}, {"distinct", r.distinct}};
}

inline json to_json(const BranchingData& b)
{
    return json{{"weight", to_string(b.lambda)},
                {"lower", to_string(b.lambda0)},
                {"I0", b.I0},
                {"I0bar", b.I0bar},
                {"I1", b.I1},
                {"I1tilde", b.I1tilde},
                {"eta", b.eta},
                {"e_last", b.e_last}};
}

inline json to_json(const CoefficientTable& t)
{
    json entries = json::array();
    QFraction sum;
    for (const auto& [kr, v] : t.entries) {
        json e{{"k", kr.first}, {"value", to_string(v)}, {"exact", to_json(v)}};
        if (kr.second) e["r"] = kr.second;
        entries.push_back(e);
        sum += v;
    }
    json out{{"kind", t.kind}, {"form", to_string(t.form)}, {"formula", t.formula},
             {"branching", to_json(t.branching)}, {"entries", entries}, {"sum", to_string(sum)}};
    if (!t.degenerate.empty()) {
        json d = json::array();
        for (auto [k, r] : t.degenerate) d.push_back(r ? json{{"k", k}, {"r", r}} : json{{"k", k}});
        out["degenerate"] = d;
    }
    return out;
}

// k, r, value_string, value_json
inline std::string to_csv(const CoefficientTable& t)
{
    std::string out = "k,r,value_string,value_json\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    for (const auto& [kr, v] : t.entries)
        out += std::to_string(kr.first) + "," + (kr.second ? std::to_string(kr.second) : std::string()) + "," +
               quote(to_string(v)) + "," + quote(to_json(v).dump()) + "\n";
    return out;
}

inline bool forms_agree(const CoefficientTable& a, const CoefficientTable& b)
{
    return a.entries == b.entries && a.degenerate == b.degenerate;
}

// one form, or both side by side with the agreement flag
inline json tables_json(const std::function<CoefficientTable(Form)>& make, const std::string& form)
{
    if (form != "both") return to_json(make(form == "qnumber_phase" ? Form::qnumber_phase : Form::root_product));
    auto a = make(Form::root_product), b = make(Form::qnumber_phase);
    return json{{"root_product", to_json(a)}, {"qnumber_phase", to_json(b)}, {"forms_agree", forms_agree(a, b)}};
}

inline json error_json(const Error& e)
{
    return json{{"error", json{{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

} // namespace qwig::io
