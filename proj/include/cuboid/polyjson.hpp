#pragma once

// Canonical polynomial file format:
//   {"vars": ["r","a"], "terms": [[[i,j],"coeff-decimal-string"], ...]}
// with terms sorted descending graded-lex and arbitrary-precision
// coefficients as decimal strings. Univariate polynomials use a
// single-element vars list.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cuboid/errors.hpp"
#include "cuboid/mpoly.hpp"
#include "cuboid/upoly.hpp"

namespace cuboid {

inline nlohmann::ordered_json to_json(const MPoly& p) {
    nlohmann::ordered_json j;
    j["vars"] = p.vars();
    auto terms = nlohmann::ordered_json::array();
    // map iteration order is descending graded-lex already
    for (const auto& [e, c] : p.terms()) terms.push_back({e, c.str()});
    j["terms"] = std::move(terms);
    return j;
}

inline nlohmann::ordered_json to_json(const UPolyZ& p) {
    nlohmann::ordered_json j;
    j["vars"] = std::vector<std::string>{p.var()};
    auto terms = nlohmann::ordered_json::array();
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        if (p.coeffs()[k].is_zero()) continue;
        terms.push_back({std::vector<std::size_t>{k}, p.coeffs()[k].str()});
    }
    j["terms"] = std::move(terms);
    return j;
}

inline MPoly mpoly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw DataError("polynomial json: missing vars/terms");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MPoly p(vars);
    for (const auto& t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2)
            throw DataError("polynomial json: malformed term");
        MPoly::Exps e = t.at(0).get<MPoly::Exps>();
        if (e.size() != vars.size())
            throw DataError("polynomial json: exponent arity mismatch");
        Int c = Int::from_string(t.at(1).get<std::string>());
        if (c.is_zero()) throw DataError("polynomial json: zero coefficient stored");
        if (!p.coeff(e).is_zero()) throw DataError("polynomial json: duplicate exponent vector");
        p.add_term(std::move(e), std::move(c));
    }
    return p;
}

inline UPolyZ upoly_from_json(const nlohmann::json& j) {
    MPoly p = mpoly_from_json(j);
    if (p.vars().size() != 1)
        throw DataError("polynomial json: expected a univariate polynomial");
    return to_univariate(p, p.vars()[0]);
}

inline std::string canonical_string(const MPoly& p) { return to_json(p).dump(); }
inline std::string canonical_string(const UPolyZ& p) { return to_json(p).dump(); }

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError("invalid json in " + path + ": " + e.what());
    }
    return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path);
    out << text;
    if (!out) throw DataError("short write to " + path);
}

}  // namespace cuboid
