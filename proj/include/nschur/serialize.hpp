#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nschur/rational_function.hpp"

namespace nschur {

using json = nlohmann::json;

// Wire format
//   variable : ["t", i] | ["h", i, j, k] | ["pi", a(, b(, c))] | ["a", n]
//   term     : [[[variable, exponent], ...], "p/q"]
//   poly     : {"terms": [term, ...]}            (leading term first, grlex)
//   ratfun   : {"num": poly, "den": poly}

inline json to_json(const Variable& v) {
    switch (v.kind) {
        case Variable::Kind::Time:
            return json::array({"t", v.key[0]});
        case Variable::Kind::H:
            return json::array({"h", v.h_i(), v.h_j(), v.h_k()});
        case Variable::Kind::Pi: {
            json j = json::array({"pi", v.key[0]});
            for (int n = 1; n < 3 && v.key[n] != 0; ++n) j.push_back(v.key[n]);
            return j;
        }
        case Variable::Kind::Aux:
            return json::array({"a", v.key[0]});
    }
    return {};
}

inline Variable variable_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_string()) throw ParseError("variable must be [tag, indices...]");
    const std::string tag = j[0].get<std::string>();
    auto idx = [&](std::size_t n) {
        if (n >= j.size() || !j[n].is_number_integer()) throw ParseError("bad index in variable " + j.dump());
        return j[n].get<int>();
    };
    if (tag == "t" && j.size() == 2) return Variable::time(idx(1));
    if (tag == "h" && j.size() == 4) return Variable::h(idx(1), idx(2), idx(3));
    if (tag == "pi" && j.size() >= 2 && j.size() <= 4)
        return Variable::pi(idx(1), j.size() > 2 ? idx(2) : 0, j.size() > 3 ? idx(3) : 0);
    if (tag == "a" && j.size() == 2) return Variable::aux(idx(1));
    throw ParseError("unknown variable " + j.dump());
}

inline json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& t : p.terms()) {
        json mono = json::array();
        for (const auto& [v, e] : t.monomial.factors()) mono.push_back(json::array({to_json(v), e}));
        terms.push_back(json::array({mono, to_string(t.coeff)}));
    }
    return json{{"terms", terms}};
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial must be {\"terms\": [...]}");
    std::vector<Polynomial::Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || !t[1].is_string())
            throw ParseError("term must be [[[var, exp], ...], \"coeff\"]");
        std::vector<Monomial::Factor> fs;
        for (const auto& f : t[0]) {
            if (!f.is_array() || f.size() != 2 || !f[1].is_number_integer())
                throw ParseError("factor must be [var, exp]");
            fs.emplace_back(variable_from_json(f[0]), f[1].get<int>());
        }
        terms.push_back({Monomial::from_factors(std::move(fs)), parse_rational(t[1].get<std::string>())});
    }
    return Polynomial::from_terms(std::move(terms));
}

inline json to_json(const RationalFunction& r) {
    return json{{"num", to_json(r.numerator())}, {"den", to_json(r.denominator())}};
}

inline RationalFunction rational_function_from_json(const json& j) {
    if (j.is_object() && j.contains("terms")) return RationalFunction(polynomial_from_json(j));
    if (!j.is_object() || !j.contains("num")) throw ParseError("rational function must be {\"num\":..., \"den\":...}");
    Polynomial num = polynomial_from_json(j["num"]);
    if (!j.contains("den")) return RationalFunction(num);
    Polynomial den = polynomial_from_json(j["den"]);
    if (den.is_zero()) throw ParseError("zero denominator");
    return RationalFunction(num, den);
}

}  // namespace nschur
