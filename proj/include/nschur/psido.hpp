#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <string>

#include "nschur/parse.hpp"
#include "nschur/serialize.hpp"

namespace nschur {

/// Generalized binomial coefficient C(a, i) for integer a and i >= 0.
inline BigRational leibniz_binomial(int a, int i) {
    BigRational c = 1;
    for (int j = 1; j <= i; ++j) c = c * (a - j + 1) / j;
    return c;
}

/// Truncated pseudo-differential operator sum_a f_a(x, t) d^a with d = d/dx, x = t_1.
///
/// depth() is the largest D such that the operator is exact modulo
/// d^{-D-1}; terms below -depth() are dropped.
class PsiDO {
public:
    static constexpr int kDefaultDepth = 6;
    static constexpr int kExact = INT_MAX / 4;

    PsiDO() = default;
    explicit PsiDO(int depth) : depth_(depth) {}

    static PsiDO d(int a = 1, int depth = kExact) { return monomial(a, RationalFunction(1), depth); }
    static PsiDO function(const RationalFunction& f, int depth = kExact) { return monomial(0, f, depth); }
    static PsiDO monomial(int a, const RationalFunction& f, int depth = kExact) {
        PsiDO p(depth);
        p.add(a, f);
        return p;
    }

    int depth() const { return depth_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest exponent; INT_MIN for the zero operator.
    int order() const { return terms_.empty() ? INT_MIN : terms_.begin()->first; }
    RationalFunction coeff(int a) const {
        auto it = terms_.find(a);
        return it == terms_.end() ? RationalFunction{} : it->second;
    }
    const std::map<int, RationalFunction, std::greater<int>>& terms() const { return terms_; }

    void add(int a, const RationalFunction& f) {
        if (a < -depth_ || f.is_zero()) return;
        auto it = terms_.find(a);
        if (it == terms_.end()) {
            terms_.emplace(a, f);
            return;
        }
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }

    PsiDO truncated(int depth) const {
        PsiDO p(std::min(depth, depth_));
        for (const auto& [a, f] : terms_) p.add(a, f);
        return p;
    }

    friend PsiDO operator+(const PsiDO& a, const PsiDO& b) {
        PsiDO r(std::min(a.depth_, b.depth_));
        for (const auto& [e, f] : a.terms_) r.add(e, f);
        for (const auto& [e, f] : b.terms_) r.add(e, f);
        return r;
    }
    PsiDO operator-() const {
        PsiDO r(depth_);
        for (const auto& [e, f] : terms_) r.terms_.emplace(e, -f);
        return r;
    }
    friend PsiDO operator-(const PsiDO& a, const PsiDO& b) { return a + (-b); }

    PsiDO scaled(const RationalFunction& c) const {
        PsiDO r(depth_);
        for (const auto& [e, f] : terms_) r.add(e, f * c);
        return r;
    }

    /// Coefficientwise derivative in one variable (d/dt_i for a time variable).
    PsiDO coefficient_derivative(const Variable& v) const {
        PsiDO r(depth_);
        for (const auto& [e, f] : terms_) r.add(e, f.derivative(v));
        return r;
    }

    friend bool operator==(const PsiDO& a, const PsiDO& b) {
        PsiDO diff = a - b;
        return diff.is_zero();
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [e, f] : terms_) {
            if (!s.empty()) s += " + ";
            std::string c = f.to_string();
            bool compound = c.find_first_of("+-/ ") != std::string::npos;
            if (e == 0) {
                s += compound ? "(" + c + ")" : c;
                continue;
            }
            if (!(f.is_constant() && f.constant_value() == 1)) s += (compound ? "(" + c + ")" : c) + "*";
            s += e == 1 ? "D" : "D^" + std::to_string(e);
        }
        return s;
    }

private:
    int depth_ = kDefaultDepth;
    std::map<int, RationalFunction, std::greater<int>> terms_;
};

/// Generalized Leibniz rule: f d^a o g d^b = sum_i C(a, i) f g^{(i)} d^{a+b-i}.
///
/// Truncating A below -D_A changes A o B only below -D_A + ord B, so the
/// result depth is min(D_A - ord B, D_B - ord A), capped by both inputs.
inline PsiDO compose(const PsiDO& A, const PsiDO& B) {
    if (A.is_zero() || B.is_zero()) return PsiDO(std::min(A.depth(), B.depth()));
    auto shift = [](int depth, int ord) { return depth >= PsiDO::kExact ? depth : depth - std::max(ord, 0); };
    const int D = std::min({shift(A.depth(), B.order()), shift(B.depth(), A.order()), A.depth(), B.depth()});
    PsiDO r(D);
    const Variable x = Variable::x();
    for (const auto& [b, g] : B.terms()) {
        // g and its x-derivatives are shared by every term of A.
        std::vector<RationalFunction> dg{g};
        for (const auto& [a, f] : A.terms()) {
            for (int i = 0;; ++i) {
                const int e = a + b - i;
                if (e < -D) break;
                if (a >= 0 && i > a) break;
                while (static_cast<int>(dg.size()) <= i) dg.push_back(dg.back().derivative(x));
                if (dg[static_cast<std::size_t>(i)].is_zero()) break;
                r.add(e, f * dg[static_cast<std::size_t>(i)].scaled(leibniz_binomial(a, i)));
            }
        }
    }
    return r;
}

inline PsiDO plus_part(const PsiDO& A) {
    PsiDO r(PsiDO::kExact);
    for (const auto& [e, f] : A.terms())
        if (e >= 0) r.add(e, f);
    return r;
}

inline PsiDO minus_part(const PsiDO& A) {
    PsiDO r(A.depth());
    for (const auto& [e, f] : A.terms())
        if (e < 0) r.add(e, f);
    return r;
}

inline PsiDO commutator(const PsiDO& A, const PsiDO& B) { return compose(A, B) - compose(B, A); }

inline PsiDO power(const PsiDO& A, int n) {
    if (n < 0) throw InvalidRange("negative operator power");
    PsiDO r = PsiDO::function(RationalFunction(1));
    for (int i = 0; i < n; ++i) r = compose(r, A);
    return r;
}

/// The monic first-order root of a monic order-N operator, valid to depth D.
///
/// Writing root = d + sum_{j>=0} c_j d^{-j}, the d^{N-1-j} coefficient of
/// root^N is N c_j plus terms in c_0..c_{j-1}, which fixes c_j.
inline PsiDO nth_root(const PsiDO& L, int depth = PsiDO::kDefaultDepth) {
    const int N = L.order();
    if (N < 1) throw NonMonic("operator must have positive order");
    const RationalFunction lead = L.coeff(N);
    if (!(lead.is_constant() && lead.constant_value() == 1)) throw NonMonic("leading coefficient is not 1");
    if (N - 1 - depth < -L.depth()) throw InvalidRange("input depth too small for the requested root depth");
    const int work = depth + N;
    PsiDO root = PsiDO::d(1, work);
    for (int j = 0; j <= depth; ++j) {
        const int e = N - 1 - j;
        RationalFunction have = power(root, N).coeff(e);
        root.add(-j, (L.coeff(e) - have).scaled(make_rational(1, N)));
    }
    return root.truncated(depth);
}

/// Default orientation of the Lax bracket, fixed by the stationary and
/// KdV flows of d^2 - 2x/(3t+1).
constexpr int kDefaultBracketSign = -1;

/// dL/dt_i - sign [L, (root^i)_+] with root the N-th root of L.
inline PsiDO lax_residual(const PsiDO& L, int i, int sign = kDefaultBracketSign, int depth = PsiDO::kDefaultDepth) {
    if (i < 1) throw InvalidRange("flow index must be positive");
    if (sign != 1 && sign != -1) throw InvalidRange("sign must be +1 or -1");
    const int N = L.order();
    PsiDO root = nth_root(L, std::max(depth, i) + N);
    PsiDO B = plus_part(power(root, i));
    PsiDO r = L.coefficient_derivative(Variable::time(i)) - commutator(L, B).scaled(RationalFunction(sign));
    return r.truncated(depth);
}

inline json to_json(const PsiDO& p) {
    json terms = json::array();
    for (const auto& [e, f] : p.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(f)}});
    json j{{"terms", terms}};
    j["depth"] = p.depth() >= PsiDO::kExact ? json("exact") : json(p.depth());
    return j;
}

inline PsiDO psido_from_json(const json& j) {
    try {
        int depth = PsiDO::kDefaultDepth;
        if (j.contains("depth")) depth = j["depth"].is_string() ? PsiDO::kExact : j["depth"].get<int>();
        PsiDO p(depth);
        for (const auto& t : j.at("terms")) {
            const json& c = t.at("coeff");
            p.add(t.at("exp").get<int>(), c.is_string() ? parse_rational_function(c.get<std::string>()) : rational_function_from_json(c));
        }
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("operator JSON: ") + e.what());
    }
}

/// Literal "exp:coeff;exp:coeff", e.g. "2:1;0:-2*x/(3*t+1)".
inline PsiDO parse_psido(const std::string& text, int depth = PsiDO::kExact) {
    PsiDO p(depth);
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(';', start);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(start, end - start);
        if (item.find_first_not_of(" \t") != std::string::npos) {
            auto colon = item.find(':');
            if (colon == std::string::npos) throw ParseError("operator term needs 'exp:coeff': '" + item + "'");
            int e = 0;
            try {
                std::size_t used = 0;
                e = std::stoi(item.substr(0, colon), &used);
            } catch (const std::exception&) {
                throw ParseError("bad exponent in '" + item + "'");
            }
            p.add(e, parse_rational_function(item.substr(colon + 1)));
        }
        start = end + 1;
    }
    return p;
}

}  // namespace nschur
