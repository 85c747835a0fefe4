#pragma once

#include <algorithm>
#include <compare>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nschur/rational.hpp"
#include "nschur/variable.hpp"

namespace nschur {

/// Product of variables with positive exponents, kept sorted by variable.
class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;

    static Monomial of(const Variable& v, int e = 1) {
        Monomial m;
        if (e > 0) {
            m.factors_.emplace_back(v, e);
            m.degree_ = e;
        }
        return m;
    }

    /// Builds from arbitrary (variable, exponent) pairs; duplicates are merged.
    static Monomial from_factors(std::vector<Factor> fs) {
        std::sort(fs.begin(), fs.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
        Monomial m;
        for (const auto& [v, e] : fs) {
            if (e < 0) throw ParseError("negative exponent in monomial");
            if (e == 0) continue;
            if (!m.factors_.empty() && m.factors_.back().first == v)
                m.factors_.back().second = checked_add(m.factors_.back().second, e);
            else
                m.factors_.emplace_back(v, e);
            m.degree_ = checked_add(m.degree_, e);
        }
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }

    int exponent(const Variable& v) const {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                                   [](const Factor& f, const Variable& x) { return f.first < x; });
        return (it != factors_.end() && it->first == v) ? it->second : 0;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        m.factors_.reserve(a.factors_.size() + b.factors_.size());
        auto i = a.factors_.begin(), j = b.factors_.begin();
        while (i != a.factors_.end() || j != b.factors_.end()) {
            if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
                m.factors_.push_back(*i++);
            } else if (i == a.factors_.end() || j->first < i->first) {
                m.factors_.push_back(*j++);
            } else {
                m.factors_.emplace_back(i->first, checked_add(i->second, j->second));
                ++i;
                ++j;
            }
        }
        m.degree_ = checked_add(a.degree_, b.degree_);
        return m;
    }

    bool divides(const Monomial& other) const {
        auto j = other.factors_.begin();
        for (const auto& [v, e] : factors_) {
            while (j != other.factors_.end() && j->first < v) ++j;
            if (j == other.factors_.end() || !(j->first == v) || j->second < e) return false;
        }
        return true;
    }

    /// other / this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const {
        Monomial m;
        auto i = factors_.begin();
        for (const auto& [v, e] : other.factors_) {
            int rest = e;
            if (i != factors_.end() && i->first == v) rest -= (i++)->second;
            if (rest > 0) m.factors_.emplace_back(v, rest);
        }
        m.degree_ = other.degree_ - degree_;
        return m;
    }

    /// Copy with the exponent of v lowered by one (v must be present).
    Monomial lowered(const Variable& v) const {
        Monomial m = *this;
        for (auto it = m.factors_.begin(); it != m.factors_.end(); ++it) {
            if (it->first == v) {
                if (--it->second == 0) m.factors_.erase(it);
                --m.degree_;
                break;
            }
        }
        return m;
    }

    /// Restriction to the variables accepted by keep.
    template <class Pred>
    Monomial restricted(Pred keep) const {
        Monomial m;
        for (const auto& f : factors_) {
            if (keep(f.first)) {
                m.factors_.push_back(f);
                m.degree_ += f.second;
            }
        }
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

    std::string to_string() const {
        std::string s;
        for (const auto& [v, e] : factors_) {
            if (!s.empty()) s += "*";
            s += v.name();
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s.empty() ? "1" : s;
    }

private:
    static int checked_add(int a, int b) {
        int r;
        if (__builtin_add_overflow(a, b, &r) || r > (1 << 24)) {
            std::fprintf(stderr, "nschur: monomial exponent overflow (%d + %d)\n", a, b);
            std::abort();
        }
        return r;
    }

    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// earliest variable in the global order decides.
inline std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto i = fa.begin(), j = fb.begin();
    for (; i != fa.end() && j != fb.end(); ++i, ++j) {
        if (i->first < j->first) return std::strong_ordering::greater;
        if (j->first < i->first) return std::strong_ordering::less;
        if (auto c = i->second <=> j->second; c != 0) return c;
    }
    if (i != fa.end()) return std::strong_ordering::greater;
    if (j != fb.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are stored leading term first under grlex; zero coefficients are
/// never stored, so the zero polynomial has no terms.
class Polynomial {
public:
    struct Term {
        Monomial monomial;
        BigRational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;
    Polynomial(const BigRational& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.push_back({Monomial{}, c});
    }
    Polynomial(long c) : Polynomial(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(int c) : Polynomial(BigRational(c)) {}   // NOLINT(google-explicit-constructor)

    static Polynomial variable(const Variable& v) { return monomial(Monomial::of(v), 1); }
    static Polynomial monomial(Monomial m, const BigRational& c) {
        Polynomial p;
        if (c != 0) p.terms_.push_back({std::move(m), c});
        return p;
    }

    /// Builds from arbitrary terms; sorts and merges like monomials.
    static Polynomial from_terms(std::vector<Term> ts) {
        Polynomial p;
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
    BigRational constant_value() const {
        if (!is_constant()) throw Error("polynomial is not constant");
        return terms_.empty() ? BigRational(0) : terms_[0].coeff;
    }
    /// Coefficient of the constant term.
    BigRational constant_term() const {
        return (!terms_.empty() && terms_.back().monomial.is_one()) ? terms_.back().coeff : BigRational(0);
    }
    const Term& leading_term() const { return terms_.front(); }
    const BigRational& leading_coeff() const { return terms_.front().coeff; }
    int total_degree() const { return terms_.empty() ? -1 : terms_.front().monomial.degree(); }
    std::size_t size() const { return terms_.size(); }

    int degree_in(const Variable& v) const {
        int d = terms_.empty() ? -1 : 0;
        for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
        return d;
    }

    std::set<Variable> variables() const {
        std::set<Variable> vs;
        for (const auto& t : terms_)
            for (const auto& f : t.monomial.factors()) vs.insert(f.first);
        return vs;
    }

    BigRational coefficient(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.monomial == m) return t.coeff;
        return 0;
    }

    Polynomial operator-() const {
        Polynomial p = *this;
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
        if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
        std::map<Monomial, BigRational, GrlexGreater> acc;
        for (const auto& s : a.terms_) {
            for (const auto& t : b.terms_) {
                Monomial m = s.monomial * t.monomial;
                auto [it, inserted] = acc.try_emplace(std::move(m), s.coeff * t.coeff);
                if (!inserted) it->second += s.coeff * t.coeff;
            }
        }
        Polynomial p;
        p.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (c != 0) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    Polynomial scaled(const BigRational& c) const {
        if (c == 0) return {};
        Polynomial p = *this;
        for (auto& t : p.terms_) t.coeff *= c;
        return p;
    }

    Polynomial times_monomial(const Monomial& m, const BigRational& c) const {
        if (c == 0) return {};
        Polynomial p;
        p.terms_.reserve(terms_.size());
        for (const auto& t : terms_) p.terms_.push_back({t.monomial * m, t.coeff * c});
        return p;  // multiplying by a monomial preserves the order
    }

    Polynomial pow(unsigned e) const {
        Polynomial result(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Formal partial derivative.
    Polynomial derivative(const Variable& v) const {
        std::vector<Term> out;
        for (const auto& t : terms_) {
            int e = t.monomial.exponent(v);
            if (e == 0) continue;
            out.push_back({t.monomial.lowered(v), t.coeff * e});
        }
        return from_terms(std::move(out));
    }

    /// Substitutes rational values for some variables; others persist.
    Polynomial evaluate_partial(const std::map<Variable, BigRational>& values) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) {
            BigRational c = t.coeff;
            std::vector<Monomial::Factor> kept;
            for (const auto& [v, e] : t.monomial.factors()) {
                auto it = values.find(v);
                if (it == values.end()) {
                    kept.emplace_back(v, e);
                } else {
                    BigRational p = 1;
                    for (int n = 0; n < e; ++n) p *= it->second;
                    c *= p;
                }
            }
            if (c != 0) out.push_back({Monomial::from_factors(std::move(kept)), c});
        }
        return from_terms(std::move(out));
    }

    /// Full evaluation; every variable must be bound.
    BigRational evaluate(const std::map<Variable, BigRational>& values) const {
        Polynomial p = evaluate_partial(values);
        if (!p.is_constant()) throw Error("evaluate: unbound variable " + p.variables().begin()->name());
        return p.constant_value();
    }

    /// Positive rational c with (*this / c) having coprime integer coefficients.
    BigRational content() const {
        if (is_zero()) return 1;
        BigInt g = 0, l = 1;
        for (const auto& t : terms_) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
        }
        return make_rational(abs(g), l);
    }

    /// Integer primitive part with positive leading coefficient, and the
    /// rational unit u with *this == u * primitive.
    std::pair<Polynomial, BigRational> primitive_part() const {
        if (is_zero()) return {Polynomial{}, BigRational(1)};
        BigRational c = content();
        if (leading_coeff() < 0) c = -c;
        BigRational inv = 1 / c;
        return {scaled(inv), c};
    }

    /// Exact quotient a / b when b divides a, otherwise nullopt.
    friend std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw Error("division by the zero polynomial");
        if (a.is_zero()) return Polynomial{};
        if (b.is_constant()) return a.scaled(1 / b.leading_coeff());
        const Term& lead = b.leading_term();
        if (a.total_degree() < b.total_degree()) return std::nullopt;
        std::vector<Term> quotient;
        Polynomial r = a;
        while (!r.is_zero()) {
            const Term& rt = r.leading_term();
            // A non-divisible leading term would stay in the remainder forever.
            if (!lead.monomial.divides(rt.monomial)) return std::nullopt;
            Monomial qm = lead.monomial.quotient_of(rt.monomial);
            BigRational qc = rt.coeff / lead.coeff;
            r -= b.times_monomial(qm, qc);
            quotient.push_back({std::move(qm), std::move(qc)});
        }
        return from_terms(std::move(quotient));
    }

    /// Groups terms by their restriction to the variables accepted by `outer`.
    /// Returns outer-monomial -> coefficient polynomial in the other variables.
    template <class Pred>
    std::map<Monomial, Polynomial, GrlexGreater> collect(Pred outer) const {
        std::map<Monomial, std::vector<Term>, GrlexGreater> groups;
        for (const auto& t : terms_) {
            Monomial o = t.monomial.restricted(outer);
            Monomial in = t.monomial.restricted([&](const Variable& v) { return !outer(v); });
            groups[o].push_back({std::move(in), t.coeff});
        }
        std::map<Monomial, Polynomial, GrlexGreater> out;
        for (auto& [m, ts] : groups) out.emplace(m, from_terms(std::move(ts)));
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            BigRational c = t.coeff;
            if (first) {
                if (c < 0) {
                    s += "-";
                    c = -c;
                }
            } else {
                s += (c < 0) ? " - " : " + ";
                if (c < 0) c = -c;
            }
            first = false;
            if (t.monomial.is_one()) {
                s += nschur::to_string(c);
            } else if (c == 1) {
                s += t.monomial.to_string();
            } else {
                s += nschur::to_string(c) + "*" + t.monomial.to_string();
            }
        }
        return s;
    }

private:
    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return grlex(a.monomial, b.monomial) > 0; });
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().monomial == t.monomial)
                merged.back().coeff += t.coeff;
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
        terms_ = std::move(merged);
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        Polynomial p;
        p.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto i = a.terms_.begin(), j = b.terms_.begin();
        while (i != a.terms_.end() || j != b.terms_.end()) {
            std::strong_ordering c = std::strong_ordering::equal;
            if (i == a.terms_.end())
                c = std::strong_ordering::less;
            else if (j == b.terms_.end())
                c = std::strong_ordering::greater;
            else
                c = grlex(i->monomial, j->monomial);
            if (c > 0) {
                p.terms_.push_back(*i++);
            } else if (c < 0) {
                p.terms_.push_back({j->monomial, subtract ? BigRational(-j->coeff) : j->coeff});
                ++j;
            } else {
                BigRational s = subtract ? BigRational(i->coeff - j->coeff) : BigRational(i->coeff + j->coeff);
                if (s != 0) p.terms_.push_back({i->monomial, std::move(s)});
                ++i;
                ++j;
            }
        }
        return p;
    }

    std::vector<Term> terms_;
};

inline Polynomial var(const Variable& v) { return Polynomial::variable(v); }

}  // namespace nschur
