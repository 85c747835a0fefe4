#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nschur/polynomial.hpp"

namespace nschur {

/// Quotient of two polynomials.
///
/// The denominator is kept as a product of powers of primitive factors
/// (integer coefficients, positive leading coefficient); all rational
/// constants live in the numerator. No polynomial gcd is ever computed:
/// after each operation a factor is cancelled only when it divides the
/// numerator exactly. Equality is decided by cross-multiplication.
class RationalFunction {
public:
    struct Factor {
        Polynomial base;
        int exponent = 0;
    };

    RationalFunction() = default;
    RationalFunction(Polynomial num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const BigRational& c) : num_(c) {}         // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : num_(c) {}                       // NOLINT(google-explicit-constructor)
    RationalFunction(int c) : num_(c) {}                        // NOLINT(google-explicit-constructor)

    RationalFunction(Polynomial num, const Polynomial& den, int power = 1) : num_(std::move(num)) {
        if (den.is_zero()) throw Error("rational function with zero denominator");
        if (power < 0) throw Error("negative denominator power");
        auto [prim, unit] = den.primitive_part();
        BigRational scale = 1;
        for (int n = 0; n < power; ++n) scale *= unit;
        num_ = num_.scaled(1 / scale);
        if (!prim.is_constant() && power > 0 && !num_.is_zero()) factors_.push_back({prim, power});
        cancel();
    }

    const Polynomial& numerator() const { return num_; }
    const std::vector<Factor>& denominator_factors() const { return factors_; }

    /// The denominator multiplied out; its leading coefficient is positive.
    Polynomial denominator() const {
        Polynomial d(1);
        for (const auto& f : factors_) d *= f.base.pow(static_cast<unsigned>(f.exponent));
        return d;
    }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return factors_.empty(); }
    bool is_constant() const { return factors_.empty() && num_.is_constant(); }
    BigRational constant_value() const {
        if (!is_constant()) throw Error("rational function is not constant");
        return num_.constant_value();
    }
    /// Numerator when the denominator is 1.
    const Polynomial& as_polynomial() const {
        if (!is_polynomial()) throw Error("rational function is not a polynomial");
        return num_;
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return combine(a, b, false);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return combine(a, b, true);
    }

    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return {};
        RationalFunction r;
        r.num_ = a.num_ * b.num_;
        r.factors_ = a.factors_;
        for (const auto& f : b.factors_) r.add_factor(f.base, f.exponent);
        r.cancel();
        return r;
    }

    RationalFunction inverse() const {
        if (is_zero()) throw Error("inverse of zero rational function");
        RationalFunction r(denominator());
        auto [prim, unit] = num_.primitive_part();
        r.num_ = r.num_.scaled(1 / unit);
        if (!prim.is_constant()) r.factors_.push_back({prim, 1});
        r.cancel();
        return r;
    }

    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw Error("division by zero rational function");
        if (b.is_constant()) return a.scaled(1 / b.constant_value());
        return a * b.inverse();
    }

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

    RationalFunction scaled(const BigRational& c) const {
        if (c == 0) return {};
        RationalFunction r = *this;
        r.num_ = r.num_.scaled(c);
        return r;
    }

    RationalFunction pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction r = *this;
        r.num_ = num_.pow(static_cast<unsigned>(e));
        for (auto& f : r.factors_) f.exponent *= e;
        if (e == 0) r.factors_.clear();
        return r;
    }

    /// Partial derivative; the quotient rule applied factor by factor so the
    /// denominator only gains one power of each existing factor.
    RationalFunction derivative(const Variable& v) const {
        if (factors_.empty()) return RationalFunction(num_.derivative(v));
        // d(n / prod f_i^e_i) = (n' prod f_i - n sum e_i f_i' prod_{j!=i} f_j) / prod f_i^(e_i+1)
        Polynomial all(1);
        for (const auto& f : factors_) all *= f.base;
        Polynomial top = num_.derivative(v) * all;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            Polynomial df = factors_[i].base.derivative(v);
            if (df.is_zero()) continue;
            Polynomial others(factors_[i].exponent);
            for (std::size_t j = 0; j < factors_.size(); ++j)
                if (j != i) others *= factors_[j].base;
            top -= num_ * df * others;
        }
        RationalFunction r;
        r.num_ = std::move(top);
        if (r.num_.is_zero()) return r;
        r.factors_ = factors_;
        for (auto& f : r.factors_) ++f.exponent;
        r.cancel();
        return r;
    }

    /// Exact rational value at a point where the denominator does not vanish.
    BigRational evaluate(const std::map<Variable, BigRational>& values) const {
        BigRational d = denominator().evaluate(values);
        if (d == 0) throw DegenerateSubstitution("denominator vanishes at evaluation point");
        return num_.evaluate(values) / d;
    }

    std::string to_string() const {
        if (factors_.empty()) return num_.to_string();
        std::string den;
        for (const auto& f : factors_) {
            if (!den.empty()) den += "*";
            den += "(" + f.base.to_string() + ")";
            if (f.exponent != 1) den += "^" + std::to_string(f.exponent);
        }
        return "(" + num_.to_string() + ")/" + (factors_.size() == 1 && factors_[0].exponent == 1
                                                     ? "(" + factors_[0].base.to_string() + ")"
                                                     : "(" + den + ")");
    }

private:
    void add_factor(const Polynomial& base, int exponent) {
        for (auto& f : factors_) {
            if (f.base == base) {
                f.exponent += exponent;
                return;
            }
        }
        factors_.push_back({base, exponent});
    }

    void cancel() {
        if (num_.is_zero()) {
            factors_.clear();
            return;
        }
        for (auto& f : factors_) {
            while (f.exponent > 0) {
                auto q = divide_exact(num_, f.base);
                if (!q) break;
                num_ = std::move(*q);
                --f.exponent;
            }
        }
        std::erase_if(factors_, [](const Factor& f) { return f.exponent == 0; });
    }

    static RationalFunction combine(const RationalFunction& a, const RationalFunction& b, bool subtract) {
        if (a.factors_.empty() && b.factors_.empty()) {
            return RationalFunction(subtract ? a.num_ - b.num_ : a.num_ + b.num_);
        }
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        // Common denominator: the maximum power of every distinct factor.
        std::vector<Factor> common = a.factors_;
        for (const auto& f : b.factors_) {
            bool found = false;
            for (auto& c : common) {
                if (c.base == f.base) {
                    c.exponent = std::max(c.exponent, f.exponent);
                    found = true;
                }
            }
            if (!found) common.push_back(f);
        }
        auto lift = [&](const RationalFunction& r) {
            Polynomial n = r.num_;
            for (const auto& c : common) {
                int have = 0;
                for (const auto& f : r.factors_)
                    if (f.base == c.base) have = f.exponent;
                if (c.exponent > have) n *= c.base.pow(static_cast<unsigned>(c.exponent - have));
            }
            return n;
        };
        RationalFunction r;
        r.num_ = subtract ? lift(a) - lift(b) : lift(a) + lift(b);
        r.factors_ = std::move(common);
        r.cancel();
        return r;
    }

    Polynomial num_;
    std::vector<Factor> factors_;
};

/// a == b iff num(a) * den(b) - num(b) * den(a) is the zero polynomial.
inline bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    return (a.numerator() * b.denominator() - b.numerator() * a.denominator()).is_zero();
}

inline bool operator==(const RationalFunction& a, const RationalFunction& b) { return rf_equal(a, b); }

/// Simultaneous substitution of variables by rational functions; unbound
/// variables persist.
inline RationalFunction substitute(const Polynomial& p, const std::map<Variable, RationalFunction>& bindings) {
    if (bindings.empty()) return RationalFunction(p);
    // Powers of each bound variable are cached per call.
    std::map<std::pair<Variable, int>, RationalFunction> powers;
    auto power_of = [&](const Variable& v, int e) -> const RationalFunction& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        return powers.emplace(key, bindings.at(v).pow(e)).first->second;
    };
    RationalFunction result;
    // Collect unbound-only parts into one polynomial accumulator per bound monomial.
    std::map<Monomial, Polynomial, GrlexGreater> grouped =
        p.collect([&](const Variable& v) { return bindings.count(v) > 0; });
    for (const auto& [bound, rest] : grouped) {
        RationalFunction term(rest);
        for (const auto& [v, e] : bound.factors()) term *= power_of(v, e);
        result += term;
    }
    return result;
}

inline RationalFunction substitute(const RationalFunction& r, const std::map<Variable, RationalFunction>& bindings) {
    RationalFunction num = substitute(r.numerator(), bindings);
    RationalFunction den = substitute(r.denominator(), bindings);
    if (den.is_zero()) throw DegenerateSubstitution("denominator vanishes identically after substitution");
    return num / den;
}

}  // namespace nschur
