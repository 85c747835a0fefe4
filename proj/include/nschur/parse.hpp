#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "nschur/rational_function.hpp"

namespace nschur {

/// Recursive-descent parser for rational expressions such as
/// "-2*x/(3*t+1)", "h[1,1,2]/h[1,1,0]" or "pi[1,2]*pi[3,4] + t4^2".
///
/// Identifiers: x, y, t (= t1, t2, t3), t<i>, h[i,j,k], pi[a(,b(,c))], a<n>.
/// Integer exponents may be negative for non-zero bases.
class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : s_(text) {}

    RationalFunction parse() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    RationalFunction expr() {
        skip();
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        RationalFunction r = term();
        if (negate) r = -r;
        for (;;) {
            skip();
            if (peek('+')) {
                ++pos_;
                r += term();
            } else if (peek('-')) {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    RationalFunction term() {
        RationalFunction r = power();
        for (;;) {
            skip();
            if (peek('*')) {
                ++pos_;
                r *= power();
            } else if (peek('/')) {
                ++pos_;
                RationalFunction d = power();
                if (d.is_zero()) fail("division by zero");
                r /= d;
            } else {
                return r;
            }
        }
    }

    RationalFunction power() {
        RationalFunction base = atom();
        skip();
        if (peek('^')) {
            ++pos_;
            skip();
            bool neg = false;
            if (peek('-')) {
                ++pos_;
                neg = true;
            }
            long e = integer();
            if (neg && base.is_zero()) fail("zero to a negative power");
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }

    RationalFunction atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction r = expr();
            skip();
            expect(')');
            return r;
        }
        if (c == '-') {  // unary minus inside a factor, e.g. 2*-x
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(BigRational(integer_string()));
        if (std::isalpha(static_cast<unsigned char>(c))) return RationalFunction(var(identifier()));
        fail("unexpected '" + std::string(1, c) + "'");
    }

    Variable identifier() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        std::string name(s_.substr(start, pos_ - start));
        if (name == "h" || name == "pi") {
            std::vector<int> idx = bracket_indices();
            if (name == "h") {
                if (idx.size() != 3) fail("h needs three indices");
                return Variable::h(idx[0], idx[1], idx[2]);
            }
            if (idx.empty() || idx.size() > 3) fail("pi needs one to three indices");
            idx.resize(3, 0);
            return Variable::pi(idx[0], idx[1], idx[2]);
        }
        if (name == "x") return Variable::x();
        if (name == "y") return Variable::y();
        if (name == "t" && !(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))))
            return Variable::t();
        if ((name == "t" || name == "a") && pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            int n = static_cast<int>(integer());
            return name == "t" ? Variable::time(n) : Variable::aux(n);
        }
        fail("unknown identifier '" + name + "'");
    }

    std::vector<int> bracket_indices() {
        skip();
        expect('[');
        std::vector<int> idx;
        for (;;) {
            skip();
            bool neg = false;
            if (peek('-')) {
                ++pos_;
                neg = true;
            }
            long v = integer();
            idx.push_back(static_cast<int>(neg ? -v : v));
            skip();
            if (peek(',')) {
                ++pos_;
                continue;
            }
            expect(']');
            return idx;
        }
    }

    std::string integer_string() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::string(s_.substr(start, pos_ - start));
    }

    long integer() {
        std::string digits = integer_string();
        if (digits.size() > 9) fail("integer too large here");
        return std::stol(digits);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

inline RationalFunction parse_rational_function(std::string_view text) { return ExpressionParser(text).parse(); }

inline Polynomial parse_polynomial(std::string_view text) {
    RationalFunction r = parse_rational_function(text);
    if (!r.is_polynomial()) throw ParseError("expected a polynomial: '" + std::string(text) + "'");
    return r.numerator();
}

}  // namespace nschur
