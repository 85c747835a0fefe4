#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "nschur/errors.hpp"

namespace nschur {

// GMP keeps mpq_class canonical after every arithmetic operation; the only
// entry points that can produce a non-reduced value are the string and
// (num, den) constructors, which are wrapped below.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ParseError("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

/// Parses "p" or "p/q" with decimal integers.
inline BigRational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + s + "'");
    }
}

/// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const BigRational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sign(const BigRational& q) { return sgn(q); }

}  // namespace nschur
