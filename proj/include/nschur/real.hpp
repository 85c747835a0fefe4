#pragma once

#include <quadmath.h>

#include <string>

namespace nschur {

/// Floating type of the numeric layer. Sixth differences of log tau amplify
/// evaluation noise by ~h^-6; IEEE binary128 keeps that below the tolerances
/// at steps small enough to resolve the nearby zeros of tau.
using Real = __float128;

inline Real real_from_string(const std::string& s) { return strtoflt128(s.c_str(), nullptr); }

inline double to_double(Real x) { return static_cast<double>(x); }

inline std::string real_to_string(Real x, int digits = 20) {
    char buf[96];
    quadmath_snprintf(buf, sizeof buf, "%.*Qe", digits, x);
    return buf;
}

inline Real rabs(Real x) { return fabsq(x); }
inline Real rexp(Real x) { return expq(x); }
inline Real rlog(Real x) { return logq(x); }
inline Real rcbrt(Real x) { return cbrtq(x); }
inline Real rsqrt(Real x) { return sqrtq(x); }
inline Real rpow(Real x, Real y) { return powq(x, y); }
inline bool risfinite(Real x) { return finiteq(x) != 0; }

}  // namespace nschur
