#pragma once

#include <algorithm>
#include <vector>

#include "nschur/errors.hpp"
#include "nschur/real.hpp"

namespace nschur {

namespace airy_constants {
inline const Real gamma_1_3 = real_from_string("2.6789385347077476336556929409746776441");
inline const Real gamma_2_3 = real_from_string("1.3541179394264004169452880281545137855");
inline const Real pi = real_from_string("3.1415926535897932384626433832795028842");
inline const Real sqrt3 = real_from_string("1.7320508075688772935274463415058723669");
// Ai(0) = 3^{-2/3} / Gamma(2/3), Ai'(0) = -3^{-1/3} / Gamma(1/3).
inline const Real ai0 = real_from_string("0.3550280538878172392600631860041831764");
inline const Real aip0 = real_from_string("-0.25881940379280679840518356018920396348");
inline const Real bi0 = sqrt3 * ai0;
inline const Real bip0 = -sqrt3 * aip0;
}  // namespace airy_constants

struct AiryValues {
    Real ai, bi, aip, bip;
};

inline constexpr double kAirySeriesLimit = 8;

/// Ai, Bi and their derivatives from the two Maclaurin solutions of f'' = x f.
inline AiryValues airy(Real x) {
    using namespace airy_constants;
    if (!(rabs(x) <= kAirySeriesLimit)) throw DomainExceeded("Airy argument outside |x| <= 8");
    // f = sum a_n x^n with a_{n+3} = a_n / ((n+2)(n+3)); f1 starts 1, f2 starts x.
    Real f1 = 0, f2 = 0, d1 = 0, d2 = 0;
    Real a = 1, b = 1;  // coefficients of x^{3k} in f1 and x^{3k+1} in f2
    Real p = 1;         // x^{3k}
    Real q = 0;         // x^{3k-1} for k >= 1
    const Real x3 = x * x * x;
    for (int k = 0; k < 400; ++k) {
        const int n = 3 * k;
        Real t1 = a * p, t2 = b * p * x;
        f1 += t1;
        f2 += t2;
        d1 += n * a * q;
        d2 += (n + 1) * b * p;
        if (k > 4 && rabs(t1) + rabs(t2) < Real(1e-40) * (rabs(f1) + rabs(f2))) break;
        a /= static_cast<Real>((n + 2) * (n + 3));
        b /= static_cast<Real>((n + 3) * (n + 4));
        q = x * x * p;
        p *= x3;
    }
    const Real c1 = ai0, c2 = -aip0;
    return {c1 * f1 - c2 * f2, sqrt3 * (c1 * f1 + c2 * f2), c1 * d1 - c2 * d2, sqrt3 * (c1 * d1 + c2 * d2)};
}

/// Taylor coefficients of a solution of f'' = s f about `center`, given f and f' there.
inline std::vector<Real> airy_taylor(Real center, Real value, Real deriv, int order) {
    std::vector<Real> c(static_cast<std::size_t>(std::max(order, 1) + 1), 0);
    c[0] = value;
    c[1] = deriv;
    for (int m = 0; m + 2 <= order; ++m) {
        Real prev = m >= 1 ? c[static_cast<std::size_t>(m - 1)] : 0;
        c[static_cast<std::size_t>(m + 2)] = (center * c[static_cast<std::size_t>(m)] + prev) / static_cast<Real>((m + 1) * (m + 2));
    }
    c.resize(static_cast<std::size_t>(order + 1));
    return c;
}

}  // namespace nschur
