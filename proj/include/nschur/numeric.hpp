#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "nschur/example_tau.hpp"

namespace nschur {

struct Point3 {
    Real x = 0, y = 0, t = 0;
};

using Field = std::function<Real(Real, Real, Real)>;

/// Base step of the difference stencils (unit scale). With two Richardson
/// halvings the truncation error is O(h^6); binary128 rounding in a sixth
/// difference at h/4 stays near 1e-13.
inline const Real kDefaultStep = Real(1) / 256;

/// Mixed central difference of order (a, b, c) in (x, y, t) with step h; the
/// n-th difference uses nodes (n/2 - k) h with weights (-1)^k C(n, k).
inline Real central_partial(const Field& f, Point3 p, std::array<int, 3> ord, Real h) {
    std::array<std::vector<std::pair<Real, Real>>, 3> st;  // (offset, weight) per axis
    for (int axis = 0; axis < 3; ++axis) {
        const int n = ord[static_cast<std::size_t>(axis)];
        Real binom = 1;
        for (int k = 0; k <= n; ++k) {
            Real w = (k % 2 ? -binom : binom) / rpow(h, n);
            st[static_cast<std::size_t>(axis)].emplace_back((Real(n) / 2 - k) * h, w);
            binom = binom * (n - k) / (k + 1);
        }
    }
    Real sum = 0;
    for (const auto& [ox, wx] : st[0])
        for (const auto& [oy, wy] : st[1])
            for (const auto& [ot, wt] : st[2]) sum += wx * wy * wt * f(p.x + ox, p.y + oy, p.t + ot);
    return sum;
}

/// Central differences at h, h/2, h/4 combined to cancel the h^2 and h^4 terms.
inline Real richardson_partial(const Field& f, Point3 p, std::array<int, 3> ord, Real h = kDefaultStep) {
    const Real d1 = central_partial(f, p, ord, h), d2 = central_partial(f, p, ord, h / 2), d4 = central_partial(f, p, ord, h / 4);
    return (64 * d4 - 20 * d2 + d1) / 45;
}

struct NumericResidual {
    Real value = 0;
    Real stability = 0;  // |value(h) - value(h/2)|
    Real step = 0;
};

namespace detail {

inline Real kp_from_log_at(const Field& F, Point3 p, Real h) {
    auto d = [&](int a, int b, int c) { return richardson_partial(F, p, {a, b, c}, h); };
    const Real Fxx = d(2, 0, 0), Fxxx = d(3, 0, 0), Fxxxx = d(4, 0, 0), F6 = d(6, 0, 0);
    return Real(1.5) * d(2, 2, 0) - 2 * d(3, 0, 1) + 6 * (Fxxx * Fxxx + Fxx * Fxxxx) + F6 / 2;
}

inline Real kp_from_u_at(const Field& u, Point3 p, Real h) {
    auto d = [&](int a, int b, int c) { return richardson_partial(u, p, {a, b, c}, h); };
    const Real u0 = u(p.x, p.y, p.t), ux = d(1, 0, 0);
    return Real(0.75) * d(0, 2, 0) - d(1, 0, 1) + Real(1.5) * (ux * ux + u0 * d(2, 0, 0)) + d(4, 0, 0) / 4;
}

}  // namespace detail

/// KP residual of u = 2 F_xx from samples of F = log tau:
/// (3/2) F_xxyy - 2 F_xxxt + 6 (F_xxx^2 + F_xx F_xxxx) + (1/2) F_xxxxxx.
inline NumericResidual numeric_kp_from_log(const Field& F, Point3 p, Real h = kDefaultStep) {
    const Real a = detail::kp_from_log_at(F, p, h), b = detail::kp_from_log_at(F, p, h / 2);
    return {b, rabs(a - b), h};
}

/// Halves the step until the h / h/2 estimates agree to `target`; a sample
/// that never settles is treated as sitting on a singularity.
inline NumericResidual numeric_kp_from_log_adaptive(const Field& F, Point3 p, Real target = Real(1) / 100000000,
                                                    Real h = kDefaultStep, Real min_step = Real(1) / 8192) {
    Real a = detail::kp_from_log_at(F, p, h);
    for (;;) {
        const Real b = detail::kp_from_log_at(F, p, h / 2);
        if (rabs(a - b) <= target) return {b, rabs(a - b), h};
        h /= 2;
        if (h < min_step) throw PoleNearSample("no stable step near the sample point");
        a = b;
    }
}

/// KP residual (3/4) u_yy - u_xt + (3/2)(u_x^2 + u u_xx) + (1/4) u_xxxx of a sampled field.
inline NumericResidual numeric_kp_residual(const Field& u, Point3 p, Real h = kDefaultStep) {
    const Real a = detail::kp_from_u_at(u, p, h), b = detail::kp_from_u_at(u, p, h / 2);
    return {b, rabs(a - b), h};
}

/// log |tau|, refusing samples where |tau| falls below the floor.
inline Field guarded_log(std::function<Real(Real, Real, Real)> tau, Real floor) {
    return [tau = std::move(tau), floor](Real x, Real y, Real t) {
        Real v = tau(x, y, t);
        if (!(rabs(v) >= floor)) throw PoleNearSample("tau is below the floor " + real_to_string(floor, 3) + " near the sample");
        return rlog(rabs(v));
    };
}

inline const Real kDefaultPoleFloor = Real(1) / 1000;

/// log(tau_0 tau_i) of the Airy example.
inline Field example_log_tau(int i, Real floor = kDefaultPoleFloor) {
    if (i < 1 || i > 6) throw InvalidRange("solution index must be 1..6");
    return guarded_log([i](Real x, Real y, Real t) {
        auto T = example_taus(x, y, t);
        return T[0] * T[static_cast<std::size_t>(i)];
    }, floor);
}

/// u_i = 2 (log tau_0 tau_i)_xx by Richardson-extrapolated central differences.
inline Real example_u(int i, Real x, Real y, Real t, Real h = kDefaultStep, Real floor = kDefaultPoleFloor) {
    return 2 * richardson_partial(example_log_tau(i, floor), {x, y, t}, {2, 0, 0}, h);
}

}  // namespace nschur
