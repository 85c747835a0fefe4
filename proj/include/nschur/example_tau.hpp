#pragma once

#include <array>
#include "nschur/airy.hpp"

namespace nschur {

/// The seven closed-form tau-functions tau_0..tau_6 of the Airy example in
/// (x, y, t), with theta = 2^{1/3} x / (1+3t)^{1/3}. The KP solutions are
/// u_i = 2 (log tau_0 tau_i)_xx.
inline std::array<Real, 7> example_taus(Real x, Real y, Real t) {
    using namespace airy_constants;
    if (1 + 3 * t <= 0) throw DomainExceeded("example requires 1 + 3t > 0");
    const Real c = rcbrt(1 + 3 * t);
    const Real th = rcbrt(Real(2)) * x / c;
    const AiryValues A = airy(th);
    const Real ai2 = A.ai * A.ai, bi2 = A.bi * A.bi, aib = A.ai * A.bi;
    const Real aip2 = A.aip * A.aip, bip2 = A.bip * A.bip, aibp = A.aip * A.bip;
    const Real r2 = rcbrt(Real(2)), r4 = rcbrt(Real(4));
    const Real g1 = gamma_1_3, g2 = gamma_2_3;

    std::array<Real, 7> tau{};
    tau[0] = rexp(-x * x * x / (6 * (1 + 3 * t)));
    tau[1] = 1;
    const Real pre = c * g1 * g2 / rpow(Real(4), Real(4) / 3);
    const Real core = -r2 * x * (3 * ai2 - bi2) + c * (3 * aip2 - bip2);
    tau[2] = y + pre * core;
    const Real c3 = rcbrt(3 + 9 * t);
    tau[3] = c3 * g2 * g2 / 8 *
             (-6 * x * ai2 - 4 * sqrt3 * x * aib - 2 * x * bi2 + r4 * c * (3 * aip2 + 2 * sqrt3 * aibp + bip2));
    tau[4] = -Real(1) / 2 + c * g1 * g1 / (8 * rpow(Real(3), Real(5) / 6)) *
                              (-3 * r2 * sqrt3 * x * ai2 + 6 * r2 * x * aib - r2 * sqrt3 * x * bi2 +
                               c * (3 * sqrt3 * aip2 - 6 * aibp + sqrt3 * bip2));
    tau[5] = -y + pre * core;
    tau[6] = -x * (1 + 3 * t) / 2 + y * y +
             c3 * g2 * g2 / 16 * (6 * x * ai2 + 4 * sqrt3 * x * aib + 2 * x * bi2 - r4 * c * (3 * aip2 + 2 * sqrt3 * aibp + bip2));
    return tau;
}

inline Real example_tau(int i, Real x, Real y, Real t) {
    if (i < 0 || i > 6) throw InvalidRange("tau index must be 0..6");
    return example_taus(x, y, t)[static_cast<std::size_t>(i)];
}

}  // namespace nschur
