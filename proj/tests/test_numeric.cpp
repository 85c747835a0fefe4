#include <gtest/gtest.h>

#include <random>

#include "nschur/kp.hpp"
#include "nschur/numeric.hpp"
#include "test_support.hpp"

using namespace nschur;
using namespace nschur::testing;

namespace {

TEST(Airy, ValuesAtZero) {
    auto v = airy(0);
    EXPECT_NEAR(to_double(v.ai), 0.3550280539, 1e-10);
    EXPECT_NEAR(to_double(v.aip), -0.2588194038, 1e-10);
    EXPECT_NEAR(to_double(v.bi), 0.6149266274, 1e-10);
    EXPECT_NEAR(to_double(v.bip), 0.4482883574, 1e-10);
}

TEST(Airy, TabulatedValues) {
    // Ai(1), Bi(1), Ai(-2), Bi'(-2)
    EXPECT_NEAR(to_double(airy(1).ai), 0.1352924163, 1e-10);
    EXPECT_NEAR(to_double(airy(1).bi), 1.2074235950, 1e-9);
    EXPECT_NEAR(to_double(airy(-2).ai), 0.2274074282, 1e-10);
    EXPECT_NEAR(to_double(airy(-2).bip), 0.2787951669, 1e-9);
}

TEST(Airy, Wronskian) {
    for (Real th = -5; th <= 5; th += 0.25L) {
        auto v = airy(th);
        EXPECT_NEAR(to_double(v.ai * v.bip - v.aip * v.bi), to_double(1 / airy_constants::pi), 1e-10)
            << to_double(th);
    }
}

TEST(Airy, GammaReflection) {
    using namespace airy_constants;
    EXPECT_NEAR(to_double(gamma_1_3 * gamma_2_3), to_double(2 * pi / sqrt3), 1e-15);
}

TEST(Airy, TaylorSolvesOde) {
    const Real c = 1.5L;
    auto v = airy(c);
    auto co = airy_taylor(c, v.ai, v.aip, 30);
    for (Real h : {-0.3L, 0.2L, 0.5L}) {
        Real f = 0, p = 1;
        for (Real a : co) f += a * p, p *= h;
        EXPECT_NEAR(to_double(f), to_double(airy(c + h).ai), 1e-12);
    }
    // f'' = x f coefficientwise
    for (std::size_t m = 0; m + 2 < co.size(); ++m) {
        Real lhs = (m + 1) * (m + 2) * co[m + 2];
        Real rhs = c * co[m] + (m ? co[m - 1] : 0);
        EXPECT_NEAR(to_double(lhs), to_double(rhs), 1e-9);
    }
}

TEST(Airy, DomainExceeded) {
    EXPECT_THROW(airy(8.5L), DomainExceeded);
    EXPECT_NO_THROW(airy(-8));
    EXPECT_THROW(example_taus(0, 0, -0.5L), DomainExceeded);
}

TEST(Numeric, DifferencesOfPolynomials) {
    Field f = [](Real x, Real y, Real t) { return x * x * x * x * y * y + t * x; };
    Point3 p{0.4L, -0.7L, 0.2L};
    EXPECT_NEAR(to_double(richardson_partial(f, p, {4, 0, 0})), 24 * 0.49, 1e-8);
    EXPECT_NEAR(to_double(richardson_partial(f, p, {2, 2, 0})), 24 * 0.16, 1e-8);
    EXPECT_NEAR(to_double(richardson_partial(f, p, {1, 0, 1})), 1.0, 1e-9);
    EXPECT_NEAR(to_double(richardson_partial(f, p, {6, 0, 0})), 0.0, 1e-5);
}

TEST(Numeric, KpOfSimpleFields) {
    Point3 p{0.3L, 0.1L, 0.2L};
    Field lin = [](Real x, Real, Real) { return x; };
    EXPECT_NEAR(to_double(numeric_kp_residual(lin, p).value), 1.5, 1e-8);
    Field u1 = [](Real x, Real, Real t) { return -2 * x / (3 * t + 1); };
    EXPECT_NEAR(to_double(numeric_kp_residual(u1, p).value), 0.0, 1e-7);
}

TEST(Numeric, AgreesWithExactKp) {
    // Schur tau of (2,1), and a perturbation that is not a solution.
    struct Case {
        const char* expr;
        Real (*f)(Real, Real, Real);
    };
    const Case cases[] = {
        {"x^3/3 - t", [](Real x, Real, Real t) { return x * x * x / 3 - t; }},
        {"x^3/3 - t + y^2", [](Real x, Real y, Real t) { return x * x * x / 3 - t + y * y; }},
    };
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> dist(0.5, 1.5);
    for (const auto& c : cases) {
        RationalFunction exact = kp_residual(tau_to_u(R(c.expr)));
        Field F = guarded_log(c.f, 1e-6L);
        for (int trial = 0; trial < 10; ++trial) {
            const double x = dist(gen), y = dist(gen) - 1, t = dist(gen) - 2.7;  // keeps tau above 1.2
            double want = exact
                              .evaluate({{Variable::x(), BigRational(x)},
                                         {Variable::y(), BigRational(y)},
                                         {Variable::t(), BigRational(t)}})
                              .get_d();
            auto got = numeric_kp_from_log(F, {x, y, t});
            EXPECT_NEAR(to_double(got.value), want, 1e-5 * std::max(1.0, std::fabs(want))) << c.expr;
        }
    }
}

TEST(Example, TauOneAndU1) {
    EXPECT_EQ(to_double(example_tau(1, 0.3L, 0.2L, 0.1L)), 1.0);
    const Real x = 0.7L, y = 0.3L, t = 0.1L;
    Real u = example_u(1, x, y, t);
    EXPECT_NEAR(to_double(u), to_double(-2 * x / (3 * t + 1)), 1e-6);
    EXPECT_NEAR(to_double(example_u(1, x, y, t, kDefaultStep / 2)), to_double(u), 1e-6);
}

TEST(Example, AllSixSatisfyKp) {
    const std::vector<Point3> pts{{-0.3L, 0.5L, 0.5L}, {0.3L, 1.0L, 0.5L}, {-0.4L, 0.5L, 0.2L},
                                  {1.1L, -0.2L, 0.05L}, {-1.0L, -1.0L, 0.2L}};
    for (int i = 1; i <= 6; ++i)
        for (const auto& p : pts) {
            try {
                auto r = numeric_kp_from_log(example_log_tau(i), p);
                EXPECT_LE(std::fabs(to_double(r.value)), 1e-4)
                    << "u" << i << " at " << to_double(p.x) << "," << to_double(p.y) << ","
                    << to_double(p.t);
            } catch (const PoleNearSample&) {
                ADD_FAILURE() << "pole near sample for u" << i;
            }
        }
}

TEST(Example, U6AtReferencePoint) {
    auto r = numeric_kp_from_log(example_log_tau(6), {0.5L, 0.2L, 0.0L});
    EXPECT_LE(std::fabs(to_double(r.value)), 1e-4);
}

TEST(Example, U2StableUnderHalving) {
    const Real x = -0.3L, y = 0.5L, t = 0.5L;
    Real a = example_u(2, x, y, t), b = example_u(2, x, y, t, kDefaultStep / 2);
    EXPECT_TRUE(risfinite(a));
    EXPECT_NEAR(to_double(a), to_double(b), 1e-5);
}

TEST(Example, PoleFloor) {
    // tau_0 tau_2 vanishes somewhere on the y-line; a huge floor always trips.
    EXPECT_THROW(example_log_tau(2, 1e9L)(0.1L, 0.1L, 0.1L), PoleNearSample);
    EXPECT_THROW(example_log_tau(7), InvalidRange);
}

}  // namespace
