#include <gtest/gtest.h>

#include "nschur/psido.hpp"
#include "test_support.hpp"

using namespace nschur;
using namespace nschur::testing;

namespace {

PsiDO D(int a = 1, int depth = PsiDO::kExact) { return PsiDO::d(a, depth); }
PsiDO F(const char* f, int depth = PsiDO::kExact) { return PsiDO::function(R(f), depth); }
PsiDO M(int a, const char* f, int depth = PsiDO::kExact) { return PsiDO::monomial(a, R(f), depth); }

PsiDO kdv_operator() { return parse_psido("2:1;0:-2*x/(3*t+1)"); }

TEST(Compose, DerivativeThroughFunction) { EXPECT_EQ(compose(D(), F("x")), M(1, "x") + F("1")); }

TEST(Compose, InverseThroughFunction) {
    const int depth = 5;
    PsiDO got = compose(D(-1, depth), F("x^3 + x*t"));
    PsiDO expected = M(-1, "x^3 + x*t") - M(-2, "3*x^2 + t") + M(-3, "6*x") - M(-4, "6");
    EXPECT_EQ(got, expected);
    EXPECT_EQ(got.depth(), depth);
}

TEST(Compose, ConstantCoefficientsCancel) {
    EXPECT_EQ(compose(D(2), D(-2, 4)), F("1"));
    EXPECT_EQ(compose(D(1), D(-1, 4)), F("1"));
    EXPECT_EQ(compose(D(-1, 4), D(1)), F("1"));
}

TEST(Compose, DepthTracksOrder) {
    PsiDO a = M(-1, "x", 4);
    EXPECT_EQ(compose(a, D(2)).depth(), 2);
    EXPECT_EQ(compose(D(2), a).depth(), 2);
    EXPECT_EQ(compose(a, a).depth(), 4);
}

TEST(Parts, Examples) {
    EXPECT_EQ(plus_part(D() + M(-1, "x")), D());
    PsiDO a = M(3, "x^2") + F("5");
    EXPECT_EQ(plus_part(a), a);
    EXPECT_TRUE(plus_part(D(-1, 4)).is_zero());
    PsiDO b = M(2, "x") + M(-2, "t", 5) + F("y");
    EXPECT_EQ(plus_part(b) + minus_part(b), b);
}

TEST(Commutator, Examples) {
    EXPECT_EQ(commutator(D(), F("x")), F("1"));
    PsiDO a = M(2, "x*t") + M(-1, "x", 5);
    EXPECT_TRUE(commutator(a, a).is_zero());
    EXPECT_EQ(commutator(D(2), F("x")), M(1, "2"));
}

TEST(Binomial, RecurrenceAndDirectExpansion) {
    for (int a = -3; a <= 3; ++a) {
        EXPECT_EQ(leibniz_binomial(a, 0), 1);
        for (int i = 1; i <= 6; ++i) EXPECT_EQ(leibniz_binomial(a, i), leibniz_binomial(a, i - 1) * (a - i + 1) / i);
    }
    // For a >= 0, d^a o f by repeated d o f agrees with the one-shot rule.
    for (int a = 0; a <= 3; ++a) {
        PsiDO step = F("x^4*t");
        for (int k = 0; k < a; ++k) step = compose(D(), step);
        EXPECT_EQ(step, compose(D(a), F("x^4*t")));
    }
    // For a < 0, d^{-1} repeated matches d^a directly.
    for (int a = -3; a <= -1; ++a) {
        PsiDO step = F("x^4*t");
        for (int k = 0; k < -a; ++k) step = compose(D(-1, 8), step);
        EXPECT_EQ(step.truncated(6), compose(D(a, 8), F("x^4*t")).truncated(6));
    }
}

PsiDO random_operator(Random& rnd, int order, int depth) {
    PsiDO p(depth);
    for (int e = order; e >= -3; --e) p.add(e, RationalFunction(rnd.polynomial({Variable::x(), Variable::t()}, 2, 2)));
    return p;
}

TEST(ComposeProperties, Associativity) {
    Random rnd(8080);
    for (int trial = 0; trial < 10; ++trial) {
        PsiDO a = random_operator(rnd, 1, 6), b = random_operator(rnd, 0, 6), c = random_operator(rnd, 1, 6);
        PsiDO left = compose(compose(a, b), c), right = compose(a, compose(b, c));
        const int depth = std::min(left.depth(), right.depth());
        EXPECT_EQ(left.truncated(depth), right.truncated(depth));
    }
}

TEST(NthRoot, Examples) {
    EXPECT_EQ(nth_root(D(2), 4), D(1, 4));
    PsiDO L = kdv_operator();
    PsiDO root = nth_root(L, 5);
    EXPECT_TRUE(root.coeff(0).is_zero());
    EXPECT_TRUE(rf_equal(root.coeff(-1), R("-x/(3*t+1)")));
    EXPECT_EQ(power(nth_root(L, 4 + 1), 2).truncated(4), L.truncated(4));
    PsiDO first = D() + M(-1, "x*t", 6);
    EXPECT_EQ(nth_root(first, 6), first);
}

TEST(NthRoot, Errors) {
    EXPECT_THROW(nth_root(M(2, "2")), NonMonic);
    EXPECT_THROW(nth_root(M(2, "x")), NonMonic);
    EXPECT_THROW(nth_root(F("1")), NonMonic);
}

TEST(NthRootProperties, PowerRoundTrip) {
    Random rnd(1234);
    const int depth = 4;
    for (int trial = 0; trial < 20; ++trial) {
        const int N = 2 + trial % 2;
        PsiDO L = D(N);
        for (int e = N - 2; e >= 0; --e) L.add(e, RationalFunction(rnd.polynomial({Variable::x(), Variable::t()}, 2, 2)));
        PsiDO root = nth_root(L, depth + N - 1);
        EXPECT_EQ(power(root, N).truncated(depth), L.truncated(depth)) << L.to_string();
    }
}

TEST(Lax, StationaryAndKdvFlows) {
    PsiDO L = kdv_operator();
    EXPECT_TRUE(lax_residual(L, 2).is_zero());
    EXPECT_TRUE(lax_residual(L, 3).is_zero());
    EXPECT_TRUE(lax_residual(L, 1).is_zero());
    EXPECT_FALSE(lax_residual(L, 3, -kDefaultBracketSign).is_zero());
    for (int i = 1; i <= 4; ++i) EXPECT_TRUE(lax_residual(D(2), i).is_zero());
}

TEST(Lax, KdvEquationByHand) {
    // q_t = (6 q q_x + q_xxx) / 4 for q = -2x/(3t+1).
    RationalFunction q = R("-2*x/(3*t+1)");
    const Variable x = Variable::x();
    RationalFunction rhs = (RationalFunction(6) * q * q.derivative(x) + q.derivative(x).derivative(x).derivative(x)).scaled(make_rational(1, 4));
    EXPECT_TRUE(rf_equal(q.derivative(Variable::t()), rhs));
    EXPECT_TRUE(rf_equal(rhs, R("6*x/(3*t+1)^2")));
}

TEST(PsiDOIo, JsonAndLiteral) {
    PsiDO L = kdv_operator();
    EXPECT_EQ(psido_from_json(json::parse(to_json(L).dump())), L);
    PsiDO t = M(-2, "x/(t+1)", 5) + D();
    PsiDO back = psido_from_json(json::parse(to_json(t).dump()));
    EXPECT_EQ(back, t);
    EXPECT_EQ(back.depth(), 5);
    EXPECT_THROW(parse_psido("2"), ParseError);
    EXPECT_THROW(parse_psido("q:1"), ParseError);
    EXPECT_EQ(L.to_string(), "D^2 + ((-2*x)/(3*t + 1))");
}

}  // namespace
