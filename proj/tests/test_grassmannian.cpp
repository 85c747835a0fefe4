#include <gtest/gtest.h>

#include "nschur/random.hpp"
#include "test_support.hpp"

using namespace nschur;
using namespace nschur::testing;

namespace {

using nschur::nschur;

Matrix<BigRational> random_matrix(Random& rnd, int k, int n) {
    Matrix<BigRational> A = zero_matrix<BigRational>(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (auto& row : A)
        for (auto& e : row) e = rnd.rational();
    return A;
}

TEST(Minors, Examples) {
    Matrix<BigRational> A{{1, 0, 0, 0}, {0, 1, 0, 0}};
    auto v = minors(A);
    EXPECT_EQ(v.at({1, 2}), 1);
    for (const auto& [s, c] : v.coords)
        if (s != Subset{1, 2}) {
            EXPECT_EQ(c, 0);
        }

    Matrix<BigRational> B{{1, 0, 1, 0}, {0, 1, 0, 1}};
    auto w = minors(B);
    for (const auto& [s, c] : w.coords) {
        std::vector<std::vector<BigRational>> sub{{B[0][s[0] - 1], B[0][s[1] - 1]}, {B[1][s[0] - 1], B[1][s[1] - 1]}};
        EXPECT_EQ(c, cofactor_det(sub));
    }
    EXPECT_EQ(w.at({1, 2}), 1);
    EXPECT_EQ(w.at({1, 3}), 0);
    EXPECT_EQ(w.at({1, 4}), 1);

    Matrix<BigRational> C{{1, 2, 3, 4}, {2, 4, 6, 8}};
    EXPECT_THROW(minors(C), RankDeficient);
}

TEST(ExchangeRelations, Gr24) {
    auto rels = exchange_relations(2, 4);
    ASSERT_EQ(rels.size(), 1u);
    QuadraticRelation expected;
    expected.add({1, 2}, {3, 4}, 1);
    expected.add({1, 3}, {2, 4}, -1);
    expected.add({1, 4}, {2, 3}, 1);
    EXPECT_EQ(rels[0], expected);
    EXPECT_EQ(rels[0].to_string(), "p12*p34 - p13*p24 + p14*p23");
}

TEST(ExchangeRelations, ProjectiveSpaceHasNone) {
    for (int n = 2; n <= 6; ++n) EXPECT_TRUE(exchange_relations(1, n).empty());
    EXPECT_THROW(exchange_relations(3, 3), InvalidRange);
}

TEST(ExchangeRelations, Gr25) {
    auto rels = exchange_relations(2, 5);
    EXPECT_EQ(rels.size(), 5u);
    EXPECT_EQ(relation_rank(rels), 5);
    for (const auto& r : rels) EXPECT_EQ(r.terms.size(), 3u);
}

TEST(ExchangeRelations, AnnihilateMinors) {
    Random rnd(2718);
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            auto rels = exchange_relations(k, n);
            for (int trial = 0; trial < 25; ++trial) {
                PluckerVector<BigRational> v;
                try {
                    v = minors(random_matrix(rnd, k, n));
                } catch (const RankDeficient&) {
                    continue;
                }
                for (const auto& r : rels) EXPECT_EQ(r.evaluate(v.coords), 0) << k << "," << n << ": " << r.to_string();
            }
        }
}

TEST(PluckerCheck, Examples) {
    Random rnd(1);
    EXPECT_TRUE(plucker_check(minors(random_matrix(rnd, 2, 4))));
    EXPECT_TRUE(plucker_check(minors(random_matrix(rnd, 3, 6))));
    PluckerVector<BigRational> bad{2, 4, {{{1, 2}, 1}, {{3, 4}, 1}}};
    EXPECT_FALSE(plucker_check(bad));
    PluckerVector<BigRational> single{2, 4, {{{2, 4}, 5}}};
    EXPECT_TRUE(plucker_check(single));
}

TEST(PluckerJson, RoundTrip) {
    Random rnd(3);
    auto v = minors(random_matrix(rnd, 2, 5));
    auto back = plucker_from_json(json::parse(to_json(v).dump()));
    EXPECT_EQ(back.coords, v.coords);
    EXPECT_THROW(plucker_from_json(json::parse(R"({"k":2,"n":4,"coords":[{"subset":[2,1],"value":"1"}]})")), ParseError);
}

TEST(Frame, StandardCoordinates) {
    FiniteFrame W = FiniteFrame::standard(2);
    EXPECT_EQ(plucker_coord(W, VirtualSequence::vacuum()), 1);
    for (const auto& s : enumerate_by_weight(4))
        if (!s.is_vacuum()) {
            EXPECT_EQ(plucker_coord(W, s), 0);
        }
}

TEST(Frame, SequenceFramesAreDeltas) {
    auto pool = enumerate_by_weight(4);
    for (const auto& s : pool) {
        FiniteFrame W = FiniteFrame::of_sequence(s, 1);
        for (const auto& t : pool) EXPECT_EQ(plucker_coord(W, t), s == t ? 1 : 0) << s.to_string() << " / " << t.to_string();
    }
}

TEST(Frame, LabelsMatchMinors) {
    Random rnd(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int k = rnd.integer(1, 3), n = k + rnd.integer(1, 3);
        Matrix<BigRational> A = random_matrix(rnd, k, n);
        PluckerVector<BigRational> v;
        try {
            v = minors(A);
        } catch (const RankDeficient&) {
            continue;
        }
        FiniteFrame W = FiniteFrame::from_coefficient_matrix(A, 1);
        for (const auto& s : enumerate_Skn(k, n)) EXPECT_EQ(plucker_coord(W, s), v.at(subset_label(s, k, n)));
    }
}

TEST(Frame, RejectsDependentColumns) {
    Matrix<BigRational> A{{1, 2}, {1, 2}, {0, 0}};
    EXPECT_THROW(FiniteFrame(1, 2, 1, A), RankDeficient);
    EXPECT_THROW(FiniteFrame(1, 2, 2, A), InvalidRange);
}

TEST(Frame, JsonRoundTrip) {
    InstanceRng rng(5);
    FiniteFrame W = rng.frame(2, 3, 2);
    FiniteFrame back = FiniteFrame::from_json(json::parse(W.to_json().dump()));
    EXPECT_EQ(back.coefficients(), W.coefficients());
    EXPECT_THROW(FiniteFrame::from_json(json::parse(R"({"N":1,"r":1,"d":0,"columns":[[[-1,"1"]]]})")), InvalidRange);
}

TEST(Theorem1, StandardFrame) {
    InstanceRng rng(8);
    for (int N = 1; N <= 3; ++N) {
        GOperator g(rng.assigned_model(N, 2));
        auto rep = theorem1_check(g, FiniteFrame::standard(N));
        EXPECT_TRUE(rf_equal(rep.lhs, RationalFunction(1)));
        EXPECT_TRUE(rep.equal);
    }
}

TEST(Theorem1, SequenceFramesGiveNSchur) {
    for (int N = 1; N <= 2; ++N) {
        InstanceRng rng(100 + static_cast<std::uint64_t>(N));
        GOperator g(rng.assigned_model(N, 3));
        for (const auto& s : enumerate_by_weight(4)) {
            FiniteFrame W = FiniteFrame::of_sequence(s, N);
            auto lhs = expansion_lhs(g, W);
            EXPECT_TRUE(rf_equal(lhs.value, nschur(s, g.model()))) << s.to_string() << " N=" << N;
            EXPECT_TRUE(theorem1_check(g, W).equal);
        }
    }
}

TEST(Theorem1, RandomInstances) {
    for (std::uint64_t i = 0; i < 50; ++i) {
        InstanceRng rng(instance_seed(20240917, i));
        const int N = rng.integer(1, 3), K = rng.integer(0, 2), r = rng.integer(0, 3), d = rng.integer(0, 2 * N);
        GOperator g(rng.assigned_model(N, K));
        FiniteFrame W = rng.frame(N, r, d);
        auto rep = theorem1_check(g, W);
        EXPECT_TRUE(rep.equal) << "instance " << i;
        // Larger truncation changes nothing.
        auto wider = expansion_lhs(g, W, rep.M_used + N);
        EXPECT_TRUE(rf_equal(wider.value, rep.lhs)) << "instance " << i;
    }
}

TEST(Theorem1, ProjectiveInvariance) {
    InstanceRng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const int N = rng.integer(1, 2);
        GOperator g(rng.assigned_model(N, 2));
        FiniteFrame W = rng.frame(N, 2, N);
        BigRational c = make_rational(-3, 2);
        FiniteFrame V = W.with_column_scaled(1, c);
        auto a = theorem1_check(g, W), b = theorem1_check(g, V);
        EXPECT_TRUE(rf_equal(b.lhs, a.lhs.scaled(c)));
        EXPECT_TRUE(a.equal && b.equal);
        for (const auto& s : frame_support(W)) EXPECT_EQ(plucker_coord(V, s), c * plucker_coord(W, s));
    }
}

TEST(Theorem1, Symbolic) {
    // Formal h symbols truncated at K = 1.
    for (int N = 1; N <= 2; ++N) {
        GOperator g(HModel::formal(N, 1));
        Matrix<BigRational> A{{1, 0}, {2, 1}, {0, 3}};
        FiniteFrame W(N, 2, 1, A);
        auto rep = theorem1_check(g, W);
        EXPECT_TRUE(rep.equal) << "N=" << N;
        EXPECT_FALSE(rep.lhs.is_constant());
    }
}

TEST(Theorem1, ReportJson) {
    InstanceRng rng(9);
    GOperator g(rng.assigned_model(1, 1));
    auto rep = theorem1_check(g, FiniteFrame::of_sequence(VirtualSequence({-1}), 1));
    json j = rep.to_json();
    EXPECT_TRUE(j.at("equal").get<bool>());
    EXPECT_EQ(j.at("support").size(), 1u);
    EXPECT_GE(j.at("M_used").get<int>(), 1);
}

TEST(GOperatorTest, NeedsFiniteSupport) {
    EXPECT_THROW(GOperator(HModel::formal(2)), InvalidRange);
    std::map<HModel::Key, RationalFunction> singular{{{1, 1, 0}, 0}, {{1, 1, 1}, 1}};
    GOperator g(HModel::assigned(1, singular));
    EXPECT_THROW(expansion_lhs(g, FiniteFrame::standard(1)), SingularH0);
}

}  // namespace
