#include <gtest/gtest.h>

#include "nschur/pipeline.hpp"
#include "test_support.hpp"

using namespace nschur;
using namespace nschur::testing;

namespace {

using nschur::nschur;

// Psi^{-1} evaluated directly at z from Airy values at Theta and zeta.
std::array<std::array<Real, 2>, 2> psi_inverse_direct(Point3 p, Real z) {
    using namespace airy_constants;
    const Real c = rcbrt(1 + 3 * p.t), c6 = rsqrt(c), r2 = rcbrt(Real(2)), r4 = r2 * r2;
    const Real Th = (3 * p.t * z + 2 * p.x + z) / (r4 * c), ze = z / r4;
    const AiryValues T = airy(Th), Z = airy(ze);
    const Real phi = sqrt3 * gamma_1_3 * gamma_2_3 * rexp(-p.y * z);
    return {{{phi * (-T.aip * Z.bi + Z.ai * T.bip) / (2 * c6), phi * c6 * (-Z.ai * T.bi + T.ai * Z.bi) / (2 * r2)},
             {phi * (Z.aip * T.bip - T.aip * Z.bip) / (r4 * c6), -phi * c6 * (Z.aip * T.bi - T.ai * Z.bip) / 2}}};
}

TEST(PsiInverse, SeriesMatchesDirectEvaluation) {
    const Point3 p{0.4L, -0.3L, 0.2L};
    auto S = psi_inverse_series(p, 30);
    for (Real z : {Real(-0.2), Real(0.05), Real(0.3)}) {
        auto D = psi_inverse_direct(p, z);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                Real v = 0, pw = 1;
                for (Real c : S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) v += c * pw, pw *= z;
                EXPECT_NEAR(to_double(v), to_double(D[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]), 1e-14);
            }
    }
}

TEST(PsiInverse, BlocksTranspose) {
    const Point3 p{0.1L, 0.2L, 0.3L};
    auto A = psi_inverse_blocks(p, 3, true), B = psi_inverse_blocks(p, 3, false);
    for (std::size_t k = 0; k <= 3; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(to_double(A[k][i][j]), to_double(B[k][j][i]));
    EXPECT_THROW(psi_inverse_blocks({0, 0, -1}, 2), DomainExceeded);
}

TEST(PsiInverse, NumericNschurMatchesExact) {
    for (int trial = 0; trial < 10; ++trial) {
        InstanceRng rng(instance_seed(99, static_cast<std::uint64_t>(trial)));
        HModel model = rng.assigned_model(2, 2);
        std::vector<Matrix<Real>> H;
        for (int k = 0; k <= 2; ++k) {
            Matrix<Real> b = zero_matrix<Real>(2, 2);
            for (int i = 1; i <= 2; ++i)
                for (int j = 1; j <= 2; ++j)
                    b[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                        static_cast<Real>(model.h(i, j, k).constant_value().get_d());
            H.push_back(b);
        }
        for (const auto& s : enumerate_by_weight(4)) {
            double exact = nschur(s, model).constant_value().get_d();
            EXPECT_NEAR(to_double(nschur_numeric(s, H)), exact, 1e-12 * std::max(1.0, std::fabs(exact))) << s.to_string();
        }
    }
}

TEST(Pipeline, VacuumIsOne) {
    for (const auto& p : default_sample_points())
        EXPECT_EQ(to_double(nschur_numeric(VirtualSequence(std::vector<int>{}), psi_inverse_blocks(p, 6))), 1.0);
}

TEST(Pipeline, DiscoversBijection) {
    auto rep = psi_inverse_pipeline();
    EXPECT_TRUE(rep.bijection);
    EXPECT_TRUE(rep.ok());
    EXPECT_LE(rep.max_spread, 1e-5);
    EXPECT_LT(rep.max_truncation_change, 1e-7);
    ASSERT_EQ(rep.pairs.size(), 6u);
    const std::map<std::vector<int>, int> expected{{{1, 2}, 6}, {{1, 3}, 4}, {{1, 4}, 5},
                                                   {{2, 3}, 2}, {{2, 4}, 3}, {{3, 4}, 1}};
    EXPECT_EQ(rep.labelling(), expected);
    for (const auto& pair : rep.pairs) EXPECT_NEAR(pair.ratio, 1.0, 1e-12) << pair.s.to_string();
}

TEST(Pipeline, UntransposedConventionFails) {
    PipelineOptions opt;
    opt.transpose = false;
    EXPECT_FALSE(psi_inverse_pipeline(default_sample_points(), opt).bijection);
}

TEST(Pipeline, TruncationTooShort) {
    PipelineOptions opt;
    opt.K = 0;
    EXPECT_THROW(psi_inverse_pipeline(default_sample_points(), opt), TruncationInsufficient);
    opt.K = 1;
    EXPECT_NO_THROW(psi_inverse_pipeline(default_sample_points(), opt));
}

TEST(Pipeline, JsonReport) {
    json j = psi_inverse_pipeline().to_json();
    EXPECT_TRUE(j.at("bijection").get<bool>());
    EXPECT_EQ(j.at("pairs").size(), 6u);
    EXPECT_EQ(j.at("points").size(), default_sample_points().size());
}

TEST(Quadric, RelabelledForm) {
    auto lab = psi_inverse_pipeline().labelling();
    Random rnd(3);
    for (int trial = 0; trial < 10; ++trial) {
        std::array<Real, 6> pi{};
        for (auto& v : pi) v = static_cast<Real>(rnd.rational().get_d());
        // pi_1 pi_6 + pi_2 pi_5 - pi_3 pi_4 under the discovered labelling
        Real want = pi[0] * pi[5] + pi[1] * pi[4] - pi[2] * pi[3];
        EXPECT_NEAR(to_double(example_quadric(pi, lab)), to_double(want), 1e-15);
    }
}

TEST(Quadric, NumericSeparation) {
    auto rep = quadric_separation(psi_inverse_pipeline().labelling(), 7, 10);
    EXPECT_TRUE(rep.separated(100)) << rep.to_json().dump();
    EXPECT_LE(rep.max_satisfying, 1e-4);
}

}  // namespace
