#include <gtest/gtest.h>

#include <set>

#include "nschur/sequences.hpp"
#include "test_support.hpp"

using namespace nschur;
using namespace nschur::testing;

namespace {

VirtualSequence seq(std::vector<int> v) { return VirtualSequence(std::move(v)); }

TEST(Sequence, CanonicalPrefix) {
    EXPECT_TRUE(seq({0, 1, 2}).is_vacuum());
    EXPECT_EQ(seq({-2, 1, 2, 3}), seq({-2}));
    EXPECT_EQ(seq({-1, 0, 2}).prefix(), (std::vector<int>{-1, 0}));
    EXPECT_EQ(VirtualSequence::parse("-2,1"), seq({-2}));
    EXPECT_TRUE(VirtualSequence::parse("").is_vacuum());
    EXPECT_THROW(seq({0, 0}), InvalidRange);
    EXPECT_THROW(seq({-1, 3}), InvalidRange);
    EXPECT_THROW(VirtualSequence::parse("1,x"), InvalidRange);
}

TEST(Sequence, Weight) {
    EXPECT_EQ(VirtualSequence::vacuum().weight(), 0);
    EXPECT_EQ(seq({-2, 1}).weight(), 2);
    EXPECT_EQ(seq({-1, 0}).weight(), 2);
}

TEST(Sequence, PartitionExamples) {
    EXPECT_TRUE(to_partition(VirtualSequence::vacuum()).parts.empty());
    EXPECT_EQ(to_partition(seq({-2, 1})), Partition{{2}});
    EXPECT_EQ(to_partition(seq({-1, 0})), (Partition{{1, 1}}));
    EXPECT_EQ(from_partition(Partition{{2}}), seq({-2}));
    EXPECT_EQ(from_partition(Partition{{1, 1}}), seq({-1, 0}));
    EXPECT_THROW(from_partition(Partition{{1, 2}}), InvalidRange);
}

TEST(Sequence, PartitionBijectionUpToWeight8) {
    for (int w = 0; w <= 8; ++w)
        for (const auto& p : partitions_of(w)) {
            VirtualSequence s = from_partition(p);
            EXPECT_EQ(to_partition(s), p);
            EXPECT_EQ(s.weight(), w);
            EXPECT_EQ(from_partition(to_partition(s)), s);
        }
}

TEST(Skn, Examples) {
    auto s24 = enumerate_Skn(2, 4);
    ASSERT_EQ(s24.size(), 6u);
    for (const auto& s : s24)
        for (int i = 0; i < 2; ++i) {
            EXPECT_GE(s[i], -2);
            EXPECT_LE(s[i], 1);
        }
    auto s12 = enumerate_Skn(1, 2);
    ASSERT_EQ(s12.size(), 2u);
    EXPECT_EQ(s12[0], seq({-1}));
    EXPECT_TRUE(s12[1].is_vacuum());
    EXPECT_THROW(enumerate_Skn(3, 3), InvalidRange);
    EXPECT_THROW(enumerate_Skn(0, 3), InvalidRange);
}

TEST(Skn, CountsAndRanges) {
    for (int n = 2; n <= 7; ++n)
        for (int k = 1; k < n; ++k) {
            auto all = enumerate_Skn(k, n);
            EXPECT_EQ(static_cast<long>(all.size()), binomial(n, k)) << k << "," << n;
            std::set<std::vector<int>> labels;
            for (const auto& s : all) {
                for (int i = 0; i < k; ++i) {
                    EXPECT_GE(s[i], k - n);
                    EXPECT_LE(s[i], k - 1);
                }
                EXPECT_LE(s.stable_from(), k);
                auto label = subset_label(s, k, n);
                EXPECT_TRUE(std::is_sorted(label.begin(), label.end()));
                EXPECT_EQ(from_subset_label(label, k, n), s);
                labels.insert(label);
            }
            EXPECT_EQ(labels.size(), all.size());
        }
}

TEST(Skn, SubsetLabels) {
    EXPECT_EQ(subset_label(seq({-2, -1}), 2, 4), (std::vector<int>{1, 2}));
    EXPECT_EQ(subset_label(seq({0, 1}), 2, 4), (std::vector<int>{3, 4}));
    EXPECT_EQ(subset_label(seq({-2, 1}), 2, 4), (std::vector<int>{1, 4}));
    EXPECT_THROW(subset_label(seq({-3, 1}), 2, 4), NotInSkn);
    EXPECT_THROW(subset_label(seq({-1, 0, 1}), 2, 4), NotInSkn);
}

TEST(ByWeight, Counts) {
    auto zero = enumerate_by_weight(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].is_vacuum());
    auto upto = enumerate_by_weight(6);
    std::map<int, int> counts;
    for (const auto& s : upto) ++counts[s.weight()];
    EXPECT_EQ(counts[4], 5);
    EXPECT_EQ(counts[6], 11);
    for (int w = 0; w <= 6; ++w) EXPECT_EQ(counts[w], partition_count(w));
    EXPECT_THROW(enumerate_by_weight(-1), InvalidRange);
}

TEST(ByWeight, OnlyVacuumHasWeightZero) {
    for (const auto& s : enumerate_by_weight(8)) EXPECT_EQ(s.weight() == 0, s.is_vacuum());
}

}  // namespace
