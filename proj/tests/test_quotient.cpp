#include <gtest/gtest.h>

#include <map>
#include <random>

#include "abacus/abacus.hpp"
#include "oracle.hpp"

using namespace abacus;

TEST(TauE, WorkedExample) {
    auto q = tau_e({6, 3, 2, 1, 1}, 0, 3);
    EXPECT_EQ(q.mp, (Multipartition{{}, {2}, {1}}));
    EXPECT_EQ(q.charges, (Charges{0, -1, 1}));
}

TEST(TauE, EmptyPartition) {
    for (int e = 2; e <= 4; ++e)
        for (int m = -3; m <= 3; ++m) {
            auto q = tau_e({}, m, e);
            EXPECT_EQ(size(q.mp), 0);
            int sum = 0;
            for (int c : q.charges) sum += c;
            EXPECT_EQ(sum, m);
        }
}

TEST(TauE, CoreHasEmptyQuotient) {
    auto q = tau_e({3, 1}, 0, 3);
    EXPECT_EQ(q.mp, (Multipartition{{}, {}, {}}));
    EXPECT_EQ(q.charges, (Charges{0, -1, 1}));
    EXPECT_EQ(oracle::strip_hooks({3, 1}, 3).second, 0);
}

TEST(TauEInverse, WorkedExample) {
    auto p = tau_e_inverse({{2, 1}, {2}, {2, 1, 1}}, {0, 1, -1});
    EXPECT_EQ(p.partition, (Partition{8, 5, 5, 2, 2, 2, 2, 1, 1, 1}));
    EXPECT_EQ(p.m, 0);
}

TEST(TauEInverse, SmallQuotientByBruteForce) {
    // Search every partition of size <= 4 at charge 0 for the quotient ((1), empty) over (0,0).
    std::vector<Partition> found;
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : partitions(n)) {
            auto q = tau_e(p, 0, 2);
            if (q.mp == Multipartition{{1}, {}} && q.charges == Charges{0, 0}) found.push_back(p);
        }
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0], (Partition{1, 1}));
    EXPECT_EQ(tau_e_inverse({{1}, {}}, {0, 0}).partition, found[0]);
    EXPECT_EQ(tau_e({2}, 0, 2).mp, (Multipartition{{}, {1}}));
}

TEST(TauEInverse, WeightZeroGivesCore) {
    auto p = tau_e_inverse({{}, {}, {}}, {0, -1, 1});
    EXPECT_EQ(p.partition, (Partition{3, 1}));
}

TEST(ECore, Examples) {
    EXPECT_EQ(e_core_partition({6, 3, 2, 1, 1}, 3), (Partition{3, 1}));
    EXPECT_EQ(e_core_partition({3, 1}, 3), (Partition{3, 1}));
    EXPECT_EQ(oracle::strip_hooks({2, 2}, 2).first, Partition{});
    EXPECT_EQ(e_core_partition({2, 2}, 2), Partition{});
}

TEST(ECore, MatchesHookStripping) {
    for (int e = 2; e <= 4; ++e)
        for (int n = 0; n <= 12; ++n)
            for (const auto& p : partitions(n)) {
                auto [core, w] = oracle::strip_hooks(p, e);
                ASSERT_EQ(e_core_partition(p, e), core);
                for (int m = -3; m <= 3; ++m) {
                    auto d = core_data(p, m, e);
                    ASSERT_EQ(d.core_partition, core);
                    ASSERT_EQ(d.weight, w);
                    ASSERT_EQ(n, e * d.weight + size(d.core_partition));
                }
            }
}

TEST(TauL, WorkedExample) {
    auto q = tau_l({6, 3, 2, 1, 1}, 0, 3, 2);
    EXPECT_EQ(q.mp, (Multipartition{{3, 1}, {2, 1}}));
    EXPECT_EQ(q.charges, (Charges{0, 0}));
    auto back = tau_l_inverse(q.mp, q.charges, 3);
    EXPECT_EQ(back.partition, (Partition{6, 3, 2, 1, 1}));
    EXPECT_EQ(back.m, 0);
}

TEST(TauL, LevelOneIsIdentity) {
    for (int n = 0; n <= 8; ++n)
        for (const auto& p : partitions(n)) {
            auto q = tau_l(p, 2, 3, 1);
            ASSERT_EQ(q.mp, Multipartition{p});
            ASSERT_EQ(q.charges, Charges{2});
        }
}

TEST(TauL, EmptyPartition) {
    auto q = tau_l({}, 0, 3, 2);
    EXPECT_EQ(q.mp, (Multipartition{{}, {}}));
    auto back = tau_l_inverse({{}, {}}, q.charges, 3);
    EXPECT_EQ(back.partition, Partition{});
    EXPECT_EQ(back.m, 0);
}

TEST(TauL, SlackDoesNotMatter) {
    for (int n = 0; n <= 9; ++n)
        for (const auto& p : partitions(n))
            for (int m = -2; m <= 2; ++m) {
                ASSERT_EQ(tau_l(p, m, 3, 2), tau_l(p, m, 3, 2, 3));
                ASSERT_EQ(tau_e(p, m, 4), tau_e(p, m, 4, 2));
            }
}

TEST(LevelRankTranspose, WorkedExample) {
    auto t = level_rank_transpose({{3, 1}, {2, 1}}, {0, 0}, 3);
    EXPECT_EQ(t.mp, (Multipartition{{}, {2}, {1}}));
    EXPECT_EQ(t.charges, (Charges{0, -1, 1}));
    EXPECT_EQ(size(level_rank_transpose({{}, {}}, {0, 0}, 3).mp), 0);
}

TEST(LevelRankTranspose, AgreesWithComposite) {
    for (int e = 2; e <= 4; ++e)
        for (int l = 1; l <= 3; ++l)
            for (int n = 0; n <= 12 - 2 * l; ++n)
                for (const auto& mp : multipartitions(n, l)) {
                    Charges s(l);
                    for (int c = 0; c < l; ++c) s[c] = (c * 5) % 4 - 1;
                    auto p = tau_l_inverse(mp, s, e);
                    ASSERT_EQ(level_rank_transpose(mp, s, e), tau_e(p.partition, p.m, e));
                }
}

TEST(Domains, Membership) {
    EXPECT_TRUE(in_fundamental_domain({0, 1}, 4));
    EXPECT_FALSE(in_fundamental_domain({0, 4}, 4));
    EXPECT_TRUE(in_closed_domain({0, 4}, 4));
    EXPECT_FALSE(in_closed_domain({1, 0}, 4));
    EXPECT_TRUE(in_fundamental_domain({5}, 2));
}

TEST(GeneralizedCore, WorkedExample) {
    auto g = generalized_core({{3, 1}, {2, 1}}, {0, 0}, 3);
    EXPECT_EQ(g.core_mp, (Multipartition{{1}, {2}}));
    EXPECT_EQ(g.core_charges, (Charges{-1, 1}));
    EXPECT_EQ(g.weight, 3);
    EXPECT_EQ(weight({{3, 1}, {2, 1}}, {0, 0}, 3), 3);
}

TEST(GeneralizedCore, CoreIsFixed) {
    auto g = generalized_core_unchecked({{1}, {2}}, {-1, 1}, 3);
    EXPECT_EQ(g.core_mp, (Multipartition{{1}, {2}}));
    EXPECT_EQ(g.weight, 0);
}

TEST(GeneralizedCore, RejectsChargesOutsideDomain) {
    EXPECT_THROW(generalized_core({{1}, {}}, {0, 3}, 3), error);
    EXPECT_THROW(is_core({{1}, {}}, {1, 0}, 3), error);
}

TEST(GeneralizedCore, WeightIsTransposeQuotientSize) {
    for (int e = 2; e <= 4; ++e)
        for (int l = 1; l <= 3; ++l)
            for (int n = 0; n <= 10 - 2 * (l - 1); ++n)
                for (const auto& mp : multipartitions(n, l)) {
                    Charges s(l);
                    for (int c = 0; c < l; ++c) s[c] = c * (e - 1) / std::max(1, l - 1);
                    auto g = generalized_core(mp, s, e);
                    ASSERT_EQ(g.weight, size(level_rank_transpose(mp, s, e).mp));
                    ASSERT_EQ(g, core_via_transpose(mp, s, e));
                    ASSERT_TRUE(in_closed_domain(g.core_charges, e));
                    ASSERT_TRUE(is_nested(g.core_mp, g.core_charges, e));
                }
}

TEST(GeneralizedCore, ConfluentUnderRandomOrder) {
    std::mt19937 rng(7);
    int checked = 0;
    for (int n = 0; n <= 6; ++n)
        for (const auto& mp : multipartitions(n, 2)) {
            if (n >= 5 && checked % 3) {
                ++checked;
                continue;
            }
            ++checked;
            auto ref = generalized_core(mp, {0, 2}, 3);
            for (int k = 0; k < 100; ++k) ASSERT_EQ(generalized_core_unchecked(mp, {0, 2}, 3, &rng), ref);
        }
}

TEST(GeneralizedCore, ElementaryOperationRemovesOneQuotientNode) {
    for (auto [e, s] : std::vector<std::pair<int, Charges>>{{3, {0, 1}}, {2, {0, 2}}, {4, {0, 1, 2}}, {3, {-1, 0, 2}}})
        for (int n = 0; n <= 7 - static_cast<int>(s.size()); ++n)
            for (const auto& mp : multipartitions(n, static_cast<int>(s.size()))) {
                auto before = level_rank_transpose(mp, s, e);
                auto moves = elementary_moves(mp, s, e);
                ASSERT_EQ(moves.empty(), size(before.mp) == 0);
                for (const auto& next : moves) {
                    auto after = level_rank_transpose(next.mp, next.charges, e);
                    ASSERT_EQ(size(after.mp), size(before.mp) - 1);
                    ASSERT_EQ(after.charges, before.charges);
                }
            }
}

TEST(IsCore, Examples) {
    EXPECT_TRUE(is_core({{1}, {2}}, {-1, 1}, 3));
    EXPECT_TRUE(is_core({{}, {}}, {0, 2}, 3));
    EXPECT_FALSE(is_core({{3, 1}, {2, 1}}, {0, 0}, 3));
}

TEST(IsCore, NodeCriterionHoldsForCores) {
    for (int e = 2; e <= 4; ++e)
        for (int l = 1; l <= 3; ++l)
            for (int n = 0; n <= 8 - l; ++n)
                for (const auto& mp : multipartitions(n, l)) {
                    Charges s(l, 0);
                    if (l > 1) s[l - 1] = e - 1;
                    if (is_core(mp, s, e)) ASSERT_TRUE(is_core_by_nodes(mp, s, e));
                }
}

TEST(IsCore, NodeCriterionIsNotSufficient) {
    // (3) at charge 0 has no 0-addable and no 1-removable node, yet a 2-hook can be removed.
    EXPECT_TRUE(is_core_by_nodes({{3}}, {0}, 2));
    EXPECT_FALSE(is_core({{3}}, {0}, 2));
    EXPECT_EQ(oracle::strip_hooks({3}, 2).second, 1);
}

TEST(CoreLCharges, MatchesGeneralizedCore) {
    EXPECT_EQ(core_l_charges({0, -1, 1}, 2), (Charges{-1, 1}));
}

TEST(PropRank, EqualLevelSizesGiveEqualQuotientSizes) {
    for (auto [e, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}, {3, 3}})
        for (int m = -3; m <= 3; ++m) {
            std::map<std::tuple<Charges, Charges, int>, std::set<int>> groups;
            for (int n = 0; n <= 14; ++n)
                for (const auto& p : partitions(n)) {
                    auto a = tau_l(p, m, e, l);
                    auto b = tau_e(p, m, e);
                    groups[{a.charges, b.charges, size(a.mp)}].insert(size(b.mp));
                }
            for (const auto& [k, v] : groups) ASSERT_EQ(v.size(), 1u);
        }
}

TEST(Identity, SizeIsCorePlusQuotient) {
    for (int e = 2; e <= 4; ++e)
        for (int n = 0; n <= 12; ++n)
            for (const auto& p : partitions(n)) {
                auto q = tau_e(p, 1, e);
                ASSERT_EQ(n, e * size(q.mp) + size(e_core_partition(p, e)));
            }
}
