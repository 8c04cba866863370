#include "support.hpp"

#include "zsum/literal.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace zsum;
using zsum::test::seq;

TEST(Sequence, Basics)
{
    const Group G = make_group({2, 4});
    GSequence s = seq(G, {{1, 0}, {0, 1}, {0, 1}});
    EXPECT_EQ(s.length(), 3);
    EXPECT_EQ(sigma(s), G.element({1, 2}));
    EXPECT_EQ(s.entries().front(), G.element({0, 1}));
    s.pop(G.element({0, 1}));
    EXPECT_EQ(s.multiplicity(G.element({0, 1})), 1);
    EXPECT_TRUE(seq(G, {{0, 1}}).divides(s));
    EXPECT_FALSE(seq(G, {{0, 1}, {0, 1}}).divides(s));
    EXPECT_EQ(sigma(GSequence(G)), G.identity());
}

TEST(Sequence, ZeroSumFree)
{
    const Group G = make_group({3, 3});
    EXPECT_TRUE(is_zero_sum_free(seq(G, {{1, 0}, {1, 0}, {0, 1}, {0, 1}})));
    EXPECT_FALSE(is_zero_sum_free(seq(G, {{1, 0}, {1, 0}, {1, 0}})));
    EXPECT_FALSE(is_zero_sum_free(seq(G, {{0, 0}})));
    EXPECT_TRUE(is_zero_sum_free(GSequence(G)));
    EXPECT_FALSE(is_zero_sum_free(seq(G, {{1, 2}, {2, 1}})));
}

namespace {

// Direct subset-sum enumeration over the expanded entries.
bool zsf_oracle(const GSequence& s)
{
    const auto e = s.entries();
    const Group& G = s.group();
    for (std::uint32_t mask = 1; mask < (1u << e.size()); ++mask) {
        GroupElement acc = G.identity();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (mask >> i & 1u) {
                acc = G.add(acc, e[i]);
            }
        }
        if (acc == G.identity()) {
            return false;
        }
    }
    return true;
}

} // namespace

TEST(Sequence, ZeroSumFreeMatchesSubsetEnumeration)
{
    std::mt19937_64 rng(7);
    for (const auto& inv : std::vector<std::vector<std::int64_t>>{{7}, {2, 4}, {3, 3}, {2, 2, 2}, {5, 10}}) {
        const Group G = make_group(inv);
        for (int i = 0; i < 200; ++i) {
            const GSequence s = test::random_sequence(G, 1 + i % 10, rng);
            ASSERT_EQ(is_zero_sum_free(s), zsf_oracle(s)) << to_literal(s);
        }
    }
}

TEST(Sequence, ZeroSumFreeIsDownwardClosed)
{
    std::mt19937_64 rng(11);
    const Group G = make_group({5, 10});
    int zsf = 0;
    for (int i = 0; i < 1000; ++i) {
        GSequence s = test::random_sequence(G, 1 + i % 8, rng, false);
        if (!is_zero_sum_free(s)) {
            continue;
        }
        ++zsf;
        const auto entries = s.entries();
        s.pop(entries[i % entries.size()]);
        ASSERT_TRUE(is_zero_sum_free(s));
    }
    EXPECT_GT(zsf, 100);
}

TEST(Sequence, CauchyDavenport)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        const std::int64_t p = std::array<std::int64_t, 3>{5, 7, 11}[i % 3];
        const Group G = make_group({p});
        std::uniform_int_distribution<std::uint32_t> mask(1, (1u << p) - 1);
        const std::uint32_t A = mask(rng);
        const std::uint32_t B = mask(rng);
        std::set<GroupElement> sums;
        for (std::int64_t a = 0; a < p; ++a) {
            for (std::int64_t b = 0; b < p; ++b) {
                if ((A >> a & 1u) && (B >> b & 1u)) {
                    sums.insert(G.add(G.element({a}), G.element({b})));
                }
            }
        }
        const std::int64_t bound = std::min<std::int64_t>(std::popcount(A) + std::popcount(B) - 1, p);
        ASSERT_GE(static_cast<std::int64_t>(sums.size()), bound);
    }
}
