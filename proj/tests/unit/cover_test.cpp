#include "support.hpp"

#include "zsum/algebra.hpp"
#include "zsum/constructive.hpp"
#include "zsum/cover.hpp"
#include "zsum/detail/multisets.hpp"
#include "zsum/error.hpp"
#include "zsum/g0.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace zsum;
using zsum::test::seq;

TEST(Cover, ZeroSumFreeMaximalSequenceIsUncoverable)
{
    const Group G = make_group({3, 3});
    const SplittingField F = make_splitting_field(G);
    const auto chars = all_characters(F);
    const GSequence s = seq(G, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    EXPECT_FALSE(exists_cover(F, chars, s).has_value());
    EXPECT_FALSE(reference::some_binomial_product_vanishes(GroupAlgebra::over(F), s));
}

TEST(Cover, EveryExtensionOfLengthFiveIsCovered)
{
    const Group G = make_group({3, 3});
    const SplittingField F = make_splitting_field(G);
    const GroupAlgebra ring = GroupAlgebra::over(F);
    const auto chars = all_characters(F);
    for (const auto& g : G.elements()) {
        GSequence s = seq(G, {{1, 0}, {1, 0}, {0, 1}, {0, 1}});
        s.push(g);
        const auto cert = exists_cover(F, chars, s);
        ASSERT_TRUE(cert.has_value()) << to_literal(s);
        EXPECT_TRUE(verify_cover(*cert));
        EXPECT_TRUE(reference::some_binomial_product_vanishes(ring, s));
    }
}

TEST(Cover, IdentityShortCircuits)
{
    const Group G = make_group({5, 10});
    const SplittingField F = make_splitting_field(G);
    const auto chars = all_characters(F);
    const auto cert = exists_cover(F, chars, seq(G, {{0, 0}}));
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(verify_cover(*cert));
    EXPECT_FALSE(exists_cover(F, chars, GSequence(G)).has_value());
}

TEST(Cover, CertificatesAreSoundAndTamperingIsDetected)
{
    std::mt19937_64 rng(21);
    int found = 0;
    for (const auto& inv : std::vector<std::vector<std::int64_t>>{{2, 2}, {3, 3}, {2, 4}, {6}, {2, 2, 2}}) {
        const Group G = make_group(inv);
        const SplittingField F = make_splitting_field(G);
        const auto chars = all_characters(F);
        for (int i = 0; i < 60; ++i) {
            const GSequence s = test::random_sequence(G, 1 + i % (G.d_star() + 3), rng, false);
            const auto cert = exists_cover(F, chars, s);
            ASSERT_EQ(cert.has_value(), reference::some_binomial_product_vanishes(GroupAlgebra::over(F), s))
                << to_literal(s);
            if (!cert) {
                continue;
            }
            ++found;
            ASSERT_TRUE(verify_cover(*cert));
            std::set<std::size_t> used;
            for (const auto& a : cert->assignments) {
                EXPECT_TRUE(used.insert(a.entry).second);
            }
            // Dropping an assignment whose coset is needed breaks the cover.
            CoverCertificate broken = *cert;
            broken.assignments.pop_back();
            std::size_t covered = 0;
            for (const auto& chi : chars) {
                for (const auto& a : broken.assignments) {
                    if (chi(broken.entries[a.entry]) == a.chi(broken.entries[a.entry])) {
                        ++covered;
                        break;
                    }
                }
            }
            EXPECT_EQ(verify_cover(broken), covered == chars.size());
        }
    }
    EXPECT_GT(found, 50);
}

TEST(Cover, PartialTargets)
{
    const Group G = make_group({5, 10});
    const SplittingField F = make_splitting_field(G);
    const Character shift = Character::trivial(F);
    const auto plane = plane_characters(F, shift);
    ASSERT_EQ(plane.size(), 25u);
    // Five parallel lines of one slope cover the plane; four do not.
    const auto cert = exists_cover(F, plane, seq(G, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}));
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(verify_cover(*cert));
    EXPECT_FALSE(exists_cover(F, plane, seq(G, {{1, 1}, {1, 1}, {1, 1}, {1, 1}})).has_value());
}

TEST(G0, Sets)
{
    EXPECT_EQ(g0_set(make_group({2, 2})).size(), 3u);
    EXPECT_EQ(g0_set(make_group({2, 4})).size(), 5u);
    EXPECT_EQ(g0_set(make_group({3, 3})).size(), 4u);
    EXPECT_EQ(g0_set(make_group({3, 6})).size(), 7u);
    const auto s = g0_set(make_group({2, 4}));
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_THROW(g0_set(make_group({6})), Error);
}

TEST(G0, ReduceExample)
{
    const Group G = make_group({5, 10});
    const G0Reduction r = g0_reduce(G, G.element({2, 3}));
    EXPECT_EQ(r.multiplier, 3);
    EXPECT_EQ(r.base, G.element({4, 1}));
}

TEST(G0, ReduceEveryElement)
{
    for (const auto& inv : std::vector<std::vector<std::int64_t>>{{2, 2}, {2, 4}, {3, 3}, {3, 6}, {5, 10}, {2, 12}, {4, 8}}) {
        const Group G = make_group(inv);
        const auto g0 = g0_set(G);
        const std::set<GroupElement> members(g0.begin(), g0.end());
        for (const auto& g : G.elements()) {
            const G0Reduction r = g0_reduce(G, g);
            EXPECT_TRUE(members.contains(r.base)) << to_literal(g);
            EXPECT_EQ(G.scalar_mul(r.multiplier, r.base), g) << to_literal(g);
        }
    }
}

TEST(Constructive, ParallelAndStarCovers)
{
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {3, 1}, {3, 2}, {5, 2}}) {
        const Group G = make_group({p, p * n});
        const SplittingField F = make_splitting_field(G);
        for (std::int64_t k = 0; k < p; ++k) {
            for (std::int64_t s = 1; s <= p; ++s) {
                std::vector<GroupElement> entries(static_cast<std::size_t>(s), G.element({k, 1}));
                for (std::int64_t i = 0; i < (p - s) * p; ++i) {
                    entries.push_back(G.element({(k + i) % p, 1}));
                }
                EXPECT_TRUE(verify_cover(build_parallel_cover(F, entries, s)));
            }
            if (k > 0) {
                EXPECT_TRUE(verify_cover(build_star_cover(F, G.element({k, 0}))));
                EXPECT_TRUE(verify_cover(build_star_cover(F, G.element({k, p}), phi(F))));
            }
        }
    }
}

TEST(Constructive, SmallPrimeDriver)
{
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const Group G = make_group({p, p * n});
        const SplittingField F = make_splitting_field(G);
        const auto g0 = g0_set(G);
        std::int64_t count = 0;
        detail::for_each_multiset(g0.size(), static_cast<std::size_t>(G.d_star() + 1), [&](const std::vector<std::size_t>& pick) {
            GSequence s(G);
            for (auto i : pick) {
                s.push(g0[i]);
            }
            const CoverCertificate cert = cover_small_p(F, s);
            EXPECT_TRUE(verify_cover(cert)) << to_literal(s);
            ++count;
            return true;
        });
        EXPECT_GT(count, 0);
    }
    const Group G = make_group({5, 10});
    EXPECT_THROW(cover_small_p(make_splitting_field(G), test::seq(G, {{1, 0}})), Error);
}
