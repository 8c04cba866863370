#include "support.hpp"

#include "zsum/davenport.hpp"
#include "zsum/error.hpp"

#include <gtest/gtest.h>
#include <omp.h>

using namespace zsum;

TEST(Davenport, Cyclic)
{
    for (std::int64_t n = 1; n <= 12; ++n) {
        EXPECT_EQ(davenport_d(make_group(n == 1 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{n})).d, n - 1)
            << "C" << n;
    }
}

TEST(Davenport, SmallNonCyclic)
{
    EXPECT_EQ(davenport_d(make_group({2, 2})).d, 2);
    EXPECT_EQ(davenport_d(make_group({2, 4})).d, 4);
    EXPECT_EQ(davenport_d(make_group({3, 3})).d, 4);
    EXPECT_EQ(davenport_d(make_group({2, 2, 2})).d, 3);
    EXPECT_EQ(davenport_d(make_group({4, 4})).d, 6);
    EXPECT_EQ(davenport_d(make_group({2, 2, 2, 2})).d, 4);
}

TEST(Davenport, WitnessIsZeroSumFreeAndMatchesReference)
{
    for (const auto& inv : std::vector<std::vector<std::int64_t>>{{8}, {2, 2}, {2, 4}, {3, 3}, {2, 6}, {2, 2, 2}, {4, 4}}) {
        const Group G = make_group(inv);
        const DavenportResult fast = davenport_d(G);
        const DavenportResult serial = davenport_d(G, {64, false});
        const DavenportResult ref = reference::davenport_d(G);
        EXPECT_EQ(fast.witness.length(), fast.d);
        EXPECT_TRUE(is_zero_sum_free(fast.witness));
        EXPECT_EQ(fast.d, ref.d);
        EXPECT_EQ(fast.witness, ref.witness) << to_literal(G);
        EXPECT_EQ(serial.witness, fast.witness);
        EXPECT_GE(fast.d, G.d_star());
    }
}

TEST(Davenport, ThreadCountDoesNotChangeWitness)
{
    const Group G = make_group({2, 8});
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const DavenportResult one = davenport_d(G);
    omp_set_num_threads(4);
    const DavenportResult four = davenport_d(G);
    omp_set_num_threads(saved);
    EXPECT_EQ(one.witness, four.witness);
}

TEST(Davenport, Limits)
{
    try {
        davenport_d(make_group({5, 15}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
    }
    Budget budget;
    budget.set_node_limit(10);
    try {
        davenport_d(make_group({4, 4}), {}, budget);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}
