#include "support.hpp"

#include "zsum/certificate_io.hpp"
#include "zsum/counterexample.hpp"
#include "zsum/cover.hpp"
#include "zsum/davenport.hpp"
#include "zsum/dgk.hpp"
#include "zsum/error.hpp"
#include "zsum/literal.hpp"

#include <gtest/gtest.h>

using namespace zsum;

TEST(Counterexample, Shapes)
{
    const GSequence s = build_counterexample(5, 2);
    EXPECT_EQ(s.length(), 14);
    EXPECT_EQ(to_literal(s), "0,1x4;1,1x4;2,1x4;3,1x2");
    EXPECT_EQ(s.group(), make_group({5, 10}));

    const CounterexampleSpec spec = CounterexampleSpec::standard(5, 3);
    EXPECT_EQ(spec.multiplicities, (std::array<std::int64_t, 4>{9, 4, 4, 2}));
    EXPECT_EQ(spec.length(), 19);
    EXPECT_EQ(spec.length(), spec.group().d_star() + 1);

    EXPECT_THROW(build_counterexample(3, 2), Error);
    EXPECT_THROW(build_counterexample(5, 1), Error);
    EXPECT_THROW(build_counterexample(6, 2), Error);
}

TEST(Counterexample, FiveTwoIsUncoverable)
{
    const CounterexampleSpec spec = CounterexampleSpec::standard(5, 2);
    const UncoverableReport fast = verify_uncoverable(spec);
    const UncoverableReport serial = verify_uncoverable(spec, {false});
    const UncoverableReport ref = reference::verify_uncoverable(spec);
    EXPECT_TRUE(fast.uncoverable);
    EXPECT_EQ(fast.distributions_checked, 375u);
    EXPECT_EQ(serial.distributions_checked, fast.distributions_checked);
    EXPECT_EQ(ref.uncoverable, fast.uncoverable);
    EXPECT_EQ(ref.distributions_checked, fast.distributions_checked);
    EXPECT_EQ(spec.group().d_star(), 13);
}

TEST(Counterexample, ExtraSlackIsCoverable)
{
    CounterexampleSpec spec = CounterexampleSpec::standard(5, 2);
    spec.multiplicities[3] = 5;
    const UncoverableReport fast = verify_uncoverable(spec);
    const UncoverableReport ref = reference::verify_uncoverable(spec);
    EXPECT_FALSE(fast.uncoverable);
    EXPECT_EQ(fast.distributions_checked, ref.distributions_checked);
    EXPECT_FALSE(ref.uncoverable);
}

TEST(Counterexample, AgreesWithGenericCoverSearch)
{
    const CounterexampleSpec spec = CounterexampleSpec::standard(5, 2);
    const SplittingField F = make_splitting_field(spec.group());
    const auto chars = all_characters(F);
    EXPECT_FALSE(exists_cover(F, chars, spec.sequence()).has_value());

    CounterexampleSpec slack = spec;
    slack.multiplicities[3] = 5;
    const auto cert = exists_cover(F, chars, slack.sequence());
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(verify_cover(*cert));
}

TEST(Counterexample, DistributionCapRaisesBudget)
{
    VerifyConfig config;
    config.max_distributions = 10;
    try {
        verify_uncoverable(CounterexampleSpec::standard(5, 2), config);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(Certificate, UncoverableRoundTrip)
{
    const CounterexampleSpec spec = CounterexampleSpec::standard(5, 2);
    const UncoverableReport report = verify_uncoverable(spec);
    nlohmann::json doc = uncoverable_certificate_json(spec, report, true);
    EXPECT_EQ(doc["mode"], "uncoverable");
    EXPECT_EQ(doc["group"], "5,10");
    EXPECT_EQ(doc["sequence"], "0,1x4;1,1x4;2,1x4;3,1x2");
    EXPECT_EQ(doc["distributions_checked"], 375);
    EXPECT_TRUE(recheck_certificate(doc));
    doc["distributions_checked"] = 374;
    EXPECT_FALSE(recheck_certificate(doc));
    doc["distributions_checked"] = 375;
    doc["sequence"] = "0,1x4;1,1x4;2,1x4;3,1x5";
    EXPECT_FALSE(recheck_certificate(doc));
}

TEST(Certificate, CoverRoundTrip)
{
    const Group G = make_group({3, 3});
    const SplittingField F = make_splitting_field(G);
    const auto chars = all_characters(F);
    const auto cert = exists_cover(F, chars, parse_sequence(G, "1,0x2;0,1x2;1,1"));
    ASSERT_TRUE(cert.has_value());
    nlohmann::json doc = cover_certificate_json(*cert, true);
    EXPECT_EQ(doc["mode"], "cover");
    EXPECT_TRUE(recheck_certificate(nlohmann::json::parse(doc.dump())));
    const CoverCertificate back = cover_certificate_from_json(doc);
    EXPECT_EQ(back.entries, cert->entries);
    EXPECT_EQ(back.assignments.size(), cert->assignments.size());

    // Point every assignment at the trivial coset: no longer a cover.
    for (auto& a : doc["assignments"]) {
        a["character"] = std::vector<int>{0, 0};
    }
    EXPECT_FALSE(recheck_certificate(doc));
    doc["mode"] = "other";
    EXPECT_THROW(recheck_certificate(doc), Error);
}

TEST(Dgk, SmallGroups)
{
    const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> cases{
        {{2, 2}, 2}, {{2, 4}, 4}, {{3, 3}, 4}, {{2, 2, 2}, 3}, {{6}, 5}, {{8}, 7}};
    for (const auto& [inv, want] : cases) {
        const Group G = make_group(inv);
        const DgkResult fast = dgk_brute(G, 10);
        const DgkResult ref = reference::dgk_brute(G, 10);
        EXPECT_EQ(fast.l, want) << to_literal(G);
        EXPECT_EQ(ref.l, want);
        EXPECT_EQ(fast.witness, ref.witness);
        EXPECT_EQ(fast.l, davenport_d(G).d);
        const SplittingField F = make_splitting_field(G);
        EXPECT_FALSE(exists_cover(F, all_characters(F), fast.witness).has_value());
    }
}

TEST(Dgk, CapsAndLimits)
{
    EXPECT_EQ(dgk_brute(make_group({3, 3}), 3).l, 3);
    EXPECT_THROW(dgk_brute(make_group({5, 5}), 10), Error);
    DgkConfig config;
    config.prime = 13;
    EXPECT_EQ(dgk_brute(make_group({3, 3}), 10, config).q, 13u);
    config.prime = 11;
    EXPECT_THROW(dgk_brute(make_group({3, 3}), 10, config), Error);
}

TEST(Dgk, LogarithmicBound)
{
    EXPECT_EQ(theorem_a_bound(make_group({2, 4})), 5);
    EXPECT_EQ(theorem_a_bound(make_group({5, 10})), 25);
    EXPECT_EQ(theorem_a_bound(make_group({2, 2})), 2);
    EXPECT_EQ(theorem_a_bound(make_group({3, 3})), 5);
    EXPECT_EQ(theorem_a_bound(make_group({2, 2, 2})), 3);
    for (std::int64_t n = 2; n <= 12; ++n) {
        EXPECT_EQ(theorem_a_bound(make_group({n})), n - 1);
    }
}
