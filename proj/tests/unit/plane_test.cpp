#include "support.hpp"

#include "zsum/error.hpp"
#include "zsum/plane.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace zsum;

namespace {

using Point = std::pair<std::int64_t, std::int64_t>;

// chi' in chi <g>^perp restricted to the plane coset of chi, in (u, v) coordinates.
std::set<Point> enumerated_trace(const SplittingField& F, const Character& chi, const GroupElement& g)
{
    std::set<Point> out;
    const PlanePoint home = plane_point(chi);
    for (const auto& other : all_characters(F)) {
        const PlanePoint q = plane_point(other);
        if (q.plane == home.plane && other.pairing(g) == chi.pairing(g)) {
            out.insert({q.u, q.v});
        }
    }
    return out;
}

std::vector<GroupElement> plane_elements(const Group& G, std::int64_t p)
{
    std::vector<GroupElement> out;
    for (std::int64_t k = 0; k < p; ++k) {
        out.push_back(G.element({k, 1}));
    }
    for (std::int64_t k = 1; k < p; ++k) {
        for (std::int64_t l = 0; l * p < G.exponent(); ++l) {
            out.push_back(G.element({k, p * l}));
        }
    }
    return out;
}

} // namespace

TEST(Plane, LineModelMatchesEnumeratedCosets)
{
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, std::int64_t>>{{5, 1}, {5, 2}, {5, 3}, {7, 2}}) {
        const Group G = make_group({p, p * n});
        const SplittingField F = make_splitting_field(G);
        for (const auto& g : plane_elements(G, p)) {
            for (const auto& chi : all_characters(F)) {
                const Line line = line_of_coset(chi, g);
                const auto pts = line.points();
                const std::set<Point> model(pts.begin(), pts.end());
                ASSERT_EQ(model.size(), static_cast<std::size_t>(p));
                ASSERT_EQ(model, enumerated_trace(F, chi, g)) << to_literal(g);
                const PlanePoint home = plane_point(chi);
                EXPECT_TRUE(line.contains(home.u, home.v));
            }
        }
    }
}

TEST(Plane, NotPlaneElement)
{
    const Group G = make_group({5, 10});
    const SplittingField F = make_splitting_field(G);
    const Character chi = Character::trivial(F);
    for (const auto& coords : std::vector<std::vector<std::int64_t>>{{0, 0}, {0, 5}, {1, 2}, {2, 3}}) {
        try {
            line_of_coset(chi, G.element(coords));
            FAIL() << coords[0] << "," << coords[1];
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::NotPlaneElement);
        }
    }
}

TEST(Plane, IntersectionCounts)
{
    const Line a{5, 1, 0};
    const Line b{5, 2, 3};
    const Line c{5, 1, 4};
    const Line v{5, std::nullopt, 2};
    EXPECT_EQ(line_intersection_count(a, b), 1);
    EXPECT_EQ(line_intersection_count(a, v), 1);
    EXPECT_EQ(line_intersection_count(a, c), 0);
    EXPECT_EQ(line_intersection_count(a, a), 5);
    EXPECT_EQ(line_intersection_count(v, v), 5);
    EXPECT_EQ(line_intersection_count(v, Line{5, std::nullopt, 3}), 0);

    for (std::int64_t s1 = 0; s1 < 7; ++s1) {
        for (std::int64_t s2 = 0; s2 < 7; ++s2) {
            for (std::int64_t k1 = -1; k1 < 7; ++k1) {
                for (std::int64_t k2 = -1; k2 < 7; ++k2) {
                    const Line x{7, k1 < 0 ? std::nullopt : std::optional<std::int64_t>(k1), s1};
                    const Line y{7, k2 < 0 ? std::nullopt : std::optional<std::int64_t>(k2), s2};
                    const auto px = x.points();
                    const auto py = y.points();
                    const std::set<Point> sx(px.begin(), px.end());
                    std::int64_t common = 0;
                    for (const auto& q : py) {
                        common += sx.contains(q);
                    }
                    ASSERT_EQ(line_intersection_count(x, y), common);
                }
            }
        }
    }
}

TEST(Plane, TripleUnionValues)
{
    // Independent enumeration of all offset triples; see tests/oracles/plane_oracle.py.
    const std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> expected{
        {5, 2, 21}, {5, 3, 25}, {5, 4, 25}, {7, 2, 33}, {7, 3, 43}};
    for (const auto& [p, l, value] : expected) {
        std::int64_t worst = 0;
        for (std::int64_t k1 = 0; k1 < p; ++k1) {
            for (std::int64_t k2 = k1 + 1; k2 < p; ++k2) {
                for (std::int64_t k3 = k2 + 1; k3 < p; ++k3) {
                    worst = std::max(worst, l_triple_max_union(p, l, k1, k2, k3));
                }
            }
        }
        EXPECT_EQ(worst, value) << "p=" << p << " l=" << l;
        EXPECT_LT(worst, l * (3 * p - 2 * l));
    }
}

TEST(Plane, TripleUnionMatchesReference)
{
    for (std::int64_t l = 2; l <= 4; ++l) {
        for (const auto& [k1, k2, k3] : std::vector<std::tuple<int, int, int>>{{0, 1, 2}, {0, 2, 4}, {1, 3, 4}}) {
            EXPECT_EQ(l_triple_max_union(5, l, k1, k2, k3), reference::l_triple_max_union(5, l, k1, k2, k3));
            EXPECT_EQ(l_triple_max_union(5, l, k1, k2, k3, false), l_triple_max_union(5, l, k1, k2, k3));
        }
    }
    EXPECT_EQ(l_triple_max_union(7, 3, 0, 1, 5), reference::l_triple_max_union(7, 3, 0, 1, 5));
}

TEST(Plane, TripleUnionPreconditions)
{
    EXPECT_THROW(l_triple_max_union(3, 2, 0, 1, 2), Error);
    EXPECT_THROW(l_triple_max_union(5, 1, 0, 1, 2), Error);
    EXPECT_THROW(l_triple_max_union(5, 5, 0, 1, 2), Error);
    EXPECT_THROW(l_triple_max_union(5, 2, 0, 1, 1), Error);
    EXPECT_THROW(l_triple_max_union(6, 2, 0, 1, 2), Error);
}

TEST(Plane, Coverable)
{
    EXPECT_TRUE(plane_coverable(5, {{0, 5}}));
    EXPECT_TRUE(plane_coverable(5, {{std::nullopt, 5}}));
    EXPECT_FALSE(plane_coverable(5, {{0, 4}}));
    EXPECT_FALSE(plane_coverable(5, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
    EXPECT_TRUE(plane_coverable(5, {{0, 4}, {1, 4}, {2, 4}, {3, 2}}));
    EXPECT_FALSE(plane_coverable(5, {{0, 4}, {1, 4}}));
    EXPECT_TRUE(plane_coverable(5, {{0, 9}}));
    EXPECT_FALSE(plane_coverable(5, {}));
}
