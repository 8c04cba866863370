#pragma once

#include "zsum/budget.hpp"
#include "zsum/character.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace zsum {

/// Affine line in F_p^2: k u + v = s (finite slope k) or u = s (no slope).
struct Line {
    std::int64_t p;
    std::optional<std::int64_t> slope;
    std::int64_t offset;

    bool contains(std::int64_t u, std::int64_t v) const;
    std::vector<std::pair<std::int64_t, std::int64_t>> points() const;

    friend bool operator==(const Line&, const Line&) = default;
};

/// Plane coordinates of chi = phi^j psi^u phi^{nv} in G = C_p + C_{pn}: (j, u, v).
struct PlanePoint {
    std::int64_t plane;
    std::int64_t u;
    std::int64_t v;
};

PlanePoint plane_point(const Character& chi);

/// Trace of chi <g>^perp on the plane coset through chi. g = k e1 + e2 gives slope k;
/// g = k e1 + p l e2 with k != 0 gives the vertical line through chi. Anything else
/// throws NotPlaneElement.
Line line_of_coset(const Character& chi, const GroupElement& g);

/// Number of common points: 1 for different slopes, 0 or p for parallel lines.
std::int64_t line_intersection_count(const Line& a, const Line& b);

/// Exact maximum of |E1 u E2 u E3| where E_i is a union of l distinct lines of
/// slope k_i, over all offset choices. The offsets of the first slope are taken up
/// to the maps s -> a s + c (a != 0), which act on every finite slope at once.
/// Requires p >= 5 prime, l in [2, p - 1], distinct slopes in [0, p).
std::int64_t l_triple_max_union(std::int64_t p, std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3,
                                bool parallel = true);

/// Slope key; nullopt is the vertical direction.
using SlopeCounts = std::map<std::optional<std::int64_t>, std::int64_t>;

/// Can F_p^2 be covered using at most counts[k] lines of each slope k?
bool plane_coverable(std::int64_t p, const SlopeCounts& counts, const Budget& budget = Budget::unlimited());

namespace reference {

/// All offset triples, no symmetry reduction; serial.
std::int64_t l_triple_max_union(std::int64_t p, std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3);

} // namespace reference

} // namespace zsum
