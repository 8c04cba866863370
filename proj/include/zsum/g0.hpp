#pragma once

#include "zsum/group.hpp"

#include <cstdint>
#include <vector>

namespace zsum {

/// g = multiplier * base with base in G0.
struct G0Reduction {
    std::int64_t multiplier;
    GroupElement base;
};

/// For G = C_m + C_{mn}: G0 = {e1} and k*e1 + d*e2 for k in [0, m) and d a product of
/// primes dividing m with exponents up to v_p(mn), dropping d = 0 (mod mn).
/// Canonical order, no duplicates. Throws NotRank2.
std::vector<GroupElement> g0_set(const Group& group);

/// Writes g as a multiple of an element of G0. The identity reduces to 0 * e1.
G0Reduction g0_reduce(const Group& group, const GroupElement& g);

} // namespace zsum
