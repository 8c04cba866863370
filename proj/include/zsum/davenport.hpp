#pragma once

#include "zsum/budget.hpp"
#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

#include <cstdint>

namespace zsum {

struct DavenportConfig {
    std::int64_t max_order = 64; ///< desk-scale cap; GroupTooLarge above it
    bool parallel = true;
};

struct DavenportResult {
    std::int64_t d = 0;
    GSequence witness; ///< lexicographically smallest zero-sum-free sequence of length d
};

/// Exact d(G): the maximal length of a zero-sum-free sequence over G.
/// Depth-first over non-decreasing multisets of nonzero elements, carrying the
/// set of achievable nonempty subsums; a zero-sum-free S can grow by at most
/// |G| - 1 - |Sigma(S)| further elements, which bounds every branch.
DavenportResult davenport_d(const Group& group, const DavenportConfig& config = {},
                            const Budget& budget = Budget::unlimited());

namespace reference {

/// Level-by-level exhaustive enumeration calling is_zero_sum_free; serial.
DavenportResult davenport_d(const Group& group, std::int64_t max_order = 64);

} // namespace reference

} // namespace zsum
