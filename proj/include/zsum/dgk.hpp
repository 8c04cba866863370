#pragma once

#include "zsum/budget.hpp"
#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

#include <cstdint>
#include <optional>

namespace zsum {

struct DgkConfig {
    std::int64_t max_order = 16; ///< GroupTooLarge above it
    bool parallel = true;
    std::optional<std::uint64_t> prime; ///< splitting prime; smallest valid one by default
};

struct DgkResult {
    std::int64_t l = 0;
    GSequence witness; ///< lexicographically smallest uncoverable sequence of length l
    std::uint64_t q = 0;
};

/// d(G, K): the largest l <= l_cap such that some S over G\{0} of length l admits no
/// cover of G^ by cosets chi_i <g_i>^perp. Uncoverable sequences are closed under
/// taking subsequences, so the search only extends uncoverable prefixes.
DgkResult dgk_brute(const Group& group, std::int64_t l_cap, const DgkConfig& config = {},
                    const Budget& budget = Budget::unlimited());

/// floor((n - 1) + n ln(|G|/n)) with n = exp(G) >= 2, evaluated with directed
/// rounding and refined until the floor is unambiguous.
std::int64_t theorem_a_bound(const Group& group);

namespace reference {

/// Level-by-level enumeration calling exists_cover; serial.
DgkResult dgk_brute(const Group& group, std::int64_t l_cap, std::optional<std::uint64_t> prime = std::nullopt,
                    const Budget& budget = Budget::unlimited());

} // namespace reference

} // namespace zsum
