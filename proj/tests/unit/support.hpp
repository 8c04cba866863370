#pragma once

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

#include <random>
#include <vector>

namespace zsum::test {

inline GSequence seq(const Group& G, const std::vector<std::vector<std::int64_t>>& items)
{
    GSequence s(G);
    for (const auto& c : items) {
        s.push(G.element(c));
    }
    return s;
}

inline GroupElement random_element(const Group& G, std::mt19937_64& rng)
{
    return G.element_at(std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(G.order() - 1))(rng));
}

inline GSequence random_sequence(const Group& G, std::int64_t length, std::mt19937_64& rng, bool allow_zero = true)
{
    GSequence s(G);
    while (s.length() < length) {
        const GroupElement g = random_element(G, rng);
        if (allow_zero || g != G.identity()) {
            s.push(g);
        }
    }
    return s;
}

} // namespace zsum::test
