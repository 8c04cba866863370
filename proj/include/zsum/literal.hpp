#pragma once

#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

#include <string_view>

namespace zsum {

/// "5,10" -> C_5 + C_10; "" -> trivial group. Throws Parse or NonDivisibilityChain.
Group parse_group(std::string_view text);

/// "2,3"; coordinates are reduced modulo the invariants.
GroupElement parse_element(const Group& group, std::string_view text);

/// "1,0x4;0,1x9"; a missing "xN" means multiplicity 1. "\u00d7" works as well as "x".
GSequence parse_sequence(const Group& group, std::string_view text);

} // namespace zsum
