#pragma once

#include "zsum/group.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zsum {

/// Sequence over G as a multiset: element -> multiplicity v_g(S) > 0. Iteration
/// follows the lexicographic coordinate order, which is the canonical entry order.
class GSequence {
public:
    explicit GSequence(Group group = {}) : group_(std::move(group)) {}
    GSequence(Group group, const std::vector<GroupElement>& entries);

    const Group& group() const { return group_; }

    void push(const GroupElement& g, std::int64_t count = 1);
    /// Removes one copy; the element must be present.
    void pop(const GroupElement& g);

    std::int64_t length() const { return length_; }
    bool empty() const { return length_ == 0; }
    std::int64_t multiplicity(const GroupElement& g) const;
    const std::map<GroupElement, std::int64_t>& multiplicities() const { return mult_; }

    /// Entries expanded with multiplicity, in canonical order.
    std::vector<GroupElement> entries() const;

    /// True when this is a subsequence of other (v_g(this) <= v_g(other) for all g).
    bool divides(const GSequence& other) const;

    friend bool operator==(const GSequence& a, const GSequence& b)
    {
        return a.group_ == b.group_ && a.mult_ == b.mult_;
    }

private:
    Group group_;
    std::map<GroupElement, std::int64_t> mult_;
    std::int64_t length_ = 0;
};

GroupElement sigma(const GSequence& s);

/// No nonempty sub-multiset sums to zero. Incremental subset-sum expansion.
bool is_zero_sum_free(const GSequence& s);

/// Sequence literal "1,0x4;0,1x9"; multiplicity suffix optional. Empty string is the empty sequence.
std::string to_literal(const GSequence& s);

} // namespace zsum
