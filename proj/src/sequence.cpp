#include "zsum/sequence.hpp"

#include "zsum/error.hpp"

#include <vector>

namespace zsum {

GSequence::GSequence(Group group, const std::vector<GroupElement>& entries) : group_(std::move(group))
{
    for (const auto& g : entries) {
        push(g);
    }
}

void GSequence::push(const GroupElement& g, std::int64_t count)
{
    if (!group_.contains(g)) {
        throw Error(ErrorKind::GroupMismatch, "(" + to_literal(g) + ") is not in C[" + to_literal(group_) + "]");
    }
    if (count < 0) {
        throw Error(ErrorKind::PreconditionViolated, "negative multiplicity");
    }
    if (count == 0) {
        return;
    }
    mult_[g] += count;
    length_ += count;
}

void GSequence::pop(const GroupElement& g)
{
    auto it = mult_.find(g);
    if (it == mult_.end()) {
        throw Error(ErrorKind::PreconditionViolated, "(" + to_literal(g) + ") is not in the sequence");
    }
    if (--it->second == 0) {
        mult_.erase(it);
    }
    --length_;
}

std::int64_t GSequence::multiplicity(const GroupElement& g) const
{
    auto it = mult_.find(g);
    return it == mult_.end() ? 0 : it->second;
}

std::vector<GroupElement> GSequence::entries() const
{
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(length_));
    for (const auto& [g, k] : mult_) {
        for (std::int64_t i = 0; i < k; ++i) {
            out.push_back(g);
        }
    }
    return out;
}

bool GSequence::divides(const GSequence& other) const
{
    if (!(group_ == other.group_)) {
        return false;
    }
    for (const auto& [g, k] : mult_) {
        if (other.multiplicity(g) < k) {
            return false;
        }
    }
    return true;
}

GroupElement sigma(const GSequence& s)
{
    const Group& G = s.group();
    GroupElement total = G.identity();
    for (const auto& [g, k] : s.multiplicities()) {
        total = G.add(total, G.scalar_mul(k, g));
    }
    return total;
}

bool is_zero_sum_free(const GSequence& s)
{
    const Group& G = s.group();
    const GroupTable table(G);
    const std::size_t zero = 0;
    // sums[x] : x is the sum of some nonempty sub-multiset seen so far
    std::vector<char> sums(table.size(), 0);
    std::vector<std::size_t> reached;
    for (const auto& g : s.entries()) {
        const std::size_t gi = G.index_of(g);
        std::vector<std::size_t> fresh{gi};
        for (auto x : reached) {
            fresh.push_back(table.add(x, gi));
        }
        for (auto y : fresh) {
            if (y == zero) {
                return false;
            }
            if (!sums[y]) {
                sums[y] = 1;
                reached.push_back(y);
            }
        }
    }
    return true;
}

std::string to_literal(const GSequence& s)
{
    std::string out;
    for (const auto& [g, k] : s.multiplicities()) {
        if (!out.empty()) {
            out += ';';
        }
        out += to_literal(g);
        if (k != 1) {
            out += 'x' + std::to_string(k);
        }
    }
    return out;
}

} // namespace zsum
