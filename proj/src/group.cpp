#include "zsum/group.hpp"

#include "zsum/error.hpp"

#include <numeric>

namespace zsum {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n)
{
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::string join(const std::vector<std::int64_t>& values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace

Group::Group(std::vector<std::int64_t> invariants) : invariants_(std::move(invariants))
{
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
        if (invariants_[i] < 2) {
            throw Error(ErrorKind::NonDivisibilityChain,
                        "invariant " + std::to_string(invariants_[i]) + " is not >= 2");
        }
        if (i > 0 && invariants_[i] % invariants_[i - 1] != 0) {
            throw Error(ErrorKind::NonDivisibilityChain,
                        std::to_string(invariants_[i - 1]) + " does not divide " + std::to_string(invariants_[i]));
        }
        order_ *= invariants_[i];
    }
}

Group make_group(std::vector<std::int64_t> invariants)
{
    return Group(std::move(invariants));
}

std::int64_t Group::d_star() const
{
    std::int64_t total = 0;
    for (auto n : invariants_) {
        total += n - 1;
    }
    return total;
}

GroupElement Group::element(std::vector<std::int64_t> coords) const
{
    if (coords.size() != rank()) {
        throw Error(ErrorKind::GroupMismatch,
                    "expected " + std::to_string(rank()) + " coordinates, got " + std::to_string(coords.size()));
    }
    for (std::size_t i = 0; i < coords.size(); ++i) {
        coords[i] = mod(coords[i], invariants_[i]);
    }
    return GroupElement{std::move(coords)};
}

bool Group::contains(const GroupElement& g) const
{
    if (g.coords.size() != rank()) {
        return false;
    }
    for (std::size_t i = 0; i < rank(); ++i) {
        if (g.coords[i] < 0 || g.coords[i] >= invariants_[i]) {
            return false;
        }
    }
    return true;
}

void Group::require(const GroupElement& g) const
{
    if (!contains(g)) {
        throw Error(ErrorKind::GroupMismatch, "(" + join(g.coords) + ") is not an element of C[" + join(invariants_) + "]");
    }
}

GroupElement Group::add(const GroupElement& g, const GroupElement& h) const
{
    require(g);
    require(h);
    GroupElement out = g;
    for (std::size_t i = 0; i < rank(); ++i) {
        out.coords[i] = (g.coords[i] + h.coords[i]) % invariants_[i];
    }
    return out;
}

GroupElement Group::negate(const GroupElement& g) const
{
    return scalar_mul(-1, g);
}

GroupElement Group::scalar_mul(std::int64_t k, const GroupElement& g) const
{
    require(g);
    GroupElement out = g;
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::int64_t n = invariants_[i];
        out.coords[i] = mod(mod(k, n) * g.coords[i], n);
    }
    return out;
}

std::int64_t Group::order_of(const GroupElement& g) const
{
    require(g);
    std::int64_t result = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        const std::int64_t n = invariants_[i];
        result = std::lcm(result, n / std::gcd(g.coords[i], n));
    }
    return result;
}

std::size_t Group::index_of(const GroupElement& g) const
{
    require(g);
    std::size_t index = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        index = index * static_cast<std::size_t>(invariants_[i]) + static_cast<std::size_t>(g.coords[i]);
    }
    return index;
}

GroupElement Group::element_at(std::size_t index) const
{
    GroupElement g = identity();
    for (std::size_t i = rank(); i-- > 0;) {
        const auto n = static_cast<std::size_t>(invariants_[i]);
        g.coords[i] = static_cast<std::int64_t>(index % n);
        index /= n;
    }
    return g;
}

std::vector<GroupElement> Group::elements() const
{
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(order_));
    for (std::size_t i = 0; i < static_cast<std::size_t>(order_); ++i) {
        out.push_back(element_at(i));
    }
    return out;
}

StructureStats structure_stats(const Group& group)
{
    return {group.d_star(), group.exponent(), static_cast<std::int64_t>(group.rank()), group.order()};
}

Rank2Basis standard_basis_rank2(const Group& group)
{
    if (group.rank() != 2) {
        throw Error(ErrorKind::NotRank2, "group C[" + join(group.invariants()) + "] has rank " +
                                             std::to_string(group.rank()));
    }
    const auto m = group.invariants()[0];
    const auto n = group.invariants()[1] / m;
    return {GroupElement{{1, 0}}, GroupElement{{0, 1}}, m, n};
}

std::string to_literal(const Group& group)
{
    return join(group.invariants());
}

std::string to_literal(const GroupElement& g)
{
    return join(g.coords);
}

GroupTable::GroupTable(const Group& group) : size_(static_cast<std::size_t>(group.order()))
{
    const auto elements = group.elements();
    add_.resize(size_ * size_);
    neg_.resize(size_);
    order_.resize(size_);
    for (std::size_t a = 0; a < size_; ++a) {
        for (std::size_t b = 0; b < size_; ++b) {
            add_[a * size_ + b] = static_cast<std::uint32_t>(group.index_of(group.add(elements[a], elements[b])));
        }
        neg_[a] = static_cast<std::uint32_t>(group.index_of(group.negate(elements[a])));
        order_[a] = group.order_of(elements[a]);
    }
}

} // namespace zsum
