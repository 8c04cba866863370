#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zsum {

/// Coordinates of an element of C_{n_1} + ... + C_{n_r}, always reduced into [0, n_i).
struct GroupElement {
    std::vector<std::int64_t> coords;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite abelian group in invariant-factor form 1 < n_1 | n_2 | ... | n_r.
/// The empty invariant list is the trivial group.
class Group {
public:
    Group() = default;
    explicit Group(std::vector<std::int64_t> invariants);

    const std::vector<std::int64_t>& invariants() const { return invariants_; }
    std::int64_t order() const { return order_; }
    std::int64_t exponent() const { return invariants_.empty() ? 1 : invariants_.back(); }
    std::size_t rank() const { return invariants_.size(); }
    std::int64_t d_star() const;

    GroupElement identity() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }
    /// Reduces arbitrary integer coordinates into canonical form.
    GroupElement element(std::vector<std::int64_t> coords) const;
    bool contains(const GroupElement& g) const;

    GroupElement add(const GroupElement& g, const GroupElement& h) const;
    GroupElement negate(const GroupElement& g) const;
    GroupElement scalar_mul(std::int64_t k, const GroupElement& g) const;
    std::int64_t order_of(const GroupElement& g) const;

    // Mixed-radix index, first coordinate most significant; index order equals
    // the lexicographic order on coordinate vectors.
    std::size_t index_of(const GroupElement& g) const;
    GroupElement element_at(std::size_t index) const;
    std::vector<GroupElement> elements() const;

    friend bool operator==(const Group& a, const Group& b) { return a.invariants_ == b.invariants_; }

private:
    void require(const GroupElement& g) const;

    std::vector<std::int64_t> invariants_;
    std::int64_t order_ = 1;
};

/// Validating constructor; throws NonDivisibilityChain.
Group make_group(std::vector<std::int64_t> invariants);

struct StructureStats {
    std::int64_t d_star;
    std::int64_t exponent;
    std::int64_t rank;
    std::int64_t order;
};

StructureStats structure_stats(const Group& group);

/// Distinguished basis of G = C_m + C_{mn}: e1 = (1,0) of order m, e2 = (0,1) of order mn.
struct Rank2Basis {
    GroupElement e1;
    GroupElement e2;
    std::int64_t m;
    std::int64_t n;
};

Rank2Basis standard_basis_rank2(const Group& group);

/// Group-literal form "5,10"; the trivial group prints as "".
std::string to_literal(const Group& group);
std::string to_literal(const GroupElement& g);

/// Index-based arithmetic tables for the search kernels.
class GroupTable {
public:
    explicit GroupTable(const Group& group);

    std::size_t size() const { return size_; }
    std::size_t add(std::size_t a, std::size_t b) const { return add_[a * size_ + b]; }
    std::size_t neg(std::size_t a) const { return neg_[a]; }
    std::int64_t order_of(std::size_t a) const { return order_[a]; }

private:
    std::size_t size_;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
    std::vector<std::int64_t> order_;
};

} // namespace zsum
