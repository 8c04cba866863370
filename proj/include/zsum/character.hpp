#pragma once

#include "zsum/field.hpp"
#include "zsum/group.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace zsum {

/// Character of G with values in a splitting field, as an exponent vector:
/// chi(g) = zeta^( sum_i exps[i] * coords[i] * exp(G)/n_i ).
/// For G = C_m + C_{mn}, exps (1,0) is psi (psi(e1) = zeta^n, psi(e2) = 1) and
/// exps (0,1) is phi (phi(e1) = 1, phi(e2) = zeta).
class Character {
public:
    Character(SplittingField field, std::vector<std::int64_t> exps);

    static Character trivial(const SplittingField& field);

    const SplittingField& field() const { return field_; }
    const Group& group() const { return field_.group; }
    const std::vector<std::int64_t>& exps() const { return exps_; }

    /// Exponent t in Z/exp(G) with chi(g) = zeta^t.
    std::int64_t pairing(const GroupElement& g) const;
    Residue operator()(const GroupElement& g) const { return field_.root_power(pairing(g)); }

    Character operator*(const Character& other) const;
    Character pow(std::int64_t k) const;
    Character inverse() const { return pow(-1); }
    bool is_trivial() const;

    /// Position in all_characters() order.
    std::size_t index() const;

    friend bool operator==(const Character& a, const Character& b)
    {
        return a.exps_ == b.exps_ && a.field_ == b.field_;
    }
    friend bool operator<(const Character& a, const Character& b) { return a.exps_ < b.exps_; }

private:
    SplittingField field_;
    std::vector<std::int64_t> exps_;
};

/// The full dual group in exponent-vector lexicographic order; |G^| = |G|.
std::vector<Character> all_characters(const SplittingField& field);

/// Characters trivial on every generator; a subgroup of G^.
std::vector<Character> perp(const SplittingField& field, std::span<const GroupElement> generators);
std::vector<Character> perp(const SplittingField& field, const GroupElement& g);

/// psi and phi for rank-2 G = C_m + C_{mn}.
Character psi(const SplittingField& field);
Character phi(const SplittingField& field);

/// Dense value table values(chi, g) = chi(g) in F_q, indexed by Character::index() and Group::index_of().
class CharacterTable {
public:
    explicit CharacterTable(const SplittingField& field);

    std::size_t size() const { return size_; }
    Residue value(std::size_t chi, std::size_t g) const { return values_[chi * size_ + g]; }

private:
    std::size_t size_;
    std::vector<Residue> values_;
};

} // namespace zsum
