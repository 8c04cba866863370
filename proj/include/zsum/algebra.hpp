#pragma once

#include "zsum/budget.hpp"
#include "zsum/character.hpp"
#include "zsum/field.hpp"
#include "zsum/group.hpp"
#include "zsum/sequence.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace zsum {

/// The ring F_q[G]. When built from a SplittingField it also knows zeta, which
/// character-based operations require.
struct GroupAlgebra {
    Group group;
    PrimeField field;
    std::optional<Residue> zeta;

    static GroupAlgebra over(const SplittingField& f) { return {f.group, f.field, f.zeta}; }
    static GroupAlgebra over(const Group& g, const PrimeField& f) { return {g, f, std::nullopt}; }

    /// Throws NotSplitting when zeta is absent.
    SplittingField splitting_field() const;

    friend bool operator==(const GroupAlgebra&, const GroupAlgebra&) = default;
};

/// Element sum_g a_g X^g of F_q[G]; only nonzero coefficients are stored,
/// keyed by element index (canonical coordinate order).
class AlgebraElement {
public:
    explicit AlgebraElement(GroupAlgebra ring) : ring_(std::move(ring)) {}

    static AlgebraElement constant(const GroupAlgebra& ring, std::int64_t c);
    static AlgebraElement monomial(const GroupAlgebra& ring, const GroupElement& g, std::int64_t c = 1);

    const GroupAlgebra& ring() const { return ring_; }
    const Group& group() const { return ring_.group; }
    const PrimeField& field() const { return ring_.field; }

    Residue coefficient(const GroupElement& g) const;
    void set_coefficient(const GroupElement& g, std::int64_t c);
    bool is_zero() const { return coeffs_.empty(); }
    std::vector<std::pair<GroupElement, Residue>> terms() const;
    const std::map<std::size_t, Residue>& raw() const { return coeffs_; }

    AlgebraElement operator+(const AlgebraElement& other) const;
    AlgebraElement operator-(const AlgebraElement& other) const;
    AlgebraElement operator*(const AlgebraElement& other) const;
    AlgebraElement scaled(Residue c) const;

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b)
    {
        return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
    }

private:
    void check_compatible(const AlgebraElement& other) const;
    void set_raw(std::size_t index, Residue value);

    GroupAlgebra ring_;
    std::map<std::size_t, Residue> coeffs_;
};

/// Convolution product; FieldMismatch / GroupMismatch on incompatible operands.
AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g);

/// prod_i (X^{g_i} - a_i) over S in canonical entry order. Throws ZeroUnit if some a_i = 0.
AlgebraElement binomial_product(const GroupAlgebra& ring, const GSequence& s, std::span<const std::int64_t> a);

/// chi(sum a_g X^g) = sum a_g chi(g).
Residue char_eval(const Character& chi, const AlgebraElement& f);

/// f = 0 iff every character vanishes on f. Throws NotSplitting without zeta.
bool is_zero_via_chars(const AlgebraElement& f);

/// f^{-1} = 1/|G| sum_g ( sum_chi chi(-g)/chi(f) ) X^g; NotUnit if some chi(f) = 0.
AlgebraElement invert(const AlgebraElement& f);

/// Cofactor sum_{j<k} X^{jg} a^{k-1-j}, so that (X^g - a) * cofactor = X^{kg} - a^k.
AlgebraElement multiple_factorization(const GroupAlgebra& ring, const GroupElement& g, std::int64_t k,
                                      std::int64_t a);

struct DgrConfig {
    std::int64_t max_order = 64;
    bool parallel = true;
};

struct DgrResult {
    std::int64_t l = 0;
    GSequence witness; ///< lexicographically smallest sequence attaining l
};

/// Largest l <= l_cap such that some S over G\{0} of length l has
/// binomial_product(S, a) != 0 for every a in (F_q^x)^l. Works for any prime q.
DgrResult d_gr_brute(const Group& group, const PrimeField& field, std::int64_t l_cap, const DgrConfig& config = {},
                     const Budget& budget = Budget::unlimited());

namespace reference {

/// Level-by-level enumeration with an odometer over all a-vectors; serial.
DgrResult d_gr_brute(const Group& group, const PrimeField& field, std::int64_t l_cap,
                     const Budget& budget = Budget::unlimited());

/// True iff some a in (F_q^x)^|S| makes binomial_product(S, a) vanish.
bool some_binomial_product_vanishes(const GroupAlgebra& ring, const GSequence& s,
                                    const Budget& budget = Budget::unlimited());

} // namespace reference

} // namespace zsum
