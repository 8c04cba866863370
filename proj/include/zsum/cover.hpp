#pragma once

#include "zsum/budget.hpp"
#include "zsum/character.hpp"
#include "zsum/sequence.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace zsum {

/// Entry `entry` of the sequence contributes the coset chi * <g_entry>^perp.
struct Assignment {
    std::size_t entry;
    Character chi;
};

/// Witness that target is contained in the union of the assigned cosets.
/// Entries are an ordered list; each entry is used at most once.
struct CoverCertificate {
    SplittingField field;
    std::vector<GroupElement> entries;
    std::vector<Character> target;
    std::vector<Assignment> assignments;
};

/// Re-checks a certificate by enumerating the target characters.
bool verify_cover(const CoverCertificate& cert);

/// Some choice of chi_i with target contained in the union of chi_i <g_i>^perp, or
/// nullopt when none exists. Backtracking: take the uncovered character lying in
/// the fewest distinct available cosets and branch over the unused entries whose
/// coset through it is determined. Sequences containing 0 are covered at once.
std::optional<CoverCertificate> exists_cover(const SplittingField& field, std::span<const Character> target,
                                             const GSequence& s, const Budget& budget = Budget::unlimited());

namespace detail {

/// Reusable covering search over one splitting field (character table built once).
class CoverSolver {
public:
    explicit CoverSolver(const SplittingField& field);

    struct Choice {
        std::size_t type;      ///< position in the element list passed to solve()
        std::size_t character; ///< Character::index() of the coset representative
    };

    /// elements: distinct element indices with multiplicities counts.
    /// target: character indices. Returns the chosen cosets, or nullopt.
    std::optional<std::vector<Choice>> solve(std::span<const std::size_t> target,
                                             std::span<const std::size_t> elements,
                                             std::span<const std::int64_t> counts, const Budget& budget) const;

    const SplittingField& field() const { return field_; }
    const CharacterTable& table() const { return table_; }

private:
    SplittingField field_;
    CharacterTable table_;
};

} // namespace detail

} // namespace zsum
