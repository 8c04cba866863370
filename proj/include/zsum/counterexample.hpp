#pragma once

#include "zsum/budget.hpp"
#include "zsum/sequence.hpp"

#include <array>
#include <cstdint>

namespace zsum {

/// S = prod_i (k_i e1 + e2)^{m_i} over G = C_p + C_{pn}, four distinct slopes.
struct CounterexampleSpec {
    std::int64_t p = 5;
    std::int64_t n = 2;
    std::array<std::int64_t, 4> slopes{0, 1, 2, 3};
    std::array<std::int64_t, 4> multiplicities{};

    /// slopes 0..3, m = ((n-2)p + (p-1), p-1, p-1, 2); total length p + pn - 1.
    static CounterexampleSpec standard(std::int64_t p, std::int64_t n);

    std::int64_t length() const;
    Group group() const;
    GSequence sequence() const;
    /// Throws PreconditionViolated on a malformed spec (p not prime, n < 1, bad slopes).
    void validate() const;
};

/// The standard sequence for p >= 5 prime, n >= 2; PreconditionViolated otherwise.
GSequence build_counterexample(std::int64_t p, std::int64_t n);

struct UncoverableReport {
    bool uncoverable = false;
    /// All distributions when uncoverable; otherwise 1 + the position of the first
    /// covering distribution in canonical order.
    std::uint64_t distributions_checked = 0;
};

struct VerifyConfig {
    bool parallel = true;
    /// Above this many distributions BudgetExceeded is raised before searching.
    std::uint64_t max_distributions = 50'000'000;
};

/// Every coset chi <k_i e1 + e2>^perp is a line of slope k_i inside one of the n
/// plane cosets of <psi, phi^n>, so G^ is covered iff the m_i lines of each slope can
/// be split among the planes so that each plane is covered. Enumerates every split
/// (at most p lines of a slope per plane) against a table of plane_coverable.
UncoverableReport verify_uncoverable(const CounterexampleSpec& spec, const VerifyConfig& config = {},
                                     const Budget& budget = Budget::unlimited());

namespace reference {

/// Serial, lazily memoized plane_coverable, stops at the first covering split.
UncoverableReport verify_uncoverable(const CounterexampleSpec& spec, const Budget& budget = Budget::unlimited());

} // namespace reference

} // namespace zsum
