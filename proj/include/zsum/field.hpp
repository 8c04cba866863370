#pragma once

#include "zsum/group.hpp"

#include <cstdint>
#include <optional>

namespace zsum {

using Residue = std::uint64_t;

bool is_prime(std::uint64_t n);

/// Multiplicative order of a modulo q (a must be a unit).
std::uint64_t multiplicative_order(Residue a, std::uint64_t q);

/// F_q for a prime q. Residues are kept in [0, q).
class PrimeField {
public:
    PrimeField() = default;
    explicit PrimeField(std::uint64_t q);

    std::uint64_t q() const { return q_; }

    Residue reduce(std::int64_t a) const
    {
        const auto m = static_cast<std::int64_t>(q_);
        const std::int64_t r = a % m;
        return static_cast<Residue>(r < 0 ? r + m : r);
    }
    Residue add(Residue a, Residue b) const { return (a + b) % q_; }
    Residue sub(Residue a, Residue b) const { return (a + q_ - b) % q_; }
    Residue neg(Residue a) const { return (q_ - a) % q_; }
    Residue mul(Residue a, Residue b) const { return (a * b) % q_; }
    Residue pow(Residue a, std::uint64_t e) const;
    /// Throws ZeroUnit for 0.
    Residue inv(Residue a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint64_t q_ = 2;
};

/// F_q with exp(G) | q - 1 and a fixed primitive exp(G)-th root of unity zeta.
struct SplittingField {
    Group group;
    PrimeField field;
    Residue zeta = 1;

    /// zeta^e for any integer e.
    Residue root_power(std::int64_t e) const;

    friend bool operator==(const SplittingField&, const SplittingField&) = default;
};

/// Default q is the smallest prime with q = 1 (mod exp(G)); zeta = h^((q-1)/exp(G))
/// for the smallest h >= 1 giving exact order exp(G). Throws NotSplitting if the
/// override violates the congruence.
SplittingField make_splitting_field(const Group& group, std::optional<std::uint64_t> q_override = std::nullopt);

/// The k-th smallest prime q = 1 (mod exponent), k = 0 being the smallest.
std::uint64_t splitting_prime(std::int64_t exponent, std::size_t k = 0);

} // namespace zsum
