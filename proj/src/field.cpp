#include "zsum/field.hpp"

#include "zsum/error.hpp"

#include <string>

namespace zsum {

bool is_prime(std::uint64_t n)
{
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q)
{
    if (!is_prime(q)) {
        throw Error(ErrorKind::PreconditionViolated, std::to_string(q) + " is not prime");
    }
    if (q >= (std::uint64_t{1} << 31)) {
        throw Error(ErrorKind::PreconditionViolated, "prime " + std::to_string(q) + " too large");
    }
}

Residue PrimeField::pow(Residue a, std::uint64_t e) const
{
    Residue result = 1 % q_;
    a %= q_;
    while (e) {
        if (e & 1U) {
            result = mul(result, a);
        }
        a = mul(a, a);
        e >>= 1U;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const
{
    if (a % q_ == 0) {
        throw Error(ErrorKind::ZeroUnit, "0 has no inverse mod " + std::to_string(q_));
    }
    return pow(a, q_ - 2);
}

std::uint64_t multiplicative_order(Residue a, std::uint64_t q)
{
    a %= q;
    if (a == 0) {
        throw Error(ErrorKind::ZeroUnit, "0 has no multiplicative order");
    }
    std::uint64_t k = 1;
    Residue x = a;
    while (x != 1 % q) {
        x = (x * a) % q;
        ++k;
    }
    return k;
}

Residue SplittingField::root_power(std::int64_t e) const
{
    const std::int64_t n = group.exponent();
    std::int64_t r = e % n;
    if (r < 0) {
        r += n;
    }
    return field.pow(zeta, static_cast<std::uint64_t>(r));
}

std::uint64_t splitting_prime(std::int64_t exponent, std::size_t k)
{
    const auto n = static_cast<std::uint64_t>(exponent);
    for (std::uint64_t q = 2;; ++q) {
        if ((q - 1) % n == 0 && is_prime(q)) {
            if (k == 0) {
                return q;
            }
            --k;
        }
    }
}

SplittingField make_splitting_field(const Group& group, std::optional<std::uint64_t> q_override)
{
    const std::int64_t n = group.exponent();
    const std::uint64_t q = q_override ? *q_override : splitting_prime(n);
    if (!is_prime(q)) {
        throw Error(ErrorKind::NotSplitting, std::to_string(q) + " is not prime");
    }
    if ((q - 1) % static_cast<std::uint64_t>(n) != 0) {
        throw Error(ErrorKind::NotSplitting,
                    std::to_string(n) + " does not divide " + std::to_string(q) + " - 1");
    }
    const PrimeField field(q);
    const std::uint64_t cofactor = (q - 1) / static_cast<std::uint64_t>(n);
    for (Residue h = 1; h < q; ++h) {
        const Residue z = field.pow(h, cofactor);
        if (multiplicative_order(z, q) == static_cast<std::uint64_t>(n)) {
            return SplittingField{group, field, z};
        }
    }
    throw Error(ErrorKind::NotSplitting, "no primitive root of unity found mod " + std::to_string(q));
}

} // namespace zsum
