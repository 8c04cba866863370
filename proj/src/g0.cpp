#include "zsum/g0.hpp"

#include "zsum/error.hpp"

#include <algorithm>
#include <numeric>

namespace zsum {

namespace {

std::vector<std::int64_t> prime_divisors(std::int64_t n)
{
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

std::int64_t valuation(std::int64_t n, std::int64_t p)
{
    std::int64_t v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<std::int64_t> admissible_multipliers(std::int64_t m, std::int64_t mn)
{
    std::vector<std::int64_t> ds{1};
    for (auto p : prime_divisors(m)) {
        const std::int64_t cap = valuation(mn, p);
        std::vector<std::int64_t> next;
        for (auto d : ds) {
            std::int64_t power = 1;
            for (std::int64_t u = 0; u <= cap; ++u) {
                next.push_back(d * power);
                power *= p;
            }
        }
        ds = std::move(next);
    }
    return ds;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
    a %= m;
    for (std::int64_t x = 1; x < m; ++x) {
        if (a * x % m == 1) {
            return x;
        }
    }
    return 1 % m == 0 ? 0 : 1; // m = 1
}

} // namespace

std::vector<GroupElement> g0_set(const Group& group)
{
    const Rank2Basis basis = standard_basis_rank2(group);
    const std::int64_t m = basis.m;
    const std::int64_t mn = m * basis.n;
    std::vector<GroupElement> out{basis.e1};
    for (auto d : admissible_multipliers(m, mn)) {
        if (d % mn == 0) {
            continue;
        }
        for (std::int64_t k = 0; k < m; ++k) {
            out.push_back(group.element({k, d}));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

G0Reduction g0_reduce(const Group& group, const GroupElement& g)
{
    const Rank2Basis basis = standard_basis_rank2(group);
    if (!group.contains(g)) {
        throw Error(ErrorKind::GroupMismatch, "(" + to_literal(g) + ") is not in C[" + to_literal(group) + "]");
    }
    const std::int64_t m = basis.m;
    const std::int64_t k = g.coords[0];
    const std::int64_t l = g.coords[1];
    if (l == 0) {
        return {k, basis.e1};
    }

    // l = d * q with d built from the primes dividing m and gcd(q, m) = 1;
    // then g = q * (a k e1 + d e2) with a q = 1 (mod m).
    std::int64_t d = 1;
    for (auto p : prime_divisors(m)) {
        for (std::int64_t v = valuation(l, p); v > 0; --v) {
            d *= p;
        }
    }
    const std::int64_t q = l / d;
    const std::int64_t a = inverse_mod(q, m);
    const GroupElement base = group.element({a * k, d});
    const auto g0 = g0_set(group);
    if (std::binary_search(g0.begin(), g0.end(), base) && group.scalar_mul(q, base) == g) {
        return {q, base};
    }

    // d exceeded the exponent cap of G0; some other base still works
    for (const auto& b : g0) {
        const std::int64_t ord = group.order_of(b);
        for (std::int64_t mult = 1; mult < ord; ++mult) {
            if (group.scalar_mul(mult, b) == g) {
                return {mult, b};
            }
        }
    }
    throw Error(ErrorKind::InternalCoverFailure, "(" + to_literal(g) + ") is not a multiple of any G0 element");
}

} // namespace zsum
