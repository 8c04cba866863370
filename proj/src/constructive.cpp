#include "zsum/constructive.hpp"

#include "zsum/error.hpp"
#include "zsum/field.hpp"
#include "zsum/g0.hpp"

#include <algorithm>
#include <functional>

namespace zsum {

namespace {

bool is_unit_slope(const GroupElement& g)
{
    return g.coords[1] == 1;
}

bool in_multiple_family(const GroupElement& g, std::int64_t m)
{
    return g.coords[1] % m == 0;
}

void require_verified(const CoverCertificate& cert, const char* what)
{
    if (!verify_cover(cert)) {
        throw Error(ErrorKind::InternalCoverFailure, std::string(what) + " does not cover its target");
    }
}

} // namespace

std::vector<Character> plane_characters(const SplittingField& field, const Character& shift)
{
    const Rank2Basis basis = standard_basis_rank2(field.group);
    const Character ps = psi(field);
    const Character ph_n = phi(field).pow(basis.n);
    std::vector<Character> out;
    for (std::int64_t u = 0; u < basis.m; ++u) {
        for (std::int64_t v = 0; v < basis.m; ++v) {
            out.push_back(shift * ps.pow(u) * ph_n.pow(v));
        }
    }
    return out;
}

CoverCertificate build_parallel_cover(const SplittingField& field, const std::vector<GroupElement>& entries,
                                      std::int64_t s, const Character& shift)
{
    const Group& G = field.group;
    const Rank2Basis basis = standard_basis_rank2(G);
    const std::int64_t m = basis.m;
    const std::int64_t n = basis.n;
    if (s < 0 || s > m) {
        throw Error(ErrorKind::PreconditionViolated, "s must lie in [0, m]");
    }
    if (static_cast<std::int64_t>(entries.size()) != s + (m - s) * m) {
        throw Error(ErrorKind::PreconditionViolated,
                    "need s + (m - s) m = " + std::to_string(s + (m - s) * m) + " entries");
    }
    for (const auto& g : entries) {
        if (!G.contains(g)) {
            throw Error(ErrorKind::GroupMismatch, "(" + to_literal(g) + ") is not in C[" + to_literal(G) + "]");
        }
    }

    const Character ps = psi(field);
    const Character ph = phi(field);
    const auto head_begin = entries.begin();
    const auto head_end = entries.begin() + s;
    const bool equal_unit = s > 0 && is_unit_slope(entries[0]) &&
                            std::all_of(head_begin, head_end, [&](const auto& g) { return g == entries[0]; });
    const bool multiples =
        std::all_of(head_begin, head_end, [&](const auto& g) { return in_multiple_family(g, m); });
    if (!equal_unit && !multiples) {
        throw Error(ErrorKind::PreconditionViolated,
                    "the first s entries must all equal k e1 + e2 or all lie in {k e1 + m l e2}");
    }

    // L = <lambda>; tau(i) runs over the cosets of L in <psi, phi^n>
    Character lambda = ph.pow(n);
    std::function<Character(std::int64_t)> tau = [&](std::int64_t i) { return ps.pow(i); };
    if (equal_unit) {
        const std::int64_t k = entries[0].coords[0];
        lambda = ps * ph.pow(-n * k);
        tau = [&](std::int64_t i) { return ph.pow(n * i); };
    }

    CoverCertificate cert{field, entries, plane_characters(field, shift), {}};
    for (std::int64_t i = 0; i < s; ++i) {
        cert.assignments.push_back({static_cast<std::size_t>(i), shift * tau(i)});
    }
    std::size_t next = static_cast<std::size_t>(s);
    for (std::int64_t i = s; i < m; ++i) {
        for (std::int64_t j = 0; j < m; ++j) {
            cert.assignments.push_back({next++, shift * tau(i) * lambda.pow(j)});
        }
    }
    require_verified(cert, "parallel cover");
    return cert;
}

CoverCertificate build_parallel_cover(const SplittingField& field, const std::vector<GroupElement>& entries,
                                      std::int64_t s)
{
    return build_parallel_cover(field, entries, s, Character::trivial(field));
}

CoverCertificate build_star_cover(const SplittingField& field, const GroupElement& g, const Character& shift)
{
    const Group& G = field.group;
    const Rank2Basis basis = standard_basis_rank2(G);
    const std::int64_t p = basis.m;
    if (!is_prime(static_cast<std::uint64_t>(p))) {
        throw Error(ErrorKind::PreconditionViolated, "star cover needs G = C_p + C_pn with p prime");
    }
    if (!G.contains(g) || !in_multiple_family(g, p)) {
        throw Error(ErrorKind::PreconditionViolated, "g must be of the form k e1 + p l e2");
    }
    std::vector<GroupElement> entries;
    for (std::int64_t i = 0; i < p; ++i) {
        entries.push_back(G.element({i, 1}));
    }
    entries.push_back(g);

    CoverCertificate cert{field, entries, plane_characters(field, shift), {}};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        cert.assignments.push_back({i, shift});
    }
    require_verified(cert, "star cover");
    return cert;
}

CoverCertificate build_star_cover(const SplittingField& field, const GroupElement& g)
{
    return build_star_cover(field, g, Character::trivial(field));
}

CoverCertificate cover_small_p(const SplittingField& field, const GSequence& s)
{
    const Group& G = field.group;
    const Rank2Basis basis = standard_basis_rank2(G);
    const std::int64_t p = basis.m;
    const std::int64_t n = basis.n;
    if (p != 2 && p != 3) {
        throw Error(ErrorKind::PreconditionViolated, "cover_small_p needs G = C_p + C_pn with p in {2, 3}");
    }
    if (!(s.group() == G)) {
        throw Error(ErrorKind::GroupMismatch, "sequence is not over the field's group");
    }
    if (s.length() != (n + 1) * p - 1) {
        throw Error(ErrorKind::PreconditionViolated, "need |S| = d*(G) + 1 = " + std::to_string((n + 1) * p - 1));
    }
    const auto g0 = g0_set(G);
    for (const auto& [g, k] : s.multiplicities()) {
        if (!std::binary_search(g0.begin(), g0.end(), g)) {
            throw Error(ErrorKind::PreconditionViolated, "(" + to_literal(g) + ") is not in G0");
        }
    }

    const auto entries = s.entries();
    // type k for k e1 + e2, type p for the rest of G0
    auto type_of = [&](const GroupElement& g) { return is_unit_slope(g) ? g.coords[0] : p; };
    std::vector<std::vector<std::size_t>> by_type(static_cast<std::size_t>(p + 1));
    for (std::size_t i = 0; i < entries.size(); ++i) {
        by_type[static_cast<std::size_t>(type_of(entries[i]))].push_back(i);
    }

    const Character ph = phi(field);
    CoverCertificate cert{field, entries, all_characters(field), {}};
    auto absorb = [&](const CoverCertificate& part, const std::vector<std::size_t>& positions) {
        for (const auto& a : part.assignments) {
            cert.assignments.push_back({positions[a.entry], a.chi});
        }
    };
    auto take = [&](std::size_t type, std::size_t count) {
        auto& pool = by_type[type];
        if (pool.size() < count) {
            throw Error(ErrorKind::InternalCoverFailure, "leftover has unexpected shape");
        }
        std::vector<std::size_t> out(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
        pool.erase(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
        return out;
    };
    auto elements_at = [&](const std::vector<std::size_t>& positions) {
        std::vector<GroupElement> out;
        for (auto i : positions) {
            out.push_back(entries[i]);
        }
        return out;
    };

    // tuple i covers phi^{n-i} <psi, phi^n>
    std::int64_t tuples = 0;
    for (std::size_t t = 0; t < by_type.size(); ++t) {
        while (tuples < n && static_cast<std::int64_t>(by_type[t].size()) >= p) {
            ++tuples;
            const auto positions = take(t, static_cast<std::size_t>(p));
            absorb(build_parallel_cover(field, elements_at(positions), p, ph.pow(n - tuples)), positions);
        }
    }

    const std::int64_t r = n + 1 - tuples;
    if (tuples < n) {
        if (r <= p - 1) {
            // p = 3, r = 2: five leftovers in four types, so two share a type
            std::size_t pair_type = by_type.size();
            for (std::size_t t = 0; t < by_type.size(); ++t) {
                if (by_type[t].size() >= 2) {
                    pair_type = t;
                    break;
                }
            }
            if (pair_type == by_type.size() || r != 2) {
                throw Error(ErrorKind::InternalCoverFailure, "no pigeonhole pair among the leftover entries");
            }
            std::vector<std::size_t> positions = take(pair_type, 2);
            for (auto& pool : by_type) {
                positions.insert(positions.end(), pool.begin(), pool.end());
                pool.clear();
            }
            absorb(build_parallel_cover(field, elements_at(positions), 2, Character::trivial(field)), positions);
        } else if (r == p) {
            // each unit-slope type occurs p - 1 times, plus p - 1 further elements h_i
            for (std::int64_t i = 0; i <= p - 2; ++i) {
                std::vector<std::size_t> positions;
                for (std::int64_t k = 0; k < p; ++k) {
                    auto one = take(static_cast<std::size_t>(k), 1);
                    positions.push_back(one.front());
                }
                auto h = take(static_cast<std::size_t>(p), 1);
                positions.push_back(h.front());
                absorb(build_star_cover(field, entries[h.front()], ph.pow(i)), positions);
            }
        } else {
            throw Error(ErrorKind::InternalCoverFailure, "leftover has unexpected shape");
        }
    }
    require_verified(cert, "cover_small_p certificate");
    return cert;
}

} // namespace zsum
