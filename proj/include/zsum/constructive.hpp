#pragma once

#include "zsum/character.hpp"
#include "zsum/cover.hpp"
#include "zsum/sequence.hpp"

#include <cstdint>
#include <vector>

namespace zsum {

/// The m^2 characters shift * psi^u * phi^{nv}, u, v in [0, m), of the coset
/// shift * <psi, phi^n> for G = C_m + C_{mn}.
std::vector<Character> plane_characters(const SplittingField& field, const Character& shift);

/// Covers shift * <psi, phi^n> with entries g_1 .. g_{s + (m-s)m}, where the first s
/// entries are all equal to k e1 + e2, or all lie in {k e1 + m l e2}. The first s
/// entries take the parallel cosets of their common perp line L; the remaining
/// (m - s) cosets of L are covered point by point. Throws PreconditionViolated.
CoverCertificate build_parallel_cover(const SplittingField& field, const std::vector<GroupElement>& entries,
                                      std::int64_t s, const Character& shift);
CoverCertificate build_parallel_cover(const SplittingField& field, const std::vector<GroupElement>& entries,
                                      std::int64_t s);

/// For m = p prime and g in {k e1 + p l e2}: the p + 1 subgroups <i e1 + e2>^perp
/// (i in [0, p)) and <g>^perp cover <psi, phi^n>; shifted by `shift` they cover its coset.
/// Entries of the certificate are (0e1+e2, ..., (p-1)e1+e2, g).
CoverCertificate build_star_cover(const SplittingField& field, const GroupElement& g, const Character& shift);
CoverCertificate build_star_cover(const SplittingField& field, const GroupElement& g);

/// Full cover of G^ for G = C_p + C_{pn}, p in {2, 3}, and any S over G0 with
/// |S| = d*(G) + 1. Groups S into p-tuples of equal type for the parallel cover of
/// one plane coset each, then handles the remainder by a pigeonhole pair (r < p)
/// or p - 1 star covers (r = p). Throws PreconditionViolated, or
/// InternalCoverFailure if the assembled certificate does not verify.
CoverCertificate cover_small_p(const SplittingField& field, const GSequence& s);

} // namespace zsum
