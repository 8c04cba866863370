#include "zsum/dgk.hpp"

#include "zsum/cover.hpp"
#include "zsum/detail/longest_multiset.hpp"
#include "zsum/detail/multisets.hpp"
#include "zsum/error.hpp"
#include "zsum/field.hpp"

#include <mpfr.h>

#include <numeric>

namespace zsum {

namespace {

void check_order(const Group& group, std::int64_t max_order)
{
    if (group.order() > max_order) {
        throw Error(ErrorKind::GroupTooLarge, "|G| = " + std::to_string(group.order()) + " exceeds the cap " +
                                                  std::to_string(max_order));
    }
}

GSequence to_sequence(const Group& group, const std::vector<std::size_t>& indices)
{
    GSequence s(group);
    for (auto i : indices) {
        s.push(group.element_at(i));
    }
    return s;
}

} // namespace

DgkResult dgk_brute(const Group& group, std::int64_t l_cap, const DgkConfig& config, const Budget& budget)
{
    check_order(group, config.max_order);
    const SplittingField field = make_splitting_field(group, config.prime);
    const detail::CoverSolver solver(field);
    const auto size = static_cast<std::size_t>(group.order());

    std::vector<std::size_t> target(size);
    std::iota(target.begin(), target.end(), 0);
    std::vector<std::size_t> alphabet(target.begin() + 1, target.end());

    // State: multiplicity of each element index.
    using Counts = std::vector<std::int64_t>;
    auto extend = [&](const Counts& counts, std::size_t g) -> std::optional<Counts> {
        Counts next = counts;
        ++next[g];
        std::vector<std::size_t> elements;
        std::vector<std::int64_t> mult;
        for (std::size_t i = 0; i < size; ++i) {
            if (next[i] > 0) {
                elements.push_back(i);
                mult.push_back(next[i]);
            }
        }
        if (solver.solve(target, elements, mult, budget)) {
            return std::nullopt;
        }
        return next;
    };
    auto no_bound = [](const Counts&) { return detail::kNoBound; };

    const auto found =
        detail::longest_multiset(alphabet, Counts(size, 0), l_cap, extend, no_bound, budget, config.parallel);
    return {found.length, to_sequence(group, found.witness), field.field.q()};
}

std::int64_t theorem_a_bound(const Group& group)
{
    const std::int64_t n = group.exponent();
    if (n < 2) {
        throw Error(ErrorKind::PreconditionViolated, "exp(G) must be at least 2");
    }
    const std::int64_t ratio = group.order() / n;
    if (ratio == 1) {
        return n - 1;
    }
    // ln(ratio) is irrational for ratio > 1, so the interval eventually excludes every integer
    for (mpfr_prec_t prec = 64; prec <= 4096; prec *= 2) {
        mpfr_t lo;
        mpfr_t hi;
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
        mpfr_set_si(lo, ratio, MPFR_RNDN);
        mpfr_set_si(hi, ratio, MPFR_RNDN);
        mpfr_log(lo, lo, MPFR_RNDD);
        mpfr_log(hi, hi, MPFR_RNDU);
        mpfr_mul_si(lo, lo, n, MPFR_RNDD);
        mpfr_mul_si(hi, hi, n, MPFR_RNDU);
        mpfr_add_si(lo, lo, n - 1, MPFR_RNDD);
        mpfr_add_si(hi, hi, n - 1, MPFR_RNDU);
        mpfr_floor(lo, lo);
        mpfr_floor(hi, hi);
        const long flo = mpfr_get_si(lo, MPFR_RNDN);
        const long fhi = mpfr_get_si(hi, MPFR_RNDN);
        mpfr_clear(lo);
        mpfr_clear(hi);
        if (flo == fhi) {
            return flo;
        }
    }
    throw Error(ErrorKind::InternalCoverFailure, "could not separate the bound from an integer");
}

namespace reference {

DgkResult dgk_brute(const Group& group, std::int64_t l_cap, std::optional<std::uint64_t> prime, const Budget& budget)
{
    const SplittingField field = make_splitting_field(group, prime);
    const auto chars = all_characters(field);
    std::vector<std::size_t> alphabet;
    for (std::size_t i = 1; i < static_cast<std::size_t>(group.order()); ++i) {
        alphabet.push_back(i);
    }
    DgkResult result{0, GSequence(group), field.field.q()};
    for (std::int64_t length = 1; length <= l_cap; ++length) {
        std::optional<GSequence> hit;
        detail::for_each_multiset(alphabet.size(), static_cast<std::size_t>(length),
                                  [&](const std::vector<std::size_t>& pick) {
                                      std::vector<std::size_t> indices;
                                      for (auto p : pick) {
                                          indices.push_back(alphabet[p]);
                                      }
                                      GSequence s = to_sequence(group, indices);
                                      if (!exists_cover(field, chars, s, budget)) {
                                          hit = std::move(s);
                                          return false;
                                      }
                                      return true;
                                  });
        if (!hit) {
            break;
        }
        result.l = length;
        result.witness = std::move(*hit);
    }
    return result;
}

} // namespace reference

} // namespace zsum
