#include "zsum/plane.hpp"

#include "zsum/detail/bitset.hpp"
#include "zsum/error.hpp"
#include "zsum/field.hpp"

#include <algorithm>
#include <exception>
#include <unordered_set>

namespace zsum {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n)
{
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

void require_prime(std::int64_t p)
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw Error(ErrorKind::PreconditionViolated, std::to_string(p) + " is not prime");
    }
}

detail::Bitset line_mask(std::int64_t p, std::optional<std::int64_t> slope, std::int64_t offset)
{
    detail::Bitset mask(static_cast<std::size_t>(p * p));
    for (std::int64_t u = 0; u < p; ++u) {
        if (slope) {
            const std::int64_t v = mod(offset - *slope * u, p);
            mask.set(static_cast<std::size_t>(u * p + v));
        } else if (u == offset) {
            for (std::int64_t v = 0; v < p; ++v) {
                mask.set(static_cast<std::size_t>(u * p + v));
            }
        }
    }
    return mask;
}

std::vector<std::vector<std::int64_t>> subsets(std::int64_t p, std::int64_t l)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> pick;
    auto rec = [&](auto&& self, std::int64_t next) -> void {
        if (static_cast<std::int64_t>(pick.size()) == l) {
            out.push_back(pick);
            return;
        }
        for (std::int64_t x = next; x < p; ++x) {
            pick.push_back(x);
            self(self, x + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Smallest image of the offset set under s -> a s + c.
std::vector<std::int64_t> affine_canonical(const std::vector<std::int64_t>& set, std::int64_t p)
{
    std::vector<std::int64_t> best = set;
    std::vector<std::int64_t> image(set.size());
    for (std::int64_t a = 1; a < p; ++a) {
        for (std::int64_t c = 0; c < p; ++c) {
            for (std::size_t i = 0; i < set.size(); ++i) {
                image[i] = mod(a * set[i] + c, p);
            }
            std::sort(image.begin(), image.end());
            best = std::min(best, image);
        }
    }
    return best;
}

void check_triple_args(std::int64_t p, std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3)
{
    require_prime(p);
    if (p < 5) {
        throw Error(ErrorKind::PreconditionViolated, "need p >= 5");
    }
    if (l < 2 || l > p - 1) {
        throw Error(ErrorKind::PreconditionViolated, "need l in [2, p - 1]");
    }
    for (auto k : {k1, k2, k3}) {
        if (k < 0 || k >= p) {
            throw Error(ErrorKind::PreconditionViolated, "slopes must lie in [0, p)");
        }
    }
    if (k1 == k2 || k1 == k3 || k2 == k3) {
        throw Error(ErrorKind::PreconditionViolated, "slopes must be distinct");
    }
}

detail::Bitset union_of(std::int64_t p, std::int64_t slope, const std::vector<std::int64_t>& offsets)
{
    detail::Bitset out(static_cast<std::size_t>(p * p));
    for (auto s : offsets) {
        out |= line_mask(p, slope, s);
    }
    return out;
}

} // namespace

bool Line::contains(std::int64_t u, std::int64_t v) const
{
    if (slope) {
        return mod(*slope * u + v, p) == offset;
    }
    return mod(u, p) == offset;
}

std::vector<std::pair<std::int64_t, std::int64_t>> Line::points() const
{
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t u = 0; u < p; ++u) {
        for (std::int64_t v = 0; v < p; ++v) {
            if (contains(u, v)) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

PlanePoint plane_point(const Character& chi)
{
    const Rank2Basis basis = standard_basis_rank2(chi.group());
    const std::int64_t b = chi.exps()[1];
    return {b % basis.n, chi.exps()[0], b / basis.n};
}

Line line_of_coset(const Character& chi, const GroupElement& g)
{
    const Group& G = chi.group();
    const Rank2Basis basis = standard_basis_rank2(G);
    const std::int64_t p = basis.m;
    if (!is_prime(static_cast<std::uint64_t>(p))) {
        throw Error(ErrorKind::NotPlaneElement, "plane model needs G = C_p + C_pn with p prime");
    }
    if (!G.contains(g)) {
        throw Error(ErrorKind::GroupMismatch, "(" + to_literal(g) + ") is not in C[" + to_literal(G) + "]");
    }
    const PlanePoint pt = plane_point(chi);
    const std::int64_t k = g.coords[0];
    if (g.coords[1] == 1) {
        return Line{p, k, mod(k * pt.u + pt.v, p)};
    }
    if (g.coords[1] % p == 0 && k != 0) {
        return Line{p, std::nullopt, pt.u};
    }
    throw Error(ErrorKind::NotPlaneElement, "(" + to_literal(g) + ") is neither k e1 + e2 nor k e1 + p l e2 with k != 0");
}

std::int64_t line_intersection_count(const Line& a, const Line& b)
{
    if (a.p != b.p) {
        throw Error(ErrorKind::PreconditionViolated, "lines live in different planes");
    }
    if (a.slope != b.slope) {
        return 1;
    }
    return a.offset == b.offset ? a.p : 0;
}

std::int64_t l_triple_max_union(std::int64_t p, std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3,
                                bool parallel)
{
    check_triple_args(p, l, k1, k2, k3);
    const auto all = subsets(p, l);
    std::vector<std::vector<std::int64_t>> reps;
    for (const auto& s : all) {
        if (affine_canonical(s, p) == s) {
            reps.push_back(s);
        }
    }
    std::vector<detail::Bitset> e2;
    std::vector<detail::Bitset> e3;
    for (const auto& s : all) {
        e2.push_back(union_of(p, k2, s));
        e3.push_back(union_of(p, k3, s));
    }

    const auto jobs = static_cast<std::int64_t>(reps.size() * all.size());
    std::int64_t best = 0;
#pragma omp parallel for reduction(max : best) schedule(static) if (parallel)
    for (std::int64_t job = 0; job < jobs; ++job) {
        const auto r = static_cast<std::size_t>(job) / all.size();
        const auto b = static_cast<std::size_t>(job) % all.size();
        detail::Bitset base = union_of(p, k1, reps[r]);
        base |= e2[b];
        for (const auto& c : e3) {
            const auto size = static_cast<std::int64_t>(base.count() + base.count_new(c));
            best = std::max(best, size);
        }
    }
    return best;
}

namespace reference {

std::int64_t l_triple_max_union(std::int64_t p, std::int64_t l, std::int64_t k1, std::int64_t k2, std::int64_t k3)
{
    check_triple_args(p, l, k1, k2, k3);
    const auto all = subsets(p, l);
    std::int64_t best = 0;
    for (const auto& a : all) {
        for (const auto& b : all) {
            for (const auto& c : all) {
                std::int64_t covered = 0;
                for (std::int64_t u = 0; u < p; ++u) {
                    for (std::int64_t v = 0; v < p; ++v) {
                        auto hit = [&](std::int64_t k, const std::vector<std::int64_t>& offs) {
                            return std::find(offs.begin(), offs.end(), mod(k * u + v, p)) != offs.end();
                        };
                        covered += (hit(k1, a) || hit(k2, b) || hit(k3, c)) ? 1 : 0;
                    }
                }
                best = std::max(best, covered);
            }
        }
    }
    return best;
}

} // namespace reference

namespace {

struct CoverKey {
    std::vector<std::uint64_t> words;
    std::vector<std::int64_t> counts;
    friend bool operator==(const CoverKey&, const CoverKey&) = default;
};

struct CoverKeyHash {
    std::size_t operator()(const CoverKey& k) const
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : k.words) {
            h = (h ^ w) * 0x100000001b3ULL;
        }
        for (auto c : k.counts) {
            h = (h ^ static_cast<std::uint64_t>(c)) * 0x100000001b3ULL;
        }
        return h;
    }
};

class PlaneCoverSearch {
public:
    PlaneCoverSearch(std::int64_t p, const SlopeCounts& counts, const Budget& budget) : p_(p), budget_(budget)
    {
        for (const auto& [slope, count] : counts) {
            if (count < 0) {
                throw Error(ErrorKind::PreconditionViolated, "negative line count");
            }
            if (slope && (*slope < 0 || *slope >= p)) {
                throw Error(ErrorKind::PreconditionViolated, "slope outside [0, p)");
            }
            if (count == 0) {
                continue;
            }
            slopes_.push_back(slope);
            // more than p lines of one slope never help
            counts_.push_back(std::min(count, p));
            std::vector<detail::Bitset> lines;
            for (std::int64_t s = 0; s < p; ++s) {
                lines.push_back(line_mask(p, slope, s));
            }
            lines_.push_back(std::move(lines));
        }
    }

    bool run()
    {
        detail::Bitset covered(static_cast<std::size_t>(p_ * p_));
        return descend(covered);
    }

private:
    bool descend(const detail::Bitset& covered)
    {
        budget_.charge();
        const std::size_t point = covered.first_unset();
        if (point == covered.size()) {
            return true;
        }
        const std::int64_t uncovered = static_cast<std::int64_t>(covered.size() - covered.count());
        std::int64_t capacity = 0;
        for (auto c : counts_) {
            capacity += c * p_;
        }
        if (capacity < uncovered) {
            return false;
        }
        CoverKey key{covered.words(), counts_};
        if (failed_.contains(key)) {
            return false;
        }
        const std::int64_t u = static_cast<std::int64_t>(point) / p_;
        const std::int64_t v = static_cast<std::int64_t>(point) % p_;
        for (std::size_t i = 0; i < slopes_.size(); ++i) {
            if (counts_[i] == 0) {
                continue;
            }
            const std::int64_t offset = slopes_[i] ? mod(*slopes_[i] * u + v, p_) : u;
            detail::Bitset next = covered;
            next |= lines_[i][static_cast<std::size_t>(offset)];
            --counts_[i];
            const bool ok = descend(next);
            ++counts_[i];
            if (ok) {
                return true;
            }
        }
        failed_.insert(std::move(key));
        return false;
    }

    std::int64_t p_;
    const Budget& budget_;
    std::vector<std::optional<std::int64_t>> slopes_;
    std::vector<std::int64_t> counts_;
    std::vector<std::vector<detail::Bitset>> lines_;
    std::unordered_set<CoverKey, CoverKeyHash> failed_;
};

} // namespace

bool plane_coverable(std::int64_t p, const SlopeCounts& counts, const Budget& budget)
{
    require_prime(p);
    PlaneCoverSearch search(p, counts, budget);
    return search.run();
}

} // namespace zsum
