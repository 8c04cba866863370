#include "zsum/counterexample.hpp"

#include "zsum/detail/multisets.hpp"
#include "zsum/error.hpp"
#include "zsum/field.hpp"
#include "zsum/plane.hpp"

#include <algorithm>
#include <exception>
#include <map>

namespace zsum {

CounterexampleSpec CounterexampleSpec::standard(std::int64_t p, std::int64_t n)
{
    CounterexampleSpec spec;
    spec.p = p;
    spec.n = n;
    spec.slopes = {0, 1, 2, 3};
    spec.multiplicities = {(n - 2) * p + (p - 1), p - 1, p - 1, 2};
    return spec;
}

std::int64_t CounterexampleSpec::length() const
{
    std::int64_t total = 0;
    for (auto m : multiplicities) {
        total += m;
    }
    return total;
}

Group CounterexampleSpec::group() const
{
    return Group({p, p * n});
}

void CounterexampleSpec::validate() const
{
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw Error(ErrorKind::PreconditionViolated, std::to_string(p) + " is not prime");
    }
    if (n < 1) {
        throw Error(ErrorKind::PreconditionViolated, "n must be positive");
    }
    for (std::size_t i = 0; i < 4; ++i) {
        if (slopes[i] < 0 || slopes[i] >= p) {
            throw Error(ErrorKind::PreconditionViolated, "slopes must lie in [0, p)");
        }
        if (multiplicities[i] < 0) {
            throw Error(ErrorKind::PreconditionViolated, "negative multiplicity");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (slopes[i] == slopes[j]) {
                throw Error(ErrorKind::PreconditionViolated, "slopes must be distinct");
            }
        }
    }
}

GSequence CounterexampleSpec::sequence() const
{
    validate();
    const Group G = group();
    GSequence s(G);
    for (std::size_t i = 0; i < 4; ++i) {
        s.push(G.element({slopes[i], 1}), multiplicities[i]);
    }
    return s;
}

GSequence build_counterexample(std::int64_t p, std::int64_t n)
{
    if (p < 5 || !is_prime(static_cast<std::uint64_t>(p))) {
        throw Error(ErrorKind::PreconditionViolated, "need a prime p >= 5, got " + std::to_string(p));
    }
    if (n < 2) {
        throw Error(ErrorKind::PreconditionViolated, "need n >= 2, got " + std::to_string(n));
    }
    return CounterexampleSpec::standard(p, n).sequence();
}

namespace {

/// All ways to write total as an ordered sum of `parts` values in [0, cap].
std::vector<std::vector<std::int64_t>> compositions(std::int64_t total, std::int64_t parts, std::int64_t cap)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    auto rec = [&](auto&& self, std::int64_t left, std::int64_t slots) -> void {
        if (slots == 1) {
            if (left <= cap) {
                cur.push_back(left);
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        for (std::int64_t first = 0; first <= std::min(left, cap); ++first) {
            cur.push_back(first);
            self(self, left - first, slots - 1);
            cur.pop_back();
        }
    };
    rec(rec, total, parts);
    return out;
}

struct Distributions {
    std::vector<std::vector<std::vector<std::int64_t>>> per_slope;
    std::uint64_t total = 1;
};

Distributions enumerate(const CounterexampleSpec& spec)
{
    Distributions d;
    for (auto m : spec.multiplicities) {
        const std::int64_t usable = std::min(m, spec.n * spec.p);
        d.per_slope.push_back(compositions(usable, spec.n, spec.p));
        d.total *= d.per_slope.back().size();
    }
    return d;
}

/// Decodes a flat index; the last slope varies fastest.
std::array<std::size_t, 4> decode(const Distributions& d, std::uint64_t index)
{
    std::array<std::size_t, 4> pick{};
    for (std::size_t i = 4; i-- > 0;) {
        const auto size = d.per_slope[i].size();
        pick[i] = static_cast<std::size_t>(index % size);
        index /= size;
    }
    return pick;
}

SlopeCounts counts_for(const CounterexampleSpec& spec, const std::array<std::int64_t, 4>& c)
{
    SlopeCounts counts;
    for (std::size_t i = 0; i < 4; ++i) {
        counts[spec.slopes[i]] = c[i];
    }
    return counts;
}

} // namespace

UncoverableReport verify_uncoverable(const CounterexampleSpec& spec, const VerifyConfig& config,
                                     const Budget& budget)
{
    spec.validate();
    const Distributions d = enumerate(spec);
    if (d.total > config.max_distributions) {
        throw Error(ErrorKind::BudgetExceeded,
                    std::to_string(d.total) + " distributions exceed the limit " +
                        std::to_string(config.max_distributions));
    }

    // coverable[c] for every per-plane count vector c (each coordinate <= min(m_i, p))
    std::array<std::int64_t, 4> limit{};
    std::array<std::int64_t, 4> stride{};
    std::int64_t cells = 1;
    for (std::size_t i = 4; i-- > 0;) {
        limit[i] = std::min(spec.multiplicities[i], spec.p);
        stride[i] = cells;
        cells *= limit[i] + 1;
    }
    std::vector<char> coverable(static_cast<std::size_t>(cells), 0);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) if (config.parallel)
    for (std::int64_t cell = 0; cell < cells; ++cell) {
        try {
            std::array<std::int64_t, 4> c{};
            for (std::size_t i = 0; i < 4; ++i) {
                c[i] = (cell / stride[i]) % (limit[i] + 1);
            }
            coverable[static_cast<std::size_t>(cell)] = plane_coverable(spec.p, counts_for(spec, c), budget) ? 1 : 0;
        } catch (...) {
#pragma omp critical(zsum_uncoverable_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    const auto total = static_cast<std::int64_t>(d.total);
    std::int64_t first_cover = total;
#pragma omp parallel for reduction(min : first_cover) schedule(static) if (config.parallel)
    for (std::int64_t index = 0; index < total; ++index) {
        if (index >= first_cover) {
            continue;
        }
        const auto pick = decode(d, static_cast<std::uint64_t>(index));
        bool all_planes = true;
        for (std::int64_t nu = 0; nu < spec.n && all_planes; ++nu) {
            std::int64_t cell = 0;
            for (std::size_t i = 0; i < 4; ++i) {
                cell += d.per_slope[i][pick[i]][static_cast<std::size_t>(nu)] * stride[i];
            }
            all_planes = coverable[static_cast<std::size_t>(cell)] != 0;
        }
        if (all_planes) {
            first_cover = std::min(first_cover, index);
        }
    }

    if (first_cover == total) {
        return {true, d.total};
    }
    return {false, static_cast<std::uint64_t>(first_cover) + 1};
}

namespace reference {

UncoverableReport verify_uncoverable(const CounterexampleSpec& spec, const Budget& budget)
{
    spec.validate();
    const Distributions d = enumerate(spec);
    std::map<std::array<std::int64_t, 4>, bool> memo;
    auto coverable = [&](const std::array<std::int64_t, 4>& c) {
        auto it = memo.find(c);
        if (it == memo.end()) {
            it = memo.emplace(c, plane_coverable(spec.p, counts_for(spec, c), budget)).first;
        }
        return it->second;
    };
    for (std::uint64_t index = 0; index < d.total; ++index) {
        budget.charge();
        const auto pick = decode(d, index);
        bool all_planes = true;
        for (std::int64_t nu = 0; nu < spec.n && all_planes; ++nu) {
            std::array<std::int64_t, 4> c{};
            for (std::size_t i = 0; i < 4; ++i) {
                c[i] = d.per_slope[i][pick[i]][static_cast<std::size_t>(nu)];
            }
            all_planes = coverable(c);
        }
        if (all_planes) {
            return {false, index + 1};
        }
    }
    return {true, d.total};
}

} // namespace reference

} // namespace zsum
