#pragma once

#include "zsum/budget.hpp"

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <vector>

namespace zsum::detail {

struct LongestResult {
    std::int64_t length = 0;
    std::vector<std::size_t> witness;
};

inline constexpr std::int64_t kNoBound = std::numeric_limits<std::int64_t>::max() / 4;

/// Depth-first search for the longest non-decreasing sequence over `alphabet`
/// satisfying a property closed under taking subsequences.
///
/// extend(state, symbol) -> std::optional<State>: nullopt when appending breaks
/// the property. bound(state) -> upper bound on how many more symbols can still
/// be appended.
///
/// The witness is the lexicographically smallest longest sequence; the parallel
/// run splits on the first symbol and reduces by (length desc, branch asc), so
/// it returns the same witness as the serial run.
template <class State, class Extend, class Bound>
class LongestMultisetSearch {
public:
    LongestMultisetSearch(const std::vector<std::size_t>& alphabet, std::int64_t cap, Extend extend, Bound bound,
                          const Budget& budget)
        : alphabet_(alphabet), cap_(cap), extend_(std::move(extend)), bound_(std::move(bound)), budget_(budget)
    {
    }

    LongestResult run(const State& root, bool parallel) const
    {
        LongestResult best;
        if (cap_ <= 0 || alphabet_.empty()) {
            return best;
        }
        if (!parallel) {
            std::vector<std::size_t> path;
            descend(root, 0, path, best);
            return best;
        }

        const auto branches = static_cast<std::int64_t>(alphabet_.size());
        std::vector<LongestResult> per_branch(alphabet_.size());
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < branches; ++b) {
            try {
                const auto i = static_cast<std::size_t>(b);
                budget_.charge();
                auto next = extend_(root, alphabet_[i]);
                if (!next) {
                    continue;
                }
                std::vector<std::size_t> path{alphabet_[i]};
                LongestResult& local = per_branch[i];
                local.length = 1;
                local.witness = path;
                if (1 < cap_ && 1 + bound_(*next) > local.length) {
                    descend(*next, i, path, local);
                }
            } catch (...) {
#pragma omp critical(zsum_longest_failure)
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
        if (failure) {
            std::rethrow_exception(failure);
        }
        for (auto& r : per_branch) {
            if (r.length > best.length) {
                best = std::move(r);
            }
        }
        return best;
    }

private:
    void descend(const State& state, std::size_t start, std::vector<std::size_t>& path, LongestResult& best) const
    {
        const auto depth = static_cast<std::int64_t>(path.size());
        for (std::size_t i = start; i < alphabet_.size(); ++i) {
            budget_.charge();
            auto next = extend_(state, alphabet_[i]);
            if (!next) {
                continue;
            }
            path.push_back(alphabet_[i]);
            if (depth + 1 > best.length) {
                best.length = depth + 1;
                best.witness = path;
            }
            if (depth + 1 < cap_ && depth + 1 + bound_(*next) > best.length) {
                descend(*next, i, path, best);
            }
            path.pop_back();
        }
    }

    const std::vector<std::size_t>& alphabet_;
    std::int64_t cap_;
    Extend extend_;
    Bound bound_;
    const Budget& budget_;
};

template <class State, class Extend, class Bound>
LongestResult longest_multiset(const std::vector<std::size_t>& alphabet, const State& root, std::int64_t cap,
                               Extend extend, Bound bound, const Budget& budget, bool parallel)
{
    return LongestMultisetSearch<State, Extend, Bound>(alphabet, cap, std::move(extend), std::move(bound), budget)
        .run(root, parallel);
}

} // namespace zsum::detail
