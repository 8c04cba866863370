#pragma once

#include <cstddef>
#include <vector>

namespace zsum::detail {

/// Visits every non-decreasing index vector of the given length over [0, n) in
/// lexicographic order. visit returns false to stop early. Returns false if stopped.
template <class Visit>
bool for_each_multiset(std::size_t n, std::size_t length, Visit&& visit)
{
    std::vector<std::size_t> pick(length, 0);
    if (length == 0) {
        return visit(pick);
    }
    if (n == 0) {
        return true;
    }
    while (true) {
        if (!visit(pick)) {
            return false;
        }
        std::size_t pos = length;
        while (pos > 0 && pick[pos - 1] == n - 1) {
            --pos;
        }
        if (pos == 0) {
            return true;
        }
        const std::size_t value = pick[pos - 1] + 1;
        for (std::size_t j = pos - 1; j < length; ++j) {
            pick[j] = value;
        }
    }
}

/// Visits every vector c with 0 <= c[i] <= limits[i], last coordinate fastest.
template <class Visit>
bool for_each_box_point(const std::vector<std::size_t>& limits, Visit&& visit)
{
    std::vector<std::size_t> c(limits.size(), 0);
    while (true) {
        if (!visit(c)) {
            return false;
        }
        std::size_t pos = c.size();
        while (pos > 0 && c[pos - 1] == limits[pos - 1]) {
            c[pos - 1] = 0;
            --pos;
        }
        if (pos == 0) {
            return true;
        }
        ++c[pos - 1];
    }
}

} // namespace zsum::detail
