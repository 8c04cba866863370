#include "zsum/davenport.hpp"

#include "zsum/detail/bitset.hpp"
#include "zsum/detail/longest_multiset.hpp"
#include "zsum/detail/multisets.hpp"
#include "zsum/error.hpp"

#include <optional>

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

DavenportResult davenport_d(const Group& group, const DavenportConfig& config, const Budget& budget)
{
    check_order(group, config.max_order);
    const GroupTable table(group);
    const std::size_t size = table.size();

    std::vector<std::size_t> alphabet;
    for (std::size_t i = 1; i < size; ++i) {
        alphabet.push_back(i);
    }

    using Sums = detail::Bitset;
    auto extend = [&](const Sums& sums, std::size_t g) -> std::optional<Sums> {
        Sums next = sums;
        next.set(g);
        for (std::size_t x = 0; x < size; ++x) {
            if (sums.test(x)) {
                next.set(table.add(x, g));
            }
        }
        if (next.test(0)) {
            return std::nullopt;
        }
        return next;
    };
    auto bound = [&](const Sums& sums) -> std::int64_t {
        return static_cast<std::int64_t>(size) - 1 - static_cast<std::int64_t>(sums.count());
    };

    const auto found = detail::longest_multiset(alphabet, Sums(size), detail::kNoBound, extend, bound, budget,
                                                config.parallel);
    return {found.length, to_sequence(group, found.witness)};
}

namespace reference {

DavenportResult davenport_d(const Group& group, std::int64_t max_order)
{
    check_order(group, max_order);
    std::vector<std::size_t> alphabet;
    for (std::size_t i = 1; i < static_cast<std::size_t>(group.order()); ++i) {
        alphabet.push_back(i);
    }
    DavenportResult result{0, GSequence(group)};
    // zero-sum freeness is closed under subsequences, so the first empty level ends the scan
    for (std::int64_t length = 1;; ++length) {
        std::optional<GSequence> hit;
        detail::for_each_multiset(alphabet.size(), static_cast<std::size_t>(length),
                                  [&](const std::vector<std::size_t>& pick) {
                                      std::vector<std::size_t> indices;
                                      for (auto p : pick) {
                                          indices.push_back(alphabet[p]);
                                      }
                                      GSequence s = to_sequence(group, indices);
                                      if (is_zero_sum_free(s)) {
                                          hit = std::move(s);
                                          return false;
                                      }
                                      return true;
                                  });
        if (!hit) {
            return result;
        }
        result = {length, std::move(*hit)};
    }
}

} // namespace reference

} // namespace zsum
