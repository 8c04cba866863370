#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>

namespace zsum {

/// Cooperative search budget. Search loops call charge() once per node; the
/// deadline is polled every few thousand nodes. Safe to share across threads.
class Budget {
public:
    using Clock = std::chrono::steady_clock;

    Budget() = default;
    Budget(const Budget&) = delete;
    Budget& operator=(const Budget&) = delete;

    static const Budget& unlimited();

    void set_time_limit(std::chrono::duration<double> limit)
    {
        deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(limit);
    }
    void set_node_limit(std::uint64_t nodes) { node_limit_ = nodes; }

    bool limited() const { return deadline_.has_value() || node_limit_ != kNoLimit; }

    /// Throws Error(BudgetExceeded) once either limit is hit.
    void charge(std::uint64_t nodes = 1) const;

    std::uint64_t nodes_used() const { return used_.load(std::memory_order_relaxed); }

private:
    static constexpr std::uint64_t kNoLimit = std::numeric_limits<std::uint64_t>::max();

    std::optional<Clock::time_point> deadline_;
    std::uint64_t node_limit_ = kNoLimit;
    mutable std::atomic<std::uint64_t> used_{0};
};

} // namespace zsum
