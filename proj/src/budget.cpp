#include "zsum/budget.hpp"

#include "zsum/error.hpp"

#include <string>

namespace zsum {

const Budget& Budget::unlimited()
{
    static const Budget instance;
    return instance;
}

void Budget::charge(std::uint64_t nodes) const
{
    if (!limited()) {
        return;
    }
    const std::uint64_t before = used_.fetch_add(nodes, std::memory_order_relaxed);
    const std::uint64_t after = before + nodes;
    if (after > node_limit_) {
        throw Error(ErrorKind::BudgetExceeded, "node limit of " + std::to_string(node_limit_) + " reached");
    }
    // poll the clock roughly every 4096 nodes
    if (deadline_ && (before >> 12) != (after >> 12) && Clock::now() > *deadline_) {
        throw Error(ErrorKind::BudgetExceeded, "time budget exhausted");
    }
}

} // namespace zsum
