#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

#include "fatcolor/solver.hpp"

namespace fatcolor::detail {

/// Node and wall-clock accounting shared by every search task of one call.
class BudgetTracker {
public:
    explicit BudgetTracker(const SearchBudget& budget)
        : max_nodes_(budget.max_nodes.value_or(0)), has_node_cap_(budget.max_nodes.has_value()),
          time_cap_(budget.time_cap_seconds.value_or(0.0)), has_time_cap_(budget.time_cap_seconds.has_value()),
          start_(std::chrono::steady_clock::now())
    {
    }

    /// Counts one search node; false once any cap has been hit.
    bool charge()
    {
        if (exhausted_.load(std::memory_order_relaxed))
            return false;
        const std::uint64_t used = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (has_node_cap_ && used > max_nodes_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        if (has_time_cap_ && (used & 0x3ff) == 0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() > time_cap_) {
                exhausted_.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        return true;
    }

    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    std::uint64_t max_nodes_;
    bool has_node_cap_;
    double time_cap_;
    bool has_time_cap_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

} // namespace fatcolor::detail
