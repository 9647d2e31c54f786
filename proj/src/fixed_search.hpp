#pragma once

#include <vector>

#include "budget_tracker.hpp"
#include "fatcolor/graph.hpp"
#include "fatcolor/rational.hpp"

namespace fatcolor::detail {

/// Backtracking search for FAT k-colorings with parameter alpha > 0 on a
/// connected graph. Returns canonical assignments (unverified). Stops at the
/// first solution when `first_only`; returns early if the budget runs out.
std::vector<std::vector<int>> search_connected(const Graph& g, int k, const Rational& alpha, BudgetTracker& budget,
                                               bool first_only);

} // namespace fatcolor::detail
