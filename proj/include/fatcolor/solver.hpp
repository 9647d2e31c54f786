#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fatcolor/coloring.hpp"
#include "fatcolor/errors.hpp"
#include "fatcolor/graph.hpp"

namespace fatcolor {

struct SearchBudget {
    std::optional<std::uint64_t> max_nodes = 10'000'000;
    std::optional<double> time_cap_seconds;

    /// Default budget, with FATCOLOR_BUDGET_NODES overriding max_nodes.
    static SearchBudget from_environment();

    /// Throws InvalidParams if a present cap is not positive.
    void validate() const;
};

/// Thrown when the node or time cap is hit. Carries whatever was found.
class BudgetExhausted : public FatError {
public:
    BudgetExhausted(std::vector<FatColoring> partial_results, int lower, int upper)
        : FatError("search budget exhausted"), partial(std::move(partial_results)), lower_bound(lower),
          upper_bound(upper)
    {
    }

    std::vector<FatColoring> partial;
    /// For chi_fat: verified lower bound and unproven upper bound.
    int lower_bound;
    int upper_bound;
};

/// Upper bounds on k for colorings with alpha > 0 and what they pruned.
struct BoundsLedger {
    int delta_bound = 0; // min positive degree + 1
    int gcd_bound = 0;   // degree gcd + 1
    std::optional<int> mu_bound;
    int upper = 1;
    std::vector<std::string> notes;
};

struct ChiFatResult {
    int k = 1;
    FatColoring witness;
    BoundsLedger bounds;
};

struct ColoringPoset {
    std::vector<FatColoring> elements;
    /// (a, b): element a is strictly coarser than element b.
    std::vector<std::pair<std::size_t, std::size_t>> coarser_than;
    /// (finer, coarser) covering pairs.
    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;
    /// Irreducible elements: nothing in the poset is strictly finer.
    std::vector<std::size_t> maximal;
};

/// 0 selects the OpenMP default; 1 runs the serial reference path.
int resolve_threads(int threads);

/// Computes the alpha > 0 bounds for g (mu only when it can tighten).
BoundsLedger alpha_positive_bounds(const Graph& g);

/// alpha = r/s in lowest terms with s | gcd of degrees and
/// 0 < alpha <= 1/(k-1), descending, before any spectral filtering.
std::vector<Rational> arithmetic_alphas(const Graph& g, int k);

/// All alpha = r/s in lowest terms with s | gcd of degrees and
/// 0 < alpha <= 1/(k-1), descending, that pass the spectral necessary
/// condition (skipped when g has isolated vertices). Throws DegenerateGraph
/// for an edgeless graph and InvalidParams for k < 2.
std::vector<Rational> candidate_alphas(const Graph& g, int k, BoundsLedger* ledger = nullptr);

/// All FAT k-colorings with parameter exactly alpha, canonical and sorted.
/// Disconnected graphs are solved per component and recombined; alpha = 0
/// delegates to alpha_zero_colorings. Throws BudgetExhausted.
std::vector<FatColoring> solve_fixed(const Graph& g, int k, const Rational& alpha,
                                     const SearchBudget& budget = {});

/// FAT k-colorings with alpha = 0: whole components grouped into k
/// nonempty classes.
std::vector<FatColoring> alpha_zero_colorings(const Graph& g, int k);

ChiFatResult chi_fat(const Graph& g, const SearchBudget& budget = {});

/// Every FAT coloring of g up to color permutation, sorted by
/// canonical_less. Independent (k, alpha) searches run in parallel.
std::vector<FatColoring> enumerate_all(const Graph& g, const SearchBudget& budget = {}, int threads = 0);

ColoringPoset build_poset(std::vector<FatColoring> elements);
ColoringPoset poset(const Graph& g, const SearchBudget& budget = {}, int threads = 0);
std::vector<FatColoring> irreducibles(const Graph& g, const SearchBudget& budget = {}, int threads = 0);

/// Distinct (k, alpha) realized by some FAT coloring; k = 1 appears as (1, 0).
std::set<std::pair<int, Rational>> feasible_report(const Graph& g, const SearchBudget& budget = {},
                                                   int threads = 0);

inline constexpr int kOracleMaxVertices = 12;

/// Independent ground truth: verifies every set partition of V.
/// Throws TooLarge above kOracleMaxVertices vertices.
std::vector<FatColoring> brute_force_oracle(const Graph& g, int threads = 0);

} // namespace fatcolor
