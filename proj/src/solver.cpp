#include "fatcolor/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <numeric>
#include <string>

#include <omp.h>

#include "budget_tracker.hpp"
#include "fatcolor/partitions.hpp"
#include "fatcolor/spectral.hpp"
#include "fixed_search.hpp"

namespace fatcolor {

using detail::BudgetTracker;

SearchBudget SearchBudget::from_environment()
{
    SearchBudget budget;
    if (const char* env = std::getenv("FATCOLOR_BUDGET_NODES")) {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used != std::string(env).size() || value == 0)
                throw std::invalid_argument(env);
            budget.max_nodes = value;
        } catch (const std::exception&) {
            throw InvalidParams(std::string("FATCOLOR_BUDGET_NODES must be a positive integer, got '") + env + "'");
        }
    }
    return budget;
}

void SearchBudget::validate() const
{
    if (max_nodes && *max_nodes == 0)
        throw InvalidParams("node budget must be positive");
    if (time_cap_seconds && !(*time_cap_seconds > 0.0))
        throw InvalidParams("time cap must be positive");
}

int resolve_threads(int threads)
{
    if (threads < 0)
        throw InvalidParams("thread count must be >= 0");
    return threads == 0 ? omp_get_max_threads() : threads;
}

namespace {

std::vector<int> divisors(int x)
{
    std::vector<int> out;
    for (int d = 1; d <= x; ++d)
        if (x % d == 0)
            out.push_back(d);
    return out;
}

void sort_unique(std::vector<FatColoring>& colorings)
{
    std::sort(colorings.begin(), colorings.end(), canonical_less);
    colorings.erase(std::unique(colorings.begin(), colorings.end()), colorings.end());
}

/// Re-verification every emitted coloring goes through.
FatColoring verified(const Graph& g, std::vector<int> assignment, int k, const Rational& alpha)
{
    auto result = verify_fat(g, canonicalize(Coloring(std::move(assignment), k)));
    auto* fc = std::get_if<FatColoring>(&result);
    if (fc == nullptr || fc->alpha != alpha)
        throw std::logic_error("search emitted a coloring that fails verification");
    return *fc;
}

/// alpha > 0 colorings of a possibly disconnected graph.
///
/// e(v, V_i) only sees v's component, so with alpha > 0 every component with
/// an edge meets all k classes and is itself FAT with the same alpha.
/// Isolated vertices satisfy every equation and may take any class. Solutions
/// are combined across components under every relabelling of the later
/// components, then deduplicated.
std::vector<FatColoring> solve_alpha_positive(const Graph& g, int k, const Rational& alpha, BudgetTracker& budget,
                                              bool first_only)
{
    const int n = g.vertex_count();
    const auto comps = components(g);
    if (comps.size() == 1) {
        std::vector<FatColoring> out;
        for (auto& assignment : detail::search_connected(g, k, alpha, budget, first_only))
            out.push_back(verified(g, std::move(assignment), k, alpha));
        return out;
    }

    std::vector<const std::vector<Vertex>*> nontrivial;
    std::vector<Vertex> isolated;
    for (const auto& comp : comps) {
        if (comp.size() == 1)
            isolated.push_back(comp.front());
        else
            nontrivial.push_back(&comp);
    }
    if (nontrivial.empty())
        return {};

    std::vector<std::vector<std::vector<int>>> per_component;
    for (const auto* comp : nontrivial) {
        const Graph sub = g.induced(*comp);
        auto sols = detail::search_connected(sub, k, alpha, budget, first_only);
        if (sols.empty())
            return {};
        per_component.push_back(std::move(sols));
    }

    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> found;
    bool stop = false;

    auto place_isolated = [&](auto&& self, std::size_t idx) -> void {
        if (stop)
            return;
        if (idx == isolated.size()) {
            found.push_back(canonicalize(Coloring(assignment, k)).assignment());
            if (first_only)
                stop = true;
            return;
        }
        const int limit = first_only ? 1 : k;
        for (int c = 0; c < limit && !stop; ++c) {
            if (!budget.charge()) {
                stop = true;
                return;
            }
            assignment[static_cast<std::size_t>(isolated[idx])] = c;
            self(self, idx + 1);
        }
    };

    auto combine = [&](auto&& self, std::size_t ci) -> void {
        if (stop)
            return;
        if (ci == nontrivial.size()) {
            place_isolated(place_isolated, 0);
            return;
        }
        const auto& comp = *nontrivial[ci];
        std::vector<int> perm(static_cast<std::size_t>(k));
        for (const auto& sol : per_component[ci]) {
            std::iota(perm.begin(), perm.end(), 0);
            do {
                if (!budget.charge()) {
                    stop = true;
                    return;
                }
                for (std::size_t i = 0; i < comp.size(); ++i)
                    assignment[static_cast<std::size_t>(comp[i])] = perm[static_cast<std::size_t>(sol[i])];
                self(self, ci + 1);
                // The first component fixes the labelling.
            } while (ci > 0 && !first_only && !stop && std::next_permutation(perm.begin(), perm.end()));
            if (stop)
                return;
        }
    };
    combine(combine, 0);

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    std::vector<FatColoring> out;
    out.reserve(found.size());
    for (auto& a : found)
        out.push_back(verified(g, std::move(a), k, alpha));
    return out;
}

struct Task {
    int k;
    Rational alpha;
};

/// (k, alpha > 0) pairs worth searching, ascending k then descending alpha.
std::vector<Task> alpha_positive_tasks(const Graph& g, const BoundsLedger& bounds)
{
    std::vector<Task> tasks;
    if (g.edge_count() == 0)
        return tasks;
    const auto report = structure_report(g);
    for (int k = 2; k <= bounds.upper; ++k) {
        if ((2 * g.edge_count()) % k != 0)
            continue;
        if (report.is_connected && report.regular_degree && g.vertex_count() % k != 0)
            continue;
        for (const auto& alpha : candidate_alphas(g, k))
            tasks.push_back({k, alpha});
    }
    return tasks;
}

} // namespace

BoundsLedger alpha_positive_bounds(const Graph& g)
{
    const auto report = structure_report(g);
    BoundsLedger ledger;
    if (g.edge_count() == 0) {
        ledger.upper = 1;
        ledger.notes.push_back("edgeless graph: no colorings with alpha > 0");
        return ledger;
    }
    int min_positive = report.max_degree;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0)
            min_positive = std::min(min_positive, g.degree(v));
    ledger.delta_bound = min_positive + 1;
    ledger.gcd_bound = report.degree_gcd + 1;
    ledger.upper = std::min(ledger.delta_bound, ledger.gcd_bound);

    if (report.isolated_count > 0) {
        ledger.notes.push_back("mu bound skipped: isolated vertices leave L undefined");
    } else if (ledger.upper > 2) {
        ledger.mu_bound = max_nl_multiplicity(g) + 1;
        ledger.upper = std::min(ledger.upper, *ledger.mu_bound);
    } else {
        ledger.notes.push_back("mu bound skipped: degree bounds already give k <= 2");
    }
    return ledger;
}

std::vector<Rational> arithmetic_alphas(const Graph& g, int k)
{
    if (k < 2)
        throw InvalidParams("candidate alphas need k >= 2");
    if (g.edge_count() == 0)
        throw DegenerateGraph("edgeless graph has no alpha > 0 candidates");
    std::vector<Rational> out;
    for (int s : divisors(structure_report(g).degree_gcd))
        for (int r = 1; r * (k - 1) <= s; ++r)
            if (std::gcd(r, s) == 1)
                out.emplace_back(r, s);
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a > b; });
    return out;
}

std::vector<Rational> candidate_alphas(const Graph& g, int k, BoundsLedger* ledger)
{
    auto out = arithmetic_alphas(g, k);
    const auto report = structure_report(g);
    if (report.isolated_count > 0)
        return out;
    std::vector<Rational> kept;
    for (const auto& alpha : out) {
        if (check_fat_spectral(g, k, alpha))
            kept.push_back(alpha);
        else if (ledger)
            ledger->notes.push_back("k=" + std::to_string(k) + " alpha=" + alpha.str() + ": lambda=" +
                                    (Rational(k) * alpha).str() + " lacks multiplicity " +
                                    std::to_string(std::max(1, k - 1)));
    }
    return kept;
}

std::vector<FatColoring> solve_fixed(const Graph& g, int k, const Rational& alpha, const SearchBudget& budget)
{
    budget.validate();
    if (k < 1)
        throw InvalidParams("k must be >= 1");
    if (alpha < Rational(0))
        throw InvalidParams("alpha must be >= 0");
    if (alpha.is_zero() || k == 1)
        return alpha.is_zero() ? alpha_zero_colorings(g, k) : std::vector<FatColoring>{};

    BudgetTracker tracker(budget);
    auto out = solve_alpha_positive(g, k, alpha, tracker, false);
    sort_unique(out);
    if (tracker.exhausted())
        throw BudgetExhausted(std::move(out), 0, 0);
    return out;
}

std::vector<FatColoring> alpha_zero_colorings(const Graph& g, int k)
{
    if (k < 1)
        throw InvalidParams("k must be >= 1");
    const auto report = structure_report(g);
    std::vector<FatColoring> out;
    if (k > report.component_count)
        return out;
    for_each_rgs(report.component_count, k, {}, [&](const std::vector<int>& rgs, int blocks) {
        if (blocks != k)
            return;
        std::vector<int> assignment(static_cast<std::size_t>(g.vertex_count()));
        for (std::size_t v = 0; v < assignment.size(); ++v)
            assignment[v] = rgs[static_cast<std::size_t>(report.component_ids[v])];
        out.push_back(verified(g, std::move(assignment), k, Rational(0)));
    });
    sort_unique(out);
    return out;
}

ChiFatResult chi_fat(const Graph& g, const SearchBudget& budget)
{
    budget.validate();
    const auto report = structure_report(g);
    ChiFatResult result;
    result.bounds = alpha_positive_bounds(g);
    auto& ledger = result.bounds;

    // alpha = 0: one class per component.
    const int zero_k = report.component_count;
    result.k = zero_k;
    result.witness = verified(g, report.component_ids, zero_k, Rational(0));

    BudgetTracker tracker(budget);
    for (int k = ledger.upper; k > std::max(1, zero_k); --k) {
        if ((2 * g.edge_count()) % k != 0) {
            ledger.notes.push_back("k=" + std::to_string(k) + ": skipped, k does not divide 2m");
            continue;
        }
        if (report.is_connected && report.regular_degree && g.vertex_count() % k != 0) {
            ledger.notes.push_back("k=" + std::to_string(k) + ": skipped, regular graph and k does not divide n");
            continue;
        }
        const auto alphas = candidate_alphas(g, k, &ledger);
        if (alphas.empty())
            ledger.notes.push_back("k=" + std::to_string(k) + ": no candidate alpha");
        for (const auto& alpha : alphas) {
            auto found = solve_alpha_positive(g, k, alpha, tracker, true);
            if (tracker.exhausted())
                throw BudgetExhausted({result.witness}, result.k, k);
            if (!found.empty()) {
                result.k = k;
                result.witness = found.front();
                return result;
            }
            ledger.notes.push_back("k=" + std::to_string(k) + " alpha=" + alpha.str() + ": search found none");
        }
    }
    return result;
}

std::vector<FatColoring> enumerate_all(const Graph& g, const SearchBudget& budget, int threads)
{
    budget.validate();
    const int workers = resolve_threads(threads);
    const auto report = structure_report(g);

    std::vector<FatColoring> out;
    for (int k = 1; k <= report.component_count; ++k) {
        auto zero = alpha_zero_colorings(g, k);
        out.insert(out.end(), zero.begin(), zero.end());
    }

    const auto tasks = alpha_positive_tasks(g, alpha_positive_bounds(g));
    std::vector<std::vector<FatColoring>> per_task(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    BudgetTracker tracker(budget);

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        try {
            per_task[i] = solve_alpha_positive(g, tasks[i].k, tasks[i].alpha, tracker, false);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    for (auto& part : per_task)
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    sort_unique(out);
    if (tracker.exhausted())
        throw BudgetExhausted(std::move(out), 0, 0);
    return out;
}

ColoringPoset build_poset(std::vector<FatColoring> elements)
{
    sort_unique(elements);
    ColoringPoset p;
    p.elements = std::move(elements);
    const std::size_t n = p.elements.size();

    // coarser[a][b]: a strictly coarser than b
    std::vector<std::vector<char>> coarser(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && is_coarser(p.elements[a].coloring, p.elements[b].coloring)) {
                coarser[a][b] = 1;
                p.coarser_than.emplace_back(a, b);
            }

    for (auto [a, b] : p.coarser_than) {
        bool covering = true;
        for (std::size_t c = 0; c < n && covering; ++c)
            if (coarser[a][c] && coarser[c][b])
                covering = false;
        if (covering)
            p.hasse_edges.emplace_back(b, a);
    }
    std::sort(p.hasse_edges.begin(), p.hasse_edges.end());

    for (std::size_t b = 0; b < n; ++b) {
        bool has_finer = false;
        for (std::size_t x = 0; x < n && !has_finer; ++x)
            has_finer = coarser[b][x] != 0;
        if (!has_finer)
            p.maximal.push_back(b);
    }
    return p;
}

ColoringPoset poset(const Graph& g, const SearchBudget& budget, int threads)
{
    return build_poset(enumerate_all(g, budget, threads));
}

std::vector<FatColoring> irreducibles(const Graph& g, const SearchBudget& budget, int threads)
{
    const auto p = poset(g, budget, threads);
    std::vector<FatColoring> out;
    for (std::size_t i : p.maximal)
        out.push_back(p.elements[i]);
    return out;
}

std::set<std::pair<int, Rational>> feasible_report(const Graph& g, const SearchBudget& budget, int threads)
{
    std::set<std::pair<int, Rational>> out;
    for (const auto& fc : enumerate_all(g, budget, threads))
        out.emplace(fc.k(), fc.alpha);
    return out;
}

std::vector<FatColoring> brute_force_oracle(const Graph& g, int threads)
{
    const int n = g.vertex_count();
    if (n > kOracleMaxVertices)
        throw TooLarge("oracle enumerates all set partitions; n = " + std::to_string(n) + " exceeds " +
                       std::to_string(kOracleMaxVertices));
    const int workers = resolve_threads(threads);

    const auto prefixes = rgs_prefixes(std::min(n, 5), n);
    std::vector<std::vector<FatColoring>> per_prefix(prefixes.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        for_each_rgs(n, n, prefixes[i], [&](const std::vector<int>& rgs, int blocks) {
            auto result = verify_fat(g, Coloring(rgs, blocks));
            if (auto* fc = std::get_if<FatColoring>(&result))
                per_prefix[i].push_back(std::move(*fc));
        });
    }

    std::vector<FatColoring> out;
    for (auto& part : per_prefix)
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    sort_unique(out);
    return out;
}

} // namespace fatcolor
