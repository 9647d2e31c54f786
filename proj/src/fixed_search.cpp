#include "fixed_search.hpp"

#include <algorithm>
#include <numeric>

#include "fatcolor/coloring.hpp"

namespace fatcolor::detail {

namespace {

class FixedSearch {
public:
    FixedSearch(const Graph& g, int k, BudgetTracker& budget, bool first_only)
        : g_(g), n_(g.vertex_count()), k_(k), budget_(budget), first_only_(first_only)
    {
    }

    bool prepare(const Rational& alpha)
    {
        if (k_ > n_ || alpha <= Rational(0))
            return false;
        const Rational beta = Rational(1) - Rational(k_ - 1) * alpha;
        if (beta < Rational(0))
            return false;

        foreign_quota_.resize(static_cast<std::size_t>(n_));
        own_quota_.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) {
            const Rational qf = alpha * Rational(g_.degree(v));
            const Rational qo = beta * Rational(g_.degree(v));
            if (!qf.is_integer() || !qo.is_integer())
                return false;
            foreign_quota_[static_cast<std::size_t>(v)] = static_cast<int>(qf.num());
            own_quota_[static_cast<std::size_t>(v)] = static_cast<int>(qo.num());
        }

        // Every class has volume 2m/k; on a regular graph also size n/k.
        const long long total_volume = 2LL * g_.edge_count();
        if (total_volume % k_ != 0)
            return false;
        class_volume_cap_ = total_volume / k_;
        class_size_cap_ = n_;
        const auto report = structure_report(g_);
        if (report.regular_degree) {
            if (n_ % k_ != 0)
                return false;
            class_size_cap_ = n_ / k_;
        }

        // Fail-first: high degree first, ties by index.
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });

        color_.assign(static_cast<std::size_t>(n_), -1);
        counts_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k_), 0);
        class_volume_.assign(static_cast<std::size_t>(k_), 0);
        class_size_.assign(static_cast<std::size_t>(k_), 0);
        return true;
    }

    void run() { extend(0, 0); }

    std::vector<std::vector<int>> take_results() { return std::move(results_); }

private:
    int count(Vertex v, int c) const
    {
        return counts_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
    }

    int& count(Vertex v, int c)
    {
        return counts_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)];
    }

    int foreign_quota(Vertex v) const { return foreign_quota_[static_cast<std::size_t>(v)]; }
    int own_quota(Vertex v) const { return own_quota_[static_cast<std::size_t>(v)]; }

    /// Can v (colored or not) still meet its quotas given current counts?
    bool consistent(Vertex v, int opened) const
    {
        const int own = color_[static_cast<std::size_t>(v)];
        if (own >= 0) {
            for (int c = 0; c < opened; ++c)
                if (count(v, c) > (c == own ? own_quota(v) : foreign_quota(v)))
                    return false;
            return true;
        }
        // Uncolored: at most one class may exceed the foreign quota, and that
        // class must become v's own.
        int over = -1;
        bool any_own_slot = opened < k_;
        for (int c = 0; c < opened; ++c) {
            const int cnt = count(v, c);
            if (cnt > foreign_quota(v)) {
                if (over >= 0)
                    return false;
                over = c;
            }
            if (cnt <= own_quota(v))
                any_own_slot = true;
        }
        if (over >= 0)
            return count(v, over) <= own_quota(v);
        return any_own_slot;
    }

    void extend(int pos, int opened)
    {
        if (stop_)
            return;
        if (pos == n_) {
            if (opened == k_)
                emit();
            return;
        }
        const Vertex v = order_[static_cast<std::size_t>(pos)];
        const int remaining_after = n_ - pos - 1;
        const int limit = std::min(opened, k_ - 1);
        for (int c = 0; c <= limit && !stop_; ++c) {
            const int opened_after = std::max(opened, c + 1);
            if (k_ - opened_after > remaining_after)
                continue;
            if (!budget_.charge()) {
                stop_ = true;
                return;
            }
            if (class_volume_[static_cast<std::size_t>(c)] + g_.degree(v) > class_volume_cap_ ||
                class_size_[static_cast<std::size_t>(c)] + 1 > class_size_cap_)
                continue;

            color_[static_cast<std::size_t>(v)] = c;
            if (!consistent(v, opened_after)) {
                color_[static_cast<std::size_t>(v)] = -1;
                continue;
            }
            class_volume_[static_cast<std::size_t>(c)] += g_.degree(v);
            ++class_size_[static_cast<std::size_t>(c)];
            bool ok = true;
            for (Vertex w : g_.neighbors(v))
                ++count(w, c);
            for (Vertex w : g_.neighbors(v))
                if (!consistent(w, opened_after)) {
                    ok = false;
                    break;
                }
            if (ok)
                extend(pos + 1, opened_after);
            for (Vertex w : g_.neighbors(v))
                --count(w, c);
            --class_size_[static_cast<std::size_t>(c)];
            class_volume_[static_cast<std::size_t>(c)] -= g_.degree(v);
            color_[static_cast<std::size_t>(v)] = -1;
        }
    }

    void emit()
    {
        results_.push_back(canonicalize(Coloring(color_, k_)).assignment());
        if (first_only_)
            stop_ = true;
    }

    const Graph& g_;
    const int n_;
    const int k_;
    BudgetTracker& budget_;
    const bool first_only_;
    bool stop_ = false;

    std::vector<int> foreign_quota_;
    std::vector<int> own_quota_;
    long long class_volume_cap_ = 0;
    int class_size_cap_ = 0;
    std::vector<Vertex> order_;
    std::vector<int> color_;
    std::vector<int> counts_;
    std::vector<long long> class_volume_;
    std::vector<int> class_size_;
    std::vector<std::vector<int>> results_;
};

} // namespace

std::vector<std::vector<int>> search_connected(const Graph& g, int k, const Rational& alpha, BudgetTracker& budget,
                                               bool first_only)
{
    FixedSearch search(g, k, budget, first_only);
    if (!search.prepare(alpha))
        return {};
    search.run();
    auto results = search.take_results();
    std::sort(results.begin(), results.end());
    results.erase(std::unique(results.begin(), results.end()), results.end());
    return results;
}

} // namespace fatcolor::detail
