#include "fatcolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fatcolor/errors.hpp"

namespace fatcolor {

Coloring::Coloring(std::vector<int> assignment, int k) : assignment_(std::move(assignment)), k_(k)
{
    if (k_ < 1)
        throw InvalidParams("coloring needs k >= 1");
    std::vector<char> used(static_cast<std::size_t>(k_), 0);
    for (int c : assignment_) {
        if (c < 0 || c >= k_)
            throw InvalidParams("class label " + std::to_string(c) + " outside 0.." + std::to_string(k_ - 1));
        used[static_cast<std::size_t>(c)] = 1;
    }
    for (int c = 0; c < k_; ++c)
        if (!used[static_cast<std::size_t>(c)])
            throw InvalidParams("class " + std::to_string(c) + " is empty");
}

Coloring Coloring::from_assignment(std::vector<int> assignment)
{
    int k = 0;
    for (int c : assignment)
        k = std::max(k, c + 1);
    return Coloring(std::move(assignment), k);
}

Coloring Coloring::from_classes(int n, const std::vector<std::vector<Vertex>>& classes)
{
    std::vector<int> assignment(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (Vertex v : classes[i]) {
            if (v < 0 || v >= n)
                throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
            if (assignment[static_cast<std::size_t>(v)] != -1)
                throw NotAPartition("vertex " + std::to_string(v) + " appears in two classes");
            assignment[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    for (Vertex v = 0; v < n; ++v)
        if (assignment[static_cast<std::size_t>(v)] == -1)
            throw NotAPartition("vertex " + std::to_string(v) + " is not colored");
    return Coloring(std::move(assignment), static_cast<int>(classes.size()));
}

std::vector<std::vector<Vertex>> Coloring::classes() const
{
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(k_));
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        out[static_cast<std::size_t>(assignment_[v])].push_back(static_cast<Vertex>(v));
    return out;
}

VertexSet Coloring::class_set(int i) const
{
    VertexSet s(vertex_count());
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        if (assignment_[v] == i)
            s.insert(static_cast<Vertex>(v));
    return s;
}

bool canonical_less(const FatColoring& a, const FatColoring& b)
{
    if (a.k() != b.k())
        return a.k() < b.k();
    if (a.alpha != b.alpha)
        return a.alpha < b.alpha;
    return a.coloring < b.coloring;
}

std::string_view to_string(RejectionReason reason)
{
    switch (reason) {
    case RejectionReason::AlphaInconsistent:
        return "AlphaInconsistent";
    case RejectionReason::CountMismatch:
        return "CountMismatch";
    case RejectionReason::NonIntegerRequirement:
        return "NonIntegerRequirement";
    }
    return "?";
}

VerifyResult verify_fat(const Graph& g, const Coloring& c)
{
    const int n = g.vertex_count();
    if (c.vertex_count() != n)
        throw InvalidParams("coloring covers " + std::to_string(c.vertex_count()) + " vertices, graph has " +
                            std::to_string(n));
    const int k = c.k();
    if (k == 1)
        return FatColoring{c, Rational(0), Rational(1)};

    // counts[v*k + i] = e(v, V_i)
    std::vector<int> counts(static_cast<std::size_t>(n) * static_cast<std::size_t>(k), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v))
            ++counts[static_cast<std::size_t>(v * k + c[w])];

    Rational alpha(0);
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 0)
            continue;
        const int foreign = c[v] == 0 ? 1 : 0;
        alpha = Rational(counts[static_cast<std::size_t>(v * k + foreign)], g.degree(v));
        break;
    }
    const Rational beta = Rational(1) - Rational(k - 1) * alpha;

    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        for (int i = 0; i < k; ++i) {
            const bool own = c[v] == i;
            const Rational expected = (own ? beta : alpha) * Rational(d);
            const int actual = counts[static_cast<std::size_t>(v * k + i)];
            if (!expected.is_integer())
                return Rejection{v, i, expected, actual, RejectionReason::NonIntegerRequirement};
            if (expected.num() != actual)
                return Rejection{v, i, expected, actual,
                                 own ? RejectionReason::CountMismatch : RejectionReason::AlphaInconsistent};
        }
    }
    return FatColoring{c, alpha, beta};
}

FatColoring merge(const Graph& g, const FatColoring& fc, const std::vector<std::vector<int>>& grouping)
{
    const int k = fc.k();
    const int groups = static_cast<int>(grouping.size());
    if (groups == 0)
        throw NotAPartition("grouping is empty");

    std::vector<int> group_of(static_cast<std::size_t>(k), -1);
    for (int j = 0; j < groups; ++j)
        for (int cls : grouping[static_cast<std::size_t>(j)]) {
            if (cls < 0 || cls >= k)
                throw NotAPartition("class " + std::to_string(cls) + " outside 0.." + std::to_string(k - 1));
            if (group_of[static_cast<std::size_t>(cls)] != -1)
                throw NotAPartition("class " + std::to_string(cls) + " appears in two groups");
            group_of[static_cast<std::size_t>(cls)] = j;
        }
    for (int cls = 0; cls < k; ++cls)
        if (group_of[static_cast<std::size_t>(cls)] == -1)
            throw NotAPartition("class " + std::to_string(cls) + " is not in any group");
    for (const auto& group : grouping)
        if (static_cast<int>(group.size()) * groups != k)
            throw UnequalGroups("groups must each hold k/l = " + std::to_string(k) + "/" + std::to_string(groups) +
                                " classes");

    std::vector<int> merged(static_cast<std::size_t>(fc.coloring.vertex_count()));
    for (std::size_t v = 0; v < merged.size(); ++v)
        merged[v] = group_of[static_cast<std::size_t>(fc.coloring.assignment()[v])];

    Rational alpha(0);
    Rational beta(1);
    if (groups >= 2) {
        const Rational ratio(k / groups);
        alpha = ratio * fc.alpha;
        beta = fc.beta + (ratio - Rational(1)) * fc.alpha;
    }

    auto verified = verify_fat(g, Coloring(std::move(merged), groups));
    auto* result = std::get_if<FatColoring>(&verified);
    if (result == nullptr || result->alpha != alpha || result->beta != beta)
        throw std::logic_error("merged coloring does not reproduce the merge parameters");
    return *result;
}

bool is_coarser(const Coloring& coarse, const Coloring& fine)
{
    if (coarse.vertex_count() != fine.vertex_count())
        throw InvalidParams("colorings on different vertex sets");
    std::vector<int> image(static_cast<std::size_t>(fine.k()), -1);
    for (Vertex v = 0; v < fine.vertex_count(); ++v) {
        int& slot = image[static_cast<std::size_t>(fine[v])];
        if (slot == -1)
            slot = coarse[v];
        else if (slot != coarse[v])
            return false;
    }
    return true;
}

Coloring canonicalize(const Coloring& c)
{
    std::vector<int> relabel(static_cast<std::size_t>(c.k()), -1);
    int next = 0;
    std::vector<int> out(static_cast<std::size_t>(c.vertex_count()));
    for (Vertex v = 0; v < c.vertex_count(); ++v) {
        int& label = relabel[static_cast<std::size_t>(c[v])];
        if (label == -1)
            label = next++;
        out[static_cast<std::size_t>(v)] = label;
    }
    return Coloring(std::move(out), c.k());
}

FatColoring canonicalize(const FatColoring& fc)
{
    return FatColoring{canonicalize(fc.coloring), fc.alpha, fc.beta};
}

} // namespace fatcolor
