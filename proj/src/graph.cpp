#include "fatcolor/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "fatcolor/errors.hpp"

namespace fatcolor {

VertexSet::VertexSet(int n, std::initializer_list<Vertex> members)
    : VertexSet(n, std::span<const Vertex>(members.begin(), members.size()))
{
}

VertexSet::VertexSet(int n, std::span<const Vertex> members) : VertexSet(n)
{
    for (Vertex v : members) {
        if (v < 0 || v >= n)
            throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
        insert(v);
    }
}

VertexSet VertexSet::all(int n)
{
    VertexSet s(n);
    std::fill(s.flags_.begin(), s.flags_.end(), 1);
    return s;
}

int VertexSet::size() const
{
    return static_cast<int>(std::count(flags_.begin(), flags_.end(), 1));
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < flags_.size(); ++i)
        if (flags_[i])
            out.push_back(static_cast<Vertex>(i));
    return out;
}

VertexSet VertexSet::complement() const
{
    VertexSet out(universe());
    for (std::size_t i = 0; i < flags_.size(); ++i)
        out.flags_[i] = flags_[i] ? 0 : 1;
    return out;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    if (n < 1)
        throw InvalidParams("graph needs at least one vertex");
    Graph g;
    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw VertexOutOfRange("edge " + std::to_string(u) + " " + std::to_string(v) + " outside 0.." +
                                   std::to_string(n - 1));
        if (u == v)
            throw LoopEdge(u);
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& nb = g.adjacency_[static_cast<std::size_t>(v)];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end())
            throw DuplicateEdge(std::min(v, *dup), std::max(v, *dup));
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
{
    return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const
{
    std::vector<int> index(adjacency_.size(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> sub;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (Vertex w : neighbors(vertices[i])) {
            int j = index[static_cast<std::size_t>(w)];
            if (j > static_cast<int>(i))
                sub.emplace_back(static_cast<Vertex>(i), j);
        }
    return from_edge_list(static_cast<int>(vertices.size()), sub);
}

int neighbor_count(const Graph& g, Vertex v, const VertexSet& s)
{
    int count = 0;
    for (Vertex w : g.neighbors(v))
        if (s.contains(w))
            ++count;
    return count;
}

int edges_between(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    int count = 0;
    for (auto [u, v] : g.edges())
        if ((s.contains(u) && t.contains(v)) || (s.contains(v) && t.contains(u)))
            ++count;
    return count;
}

long long volume(const Graph& g, const VertexSet& s)
{
    long long vol = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (s.contains(v))
            vol += g.degree(v);
    return vol;
}

StructureReport structure_report(const Graph& g)
{
    const int n = g.vertex_count();
    StructureReport r;
    r.component_ids.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    r.is_bipartite = true;

    for (Vertex root = 0; root < n; ++root) {
        if (r.component_ids[static_cast<std::size_t>(root)] != -1)
            continue;
        const int id = r.component_count++;
        std::queue<Vertex> frontier;
        frontier.push(root);
        r.component_ids[static_cast<std::size_t>(root)] = id;
        side[static_cast<std::size_t>(root)] = 0;
        while (!frontier.empty()) {
            Vertex u = frontier.front();
            frontier.pop();
            for (Vertex w : g.neighbors(u)) {
                auto wi = static_cast<std::size_t>(w);
                if (r.component_ids[wi] == -1) {
                    r.component_ids[wi] = id;
                    side[wi] = 1 - side[static_cast<std::size_t>(u)];
                    frontier.push(w);
                } else if (side[wi] == side[static_cast<std::size_t>(u)]) {
                    r.is_bipartite = false;
                }
            }
        }
    }
    r.is_connected = r.component_count == 1;

    r.min_degree = g.degree(0);
    r.max_degree = g.degree(0);
    for (Vertex v = 0; v < n; ++v) {
        const int d = g.degree(v);
        r.min_degree = std::min(r.min_degree, d);
        r.max_degree = std::max(r.max_degree, d);
        r.degree_gcd = std::gcd(r.degree_gcd, d);
        if (d == 0)
            ++r.isolated_count;
    }
    if (r.min_degree == r.max_degree)
        r.regular_degree = r.min_degree;
    return r;
}

std::vector<std::vector<Vertex>> components(const Graph& g)
{
    const auto report = structure_report(g);
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(report.component_count));
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out[static_cast<std::size_t>(report.component_ids[static_cast<std::size_t>(v)])].push_back(v);
    return out;
}

} // namespace fatcolor
