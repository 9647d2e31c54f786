#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fatcolor {

using Vertex = int;

/// Membership flags over the vertices 0..n-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : flags_(static_cast<std::size_t>(n), 0) {}
    VertexSet(int n, std::initializer_list<Vertex> members);
    VertexSet(int n, std::span<const Vertex> members);

    static VertexSet all(int n);

    int universe() const { return static_cast<int>(flags_.size()); }
    bool contains(Vertex v) const { return flags_[static_cast<std::size_t>(v)] != 0; }
    void insert(Vertex v) { flags_[static_cast<std::size_t>(v)] = 1; }
    void erase(Vertex v) { flags_[static_cast<std::size_t>(v)] = 0; }
    int size() const;
    std::vector<Vertex> members() const;
    VertexSet complement() const;

private:
    std::vector<std::uint8_t> flags_;
};

/// Simple undirected graph on dense vertex indices. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws LoopEdge, DuplicateEdge, VertexOutOfRange or InvalidParams (n < 1).
    static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Subgraph induced by `vertices` (relabelled 0.. in the given order).
    Graph induced(std::span<const Vertex> vertices) const;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    int edge_count_ = 0;
};

struct StructureReport {
    bool is_connected = false;
    std::vector<int> component_ids;
    int component_count = 0;
    bool is_bipartite = false;
    std::optional<int> regular_degree;
    int min_degree = 0;
    int max_degree = 0;
    /// 0 for an edgeless graph.
    int degree_gcd = 0;
    int isolated_count = 0;
};

/// |N(v) ∩ S|
int neighbor_count(const Graph& g, Vertex v, const VertexSet& s);

/// Number of edges with one endpoint in S and the other in T; internal
/// edges of S are counted once when S and T overlap.
int edges_between(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Sum of degrees over S.
long long volume(const Graph& g, const VertexSet& s);

StructureReport structure_report(const Graph& g);

/// Vertices of each connected component, ascending, components ordered by
/// their smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

} // namespace fatcolor
