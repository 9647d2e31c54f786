#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fatcolor/coloring.hpp"
#include "fatcolor/families.hpp"
#include "fatcolor/graph.hpp"
#include "fatcolor/solver.hpp"

namespace fatcolor {

/// Edge-list text: `#` comment lines, then `N M`, then M lines `u v`.
/// Throws ParseError (with line number) or a graph construction error.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

struct GraphInput {
    Graph graph;
    std::optional<FamilySpec> family;
    std::optional<std::vector<int>> part_of;
};

/// A family spec string (`turan:12,4`) or a path to an edge-list file.
GraphInput parse_graph_input(const std::string& source);

/// `{"n", "k", "alpha", "beta", "classes"}`, classes canonical.
nlohmann::ordered_json coloring_to_json(const FatColoring& fc);

struct ColoringDocument {
    Coloring coloring;
    std::optional<Rational> alpha;
    std::optional<Rational> beta;
};

/// Reads the coloring JSON object; alpha/beta are optional on input.
/// Throws ParseError, NotAPartition or InvalidParams.
ColoringDocument coloring_from_json(const nlohmann::json& doc);

/// One node per element labelled `k=<k>, a=<r/s>`, edges finer -> coarser,
/// irreducible nodes double-circled.
void write_poset_dot(std::ostream& out, const ColoringPoset& poset);

} // namespace fatcolor
