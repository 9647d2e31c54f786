#include "fatcolor/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fatcolor/errors.hpp"

namespace fatcolor {

namespace {

bool is_blank_or_comment(const std::string& line)
{
    const auto first = line.find_first_not_of(" \t\r");
    return first == std::string::npos || line[first] == '#';
}

/// Reads exactly two integers from `line` or throws ParseError.
std::pair<long long, long long> two_integers(const std::string& line, std::size_t line_no, const char* what)
{
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string rest;
    if (!(fields >> a >> b))
        throw ParseError(line_no, std::string("expected ") + what);
    if (fields >> rest)
        throw ParseError(line_no, "trailing data '" + rest + "'");
    return {a, b};
}

Rational rational_field(const nlohmann::json& doc, const char* key)
{
    if (!doc[key].is_string())
        throw ParseError(0, std::string("'") + key + "' must be an r/s string");
    try {
        return parse_rational(doc[key].get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, std::string("'") + key + "': " + e.what());
    }
}

} // namespace

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    auto parse_int = [&](const std::string& part) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(part, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed rational '" + text + "'");
        }
        if (used != part.size())
            throw std::invalid_argument("malformed rational '" + text + "'");
        return value;
    };
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    const long long den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

Graph read_edge_list(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::pair<long long, long long>> header;
    std::vector<std::pair<Vertex, Vertex>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line))
            continue;
        if (!header) {
            header = two_integers(line, line_no, "header 'N M'");
            if (header->first < 1 || header->second < 0)
                throw ParseError(line_no, "header needs N >= 1 and M >= 0");
            continue;
        }
        auto [u, v] = two_integers(line, line_no, "edge 'u v'");
        if (u < 0 || v < 0 || u >= header->first || v >= header->first)
            throw ParseError(line_no, "vertex outside 0.." + std::to_string(header->first - 1));
        if (static_cast<long long>(edges.size()) == header->second)
            throw ParseError(line_no, "more edges than the header's M = " + std::to_string(header->second));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!header)
        throw ParseError(line_no, "missing header 'N M'");
    if (static_cast<long long>(edges.size()) != header->second)
        throw ParseError(line_no, "expected " + std::to_string(header->second) + " edges, found " +
                                      std::to_string(edges.size()));
    return Graph::from_edge_list(static_cast<int>(header->first), edges);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

GraphInput parse_graph_input(const std::string& source)
{
    if (auto family = parse_family(source)) {
        auto generated = generate(*family);
        return {std::move(generated.graph), std::move(family), std::move(generated.part_of)};
    }
    std::ifstream in(source);
    if (!in)
        throw InvalidParams("cannot open '" + source + "' (and it is not a family spec)");
    return {read_edge_list(in), std::nullopt, std::nullopt};
}

nlohmann::ordered_json coloring_to_json(const FatColoring& fc)
{
    const Coloring c = canonicalize(fc.coloring);
    nlohmann::ordered_json doc;
    doc["n"] = c.vertex_count();
    doc["k"] = c.k();
    doc["alpha"] = fc.alpha.str();
    doc["beta"] = fc.beta.str();
    doc["classes"] = c.classes();
    return doc;
}

ColoringDocument coloring_from_json(const nlohmann::json& doc)
{
    if (!doc.is_object())
        throw ParseError(0, "coloring document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw ParseError(0, "'n' must be an integer");
    if (!doc.contains("classes") || !doc["classes"].is_array())
        throw ParseError(0, "'classes' must be an array of vertex arrays");

    const int n = doc["n"].get<int>();
    std::vector<std::vector<Vertex>> classes;
    for (const auto& cls : doc["classes"]) {
        if (!cls.is_array() || cls.empty())
            throw ParseError(0, "each class must be a nonempty array of vertices");
        std::vector<Vertex> members;
        for (const auto& v : cls) {
            if (!v.is_number_integer())
                throw ParseError(0, "vertices must be integers");
            members.push_back(v.get<Vertex>());
        }
        classes.push_back(std::move(members));
    }
    if (classes.empty())
        throw ParseError(0, "'classes' is empty");

    ColoringDocument out{Coloring::from_classes(n, classes), std::nullopt, std::nullopt};
    if (doc.contains("k")) {
        if (!doc["k"].is_number_integer() || doc["k"].get<int>() != out.coloring.k())
            throw ParseError(0, "'k' does not match the number of classes");
    }
    if (doc.contains("alpha"))
        out.alpha = rational_field(doc, "alpha");
    if (doc.contains("beta"))
        out.beta = rational_field(doc, "beta");
    return out;
}

void write_poset_dot(std::ostream& out, const ColoringPoset& poset)
{
    std::vector<char> irreducible(poset.elements.size(), 0);
    for (std::size_t i : poset.maximal)
        irreducible[i] = 1;

    out << "digraph fat_poset {\n";
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        const auto& fc = poset.elements[i];
        out << "  n" << i << " [label=\"k=" << fc.k() << ", a=" << fc.alpha.str() << "\"";
        if (irreducible[i])
            out << ", shape=doublecircle";
        out << "];\n";
    }
    for (auto [finer, coarser] : poset.hasse_edges)
        out << "  n" << finer << " -> n" << coarser << ";\n";
    out << "}\n";
}

} // namespace fatcolor
