#include "fatcolor/families.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "fatcolor/errors.hpp"

namespace fatcolor {

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw InvalidParams(what);
}

void require_arity(const FamilySpec& spec, std::size_t arity, const char* name)
{
    require(spec.params.size() == arity, std::string(name) + " takes " + std::to_string(arity) + " parameter(s)");
}

GeneratedGraph multipartite(const std::vector<int>& sizes)
{
    std::vector<int> part_of;
    for (std::size_t p = 0; p < sizes.size(); ++p)
        part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
    const int n = static_cast<int>(part_of.size());
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                edges.emplace_back(u, v);
    return {Graph::from_edge_list(n, edges), std::move(part_of)};
}

const std::map<std::string, FamilyKind>& family_names()
{
    static const std::map<std::string, FamilyKind> names{
        {"complete", FamilyKind::Complete}, {"cycle", FamilyKind::Cycle},
        {"path", FamilyKind::Path},         {"star", FamilyKind::Star},
        {"petal", FamilyKind::Petal},       {"book", FamilyKind::Book},
        {"turan", FamilyKind::Turan},       {"kpartite", FamilyKind::CompleteMultipartite},
    };
    return names;
}

} // namespace

GeneratedGraph generate(const FamilySpec& spec)
{
    const auto& p = spec.params;
    EdgeList edges;
    switch (spec.kind) {
    case FamilyKind::Complete: {
        require_arity(spec, 1, "complete");
        require(p[0] >= 1, "complete graph needs N >= 1");
        for (Vertex u = 0; u < p[0]; ++u)
            for (Vertex v = u + 1; v < p[0]; ++v)
                edges.emplace_back(u, v);
        return {Graph::from_edge_list(p[0], edges), std::nullopt};
    }
    case FamilyKind::Cycle: {
        require_arity(spec, 1, "cycle");
        require(p[0] >= 3, "cycle needs N >= 3");
        for (Vertex u = 0; u < p[0]; ++u)
            edges.emplace_back(u, (u + 1) % p[0]);
        return {Graph::from_edge_list(p[0], edges), std::nullopt};
    }
    case FamilyKind::Path: {
        require_arity(spec, 1, "path");
        require(p[0] >= 1, "path needs N >= 1");
        for (Vertex u = 0; u + 1 < p[0]; ++u)
            edges.emplace_back(u, u + 1);
        return {Graph::from_edge_list(p[0], edges), std::nullopt};
    }
    case FamilyKind::Star: {
        require_arity(spec, 1, "star");
        require(p[0] >= 1, "star needs n >= 1 leaves");
        for (Vertex v = 1; v <= p[0]; ++v)
            edges.emplace_back(0, v);
        return {Graph::from_edge_list(p[0] + 1, edges), std::nullopt};
    }
    case FamilyKind::Petal: {
        // x = 0, v_i = 1..m, w_i = m+1..2m
        require_arity(spec, 1, "petal");
        const int m = p[0];
        require(m >= 1, "petal graph needs m >= 1");
        for (int i = 1; i <= m; ++i) {
            edges.emplace_back(0, i);
            edges.emplace_back(0, m + i);
            edges.emplace_back(i, m + i);
        }
        return {Graph::from_edge_list(2 * m + 1, edges), std::nullopt};
    }
    case FamilyKind::Book: {
        // x = 0, y = 1, v_i = 2..m+1, w_i = m+2..2m+1
        require_arity(spec, 1, "book");
        const int m = p[0];
        require(m >= 1, "book graph needs m >= 1");
        for (int i = 0; i < m; ++i) {
            const Vertex v = 2 + i;
            const Vertex w = 2 + m + i;
            edges.emplace_back(0, v);
            edges.emplace_back(1, w);
            edges.emplace_back(v, w);
        }
        return {Graph::from_edge_list(2 * m + 2, edges), std::nullopt};
    }
    case FamilyKind::Turan: {
        require_arity(spec, 2, "turan");
        const int n = p[0];
        const int t = p[1];
        require(t >= 1 && t <= n, "turan needs 1 <= t <= N");
        std::vector<int> sizes(static_cast<std::size_t>(t), n / t);
        for (int i = 0; i < n % t; ++i)
            ++sizes[static_cast<std::size_t>(i)];
        return multipartite(sizes);
    }
    case FamilyKind::CompleteMultipartite: {
        require(!p.empty(), "kpartite needs at least one part");
        require(std::all_of(p.begin(), p.end(), [](int s) { return s >= 1; }), "kpartite part sizes must be >= 1");
        return multipartite(p);
    }
    }
    throw InvalidParams("unknown family");
}

std::optional<int> known_chi_fat(const FamilySpec& spec)
{
    const auto& p = spec.params;
    switch (spec.kind) {
    case FamilyKind::Complete:
        return p.at(0);
    case FamilyKind::Path:
        return p.at(0) == 1 ? 1 : 2;
    case FamilyKind::Star:
        return 2;
    case FamilyKind::Petal:
        return 3;
    case FamilyKind::Book:
        return p.at(0) % 2 == 1 ? 2 : 3;
    case FamilyKind::Cycle: {
        const int n = p.at(0);
        if (n % 3 == 0)
            return 3;
        return n % 2 == 0 ? 2 : 1;
    }
    case FamilyKind::Turan: {
        const int n = p.at(0);
        const int t = p.at(1);
        if (n % t != 0)
            return std::nullopt;
        return std::max(t, n / t);
    }
    case FamilyKind::CompleteMultipartite:
        return std::nullopt;
    }
    return std::nullopt;
}

std::optional<FamilySpec> parse_family(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        return std::nullopt;
    const auto it = family_names().find(text.substr(0, colon));
    if (it == family_names().end())
        return std::nullopt;

    FamilySpec spec{it->second, {}};
    std::stringstream body(text.substr(colon + 1));
    std::string field;
    while (std::getline(body, field, ',')) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(field, &used);
        } catch (const std::exception&) {
            throw InvalidParams("bad family parameter '" + field + "' in " + text);
        }
        if (used != field.size())
            throw InvalidParams("bad family parameter '" + field + "' in " + text);
        spec.params.push_back(value);
    }
    generate(spec); // validates
    return spec;
}

std::string to_string(const FamilySpec& spec)
{
    std::string out;
    for (const auto& [name, kind] : family_names())
        if (kind == spec.kind)
            out = name;
    out += ':';
    for (std::size_t i = 0; i < spec.params.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(spec.params[i]);
    }
    return out;
}

Graph random_tree(int n, std::uint64_t seed)
{
    require(n >= 1, "tree needs n >= 1");
    std::mt19937_64 rng(seed);
    EdgeList edges;
    for (Vertex v = 1; v < n; ++v) {
        std::uniform_int_distribution<Vertex> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    return Graph::from_edge_list(n, edges);
}

Graph random_gnp(int n, double p, std::uint64_t seed)
{
    require(n >= 1, "G(n,p) needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "G(n,p) needs 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    EdgeList edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed)
{
    require(n >= 1 && d >= 0 && d < n, "random regular graph needs 0 <= d < n");
    require((n * d) % 2 == 0, "random regular graph needs n*d even");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Vertex> stubs;
        for (Vertex v = 0; v < n; ++v)
            stubs.insert(stubs.end(), static_cast<std::size_t>(d), v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        EdgeList edges;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            std::pair<Vertex, Vertex> e = std::minmax(stubs[i], stubs[i + 1]);
            if (e.first == e.second || std::find(edges.begin(), edges.end(), e) != edges.end())
                simple = false;
            else
                edges.emplace_back(e);
        }
        if (simple)
            return Graph::from_edge_list(n, edges);
    }
    throw InvalidParams("random regular sampler gave up after 10000 attempts");
}

} // namespace fatcolor
