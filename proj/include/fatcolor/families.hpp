#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fatcolor/graph.hpp"

namespace fatcolor {

enum class FamilyKind { Complete, Cycle, Path, Star, Petal, Book, Turan, CompleteMultipartite };

struct FamilySpec {
    FamilyKind kind;
    /// Complete/Cycle/Path: {N}; Star: {n leaves}; Petal/Book: {m};
    /// Turan: {N, t}; CompleteMultipartite: part sizes.
    std::vector<int> params;

    static FamilySpec complete(int n) { return {FamilyKind::Complete, {n}}; }
    static FamilySpec cycle(int n) { return {FamilyKind::Cycle, {n}}; }
    static FamilySpec path(int n) { return {FamilyKind::Path, {n}}; }
    static FamilySpec star(int leaves) { return {FamilyKind::Star, {leaves}}; }
    static FamilySpec petal(int m) { return {FamilyKind::Petal, {m}}; }
    static FamilySpec book(int m) { return {FamilyKind::Book, {m}}; }
    static FamilySpec turan(int n, int t) { return {FamilyKind::Turan, {n, t}}; }
    static FamilySpec multipartite(std::vector<int> sizes) { return {FamilyKind::CompleteMultipartite, std::move(sizes)}; }
};

struct GeneratedGraph {
    Graph graph;
    /// Part index per vertex for Turán and complete multipartite graphs.
    std::optional<std::vector<int>> part_of;
};

/// Throws InvalidParams when the family parameters are out of range.
GeneratedGraph generate(const FamilySpec& spec);

/// Closed-form FAT chromatic number where one is known for the family.
std::optional<int> known_chi_fat(const FamilySpec& spec);

/// Parses `complete:5`, `cycle:12`, `path:4`, `star:7`, `petal:3`,
/// `book:4`, `turan:12,4`, `kpartite:4,3,3,3`. Returns nullopt when the
/// prefix is not a family name; throws InvalidParams on bad parameters.
std::optional<FamilySpec> parse_family(const std::string& text);

std::string to_string(const FamilySpec& spec);

// Seeded samplers for corpora and exploration.

/// Uniform random attachment tree on n vertices.
Graph random_tree(int n, std::uint64_t seed);

/// Erdős–Rényi G(n, p).
Graph random_gnp(int n, double p, std::uint64_t seed);

/// Random d-regular graph via the pairing model with restarts. Throws
/// InvalidParams if n*d is odd or d >= n.
Graph random_regular(int n, int d, std::uint64_t seed);

} // namespace fatcolor
