#include "doctest.h"

#include <algorithm>

#include "fatcolor/errors.hpp"
#include "fatcolor/families.hpp"
#include "fatcolor/graph.hpp"

using namespace fatcolor;

namespace {

std::vector<int> degrees(const Graph& g)
{
    std::vector<int> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out.push_back(g.degree(v));
    return out;
}

} // namespace

TEST_CASE("petal and book layouts")
{
    const Graph petal = generate(FamilySpec::petal(2)).graph;
    CHECK(petal.vertex_count() == 5);
    CHECK(petal.edge_count() == 6);
    CHECK(degrees(petal) == std::vector<int>{4, 2, 2, 2, 2});
    CHECK(petal.adjacent(1, 3));

    const Graph book = generate(FamilySpec::book(3)).graph;
    CHECK(book.vertex_count() == 8);
    CHECK(book.edge_count() == 9);
    CHECK(degrees(book) == std::vector<int>{3, 3, 2, 2, 2, 2, 2, 2});
    CHECK(book.adjacent(0, 2));
    CHECK(book.adjacent(1, 5));
    CHECK(book.adjacent(2, 5));
}

TEST_CASE("turan graphs")
{
    auto t13 = generate(FamilySpec::turan(13, 4));
    REQUIRE(t13.part_of);
    std::vector<int> sizes(4, 0);
    for (int p : *t13.part_of)
        ++sizes[static_cast<std::size_t>(p)];
    CHECK(sizes == std::vector<int>{4, 3, 3, 3});
    CHECK(t13.graph.edge_count() == (13 * 12 / 2) - (6 + 3 + 3 + 3));

    auto t12 = structure_report(generate(FamilySpec::turan(12, 4)).graph);
    CHECK(t12.regular_degree == 9);

    for (int n = 2; n <= 12; ++n)
        for (int t = 1; t <= n; ++t)
            if (n % t == 0)
                CHECK(structure_report(generate(FamilySpec::turan(n, t)).graph).regular_degree == n - n / t);
}

TEST_CASE("simple families")
{
    CHECK(generate(FamilySpec::complete(5)).graph.edge_count() == 10);
    CHECK(generate(FamilySpec::cycle(7)).graph.edge_count() == 7);
    CHECK(generate(FamilySpec::path(1)).graph.edge_count() == 0);
    CHECK(generate(FamilySpec::path(4)).graph.edge_count() == 3);
    CHECK(generate(FamilySpec::star(7)).graph.degree(0) == 7);
    auto kp = generate(FamilySpec::multipartite({2, 1}));
    CHECK(kp.graph.edge_count() == 2);
    CHECK(*kp.part_of == std::vector<int>{0, 0, 1});
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(generate(FamilySpec::cycle(2)), InvalidParams);
    CHECK_THROWS_AS(generate(FamilySpec::complete(0)), InvalidParams);
    CHECK_THROWS_AS(generate(FamilySpec::star(0)), InvalidParams);
    CHECK_THROWS_AS(generate(FamilySpec::petal(0)), InvalidParams);
    CHECK_THROWS_AS(generate(FamilySpec::turan(3, 4)), InvalidParams);
    CHECK_THROWS_AS(generate(FamilySpec::multipartite({2, 0})), InvalidParams);
}

TEST_CASE("known_chi_fat")
{
    CHECK(known_chi_fat(FamilySpec::cycle(5)) == 1);
    CHECK(known_chi_fat(FamilySpec::cycle(4)) == 2);
    CHECK(known_chi_fat(FamilySpec::cycle(6)) == 3);
    CHECK(known_chi_fat(FamilySpec::book(4)) == 3);
    CHECK(known_chi_fat(FamilySpec::book(3)) == 2);
    CHECK(known_chi_fat(FamilySpec::petal(3)) == 3);
    CHECK(known_chi_fat(FamilySpec::complete(6)) == 6);
    CHECK(known_chi_fat(FamilySpec::star(4)) == 2);
    CHECK(known_chi_fat(FamilySpec::path(3)) == 2);
    CHECK(known_chi_fat(FamilySpec::turan(12, 4)) == 4);
    CHECK(known_chi_fat(FamilySpec::turan(12, 3)) == 4);
    CHECK_FALSE(known_chi_fat(FamilySpec::turan(13, 4)).has_value());
    CHECK_FALSE(known_chi_fat(FamilySpec::multipartite({2, 3})).has_value());
}

TEST_CASE("family strings round-trip")
{
    for (const char* text : {"complete:5", "cycle:12", "path:4", "star:7", "petal:3", "book:4", "turan:12,4",
                             "kpartite:4,3,3,3"}) {
        auto spec = parse_family(text);
        REQUIRE(spec);
        CHECK(to_string(*spec) == text);
    }
    CHECK_FALSE(parse_family("graph.txt").has_value());
    CHECK_THROWS_AS(parse_family("cycle:2"), InvalidParams);
    CHECK_THROWS_AS(parse_family("turan:12"), InvalidParams);
    CHECK_THROWS_AS(parse_family("complete:x"), InvalidParams);
}

TEST_CASE("seeded samplers are reproducible")
{
    auto t1 = random_tree(10, 3);
    CHECK(t1.edge_count() == 9);
    CHECK(structure_report(t1).is_connected);
    CHECK(t1.edges() == random_tree(10, 3).edges());

    CHECK(random_gnp(9, 0.5, 11).edges() == random_gnp(9, 0.5, 11).edges());

    auto r = random_regular(10, 3, 5);
    CHECK(structure_report(r).regular_degree == 3);
    CHECK_THROWS_AS(random_regular(5, 3, 1), InvalidParams);
}
