#include "doctest.h"
#include "trgraph/io.hpp"

using namespace trgraph;

TEST_CASE("parse_edge_list spec examples") {
    Graph single = parse_edge_list("2 1\n0 1");
    CHECK(single.vertex_count() == 2);
    CHECK(single.edge_count() == 1);
    CHECK(single.has_edge(0, 1));

    Graph k1 = parse_edge_list("1 0");
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    Graph c4 = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0");
    CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("parse_edge_list error paths") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n1 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0"), ParseError);   // duplicate, reversed
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), ParseError);        // truncated
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n0 1"), ParseError);   // trailing content
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1 9"), ParseError);      // junk on line
}

TEST_CASE("edge-list writer is byte-exact") {
    Graph g(4, {{3, 2}, {1, 0}, {0, 2}});
    CHECK(format_edge_list(g) == "4 3\n0 1\n0 2\n2 3\n");
    CHECK(format_edge_list(Graph(1)) == "1 0\n");
    // round trip
    CHECK(format_edge_list(parse_edge_list(format_edge_list(g))) == format_edge_list(g));
}

TEST_CASE("partition file round trip and errors") {
    OrderedPartition p{{{2, 0}, {1}, {3}}};
    CHECK(format_partition(p) == "0 2\n1\n3\n");
    OrderedPartition back = parse_partition("0 2\n1\n3\n");
    CHECK(back.blocks == std::vector<std::vector<int>>{{0, 2}, {1}, {3}});
    CHECK_THROWS_AS(parse_partition(""), ParseError);
    CHECK_THROWS_AS(parse_partition("0 x\n"), ParseError);
}
