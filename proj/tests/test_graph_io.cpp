#include <gtest/gtest.h>

#include "cspt/gadgets.hpp"
#include "cspt/graph_io.hpp"

using namespace cspt;

TEST(Gl1, WriteFormat) {
    EXPECT_EQ(to_gl1(path_graph(3)), "g 3 2\ne 0 1\ne 1 2\n");
    EXPECT_EQ(to_gl1(Graph{}), "g 0 0\n");
}

TEST(Gl1, RoundTripIsByteStable) {
    const auto art = build_JI_k(NaeInstance{5, {{1, 2, 3}, {3, 4, 5}}}, 4);
    const std::string text = to_gl1(art.graph);
    const Graph back = parse_gl1(text);
    EXPECT_EQ(to_gl1(back), text);
    EXPECT_EQ(back.edges(), art.graph.edges());
}

TEST(Gl1, CommentsAndBlankLines) {
    const Graph g = parse_gl1("# a triangle\n\ng 3 3\ne 0 1\ne 1 2\n# done\ne 0 2\n");
    EXPECT_EQ(g.size(), 3u);
}

TEST(Gl1, RejectsMalformedInput) {
    EXPECT_THROW(parse_gl1(""), ParseError);
    EXPECT_THROW(parse_gl1("e 0 1\n"), ParseError);
    EXPECT_THROW(parse_gl1("g 2 1\ne 0 2\n"), ParseError);
    EXPECT_THROW(parse_gl1("g 2 1\ne 1 1\n"), ParseError);
    EXPECT_THROW(parse_gl1("g 2 2\ne 0 1\ne 1 0\n"), ParseError);
    EXPECT_THROW(parse_gl1("g 2 2\ne 0 1\n"), ParseError);
    EXPECT_THROW(parse_gl1("g 2 1\ne 0 1 5\n"), ParseError);
    EXPECT_THROW(parse_gl1("g 2 1\nx 0 1\n"), ParseError);
    EXPECT_THROW(parse_gl1("g 2 0\ng 2 0\n"), ParseError);
    EXPECT_THROW(parse_gl1("g -1 0\n"), ParseError);
}

TEST(Sidecar, RoundTripWithLists) {
    const auto art = build_JI(NaeInstance{3, {{1, 2, 3}}});
    const Sidecar s = art.sidecar();
    const std::string text = write_sidecar(s);
    const Sidecar back = parse_sidecar(text);
    EXPECT_EQ(back, s);
    EXPECT_EQ(write_sidecar(back), text);
    ASSERT_TRUE(back.lists);
    EXPECT_EQ(back.lists->lists[art.at("a1.2")], mask_of({2, 3, 4}));
}

TEST(Sidecar, RoundTripWithPrecolouring) {
    const auto art = build_theorem5_gadget(NaeInstance{3, {{1, 2, 3}}});
    const Sidecar s = art.sidecar();
    const Sidecar back = parse_sidecar(write_sidecar(s));
    EXPECT_EQ(back, s);
    ASSERT_TRUE(back.precolouring);
    EXPECT_EQ(back.precolouring->assignment.at(art.at("c1")), 3);
    Graph g = parse_gl1(to_gl1(art.graph));
    apply_tags(g, back);
    EXPECT_EQ(g, art.graph);
}

TEST(Sidecar, RejectsMalformedInput) {
    EXPECT_THROW(parse_sidecar("not json"), ParseError);
    EXPECT_THROW(parse_sidecar("{\"tags\": [\"Nope\"]}"), ParseError);
    EXPECT_THROW(parse_sidecar("{\"tags\": [], \"lists\": {\"k\": 2, \"lists\": [[3]]}}"), ParseError);
    Graph g(2);
    EXPECT_THROW(apply_tags(g, Sidecar{}), ParseError);
}
