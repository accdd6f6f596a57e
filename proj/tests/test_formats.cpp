#include "torchroma/torchroma.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace torchroma;

TEST(EdgeList, CountsMultiplicity)
{
    for (const auto& p : {TorusParams{5, 6, 2}, TorusParams{1, 5, 1}, TorusParams{2, 7, 5}, TorusParams{1, 3, 0}}) {
        const auto g = build_graph(p);
        EXPECT_EQ(edge_list(g).size(), g.edge_count()) << to_string(p);
    }
    EXPECT_EQ(edge_list(underlying_simple_graph(build_graph({1, 5, 1}))).size(), 10U);
}

TEST(Dimacs, K7)
{
    const auto text = to_dimacs(build_graph({1, 7, 2}));
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "c T(1,7,2)");
    std::getline(in, line);
    EXPECT_EQ(line, "p edge 7 21");
    int edges = 0;
    while (std::getline(in, line)) {
        EXPECT_EQ(line.rfind("e ", 0), 0U);
        ++edges;
    }
    EXPECT_EQ(edges, 21);
}

TEST(Dimacs, RejectsMultigraphs)
{
    EXPECT_THROW(to_dimacs(build_graph({1, 5, 1})), std::domain_error);
    EXPECT_NE(to_dimacs(underlying_simple_graph(build_graph({1, 5, 1}))).find("p edge 5 10"), std::string::npos);
}

TEST(Dot, ListsVerticesAndEdges)
{
    const auto text = to_dot(build_graph({3, 3, 0}));
    EXPECT_EQ(text.rfind("graph \"T(3,3,0)\" {", 0), 0U);
    EXPECT_NE(text.find("  1 [label=\"(1,1)\"];"), std::string::npos);
    EXPECT_NE(text.find("  9 [label=\"(3,3)\"];"), std::string::npos);
    EXPECT_NE(text.find("  1 -- 2;"), std::string::npos);
}

TEST(Json, GraphEdges)
{
    const auto j = to_json(build_graph({5, 6, 2}));
    EXPECT_EQ(j["r"], 5);
    EXPECT_EQ(j["s"], 6);
    EXPECT_EQ(j["t"], 2);
    EXPECT_EQ(j["edges"].size(), 90U);
    for (const auto& e : j["edges"]) {
        EXPECT_GE(e[0].get<int>(), 1);
        EXPECT_LE(e[1].get<int>(), 30);
        EXPECT_LT(e[0].get<int>(), e[1].get<int>());
    }
}

TEST(Json, Verdicts)
{
    const auto loops = verdict_json({1, 3, 0}, classify({1, 3, 0}));
    EXPECT_EQ(loops["verdict"], "loops");
    EXPECT_TRUE(loops["chi"].is_null());
    EXPECT_EQ(loops["rule"], "5.1(a)");

    const auto six = verdict_json({1, 11, 3}, classify({1, 11, 3}));
    EXPECT_EQ(six["verdict"], "chromatic");
    EXPECT_EQ(six["chi"], 6);
    EXPECT_EQ(six["rule"], "5.1(c) 11-vertex");

    const auto five = verdict_json({3, 7, 5}, classify({3, 7, 5}));
    EXPECT_EQ(five["chi"], 5);
    EXPECT_EQ(five["rule"].get<std::string>().rfind("5.1(d)", 0), 0U);
}

TEST(Json, ColoringColumns)
{
    const auto c = color_two_columns({2, 6, 0});
    const auto j = coloring_json(c);
    EXPECT_EQ(j["k"], 4);
    EXPECT_EQ(j["strategy"], "two-columns");
    ASSERT_EQ(j["colors"].size(), 2U);
    EXPECT_EQ(j["colors"][0].size(), 6U);
    EXPECT_EQ(j["colors"][1][0], c.color({2, 1}));
}

TEST(Grid, TopRowIsLastRow)
{
    const auto c = color_t1s2(12);
    const auto grid = render_grid(c);
    std::istringstream in(grid);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "4");
    int rows = 1;
    for (std::string line; std::getline(in, line);) {
        ++rows;
    }
    EXPECT_EQ(rows, 12);
}

TEST(Json, Enumeration)
{
    const auto j = enumeration_json(enumerate_order(7));
    ASSERT_FALSE(j.empty());
    for (const auto& e : j) {
        EXPECT_EQ(e["circuits"].size(), 3U);
    }
}
