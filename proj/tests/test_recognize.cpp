#include "oracles.hpp"

#include <mimlab/error.hpp>
#include <mimlab/generators.hpp>
#include <mimlab/recognize.hpp>

#include <doctest.h>

using namespace mimlab;

namespace
{
    auto sun3() -> Graph
    {
        // triangle 1 3 5, ears 0 2 4
        return Graph(6, {{1, 3}, {3, 5}, {1, 5}, {0, 1}, {0, 5}, {2, 1}, {2, 3}, {4, 3}, {4, 5}});
    }

    const GraphClass all_classes[] = {GraphClass::bipartite, GraphClass::split, GraphClass::chordal, GraphClass::strongly_chordal,
        GraphClass::chordal_bipartite, GraphClass::comparability, GraphClass::co_comparability};

    auto oracle_verdict(GraphClass c, const Graph & g) -> bool
    {
        switch (c) {
        case GraphClass::bipartite: return oracle::bipartite(g);
        case GraphClass::split: return oracle::split(g);
        case GraphClass::chordal: return oracle::chordal(g);
        case GraphClass::strongly_chordal: return oracle::strongly_chordal(g);
        case GraphClass::chordal_bipartite: return oracle::chordal_bipartite(g);
        case GraphClass::comparability: return oracle::comparability(g);
        case GraphClass::co_comparability: return oracle::comparability(complement(g));
        }
        return false;
    }
}

TEST_CASE("every recognizer agrees with its oracle on all graphs up to 5 vertices")
{
    for (int n = 1; n <= 5; ++n)
        for (auto & g : oracle::all_graphs(n))
            for (auto c : all_classes) {
                auto r = recognize(c, g);
                INFO(to_string(c), " ", to_text(r));
                REQUIRE(r.verdict == oracle_verdict(c, g));
                REQUIRE(verify_certificate(c, g, r));
            }
}

TEST_CASE("recognizers agree with oracles on random graphs of 6 to 7 vertices")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        int n = 6 + static_cast<int>(seed % 2);
        auto g = oracle::random_graph(n, 0.25 + 0.1 * static_cast<double>(seed % 5), seed);
        for (auto c : all_classes) {
            if ((c == GraphClass::comparability && g.size() > 14) || (c == GraphClass::co_comparability && n * (n - 1) / 2 - g.size() > 14))
                continue;
            auto r = recognize(c, g);
            INFO(to_string(c), " seed ", seed);
            CHECK(r.verdict == oracle_verdict(c, g));
            CHECK(verify_certificate(c, g, r));
        }
    }
}

TEST_CASE("3-sun is chordal but not strongly chordal")
{
    auto g = sun3();
    auto ch = is_chordal(g);
    CHECK(ch.verdict);
    CHECK(std::holds_alternative<EliminationOrder>(ch.certificate));
    auto sc = is_strongly_chordal(g);
    CHECK(! sc.verdict);
    auto * cyc = std::get_if<ViolatingCycle>(&sc.certificate);
    REQUIRE(cyc);
    CHECK(cyc->defect == CycleDefect::no_odd_chord);
    CHECK(cyc->cycle == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK(verify_certificate(GraphClass::strongly_chordal, g, sc));
    CHECK(to_text(sc) == "false\ncycle no-odd-chord 0 1 2 3 4 5\n");
}

TEST_CASE("chordal negatives carry a chordless cycle")
{
    auto r = is_chordal(cycle(5));
    CHECK(! r.verdict);
    auto * cyc = std::get_if<ViolatingCycle>(&r.certificate);
    REQUIRE(cyc);
    CHECK(cyc->defect == CycleDefect::chordless);
    CHECK(cyc->cycle.size() == 5);
    CHECK(! is_chordal(grid(3, 3)).verdict);
}

TEST_CASE("split certificates")
{
    auto r = is_split(sun3());
    CHECK(r.verdict);
    auto * p = std::get_if<CliquePartition>(&r.certificate);
    REQUIRE(p);
    CHECK(p->clique.size() == 3);
    auto two_k2 = is_split(Graph(4, {{0, 1}, {2, 3}}));
    CHECK(! two_k2.verdict);
    auto * f = std::get_if<ForbiddenSubgraph>(&two_k2.certificate);
    REQUIRE(f);
    CHECK(f->name == "2K2");
    auto c4 = is_split(cycle(4));
    REQUIRE(std::holds_alternative<ForbiddenSubgraph>(c4.certificate));
    CHECK(std::get<ForbiddenSubgraph>(c4.certificate).name == "C4");
    auto c5 = is_split(cycle(5));
    REQUIRE(std::holds_alternative<ForbiddenSubgraph>(c5.certificate));
    CHECK(std::get<ForbiddenSubgraph>(c5.certificate).name == "C5");
}

TEST_CASE("chordal bipartite")
{
    CHECK(is_chordal_bipartite(cycle(4)).verdict);
    auto c6 = is_chordal_bipartite(cycle(6));
    CHECK(! c6.verdict);
    REQUIRE(std::holds_alternative<ViolatingCycle>(c6.certificate));
    CHECK(std::get<ViolatingCycle>(c6.certificate).defect == CycleDefect::chordless);
    CHECK(! is_chordal_bipartite(grid(3, 3)).verdict);
    CHECK(is_chordal_bipartite(grid(2, 5)).verdict);
    auto odd = is_chordal_bipartite(cycle(3));
    CHECK(! odd.verdict);
    CHECK(std::get<ViolatingCycle>(odd.certificate).defect == CycleDefect::odd);
}

TEST_CASE("comparability")
{
    auto c5 = is_comparability(cycle(5));
    CHECK(! c5.verdict);
    auto r = is_comparability(complete_bipartite(3, 3).graph());
    CHECK(r.verdict);
    CHECK(verify_certificate(GraphClass::comparability, complete_bipartite(3, 3).graph(), r));
    CHECK(is_co_comparability(cycle(4)).verdict);
    CHECK(! is_co_comparability(cycle(6)).verdict);
    // the complement of a bipartite graph is always co-comparability
    auto b = random_bipartite(6, 5, 0.5, 4).graph();
    CHECK(is_co_comparability(complement(b)).verdict);
}

TEST_CASE("tampered certificates are rejected")
{
    auto g = cycle(6);
    CHECK(! verify_certificate(GraphClass::bipartite, g, {true, TwoColoring{{0, 1, 2}}}));
    CHECK(! verify_certificate(GraphClass::chordal, g, {true, EliminationOrder{{0, 1, 2, 3, 4, 5}}}));
    CHECK(! verify_certificate(GraphClass::chordal_bipartite, g, {false, ViolatingCycle{{0, 1, 2, 3}, CycleDefect::chordless}}));
    CHECK(! verify_certificate(GraphClass::split, g, {true, CliquePartition{{0, 1}, {2, 3, 4, 5}}}));
    CHECK(! verify_certificate(GraphClass::comparability, path(3), {true, Orientation{{{0, 1}, {2, 1}}}}) == false);
    CHECK(! verify_certificate(GraphClass::comparability, path(3), {true, Orientation{{{0, 1}, {1, 2}}}}));
    CHECK(! verify_certificate(GraphClass::split, cycle(4), {false, ForbiddenSubgraph{{0, 1, 2, 3}, "2K2"}}));
}

TEST_CASE("limits and names")
{
    CHECK_THROWS_AS(is_strongly_chordal(path(17)), LimitExceeded);
    CHECK_NOTHROW(is_strongly_chordal(path(17), 17));
    CHECK_THROWS_AS(is_comparability(path(17)), LimitExceeded);
    CHECK(parse_graph_class("strongly_chordal") == GraphClass::strongly_chordal);
    CHECK(parse_graph_class("co-comparability") == GraphClass::co_comparability);
    CHECK(! parse_graph_class("planar"));
    for (auto c : all_classes)
        CHECK(parse_graph_class(to_string(c)) == c);
}
