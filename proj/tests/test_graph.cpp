#include <mimlab/error.hpp>
#include <mimlab/generators.hpp>
#include <mimlab/graph.hpp>
#include <mimlab/io.hpp>
#include <mimlab/limits.hpp>
#include <mimlab/random.hpp>

#include <doctest.h>

#include <filesystem>
#include <algorithm>
#include <fstream>

using namespace mimlab;

TEST_CASE("graph normalizes and sorts edges")
{
    Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    REQUIRE(g.edges().size() == 3);
    CHECK(g.edges()[0] == Edge(0, 1));
    CHECK(g.edges()[1] == Edge(0, 2));
    CHECK(g.edges()[2] == Edge(1, 3));
    CHECK(g.adjacent(3, 1));
    CHECK(! g.adjacent(2, 3));
    CHECK(g.degree(0) == 2);
    CHECK(g.max_degree() == 2);
    auto nb = g.neighbours(1);
    CHECK(std::vector<Vertex>(nb.begin(), nb.end()) == std::vector<Vertex>{0, 3});
}

TEST_CASE("graph rejects loops, duplicates and bad endpoints")
{
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), InvalidParameter);
    CHECK_THROWS_AS(Graph(-1), InvalidParameter);
}

TEST_CASE("complement")
{
    auto c = complement(path(4));
    CHECK(c.size() == 3);
    CHECK(c.adjacent(0, 2));
    CHECK(c.adjacent(0, 3));
    CHECK(c.adjacent(1, 3));
    CHECK(complement(complement(cycle(5))) == cycle(5));
}

TEST_CASE("subdivision keeps originals in X and numbers midpoints by edge")
{
    auto k4 = complete(4);
    auto s = subdivide_all_edges(k4);
    CHECK(s.graph().order() == 10);
    CHECK(s.graph().size() == 12);
    CHECK(s.x_class().size() == 4);
    for (std::size_t i = 0; i < k4.size(); ++i) {
        auto [u, v] = k4.edges()[i];
        Vertex mid = 4 + static_cast<Vertex>(i);
        CHECK(s.graph().adjacent(u, mid));
        CHECK(s.graph().adjacent(v, mid));
        CHECK(s.graph().degree(mid) == 2);
        CHECK(! s.in_x(mid));
    }
}

TEST_CASE("degeneracy")
{
    CHECK(degeneracy(edgeless(3)).d == 0);
    CHECK(degeneracy(path(5)).d == 1);
    CHECK(degeneracy(cycle(7)).d == 2);
    CHECK(degeneracy(complete(5)).d == 4);
    CHECK(degeneracy(grid(4, 4)).d == 2);
    CHECK(degeneracy(subdivide_all_edges(complete(4)).graph()).d == 2);
    auto r = degeneracy(random_cubic(10, 3));
    CHECK(r.d == 3);
    CHECK(r.order.size() == 10);
}

TEST_CASE("two colouring returns classes or an odd cycle")
{
    auto even = two_color(cycle(6));
    REQUIRE(std::holds_alternative<BipartiteGraph>(even));
    auto & b = std::get<BipartiteGraph>(even);
    CHECK(std::vector<Vertex>(b.x_class().begin(), b.x_class().end()) == std::vector<Vertex>{0, 2, 4});
    CHECK(is_proper_coloring(cycle(6), b.x_class()));

    auto odd = two_color(cycle(5));
    REQUIRE(std::holds_alternative<OddCycle>(odd));
    auto & c = std::get<OddCycle>(odd).cycle;
    CHECK(c.size() % 2 == 1);
    auto g = cycle(5);
    for (std::size_t i = 0; i < c.size(); ++i)
        CHECK(g.adjacent(c[i], c[(i + 1) % c.size()]));

    // an odd cycle hanging off a path
    Graph h(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 2}, {4, 5}});
    auto r = two_color(h);
    REQUIRE(std::holds_alternative<OddCycle>(r));
    CHECK(std::get<OddCycle>(r).cycle.size() == 3);
}

TEST_CASE("bipartite graph validates its colouring")
{
    CHECK_THROWS_AS(BipartiteGraph(cycle(4), {0, 1}), InvalidParameter);
    CHECK_THROWS_AS(BipartiteGraph(path(2), {0, 0}), InvalidParameter);
    BipartiteGraph b(cycle(4), {0, 2});
    CHECK(b.side(1) == Side::y);
    CHECK(b.class_of(Side::y).size() == 2);
}

TEST_CASE("induced subgraph relabels in order")
{
    auto g = induced_subgraph(cycle(6), std::vector<Vertex>{5, 0, 1});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
}

TEST_CASE("generators")
{
    auto g = grid(3, 3);
    CHECK(g.order() == 9);
    CHECK(g.size() == 12);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 3));
    CHECK(! g.adjacent(2, 3));
    CHECK(cycle(5).size() == 5);
    CHECK(path(1).size() == 0);
    CHECK(complete(6).size() == 15);
    CHECK(complete_bipartite(2, 3).graph().size() == 6);
    CHECK_THROWS_AS(cycle(2), InvalidParameter);
    CHECK_THROWS_AS(grid(0, 3), InvalidParameter);
    CHECK_THROWS_AS(random_bipartite(2, 2, 1.5, 1), InvalidParameter);
}

TEST_CASE("random cubic graphs are simple, 3-regular and seeded")
{
    for (int n = 4; n <= 20; n += 2) {
        auto g = random_cubic(n, 11);
        CHECK(g.order() == n);
        for (Vertex v = 0; v < n; ++v)
            CHECK(g.degree(v) == 3);
        CHECK(g == random_cubic(n, 11));
    }
    CHECK_THROWS_AS(random_cubic(7, 1), InvalidParameter);
    CHECK_THROWS_AS(random_cubic(2, 1), InvalidParameter);
}

TEST_CASE("random bipartite graphs respect the classes")
{
    auto b = random_bipartite(4, 5, 0.5, 9);
    CHECK(b.x_class().size() == 4);
    CHECK(b == random_bipartite(4, 5, 0.5, 9));
    CHECK(random_bipartite(3, 3, 0.0, 1).graph().size() == 0);
    CHECK(random_bipartite(3, 3, 1.0, 1).graph().size() == 9);
}

TEST_CASE("rng draws are reproducible and in range")
{
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i)
        CHECK(a.next() == b.next());
    Rng r(7);
    std::vector<int> hits(5, 0);
    for (int i = 0; i < 5000; ++i) {
        auto x = r.below(5);
        REQUIRE(x < 5);
        ++hits[x];
        auto u = r.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
    }
    for (auto h : hits)
        CHECK(h > 800);
    std::vector<int> items{0, 1, 2, 3, 4, 5};
    r.shuffle(std::span<int>(items));
    std::ranges::sort(items);
    CHECK(items == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("text format round trip")
{
    auto g = grid(2, 3);
    auto text = to_text(g);
    CHECK(text.rfind("graph 6 7\n", 0) == 0);
    auto back = parse_graph(text);
    CHECK(back.graph == g);
    CHECK(! back.x_class);

    auto b = complete_bipartite(2, 2);
    auto btext = to_text(b);
    CHECK(btext.find("bip 0 1\n") != std::string::npos);
    auto bback = parse_graph(btext);
    REQUIRE(bback.x_class);
    CHECK(bback.bipartite() == b);

    // edge order in the file does not matter
    CHECK(parse_graph("graph 3 2\n2 1\n0 1\n").graph == path(3));
}

TEST_CASE("parse errors")
{
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 3 1\n0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 3 1\n0 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 3 1\n0 x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("graph 2 1\n0 1\nbip 0 1\n"), ParseError);
    CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), IoFailure);
}

TEST_CASE("files are written byte for byte")
{
    auto dir = std::filesystem::temp_directory_path() / "mimlab_graph_test";
    std::filesystem::create_directories(dir);
    auto p = dir / "c5.txt";
    write_text_file(p, to_text(cycle(5)));
    CHECK(read_graph_file(p).graph == cycle(5));
    std::filesystem::remove_all(dir);
}

TEST_CASE("limit overrides")
{
    auto l = apply_limit_overrides({}, "exact=10,tw=18");
    CHECK(l.exact == 10);
    CHECK(l.treewidth == 18);
    CHECK(l.cycle == Limits{}.cycle);
    CHECK(apply_limit_overrides({}, "treewidth=12,cycle=8,upper=40").upper == 40);
    CHECK_THROWS_AS(apply_limit_overrides({}, "exact"), InvalidParameter);
    CHECK_THROWS_AS(apply_limit_overrides({}, "bogus=3"), InvalidParameter);
    CHECK_THROWS_AS(apply_limit_overrides({}, "exact=x"), InvalidParameter);
}
