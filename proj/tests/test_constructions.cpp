#include "oracles.hpp"

#include <mimlab/constructions.hpp>
#include <mimlab/corpus.hpp>
#include <mimlab/error.hpp>
#include <mimlab/generators.hpp>
#include <mimlab/recognize.hpp>

#include <doctest.h>

#include <filesystem>

using namespace mimlab;

namespace
{
    auto c6() -> BipartiteGraph { return std::get<BipartiteGraph>(two_color(cycle(6))); }
}

TEST_CASE("one-side completion of C6 is the 3-sun")
{
    auto rec = complete_one_side(c6(), Side::y);
    CHECK(is_consistent(rec));
    CHECK(rec.added_edges == std::vector<Edge>{{1, 3}, {1, 5}, {3, 5}});
    auto & g = rec.result;
    CHECK(g.size() == 9);
    for (Vertex ear : {0, 2, 4})
        CHECK(g.degree(ear) == 2);
    CHECK(is_chordal(g).verdict);
    CHECK(! is_strongly_chordal(g).verdict);
}

TEST_CASE("completions of chordal bipartite graphs are strongly chordal split graphs")
{
    auto corpus = chordal_bipartite_corpus();
    CHECK(corpus.size() >= 30);
    for (auto & [name, b] : corpus) {
        INFO(name);
        REQUIRE(oracle::chordal_bipartite(b.graph()));
        for (auto side : {Side::x, Side::y}) {
            auto g = complete_one_side(b, side).result;
            CHECK(is_split(g).verdict);
            CHECK(is_strongly_chordal(g).verdict);
        }
    }
}

TEST_CASE("two-side completion has a bipartite complement")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto b = random_bipartite(1 + seed % 5, 1 + seed % 6, 0.5, seed);
        auto rec = complete_both_sides(b);
        CHECK(is_consistent(rec));
        CHECK(is_proper_coloring(complement(rec.result), b.x_class()));
        CHECK(is_co_comparability(rec.result).verdict);
    }
}

TEST_CASE("intra-class edges only")
{
    auto b = c6();
    CHECK_THROWS_AS(add_intra_class_edges(b, {{0, 1}}), InvalidParameter);
    CHECK_THROWS_AS(add_intra_class_edges(b, {{0, 9}}), InvalidParameter);
    auto rec = add_intra_class_edges(b, {{0, 2}});
    CHECK(is_consistent(rec));
    auto bad = rec;
    bad.added_edges.push_back({0, 4});
    CHECK(! is_consistent(bad));
}

TEST_CASE("completion ratio")
{
    auto rec = complete_one_side(c6(), Side::y);
    CHECK(completion_ratio(rec) == Rational(1, 2));
    auto empty = complete_one_side(std::get<BipartiteGraph>(two_color(edgeless(4))), Side::y);
    CHECK(completion_ratio(empty) == Rational(1));
}

TEST_CASE("halving keeps an induced matching on the same cut")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto b = random_bipartite(4, 4, 0.5, seed);
        auto report = mimw_exact(b.graph());
        auto rec = complete_both_sides(b);
        auto half = larger_x_aligned_half(rec, report);
        CHECK(2 * static_cast<int>(half.size()) >= report.value);
        CHECK(is_induced_matching_of_cut(rec.result, report.critical_cut.a_side, half));
        CHECK(2 * mimw_exact(rec.result).value >= report.value);
    }
}

TEST_CASE("chord diagram of a subdivided cubic graph verifies")
{
    for (int n : {4, 6, 8, 10}) {
        auto b = build_subdivided_family(n, 5);
        CHECK(b.graph().order() == n + 3 * n / 2);
        auto d = embed_chord_diagram(b);
        CHECK(d.word.size() == 2 * static_cast<std::size_t>(b.graph().order()));
        CHECK(! verify_chord_diagram(d, b));
        // the intersection graph extends b by Y-Y edges only
        auto h = d.intersection_graph();
        for (auto e : b.graph().edges())
            CHECK(h.adjacent(e.u, e.v));
        for (auto e : h.edges())
            if (b.in_x(e.u) || b.in_x(e.v))
                CHECK(b.graph().adjacent(e.u, e.v));
    }
}

TEST_CASE("chord diagram text is the smallest rotation and parses back")
{
    ChordDiagram d;
    d.word = {2, 0, 1, 0, 1, 2};
    d.label_map = {0, 1, 2};
    CHECK(d.to_text() == "0 1 0 1 2 2");
    auto back = ChordDiagram::parse(d.to_text());
    CHECK(back.intersection_graph() == d.intersection_graph());
    CHECK(d.intersection_graph().size() == 1);
    CHECK_THROWS_AS(ChordDiagram::parse("0 1 0"), ParseError);
    CHECK_THROWS_AS(ChordDiagram::parse("0 0 x"), ParseError);
}

TEST_CASE("verifier names each defect")
{
    // X = {0, 1}, Y = {2}, edges 0-2 and 1-2
    BipartiteGraph b(Graph(3, {{0, 2}, {1, 2}}), {0, 1});
    ChordDiagram good{{0, 2, 0, 1, 2, 1}, {0, 1, 2}};
    CHECK(! verify_chord_diagram(good, b));

    ChordDiagram xx{{0, 1, 0, 1, 2, 2}, {0, 1, 2}};
    auto e1 = verify_chord_diagram(xx, b);
    REQUIRE(e1);
    CHECK(e1->kind == DiagramViolation::xx_crossing);

    ChordDiagram missing{{0, 0, 1, 2, 1, 2}, {0, 1, 2}};
    auto e2 = verify_chord_diagram(missing, b);
    REQUIRE(e2);
    CHECK(e2->kind == DiagramViolation::missing_edge);

    BipartiteGraph b2(Graph(3, {{0, 2}}), {0, 1});
    auto e3 = verify_chord_diagram(good, b2);
    REQUIRE(e3);
    CHECK(e3->kind == DiagramViolation::spurious_xy_crossing);

    ChordDiagram malformed{{0, 0, 1, 2, 1}, {0, 1, 2}};
    auto e4 = verify_chord_diagram(malformed, b);
    REQUIRE(e4);
    CHECK(e4->kind == DiagramViolation::malformed);
    CHECK(to_string(DiagramViolation::xx_crossing) == "XXCrossing");
}

TEST_CASE("embedding needs degree-2 Y vertices")
{
    CHECK_THROWS_AS(embed_chord_diagram(complete_bipartite(3, 3)), DegreeViolation);
}

TEST_CASE("tree enumeration")
{
    const std::size_t counts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n)
        CHECK(nonisomorphic_trees(n).size() == counts[n - 1]);
    for (auto & t : nonisomorphic_trees(7)) {
        CHECK(t.size() == 6);
        CHECK(std::holds_alternative<BipartiteGraph>(two_color(t)));
    }
}

TEST_CASE("corpus files round trip")
{
    auto dir = std::filesystem::temp_directory_path() / "mimlab_corpus_test";
    std::filesystem::remove_all(dir);
    auto corpus = chordal_bipartite_corpus(5, 2);
    auto written = write_corpus(dir, corpus);
    CHECK(written.size() == corpus.size());
    auto back = read_corpus(dir);
    REQUIRE(back.size() == corpus.size());
    std::ranges::sort(corpus, {}, &Named<BipartiteGraph>::name);
    for (std::size_t i = 0; i < back.size(); ++i) {
        CHECK(back[i].name == corpus[i].name);
        CHECK(back[i].graph == corpus[i].graph);
    }
    CHECK(read_graph_corpus(dir).size() == corpus.size());
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(read_corpus(dir), IoFailure);
}
