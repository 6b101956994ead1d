#pragma once

#include <mimlab/graph.hpp>
#include <mimlab/limits.hpp>
#include <mimlab/width.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mimlab
{
    /// A bipartite graph plus edges added inside its colour classes.
    struct CompletionRecord
    {
        BipartiteGraph original;
        Graph result;
        std::vector<Edge> added_edges;
    };

    /// Checks result = original + added (disjoint) with every added edge
    /// inside one colour class.
    auto is_consistent(const CompletionRecord & rec) -> bool;

    /// Adds `extra` to the original. Throws InvalidParameter if an extra edge
    /// crosses the classes or already exists.
    auto add_intra_class_edges(const BipartiteGraph & b, std::vector<Edge> extra) -> CompletionRecord;

    /// Turns the chosen class into a clique.
    auto complete_one_side(const BipartiteGraph & b, Side side) -> CompletionRecord;

    /// Turns both classes into cliques.
    auto complete_both_sides(const BipartiteGraph & b) -> CompletionRecord;

    /// random_cubic(n, seed) with every edge subdivided: X-degrees 3,
    /// Y-degrees 2, n + 3n/2 vertices.
    auto build_subdivided_family(int n, std::uint64_t seed) -> BipartiteGraph;

    /// Circular double-occurrence word; label i names the chord of vertex
    /// label_map[i].
    struct ChordDiagram
    {
        std::vector<int> word;
        std::vector<Vertex> label_map;

        auto chord_count() const -> int { return static_cast<int>(label_map.size()); }

        /// Pairs of chords whose endpoints interleave, as vertex edges.
        auto intersection_graph() const -> Graph;

        /// Space-separated labels starting at the lexicographically smallest
        /// rotation.
        auto to_text() const -> std::string;

        /// Reads to_text() output; labels map to themselves. Throws
        /// ParseError.
        static auto parse(const std::string & text) -> ChordDiagram;
    };

    /// Every X vertex gets a chord whose two endpoints bound a private arc,
    /// laid out in X index order. Each Y vertex puts one endpoint in the
    /// private arc of each of its two neighbours, so it crosses exactly those
    /// X-chords. Inside an arc, Y endpoints appear in Y index order. Throws
    /// DegreeViolation unless every Y vertex has degree 2.
    auto embed_chord_diagram(const BipartiteGraph & b) -> ChordDiagram;

    enum class DiagramViolation
    {
        malformed,
        xx_crossing,
        missing_edge,
        spurious_xy_crossing
    };

    struct DiagramError
    {
        DiagramViolation kind;
        std::string message;
    };

    auto to_string(DiagramViolation v) -> std::string;

    /// Certifies that the diagram's intersection graph differs from `b` only
    /// by edges inside Y.
    auto verify_chord_diagram(const ChordDiagram & d, const BipartiteGraph & b) -> std::optional<DiagramError>;

    /// mimw(result) / mimw(original) from the exact solver; 1 when the
    /// original has width 0.
    auto completion_ratio(const CompletionRecord & rec, int exact_limit = Limits{}.exact) -> Rational;

    /// The halving argument on one cut: split the witness matching of
    /// `original_report` by the side holding each edge's X endpoint and
    /// return the larger half, which must stay induced in the completed
    /// graph's cut.
    auto larger_x_aligned_half(const CompletionRecord & rec, const WidthReport & original_report) -> std::vector<Edge>;
}
