#include <mimlab/constructions.hpp>
#include <mimlab/error.hpp>
#include <mimlab/generators.hpp>

#include <algorithm>
#include <sstream>

namespace mimlab
{
    auto is_consistent(const CompletionRecord & rec) -> bool
    {
        const auto & g = rec.original.graph();
        if (rec.result.order() != g.order())
            return false;
        for (auto e : rec.added_edges)
            if (rec.original.side(e.u) != rec.original.side(e.v) || g.adjacent(e.u, e.v))
                return false;
        std::vector<Edge> expected(g.edges().begin(), g.edges().end());
        expected.insert(expected.end(), rec.added_edges.begin(), rec.added_edges.end());
        std::ranges::sort(expected);
        return std::ranges::adjacent_find(expected) == expected.end() && std::ranges::equal(expected, rec.result.edges());
    }

    auto add_intra_class_edges(const BipartiteGraph & b, std::vector<Edge> extra) -> CompletionRecord
    {
        std::ranges::sort(extra);
        for (auto e : extra) {
            if (e.u < 0 || e.v >= b.graph().order())
                throw InvalidParameter("added edge endpoint out of range");
            if (b.side(e.u) != b.side(e.v))
                throw InvalidParameter("added edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " crosses the colour classes");
        }
        std::vector<Edge> all(b.graph().edges().begin(), b.graph().edges().end());
        all.insert(all.end(), extra.begin(), extra.end());
        Graph result(b.graph().order(), std::move(all));
        return {b, std::move(result), std::move(extra)};
    }

    namespace
    {
        auto clique_edges(std::span<const Vertex> vs, std::vector<Edge> & out) -> void
        {
            for (std::size_t i = 0; i < vs.size(); ++i)
                for (std::size_t j = i + 1; j < vs.size(); ++j)
                    out.emplace_back(vs[i], vs[j]);
        }
    }

    auto complete_one_side(const BipartiteGraph & b, Side side) -> CompletionRecord
    {
        std::vector<Edge> extra;
        clique_edges(b.class_of(side), extra);
        return add_intra_class_edges(b, std::move(extra));
    }

    auto complete_both_sides(const BipartiteGraph & b) -> CompletionRecord
    {
        std::vector<Edge> extra;
        clique_edges(b.x_class(), extra);
        clique_edges(b.y_class(), extra);
        return add_intra_class_edges(b, std::move(extra));
    }

    auto build_subdivided_family(int n, std::uint64_t seed) -> BipartiteGraph
    {
        return subdivide_all_edges(random_cubic(n, seed));
    }

    auto ChordDiagram::intersection_graph() const -> Graph
    {
        const int k = chord_count();
        std::vector<int> first(k, -1), second(k, -1);
        for (int p = 0; p < static_cast<int>(word.size()); ++p)
            (first[word[p]] == -1 ? first[word[p]] : second[word[p]]) = p;
        std::vector<Edge> edges;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                bool b1 = first[a] < first[b] && first[b] < second[a];
                bool b2 = first[a] < second[b] && second[b] < second[a];
                if (b1 != b2)
                    edges.emplace_back(label_map[a], label_map[b]);
            }
        return Graph(k, std::move(edges));
    }

    auto ChordDiagram::to_text() const -> std::string
    {
        const auto len = word.size();
        std::size_t best = 0;
        for (std::size_t r = 1; r < len; ++r)
            for (std::size_t i = 0; i < len; ++i) {
                auto a = word[(r + i) % len], b = word[(best + i) % len];
                if (a != b) {
                    if (a < b)
                        best = r;
                    break;
                }
            }
        std::string out;
        for (std::size_t i = 0; i < len; ++i) {
            if (i)
                out += ' ';
            out += std::to_string(word[(best + i) % len]);
        }
        return out;
    }

    auto ChordDiagram::parse(const std::string & text) -> ChordDiagram
    {
        std::istringstream in(text);
        ChordDiagram d;
        long long label;
        while (in >> label) {
            if (label < 0 || label > 1'000'000)
                throw ParseError("chord label out of range");
            d.word.push_back(static_cast<int>(label));
        }
        if (! in.eof())
            throw ParseError("malformed chord diagram");
        int k = d.word.empty() ? 0 : *std::ranges::max_element(d.word) + 1;
        std::vector<int> count(k, 0);
        for (auto l : d.word)
            ++count[l];
        if (std::ranges::any_of(count, [](int c) { return c != 2; }))
            throw ParseError("every chord label 0..k-1 must occur exactly twice");
        d.label_map.resize(k);
        for (int i = 0; i < k; ++i)
            d.label_map[i] = i;
        return d;
    }

    auto embed_chord_diagram(const BipartiteGraph & b) -> ChordDiagram
    {
        const auto & g = b.graph();
        for (auto y : b.y_class())
            if (g.degree(y) != 2)
                throw DegreeViolation("Y vertex " + std::to_string(y) + " has degree " + std::to_string(g.degree(y)));

        ChordDiagram d;
        d.label_map.resize(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            d.label_map[v] = v;
        // neighbours() is sorted and every neighbour of an X vertex is in Y
        for (auto x : b.x_class()) {
            d.word.push_back(x);
            for (auto y : g.neighbours(x))
                d.word.push_back(y);
            d.word.push_back(x);
        }
        return d;
    }

    auto to_string(DiagramViolation v) -> std::string
    {
        switch (v) {
        case DiagramViolation::malformed: return "Malformed";
        case DiagramViolation::xx_crossing: return "XXCrossing";
        case DiagramViolation::missing_edge: return "MissingEdge";
        case DiagramViolation::spurious_xy_crossing: return "SpuriousXYCrossing";
        }
        return "?";
    }

    auto verify_chord_diagram(const ChordDiagram & d, const BipartiteGraph & b) -> std::optional<DiagramError>
    {
        const auto & g = b.graph();
        const int k = d.chord_count();
        if (k != g.order())
            return DiagramError{DiagramViolation::malformed, "diagram has " + std::to_string(k) + " chords, graph has " + std::to_string(g.order()) + " vertices"};
        std::vector<int> occurrences(k, 0);
        for (auto l : d.word) {
            if (l < 0 || l >= k)
                return DiagramError{DiagramViolation::malformed, "label " + std::to_string(l) + " out of range"};
            ++occurrences[l];
        }
        for (int l = 0; l < k; ++l)
            if (occurrences[l] != 2)
                return DiagramError{DiagramViolation::malformed, "label " + std::to_string(l) + " occurs " + std::to_string(occurrences[l]) + " times"};
        std::vector<int> seen(g.order(), 0);
        for (auto v : d.label_map)
            if (v < 0 || v >= g.order() || seen[v]++)
                return DiagramError{DiagramViolation::malformed, "label map is not a bijection onto the vertices"};

        // which chord pairs cross, straight from the positions
        std::vector<std::vector<int>> positions(k);
        for (int p = 0; p < static_cast<int>(d.word.size()); ++p)
            positions[d.word[p]].push_back(p);
        auto crosses = [&](int a, int c) {
            int inside = 0;
            for (auto p : positions[c])
                inside += positions[a][0] < p && p < positions[a][1];
            return inside == 1;
        };

        for (int a = 0; a < k; ++a)
            for (int c = a + 1; c < k; ++c) {
                Vertex u = d.label_map[a], v = d.label_map[c];
                bool cross = crosses(a, c);
                bool edge = g.adjacent(u, v);
                bool ux = b.in_x(u), vx = b.in_x(v);
                auto pair = std::to_string(std::min(u, v)) + " " + std::to_string(std::max(u, v));
                if (ux && vx && cross)
                    return DiagramError{DiagramViolation::xx_crossing, "X-chords " + pair + " cross"};
                if (ux != vx && edge && ! cross)
                    return DiagramError{DiagramViolation::missing_edge, "edge " + pair + " has no crossing"};
                if (ux != vx && ! edge && cross)
                    return DiagramError{DiagramViolation::spurious_xy_crossing, "chords " + pair + " cross without an edge"};
            }
        return std::nullopt;
    }

    auto completion_ratio(const CompletionRecord & rec, int exact_limit) -> Rational
    {
        int before = mimw_exact(rec.original.graph(), exact_limit).value;
        int after = mimw_exact(rec.result, exact_limit).value;
        if (before == 0)
            return Rational(1);
        return Rational(after, before);
    }

    auto larger_x_aligned_half(const CompletionRecord & rec, const WidthReport & original_report) -> std::vector<Edge>
    {
        std::vector<char> in_a(rec.original.graph().order(), 0);
        for (auto v : original_report.critical_cut.a_side)
            in_a[v] = 1;
        std::vector<Edge> x_in_a, x_outside;
        for (auto e : original_report.witness_matching.edges) {
            Vertex x = rec.original.in_x(e.u) ? e.u : e.v;
            (in_a[x] ? x_in_a : x_outside).push_back(e);
        }
        return x_in_a.size() >= x_outside.size() ? x_in_a : x_outside;
    }
}
