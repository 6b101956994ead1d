#pragma once

#include <mimlab/graph.hpp>
#include <mimlab/limits.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mimlab
{
    enum class GraphClass
    {
        bipartite,
        split,
        chordal,
        strongly_chordal,
        chordal_bipartite,
        comparability,
        co_comparability
    };

    auto to_string(GraphClass c) -> std::string;
    auto parse_graph_class(const std::string & name) -> std::optional<GraphClass>;

    /// Perfect elimination ordering.
    struct EliminationOrder
    {
        std::vector<Vertex> order;
    };

    struct TwoColoring
    {
        std::vector<Vertex> x_class;
    };

    struct CliquePartition
    {
        std::vector<Vertex> clique;
        std::vector<Vertex> independent;
    };

    /// Arcs (tail, head), one per edge, in edge order.
    struct Orientation
    {
        std::vector<std::pair<Vertex, Vertex>> arcs;
    };

    enum class CycleDefect
    {
        odd,           ///< odd cycle, so not bipartite
        chordless,     ///< no chord at all
        no_odd_chord   ///< even, length >= 6, every chord joins vertices at even distance
    };

    struct ViolatingCycle
    {
        std::vector<Vertex> cycle;
        CycleDefect defect;
    };

    /// Induced 2K2, C4 or C5, one of which every non-split graph contains.
    struct ForbiddenSubgraph
    {
        std::vector<Vertex> vertices;
        std::string name;
    };

    /// Negative verdict reached by exhausting the search space.
    struct NoCertificate
    {
    };

    using Certificate = std::variant<NoCertificate, EliminationOrder, TwoColoring, CliquePartition, Orientation, ViolatingCycle, ForbiddenSubgraph>;

    struct RecognitionResult
    {
        bool verdict = false;
        Certificate certificate;
    };

    auto is_bipartite(const Graph & g) -> RecognitionResult;

    /// Degree-sequence criterion; the clique is the m highest-degree vertices
    /// and is re-verified before being returned.
    auto is_split(const Graph & g) -> RecognitionResult;

    /// Maximum cardinality search plus a perfect-elimination check. A
    /// negative answer comes with a chordless cycle of length >= 4.
    auto is_chordal(const Graph & g) -> RecognitionResult;

    /// Chordal and every even cycle of length >= 6 has an odd chord, decided
    /// by enumerating cycles. The certificate is the smallest violating cycle
    /// by (length, vertex sequence).
    auto is_strongly_chordal(const Graph & g, int cycle_limit = Limits{}.cycle) -> RecognitionResult;

    /// Bipartite and no chordless cycle of length >= 6.
    auto is_chordal_bipartite(const Graph & g, int cycle_limit = Limits{}.cycle) -> RecognitionResult;

    /// Backtracking over edge orientations with forcing: a->b forces a->b'
    /// for every neighbour b' of a not adjacent to b, a'->b symmetrically, and
    /// transitive arcs along directed 2-paths.
    auto is_comparability(const Graph & g, int limit = Limits{}.cycle) -> RecognitionResult;

    /// is_comparability on the complement; the orientation is of the
    /// complement's edges.
    auto is_co_comparability(const Graph & g, int limit = Limits{}.cycle) -> RecognitionResult;

    auto recognize(GraphClass c, const Graph & g, const Limits & limits = {}) -> RecognitionResult;

    /// Checks a result's certificate from first principles, without using
    /// any of the recognizers. A NoCertificate negative passes trivially.
    auto verify_certificate(GraphClass c, const Graph & g, const RecognitionResult & result) -> bool;

    /// Multi-line text: `true`/`false` followed by the certificate.
    auto to_text(const RecognitionResult & result) -> std::string;
}
