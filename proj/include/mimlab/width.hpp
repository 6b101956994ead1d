#pragma once

#include <mimlab/decomp.hpp>
#include <mimlab/exec.hpp>
#include <mimlab/graph.hpp>
#include <mimlab/limits.hpp>
#include <mimlab/matching.hpp>

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mimlab
{
    using Rational = boost::rational<std::int64_t>;

    auto to_string(const Rational & r) -> std::string;

    enum class WidthMode
    {
        exact,
        upper,
        lower
    };

    auto to_string(WidthMode mode) -> std::string;

    struct WidthReport
    {
        int value = 0;
        WidthMode mode = WidthMode::exact;
        std::optional<BranchDecomposition> decomposition;
        Cut critical_cut;
        InducedMatching witness_matching;
    };

    /// Width of one decomposition; the critical cut is the first cut in
    /// cuts() order attaining the maximum. Mode is `upper`.
    auto evaluate_decomposition(const Graph & g, const BranchDecomposition & t) -> WidthReport;

    /// Exact mim-width by enumerating every branch decomposition.
    ///
    /// Trees are grown by leaf insertion. A partially grown tree over leaves
    /// 0..k-1 is scored on G[0..k-1]; since each of its cut graphs is an
    /// induced subgraph of the final one, that score bounds every completion
    /// from below and prunes the search. The witness is the first optimal tree
    /// in insertion order, for both kernels. n <= 1 yields 0.
    auto mimw_exact(const Graph & g, int limit = Limits{}.exact, Execution exec = Execution::parallel) -> WidthReport;

    struct UpperStrategy
    {
        enum class Kind
        {
            random_orders,
            local_search
        };

        Kind kind = Kind::local_search;
        int orders = 16;
    };

    /// Best caterpillar found over the identity order plus `orders` seeded
    /// random orders; local search then hill-climbs with adjacent
    /// transpositions until no swap lowers (width, #cuts at width).
    auto mimw_upper(const Graph & g, UpperStrategy strategy, std::uint64_t seed) -> WidthReport;

    struct TreewidthReport
    {
        int value = 0;
        std::vector<Vertex> elimination_order;
    };

    /// Exact treewidth through the subset recurrence
    /// TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|).
    auto treewidth_exact(const Graph & g, int limit = Limits{}.treewidth, Execution exec = Execution::parallel) -> TreewidthReport;

    /// Largest later-neighbourhood met while eliminating along `order` with
    /// fill-in.
    auto elimination_width(const Graph & g, std::span<const Vertex> order) -> int;

    /// Minor-min-width: repeatedly contract a minimum-degree vertex into its
    /// lowest-degree neighbour, keeping the largest minimum degree seen. A
    /// lower bound on treewidth for graphs of any size.
    auto treewidth_lower_mmw(const Graph & g) -> int;

    /// tw / (3(d + 1)) with its ceiling.
    struct DegeneracyTreewidthBound
    {
        Rational bound;
        int integer_bound = 0;
        int treewidth = 0;
        int degeneracy = 0;
    };

    auto mimw_lower_degeneracy(const Graph & g, int tw_limit = Limits{}.treewidth) -> DegeneracyTreewidthBound;

    /// Same ratio from any treewidth lower bound `tw_lb`; still a valid lower
    /// bound on mim-width.
    auto degeneracy_bound_from(int tw_lb, int degeneracy) -> Rational;

    /// Single-line JSON, fields in the order value, mode, decomposition,
    /// critical_cut_a_side, matching_edges.
    auto to_json(const WidthReport & report) -> std::string;
}
