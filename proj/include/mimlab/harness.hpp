#pragma once

#include <mimlab/corpus.hpp>
#include <mimlab/limits.hpp>
#include <mimlab/width.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mimlab
{
    struct ExperimentRow
    {
        std::string family;
        std::string parameter;
        int n = 0;
        WidthMode mimw_mode = WidthMode::exact;
        int mimw_value = 0;
        std::optional<int> tw;
        int degeneracy = 0;
        std::optional<Rational> eq1_bound;
        std::optional<Rational> ratio;
        std::optional<double> runtime_ms;
    };

    struct ExperimentConfig
    {
        std::uint64_t seed = 0;
        Limits limits;
        /// Extra settings that shaped the run, echoed into JSON output.
        std::map<std::string, std::string> flags;
        /// Fill runtime_ms; off by default so reports are byte-identical.
        bool timing = false;
    };

    struct ExperimentReport
    {
        std::string suite;
        ExperimentConfig config;
        std::vector<ExperimentRow> rows;
        std::vector<std::string> violations;
    };

    /// Header `family,parameter,n,mimw_mode,mimw_value,tw,degeneracy,eq1_bound,ratio,runtime_ms`.
    /// Rationals print with six decimals, absent values as empty fields.
    auto to_csv(const ExperimentReport & report) -> std::string;
    auto to_json(const ExperimentReport & report) -> std::string;

    /// Random bipartite G (2 <= n <= n_max, edge probability cycling through
    /// 0.2, 0.5, 0.8) plus a random intra-class superset G'; checks
    /// mimw(G') >= ceil(mimw(G) / 2) and that the X-aligned half of G's
    /// critical matching stays induced in G'.
    struct HalvingOptions
    {
        int trials = 200;
        int n_max = 9;
        /// Overrides the cycling edge probability when set.
        std::optional<double> edge_probability;
        double add_probability = 0.5;
    };

    auto verify_halving(const HalvingOptions & options, const ExperimentConfig & config) -> ExperimentReport;

    /// Recognizer battery on completions of every corpus graph, the C6
    /// counterexample, and `random_trials` random bipartite graphs for the
    /// two-sided completion.
    auto verify_constructions(const std::vector<Named<BipartiteGraph>> & corpus, int random_trials, const ExperimentConfig & config) -> ExperimentReport;

    /// mimw_exact >= tw / (3(d + 1)) on each graph, exactly.
    auto verify_degeneracy_bound(const std::vector<Named<Graph>> & corpus, const ExperimentConfig & config) -> ExperimentReport;

    /// The builtin corpus for `verify eq1`: small_graph_corpus() plus the subdivided K4.
    auto degeneracy_bound_corpus() -> std::vector<Named<Graph>>;

    enum class SweepFamily
    {
        split_grid,
        cocomp_grid,
        circle_cubic
    };

    auto parse_sweep_family(const std::string & name) -> std::optional<SweepFamily>;
    auto to_string(SweepFamily f) -> std::string;

    /// Sizes are `k` (k x k grid, or cubic order) or `RxC` for grids.
    struct SweepSize
    {
        int rows = 0;
        int cols = 0;

        auto label() const -> std::string;
    };

    auto parse_sweep_size(const std::string & text) -> SweepSize;

    /// Two rows per size, the base bipartite graph then its construction.
    /// Widths are exact up to the exact limit and upper bounds beyond. Past
    /// the treewidth limit the tw column stays empty and eq1_bound comes
    /// from the minor-min-width lower bound.
    auto family_sweep(SweepFamily family, const std::vector<SweepSize> & sizes, UpperStrategy strategy, const ExperimentConfig & config) -> ExperimentReport;
}
