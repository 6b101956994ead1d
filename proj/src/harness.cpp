#include <mimlab/constructions.hpp>
#include <mimlab/error.hpp>
#include <mimlab/generators.hpp>
#include <mimlab/harness.hpp>
#include <mimlab/random.hpp>
#include <mimlab/recognize.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdio>

namespace mimlab
{
    namespace
    {
        auto decimal(const Rational & r) -> std::string
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(r.numerator()) / static_cast<double>(r.denominator()));
            return buf;
        }

        auto milliseconds_since(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }

        auto ceil_half(int w) -> int { return (w + 1) / 2; }

        /// Fills the width, treewidth and bound columns for one graph.
        auto measure(const Graph & g, const ExperimentConfig & config, const UpperStrategy & strategy, WidthReport * report_out = nullptr)
            -> ExperimentRow
        {
            if (g.order() > config.limits.exact && g.order() > config.limits.upper)
                throw LimitExceeded(std::to_string(g.order()) + " vertices exceeds the heuristic limit " + std::to_string(config.limits.upper));
            auto start = std::chrono::steady_clock::now();
            ExperimentRow row;
            row.n = g.order();
            WidthReport report = g.order() <= config.limits.exact ? mimw_exact(g, config.limits.exact) : mimw_upper(g, strategy, config.seed);
            row.mimw_mode = report.mode;
            row.mimw_value = report.value;
            row.degeneracy = degeneracy(g).d;
            if (g.order() <= config.limits.treewidth) {
                auto bound = mimw_lower_degeneracy(g, config.limits.treewidth);
                row.tw = bound.treewidth;
                row.eq1_bound = bound.bound;
            }
            else
                row.eq1_bound = degeneracy_bound_from(treewidth_lower_mmw(g), row.degeneracy);
            if (config.timing)
                row.runtime_ms = milliseconds_since(start);
            if (report_out)
                *report_out = std::move(report);
            return row;
        }

        auto check_degeneracy_bound(const ExperimentRow & row, const std::string & what, std::vector<std::string> & violations) -> void
        {
            if (row.mimw_mode == WidthMode::exact && row.eq1_bound && *row.eq1_bound > Rational(row.mimw_value))
                violations.push_back(what + ": tw/(3(d+1)) = " + to_string(*row.eq1_bound) + " exceeds mim-width " + std::to_string(row.mimw_value));
        }

        auto ratio_of(int after, int before) -> Rational
        {
            return before == 0 ? Rational(1) : Rational(after, before);
        }
    }

    auto to_csv(const ExperimentReport & report) -> std::string
    {
        std::string out = "family,parameter,n,mimw_mode,mimw_value,tw,degeneracy,eq1_bound,ratio,runtime_ms\n";
        for (auto & r : report.rows) {
            out += r.family + "," + r.parameter + "," + std::to_string(r.n) + "," + to_string(r.mimw_mode) + "," + std::to_string(r.mimw_value) + ",";
            out += (r.tw ? std::to_string(*r.tw) : "") + "," + std::to_string(r.degeneracy) + ",";
            out += (r.eq1_bound ? decimal(*r.eq1_bound) : "") + "," + (r.ratio ? decimal(*r.ratio) : "") + ",";
            if (r.runtime_ms) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.3f", *r.runtime_ms);
                out += buf;
            }
            out += "\n";
        }
        return out;
    }

    auto to_json(const ExperimentReport & report) -> std::string
    {
        using Json = nlohmann::ordered_json;
        Json j;
        j["suite"] = report.suite;
        Json config;
        config["seed"] = report.config.seed;
        config["exact_limit"] = report.config.limits.exact;
        config["tw_limit"] = report.config.limits.treewidth;
        config["cycle_limit"] = report.config.limits.cycle;
        config["upper_limit"] = report.config.limits.upper;
        config["flags"] = report.config.flags;
        j["config"] = std::move(config);
        auto rows = Json::array();
        for (auto & r : report.rows) {
            Json row;
            row["family"] = r.family;
            row["parameter"] = r.parameter;
            row["n"] = r.n;
            row["mimw_mode"] = to_string(r.mimw_mode);
            row["mimw_value"] = r.mimw_value;
            row["tw"] = r.tw ? Json(*r.tw) : Json(nullptr);
            row["degeneracy"] = r.degeneracy;
            row["eq1_bound"] = r.eq1_bound ? Json(to_string(*r.eq1_bound)) : Json(nullptr);
            row["ratio"] = r.ratio ? Json(to_string(*r.ratio)) : Json(nullptr);
            row["runtime_ms"] = r.runtime_ms ? Json(*r.runtime_ms) : Json(nullptr);
            rows.push_back(std::move(row));
        }
        j["rows"] = std::move(rows);
        j["violations"] = report.violations;
        return j.dump(2) + "\n";
    }

    auto verify_halving(const HalvingOptions & options, const ExperimentConfig & config) -> ExperimentReport
    {
        if (options.trials < 0)
            throw InvalidParameter("trial count must be non-negative");
        if (options.n_max < 2)
            throw InvalidParameter("n-max must be at least 2");
        if (options.n_max > config.limits.exact)
            throw LimitExceeded("n-max " + std::to_string(options.n_max) + " exceeds the exact limit " + std::to_string(config.limits.exact));

        ExperimentReport report{"halving", config, {}, {}};
        report.config.flags["trials"] = std::to_string(options.trials);
        report.config.flags["n_max"] = std::to_string(options.n_max);
        report.config.flags["add_probability"] = decimal(Rational(static_cast<std::int64_t>(options.add_probability * 1e6), 1000000));
        if (options.edge_probability)
            report.config.flags["edge_probability"] = decimal(Rational(static_cast<std::int64_t>(*options.edge_probability * 1e6), 1000000));

        constexpr double cycle_p[] = {0.2, 0.5, 0.8};
        Rng master(config.seed);
        for (int trial = 0; trial < options.trials; ++trial) {
            Rng rng(master.next());
            int n = 2 + static_cast<int>(rng.below(options.n_max - 1));
            int nx = 1 + static_cast<int>(rng.below(n - 1));
            double p = options.edge_probability.value_or(cycle_p[trial % 3]);
            auto base = random_bipartite(nx, n - nx, p, rng.next());

            std::vector<Edge> extra;
            for (auto side : {Side::x, Side::y}) {
                auto cls = base.class_of(side);
                for (std::size_t i = 0; i < cls.size(); ++i)
                    for (std::size_t j = i + 1; j < cls.size(); ++j)
                        if (rng.bernoulli(options.add_probability))
                            extra.emplace_back(cls[i], cls[j]);
            }
            auto rec = add_intra_class_edges(base, std::move(extra));

            auto start = std::chrono::steady_clock::now();
            auto before = mimw_exact(rec.original.graph(), config.limits.exact);
            auto after = mimw_exact(rec.result, config.limits.exact);

            ExperimentRow row;
            row.family = "random-bipartite";
            char param[128];
            std::snprintf(param, sizeof param, "trial=%d;nx=%d;ny=%d;p=%.1f;added=%zu;base=%d", trial, nx, n - nx, p, rec.added_edges.size(), before.value);
            row.parameter = param;
            row.n = n;
            row.mimw_mode = WidthMode::exact;
            row.mimw_value = after.value;
            row.degeneracy = degeneracy(rec.result).d;
            auto bound = mimw_lower_degeneracy(rec.result, config.limits.treewidth);
            row.tw = bound.treewidth;
            row.eq1_bound = bound.bound;
            row.ratio = ratio_of(after.value, before.value);
            if (config.timing)
                row.runtime_ms = milliseconds_since(start);

            auto tag = "trial " + std::to_string(trial);
            if (after.value < ceil_half(before.value))
                report.violations.push_back(tag + ": mimw(G') = " + std::to_string(after.value) + " < ceil(" + std::to_string(before.value) + "/2)");
            auto half = larger_x_aligned_half(rec, before);
            if (static_cast<int>(half.size()) < ceil_half(before.value) || ! is_induced_matching_of_cut(rec.result, before.critical_cut.a_side, half))
                report.violations.push_back(tag + ": X-aligned half of the critical matching is not induced in G'");
            check_degeneracy_bound(row, tag, report.violations);
            report.rows.push_back(std::move(row));
        }
        return report;
    }

    auto verify_constructions(const std::vector<Named<BipartiteGraph>> & corpus, int random_trials, const ExperimentConfig & config) -> ExperimentReport
    {
        ExperimentReport report{"constructions", config, {}, {}};
        report.config.flags["random_trials"] = std::to_string(random_trials);
        auto & violations = report.violations;
        const auto & limits = config.limits;
        UpperStrategy strategy;

        auto flag = [](bool b) { return b ? "1" : "0"; };
        auto certified = [&](GraphClass c, const Graph & g, const RecognitionResult & r, const std::string & what) {
            if (! verify_certificate(c, g, r))
                violations.push_back(what + ": " + to_string(c) + " certificate does not verify");
            return r.verdict;
        };

        auto one_side_row = [&](const std::string & name, const BipartiteGraph & b, bool expect_strong) {
            auto rec = complete_one_side(b, Side::y);
            if (! is_consistent(rec))
                violations.push_back(name + ": one-side completion record inconsistent");
            auto & g = rec.result;
            bool split = certified(GraphClass::split, g, is_split(g), name);
            bool chordal = certified(GraphClass::chordal, g, is_chordal(g), name);
            std::optional<bool> strong;
            if (g.order() <= limits.cycle)
                strong = certified(GraphClass::strongly_chordal, g, is_strongly_chordal(g, limits.cycle), name);
            if (! split)
                violations.push_back(name + ": one-side completion is not split");
            if (! chordal)
                violations.push_back(name + ": one-side completion is not chordal");
            if (expect_strong && strong && ! *strong)
                violations.push_back(name + ": completion of a chordal bipartite graph is not strongly chordal");
            auto row = measure(g, config, strategy);
            row.family = name;
            row.parameter = std::string("one-side[split=") + flag(split) + ";chordal=" + flag(chordal) +
                ";strongly-chordal=" + (strong ? flag(*strong) : "") + "]";
            return row;
        };

        auto both_sides_row = [&](const std::string & name, const BipartiteGraph & b) {
            auto rec = complete_both_sides(b);
            if (! is_consistent(rec))
                violations.push_back(name + ": two-side completion record inconsistent");
            auto & g = rec.result;
            auto comp = complement(g);
            bool complement_bipartite = is_proper_coloring(comp, b.x_class());
            std::optional<bool> cocomp;
            if (g.order() <= limits.cycle)
                cocomp = certified(GraphClass::co_comparability, g, is_co_comparability(g, limits.cycle), name);
            if (! complement_bipartite)
                violations.push_back(name + ": complement of two-side completion is not bipartite on the original classes");
            if (cocomp && ! *cocomp)
                violations.push_back(name + ": two-side completion is not co-comparability");
            auto row = measure(g, config, strategy);
            row.family = name;
            row.parameter = std::string("two-side[complement-bipartite=") + flag(complement_bipartite) + ";co-comparability=" + (cocomp ? flag(*cocomp) : "") + "]";
            return row;
        };

        for (auto & [name, b] : corpus) {
            std::optional<bool> chordal_bipartite;
            if (b.graph().order() <= limits.cycle)
                chordal_bipartite = certified(GraphClass::chordal_bipartite, b.graph(), is_chordal_bipartite(b.graph(), limits.cycle), name);
            report.rows.push_back(one_side_row(name, b, chordal_bipartite.value_or(false)));
            report.rows.push_back(both_sides_row(name, b));
        }

        // C6 is bipartite but not chordal bipartite; its completion is the 3-sun
        {
            auto c6 = std::get<BipartiteGraph>(two_color(cycle(6)));
            auto sun = complete_one_side(c6, Side::y).result;
            auto chordal = is_chordal(sun);
            auto strong = is_strongly_chordal(sun, std::max(limits.cycle, sun.order()));
            auto * cyc = std::get_if<ViolatingCycle>(&strong.certificate);
            if (! chordal.verdict || strong.verdict || ! cyc || cyc->cycle.size() != 6 || ! verify_certificate(GraphClass::strongly_chordal, sun, strong))
                violations.push_back("cycle-6: completion should be chordal but not strongly chordal, with a certified 6-cycle");
            auto row = one_side_row("cycle-6", c6, false);
            report.rows.push_back(std::move(row));
        }

        Rng master(config.seed);
        for (int t = 0; t < random_trials; ++t) {
            Rng rng(master.next());
            int nx = 1 + static_cast<int>(rng.below(8));
            int ny = 1 + static_cast<int>(rng.below(8));
            constexpr double ps[] = {0.2, 0.5, 0.8};
            auto b = random_bipartite(nx, ny, ps[t % 3], rng.next());
            report.rows.push_back(both_sides_row("random-bipartite-" + std::to_string(t), b));
        }
        return report;
    }

    auto degeneracy_bound_corpus() -> std::vector<Named<Graph>>
    {
        auto corpus = small_graph_corpus(9);
        corpus.push_back({"subdivided-complete-4", subdivide_all_edges(complete(4)).graph()});
        return corpus;
    }

    auto verify_degeneracy_bound(const std::vector<Named<Graph>> & corpus, const ExperimentConfig & config) -> ExperimentReport
    {
        ExperimentReport report{"degeneracy-bound", config, {}, {}};
        UpperStrategy strategy;
        for (auto & [name, g] : corpus) {
            if (g.order() > config.limits.exact)
                throw LimitExceeded(name + " has " + std::to_string(g.order()) + " vertices, above the exact limit " + std::to_string(config.limits.exact));
            if (g.order() > config.limits.treewidth)
                throw LimitExceeded(name + " has " + std::to_string(g.order()) + " vertices, above the treewidth limit " + std::to_string(config.limits.treewidth));
            auto row = measure(g, config, strategy);
            row.family = name;
            check_degeneracy_bound(row, name, report.violations);
            report.rows.push_back(std::move(row));
        }
        return report;
    }

    auto parse_sweep_family(const std::string & name) -> std::optional<SweepFamily>
    {
        if (name == "split-grid")
            return SweepFamily::split_grid;
        if (name == "cocomp-grid")
            return SweepFamily::cocomp_grid;
        if (name == "circle-cubic")
            return SweepFamily::circle_cubic;
        return std::nullopt;
    }

    auto to_string(SweepFamily f) -> std::string
    {
        switch (f) {
        case SweepFamily::split_grid: return "split-grid";
        case SweepFamily::cocomp_grid: return "cocomp-grid";
        case SweepFamily::circle_cubic: return "circle-cubic";
        }
        return "?";
    }

    auto SweepSize::label() const -> std::string
    {
        return rows == cols ? std::to_string(rows) : std::to_string(rows) + "x" + std::to_string(cols);
    }

    auto parse_sweep_size(const std::string & text) -> SweepSize
    {
        SweepSize s;
        char x = 0;
        int consumed = 0;
        if (std::sscanf(text.c_str(), "%dx%d%n", &s.rows, &s.cols, &consumed) == 2 && consumed == static_cast<int>(text.size()))
            ;
        else if (std::sscanf(text.c_str(), "%d%c", &s.rows, &x) == 1)
            s.cols = s.rows;
        else
            throw InvalidParameter("bad sweep size '" + text + "'");
        if (s.rows < 1 || s.cols < 1)
            throw InvalidParameter("sweep sizes must be positive");
        return s;
    }

    auto family_sweep(SweepFamily family, const std::vector<SweepSize> & sizes, UpperStrategy strategy, const ExperimentConfig & config) -> ExperimentReport
    {
        ExperimentReport report{"sweep", config, {}, {}};
        report.config.flags["family"] = to_string(family);
        std::string size_list;
        for (auto & s : sizes)
            size_list += (size_list.empty() ? "" : ",") + s.label();
        report.config.flags["sizes"] = size_list;
        report.config.flags["strategy"] = strategy.kind == UpperStrategy::Kind::local_search ? "local" : "random:" + std::to_string(strategy.orders);

        auto & violations = report.violations;
        for (auto & size : sizes) {
            BipartiteGraph base;
            Graph result;
            std::string base_family, tag = to_string(family) + " " + size.label();
            switch (family) {
            case SweepFamily::split_grid:
            case SweepFamily::cocomp_grid: {
                base = std::get<BipartiteGraph>(two_color(grid(size.rows, size.cols)));
                base_family = "grid";
                if (family == SweepFamily::split_grid) {
                    result = complete_one_side(base, Side::y).result;
                    if (! is_split(result).verdict)
                        violations.push_back(tag + ": completion is not split");
                }
                else {
                    result = complete_both_sides(base).result;
                    if (! is_proper_coloring(complement(result), base.x_class()))
                        violations.push_back(tag + ": complement of completion is not bipartite");
                    if (result.order() <= config.limits.cycle && ! is_co_comparability(result, config.limits.cycle).verdict)
                        violations.push_back(tag + ": completion is not co-comparability");
                }
                break;
            }
            case SweepFamily::circle_cubic: {
                if (size.rows != size.cols)
                    throw InvalidParameter("circle-cubic sizes are single vertex counts");
                base = build_subdivided_family(size.rows, config.seed);
                base_family = "subdivided-cubic";
                auto diagram = embed_chord_diagram(base);
                if (auto err = verify_chord_diagram(diagram, base))
                    violations.push_back(tag + ": " + to_string(err->kind) + ": " + err->message);
                result = diagram.intersection_graph();
                break;
            }
            }

            auto base_row = measure(base.graph(), config, strategy);
            base_row.family = base_family;
            base_row.parameter = size.label();
            auto row = measure(result, config, strategy);
            row.family = to_string(family);
            row.parameter = size.label();
            if (base_row.mimw_mode == WidthMode::exact && row.mimw_mode == WidthMode::exact) {
                row.ratio = ratio_of(row.mimw_value, base_row.mimw_value);
                if (row.mimw_value < ceil_half(base_row.mimw_value))
                    violations.push_back(tag + ": construction width below half the base width");
            }
            check_degeneracy_bound(base_row, tag + " base", violations);
            check_degeneracy_bound(row, tag, violations);
            report.rows.push_back(std::move(base_row));
            report.rows.push_back(std::move(row));
        }
        return report;
    }
}
