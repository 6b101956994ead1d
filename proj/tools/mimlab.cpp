#include <mimlab/constructions.hpp>
#include <mimlab/corpus.hpp>
#include <mimlab/error.hpp>
#include <mimlab/generators.hpp>
#include <mimlab/harness.hpp>
#include <mimlab/io.hpp>
#include <mimlab/recognize.hpp>
#include <mimlab/width.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

using namespace mimlab;

namespace
{
    constexpr int exit_violation = 2;
    constexpr int exit_limit = 3;
    constexpr int exit_io = 4;
    constexpr int exit_invalid = 1;

    struct Globals
    {
        std::uint64_t seed = 1;
        int exact_limit = 0;
        int tw_limit = 0;
        int cycle_limit = 0;
        int upper_limit = 0;
        std::string format = "csv";
        std::string out;
        bool timing = false;

        CLI::Option * exact_opt = nullptr;
        CLI::Option * tw_opt = nullptr;
        CLI::Option * cycle_opt = nullptr;
        CLI::Option * upper_opt = nullptr;

        auto limits() const -> Limits
        {
            Limits l;
            if (auto env = std::getenv("MIMLAB_LIMITS"))
                l = apply_limit_overrides(l, env);
            if (exact_opt->count())
                l.exact = exact_limit;
            if (tw_opt->count())
                l.treewidth = tw_limit;
            if (cycle_opt->count())
                l.cycle = cycle_limit;
            if (upper_opt->count())
                l.upper = upper_limit;
            return l;
        }

        auto config() const -> ExperimentConfig
        {
            ExperimentConfig c;
            c.seed = seed;
            c.limits = limits();
            c.timing = timing;
            return c;
        }

        auto emit(const std::string & text) const -> void
        {
            if (out.empty())
                std::cout << text << std::flush;
            else
                write_text_file(out, text);
        }
    };

    auto load_bipartite(const std::string & path) -> BipartiteGraph
    {
        auto file = read_graph_file(path);
        try {
            return file.bipartite();
        }
        catch (const InvalidParameter & e) {
            throw InvalidParameter(path + ": " + e.what());
        }
    }

    auto strategy_of(const std::string & name, int orders) -> UpperStrategy
    {
        UpperStrategy s;
        s.orders = orders;
        if (name == "random")
            s.kind = UpperStrategy::Kind::random_orders;
        else if (name == "local")
            s.kind = UpperStrategy::Kind::local_search;
        else
            throw InvalidParameter("unknown strategy '" + name + "'");
        return s;
    }

    // returns the process exit status
    auto finish_report(const Globals & g, const ExperimentReport & report) -> int
    {
        g.emit(g.format == "json" ? to_json(report) : to_csv(report));
        if (report.violations.empty())
            return 0;
        for (auto & v : report.violations)
            std::cerr << report.suite << ": " << v << "\n";
        std::cerr << report.suite << ": " << report.violations.size() << " violation(s)\n";
        return exit_violation;
    }

    auto generate(const std::string & family, const std::vector<std::string> & args, std::uint64_t seed) -> std::string
    {
        auto need = [&](std::size_t k) {
            if (args.size() != k)
                throw InvalidParameter(family + " takes " + std::to_string(k) + " parameter(s)");
        };
        auto integer = [&](std::size_t i) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(args[i], &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used == 0 || used != args[i].size())
                throw InvalidParameter("'" + args[i] + "' is not an integer");
            return v;
        };
        if (family == "grid") {
            need(2);
            return to_text(grid(integer(0), integer(1)));
        }
        if (family == "cycle") {
            need(1);
            return to_text(cycle(integer(0)));
        }
        if (family == "path") {
            need(1);
            return to_text(path(integer(0)));
        }
        if (family == "complete") {
            need(1);
            return to_text(complete(integer(0)));
        }
        if (family == "edgeless") {
            need(1);
            return to_text(edgeless(integer(0)));
        }
        if (family == "complete-bipartite") {
            need(2);
            return to_text(complete_bipartite(integer(0), integer(1)));
        }
        if (family == "random-bipartite") {
            need(3);
            double p = 0;
            try {
                p = std::stod(args[2]);
            }
            catch (const std::exception &) {
                throw InvalidParameter("'" + args[2] + "' is not a probability");
            }
            return to_text(random_bipartite(integer(0), integer(1), p, seed));
        }
        if (family == "cubic") {
            need(1);
            return to_text(random_cubic(integer(0), seed));
        }
        if (family == "subdivided-cubic") {
            need(1);
            return to_text(build_subdivided_family(integer(0), seed));
        }
        throw InvalidParameter("unknown family '" + family + "'");
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"mimlab: mim-width experiments on bipartite completions"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
    g.exact_opt = app.add_option("--exact-limit", g.exact_limit, "Largest order for exact mim-width");
    g.tw_opt = app.add_option("--tw-limit", g.tw_limit, "Largest order for exact treewidth");
    g.cycle_opt = app.add_option("--cycle-limit", g.cycle_limit, "Largest order for cycle and orientation search");
    g.upper_opt = app.add_option("--upper-limit", g.upper_limit, "Largest order for the heuristic");
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--out", g.out, "Write output here instead of stdout");
    app.add_flag("--timing", g.timing, "Fill the runtime_ms column");

    // gen
    auto * gen = app.add_subcommand("gen", "Write a generated graph, or the chordal-bipartite corpus");
    std::string gen_family;
    std::vector<std::string> gen_args;
    int corpus_max_tree = 8, corpus_max_side = 4;
    gen->add_option("family", gen_family, "grid, cycle, path, complete, edgeless, complete-bipartite, random-bipartite, cubic, subdivided-cubic, corpus")->required();
    gen->add_option("params", gen_args, "Family parameters; a directory for corpus");
    gen->add_option("--max-tree", corpus_max_tree, "corpus: largest tree order")->capture_default_str();
    gen->add_option("--max-side", corpus_max_side, "corpus: largest K_{a,b} side")->capture_default_str();

    // recognize
    auto * rec = app.add_subcommand("recognize", "Test class membership and print the certificate");
    std::string rec_class, rec_file;
    rec->add_option("class", rec_class, "bipartite, split, chordal, strongly-chordal, chordal-bipartite, comparability, co-comparability")->required();
    rec->add_option("file", rec_file)->required();

    // mimw
    auto * mimw = app.add_subcommand("mimw", "Mim-width of a graph file");
    std::string mimw_file, strategy_name = "local";
    int orders = 16;
    bool want_exact = false, want_upper = false, want_lower = false;
    mimw->add_option("file", mimw_file)->required();
    auto * ex = mimw->add_flag("--exact", want_exact, "Exhaustive search (default)");
    auto * up = mimw->add_flag("--upper", want_upper, "Caterpillar heuristic");
    auto * lo = mimw->add_flag("--lower", want_lower, "tw/(3(d+1)) lower bound");
    ex->excludes(up)->excludes(lo);
    up->excludes(lo);
    mimw->add_option("--strategy", strategy_name, "random or local")->capture_default_str();
    mimw->add_option("--orders", orders, "Random orders tried by the heuristic")->capture_default_str();

    // tw
    auto * tw = app.add_subcommand("tw", "Exact treewidth with an elimination order");
    std::string tw_file;
    tw->add_option("file", tw_file)->required();

    // construct
    auto * construct = app.add_subcommand("construct", "Apply a construction to a bipartite graph");
    std::string construct_kind, construct_file;
    construct->add_option("kind", construct_kind, "split, cocomp or circle")->required()->check(CLI::IsMember({"split", "cocomp", "circle"}));
    construct->add_option("file", construct_file)->required();

    // embed
    auto * embed = app.add_subcommand("embed", "Chord diagram of a graph whose Y side has degree 2");
    std::string embed_file;
    embed->add_option("file", embed_file)->required();

    // verify
    auto * verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    auto * vhalf = verify->add_subcommand("lemma31", "Intra-class additions keep at least half the mim-width");
    HalvingOptions halving;
    double edge_p = -1;
    vhalf->add_option("--trials", halving.trials)->capture_default_str();
    vhalf->add_option("--n-max", halving.n_max)->capture_default_str();
    vhalf->add_option("--edge-p", edge_p, "Fixed edge probability instead of cycling 0.2/0.5/0.8");
    vhalf->add_option("--add-p", halving.add_probability, "Probability of adding each intra-class pair")->capture_default_str();
    auto * vcon = verify->add_subcommand("constructions", "Recognizer battery on completions");
    std::string con_corpus;
    int random_trials = 100;
    vcon->add_option("corpus", con_corpus, "Directory or file of bipartite graphs; builtin corpus if omitted");
    vcon->add_option("--random-trials", random_trials)->capture_default_str();
    int con_max_tree = 8;
    vcon->add_option("--max-tree", con_max_tree, "Builtin corpus: largest tree order")->capture_default_str();
    auto * vbound = verify->add_subcommand("eq1", "mimw >= tw/(3(d+1)) on a corpus");
    std::string bound_path;
    vbound->add_option("corpus", bound_path, "Directory or file of graphs; builtin corpus if omitted");

    // sweep
    auto * sweep = app.add_subcommand("sweep", "Widths along a construction family");
    std::string sweep_family;
    std::vector<std::string> sweep_sizes;
    sweep->add_option("family", sweep_family, "split-grid, cocomp-grid or circle-cubic")->required();
    sweep->add_option("sizes", sweep_sizes, "k or RxC")->required();
    sweep->add_option("--strategy", strategy_name, "random or local")->capture_default_str();
    sweep->add_option("--orders", orders)->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e);
    }

    try {
        if (gen->parsed()) {
            if (gen_family == "corpus") {
                if (gen_args.size() != 1)
                    throw InvalidParameter("corpus takes an output directory");
                for (auto & p : write_corpus(gen_args[0], chordal_bipartite_corpus(corpus_max_tree, corpus_max_side)))
                    std::cout << p.string() << "\n";
                return 0;
            }
            g.emit(generate(gen_family, gen_args, g.seed));
            return 0;
        }
        if (rec->parsed()) {
            auto cls = parse_graph_class(rec_class);
            if (! cls)
                throw InvalidParameter("unknown class '" + rec_class + "'");
            auto graph = read_graph_file(rec_file).graph;
            g.emit(to_text(recognize(*cls, graph, g.limits())));
            return 0;
        }
        if (mimw->parsed()) {
            auto graph = read_graph_file(mimw_file).graph;
            auto limits = g.limits();
            if (want_lower) {
                auto b = mimw_lower_degeneracy(graph, limits.treewidth);
                nlohmann::ordered_json j;
                j["bound"] = to_string(b.bound);
                j["integer_bound"] = b.integer_bound;
                j["treewidth"] = b.treewidth;
                j["degeneracy"] = b.degeneracy;
                g.emit(j.dump() + "\n");
                return 0;
            }
            if (want_upper) {
                if (graph.order() > limits.upper)
                    throw LimitExceeded(std::to_string(graph.order()) + " vertices exceeds the heuristic limit " + std::to_string(limits.upper));
                g.emit(to_json(mimw_upper(graph, strategy_of(strategy_name, orders), g.seed)) + "\n");
                return 0;
            }
            g.emit(to_json(mimw_exact(graph, limits.exact)) + "\n");
            return 0;
        }
        if (tw->parsed()) {
            auto graph = read_graph_file(tw_file).graph;
            auto r = treewidth_exact(graph, g.limits().treewidth);
            nlohmann::ordered_json j;
            j["treewidth"] = r.value;
            j["elimination_order"] = r.elimination_order;
            g.emit(j.dump() + "\n");
            return 0;
        }
        if (construct->parsed()) {
            auto b = load_bipartite(construct_file);
            if (construct_kind == "split")
                g.emit(to_text(complete_one_side(b, Side::y).result));
            else if (construct_kind == "cocomp")
                g.emit(to_text(complete_both_sides(b).result));
            else
                g.emit(to_text(embed_chord_diagram(b).intersection_graph()));
            return 0;
        }
        if (embed->parsed()) {
            auto b = load_bipartite(embed_file);
            auto d = embed_chord_diagram(b);
            if (auto err = verify_chord_diagram(d, b)) {
                std::cerr << "embed: " << to_string(err->kind) << ": " << err->message << "\n";
                return exit_violation;
            }
            g.emit(d.to_text() + "\n");
            return 0;
        }
        if (vhalf->parsed()) {
            if (edge_p >= 0)
                halving.edge_probability = edge_p;
            return finish_report(g, verify_halving(halving, g.config()));
        }
        if (vcon->parsed()) {
            auto corpus = con_corpus.empty() ? chordal_bipartite_corpus(con_max_tree) : read_corpus(con_corpus);
            return finish_report(g, verify_constructions(corpus, random_trials, g.config()));
        }
        if (vbound->parsed()) {
            auto corpus = bound_path.empty() ? degeneracy_bound_corpus() : read_graph_corpus(bound_path);
            auto config = g.config();
            // the builtin corpus includes the 10-vertex subdivided K4
            auto env = std::getenv("MIMLAB_LIMITS");
            bool exact_set = g.exact_opt->count() || (env && std::string(env).find("exact=") != std::string::npos);
            if (bound_path.empty() && ! exact_set)
                config.limits.exact = std::max(config.limits.exact, 10);
            return finish_report(g, verify_degeneracy_bound(corpus, config));
        }
        if (sweep->parsed()) {
            auto family = parse_sweep_family(sweep_family);
            if (! family)
                throw InvalidParameter("unknown sweep family '" + sweep_family + "'");
            std::vector<SweepSize> sizes;
            for (auto & s : sweep_sizes)
                sizes.push_back(parse_sweep_size(s));
            return finish_report(g, family_sweep(*family, sizes, strategy_of(strategy_name, orders), g.config()));
        }
    }
    catch (const LimitExceeded & e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return exit_limit;
    }
    catch (const IoFailure & e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io;
    }
    catch (const InvalidParameter & e) {
        std::cerr << "invalid parameter: " << e.what() << "\n";
        return exit_invalid;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return 0;
}
