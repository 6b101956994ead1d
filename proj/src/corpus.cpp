#include <mimlab/corpus.hpp>
#include <mimlab/error.hpp>
#include <mimlab/generators.hpp>
#include <mimlab/io.hpp>

#include <algorithm>
#include <functional>
#include <set>

namespace mimlab
{
    namespace
    {
        // AHU string of the tree rooted at r
        auto encode(const Graph & t, Vertex r, Vertex parent) -> std::string
        {
            std::vector<std::string> parts;
            for (auto c : t.neighbours(r))
                if (c != parent)
                    parts.push_back(encode(t, c, r));
            std::ranges::sort(parts);
            std::string out = "(";
            for (auto & p : parts)
                out += p;
            return out + ")";
        }

        auto canonical_form(const Graph & t) -> std::string
        {
            // centres by repeated leaf stripping
            const int n = t.order();
            std::vector<int> degree(n);
            std::vector<Vertex> layer;
            for (Vertex v = 0; v < n; ++v) {
                degree[v] = t.degree(v);
                if (degree[v] <= 1)
                    layer.push_back(v);
            }
            int remaining = n;
            while (remaining > 2) {
                remaining -= static_cast<int>(layer.size());
                std::vector<Vertex> next;
                for (auto v : layer)
                    for (auto w : t.neighbours(v))
                        if (--degree[w] == 1)
                            next.push_back(w);
                layer = std::move(next);
            }
            std::string best;
            for (auto c : layer) {
                auto code = encode(t, c, -1);
                if (best.empty() || code < best)
                    best = code;
            }
            return best;
        }
    }

    auto nonisomorphic_trees(int n) -> std::vector<Graph>
    {
        if (n < 1)
            throw InvalidParameter("tree order must be positive");
        if (n > 16)
            throw LimitExceeded("tree enumeration is limited to 16 vertices");

        // every tree on k + 1 vertices is a tree on k vertices plus a leaf
        std::vector<Graph> trees{Graph(1)};
        for (int k = 1; k < n; ++k) {
            std::vector<Graph> next;
            std::set<std::string> seen;
            for (auto & t : trees)
                for (Vertex v = 0; v < k; ++v) {
                    std::vector<Edge> edges(t.edges().begin(), t.edges().end());
                    edges.emplace_back(v, k);
                    Graph grown(k + 1, std::move(edges));
                    if (seen.insert(canonical_form(grown)).second)
                        next.push_back(std::move(grown));
                }
            trees = std::move(next);
        }
        return trees;
    }

    auto chordal_bipartite_corpus(int max_tree_order, int max_side) -> std::vector<Named<BipartiteGraph>>
    {
        std::vector<Named<BipartiteGraph>> corpus;
        for (int n = 2; n <= max_tree_order; ++n) {
            auto trees = nonisomorphic_trees(n);
            for (std::size_t i = 0; i < trees.size(); ++i)
                corpus.push_back({"tree-" + std::to_string(n) + "-" + std::to_string(i), std::get<BipartiteGraph>(two_color(trees[i]))});
        }
        corpus.push_back({"cycle-4", std::get<BipartiteGraph>(two_color(cycle(4)))});
        for (int a = 1; a <= max_side; ++a)
            for (int b = a; b <= max_side; ++b)
                corpus.push_back({"complete-bipartite-" + std::to_string(a) + "-" + std::to_string(b), complete_bipartite(a, b)});
        return corpus;
    }

    auto small_graph_corpus(int max_order) -> std::vector<Named<Graph>>
    {
        std::vector<Named<Graph>> corpus;
        auto add = [&](std::string name, Graph g) {
            if (g.order() <= max_order)
                corpus.push_back({std::move(name), std::move(g)});
        };
        for (int n = 1; n <= max_order; ++n)
            add("edgeless-" + std::to_string(n), edgeless(n));
        for (int n = 2; n <= max_order; ++n)
            add("path-" + std::to_string(n), path(n));
        for (int n = 3; n <= max_order; ++n)
            add("cycle-" + std::to_string(n), cycle(n));
        for (int n = 2; n <= max_order; ++n)
            add("complete-" + std::to_string(n), complete(n));
        for (int r = 2; r <= 3; ++r)
            for (int c = r; c <= 4; ++c)
                add("grid-" + std::to_string(r) + "x" + std::to_string(c), grid(r, c));
        for (int a = 1; a <= 4; ++a)
            for (int b = a; b <= 5; ++b)
                add("complete-bipartite-" + std::to_string(a) + "-" + std::to_string(b), complete_bipartite(a, b).graph());
        add("cubic-4", random_cubic(4, 1));
        add("cubic-6", random_cubic(6, 1));
        add("cubic-8", random_cubic(8, 1));
        add("subdivided-triangle", subdivide_all_edges(cycle(3)).graph());
        add("prism-3", Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}));
        add("wheel-7", [] {
            auto rim = cycle(6);
            std::vector<Edge> e(rim.edges().begin(), rim.edges().end());
            for (int v = 0; v < 6; ++v)
                e.emplace_back(v, 6);
            return Graph(7, std::move(e));
        }());
        for (int n = 5; n <= std::min(max_order, 8); ++n) {
            auto trees = nonisomorphic_trees(n);
            for (std::size_t i = 0; i < trees.size(); i += 3)
                add("tree-" + std::to_string(n) + "-" + std::to_string(i), trees[i]);
        }
        return corpus;
    }

    auto write_corpus(const std::filesystem::path & dir, const std::vector<Named<BipartiteGraph>> & corpus) -> std::vector<std::filesystem::path>
    {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw IoFailure("cannot create " + dir.string() + ": " + ec.message());
        std::vector<std::filesystem::path> written;
        for (auto & [name, b] : corpus) {
            auto p = dir / (name + ".txt");
            write_text_file(p, to_text(b));
            written.push_back(p);
        }
        return written;
    }

    namespace
    {
        auto corpus_files(const std::filesystem::path & path) -> std::vector<std::filesystem::path>
        {
            std::vector<std::filesystem::path> files;
            std::error_code ec;
            if (std::filesystem::is_directory(path, ec)) {
                for (auto & entry : std::filesystem::directory_iterator(path, ec))
                    if (entry.is_regular_file() && entry.path().extension() == ".txt")
                        files.push_back(entry.path());
                if (ec)
                    throw IoFailure("cannot list " + path.string() + ": " + ec.message());
                std::ranges::sort(files, {}, [](auto & p) { return p.filename().string(); });
            }
            else if (std::filesystem::is_regular_file(path, ec))
                files.push_back(path);
            else
                throw IoFailure("no corpus at " + path.string());
            return files;
        }
    }

    auto read_corpus(const std::filesystem::path & path) -> std::vector<Named<BipartiteGraph>>
    {
        std::vector<Named<BipartiteGraph>> corpus;
        for (auto & f : corpus_files(path)) {
            auto file = read_graph_file(f);
            try {
                corpus.push_back({f.stem().string(), file.bipartite()});
            }
            catch (const InvalidParameter & e) {
                throw ParseError(f.string() + ": " + e.what());
            }
        }
        return corpus;
    }

    auto read_graph_corpus(const std::filesystem::path & path) -> std::vector<Named<Graph>>
    {
        std::vector<Named<Graph>> corpus;
        for (auto & f : corpus_files(path))
            corpus.push_back({f.stem().string(), read_graph_file(f).graph});
        return corpus;
    }
}
