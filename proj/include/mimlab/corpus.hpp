#pragma once

#include <mimlab/graph.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace mimlab
{
    template <typename G>
    struct Named
    {
        std::string name;
        G graph;
    };

    /// One representative per isomorphism class of trees on n <= 16
    /// vertices, built by attaching a leaf to every vertex of every smaller
    /// representative; the first labelling reached is kept.
    auto nonisomorphic_trees(int n) -> std::vector<Graph>;

    /// Trees up to `max_tree_order` vertices (n >= 2), C4, and K_{a,b} for
    /// 1 <= a <= b <= max_side.
    auto chordal_bipartite_corpus(int max_tree_order = 8, int max_side = 4) -> std::vector<Named<BipartiteGraph>>;

    /// Small graphs of assorted shapes, all within `max_order` vertices.
    auto small_graph_corpus(int max_order = 9) -> std::vector<Named<Graph>>;

    /// Writes one `<name>.txt` per entry. Returns the paths written.
    auto write_corpus(const std::filesystem::path & dir, const std::vector<Named<BipartiteGraph>> & corpus) -> std::vector<std::filesystem::path>;

    /// Every regular file in `dir` with a `.txt` extension, sorted by file
    /// name; a plain file path yields just that file.
    auto read_corpus(const std::filesystem::path & path) -> std::vector<Named<BipartiteGraph>>;

    /// As read_corpus, without requiring a colour class.
    auto read_graph_corpus(const std::filesystem::path & path) -> std::vector<Named<Graph>>;
}
