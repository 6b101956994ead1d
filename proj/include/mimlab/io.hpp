#pragma once

#include <mimlab/graph.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mimlab
{
    /// Contents of an edge-list file. `x_class` is present when the file
    /// carries a `bip` line.
    struct GraphFile
    {
        Graph graph;
        std::optional<std::vector<Vertex>> x_class;

        /// The stored colouring if present, otherwise two_color(). Throws
        /// InvalidParameter if the graph is not bipartite.
        auto bipartite() const -> BipartiteGraph;
    };

    /// Canonical text form:
    ///
    ///     graph <n> <m>
    ///     <u> <v>        (m lines, u < v, lexicographic)
    ///     bip <x...>     (bipartite files only)
    auto to_text(const Graph & g) -> std::string;
    auto to_text(const BipartiteGraph & b) -> std::string;

    /// Edges may appear in any order and orientation. Throws ParseError.
    auto parse_graph(std::istream & in) -> GraphFile;
    auto parse_graph(const std::string & text) -> GraphFile;

    auto read_graph_file(const std::filesystem::path & path) -> GraphFile;
    auto write_text_file(const std::filesystem::path & path, const std::string & text) -> void;
}
