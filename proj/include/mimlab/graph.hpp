#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace mimlab
{
    using Vertex = int;

    /// Unordered vertex pair, stored with u < v.
    struct Edge
    {
        Vertex u = 0;
        Vertex v = 0;

        Edge() = default;
        Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

        auto operator<=>(const Edge &) const = default;
    };

    /// Immutable simple undirected graph on vertices 0..n-1.
    ///
    /// The edge list is kept sorted lexicographically and adjacency lists are
    /// sorted, so two graphs built from the same edge set in any insertion
    /// order compare equal.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);

        /// Throws InvalidParameter on self-loops, duplicate edges or
        /// out-of-range endpoints.
        Graph(int n, std::vector<Edge> edges);

        auto order() const noexcept -> int { return _n; }
        auto size() const noexcept -> std::size_t { return _edges.size(); }
        auto edges() const noexcept -> std::span<const Edge> { return _edges; }
        auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adj[v]; }
        auto degree(Vertex v) const -> int { return static_cast<int>(_adj[v].size()); }
        auto adjacent(Vertex a, Vertex b) const -> bool;
        auto max_degree() const -> int;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        int _n = 0;
        std::vector<Edge> _edges;
        std::vector<std::vector<Vertex>> _adj;
    };

    enum class Side
    {
        x,
        y
    };

    /// Graph together with a proper two-colouring into classes X and Y.
    class BipartiteGraph
    {
    public:
        BipartiteGraph() = default;

        /// `x_class` lists the X vertices; every other vertex is in Y.
        /// Throws InvalidParameter if some edge lies inside a class.
        BipartiteGraph(Graph g, std::vector<Vertex> x_class);

        auto graph() const noexcept -> const Graph & { return _graph; }
        auto x_class() const noexcept -> std::span<const Vertex> { return _x; }
        auto y_class() const noexcept -> std::span<const Vertex> { return _y; }
        auto side(Vertex v) const -> Side { return _in_x[v] ? Side::x : Side::y; }
        auto in_x(Vertex v) const -> bool { return _in_x[v] != 0; }
        auto class_of(Side s) const -> std::span<const Vertex> { return s == Side::x ? x_class() : y_class(); }

        friend auto operator==(const BipartiteGraph &, const BipartiteGraph &) -> bool = default;

    private:
        Graph _graph;
        std::vector<Vertex> _x, _y;
        std::vector<char> _in_x;
    };

    struct OddCycle
    {
        std::vector<Vertex> cycle;
    };

    struct DegeneracyResult
    {
        int d = 0;
        std::vector<Vertex> order;
    };

    auto complement(const Graph & g) -> Graph;

    /// Replaces each edge by a path of length two. Original vertices keep their
    /// indices and form X; the midpoint of the i-th edge (in canonical order)
    /// becomes vertex n + i and lies in Y.
    auto subdivide_all_edges(const Graph & g) -> BipartiteGraph;

    /// Repeated minimum-degree removal. Ties go to the lowest index.
    auto degeneracy(const Graph & g) -> DegeneracyResult;

    /// X holds the side of each component containing its lowest vertex, so
    /// isolated vertices land in X. Returns an odd cycle if none exists.
    auto two_color(const Graph & g) -> std::variant<BipartiteGraph, OddCycle>;

    auto is_proper_coloring(const Graph & g, std::span<const Vertex> x_class) -> bool;

    auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph;
}
