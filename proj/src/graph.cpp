#include <mimlab/error.hpp>
#include <mimlab/graph.hpp>

#include <algorithm>
#include <queue>
#include <set>
#include <string>

namespace mimlab
{
    namespace
    {
        auto checked_order(int n) -> int
        {
            if (n < 0)
                throw InvalidParameter("negative vertex count");
            return n;
        }
    }

    Graph::Graph(int n) : _n(checked_order(n)), _adj(n)
    {
    }

    Graph::Graph(int n, std::vector<Edge> edges) : Graph(n)
    {
        std::ranges::sort(edges);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u == v)
                throw InvalidParameter("self-loop at vertex " + std::to_string(u));
            if (u < 0 || v >= n)
                throw InvalidParameter("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
            if (i > 0 && edges[i - 1] == edges[i])
                throw InvalidParameter("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            _adj[u].push_back(v);
            _adj[v].push_back(u);
        }
        for (auto & a : _adj)
            std::ranges::sort(a);
        _edges = std::move(edges);
    }

    auto Graph::adjacent(Vertex a, Vertex b) const -> bool
    {
        return std::ranges::binary_search(_adj[a], b);
    }

    auto Graph::max_degree() const -> int
    {
        int best = 0;
        for (auto & a : _adj)
            best = std::max(best, static_cast<int>(a.size()));
        return best;
    }

    BipartiteGraph::BipartiteGraph(Graph g, std::vector<Vertex> x_class) :
        _graph(std::move(g)),
        _in_x(_graph.order(), 0)
    {
        for (auto v : x_class) {
            if (v < 0 || v >= _graph.order())
                throw InvalidParameter("colour class vertex out of range: " + std::to_string(v));
            if (_in_x[v])
                throw InvalidParameter("vertex listed twice in colour class: " + std::to_string(v));
            _in_x[v] = 1;
        }
        for (Vertex v = 0; v < _graph.order(); ++v)
            (_in_x[v] ? _x : _y).push_back(v);
        for (auto [u, v] : _graph.edges())
            if (_in_x[u] == _in_x[v])
                throw InvalidParameter("edge " + std::to_string(u) + " " + std::to_string(v) + " lies inside a colour class");
    }

    auto complement(const Graph & g) -> Graph
    {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < g.order(); ++u) {
            auto nb = g.neighbours(u);
            auto it = nb.begin();
            for (Vertex v = u + 1; v < g.order(); ++v) {
                while (it != nb.end() && *it < v)
                    ++it;
                if (it == nb.end() || *it != v)
                    edges.emplace_back(u, v);
            }
        }
        return Graph(g.order(), std::move(edges));
    }

    auto subdivide_all_edges(const Graph & g) -> BipartiteGraph
    {
        const int n = g.order();
        std::vector<Edge> edges;
        edges.reserve(2 * g.size());
        int mid = n;
        for (auto [u, v] : g.edges()) {
            edges.emplace_back(u, mid);
            edges.emplace_back(v, mid);
            ++mid;
        }
        std::vector<Vertex> x(n);
        for (Vertex v = 0; v < n; ++v)
            x[v] = v;
        return BipartiteGraph(Graph(mid, std::move(edges)), std::move(x));
    }

    auto degeneracy(const Graph & g) -> DegeneracyResult
    {
        const int n = g.order();
        std::vector<int> deg(n);
        std::set<std::pair<int, Vertex>> queue;
        for (Vertex v = 0; v < n; ++v) {
            deg[v] = g.degree(v);
            queue.emplace(deg[v], v);
        }

        DegeneracyResult result;
        std::vector<char> removed(n, 0);
        while (! queue.empty()) {
            auto [d, v] = *queue.begin();
            queue.erase(queue.begin());
            result.d = std::max(result.d, d);
            result.order.push_back(v);
            removed[v] = 1;
            for (auto w : g.neighbours(v))
                if (! removed[w]) {
                    queue.erase({deg[w], w});
                    queue.emplace(--deg[w], w);
                }
        }
        return result;
    }

    auto two_color(const Graph & g) -> std::variant<BipartiteGraph, OddCycle>
    {
        const int n = g.order();
        std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
        for (Vertex root = 0; root < n; ++root) {
            if (colour[root] != -1)
                continue;
            colour[root] = 0;
            std::queue<Vertex> todo;
            todo.push(root);
            while (! todo.empty()) {
                auto u = todo.front();
                todo.pop();
                for (auto w : g.neighbours(u)) {
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[u];
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        todo.push(w);
                    }
                    else if (colour[w] == colour[u]) {
                        // walk both tree paths up to their meeting point
                        std::vector<Vertex> left, right;
                        auto a = u, b = w;
                        while (depth[a] > depth[b]) {
                            left.push_back(a);
                            a = parent[a];
                        }
                        while (depth[b] > depth[a]) {
                            right.push_back(b);
                            b = parent[b];
                        }
                        while (a != b) {
                            left.push_back(a);
                            right.push_back(b);
                            a = parent[a];
                            b = parent[b];
                        }
                        left.push_back(a);
                        left.insert(left.end(), right.rbegin(), right.rend());
                        return OddCycle{std::move(left)};
                    }
                }
            }
        }

        std::vector<Vertex> x;
        for (Vertex v = 0; v < n; ++v)
            if (colour[v] == 0)
                x.push_back(v);
        return BipartiteGraph(g, std::move(x));
    }

    auto is_proper_coloring(const Graph & g, std::span<const Vertex> x_class) -> bool
    {
        std::vector<char> in_x(g.order(), 0);
        for (auto v : x_class)
            in_x[v] = 1;
        return std::ranges::none_of(g.edges(), [&](const Edge & e) { return in_x[e.u] == in_x[e.v]; });
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> keep) -> Graph
    {
        std::vector<int> index(g.order(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i)
            index[keep[i]] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (index[u] >= 0 && index[v] >= 0)
                edges.emplace_back(index[u], index[v]);
        return Graph(static_cast<int>(keep.size()), std::move(edges));
    }
}
