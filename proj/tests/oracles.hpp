#pragma once

// Slow reference implementations. None of them share code with the library
// beyond the Graph type.

#include <mimlab/graph.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle
{
    using mimlab::Edge;
    using mimlab::Graph;
    using mimlab::Vertex;

    /// Largest induced matching of G[A, V-A] by trying every subset of cut
    /// edges, largest first.
    inline auto induced_matching(const Graph & g, std::uint32_t a_mask) -> int
    {
        std::vector<Edge> cut;
        for (auto e : g.edges())
            if (((a_mask >> e.u) & 1) != ((a_mask >> e.v) & 1))
                cut.push_back(e);
        const int m = static_cast<int>(cut.size());
        int best = 0;
        for (std::uint64_t s = 1; s < (std::uint64_t{1} << m); ++s) {
            int size = std::popcount(s);
            if (size <= best)
                continue;
            std::vector<Edge> chosen;
            for (int i = 0; i < m; ++i)
                if ((s >> i) & 1)
                    chosen.push_back(cut[i]);
            bool ok = true;
            for (std::size_t i = 0; i < chosen.size() && ok; ++i)
                for (std::size_t j = i + 1; j < chosen.size() && ok; ++j) {
                    auto [a, b] = chosen[i];
                    auto [c, d] = chosen[j];
                    if (a == c || a == d || b == c || b == d)
                        ok = false;
                    // only edges across the cut matter in G[A, V-A]
                    for (auto x : {a, b})
                        for (auto y : {c, d})
                            if (((a_mask >> x) & 1) != ((a_mask >> y) & 1) && g.adjacent(x, y))
                                ok = false;
                }
            if (ok)
                best = size;
        }
        return best;
    }

    /// mim-width through the recursion over vertex sets: a subtree holding
    /// the leaves S splits into two non-empty parts, each paying its own cut.
    /// `cut_value` defaults to the exhaustive induced_matching above.
    inline auto mim_width(const Graph & g, std::function<int(std::uint32_t)> cut_value = {}) -> int
    {
        const int n = g.order();
        if (n <= 1)
            return 0;
        if (! cut_value)
            cut_value = [&](std::uint32_t s) { return induced_matching(g, s); };
        const std::uint32_t full = (std::uint32_t{1} << n) - 1;
        std::vector<int> cut(full + 1);
        for (std::uint32_t s = 0; s <= full; ++s)
            cut[s] = cut_value(s);
        std::vector<int> f(full + 1, -1);
        std::function<int(std::uint32_t)> solve = [&](std::uint32_t s) -> int {
            if (f[s] >= 0)
                return f[s];
            if (std::popcount(s) == 1)
                return f[s] = cut[s];
            int best = 1 << 20;
            // each unordered split once: the part holding the lowest bit
            std::uint32_t low = s & (~s + 1);
            std::uint32_t rest = s ^ low;
            for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
                std::uint32_t a = sub | low, b = s ^ a;
                if (b) {
                    int w = std::max({cut[a], cut[b], solve(a), solve(b)});
                    best = std::min(best, w);
                }
                if (sub == 0)
                    break;
            }
            return f[s] = best;
        };
        // solve(S) covers the cuts strictly below S; the root's own cut is empty
        int best = 1 << 20;
        std::uint32_t rest = full ^ 1;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            std::uint32_t a = sub | 1, b = full ^ a;
            if (b)
                best = std::min(best, std::max({cut[a], solve(a), solve(b)}));
            if (sub == 0)
                break;
        }
        return best;
    }

    /// Treewidth as the minimum over all elimination orders.
    inline auto treewidth(const Graph & g) -> int
    {
        const int n = g.order();
        if (n == 0)
            return -1;
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        int best = n;
        do {
            std::vector<std::set<Vertex>> adj(n);
            for (auto [u, v] : g.edges()) {
                adj[u].insert(v);
                adj[v].insert(u);
            }
            int width = 0;
            for (auto v : order) {
                width = std::max(width, static_cast<int>(adj[v].size()));
                for (auto a : adj[v])
                    for (auto b : adj[v])
                        if (a != b)
                            adj[a].insert(b);
                for (auto a : adj[v])
                    adj[a].erase(v);
                adj[v].clear();
            }
            best = std::min(best, width);
        } while (std::next_permutation(order.begin(), order.end()));
        return best;
    }

    /// Every cycle of length >= 3 as a vertex sequence, once per cycle.
    inline auto cycles(const Graph & g) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> out;
        const int n = g.order();
        std::vector<Vertex> path;
        std::vector<char> used(n, 0);
        std::function<void(Vertex)> extend = [&](Vertex v) {
            for (auto w : g.neighbours(v)) {
                if (w == path[0] && path.size() >= 3 && path[1] < path.back())
                    out.push_back(path);
                if (w > path[0] && ! used[w]) {
                    used[w] = 1;
                    path.push_back(w);
                    extend(w);
                    path.pop_back();
                    used[w] = 0;
                }
            }
        };
        for (Vertex s = 0; s < n; ++s) {
            path = {s};
            used[s] = 1;
            extend(s);
            used[s] = 0;
        }
        return out;
    }

    inline auto has_chord(const Graph & g, const std::vector<Vertex> & c, bool odd_only) -> bool
    {
        const int k = static_cast<int>(c.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 2; j < k; ++j) {
                if (i == 0 && j == k - 1)
                    continue;
                if (g.adjacent(c[i], c[j]) && (! odd_only || (j - i) % 2 == 1))
                    return true;
            }
        return false;
    }

    inline auto chordal(const Graph & g) -> bool
    {
        for (auto & c : cycles(g))
            if (c.size() >= 4 && ! has_chord(g, c, false))
                return false;
        return true;
    }

    inline auto strongly_chordal(const Graph & g) -> bool
    {
        if (! chordal(g))
            return false;
        for (auto & c : cycles(g))
            if (c.size() >= 6 && c.size() % 2 == 0 && ! has_chord(g, c, true))
                return false;
        return true;
    }

    inline auto bipartite(const Graph & g) -> bool
    {
        for (auto & c : cycles(g))
            if (c.size() % 2 == 1)
                return false;
        return true;
    }

    inline auto chordal_bipartite(const Graph & g) -> bool
    {
        if (! bipartite(g))
            return false;
        for (auto & c : cycles(g))
            if (c.size() >= 6 && ! has_chord(g, c, false))
                return false;
        return true;
    }

    /// Some subset is a clique and its complement independent.
    inline auto split(const Graph & g) -> bool
    {
        const int n = g.order();
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
            bool ok = true;
            for (auto [u, v] : g.edges())
                if (! ((s >> u) & 1) && ! ((s >> v) & 1))
                    ok = false;
            for (Vertex u = 0; u < n && ok; ++u)
                for (Vertex v = u + 1; v < n && ok; ++v)
                    if (((s >> u) & 1) && ((s >> v) & 1) && ! g.adjacent(u, v))
                        ok = false;
            if (ok)
                return true;
        }
        return false;
    }

    /// Tries all 2^m orientations.
    inline auto comparability(const Graph & g) -> bool
    {
        const int m = static_cast<int>(g.size());
        const int n = g.order();
        auto edges = g.edges();
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
            std::vector<std::vector<char>> arc(n, std::vector<char>(n, 0));
            for (int i = 0; i < m; ++i) {
                auto [u, v] = edges[i];
                ((s >> i) & 1) ? arc[u][v] = 1 : arc[v][u] = 1;
            }
            bool ok = true;
            for (Vertex a = 0; a < n && ok; ++a)
                for (Vertex b = 0; b < n && ok; ++b)
                    if (arc[a][b])
                        for (Vertex c = 0; c < n && ok; ++c)
                            if (arc[b][c] && ! arc[a][c])
                                ok = false;
            if (ok)
                return true;
        }
        return false;
    }

    /// Every labelled graph on n vertices.
    inline auto all_graphs(int n) -> std::vector<Graph>
    {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);
        std::vector<Graph> out;
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << pairs.size()); ++s) {
            std::vector<Edge> e;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((s >> i) & 1)
                    e.emplace_back(pairs[i].first, pairs[i].second);
            out.emplace_back(n, std::move(e));
        }
        return out;
    }

    inline auto random_graph(int n, double p, std::uint64_t seed) -> Graph
    {
        std::uint64_t x = seed * 0x9E3779B97F4A7C15ull + 1;
        auto next = [&] {
            // splitmix64
            std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
            return z ^ (z >> 31);
        };
        std::vector<Edge> e;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (static_cast<double>(next() >> 11) * 0x1.0p-53 < p)
                    e.emplace_back(u, v);
        return Graph(n, std::move(e));
    }
}
