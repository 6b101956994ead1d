#include <mimlab/error.hpp>
#include <mimlab/width.hpp>

#include <algorithm>
#include <bit>
#include <set>
#include <climits>

namespace mimlab
{
    namespace
    {
        using Mask = std::uint32_t;

        // |Q(s, v)|: vertices outside s + v reachable from v through s
        auto q_size(const std::vector<Mask> & adj, Mask s, int v) -> int
        {
            Mask component = Mask{1} << v;
            Mask frontier = component;
            Mask reach = 0;
            while (frontier) {
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1)
                    next |= adj[std::countr_zero(f)];
                reach |= next;
                frontier = next & s & ~component;
                component |= frontier;
            }
            return std::popcount(reach & ~s & ~(Mask{1} << v));
        }

        auto relax(const std::vector<Mask> & adj, std::vector<std::int8_t> & tw, Mask s) -> void
        {
            int best = INT_MAX;
            for (Mask rest = s; rest; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                Mask without = s & ~(Mask{1} << v);
                best = std::min(best, std::max(static_cast<int>(tw[without]), q_size(adj, without, v)));
            }
            tw[s] = static_cast<std::int8_t>(best);
        }
    }

    auto treewidth_exact(const Graph & g, int limit, Execution exec) -> TreewidthReport
    {
        const int n = g.order();
        if (n > limit)
            throw LimitExceeded("treewidth limit is " + std::to_string(limit) + " vertices, graph has " + std::to_string(n));
        if (n > 26)
            throw LimitExceeded("treewidth DP supports at most 26 vertices");

        TreewidthReport report;
        if (n == 0)
            return report;

        std::vector<Mask> adj(n, 0);
        for (auto [u, v] : g.edges()) {
            adj[u] |= Mask{1} << v;
            adj[v] |= Mask{1} << u;
        }

        const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
        // tw[empty] acts as -infinity
        std::vector<std::int8_t> tw(std::size_t{full} + 1, -1);

        if (exec == Execution::parallel) {
            // subsets of equal size only depend on smaller ones
            std::vector<std::vector<Mask>> layers(n + 1);
            for (Mask s = 1; s <= full && s != 0; ++s)
                layers[std::popcount(s)].push_back(s);
            for (int size = 1; size <= n; ++size) {
                auto & layer = layers[size];
                const auto count = static_cast<std::int64_t>(layer.size());
#pragma omp parallel for schedule(static)
                for (std::int64_t i = 0; i < count; ++i)
                    relax(adj, tw, layer[i]);
            }
        }
        else
            for (Mask s = 1; s <= full && s != 0; ++s)
                relax(adj, tw, s);

        report.value = std::max(0, static_cast<int>(tw[full]));

        // the vertex chosen last for s is eliminated last among s
        std::vector<Vertex> reversed;
        for (Mask s = full; s;) {
            for (Mask rest = s; rest; rest &= rest - 1) {
                int v = std::countr_zero(rest);
                Mask without = s & ~(Mask{1} << v);
                if (std::max(static_cast<int>(tw[without]), q_size(adj, without, v)) == tw[s]) {
                    reversed.push_back(v);
                    s = without;
                    break;
                }
            }
        }
        report.elimination_order.assign(reversed.rbegin(), reversed.rend());
        return report;
    }

    auto elimination_width(const Graph & g, std::span<const Vertex> order) -> int
    {
        const int n = g.order();
        std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
        for (auto [u, v] : g.edges())
            adj[u][v] = adj[v][u] = 1;
        std::vector<char> gone(n, 0);
        int width = 0;
        for (auto v : order) {
            std::vector<Vertex> later;
            for (Vertex w = 0; w < n; ++w)
                if (! gone[w] && w != v && adj[v][w])
                    later.push_back(w);
            width = std::max(width, static_cast<int>(later.size()));
            for (auto a : later)
                for (auto b : later)
                    if (a != b)
                        adj[a][b] = 1;
            gone[v] = 1;
        }
        return width;
    }

    auto treewidth_lower_mmw(const Graph & g) -> int
    {
        const int n = g.order();
        std::vector<std::set<Vertex>> adj(n);
        for (auto [u, v] : g.edges()) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        std::vector<char> alive(n, 1);
        int best = 0;
        for (int remaining = n; remaining > 1; --remaining) {
            Vertex v = -1;
            for (Vertex w = 0; w < n; ++w)
                if (alive[w] && (v < 0 || adj[w].size() < adj[v].size()))
                    v = w;
            best = std::max(best, static_cast<int>(adj[v].size()));
            alive[v] = 0;
            if (adj[v].empty())
                continue;
            Vertex into = *std::ranges::min_element(adj[v], {}, [&](Vertex w) { return std::pair(adj[w].size(), w); });
            for (auto w : adj[v]) {
                adj[w].erase(v);
                if (w != into) {
                    adj[w].insert(into);
                    adj[into].insert(w);
                }
            }
            adj[v].clear();
        }
        return best;
    }
}
