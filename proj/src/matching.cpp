#include <mimlab/error.hpp>
#include <mimlab/matching.hpp>

#include <boost/dynamic_bitset.hpp>

#include <algorithm>

namespace mimlab
{
    namespace
    {
        using Bits = boost::dynamic_bitset<std::uint64_t>;

        class IndependentSetSearch
        {
        public:
            explicit IndependentSetSearch(std::vector<Bits> adj) : _adj(std::move(adj)), _n(_adj.size()) {}

            auto run() -> std::vector<std::size_t>
            {
                Bits all(_n);
                all.set();
                _best = greedy(all);
                std::vector<std::size_t> current;
                search(all, current);
                std::ranges::sort(_best);
                return _best;
            }

        private:
            std::vector<Bits> _adj;
            std::size_t _n;
            std::vector<std::size_t> _best;

            auto degree_in(std::size_t v, const Bits & p) const -> std::size_t { return (_adj[v] & p).count(); }

            auto greedy(Bits p) const -> std::vector<std::size_t>
            {
                std::vector<std::size_t> chosen;
                while (p.any()) {
                    auto pick = p.find_first();
                    auto pick_deg = degree_in(pick, p);
                    for (auto v = p.find_next(pick); v != Bits::npos; v = p.find_next(v))
                        if (auto d = degree_in(v, p); d < pick_deg) {
                            pick = v;
                            pick_deg = d;
                        }
                    chosen.push_back(pick);
                    p -= _adj[pick];
                    p.reset(pick);
                }
                return chosen;
            }

            // number of cliques in a greedy clique cover of p
            auto clique_cover_bound(Bits p) const -> std::size_t
            {
                std::size_t cliques = 0;
                while (p.any()) {
                    auto v = p.find_first();
                    Bits clique(_n);
                    clique.set(v);
                    Bits candidates = p & _adj[v];
                    while (candidates.any()) {
                        auto u = candidates.find_first();
                        clique.set(u);
                        candidates &= _adj[u];
                    }
                    p -= clique;
                    ++cliques;
                }
                return cliques;
            }

            auto search(Bits p, std::vector<std::size_t> & current) -> void
            {
                // vertices of degree <= 1 in p can always be taken
                std::size_t forced = 0;
                for (bool changed = true; changed;) {
                    changed = false;
                    for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v))
                        if (degree_in(v, p) <= 1) {
                            current.push_back(v);
                            ++forced;
                            p -= _adj[v];
                            p.reset(v);
                            changed = true;
                            break;
                        }
                }

                if (p.none()) {
                    if (current.size() > _best.size())
                        _best = current;
                }
                else if (current.size() + p.count() > _best.size() && current.size() + clique_cover_bound(p) > _best.size()) {
                    auto pivot = p.find_first();
                    auto pivot_deg = degree_in(pivot, p);
                    for (auto v = p.find_next(pivot); v != Bits::npos; v = p.find_next(v))
                        if (auto d = degree_in(v, p); d > pivot_deg) {
                            pivot = v;
                            pivot_deg = d;
                        }

                    Bits with = p - _adj[pivot];
                    with.reset(pivot);
                    current.push_back(pivot);
                    search(with, current);
                    current.pop_back();

                    Bits without = p;
                    without.reset(pivot);
                    search(without, current);
                }

                current.resize(current.size() - forced);
            }
        };
    }

    auto max_induced_matching_cut(const Graph & g, const std::vector<char> & in_a) -> InducedMatching
    {
        InducedMatching result;
        for (Vertex v = 0; v < g.order(); ++v)
            if (in_a[v])
                result.a_side.push_back(v);

        // cut edges oriented (A endpoint, Ā endpoint)
        std::vector<std::pair<Vertex, Vertex>> cut;
        for (auto [u, v] : g.edges())
            if (in_a[u] != in_a[v])
                cut.emplace_back(in_a[u] ? u : v, in_a[u] ? v : u);
        if (cut.empty())
            return result;

        const auto m = cut.size();
        std::vector<Bits> conflict(m, Bits(m));
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                auto [a, b] = cut[i];
                auto [c, d] = cut[j];
                if (a == c || b == d || g.adjacent(a, d) || g.adjacent(c, b)) {
                    conflict[i].set(j);
                    conflict[j].set(i);
                }
            }

        IndependentSetSearch search(std::move(conflict));
        for (auto i : search.run())
            result.edges.emplace_back(cut[i].first, cut[i].second);
        std::ranges::sort(result.edges);
        return result;
    }

    auto max_induced_matching_cut(const Graph & g, std::span<const Vertex> a_side) -> InducedMatching
    {
        std::vector<char> in_a(g.order(), 0);
        for (auto v : a_side) {
            if (v < 0 || v >= g.order())
                throw InvalidParameter("cut vertex out of range: " + std::to_string(v));
            in_a[v] = 1;
        }
        return max_induced_matching_cut(g, in_a);
    }

    auto is_induced_matching_of_cut(const Graph & g, std::span<const Vertex> a_side, std::span<const Edge> edges) -> bool
    {
        std::vector<char> in_a(g.order(), 0);
        for (auto v : a_side)
            in_a[v] = 1;
        std::vector<char> used(g.order(), 0);
        for (auto e : edges) {
            if (! g.adjacent(e.u, e.v) || in_a[e.u] == in_a[e.v])
                return false;
            if (used[e.u]++ || used[e.v]++)
                return false;
        }
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = 0; j < edges.size(); ++j) {
                if (i == j)
                    continue;
                for (auto p : {edges[i].u, edges[i].v})
                    for (auto q : {edges[j].u, edges[j].v})
                        if (in_a[p] != in_a[q] && g.adjacent(p, q))
                            return false;
            }
        return true;
    }

    auto cut_value_table(const Graph & g, Execution exec) -> std::vector<std::uint8_t>
    {
        const int n = g.order();
        if (n > 24)
            throw LimitExceeded("cut table needs n <= 24");
        const std::int64_t count = std::int64_t{1} << n;
        std::vector<std::uint8_t> table(count, 0);

        auto fill = [&](std::int64_t mask) {
            // a cut and its complement share a value; compute the one with bit 0 clear
            if (mask & 1)
                return;
            std::vector<char> in_a(n);
            for (int v = 0; v < n; ++v)
                in_a[v] = (mask >> v) & 1;
            auto value = static_cast<std::uint8_t>(max_induced_matching_cut(g, in_a).size());
            table[mask] = value;
            table[(count - 1) ^ mask] = value;
        };

        if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
            for (std::int64_t mask = 0; mask < count; ++mask)
                fill(mask);
        }
        else
            for (std::int64_t mask = 0; mask < count; ++mask)
                fill(mask);
        return table;
    }
}
