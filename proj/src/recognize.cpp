#include <mimlab/error.hpp>
#include <mimlab/recognize.hpp>

#include <algorithm>
#include <queue>

namespace mimlab
{
    namespace
    {
        auto check_limit(const Graph & g, int limit, const char * what) -> void
        {
            if (g.order() > limit)
                throw LimitExceeded(std::string(what) + " limit is " + std::to_string(limit) + " vertices, graph has " + std::to_string(g.order()));
        }

        /// First chordless cycle of length >= 4 over (v, u, w) with u, w
        /// non-adjacent neighbours of v: a shortest u-w path avoiding the rest
        /// of N[v] closes one.
        auto find_chordless_cycle(const Graph & g) -> std::optional<std::vector<Vertex>>
        {
            const int n = g.order();
            for (Vertex v = 0; v < n; ++v) {
                auto nb = g.neighbours(v);
                for (std::size_t i = 0; i < nb.size(); ++i)
                    for (std::size_t j = i + 1; j < nb.size(); ++j) {
                        auto u = nb[i], w = nb[j];
                        if (g.adjacent(u, w))
                            continue;
                        std::vector<char> blocked(n, 0);
                        blocked[v] = 1;
                        for (auto x : nb)
                            if (x != u && x != w)
                                blocked[x] = 1;
                        std::vector<Vertex> parent(n, -1);
                        std::queue<Vertex> todo;
                        todo.push(u);
                        blocked[u] = 1;
                        while (! todo.empty() && parent[w] == -1) {
                            auto x = todo.front();
                            todo.pop();
                            for (auto y : g.neighbours(x))
                                if (! blocked[y]) {
                                    blocked[y] = 1;
                                    parent[y] = x;
                                    todo.push(y);
                                }
                        }
                        if (parent[w] == -1)
                            continue;
                        std::vector<Vertex> cyc{v};
                        std::vector<Vertex> back;
                        for (auto x = w; x != -1; x = parent[x])
                            back.push_back(x);
                        cyc.insert(cyc.end(), back.rbegin(), back.rend());
                        return cyc;
                    }
            }
            return std::nullopt;
        }

        /// Smallest cycle by (length, sequence) with length >= 6 that is
        /// either chordless or even without an odd chord. Cycles are written
        /// from their smallest vertex, second vertex smaller than the last.
        class CycleSearch
        {
        public:
            CycleSearch(const Graph & g, CycleDefect kind) : _g(g), _kind(kind), _pos(g.order(), -1) {}

            auto run() -> std::optional<std::vector<Vertex>>
            {
                for (Vertex s = 0; s < _g.order(); ++s) {
                    _path = {s};
                    _pos[s] = 0;
                    extend();
                    _pos[s] = -1;
                }
                return _best;
            }

        private:
            const Graph & _g;
            CycleDefect _kind;
            std::vector<int> _pos;
            std::vector<Vertex> _path;
            std::optional<std::vector<Vertex>> _best;

            auto better(const std::vector<Vertex> & c) const -> bool
            {
                return ! _best || c.size() < _best->size() || (c.size() == _best->size() && c < *_best);
            }

            auto extend() -> void
            {
                const Vertex s = _path.front();
                const int k = static_cast<int>(_path.size());
                if (_best && static_cast<std::size_t>(k + 1) > _best->size())
                    return;
                for (auto w : _g.neighbours(_path.back())) {
                    if (w <= s || _pos[w] != -1)
                        continue;
                    // w would sit at index k; look for chords back into the path
                    bool blocked = false, closes = false;
                    for (auto x : _g.neighbours(w)) {
                        int i = _pos[x];
                        if (i < 0 || i == k - 1)
                            continue;
                        int distance = k - i;
                        if (i == 0) {
                            if (_kind == CycleDefect::chordless) {
                                closes = true;
                                blocked = true;
                            }
                            else if (distance % 2 == 1) {
                                closes = distance >= 3;
                                blocked = true;
                            }
                        }
                        else if (_kind == CycleDefect::chordless || distance % 2 == 1)
                            blocked = true;
                    }
                    if (closes && ! anything_else_blocks(w, k) && k + 1 >= 6 && _path[1] < w) {
                        auto c = _path;
                        c.push_back(w);
                        if (better(c))
                            _best = std::move(c);
                    }
                    if (blocked)
                        continue;
                    _pos[w] = k;
                    _path.push_back(w);
                    extend();
                    _path.pop_back();
                    _pos[w] = -1;
                }
            }

            // a chord from w to an interior path vertex that disqualifies the
            // closed cycle
            auto anything_else_blocks(Vertex w, int k) const -> bool
            {
                for (auto x : _g.neighbours(w)) {
                    int i = _pos[x];
                    if (i <= 0 || i == k - 1)
                        continue;
                    if (_kind == CycleDefect::chordless || (k - i) % 2 == 1)
                        return true;
                }
                return false;
            }
        };

        using Arcs = std::vector<std::vector<std::int8_t>>;

        class OrientationSearch
        {
        public:
            explicit OrientationSearch(const Graph & g) : _g(g) {}

            auto run() -> std::optional<Arcs>
            {
                Arcs dir(_g.order(), std::vector<std::int8_t>(_g.order(), 0));
                return solve(std::move(dir));
            }

        private:
            const Graph & _g;

            // dir[a][b] = 1 means a->b, -1 means b->a
            auto force(Arcs & dir, Vertex a, Vertex b, std::vector<std::pair<Vertex, Vertex>> & todo) const -> bool
            {
                if (dir[a][b] == 1)
                    return true;
                if (dir[a][b] == -1)
                    return false;
                dir[a][b] = 1;
                dir[b][a] = -1;
                todo.emplace_back(a, b);
                return true;
            }

            auto propagate(Arcs & dir, Vertex a, Vertex b) const -> bool
            {
                std::vector<std::pair<Vertex, Vertex>> todo;
                if (! force(dir, a, b, todo))
                    return false;
                while (! todo.empty()) {
                    auto [p, q] = todo.back();
                    todo.pop_back();
                    for (auto r : _g.neighbours(p))
                        if (r != q && ! _g.adjacent(r, q) && ! force(dir, p, r, todo))
                            return false;
                    for (auto r : _g.neighbours(q))
                        if (r != p && ! _g.adjacent(r, p) && ! force(dir, r, q, todo))
                            return false;
                    for (auto r : _g.neighbours(q))
                        if (r != p && dir[q][r] == 1 && ! force(dir, p, r, todo))
                            return false;
                    for (auto r : _g.neighbours(p))
                        if (r != q && dir[r][p] == 1 && ! force(dir, r, q, todo))
                            return false;
                }
                return true;
            }

            auto solve(Arcs dir) const -> std::optional<Arcs>
            {
                for (auto [u, v] : _g.edges()) {
                    if (dir[u][v] != 0)
                        continue;
                    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
                        auto attempt = dir;
                        if (propagate(attempt, a, b))
                            if (auto done = solve(std::move(attempt)))
                                return done;
                    }
                    return std::nullopt;
                }
                return dir;
            }
        };

        auto comparability_of(const Graph & g) -> RecognitionResult
        {
            auto dir = OrientationSearch(g).run();
            if (! dir)
                return {false, NoCertificate{}};
            Orientation o;
            for (auto [u, v] : g.edges())
                o.arcs.push_back((*dir)[u][v] == 1 ? std::pair{u, v} : std::pair{v, u});
            return {true, std::move(o)};
        }

        auto find_split_obstruction(const Graph & g) -> std::optional<ForbiddenSubgraph>
        {
            const int n = g.order();
            auto edges_among = [&](const std::vector<Vertex> & s) {
                int count = 0;
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        count += g.adjacent(s[i], s[j]);
                return count;
            };
            auto degrees_within = [&](const std::vector<Vertex> & s) {
                std::vector<int> d;
                for (auto a : s) {
                    int c = 0;
                    for (auto b : s)
                        c += a != b && g.adjacent(a, b);
                    d.push_back(c);
                }
                return d;
            };
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d) {
                            std::vector<Vertex> s{a, b, c, d};
                            auto deg = degrees_within(s);
                            int m = edges_among(s);
                            bool regular = std::ranges::all_of(deg, [&](int x) { return x == deg[0]; });
                            if (m == 2 && regular)
                                return ForbiddenSubgraph{s, "2K2"};
                            if (m == 4 && regular)
                                return ForbiddenSubgraph{s, "C4"};
                        }
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c)
                        for (int d = c + 1; d < n; ++d)
                            for (int e = d + 1; e < n; ++e) {
                                std::vector<Vertex> s{a, b, c, d, e};
                                auto deg = degrees_within(s);
                                if (std::ranges::all_of(deg, [](int x) { return x == 2; }) && edges_among(s) == 5) {
                                    // 2-regular on 5 vertices with 5 edges is C5 (C3 + K2 has 4 edges)
                                    return ForbiddenSubgraph{s, "C5"};
                                }
                            }
            return std::nullopt;
        }

        auto list(const std::vector<Vertex> & vs) -> std::string
        {
            std::string out;
            for (auto v : vs)
                out += " " + std::to_string(v);
            return out;
        }

        auto to_string(CycleDefect d) -> std::string
        {
            switch (d) {
            case CycleDefect::odd: return "odd";
            case CycleDefect::chordless: return "chordless";
            case CycleDefect::no_odd_chord: return "no-odd-chord";
            }
            return "?";
        }
    }

    auto to_string(GraphClass c) -> std::string
    {
        switch (c) {
        case GraphClass::bipartite: return "bipartite";
        case GraphClass::split: return "split";
        case GraphClass::chordal: return "chordal";
        case GraphClass::strongly_chordal: return "strongly-chordal";
        case GraphClass::chordal_bipartite: return "chordal-bipartite";
        case GraphClass::comparability: return "comparability";
        case GraphClass::co_comparability: return "co-comparability";
        }
        return "?";
    }

    auto parse_graph_class(const std::string & name) -> std::optional<GraphClass>
    {
        for (auto c : {GraphClass::bipartite, GraphClass::split, GraphClass::chordal, GraphClass::strongly_chordal,
                 GraphClass::chordal_bipartite, GraphClass::comparability, GraphClass::co_comparability}) {
            auto canonical = to_string(c);
            auto underscored = canonical;
            std::ranges::replace(underscored, '-', '_');
            if (name == canonical || name == underscored)
                return c;
        }
        if (name == "cocomp")
            return GraphClass::co_comparability;
        return std::nullopt;
    }

    auto is_bipartite(const Graph & g) -> RecognitionResult
    {
        auto coloured = two_color(g);
        if (auto b = std::get_if<BipartiteGraph>(&coloured))
            return {true, TwoColoring{{b->x_class().begin(), b->x_class().end()}}};
        return {false, ViolatingCycle{std::get<OddCycle>(coloured).cycle, CycleDefect::odd}};
    }

    auto is_split(const Graph & g) -> RecognitionResult
    {
        const int n = g.order();
        std::vector<Vertex> by_degree(n);
        for (Vertex v = 0; v < n; ++v)
            by_degree[v] = v;
        std::ranges::stable_sort(by_degree, [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

        int m = 0;
        for (int i = 1; i <= n; ++i)
            if (g.degree(by_degree[i - 1]) >= i - 1)
                m = i;
        long long head = 0, tail = 0;
        for (int i = 0; i < n; ++i)
            (i < m ? head : tail) += g.degree(by_degree[i]);

        if (head == static_cast<long long>(m) * (m - 1) + tail) {
            CliquePartition p;
            p.clique.assign(by_degree.begin(), by_degree.begin() + m);
            p.independent.assign(by_degree.begin() + m, by_degree.end());
            std::ranges::sort(p.clique);
            std::ranges::sort(p.independent);
            bool clique_ok = true, independent_ok = true;
            for (std::size_t i = 0; i < p.clique.size(); ++i)
                for (std::size_t j = i + 1; j < p.clique.size(); ++j)
                    clique_ok = clique_ok && g.adjacent(p.clique[i], p.clique[j]);
            for (std::size_t i = 0; i < p.independent.size(); ++i)
                for (std::size_t j = i + 1; j < p.independent.size(); ++j)
                    independent_ok = independent_ok && ! g.adjacent(p.independent[i], p.independent[j]);
            if (! clique_ok || ! independent_ok)
                throw Error("internal error: degree criterion accepted a non-split partition");
            return {true, std::move(p)};
        }

        if (n <= 64)
            if (auto f = find_split_obstruction(g))
                return {false, std::move(*f)};
        return {false, NoCertificate{}};
    }

    auto is_chordal(const Graph & g) -> RecognitionResult
    {
        const int n = g.order();
        // maximum cardinality search; the visit order reversed is a PEO iff chordal
        std::vector<int> weight(n, 0);
        std::vector<char> visited(n, 0);
        std::vector<Vertex> visit;
        for (int step = 0; step < n; ++step) {
            Vertex pick = -1;
            for (Vertex v = 0; v < n; ++v)
                if (! visited[v] && (pick == -1 || weight[v] > weight[pick]))
                    pick = v;
            visited[pick] = 1;
            visit.push_back(pick);
            for (auto w : g.neighbours(pick))
                if (! visited[w])
                    ++weight[w];
        }
        std::vector<Vertex> peo(visit.rbegin(), visit.rend());
        std::vector<int> position(n);
        for (int i = 0; i < n; ++i)
            position[peo[i]] = i;

        bool ok = true;
        for (auto v : peo) {
            Vertex parent = -1;
            for (auto w : g.neighbours(v))
                if (position[w] > position[v] && (parent == -1 || position[w] < position[parent]))
                    parent = w;
            if (parent == -1)
                continue;
            for (auto w : g.neighbours(v))
                if (position[w] > position[v] && w != parent && ! g.adjacent(parent, w))
                    ok = false;
        }
        if (ok)
            return {true, EliminationOrder{std::move(peo)}};

        auto cyc = find_chordless_cycle(g);
        if (! cyc)
            throw Error("internal error: elimination check failed but no chordless cycle exists");
        return {false, ViolatingCycle{std::move(*cyc), CycleDefect::chordless}};
    }

    auto is_strongly_chordal(const Graph & g, int cycle_limit) -> RecognitionResult
    {
        check_limit(g, cycle_limit, "cycle enumeration");
        auto chordal = is_chordal(g);
        if (! chordal.verdict)
            return chordal;
        if (auto c = CycleSearch(g, CycleDefect::no_odd_chord).run())
            return {false, ViolatingCycle{std::move(*c), CycleDefect::no_odd_chord}};
        return chordal;
    }

    auto is_chordal_bipartite(const Graph & g, int cycle_limit) -> RecognitionResult
    {
        check_limit(g, cycle_limit, "cycle enumeration");
        auto bip = is_bipartite(g);
        if (! bip.verdict)
            return bip;
        if (auto c = CycleSearch(g, CycleDefect::chordless).run())
            return {false, ViolatingCycle{std::move(*c), CycleDefect::chordless}};
        return bip;
    }

    auto is_comparability(const Graph & g, int limit) -> RecognitionResult
    {
        check_limit(g, limit, "orientation search");
        return comparability_of(g);
    }

    auto is_co_comparability(const Graph & g, int limit) -> RecognitionResult
    {
        check_limit(g, limit, "orientation search");
        return comparability_of(complement(g));
    }

    auto recognize(GraphClass c, const Graph & g, const Limits & limits) -> RecognitionResult
    {
        switch (c) {
        case GraphClass::bipartite: return is_bipartite(g);
        case GraphClass::split: return is_split(g);
        case GraphClass::chordal: return is_chordal(g);
        case GraphClass::strongly_chordal: return is_strongly_chordal(g, limits.cycle);
        case GraphClass::chordal_bipartite: return is_chordal_bipartite(g, limits.cycle);
        case GraphClass::comparability: return is_comparability(g, limits.cycle);
        case GraphClass::co_comparability: return is_co_comparability(g, limits.cycle);
        }
        throw InvalidParameter("unknown graph class");
    }

    namespace
    {
        auto is_permutation_of_vertices(const Graph & g, const std::vector<Vertex> & vs) -> bool
        {
            if (static_cast<int>(vs.size()) != g.order())
                return false;
            std::vector<char> seen(g.order(), 0);
            for (auto v : vs)
                if (v < 0 || v >= g.order() || seen[v]++)
                    return false;
            return true;
        }

        auto check_peo(const Graph & g, const EliminationOrder & e) -> bool
        {
            if (! is_permutation_of_vertices(g, e.order))
                return false;
            for (std::size_t i = 0; i < e.order.size(); ++i)
                for (std::size_t j = i + 1; j < e.order.size(); ++j)
                    for (std::size_t k = j + 1; k < e.order.size(); ++k) {
                        auto v = e.order[i], a = e.order[j], b = e.order[k];
                        if (g.adjacent(v, a) && g.adjacent(v, b) && ! g.adjacent(a, b))
                            return false;
                    }
            return true;
        }

        auto check_two_coloring(const Graph & g, const TwoColoring & t) -> bool
        {
            std::vector<int> side(g.order(), 0);
            for (auto v : t.x_class) {
                if (v < 0 || v >= g.order() || side[v])
                    return false;
                side[v] = 1;
            }
            for (auto e : g.edges())
                if (side[e.u] == side[e.v])
                    return false;
            return true;
        }

        auto check_partition(const Graph & g, const CliquePartition & p) -> bool
        {
            std::vector<Vertex> all = p.clique;
            all.insert(all.end(), p.independent.begin(), p.independent.end());
            if (! is_permutation_of_vertices(g, all))
                return false;
            for (auto a : p.clique)
                for (auto b : p.clique)
                    if (a != b && ! g.adjacent(a, b))
                        return false;
            for (auto a : p.independent)
                for (auto b : p.independent)
                    if (g.adjacent(a, b))
                        return false;
            return true;
        }

        auto check_orientation(const Graph & g, const Orientation & o) -> bool
        {
            if (o.arcs.size() != g.size())
                return false;
            std::vector<std::vector<char>> arc(g.order(), std::vector<char>(g.order(), 0));
            for (auto [a, b] : o.arcs) {
                if (a < 0 || b < 0 || a >= g.order() || b >= g.order() || ! g.adjacent(a, b) || arc[a][b] || arc[b][a])
                    return false;
                arc[a][b] = 1;
            }
            for (auto [a, b] : o.arcs)
                for (Vertex c = 0; c < g.order(); ++c)
                    if (arc[b][c] && ! arc[a][c])
                        return false;
            return true;
        }

        auto check_cycle(const Graph & g, const ViolatingCycle & c) -> bool
        {
            const auto & cyc = c.cycle;
            const int len = static_cast<int>(cyc.size());
            if (len < 3)
                return false;
            std::vector<int> seen(g.order(), 0);
            for (auto v : cyc)
                if (v < 0 || v >= g.order() || seen[v]++)
                    return false;
            for (int i = 0; i < len; ++i)
                if (! g.adjacent(cyc[i], cyc[(i + 1) % len]))
                    return false;
            switch (c.defect) {
            case CycleDefect::odd:
                return len % 2 == 1;
            case CycleDefect::chordless:
                if (len < 4)
                    return false;
                for (int i = 0; i < len; ++i)
                    for (int j = i + 2; j < len; ++j)
                        if (! (i == 0 && j == len - 1) && g.adjacent(cyc[i], cyc[j]))
                            return false;
                return true;
            case CycleDefect::no_odd_chord:
                if (len < 6 || len % 2 != 0)
                    return false;
                for (int i = 0; i < len; ++i)
                    for (int j = i + 2; j < len; ++j)
                        if (! (i == 0 && j == len - 1) && g.adjacent(cyc[i], cyc[j]) && (j - i) % 2 == 1)
                            return false;
                return true;
            }
            return false;
        }

        auto check_forbidden(const Graph & g, const ForbiddenSubgraph & f) -> bool
        {
            auto sub = induced_subgraph(g, f.vertices);
            if (f.name == "2K2")
                return sub.order() == 4 && sub.size() == 2 && sub.max_degree() == 1;
            if (f.name == "C4")
                return sub.order() == 4 && sub.size() == 4 && sub.max_degree() == 2;
            if (f.name == "C5")
                return sub.order() == 5 && sub.size() == 5 && sub.max_degree() == 2;
            return false;
        }

        template <typename... F>
        struct Overloaded : F...
        {
            using F::operator()...;
        };
    }

    auto verify_certificate(GraphClass c, const Graph & g, const RecognitionResult & result) -> bool
    {
        return std::visit(Overloaded{
                              [&](const NoCertificate &) { return ! result.verdict; },
                              [&](const EliminationOrder & e) {
                                  return result.verdict && (c == GraphClass::chordal || c == GraphClass::strongly_chordal) && check_peo(g, e);
                              },
                              [&](const TwoColoring & t) {
                                  return result.verdict && (c == GraphClass::bipartite || c == GraphClass::chordal_bipartite) && check_two_coloring(g, t);
                              },
                              [&](const CliquePartition & p) { return result.verdict && c == GraphClass::split && check_partition(g, p); },
                              [&](const Orientation & o) {
                                  if (! result.verdict)
                                      return false;
                                  if (c == GraphClass::comparability)
                                      return check_orientation(g, o);
                                  return c == GraphClass::co_comparability && check_orientation(complement(g), o);
                              },
                              [&](const ViolatingCycle & v) { return ! result.verdict && check_cycle(g, v); },
                              [&](const ForbiddenSubgraph & f) { return ! result.verdict && c == GraphClass::split && check_forbidden(g, f); },
                          },
            result.certificate);
    }

    auto to_text(const RecognitionResult & result) -> std::string
    {
        std::string out = result.verdict ? "true\n" : "false\n";
        std::visit(Overloaded{
                       [&](const NoCertificate &) {},
                       [&](const EliminationOrder & e) { out += "peo" + list(e.order) + "\n"; },
                       [&](const TwoColoring & t) { out += "bip" + list(t.x_class) + "\n"; },
                       [&](const CliquePartition & p) { out += "clique" + list(p.clique) + "\nindependent" + list(p.independent) + "\n"; },
                       [&](const Orientation & o) {
                           out += "orientation";
                           for (auto [a, b] : o.arcs)
                               out += " " + std::to_string(a) + ">" + std::to_string(b);
                           out += "\n";
                       },
                       [&](const ViolatingCycle & v) { out += "cycle " + to_string(v.defect) + list(v.cycle) + "\n"; },
                       [&](const ForbiddenSubgraph & f) { out += "induced " + f.name + list(f.vertices) + "\n"; },
                   },
            result.certificate);
        return out;
    }
}
