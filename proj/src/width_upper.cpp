#include <mimlab/error.hpp>
#include <mimlab/random.hpp>
#include <mimlab/width.hpp>

#include <numeric>
#include <unordered_map>

namespace mimlab
{
    namespace
    {
        class CutCache
        {
        public:
            explicit CutCache(const Graph & g) : _g(g) {}

            auto value(const std::vector<char> & in_a) -> int
            {
                std::string key(in_a.begin(), in_a.end());
                if (auto it = _memo.find(key); it != _memo.end())
                    return it->second;
                int v = max_induced_matching_cut(_g, in_a).size();
                _memo.emplace(std::move(key), v);
                return v;
            }

        private:
            const Graph & _g;
            std::unordered_map<std::string, int> _memo;
        };

        // (width, number of cuts attaining it); smaller is better
        using Score = std::pair<int, int>;

        class Caterpillar
        {
        public:
            Caterpillar(const Graph & g, CutCache & cache, std::vector<Vertex> order) :
                _g(&g),
                _cache(&cache),
                _order(std::move(order)),
                _prefix(_order.size() + 1, 0)
            {
                std::vector<char> in_a(_g->order(), 0);
                for (std::size_t len = 1; len < _order.size(); ++len) {
                    in_a[_order[len - 1]] = 1;
                    if (len >= 2)
                        _prefix[len] = _cache->value(in_a);
                }
                for (Vertex v = 0; v < _g->order(); ++v)
                    _singletons.push_back(_g->degree(v) > 0 ? 1 : 0);
            }

            auto order() const -> const std::vector<Vertex> & { return _order; }

            auto score() const -> Score
            {
                Score s{0, 0};
                auto add = [&](int value) {
                    if (value > s.first)
                        s = {value, 1};
                    else if (value == s.first)
                        ++s.second;
                };
                for (auto v : _singletons)
                    add(v);
                for (std::size_t len = 2; len < _order.size(); ++len)
                    add(_prefix[len]);
                return s;
            }

            /// Exchanges positions i and i + 1 (i >= 1); only the spine node
            /// holding the first i + 1 leaves changes.
            auto swap_adjacent(std::size_t i) -> void
            {
                std::swap(_order[i], _order[i + 1]);
                std::vector<char> in_a(_g->order(), 0);
                for (std::size_t p = 0; p <= i; ++p)
                    in_a[_order[p]] = 1;
                _prefix[i + 1] = _cache->value(in_a);
            }

        private:
            const Graph * _g;
            CutCache * _cache;
            std::vector<Vertex> _order;
            std::vector<int> _prefix;
            std::vector<int> _singletons;
        };
    }

    auto mimw_upper(const Graph & g, UpperStrategy strategy, std::uint64_t seed) -> WidthReport
    {
        const int n = g.order();
        if (n <= 1)
            return mimw_exact(g, 1, Execution::serial);
        if (strategy.orders < 0)
            throw InvalidParameter("number of random orders must be non-negative");

        CutCache cache(g);
        Rng rng(seed);
        std::vector<Vertex> identity(n);
        std::iota(identity.begin(), identity.end(), 0);

        Caterpillar best(g, cache, identity);
        auto best_score = best.score();
        for (int i = 0; i < strategy.orders; ++i) {
            auto order = identity;
            rng.shuffle(std::span{order});
            Caterpillar candidate(g, cache, std::move(order));
            if (auto s = candidate.score(); s < best_score) {
                best = std::move(candidate);
                best_score = s;
            }
        }

        if (strategy.kind == UpperStrategy::Kind::local_search) {
            for (bool improved = true; improved;) {
                improved = false;
                for (std::size_t i = 1; i + 1 < static_cast<std::size_t>(n); ++i) {
                    best.swap_adjacent(i);
                    if (auto s = best.score(); s < best_score) {
                        best_score = s;
                        improved = true;
                    }
                    else
                        best.swap_adjacent(i);
                }
            }
        }

        auto report = evaluate_decomposition(g, caterpillar_from_order(best.order()));
        if (report.value != best_score.first)
            throw Error("internal error: caterpillar score and evaluation disagree");
        return report;
    }
}
