#include <mimlab/error.hpp>
#include <mimlab/width.hpp>

#include "insertion_tree.hpp"

#include <atomic>
#include <bit>
#include <climits>
#include <numeric>

namespace mimlab
{
    namespace
    {
        // tables[k] holds the cut values of G[0..k-1]
        auto prefix_tables(const Graph & g, Execution exec) -> std::vector<std::vector<std::uint8_t>>
        {
            std::vector<std::vector<std::uint8_t>> tables(g.order() + 1);
            std::vector<Vertex> keep;
            for (int k = 1; k <= g.order(); ++k) {
                keep.push_back(k - 1);
                tables[k] = cut_value_table(induced_subgraph(g, keep), exec);
            }
            return tables;
        }

        // Every rooted binary tree has a node with n/3 < |A| <= 2n/3: walk
        // from the root into the larger child until at most 2n/3 leaves remain.
        auto balanced_cut_bound(const std::vector<std::uint8_t> & table, int n) -> int
        {
            int bound = INT_MAX;
            for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
                int size = std::popcount(mask);
                if (3 * size > n && 3 * size <= 2 * n)
                    bound = std::min(bound, static_cast<int>(table[mask]));
            }
            return bound == INT_MAX ? 0 : bound;
        }

        auto partial_width(const detail::InsertionTree & tree, const std::vector<std::uint8_t> & table) -> int
        {
            int width = 0;
            tree.for_each_mask([&](std::uint32_t mask) { width = std::max(width, static_cast<int>(table[mask])); });
            return width;
        }

        struct Found
        {
            int value = INT_MAX;
            std::vector<int> choices;
        };

        class Search
        {
        public:
            Search(const std::vector<std::vector<std::uint8_t>> & tables, int n, int lower_bound) :
                _tables(tables),
                _n(n),
                _lower_bound(lower_bound)
            {
            }

            std::atomic<int> * shared_best = nullptr;
            std::function<bool()> cancelled = [] { return false; };

            auto best() const -> const Found & { return _best; }

            /// Records the current tree if complete, otherwise descends.
            /// Returns false when the search should stop.
            auto visit(detail::InsertionTree & tree) -> bool
            {
                int width = partial_width(tree, _tables[tree.leaves()]);
                if (width >= _best.value || (shared_best && width > shared_best->load(std::memory_order_relaxed)))
                    return true;
                if (tree.leaves() == _n) {
                    _best = {width, _choices};
                    if (shared_best) {
                        int seen = shared_best->load(std::memory_order_relaxed);
                        while (width < seen && ! shared_best->compare_exchange_weak(seen, width, std::memory_order_relaxed))
                            ;
                    }
                    return width > _lower_bound;
                }
                if (cancelled())
                    return false;
                for (int c = 0, end = tree.choices(); c < end; ++c) {
                    tree.insert(c);
                    _choices.push_back(c);
                    bool go_on = visit(tree);
                    _choices.pop_back();
                    tree.undo();
                    if (! go_on)
                        return false;
                }
                return true;
            }

            auto push_prefix(int c) -> void { _choices.push_back(c); }

        private:
            const std::vector<std::vector<std::uint8_t>> & _tables;
            int _n;
            int _lower_bound;
            Found _best;
            std::vector<int> _choices;
        };

        auto search_serial(const std::vector<std::vector<std::uint8_t>> & tables, int n, int lower_bound) -> Found
        {
            detail::InsertionTree tree(n);
            Search search(tables, n, lower_bound);
            search.visit(tree);
            return search.best();
        }

        // Splits the insertion sequence after `depth` leaves; tasks are
        // numbered so that task order equals serial visiting order, and the
        // first task holding the minimum wins.
        auto search_parallel(const std::vector<std::vector<std::uint8_t>> & tables, int n, int lower_bound) -> Found
        {
            const int depth = std::min(n - 1, 4);
            std::vector<int> radix;
            std::int64_t tasks = 1;
            for (int k = 1; k <= depth; ++k) {
                radix.push_back(2 * k - 1);
                tasks *= 2 * k - 1;
            }

            std::vector<Found> results(tasks);
            std::atomic<int> shared_best{INT_MAX};
            std::atomic<std::int64_t> first_at_bound{tasks};

#pragma omp parallel for schedule(dynamic, 1)
            for (std::int64_t task = 0; task < tasks; ++task) {
                if (task > first_at_bound.load(std::memory_order_relaxed))
                    continue;

                std::vector<int> prefix(depth);
                for (std::int64_t rest = task, k = depth - 1; k >= 0; --k) {
                    prefix[k] = static_cast<int>(rest % radix[k]);
                    rest /= radix[k];
                }

                detail::InsertionTree tree(n);
                Search search(tables, n, lower_bound);
                search.shared_best = &shared_best;
                search.cancelled = [&, task] { return task > first_at_bound.load(std::memory_order_relaxed); };

                bool viable = true;
                for (int k = 0; k < depth - 1 && viable; ++k) {
                    tree.insert(prefix[k]);
                    search.push_prefix(prefix[k]);
                    viable = partial_width(tree, tables[tree.leaves()]) <= shared_best.load(std::memory_order_relaxed);
                }
                if (! viable)
                    continue;
                tree.insert(prefix[depth - 1]);
                search.push_prefix(prefix[depth - 1]);
                search.visit(tree);

                results[task] = search.best();
                if (results[task].value <= lower_bound) {
                    auto seen = first_at_bound.load(std::memory_order_relaxed);
                    while (task < seen && ! first_at_bound.compare_exchange_weak(seen, task, std::memory_order_relaxed))
                        ;
                }
            }

            Found best;
            for (auto & r : results)
                if (r.value < best.value)
                    best = std::move(r);
            return best;
        }
    }

    auto mimw_exact(const Graph & g, int limit, Execution exec) -> WidthReport
    {
        const int n = g.order();
        if (n > limit)
            throw LimitExceeded("exact mim-width limit is " + std::to_string(limit) + " vertices, graph has " + std::to_string(n));
        if (n > 24)
            throw LimitExceeded("exact mim-width supports at most 24 vertices");

        if (n <= 1) {
            WidthReport report;
            report.mode = WidthMode::exact;
            if (n == 1) {
                report.decomposition = caterpillar_from_order(std::vector<Vertex>{0});
                report.critical_cut = cut_of(g, std::vector<Vertex>{0});
                report.witness_matching.a_side = {0};
            }
            return report;
        }

        auto tables = prefix_tables(g, exec);
        int lower_bound = balanced_cut_bound(tables[n], n);
        auto found = exec == Execution::parallel ? search_parallel(tables, n, lower_bound) : search_serial(tables, n, lower_bound);

        auto report = evaluate_decomposition(g, decomposition_from_choices(n, found.choices));
        if (report.value != found.value)
            throw Error("internal error: enumeration and evaluation disagree on width");
        report.mode = WidthMode::exact;
        return report;
    }
}
