#include <mimlab/error.hpp>
#include <mimlab/generators.hpp>
#include <mimlab/random.hpp>

#include <algorithm>
#include <string>

namespace mimlab
{
    auto grid(int rows, int cols) -> Graph
    {
        if (rows < 1 || cols < 1)
            throw InvalidParameter("grid dimensions must be positive");
        std::vector<Edge> edges;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (j + 1 < cols)
                    edges.emplace_back(i * cols + j, i * cols + j + 1);
                if (i + 1 < rows)
                    edges.emplace_back(i * cols + j, (i + 1) * cols + j);
            }
        return Graph(rows * cols, std::move(edges));
    }

    auto cycle(int n) -> Graph
    {
        if (n < 3)
            throw InvalidParameter("cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, std::move(edges));
    }

    auto path(int n) -> Graph
    {
        if (n < 1)
            throw InvalidParameter("path needs at least 1 vertex");
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph(n, std::move(edges));
    }

    auto complete(int n) -> Graph
    {
        if (n < 0)
            throw InvalidParameter("negative vertex count");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return Graph(n, std::move(edges));
    }

    auto edgeless(int n) -> Graph
    {
        return Graph(n);
    }

    auto complete_bipartite(int a, int b) -> BipartiteGraph
    {
        if (a < 0 || b < 0)
            throw InvalidParameter("negative class size");
        std::vector<Edge> edges;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                edges.emplace_back(i, a + j);
        std::vector<Vertex> x(a);
        for (int i = 0; i < a; ++i)
            x[i] = i;
        return BipartiteGraph(Graph(a + b, std::move(edges)), std::move(x));
    }

    auto random_bipartite(int nx, int ny, double p, std::uint64_t seed) -> BipartiteGraph
    {
        if (! (p >= 0.0 && p <= 1.0))
            throw InvalidParameter("edge probability must lie in [0, 1]");
        if (nx < 0 || ny < 0)
            throw InvalidParameter("negative class size");
        Rng rng(seed);
        std::vector<Edge> edges;
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                if (rng.bernoulli(p))
                    edges.emplace_back(i, nx + j);
        std::vector<Vertex> x(nx);
        for (int i = 0; i < nx; ++i)
            x[i] = i;
        return BipartiteGraph(Graph(nx + ny, std::move(edges)), std::move(x));
    }

    auto random_cubic(int n, std::uint64_t seed) -> Graph
    {
        if (n < 4 || n % 2 != 0)
            throw InvalidParameter("random cubic graph needs an even vertex count >= 4, got " + std::to_string(n));

        Rng rng(seed);
        std::vector<Vertex> stubs(3 * n);
        for (;;) {
            for (int i = 0; i < 3 * n; ++i)
                stubs[i] = i / 3;
            rng.shuffle(std::span{stubs});

            std::vector<Edge> edges;
            bool simple = true;
            for (int i = 0; i < 3 * n && simple; i += 2) {
                if (stubs[i] == stubs[i + 1])
                    simple = false;
                else
                    edges.emplace_back(stubs[i], stubs[i + 1]);
            }
            if (! simple)
                continue;
            std::ranges::sort(edges);
            if (std::ranges::adjacent_find(edges) != edges.end())
                continue;
            return Graph(n, std::move(edges));
        }
    }
}
