#pragma once

#include <mimlab/graph.hpp>

#include <cstdint>

namespace mimlab
{
    /// r*c vertices, vertex (i, j) has index i*c + j.
    auto grid(int rows, int cols) -> Graph;
    auto cycle(int n) -> Graph;
    auto path(int n) -> Graph;
    auto complete(int n) -> Graph;
    auto edgeless(int n) -> Graph;

    /// X = 0..a-1, Y = a..a+b-1.
    auto complete_bipartite(int a, int b) -> BipartiteGraph;

    /// Each X-Y pair is an edge independently with probability p.
    auto random_bipartite(int nx, int ny, double p, std::uint64_t seed) -> BipartiteGraph;

    /// Configuration model on 3n stubs, resampled from scratch until the
    /// pairing is simple. Requires even n >= 4.
    auto random_cubic(int n, std::uint64_t seed) -> Graph;
}
