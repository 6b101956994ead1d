#pragma once

#include <mimlab/decomp.hpp>
#include <mimlab/exec.hpp>
#include <mimlab/graph.hpp>

#include <cstdint>
#include <span>
#include <vector>

namespace mimlab
{
    /// Induced matching of a cut graph G[A, Ā]. Edges are stored with
    /// canonical endpoint order and sorted.
    struct InducedMatching
    {
        std::vector<Vertex> a_side;
        std::vector<Edge> edges;

        auto size() const -> int { return static_cast<int>(edges.size()); }
    };

    /// Maximum induced matching of G[A, Ā], exact.
    ///
    /// Cut edges become vertices of a conflict graph (two cut edges conflict
    /// when they share an endpoint or a cut edge joins their endpoints), and a
    /// maximum independent set of it is found by branch and bound, seeded with
    /// a greedy solution and pruned with a greedy clique-cover bound.
    auto max_induced_matching_cut(const Graph & g, std::span<const Vertex> a_side) -> InducedMatching;

    /// Same as above with A given by a membership vector of length n.
    auto max_induced_matching_cut(const Graph & g, const std::vector<char> & in_a) -> InducedMatching;

    /// Checks `edges` is an induced matching of G[A, Ā] straight from the
    /// definition.
    auto is_induced_matching_of_cut(const Graph & g, std::span<const Vertex> a_side, std::span<const Edge> edges) -> bool;

    /// Mim-values of every cut of a graph with n <= 24 vertices, indexed by
    /// the bitmask of A.
    auto cut_value_table(const Graph & g, Execution exec = Execution::parallel) -> std::vector<std::uint8_t>;
}
