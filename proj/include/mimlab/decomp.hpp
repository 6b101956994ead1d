#pragma once

#include <mimlab/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mimlab
{
    /// Rooted tree whose leaves carry vertex labels. A valid branch
    /// decomposition has exactly two children at every internal node and a
    /// bijection between leaves and the vertices of the subject graph; use
    /// validate() to check both.
    class BranchDecomposition
    {
    public:
        struct Node
        {
            std::vector<int> children;
            Vertex leaf = -1;

            auto is_leaf() const -> bool { return children.empty(); }
        };

        BranchDecomposition() = default;

        /// Takes the nodes as given; children are reordered so the subtree
        /// with the smaller minimum leaf label comes first.
        BranchDecomposition(std::vector<Node> nodes, int root);

        auto nodes() const -> const std::vector<Node> & { return _nodes; }
        auto root() const -> int { return _root; }
        auto leaf_count() const -> int;

        /// Leaf labels under every node, indexed like nodes().
        auto subtree_leaves() const -> std::vector<std::vector<Vertex>>;

        /// Nested parentheses, e.g. `((0 1) (2 3))`; a lone leaf is `0`.
        auto to_string() const -> std::string;

        /// Inverse of to_string(). Throws ParseError.
        static auto parse(const std::string & text) -> BranchDecomposition;

        friend auto operator==(const BranchDecomposition & a, const BranchDecomposition & b) -> bool
        {
            return a.to_string() == b.to_string();
        }

    private:
        std::vector<Node> _nodes;
        int _root = -1;
    };

    enum class DecompositionViolation
    {
        not_a_tree,
        not_binary,
        label_mismatch
    };

    struct ValidationError
    {
        DecompositionViolation kind;
        std::string message;
    };

    auto validate(const BranchDecomposition & t, const Graph & g) -> std::optional<ValidationError>;

    struct Cut
    {
        std::vector<Vertex> a_side;
        std::vector<Edge> cut_edges;
    };

    auto cut_of(const Graph & g, std::span<const Vertex> a_side) -> Cut;

    /// One cut per node, the root's trivial cut included, ordered by
    /// (|A|, A). Throws InvalidDecomposition when validate() fails.
    auto cuts(const BranchDecomposition & t, const Graph & g) -> std::vector<Cut>;

    /// Left-deep tree with `order` along the spine. Throws NotAPermutation.
    auto caterpillar_from_order(std::span<const Vertex> order) -> BranchDecomposition;

    inline constexpr int default_enumeration_limit = 9;

    /// (2n-3)!!
    auto decomposition_count(int n) -> std::uint64_t;

    /// Visits every rooted binary tree on leaves 0..n-1 exactly once, in
    /// leaf-insertion order. Throws LimitExceeded if n > limit and
    /// InvalidParameter if n < 2.
    auto enumerate_decompositions(int n, const std::function<void(const BranchDecomposition &)> & visit,
        int limit = default_enumeration_limit) -> void;

    /// The tree reached by inserting leaf k (k = 1..n-1) above the
    /// choices[k-1]-th existing node, the encoding used by the enumeration.
    auto decomposition_from_choices(int n, std::span<const int> choices) -> BranchDecomposition;
}
