#include <mimlab/decomp.hpp>
#include <mimlab/error.hpp>

#include "insertion_tree.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace mimlab
{
    namespace
    {
        auto min_leaf(const std::vector<BranchDecomposition::Node> & nodes, int v, std::vector<int> & memo) -> int
        {
            if (memo[v] != std::numeric_limits<int>::min())
                return memo[v];
            int best = nodes[v].is_leaf() ? nodes[v].leaf : std::numeric_limits<int>::max();
            for (auto c : nodes[v].children)
                best = std::min(best, min_leaf(nodes, c, memo));
            return memo[v] = best;
        }

        auto write(const std::vector<BranchDecomposition::Node> & nodes, int v, std::string & out) -> void
        {
            if (nodes[v].is_leaf()) {
                out += std::to_string(nodes[v].leaf);
                return;
            }
            out += '(';
            bool first = true;
            for (auto c : nodes[v].children) {
                if (! first)
                    out += ' ';
                first = false;
                write(nodes, c, out);
            }
            out += ')';
        }

        struct Parser
        {
            const std::string & text;
            std::size_t pos = 0;
            std::vector<BranchDecomposition::Node> nodes;

            auto skip() -> void
            {
                while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                    ++pos;
            }

            auto node() -> int
            {
                skip();
                if (pos >= text.size())
                    throw ParseError("unexpected end of decomposition");
                int id = static_cast<int>(nodes.size());
                nodes.emplace_back();
                if (text[pos] == '(') {
                    ++pos;
                    std::vector<int> children;
                    for (skip(); pos < text.size() && text[pos] != ')'; skip())
                        children.push_back(node());
                    if (pos >= text.size())
                        throw ParseError("unbalanced parentheses in decomposition");
                    ++pos;
                    if (children.empty())
                        throw ParseError("empty node in decomposition");
                    nodes[id].children = std::move(children);
                    return id;
                }
                std::size_t start = pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (start == pos)
                    throw ParseError("unexpected character '" + std::string(1, text[pos]) + "' in decomposition");
                nodes[id].leaf = std::stoi(text.substr(start, pos - start));
                return id;
            }
        };
    }

    BranchDecomposition::BranchDecomposition(std::vector<Node> nodes, int root) :
        _nodes(std::move(nodes)),
        _root(root)
    {
        if (_nodes.empty() || root < 0 || root >= static_cast<int>(_nodes.size()))
            throw InvalidDecomposition("root index out of range");
        for (auto & node : _nodes)
            for (auto c : node.children)
                if (c < 0 || c >= static_cast<int>(_nodes.size()))
                    throw InvalidDecomposition("child index out of range");

        std::vector<int> memo(_nodes.size(), std::numeric_limits<int>::min());
        // sort children iteratively over a reachable-node stack; cycles are
        // left to validate() to report, so guard with a visit count
        std::vector<char> seen(_nodes.size(), 0);
        std::vector<int> stack{_root};
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (seen[v]++)
                continue;
            for (auto c : _nodes[v].children)
                stack.push_back(c);
        }
        if (std::ranges::all_of(seen, [](char s) { return s <= 1; }))
            for (std::size_t v = 0; v < _nodes.size(); ++v)
                if (seen[v])
                    std::ranges::stable_sort(_nodes[v].children, {}, [&](int c) { return min_leaf(_nodes, c, memo); });
    }

    auto BranchDecomposition::leaf_count() const -> int
    {
        return static_cast<int>(std::ranges::count_if(_nodes, [](const Node & n) { return n.is_leaf(); }));
    }

    auto BranchDecomposition::subtree_leaves() const -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> result(_nodes.size());
        // post-order via explicit stack
        std::vector<std::pair<int, bool>> stack{{_root, false}};
        while (! stack.empty()) {
            auto [v, expanded] = stack.back();
            stack.pop_back();
            if (_nodes[v].is_leaf()) {
                result[v] = {_nodes[v].leaf};
                continue;
            }
            if (! expanded) {
                stack.emplace_back(v, true);
                for (auto c : _nodes[v].children)
                    stack.emplace_back(c, false);
                continue;
            }
            for (auto c : _nodes[v].children)
                result[v].insert(result[v].end(), result[c].begin(), result[c].end());
            std::ranges::sort(result[v]);
        }
        return result;
    }

    auto BranchDecomposition::to_string() const -> std::string
    {
        std::string out;
        write(_nodes, _root, out);
        return out;
    }

    auto BranchDecomposition::parse(const std::string & text) -> BranchDecomposition
    {
        Parser p{text, 0, {}};
        int root = p.node();
        p.skip();
        if (p.pos != text.size())
            throw ParseError("trailing characters after decomposition");
        return BranchDecomposition(std::move(p.nodes), root);
    }

    auto validate(const BranchDecomposition & t, const Graph & g) -> std::optional<ValidationError>
    {
        auto & nodes = t.nodes();
        std::vector<char> seen(nodes.size(), 0);
        std::vector<int> stack{t.root()};
        std::vector<int> order;
        while (! stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            if (seen[v])
                return ValidationError{DecompositionViolation::not_a_tree, "node " + std::to_string(v) + " is reachable twice"};
            seen[v] = 1;
            order.push_back(v);
            for (auto it = nodes[v].children.rbegin(); it != nodes[v].children.rend(); ++it)
                stack.push_back(*it);
        }
        if (order.size() != nodes.size())
            return ValidationError{DecompositionViolation::not_a_tree, "some nodes are unreachable from the root"};

        for (auto v : order)
            if (! nodes[v].is_leaf() && nodes[v].children.size() != 2)
                return ValidationError{DecompositionViolation::not_binary,
                    "node " + std::to_string(v) + " has " + std::to_string(nodes[v].children.size()) + " children"};

        std::vector<char> label_seen(g.order(), 0);
        int leaves = 0;
        for (auto v : order) {
            if (! nodes[v].is_leaf())
                continue;
            ++leaves;
            auto label = nodes[v].leaf;
            if (label < 0 || label >= g.order())
                return ValidationError{DecompositionViolation::label_mismatch, "leaf label " + std::to_string(label) + " is not a vertex"};
            if (label_seen[label]++)
                return ValidationError{DecompositionViolation::label_mismatch, "leaf label " + std::to_string(label) + " appears twice"};
        }
        if (leaves != g.order())
            return ValidationError{DecompositionViolation::label_mismatch,
                std::to_string(leaves) + " leaves for a graph on " + std::to_string(g.order()) + " vertices"};
        return std::nullopt;
    }

    auto cut_of(const Graph & g, std::span<const Vertex> a_side) -> Cut
    {
        std::vector<char> in_a(g.order(), 0);
        for (auto v : a_side)
            in_a[v] = 1;
        Cut cut;
        cut.a_side.assign(a_side.begin(), a_side.end());
        std::ranges::sort(cut.a_side);
        for (auto e : g.edges())
            if (in_a[e.u] != in_a[e.v])
                cut.cut_edges.push_back(e);
        return cut;
    }

    auto cuts(const BranchDecomposition & t, const Graph & g) -> std::vector<Cut>
    {
        if (auto err = validate(t, g))
            throw InvalidDecomposition(err->message);
        auto leaves = t.subtree_leaves();
        std::ranges::sort(leaves, [](auto & a, auto & b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
        std::vector<Cut> result;
        result.reserve(leaves.size());
        for (auto & a : leaves)
            result.push_back(cut_of(g, a));
        return result;
    }

    auto caterpillar_from_order(std::span<const Vertex> order) -> BranchDecomposition
    {
        const int n = static_cast<int>(order.size());
        if (n == 0)
            throw NotAPermutation("empty order");
        std::vector<char> seen(n, 0);
        for (auto v : order) {
            if (v < 0 || v >= n)
                throw NotAPermutation("order entry " + std::to_string(v) + " out of range");
            if (seen[v]++)
                throw NotAPermutation("vertex " + std::to_string(v) + " repeated in order");
        }

        std::vector<BranchDecomposition::Node> nodes(n);
        for (int i = 0; i < n; ++i)
            nodes[i].leaf = order[i];
        int spine = 0;
        for (int i = 1; i < n; ++i) {
            nodes.push_back({{spine, i}, -1});
            spine = static_cast<int>(nodes.size()) - 1;
        }
        return BranchDecomposition(std::move(nodes), spine);
    }

    auto decomposition_count(int n) -> std::uint64_t
    {
        std::uint64_t count = 1;
        for (int k = 1; k < n; ++k)
            count *= static_cast<std::uint64_t>(2 * k - 1);
        return count;
    }

    namespace
    {
        auto enumerate_from(detail::InsertionTree & tree, int n, const std::function<void(const BranchDecomposition &)> & visit) -> void
        {
            if (tree.leaves() == n) {
                visit(tree.to_decomposition());
                return;
            }
            for (int c = 0, end = tree.choices(); c < end; ++c) {
                tree.insert(c);
                enumerate_from(tree, n, visit);
                tree.undo();
            }
        }
    }

    auto enumerate_decompositions(int n, const std::function<void(const BranchDecomposition &)> & visit, int limit) -> void
    {
        if (n < 2)
            throw InvalidParameter("enumeration needs at least 2 leaves");
        if (n > limit)
            throw LimitExceeded("enumeration limit is " + std::to_string(limit) + " leaves, asked for " + std::to_string(n));
        if (n > 31)
            throw LimitExceeded("enumeration supports at most 31 leaves");
        detail::InsertionTree tree(n);
        enumerate_from(tree, n, visit);
    }

    auto decomposition_from_choices(int n, std::span<const int> choices) -> BranchDecomposition
    {
        if (n < 1 || n > 31 || static_cast<int>(choices.size()) != n - 1)
            throw InvalidParameter("choice sequence length must be n - 1");
        detail::InsertionTree tree(n);
        for (auto c : choices) {
            if (c < 0 || c >= tree.choices())
                throw InvalidParameter("insertion choice out of range");
            tree.insert(c);
        }
        return tree.to_decomposition();
    }
}
