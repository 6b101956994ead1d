#pragma once

#include <mimlab/decomp.hpp>

#include <cstdint>
#include <vector>

namespace mimlab::detail
{
    /// Rooted binary tree grown by leaf insertion, with the leaf set of every
    /// node kept as a bitmask.
    ///
    /// Leaf i is node i. Inserting leaf k (k >= 1) above existing node v
    /// creates internal node n + k - 1 with children v and k. With k leaves
    /// present there are 2k - 1 nodes and hence 2k - 1 insertion choices;
    /// choice c < k means leaf c, otherwise internal node n + (c - k).
    class InsertionTree
    {
    public:
        explicit InsertionTree(int n) :
            _n(n),
            _parent(2 * n - 1, -1),
            _left(2 * n - 1, -1),
            _right(2 * n - 1, -1),
            _mask(2 * n - 1, 0)
        {
            _mask[0] = 1;
        }

        auto leaves() const -> int { return _leaves; }
        auto choices() const -> int { return 2 * _leaves - 1; }
        auto node_of_choice(int c) const -> int { return c < _leaves ? c : _n + (c - _leaves); }
        auto mask(int node) const -> std::uint32_t { return _mask[node]; }

        /// Calls f(mask) for every node currently in the tree.
        template <typename F>
        auto for_each_mask(F && f) const -> void
        {
            for (int i = 0; i < _leaves; ++i)
                f(_mask[i]);
            for (int i = _n; i < _n + _leaves - 1; ++i)
                f(_mask[i]);
        }

        auto insert(int choice) -> void
        {
            const int k = _leaves;
            const int v = node_of_choice(choice);
            const int w = _n + k - 1;
            const int p = _parent[v];
            _parent[w] = p;
            if (p == -1)
                _root = w;
            else if (_left[p] == v)
                _left[p] = w;
            else
                _right[p] = w;
            _left[w] = v;
            _right[w] = k;
            _parent[v] = w;
            _parent[k] = w;
            const std::uint32_t bit = std::uint32_t{1} << k;
            _mask[k] = bit;
            _mask[w] = _mask[v] | bit;
            for (int a = p; a != -1; a = _parent[a])
                _mask[a] |= bit;
            ++_leaves;
        }

        /// Reverts the most recent insert().
        auto undo() -> void
        {
            const int k = --_leaves;
            const int w = _n + k - 1;
            const int v = _left[w];
            const int p = _parent[w];
            if (p == -1)
                _root = v;
            else if (_left[p] == w)
                _left[p] = v;
            else
                _right[p] = v;
            _parent[v] = p;
            _parent[w] = _parent[k] = -1;
            _left[w] = _right[w] = -1;
            const std::uint32_t bit = std::uint32_t{1} << k;
            _mask[k] = _mask[w] = 0;
            for (int a = p; a != -1; a = _parent[a])
                _mask[a] &= ~bit;
        }

        auto to_decomposition() const -> BranchDecomposition
        {
            std::vector<BranchDecomposition::Node> nodes(2 * _n - 1);
            for (int i = 0; i < _leaves; ++i)
                nodes[i].leaf = i;
            for (int i = _n; i < _n + _leaves - 1; ++i)
                nodes[i].children = {_left[i], _right[i]};
            if (_leaves < _n) {
                // drop the unused slots so the node list is exactly the tree
                std::vector<BranchDecomposition::Node> used;
                std::vector<int> index(2 * _n - 1, -1);
                for (int i = 0; i < 2 * _n - 1; ++i)
                    if (i < _leaves || (i >= _n && i < _n + _leaves - 1)) {
                        index[i] = static_cast<int>(used.size());
                        used.push_back(nodes[i]);
                    }
                for (auto & node : used)
                    for (auto & c : node.children)
                        c = index[c];
                return BranchDecomposition(std::move(used), index[_root]);
            }
            return BranchDecomposition(std::move(nodes), _root);
        }

    private:
        int _n;
        int _leaves = 1;
        int _root = 0;
        std::vector<int> _parent, _left, _right;
        std::vector<std::uint32_t> _mask;
    };
}
