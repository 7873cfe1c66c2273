#pragma once

#include <replpath/shortest_path_tree.hpp>

#include <bit>
#include <memory>
#include <stdexcept>
#include <vector>

namespace replpath {

/**
 * Constant-time LCA over one ShortestPathTree: Euler tour plus a sparse table
 * of range minima over tour depths. O(n log n) words, built once per tree.
 */
class LcaIndex {
public:
    LcaIndex() = default;

    explicit LcaIndex(const ShortestPathTree &t) : depth_(t.dist) {
        const auto n = t.size();
        first_.assign(n, kAbsent);
        last_.assign(n, kAbsent);
        if (n == 0 || !t.reaches(t.root)) return;

        // children in CSR, ordered by id because bfs_order lists each level ascending-by-discovery
        std::vector<std::uint32_t> count(n + 1, 0);
        for (Vertex v : t.bfs_order)
            if (v != t.root) ++count[t.parent[v] + 1];
        for (std::size_t i = 0; i < n; ++i) count[i + 1] += count[i];
        std::vector<Vertex> children(count[n]);
        std::vector<std::uint32_t> fill(count.begin(), count.end() - 1);
        for (Vertex v : t.bfs_order)
            if (v != t.root) children[fill[t.parent[v]]++] = v;

        tour_.reserve(2 * t.bfs_order.size());
        struct Frame {
            Vertex v;
            std::uint32_t next;
        };
        std::vector<Frame> stack{{t.root, count[t.root]}};
        first_[t.root] = 0;
        tour_.push_back(t.root);
        while (!stack.empty()) {
            auto &top = stack.back();
            if (top.next < count[top.v + 1]) {
                Vertex c = children[top.next++];
                first_[c] = static_cast<std::uint32_t>(tour_.size());
                tour_.push_back(c);
                stack.push_back({c, count[c]});
            } else {
                last_[top.v] = static_cast<std::uint32_t>(tour_.size() - 1);
                stack.pop_back();
                if (!stack.empty()) tour_.push_back(stack.back().v);
            }
        }
        build_table();
    }

    bool contains(Vertex v) const { return v < first_.size() && first_[v] != kAbsent; }

    /// Deepest common ancestor. Throws std::invalid_argument outside the tree.
    Vertex lca(Vertex u, Vertex v) const {
        if (!contains(u) || !contains(v)) {
            throw std::invalid_argument("lca query outside the tree component");
        }
        auto a = first_[u], b = first_[v];
        if (a > b) std::swap(a, b);
        const auto level = static_cast<std::size_t>(std::bit_width(b - a + 1) - 1);
        const auto &row = table_[level];
        Vertex x = row[a], y = row[b + 1 - (1u << level)];
        return depth_[x] <= depth_[y] ? x : y;
    }

    /// True when a lies on the root->v tree path (a == v included).
    bool is_ancestor(Vertex a, Vertex v) const {
        if (!contains(a) || !contains(v)) return false;
        return first_[a] <= first_[v] && last_[v] <= last_[a];
    }

private:
    static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

    void build_table() {
        const auto len = tour_.size();
        const auto levels = static_cast<std::size_t>(std::bit_width(len));
        table_.resize(levels);
        table_[0] = tour_;
        for (std::size_t k = 1; k < levels; ++k) {
            const auto half = std::size_t{1} << (k - 1);
            const auto span = std::size_t{1} << k;
            auto &row = table_[k];
            const auto &prev = table_[k - 1];
            row.resize(len - span + 1);
            for (std::size_t i = 0; i + span <= len; ++i) {
                Vertex x = prev[i], y = prev[i + half];
                row[i] = depth_[x] <= depth_[y] ? x : y;
            }
        }
    }

    std::vector<Dist> depth_;
    std::vector<Vertex> tour_;
    std::vector<std::uint32_t> first_;
    std::vector<std::uint32_t> last_;
    std::vector<std::vector<Vertex>> table_;
};

/// A BFS tree together with its LCA index; shared immutable between passes.
struct RootedTree {
    ShortestPathTree tree;
    LcaIndex lca;

    explicit RootedTree(ShortestPathTree t) : tree(std::move(t)), lca(tree) {}

    Vertex root() const noexcept { return tree.root; }
    Dist dist(Vertex v) const { return tree.dist[v]; }
};

using TreePtr = std::shared_ptr<const RootedTree>;

inline TreePtr make_tree(const Graph &g, Vertex root) {
    return std::make_shared<const RootedTree>(bfs_tree(g, root));
}

/**
 * Whether e lies on the canonical root->v path of t. Non-tree edges answer
 * false immediately; otherwise, with b the deeper endpoint, e is on the path
 * iff lca(b, v) == b.
 */
inline bool edge_on_path(const ShortestPathTree &t, const LcaIndex &idx, Edge e, Vertex v) {
    if (!t.is_tree_edge(e.u, e.v) || !t.reaches(v)) return false;
    const Vertex b = t.deeper_endpoint(e.u, e.v);
    return idx.lca(b, v) == b;
}

inline bool edge_on_path(const RootedTree &rt, Edge e, Vertex v) {
    return edge_on_path(rt.tree, rt.lca, e, v);
}

} // namespace replpath
