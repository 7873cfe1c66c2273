#pragma once

#include <replpath/lca.hpp>
#include <replpath/parallel.hpp>

#include <span>
#include <stdexcept>
#include <vector>

namespace replpath {

/// BFS trees with LCA indexes for a chosen set of roots, addressed by root.
class TreeCache {
public:
    TreeCache() = default;
    explicit TreeCache(std::size_t n) : by_root_(n) {}

    void build(const Graph &g, std::span<const Vertex> roots, unsigned workers) {
        if (by_root_.size() != g.num_vertices()) by_root_.assign(g.num_vertices(), nullptr);
        std::vector<Vertex> todo;
        for (Vertex r : roots)
            if (!by_root_[r]) todo.push_back(r);
        std::sort(todo.begin(), todo.end());
        todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
        parallel_for(todo.size(), workers, [&](std::size_t i) { by_root_[todo[i]] = make_tree(g, todo[i]); });
    }

    bool has(Vertex root) const { return root < by_root_.size() && by_root_[root] != nullptr; }

    const RootedTree &at(Vertex root) const {
        if (!has(root)) throw std::out_of_range("no tree built for root " + std::to_string(root));
        return *by_root_[root];
    }
    const TreePtr &ptr(Vertex root) const {
        if (!has(root)) throw std::out_of_range("no tree built for root " + std::to_string(root));
        return by_root_[root];
    }

    /// dist(a, b) read from whichever endpoint has a tree.
    Dist dist(Vertex a, Vertex b) const {
        if (has(a)) return by_root_[a]->dist(b);
        return at(b).dist(a);
    }

private:
    std::vector<TreePtr> by_root_;
};

} // namespace replpath
