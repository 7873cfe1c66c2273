#pragma once

#include <replpath/shortest_path_tree.hpp>

#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace replpath {

/// Hash map (root, vertex) -> hop distance, filled from BFS trees.
class DistanceStore {
public:
    void insert_tree(const ShortestPathTree &t) {
        map_.reserve(map_.size() + t.bfs_order.size());
        for (Vertex v : t.bfs_order) map_[key(t.root, v)] = t.dist[v];
        roots_[t.root] = true;
    }

    bool has_root(Vertex root) const { return roots_.contains(root); }

    /// kUnreachable for a vertex outside the root's component.
    /// Throws std::out_of_range when no tree for `root` was inserted.
    Dist get(Vertex root, Vertex v) const {
        if (!has_root(root)) throw std::out_of_range("no tree stored for root " + std::to_string(root));
        auto it = map_.find(key(root, v));
        return it == map_.end() ? kUnreachable : it->second;
    }

    std::size_t size() const noexcept { return map_.size(); }

private:
    static std::uint64_t key(Vertex a, Vertex b) noexcept {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    std::unordered_map<std::uint64_t, Dist> map_;
    std::unordered_map<Vertex, bool> roots_;
};

} // namespace replpath
