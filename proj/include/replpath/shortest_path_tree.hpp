#pragma once

#include <replpath/graph.hpp>

#include <deque>
#include <stdexcept>
#include <vector>

namespace replpath {

/**
 * BFS tree of one root with the canonical parent rule: parent(v) is the
 * minimum-id neighbor one level closer to the root. The root->v tree path is
 * the canonical shortest path every replacement query refers to.
 */
struct ShortestPathTree {
    Vertex root = kNoVertex;
    std::vector<Dist> dist;
    std::vector<Vertex> parent;    // kNoVertex for the root and unreachable vertices
    std::vector<Vertex> bfs_order; // reachable vertices by nondecreasing dist

    bool reaches(Vertex v) const { return v < dist.size() && dist[v] != kUnreachable; }
    std::size_t size() const noexcept { return dist.size(); }

    /// The edge (parent(child), child) is a tree edge.
    bool is_tree_edge(Vertex a, Vertex b) const {
        return (reaches(b) && parent[b] == a) || (reaches(a) && parent[a] == b);
    }
    /// Endpoint of a tree edge farther from the root.
    Vertex deeper_endpoint(Vertex a, Vertex b) const { return dist[a] > dist[b] ? a : b; }
};

inline ShortestPathTree bfs_tree(const Graph &g, Vertex root) {
    const auto n = g.num_vertices();
    if (root >= n) throw std::out_of_range("bfs root " + std::to_string(root) + " out of range");
    ShortestPathTree t;
    t.root = root;
    t.dist.assign(n, kUnreachable);
    t.parent.assign(n, kNoVertex);
    t.bfs_order.reserve(n);
    t.dist[root] = 0;
    t.bfs_order.push_back(root);
    for (std::size_t head = 0; head < t.bfs_order.size(); ++head) {
        Vertex u = t.bfs_order[head];
        for (Vertex w : g.neighbors(u)) {
            if (t.dist[w] == kUnreachable) {
                t.dist[w] = t.dist[u] + 1;
                t.bfs_order.push_back(w);
            }
        }
    }
    // Neighbor lists are sorted, so the first hit one level up is the min-id parent.
    for (Vertex v : t.bfs_order) {
        if (v == root) continue;
        for (Vertex w : g.neighbors(v)) {
            if (t.dist[w] + 1 == t.dist[v]) {
                t.parent[v] = w;
                break;
            }
        }
    }
    return t;
}

/// Tree path root->v as vertices [root, ..., v].
inline std::vector<Vertex> canonical_path_vertices(const ShortestPathTree &t, Vertex v) {
    if (!t.reaches(v)) {
        throw std::invalid_argument("vertex " + std::to_string(v) + " unreachable from " +
                                    std::to_string(t.root));
    }
    std::vector<Vertex> path(t.dist[v] + 1);
    for (auto i = static_cast<std::ptrdiff_t>(path.size()) - 1; i >= 0; --i) {
        path[static_cast<std::size_t>(i)] = v;
        v = t.parent[v];
    }
    return path;
}

/// Tree path root->v as ordered (parent, child) edges; empty for v == root.
inline std::vector<Edge> canonical_path_edges(const ShortestPathTree &t, Vertex v) {
    auto verts = canonical_path_vertices(t, v);
    std::vector<Edge> edges;
    edges.reserve(verts.size() - 1);
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) edges.push_back({verts[i], verts[i + 1]});
    return edges;
}

} // namespace replpath
