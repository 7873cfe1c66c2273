#pragma once

#include <replpath/shortest_path_tree.hpp>

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace replpath {

/// Replacement distances for every edge of the canonical s->t path, in path order.
struct PairReplacement {
    Vertex s = kNoVertex;
    Vertex t = kNoVertex;
    std::vector<Edge> path; // (parent, child) pairs from s towards t
    std::vector<Dist> dist;
};

/**
 * Crossing-edge sweep. Removing path edge i splits the tree of s into the
 * subtree hanging below position i+1 and the rest. Every graph edge (x, y)
 * with x above and y below the cut gives the candidate d_s(x) + 1 + d_t(y);
 * such an edge crosses exactly the cuts in [pos(x), pos(y) - 1], where pos is
 * the deepest path vertex above it in the tree. A heap swept along the path
 * returns the best live candidate for each cut.
 *
 * `to_t` holds BFS distances from t in the whole graph.
 */
inline PairReplacement pair_replacement_paths(const Graph &g, const ShortestPathTree &ts,
                                              std::span<const Dist> to_t, Vertex t) {
    if (!ts.reaches(t)) {
        throw std::invalid_argument("target " + std::to_string(t) + " unreachable from " + std::to_string(ts.root));
    }
    PairReplacement out;
    out.s = ts.root;
    out.t = t;
    out.path = canonical_path_edges(ts, t);
    const auto d = static_cast<std::uint32_t>(out.path.size());
    out.dist.assign(d, kUnreachable);
    if (d == 0) return out;

    const auto n = g.num_vertices();
    constexpr std::uint32_t kOff = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> on_path(n, kOff);
    on_path[ts.root] = 0;
    for (std::uint32_t i = 0; i < d; ++i) on_path[out.path[i].v] = i + 1;
    std::vector<std::uint32_t> anchor(n, kOff);
    for (Vertex v : ts.bfs_order) anchor[v] = on_path[v] != kOff ? on_path[v] : anchor[ts.parent[v]];

    struct Candidate {
        std::uint32_t lo, hi;
        Dist value;
    };
    std::vector<Candidate> cands;
    for (auto [a, b] : g.edges()) {
        if (!ts.reaches(a)) continue;
        for (int flip = 0; flip < 2; ++flip) {
            Vertex x = flip ? b : a, y = flip ? a : b;
            if (anchor[x] >= anchor[y]) continue;
            // the path edge itself
            if (on_path[x] != kOff && on_path[y] == on_path[x] + 1) continue;
            Dist value = add_dist(add_dist(ts.dist[x], 1), to_t[y]);
            if (reachable(value)) cands.push_back({anchor[x], anchor[y] - 1, value});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate &l, const Candidate &r) { return l.lo < r.lo; });

    using Live = std::pair<Dist, std::uint32_t>; // value, hi
    std::priority_queue<Live, std::vector<Live>, std::greater<>> heap;
    std::size_t next = 0;
    for (std::uint32_t i = 0; i < d; ++i) {
        while (next < cands.size() && cands[next].lo == i) {
            heap.emplace(cands[next].value, cands[next].hi);
            ++next;
        }
        while (!heap.empty() && heap.top().second < i) heap.pop();
        if (!heap.empty()) out.dist[i] = heap.top().first;
    }
    return out;
}

inline PairReplacement pair_replacement_paths(const Graph &g, Vertex s, Vertex t) {
    if (s >= g.num_vertices() || t >= g.num_vertices()) throw std::out_of_range("vertex out of range");
    auto ts = bfs_tree(g, s);
    auto tt = bfs_tree(g, t);
    return pair_replacement_paths(g, ts, tt.dist, t);
}

} // namespace replpath
