#pragma once

#include <replpath/config.hpp>
#include <replpath/distance_store.hpp>
#include <replpath/replacement_table.hpp>

#include <deque>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace replpath {

/// Plain BFS from s ignoring one edge id (kNoEdge ignores nothing).
inline std::vector<Dist> bfs_without_edge(const Graph &g, Vertex s, EdgeId skip) {
    std::vector<Dist> dist(g.num_vertices(), kUnreachable);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        auto nbrs = g.neighbors(u);
        auto ids = g.incident_edges(u);
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            if (ids[k] == skip || dist[nbrs[k]] != kUnreachable) continue;
            dist[nbrs[k]] = dist[u] + 1;
            queue.push_back(nbrs[k]);
        }
    }
    return dist;
}

/// dist(s, t) in G - e.
inline Dist brute_force_rp(const Graph &g, Vertex s, Vertex t, Edge e) {
    return bfs_without_edge(g, s, g.edge_id(e.u, e.v))[t];
}

/// Full table by one BFS in G - e per tree edge of every source. The naive baseline.
inline ReplacementTable brute_force_table(const Graph &g, std::span<const Vertex> sources) {
    ReplacementTable out;
    for (Vertex s : sources) {
        if (out.has_source(s)) continue;
        SourceRows rows(make_tree(g, s));
        const auto &tree = rows.tree();
        for (Vertex t : tree.tree.bfs_order)
            if (t != s) rows.open_row(t);
        for (Vertex c : tree.tree.bfs_order) {
            if (c == s) continue;
            const auto depth = tree.dist(c);
            auto without = bfs_without_edge(g, s, g.edge_id(tree.tree.parent[c], c));
            for (Vertex t : tree.tree.bfs_order)
                if (t != s && tree.lca.is_ancestor(c, t)) rows.row(t)[depth - 1] = without[t];
        }
        out.add_source(std::move(rows));
    }
    return out;
}

struct Mismatch {
    Vertex source;
    Vertex target;
    Edge edge;
    Dist expected;
    Dist got;
    std::string edge_class;
};

struct VerifyReport {
    std::size_t checked = 0;
    std::size_t missing_rows = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty() && missing_rows == 0; }
};

/**
 * Compares every keyed triple of the table with a BFS in G - e. One BFS per
 * tree edge of each source serves all targets below that edge.
 */
inline VerifyReport verify_table(const Graph &g, const ReplacementTable &table, const Scales &sc) {
    VerifyReport report;
    for (Vertex s : table.sources()) {
        const auto &rows = table.source(s);
        const auto &tree = rows.tree();
        for (Vertex c : tree.tree.bfs_order) {
            if (c == s) continue;
            const Vertex p = tree.tree.parent[c];
            const auto depth = tree.dist(c);
            auto without = bfs_without_edge(g, s, g.edge_id(p, c));
            for (Vertex t : tree.tree.bfs_order) {
                if (t == s || !tree.lca.is_ancestor(c, t)) continue;
                if (!rows.has_row(t)) {
                    ++report.missing_rows;
                    continue;
                }
                const Dist got = rows.row(t)[depth - 1];
                ++report.checked;
                if (got != without[t]) {
                    report.mismatches.push_back({s, t, {std::min(p, c), std::max(p, c)}, without[t], got,
                                                 classify_distance(tree.dist(t) - depth, sc).to_string()});
                }
            }
        }
    }
    return report;
}

/// O(1) expected lookups over a finished table; off-path edges answer dist(s, t).
class QueryIndex {
public:
    QueryIndex(const Graph &g, const ReplacementTable &table) : g_(&g) {
        for (const auto &rec : table.records(g)) map_[key(rec.source, rec.target, rec.edge)] = rec.dist;
        for (Vertex s : table.sources()) dists_.insert_tree(table.source(s).tree().tree);
    }

    Dist query(Vertex s, Vertex t, Edge e) const {
        if (!dists_.has_root(s)) throw std::out_of_range("unknown source " + std::to_string(s));
        const EdgeId id = g_->edge_id(e.u, e.v);
        if (id != kNoEdge) {
            auto it = map_.find(key(s, t, id));
            if (it != map_.end()) return it->second;
        }
        return dists_.get(s, t);
    }

    std::size_t size() const noexcept { return map_.size(); }

private:
    struct Key {
        Vertex s, t;
        EdgeId e;
        friend bool operator==(const Key &, const Key &) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key &k) const noexcept {
            std::uint64_t h = (static_cast<std::uint64_t>(k.s) << 32 | k.t) * 0x9e3779b97f4a7c15ULL;
            return static_cast<std::size_t>(h ^ (h >> 29) ^ (static_cast<std::uint64_t>(k.e) * 0xbf58476d1ce4e5b9ULL));
        }
    };
    static Key key(Vertex s, Vertex t, EdgeId e) { return {s, t, e}; }

    const Graph *g_;
    std::unordered_map<Key, Dist, KeyHash> map_;
    DistanceStore dists_;
};

} // namespace replpath
