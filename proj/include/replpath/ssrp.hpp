#pragma once

#include <replpath/aux_graph.hpp>
#include <replpath/config.hpp>
#include <replpath/pair_rp.hpp>
#include <replpath/replacement_table.hpp>
#include <replpath/sampling.hpp>
#include <replpath/tree_cache.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace replpath {

/// Near / Far(k) class of a path edge of the canonical root->target path.
inline EdgeClass classify_edge(const RootedTree &ts, Vertex target, Edge e, const Scales &sc) {
    if (!edge_on_path(ts, e, target)) throw std::invalid_argument("edge is not on the canonical path");
    const Vertex b = ts.tree.deeper_endpoint(e.u, e.v);
    return classify_distance(ts.dist(target) - ts.dist(b), sc);
}

/// Class of path index i on a path of length d.
inline EdgeClass classify_position(std::uint32_t i, std::uint32_t d, const Scales &sc) {
    return classify_distance(d - 1 - i, sc);
}

/// First near path index of a path of length d.
inline std::uint32_t first_near_position(std::uint32_t d, const Scales &sc) {
    return d - std::min(d, sc.near_count());
}

/**
 * Dijkstra state of the small-near graph of one source. Node 0 is [s],
 * node 1 + v is [v], and [t, i] (i a near index of the canonical s->t path)
 * sits at base[t] + i - lo[t].
 */
struct SmallNearState {
    TreePtr tree;
    std::vector<std::uint32_t> lo;
    std::vector<NodeId> base;
    std::vector<Vertex> owner; // vertex of every node; kNoVertex for [s]
    AuxGraph::Result result;

    static constexpr NodeId kSourceNode = 0;
    static NodeId plain(Vertex v) { return 1 + v; }

    NodeId node(Vertex t, std::uint32_t i) const {
        if (base[t] == kNoNode || i < lo[t] || i >= tree->dist(t)) return kNoNode;
        return base[t] + (i - lo[t]);
    }

    /// Small-path value for (t, i), or the sentinel when none exists or i is not near.
    Dist value(Vertex t, std::uint32_t i) const {
        auto id = node(t, i);
        return id == kNoNode ? kUnreachable : result.dist[id];
    }

    /// Vertex sequence s ... t of the small path behind value(t, i).
    std::vector<Vertex> path(Vertex t, std::uint32_t i) const {
        auto id = node(t, i);
        if (id == kNoNode || !reachable(result.dist[id])) {
            throw std::invalid_argument("no small path stored for this target and edge");
        }
        std::vector<Vertex> tail;
        while (id > plain(static_cast<Vertex>(tree->tree.size() - 1))) {
            tail.push_back(owner[id]);
            id = result.pred[id];
            if (id == kNoNode) throw std::logic_error("broken predecessor chain");
        }
        if (id == kSourceNode) throw std::logic_error("chain must leave [s] through a plain node");
        auto out = canonical_path_vertices(tree->tree, owner[id]);
        out.insert(out.end(), tail.rbegin(), tail.rend());
        return out;
    }
};

/**
 * Small replacement paths for all near edges of one source. A path leaves the
 * canonical tree at some v with e not on sv, then walks neighbor by neighbor,
 * each step a node [x, e], until it reaches t.
 */
inline SmallNearState small_near_pass(const Graph &g, TreePtr tree, const Scales &sc, Counters *counters = nullptr) {
    const auto &ts = *tree;
    const auto n = static_cast<Vertex>(g.num_vertices());
    SmallNearState st;
    st.tree = tree;
    st.lo.assign(n, 0);
    st.base.assign(n, kNoNode);
    AuxGraph aux(1 + n);
    st.owner.assign(1 + n, kNoVertex);
    for (Vertex v = 0; v < n; ++v) st.owner[SmallNearState::plain(v)] = v;
    for (Vertex t = 0; t < n; ++t) {
        if (!ts.tree.reaches(t) || t == ts.root()) continue;
        const auto d = ts.dist(t);
        st.lo[t] = first_near_position(d, sc);
        st.base[t] = aux.add_nodes(d - st.lo[t]);
        st.owner.resize(aux.num_nodes(), t);
    }

    for (Vertex v = 0; v < n; ++v)
        if (ts.tree.reaches(v)) aux.add_arc(SmallNearState::kSourceNode, SmallNearState::plain(v), ts.dist(v));

    std::vector<Vertex> path;
    for (Vertex t = 0; t < n; ++t) {
        if (st.base[t] == kNoNode) continue;
        const auto d = ts.dist(t);
        path = canonical_path_vertices(ts.tree, t);
        for (std::uint32_t i = st.lo[t]; i < d; ++i) {
            const Vertex b = path[i + 1];
            const NodeId target = st.node(t, i);
            for (Vertex v : g.neighbors(t)) {
                if (i + 1 == d && v == path[i]) continue; // v--t is the failed edge
                if (!ts.lca.is_ancestor(b, v)) {
                    aux.add_arc(SmallNearState::plain(v), target, 1);
                } else if (auto from = st.node(v, i); from != kNoNode) {
                    aux.add_arc(from, target, 1);
                }
            }
        }
    }

    const std::uint64_t width = sc.near_count();
    check_size_bound("small-near nodes", aux.num_nodes(), std::uint64_t{n} * (1 + width + 1));
    check_size_bound("small-near arcs", aux.num_arcs(), (2 * g.num_edges() + n) * (width + 2));
    st.result = aux.solve(SmallNearState::kSourceNode, counters);
    return st;
}

inline void merge_small_near(const SmallNearState &st, SourceRows &table) {
    for (Vertex t = 0; t < st.base.size(); ++t) {
        if (st.base[t] == kNoNode || !table.has_row(t)) continue;
        for (std::uint32_t i = st.lo[t]; i < st.tree->dist(t); ++i) table.merge_min(t, i, st.value(t, i));
    }
}

/// d(s, r, e_i) where i indexes the canonical s->t path and b is its deeper endpoint.
inline Dist landmark_value(const SourceRows &lrp, Vertex r, Vertex b, std::uint32_t i) {
    const auto &ts = lrp.tree();
    if (!ts.lca.is_ancestor(b, r)) return ts.dist(r);
    return lrp.row(r)[i];
}

/**
 * Far edges: a landmark of level k within 2^k X of t cannot route through a
 * k-far edge, so d(s, r, e) + dist(r, t) is a valid candidate.
 */
inline void far_edge_pass(const SourceRows &lrp, const LandmarkSets &L, const TreeCache &trees, const Scales &sc,
                          SourceRows &table, Counters *counters = nullptr) {
    const auto &ts = table.tree();
    const auto n = static_cast<Vertex>(table.num_vertices());
    std::vector<std::vector<Vertex>> level(sc.top + 1);
    for (std::uint32_t k = 0; k <= sc.top; ++k) level[k] = L.sets.level(k);
    std::vector<std::vector<Vertex>> close(sc.top + 1);
    std::vector<bool> ready(sc.top + 1);
    std::vector<Vertex> path;
    for (Vertex t = 0; t < n; ++t) {
        if (!table.has_row(t)) continue;
        const auto d = ts.dist(t);
        const auto lo = first_near_position(d, sc);
        if (lo == 0) continue;
        path = canonical_path_vertices(ts.tree, t);
        std::fill(ready.begin(), ready.end(), false);
        std::uint64_t work = 0;
        auto &row = table.row(t);
        for (std::uint32_t i = 0; i < lo; ++i) {
            const auto cls = classify_position(i, d, sc);
            const auto k = cls.bucket;
            if (!ready[k]) {
                close[k].clear();
                for (Vertex r : level[k]) {
                    Dist rt = trees.at(r).dist(t);
                    if (reachable(rt) && static_cast<double>(rt) <= sc.band(k)) close[k].push_back(r);
                }
                work += level[k].size();
                ready[k] = true;
            }
            const Vertex b = path[i + 1];
            Dist best = row[i];
            for (Vertex r : close[k]) {
                best = std::min(best, add_dist(landmark_value(lrp, r, b, i), trees.at(r).dist(t)));
            }
            work += close[k].size();
            row[i] = best;
        }
        if (counters) counters->note_far_target(work);
    }
}

/**
 * Large near paths: some level-0 landmark r on the suffix has e off its
 * canonical path to t, so d(s, r, e) + dist(r, t) certifies the answer.
 */
inline void large_near_pass(const SourceRows &lrp, const LandmarkSets &L, const TreeCache &trees, const Scales &sc,
                            SourceRows &table, Counters *counters = nullptr) {
    const auto &ts = table.tree();
    const auto n = static_cast<Vertex>(table.num_vertices());
    const auto level0 = L.sets.level(0);
    std::vector<Vertex> path;
    std::uint64_t work = 0;
    for (Vertex t = 0; t < n; ++t) {
        if (!table.has_row(t)) continue;
        const auto d = ts.dist(t);
        path = canonical_path_vertices(ts.tree, t);
        auto &row = table.row(t);
        for (std::uint32_t i = first_near_position(d, sc); i < d; ++i) {
            const Edge e{path[i], path[i + 1]};
            const Vertex b = path[i + 1];
            Dist best = row[i];
            for (Vertex r : level0) {
                const auto &tr = trees.at(r);
                if (!tr.tree.reaches(t) || edge_on_path(tr, e, t)) continue;
                best = std::min(best, add_dist(landmark_value(lrp, r, b, i), tr.dist(t)));
            }
            work += level0.size();
            row[i] = best;
        }
    }
    if (counters) counters->large_near_candidates += work;
}

/// Fresh table for one source with a sentinel-filled row for every reachable target.
inline SourceRows open_all_rows(TreePtr tree) {
    SourceRows rows(std::move(tree));
    for (Vertex t = 0; t < rows.num_vertices(); ++t)
        if (t != rows.source()) rows.open_row(t);
    return rows;
}

/// Landmark rows of one source from the classical pair routine.
inline SourceRows pair_landmark_rows(const Graph &g, TreePtr ts, const LandmarkSets &L, const TreeCache &trees,
                                     unsigned workers) {
    SourceRows lrp(ts);
    std::vector<Vertex> targets;
    for (Vertex r : L.all)
        if (ts->tree.reaches(r) && r != ts->root()) targets.push_back(r);
    parallel_for(targets.size(), workers, [&](std::size_t k) {
        const Vertex r = targets[k];
        lrp.open_row(r) = pair_replacement_paths(g, ts->tree, trees.at(r).tree.dist, r).dist;
    });
    return lrp;
}

/// Single-source replacement paths for every target and every canonical path edge.
inline ReplacementTable run_ssrp(const Graph &g, Vertex s, const AlgoConfig &cfg, Counters *counters = nullptr) {
    cfg.validate();
    if (s >= g.num_vertices()) throw ValidationError("source " + std::to_string(s) + " out of range");
    const std::vector<Vertex> sources{s};
    const auto sc = Scales::make(g.num_vertices(), 1, cfg);
    const auto L = sample_landmarks(g, sources, sc, cfg.seed);

    TreeCache trees(g.num_vertices());
    auto roots = L.all;
    roots.push_back(s);
    trees.build(g, roots, cfg.parallel);
    const auto &ts = trees.ptr(s);

    const auto lrp = pair_landmark_rows(g, ts, L, trees, cfg.parallel);
    auto table = open_all_rows(ts);
    far_edge_pass(lrp, L, trees, sc, table, counters);
    merge_small_near(small_near_pass(g, ts, sc, counters), table);
    large_near_pass(lrp, L, trees, sc, table, counters);

    ReplacementTable out;
    out.add_source(std::move(table));
    return out;
}

} // namespace replpath
