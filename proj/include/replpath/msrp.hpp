#pragma once

#include <replpath/ssrp.hpp>

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace replpath {

/**
 * Values on a window of positions along canonical paths, one window per
 * vertex. Positions outside a window answer the sentinel: "no certificate".
 */
class SpanRows {
public:
    SpanRows() = default;
    explicit SpanRows(std::size_t n) : lo_(n, 0), vals_(n) {}

    void open(Vertex v, std::uint32_t lo, std::uint32_t count) {
        lo_[v] = lo;
        vals_[v].assign(count, kUnreachable);
    }
    bool covers(Vertex v, std::uint32_t i) const { return i >= lo_[v] && i - lo_[v] < vals_[v].size(); }
    Dist get(Vertex v, std::uint32_t i) const { return covers(v, i) ? vals_[v][i - lo_[v]] : kUnreachable; }
    void set(Vertex v, std::uint32_t i, Dist d) { vals_[v][i - lo_[v]] = d; }
    std::uint32_t lo(Vertex v) const { return lo_[v]; }
    std::uint32_t count(Vertex v) const { return static_cast<std::uint32_t>(vals_[v].size()); }

private:
    std::vector<std::uint32_t> lo_;
    std::vector<std::vector<Dist>> vals_;
};

struct Interval {
    std::uint32_t lo = 0; // first path index
    std::uint32_t hi = 0; // last path index (inclusive)
    Vertex near_center = kNoVertex; // s-side bounding center
    Vertex far_center = kNoVertex;  // r-side bounding center, or r itself
    std::uint32_t bottleneck = 0;   // path index of the bottleneck edge
};

/// Center list and intervals of one canonical source->r path.
struct IntervalDecomposition {
    std::vector<Vertex> centers;
    std::vector<Interval> intervals;

    std::uint32_t interval_of(std::uint32_t pos) const {
        auto it = std::upper_bound(intervals.begin(), intervals.end(), pos,
                                   [](std::uint32_t p, const Interval &iv) { return p < iv.lo; });
        if (it == intervals.begin()) throw std::out_of_range("position before the first interval");
        return static_cast<std::uint32_t>(it - intervals.begin() - 1);
    }
};

/**
 * Walks the canonical path: strictly increasing priorities from s up to the
 * first center of maximum priority, then the strict suffix maxima read back
 * from r. Intervals are the stretches between consecutive collected centers,
 * plus a last one ending at r when r is not collected.
 */
inline IntervalDecomposition interval_decomposition(const std::vector<Vertex> &path, const CenterSets &C) {
    if (path.size() < 2) return {};
    const auto d = static_cast<std::uint32_t>(path.size() - 1);
    auto prio = [&](Vertex v) { return C.priority[v]; };
    std::vector<std::uint32_t> picked;
    std::int32_t best = -1;
    for (std::uint32_t j = 0; j <= d; ++j) {
        if (prio(path[j]) > best) {
            best = prio(path[j]);
            picked.push_back(j);
        }
    }
    if (picked.empty()) throw std::invalid_argument("path carries no center");
    // picked now ends at the first maximum; add the strict suffix maxima after it
    const auto top = picked.back();
    std::vector<std::uint32_t> tail;
    best = -1;
    for (std::uint32_t j = d; j > top; --j) {
        if (prio(path[j]) > best) {
            best = prio(path[j]);
            tail.push_back(j);
        }
    }
    picked.insert(picked.end(), tail.rbegin(), tail.rend());

    IntervalDecomposition out;
    for (auto j : picked) out.centers.push_back(path[j]);
    for (std::size_t a = 0; a + 1 < picked.size(); ++a) {
        out.intervals.push_back({picked[a], picked[a + 1] - 1, path[picked[a]], path[picked[a + 1]], picked[a]});
    }
    if (picked.back() < d) out.intervals.push_back({picked.back(), d - 1, path[picked.back()], path[d], picked.back()});
    if (!out.intervals.empty() && out.intervals.front().lo != 0) {
        throw std::logic_error("decomposition must start at the source");
    }
    return out;
}

inline IntervalDecomposition interval_decomposition(const ShortestPathTree &ts, Vertex r, const CenterSets &C) {
    return interval_decomposition(canonical_path_vertices(ts, r), C);
}

/// Explicit small replacement paths source -> landmark, indexed by (landmark, failed edge).
class EnumeratedSmallPaths {
public:
    struct Entry {
        Vertex source;
        std::vector<Vertex> vertices;
        std::unordered_map<Vertex, std::uint32_t> position;

        bool contains(Vertex v) const { return position.contains(v); }
        Dist length() const { return static_cast<Dist>(vertices.size() - 1); }
    };

    void add(Vertex r, EdgeId e, Vertex source, std::vector<Vertex> vertices) {
        Entry entry{source, std::move(vertices), {}};
        for (std::uint32_t k = 0; k < entry.vertices.size(); ++k) entry.position.emplace(entry.vertices[k], k);
        by_key_[key(r, e)].push_back(std::move(entry));
        ++count_;
    }

    const std::vector<Entry> &entries(Vertex r, EdgeId e) const {
        static const std::vector<Entry> none;
        auto it = by_key_.find(key(r, e));
        return it == by_key_.end() ? none : it->second;
    }

    /// Shortest c -> r tail among stored paths to r avoiding e that pass through c.
    Dist through(Vertex c, Vertex r, EdgeId e) const {
        Dist best = kUnreachable;
        for (const auto &entry : entries(r, e)) {
            auto it = entry.position.find(c);
            if (it != entry.position.end()) best = std::min(best, entry.length() - it->second);
        }
        return best;
    }

    std::size_t size() const noexcept { return count_; }

private:
    static std::uint64_t key(Vertex r, EdgeId e) { return (static_cast<std::uint64_t>(r) << 32) | e; }
    std::unordered_map<std::uint64_t, std::vector<Entry>> by_key_;
    std::size_t count_ = 0;
};

/// Everything the multi-source pipeline shares between its stages.
struct MsrpState {
    const Graph *g = nullptr;
    AlgoConfig cfg;
    Scales sc;
    std::vector<Vertex> sources;
    LandmarkSets L;
    CenterSets C;
    TreeCache trees;
    std::vector<std::uint32_t> span_of; // window length per center / landmark sink; 0 = none
    std::vector<SmallNearState> small;  // per source index
    std::vector<SpanRows> to_center;    // per source index
    EnumeratedSmallPaths enumerated;
    std::vector<SpanRows> from_center;  // per vertex, filled for centers
    std::vector<std::vector<IntervalDecomposition>> decomposition; // [source index][r]
    std::vector<std::vector<std::vector<Dist>>> mtc;               // [source index][r][pos]
    std::vector<std::vector<std::vector<Dist>>> bottleneck_value;  // [source index][r][interval]
    std::vector<SourceRows> landmark_rows;                          // per source index
    Counters *counters = nullptr;
};

namespace detail {

inline std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline std::uint32_t path_index(const RootedTree &t, Vertex b) { return t.dist(b) - 1; }

} // namespace detail

/**
 * Source -> center replacement values for the edges within span(priority)
 * of each center (and of each landmark that is not a center, with the base
 * span). Paths either are small, or pass a center c' on their suffix with
 * the failed edge off c'c.
 */
inline SpanRows source_to_center_pass(const MsrpState &st, std::size_t si) {
    const auto &g = *st.g;
    const auto &ts = st.trees.at(st.sources[si]);
    const auto &small = st.small[si];
    const auto n = static_cast<Vertex>(g.num_vertices());
    SpanRows rows(n);

    std::vector<Vertex> targets;
    for (Vertex v = 0; v < n; ++v)
        if (st.span_of[v] > 0 && ts.tree.reaches(v) && v != ts.root()) targets.push_back(v);
    const auto &centers = st.C.all;

    AuxGraph aux(1);
    std::vector<NodeId> plain(n, kNoNode);
    for (Vertex c : centers)
        if (ts.tree.reaches(c)) plain[c] = aux.add_node();
    std::vector<NodeId> base(n, kNoNode);
    for (Vertex c : targets) {
        const auto d = ts.dist(c);
        const auto count = std::min(d, st.span_of[c]);
        rows.open(c, d - count, count);
        base[c] = aux.add_nodes(count);
    }
    auto node = [&](Vertex c, std::uint32_t i) {
        return base[c] != kNoNode && rows.covers(c, i) ? base[c] + (i - rows.lo(c)) : kNoNode;
    };

    for (Vertex c : centers)
        if (plain[c] != kNoNode) aux.add_arc(0, plain[c], ts.dist(c));
    std::vector<Vertex> path;
    for (Vertex c : targets) {
        const auto &tc = st.trees.at(c);
        path = canonical_path_vertices(ts.tree, c);
        for (std::uint32_t i = rows.lo(c); i < ts.dist(c); ++i) {
            const NodeId to = node(c, i);
            const Edge e{path[i], path[i + 1]};
            const Vertex b = path[i + 1];
            aux.add_arc(0, to, small.value(c, i));
            for (Vertex c2 : centers) {
                if (c2 == c || plain[c2] == kNoNode || edge_on_path(tc, e, c2)) continue;
                const Dist w = tc.dist(c2);
                if (!ts.lca.is_ancestor(b, c2)) {
                    aux.add_arc(plain[c2], to, w);
                } else if (auto from = node(c2, i); from != kNoNode) {
                    aux.add_arc(from, to, w);
                }
            }
        }
    }

    std::uint64_t window = 0;
    for (Vertex v = 0; v < n; ++v)
        if (st.span_of[v] > 0) window += std::min<std::uint64_t>(st.span_of[v], n);
    check_size_bound("source-center nodes", aux.num_nodes(), 1 + n + window);
    check_size_bound("source-center arcs", aux.num_arcs(), (aux.num_nodes()) * (1 + 2 * centers.size()));

    auto res = aux.solve(0, st.counters);
    for (Vertex c : targets)
        for (std::uint32_t i = rows.lo(c); i < ts.dist(c); ++i) rows.set(c, i, res.dist[node(c, i)]);
    return rows;
}

/// Explicit paths for every small (source, landmark, near edge) entry.
inline EnumeratedSmallPaths enumerate_small_paths(const MsrpState &st) {
    EnumeratedSmallPaths out;
    if (st.small.size() != st.sources.size()) throw std::logic_error("missing small-path predecessor data");
    for (std::size_t si = 0; si < st.sources.size(); ++si) {
        const auto &small = st.small[si];
        if (small.result.pred.empty()) throw std::logic_error("missing small-path predecessor data");
        const auto &ts = *small.tree;
        for (Vertex r : st.L.all) {
            if (r == ts.root() || !ts.tree.reaches(r)) continue;
            const auto d = ts.dist(r);
            std::vector<Vertex> path;
            for (std::uint32_t i = first_near_position(d, st.sc); i < d; ++i) {
                const Dist w = small.value(r, i);
                if (!reachable(w) || static_cast<double>(w) > i + st.sc.near_limit) continue;
                if (path.empty()) path = canonical_path_vertices(ts.tree, r);
                out.add(r, st.g->edge_id(path[i], path[i + 1]), ts.root(), small.path(r, i));
            }
        }
    }
    return out;
}

/**
 * Center -> landmark values for the first span(priority) edges of each
 * canonical c->r path. Only values some source's replacement path through c
 * needs are guaranteed; others are upper bounds or the sentinel.
 */
inline SpanRows center_to_landmark_pass(const MsrpState &st, Vertex c) {
    const auto &g = *st.g;
    const auto &tc = st.trees.at(c);
    const auto n = static_cast<Vertex>(g.num_vertices());
    const auto span = st.sc.span(static_cast<std::uint32_t>(st.C.priority[c]));
    SpanRows rows(n);

    std::vector<Vertex> lms;
    for (Vertex r : st.L.all)
        if (tc.tree.reaches(r)) lms.push_back(r);
    AuxGraph aux(1);
    std::vector<NodeId> plain(n, kNoNode), base(n, kNoNode);
    for (Vertex r : lms) plain[r] = aux.add_node();
    for (Vertex r : lms) {
        if (r == c) continue;
        const auto count = std::min(tc.dist(r), span);
        rows.open(r, 0, count);
        base[r] = aux.add_nodes(count);
    }
    auto node = [&](Vertex r, std::uint32_t j) {
        return base[r] != kNoNode && rows.covers(r, j) ? base[r] + j : kNoNode;
    };

    for (Vertex r : lms) aux.add_arc(0, plain[r], tc.dist(r));
    std::vector<Vertex> path;
    for (Vertex r : lms) {
        if (base[r] == kNoNode) continue;
        path = canonical_path_vertices(tc.tree, r);
        for (std::uint32_t j = 0; j < rows.count(r); ++j) {
            const NodeId to = node(r, j);
            const Edge e{path[j], path[j + 1]};
            const Vertex b = path[j + 1];
            aux.add_arc(0, to, st.enumerated.through(c, r, g.edge_id(e.u, e.v)));
            for (Vertex r2 : lms) {
                if (r2 == r) continue;
                const auto &tr2 = st.trees.at(r2);
                if (edge_on_path(tr2, e, r)) continue;
                const Dist w = tr2.dist(r);
                if (!tc.lca.is_ancestor(b, r2)) {
                    aux.add_arc(plain[r2], to, w);
                } else if (auto from = node(r2, j); from != kNoNode) {
                    aux.add_arc(from, to, w);
                }
            }
        }
    }

    const std::uint64_t nodes_bound = 1 + lms.size() + lms.size() * std::min<std::uint64_t>(span, n);
    check_size_bound("center-landmark nodes", aux.num_nodes(), nodes_bound);
    check_size_bound("center-landmark arcs", aux.num_arcs(), lms.size() + aux.num_nodes() * (1 + 2 * lms.size()));

    auto res = aux.solve(0, st.counters);
    for (Vertex r : lms)
        for (std::uint32_t j = 0; base[r] != kNoNode && j < rows.count(r); ++j) rows.set(r, j, res.dist[node(r, j)]);
    return rows;
}

/**
 * Minimum through the centers bounding e's interval: through the s-side
 * center c1 with a center->landmark value, or through the r-side center c2
 * with a source->center value. Positions outside a window give no certificate.
 */
inline Dist mtc_value(const MsrpState &st, std::size_t si, const std::vector<Vertex> &path, std::uint32_t pos,
                      const Interval &iv) {
    const auto &ts = st.trees.at(st.sources[si]);
    const Vertex r = path.back();
    const Edge e{path[pos], path[pos + 1]};

    Dist first = kUnreachable;
    {
        const Vertex c1 = iv.near_center;
        const auto &t1 = st.trees.at(c1);
        Dist tail;
        if (!edge_on_path(t1, e, r)) {
            tail = t1.dist(r);
        } else {
            tail = st.from_center[c1].get(r, detail::path_index(t1, t1.tree.deeper_endpoint(e.u, e.v)));
        }
        first = add_dist(ts.dist(c1), tail);
    }
    Dist second = kUnreachable;
    {
        const Vertex c2 = iv.far_center;
        second = add_dist(st.to_center[si].get(c2, pos), st.trees.dist(c2, r));
    }
    return std::min(first, second);
}

/// Edge of the interval with the largest MTC; ties go to the smallest edge id.
inline std::uint32_t bottleneck_of_interval(const Graph &g, const std::vector<Vertex> &path, const Interval &iv,
                                            const std::vector<Dist> &mtc_row) {
    if (iv.hi < iv.lo) throw std::invalid_argument("empty interval");
    std::uint32_t best = iv.lo;
    for (std::uint32_t i = iv.lo + 1; i <= iv.hi; ++i) {
        if (mtc_row[i] > mtc_row[best] ||
            (mtc_row[i] == mtc_row[best] &&
             g.edge_id(path[i], path[i + 1]) < g.edge_id(path[best], path[best + 1]))) {
            best = i;
        }
    }
    return best;
}

/**
 * Replacement values for the bottleneck edge of every interval of every
 * source->landmark path of one source. Node [s, r, I] collects the small
 * value, the bottleneck's own MTC, and routes through another landmark r'
 * whose path to r avoids the bottleneck.
 */
inline std::vector<std::vector<Dist>> bottleneck_pass(const MsrpState &st, std::size_t si) {
    const auto &g = *st.g;
    const Vertex s = st.sources[si];
    const auto &ts = st.trees.at(s);
    const auto n = static_cast<Vertex>(g.num_vertices());
    const auto &dec = st.decomposition[si];
    const auto &mtc = st.mtc[si];

    std::vector<Vertex> lms;
    for (Vertex r : st.L.all)
        if (ts.tree.reaches(r)) lms.push_back(r);
    AuxGraph aux(1);
    std::vector<NodeId> plain(n, kNoNode), base(n, kNoNode);
    for (Vertex r : lms) plain[r] = aux.add_node();
    for (Vertex r : lms)
        if (!dec[r].intervals.empty()) base[r] = aux.add_nodes(dec[r].intervals.size());

    for (Vertex r : lms) aux.add_arc(0, plain[r], ts.dist(r));
    std::vector<Vertex> path;
    for (Vertex r : lms) {
        if (base[r] == kNoNode) continue;
        path = canonical_path_vertices(ts.tree, r);
        for (std::uint32_t k = 0; k < dec[r].intervals.size(); ++k) {
            const NodeId to = base[r] + k;
            const auto pos = dec[r].intervals[k].bottleneck;
            const Edge e{path[pos], path[pos + 1]};
            const Vertex b = path[pos + 1];
            aux.add_arc(0, to, st.small[si].value(r, pos));
            aux.add_arc(0, to, mtc[r][pos]);
            for (Vertex r2 : lms) {
                if (r2 == r) continue;
                const auto &tr2 = st.trees.at(r2);
                if (edge_on_path(tr2, e, r)) continue;
                const Dist w = tr2.dist(r);
                if (ts.lca.is_ancestor(b, r2)) {
                    aux.add_arc(0, to, add_dist(mtc[r2][pos], w));
                    aux.add_arc(base[r2] + dec[r2].interval_of(pos), to, w);
                } else {
                    aux.add_arc(plain[r2], to, w);
                }
            }
        }
    }

    const std::uint64_t per_path = 2 * (std::uint64_t{st.sc.top} + 1);
    check_size_bound("bottleneck nodes", aux.num_nodes(), 1 + lms.size() * (1 + per_path));
    check_size_bound("bottleneck arcs", aux.num_arcs(), lms.size() + aux.num_nodes() * (2 + 2 * lms.size()));

    auto res = aux.solve(0, st.counters);
    std::vector<std::vector<Dist>> out(n);
    for (Vertex r : lms) {
        if (base[r] == kNoNode) continue;
        out[r].resize(dec[r].intervals.size());
        for (std::uint32_t k = 0; k < out[r].size(); ++k) out[r][k] = res.dist[base[r] + k];
    }
    return out;
}

/// min(MTC, bottleneck value of the enclosing interval, small value).
inline Dist assemble_landmark_rp(const MsrpState &st, std::size_t si, Vertex r, std::uint32_t pos) {
    const auto k = st.decomposition[si][r].interval_of(pos);
    return std::min({st.mtc[si][r][pos], st.bottleneck_value[si][r][k], st.small[si].value(r, pos)});
}

/// Runs sampling, trees, and every landmark-table stage; leaves results in the state.
inline MsrpState prepare_msrp(const Graph &g, std::vector<Vertex> sources, const AlgoConfig &cfg,
                              Counters *counters = nullptr) {
    cfg.validate();
    MsrpState st;
    st.g = &g;
    st.cfg = cfg;
    st.counters = counters;
    st.sources = detail::sorted_unique(std::move(sources));
    const auto n = static_cast<Vertex>(g.num_vertices());
    st.sc = Scales::make(n, st.sources.size(), cfg);
    st.L = sample_landmarks(g, st.sources, st.sc, cfg.seed);
    st.C = sample_centers(g, st.sources, st.sc, cfg.seed);

    st.trees = TreeCache(n);
    auto roots = st.L.all;
    roots.insert(roots.end(), st.C.all.begin(), st.C.all.end());
    roots.insert(roots.end(), st.sources.begin(), st.sources.end());
    st.trees.build(g, roots, cfg.parallel);

    st.span_of.assign(n, 0);
    for (Vertex r : st.L.all) st.span_of[r] = st.sc.span(0);
    for (Vertex c : st.C.all) st.span_of[c] = st.sc.span(static_cast<std::uint32_t>(st.C.priority[c]));

    const auto sigma = st.sources.size();
    st.small.resize(sigma);
    parallel_for(sigma, cfg.parallel,
                 [&](std::size_t si) { st.small[si] = small_near_pass(g, st.trees.ptr(st.sources[si]), st.sc, counters); });

    st.to_center.resize(sigma);
    parallel_for(sigma, cfg.parallel, [&](std::size_t si) { st.to_center[si] = source_to_center_pass(st, si); });

    st.enumerated = enumerate_small_paths(st);
    st.from_center.resize(n);
    parallel_for(st.C.all.size(), cfg.parallel, [&](std::size_t k) {
        const Vertex c = st.C.all[k];
        st.from_center[c] = center_to_landmark_pass(st, c);
    });

    st.decomposition.assign(sigma, std::vector<IntervalDecomposition>(n));
    st.mtc.assign(sigma, std::vector<std::vector<Dist>>(n));
    parallel_for(sigma, cfg.parallel, [&](std::size_t si) {
        const auto &ts = st.trees.at(st.sources[si]);
        std::uint64_t overruns = 0;
        for (Vertex r : st.L.all) {
            if (r == ts.root() || !ts.tree.reaches(r)) continue;
            auto path = canonical_path_vertices(ts.tree, r);
            auto dec = interval_decomposition(path, st.C);
            auto &row = st.mtc[si][r];
            row.assign(ts.dist(r), kUnreachable);
            for (auto &iv : dec.intervals) {
                const auto len = iv.hi - iv.lo + 1;
                const auto p1 = st.C.priority[iv.near_center];
                const auto p2 = st.C.is_center(iv.far_center) ? st.C.priority[iv.far_center] : 0;
                if (len > st.sc.span(static_cast<std::uint32_t>(std::min(p1, p2)))) ++overruns;
                for (auto i = iv.lo; i <= iv.hi; ++i) row[i] = mtc_value(st, si, path, i, iv);
                iv.bottleneck = bottleneck_of_interval(g, path, iv, row);
            }
            st.decomposition[si][r] = std::move(dec);
        }
        if (counters) counters->interval_overruns += overruns;
    });

    st.bottleneck_value.resize(sigma);
    parallel_for(sigma, cfg.parallel, [&](std::size_t si) { st.bottleneck_value[si] = bottleneck_pass(st, si); });

    st.landmark_rows.resize(sigma);
    parallel_for(sigma, cfg.parallel, [&](std::size_t si) {
        SourceRows rows(st.trees.ptr(st.sources[si]));
        for (Vertex r : st.L.all) {
            if (r == rows.source() || !rows.tree().tree.reaches(r)) continue;
            auto &row = rows.open_row(r);
            for (std::uint32_t i = 0; i < row.size(); ++i) row[i] = assemble_landmark_rp(st, si, r, i);
        }
        st.landmark_rows[si] = std::move(rows);
    });
    return st;
}

/// Multi-source replacement paths for every source, target and canonical path edge.
inline ReplacementTable run_msrp(const Graph &g, std::vector<Vertex> sources, const AlgoConfig &cfg,
                                 Counters *counters = nullptr) {
    if (sources.empty()) throw ValidationError("source set is empty");
    for (Vertex s : sources)
        if (s >= g.num_vertices()) throw ValidationError("source " + std::to_string(s) + " out of range");
    auto st = prepare_msrp(g, std::move(sources), cfg, counters);

    std::vector<SourceRows> finals(st.sources.size());
    parallel_for(st.sources.size(), cfg.parallel, [&](std::size_t si) {
        auto table = open_all_rows(st.trees.ptr(st.sources[si]));
        const auto &lrp = st.landmark_rows[si];
        far_edge_pass(lrp, st.L, st.trees, st.sc, table, counters);
        merge_small_near(st.small[si], table);
        large_near_pass(lrp, st.L, st.trees, st.sc, table, counters);
        finals[si] = std::move(table);
    });
    ReplacementTable out;
    for (auto &rows : finals) out.add_source(std::move(rows));
    return out;
}

} // namespace replpath
