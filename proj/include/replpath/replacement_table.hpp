#pragma once

#include <replpath/graph.hpp>
#include <replpath/lca.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace replpath {

/**
 * Replacement distances from one source. rows[t][i] belongs to the i-th edge
 * of the canonical source->t path (the edge whose deeper endpoint has depth
 * i + 1). A row is either empty (not computed) or has exactly dist(s, t) slots.
 */
class SourceRows {
public:
    SourceRows() = default;
    explicit SourceRows(TreePtr tree) : tree_(std::move(tree)), rows_(tree_->tree.size()) {}

    Vertex source() const { return tree_->root(); }
    const RootedTree &tree() const { return *tree_; }
    const TreePtr &tree_ptr() const { return tree_; }
    std::size_t num_vertices() const { return rows_.size(); }

    /// Allocates the row for t filled with the sentinel (no-op when present or t unreachable).
    std::vector<Dist> &open_row(Vertex t) {
        auto &row = rows_[t];
        if (row.empty() && tree_->tree.reaches(t)) row.assign(tree_->dist(t), kUnreachable);
        return row;
    }
    bool has_row(Vertex t) const { return !rows_[t].empty(); }
    const std::vector<Dist> &row(Vertex t) const { return rows_[t]; }
    std::vector<Dist> &row(Vertex t) { return rows_[t]; }

    void merge_min(Vertex t, std::uint32_t pos, Dist value) {
        auto &slot = rows_[t][pos];
        slot = std::min(slot, value);
    }

    /// Path index of e on the canonical source->t path, if it lies there.
    std::optional<std::uint32_t> position(Edge e, Vertex t) const {
        if (!edge_on_path(*tree_, e, t)) return std::nullopt;
        return tree_->dist(tree_->tree.deeper_endpoint(e.u, e.v)) - 1;
    }

    /// Stored value for a keyed edge; dist(s, t) when e is off the canonical
    /// path. Throws std::out_of_range when the row was never computed.
    Dist lookup(Vertex t, Edge e) const {
        auto pos = position(e, t);
        if (!pos) return tree_->dist(t);
        if (!has_row(t)) throw std::out_of_range("no replacement row for target " + std::to_string(t));
        return rows_[t][*pos];
    }

private:
    TreePtr tree_;
    std::vector<std::vector<Dist>> rows_;
};

struct ReplacementRecord {
    Vertex source;
    Vertex target;
    EdgeId edge;
    Edge endpoints; // (min, max)
    Dist dist;

    friend bool operator==(const ReplacementRecord &, const ReplacementRecord &) = default;
};

/// Map (source, target, path edge) -> replacement distance over all sources.
class ReplacementTable {
public:
    void add_source(SourceRows rows) {
        const auto s = rows.source();
        by_source_.insert_or_assign(s, std::move(rows));
    }

    bool has_source(Vertex s) const { return by_source_.contains(s); }
    const SourceRows &source(Vertex s) const {
        auto it = by_source_.find(s);
        if (it == by_source_.end()) throw std::out_of_range("unknown source " + std::to_string(s));
        return it->second;
    }
    SourceRows &source(Vertex s) {
        auto it = by_source_.find(s);
        if (it == by_source_.end()) throw std::out_of_range("unknown source " + std::to_string(s));
        return it->second;
    }
    std::vector<Vertex> sources() const {
        std::vector<Vertex> out;
        for (const auto &[s, _] : by_source_) out.push_back(s);
        return out;
    }

    /// Keyed value, or nullopt when e is not on the canonical s->t path.
    std::optional<Dist> find(Vertex s, Vertex t, Edge e) const {
        const auto &rows = source(s);
        auto pos = rows.position(e, t);
        if (!pos || !rows.has_row(t)) return std::nullopt;
        return rows.row(t)[*pos];
    }

    /// Every keyed triple ordered by source, target, then edge id.
    std::vector<ReplacementRecord> records(const Graph &g) const {
        std::vector<ReplacementRecord> out;
        for (const auto &[s, rows] : by_source_) {
            const auto &tree = rows.tree().tree;
            for (Vertex t = 0; t < rows.num_vertices(); ++t) {
                if (!rows.has_row(t)) continue;
                const auto first = out.size();
                Vertex child = t;
                for (auto i = static_cast<std::ptrdiff_t>(rows.row(t).size()) - 1; i >= 0; --i) {
                    Vertex parent = tree.parent[child];
                    Edge key{std::min(parent, child), std::max(parent, child)};
                    out.push_back({s, t, g.edge_id(parent, child), key, rows.row(t)[static_cast<std::size_t>(i)]});
                    child = parent;
                }
                std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
                          [](const auto &a, const auto &b) { return a.edge < b.edge; });
            }
        }
        return out;
    }

    std::size_t size() const {
        std::size_t total = 0;
        for (const auto &[s, rows] : by_source_)
            for (Vertex t = 0; t < rows.num_vertices(); ++t) total += rows.row(t).size();
        return total;
    }

private:
    std::map<Vertex, SourceRows> by_source_;
};

} // namespace replpath
