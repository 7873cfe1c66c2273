#pragma once

#include <replpath/types.hpp>

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace replpath {

/**
 * Immutable simple undirected unweighted graph.
 *
 * Adjacency is stored in CSR form with every neighbor list sorted ascending.
 * Each undirected edge gets a dense id in [0, m) in insertion order; the id is
 * reachable both from the (min, max) vertex pair and from every adjacency slot.
 */
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws ValidationError on self-loops, duplicates or
    /// out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        Graph g;
        g.n_ = n;
        g.endpoints_.reserve(edges.size());
        g.ids_.reserve(edges.size() * 2);
        std::vector<std::size_t> degree(n, 0);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            if (u >= n || v >= n) {
                throw ValidationError("edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                                      std::to_string(v) + ") out of range for n=" + std::to_string(n));
            }
            if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
            Edge key{std::min(u, v), std::max(u, v)};
            auto [it, inserted] = g.ids_.emplace(pack(key.u, key.v), static_cast<EdgeId>(i));
            if (!inserted) {
                throw ValidationError("duplicate edge (" + std::to_string(key.u) + "," +
                                      std::to_string(key.v) + ")");
            }
            g.endpoints_.push_back(key);
            ++degree[u];
            ++degree[v];
        }
        g.offsets_.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
        g.neighbors_.resize(g.offsets_[n]);
        g.slot_edge_.resize(g.offsets_[n]);
        std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        for (EdgeId id = 0; id < g.endpoints_.size(); ++id) {
            auto [u, v] = g.endpoints_[id];
            g.neighbors_[fill[u]] = v;
            g.slot_edge_[fill[u]++] = id;
            g.neighbors_[fill[v]] = u;
            g.slot_edge_[fill[v]++] = id;
        }
        for (std::size_t v = 0; v < n; ++v) {
            auto lo = g.offsets_[v], hi = g.offsets_[v + 1];
            std::vector<std::pair<Vertex, EdgeId>> tmp;
            tmp.reserve(hi - lo);
            for (auto k = lo; k < hi; ++k) tmp.emplace_back(g.neighbors_[k], g.slot_edge_[k]);
            std::sort(tmp.begin(), tmp.end());
            for (auto k = lo; k < hi; ++k) {
                g.neighbors_[k] = tmp[k - lo].first;
                g.slot_edge_[k] = tmp[k - lo].second;
            }
        }
        return g;
    }

    std::size_t num_vertices() const noexcept { return n_; }
    std::size_t num_edges() const noexcept { return endpoints_.size(); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    /// Edge ids parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(Vertex v) const {
        return {slot_edge_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

    /// (min, max) endpoints of an edge id.
    Edge endpoints(EdgeId id) const { return endpoints_.at(id); }
    std::span<const Edge> edges() const noexcept { return endpoints_; }

    /// kNoEdge when u and v are not adjacent.
    EdgeId edge_id(Vertex u, Vertex v) const {
        if (u == v) return kNoEdge;
        auto it = ids_.find(pack(std::min(u, v), std::max(u, v)));
        return it == ids_.end() ? kNoEdge : it->second;
    }
    bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v) != kNoEdge; }

    /// Serializes to the "n m" + "u v" edge-list format, edges in id order.
    std::string to_edge_list() const {
        std::ostringstream out;
        out << n_ << ' ' << endpoints_.size() << '\n';
        for (auto [u, v] : endpoints_) out << u << ' ' << v << '\n';
        return out.str();
    }

private:
    static std::uint64_t pack(Vertex a, Vertex b) noexcept {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    std::size_t n_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<Vertex> neighbors_;
    std::vector<EdgeId> slot_edge_;
    std::vector<Edge> endpoints_;
    std::unordered_map<std::uint64_t, EdgeId> ids_;
};

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        // skip blank lines (including a trailing newline)
        if (line.find_first_not_of(" \t") != std::string_view::npos) lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

/// Parses exactly `count` unsigned integers separated by blanks.
inline std::vector<std::uint64_t> parse_uints(std::string_view line, std::size_t count,
                                              std::size_t line_no) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (true) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos == line.size()) break;
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
        if (ec != std::errc{} || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
            throw ParseError("line " + std::to_string(line_no) + ": expected integer in '" +
                             std::string(line) + "'");
        }
        out.push_back(value);
        pos = static_cast<std::size_t>(ptr - line.data());
    }
    if (out.size() != count) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(count) +
                         " integers, got " + std::to_string(out.size()));
    }
    return out;
}

} // namespace detail

/// Parses the edge-list text format: "n m" header, then m lines "u v" (0-based).
inline Graph load_graph(std::string_view text) {
    auto lines = detail::split_lines(text);
    if (lines.empty()) throw ParseError("empty edge list");
    auto header = detail::parse_uints(lines[0], 2, 1);
    auto n = header[0], m = header[1];
    if (n > std::numeric_limits<Vertex>::max() - 1) throw ValidationError("vertex count too large");
    if (lines.size() - 1 != m) {
        throw ParseError("header announces " + std::to_string(m) + " edges, found " +
                         std::to_string(lines.size() - 1));
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto uv = detail::parse_uints(lines[i], 2, i + 1);
        if (uv[0] >= n || uv[1] >= n) {
            throw ValidationError("line " + std::to_string(i + 1) + ": vertex out of range [0," +
                                  std::to_string(n) + ")");
        }
        edges.push_back({static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])});
    }
    return Graph::from_edges(n, edges);
}

} // namespace replpath
