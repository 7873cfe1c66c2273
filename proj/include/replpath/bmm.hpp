#pragma once

#include <replpath/msrp.hpp>

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

namespace replpath {

/// Square 0/1 matrix. Text form: "n" on the first line, then n rows of n characters '0'/'1'.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(std::size_t n) : n_(n), bits_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool at(std::size_t r, std::size_t c) const { return bits_[r * n_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool v = true) { bits_[r * n_ + c] = v ? 1 : 0; }
    std::size_t ones() const {
        std::size_t k = 0;
        for (auto b : bits_) k += b;
        return k;
    }
    bool operator==(const BoolMatrix &) const = default;

    static BoolMatrix parse(std::string_view text) {
        auto lines = detail::split_lines(text);
        if (lines.empty()) throw ParseError("empty matrix");
        const auto n = static_cast<std::size_t>(detail::parse_uints(lines[0], 1, 1)[0]);
        if (lines.size() != n + 1) {
            throw ParseError("matrix header announces " + std::to_string(n) + " rows, found " +
                             std::to_string(lines.size() - 1));
        }
        BoolMatrix m(n);
        for (std::size_t r = 0; r < n; ++r) {
            auto row = lines[r + 1];
            while (!row.empty() && (row.back() == ' ' || row.back() == '\t')) row.remove_suffix(1);
            if (row.size() != n) throw ParseError("row " + std::to_string(r) + " must have " + std::to_string(n) + " cells");
            for (std::size_t c = 0; c < n; ++c) {
                if (row[c] != '0' && row[c] != '1') throw ParseError("row " + std::to_string(r) + ": cells must be 0 or 1");
                m.set(r, c, row[c] == '1');
            }
        }
        return m;
    }

    std::string to_string() const {
        std::string out = std::to_string(n_) + "\n";
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) out += at(r, c) ? '1' : '0';
            out += '\n';
        }
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// Triple-loop boolean product.
inline BoolMatrix direct_product(const BoolMatrix &a, const BoolMatrix &b) {
    if (a.size() != b.size()) throw ValidationError("matrix dimensions differ");
    const auto n = a.size();
    BoolMatrix c(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (a.at(x, y))
                for (std::size_t z = 0; z < n; ++z)
                    if (b.at(y, z)) c.set(x, z);
    return c;
}

/**
 * One reduction graph. Sizes: `padded` rows after zero padding, `spine` vertices
 * per source path, `rows_per_graph` = sources * spine.
 *
 * Layout: a(x) = x, b(y) = padded + y, c(z) = 2 padded + z, then the spine
 * vertices, then connector interiors. Spine vertex k (0-based) is the k-th
 * vertex of the source paths laid end to end; each path ends at its source.
 */
struct ReductionGraph {
    Graph g;
    std::vector<Vertex> sources;
    std::size_t padded = 0;
    std::size_t spine = 0;
    std::size_t rows_per_graph = 0;
    std::size_t instance = 0; // 0-based

    Vertex a(std::size_t x) const { return static_cast<Vertex>(x); }
    Vertex b(std::size_t y) const { return static_cast<Vertex>(padded + y); }
    Vertex c(std::size_t z) const { return static_cast<Vertex>(2 * padded + z); }
    Vertex spine_vertex(std::size_t k) const { return static_cast<Vertex>(3 * padded + k); }

    /// Matrix row decoded from source j at spine position p (both 0-based).
    std::size_t row(std::size_t j, std::size_t p) const { return instance * rows_per_graph + j * spine + p; }
    /// Distance to c(z) that marks the row of position p as hitting column z.
    Dist present_distance(std::size_t p) const {
        // (spine - 1 - p) along the spine, 2p + 2 on the connector, then a-b-c
        return static_cast<Dist>(spine + p + 3);
    }
};

/// Spine length q with q^2 * sigma >= n.
inline std::size_t reduction_spine(std::size_t n, std::size_t sigma) {
    if (sigma == 0) throw ValidationError("sigma must be at least 1");
    auto q = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n) / static_cast<double>(sigma))));
    q = std::max<std::size_t>(q, 1);
    while ((q - 1) * (q - 1) * sigma >= n && q > 1) --q;
    while (q * q * sigma < n) ++q;
    return q;
}

/// Graph for instance i (0-based) of the reduction; padding rows and columns are zero.
inline ReductionGraph build_reduction_graph(const BoolMatrix &A, const BoolMatrix &B, std::size_t sigma, std::size_t i) {
    if (A.size() != B.size()) throw ValidationError("matrix dimensions differ");
    const std::size_t n = A.size();
    ReductionGraph out;
    out.spine = reduction_spine(n, sigma);
    out.padded = sigma * out.spine * out.spine;
    out.rows_per_graph = sigma * out.spine;
    out.instance = i;
    if (i >= out.spine) throw ValidationError("instance index out of range");
    const auto q = out.spine, N = out.padded, w = out.rows_per_graph;

    std::vector<Edge> edges;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (A.at(x, y)) edges.push_back({out.a(x), out.b(y)});
            if (B.at(x, y)) edges.push_back({out.b(x), out.c(y)});
        }
    Vertex next = static_cast<Vertex>(3 * N + w);
    for (std::size_t j = 0; j < sigma; ++j) {
        for (std::size_t p = 0; p + 1 < q; ++p) edges.push_back({out.spine_vertex(j * q + p), out.spine_vertex(j * q + p + 1)});
        out.sources.push_back(out.spine_vertex(j * q + q - 1));
        for (std::size_t p = 0; p < q; ++p) {
            // 2p + 1 interior vertices
            Vertex prev = out.spine_vertex(j * q + p);
            for (std::size_t k = 0; k < 2 * p + 1; ++k) {
                edges.push_back({prev, next});
                prev = next++;
            }
            edges.push_back({prev, out.a(i * w + j * q + p)});
        }
    }
    const std::uint64_t vertex_bound = 4 * N + w;
    const std::uint64_t edge_bound = A.ones() + B.ones() + w * (q + 2);
    check_size_bound("reduction vertices", next, vertex_bound);
    check_size_bound("reduction edges", edges.size(), edge_bound);
    out.g = Graph::from_edges(next, edges);
    return out;
}

/// Reads the rows of one instance from a replacement table over its sources.
inline void decode_reduction(const ReductionGraph &rg, const ReplacementTable &table, BoolMatrix &C) {
    const auto n = C.size();
    for (std::size_t j = 0; j < rg.sources.size(); ++j) {
        const auto &rows = table.source(rg.sources[j]);
        for (std::size_t p = 0; p < rg.spine; ++p) {
            const auto x = rg.row(j, p);
            if (x >= n) continue;
            for (std::size_t z = 0; z < n; ++z) {
                const Vertex t = rg.c(z);
                Dist d;
                if (p == 0) {
                    d = rows.tree().dist(t);
                } else {
                    // the spine edge just before position p cuts off every earlier row
                    d = rows.lookup(t, {rg.spine_vertex(j * rg.spine + p - 1), rg.spine_vertex(j * rg.spine + p)});
                }
                if (d == rg.present_distance(p)) C.set(x, z);
            }
        }
    }
}

/// C = A x B through one multi-source run per reduction graph.
inline BoolMatrix boolean_multiply(const BoolMatrix &A, const BoolMatrix &B, std::size_t sigma, const AlgoConfig &cfg) {
    if (A.size() != B.size()) throw ValidationError("matrix dimensions differ");
    const auto instances = reduction_spine(A.size(), sigma);
    BoolMatrix C(A.size());
    std::vector<ReductionGraph> graphs(instances);
    std::vector<ReplacementTable> tables(instances);
    AlgoConfig inner = cfg;
    inner.parallel = 1;
    parallel_for(instances, cfg.parallel, [&](std::size_t i) {
        graphs[i] = build_reduction_graph(A, B, sigma, i);
        tables[i] = run_msrp(graphs[i].g, graphs[i].sources, inner);
    });
    for (std::size_t i = 0; i < instances; ++i) decode_reduction(graphs[i], tables[i], C);
    return C;
}

} // namespace replpath
