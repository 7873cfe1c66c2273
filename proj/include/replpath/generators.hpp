#pragma once

#include <replpath/graph.hpp>
#include <replpath/oracle.hpp>

#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace replpath::gen {

inline bool is_connected(const Graph &g) {
    if (g.num_vertices() == 0) return true;
    auto d = bfs_without_edge(g, 0, kNoEdge);
    return std::all_of(d.begin(), d.end(), [](Dist x) { return reachable(x); });
}

inline Graph cycle(std::size_t n) {
    if (n < 3) throw ValidationError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.push_back({v, static_cast<Vertex>((v + 1) % n)});
    return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
    if (n < 1) throw ValidationError("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph::from_edges(n, edges);
}

/// w x h grid; vertex (x, y) has id y * w + x.
inline Graph grid(std::size_t w, std::size_t h) {
    if (w < 1 || h < 1) throw ValidationError("grid needs positive sides");
    std::vector<Edge> edges;
    for (std::size_t y = 0; y < h; ++y)
        for (std::size_t x = 0; x < w; ++x) {
            auto id = static_cast<Vertex>(y * w + x);
            if (x + 1 < w) edges.push_back({id, id + 1});
            if (y + 1 < h) edges.push_back({id, static_cast<Vertex>(id + w)});
        }
    return Graph::from_edges(w * h, edges);
}

/// G(n, p); resampled until connected, at most 100 attempts.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw ValidationError("erdos-renyi needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng)) edges.push_back({u, v});
        auto g = Graph::from_edges(n, edges);
        if (is_connected(g)) return g;
    }
    throw ValidationError("erdos-renyi(" + std::to_string(n) + ", " + std::to_string(p) +
                          ") not connected after 100 attempts");
}

/// Path 0..n-1 plus `chords` distinct random non-path edges.
inline Graph path_plus_chords(std::size_t n, std::size_t chords, std::uint64_t seed) {
    if (n < 2) throw ValidationError("path-plus-chords needs n >= 2");
    const std::size_t available = n * (n - 1) / 2 - (n - 1);
    if (chords > available) throw ValidationError("too many chords for n=" + std::to_string(n));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    std::set<std::pair<Vertex, Vertex>> seen;
    while (seen.size() < chords) {
        Vertex a = pick(rng), b = pick(rng);
        if (a > b) std::swap(a, b);
        if (b - a < 2 || !seen.emplace(a, b).second) continue;
        edges.push_back({a, b});
    }
    return Graph::from_edges(n, edges);
}

/// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected(std::size_t n, std::size_t extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (Vertex v = 1; v < n; ++v) {
        Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
        edges.push_back({u, v});
        seen.emplace(u, v);
    }
    const std::size_t cap = n * (n - 1) / 2;
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    for (std::size_t added = 0; added < extra && seen.size() < cap;) {
        Vertex a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!seen.emplace(a, b).second) continue;
        edges.push_back({a, b});
        ++added;
    }
    // relabel so ids carry no structure
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), Vertex{0});
    std::shuffle(label.begin(), label.end(), rng);
    for (auto &[u, v] : edges) {
        u = label[u];
        v = label[v];
    }
    return Graph::from_edges(n, edges);
}

} // namespace replpath::gen
