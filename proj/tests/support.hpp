#pragma once

#include <replpath/generators.hpp>
#include <replpath/oracle.hpp>

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace replpath;

inline Graph make(std::size_t n, std::initializer_list<Edge> edges) {
    std::vector<Edge> list(edges);
    return Graph::from_edges(n, list);
}

/// Connected graph with n vertices and a density drawn from the seed.
inline Graph random_graph(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 7919 + 17);
    std::uniform_int_distribution<std::size_t> extra(0, 2 * n);
    return gen::random_connected(n, extra(rng), seed);
}

/// Parent-array random tree on n vertices (parent[v] < v), relabelled.
inline Graph random_tree(std::size_t n, std::uint64_t seed) { return gen::random_connected(n, 0, seed); }

inline std::vector<Vertex> naive_path_to_root(const ShortestPathTree &t, Vertex v) {
    std::vector<Vertex> out{v};
    while (v != t.root) {
        v = t.parent[v];
        out.push_back(v);
    }
    return out;
}

} // namespace testing_support
