#include <replpath/distance_store.hpp>
#include <replpath/lca.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <random>

using namespace replpath;
using namespace testing_support;

TEST(LoadGraph, Triangle) {
    auto g = load_graph("3 3\n0 1\n1 2\n0 2");
    EXPECT_EQ(g.num_vertices(), 3u);
    EXPECT_EQ(g.num_edges(), 3u);
    EXPECT_TRUE(g.has_edge(2, 0));
    EXPECT_EQ(g.edge_id(2, 0), 2u);
}

TEST(LoadGraph, RejectsSelfLoop) { EXPECT_THROW(load_graph("2 1\n0 0"), ValidationError); }
TEST(LoadGraph, RejectsDuplicate) { EXPECT_THROW(load_graph("4 2\n0 1\n0 1"), ValidationError); }
TEST(LoadGraph, RejectsDuplicateReversed) { EXPECT_THROW(load_graph("4 2\n0 1\n1 0"), ValidationError); }
TEST(LoadGraph, RejectsOutOfRange) { EXPECT_THROW(load_graph("2 1\n0 2"), ValidationError); }
TEST(LoadGraph, RejectsMalformedLine) { EXPECT_THROW(load_graph("3 1\n0 x"), ParseError); }
TEST(LoadGraph, RejectsShortLine) { EXPECT_THROW(load_graph("3 1\n0"), ParseError); }
TEST(LoadGraph, RejectsCountMismatch) { EXPECT_THROW(load_graph("3 2\n0 1"), ParseError); }
TEST(LoadGraph, RoundTrip) {
    auto g = gen::grid(3, 2);
    auto h = load_graph(g.to_edge_list());
    ASSERT_EQ(h.num_edges(), g.num_edges());
    for (EdgeId id = 0; id < g.num_edges(); ++id) EXPECT_EQ(h.endpoints(id), g.endpoints(id));
}

TEST(GraphInvariants, SortedSymmetricBijective) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_graph(30, seed);
        std::vector<bool> seen(g.num_edges(), false);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            auto nb = g.neighbors(v);
            EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
            for (std::size_t k = 0; k < nb.size(); ++k) {
                auto nb2 = g.neighbors(nb[k]);
                EXPECT_TRUE(std::binary_search(nb2.begin(), nb2.end(), v));
                EXPECT_EQ(g.incident_edges(v)[k], g.edge_id(v, nb[k]));
                seen[g.incident_edges(v)[k]] = true;
            }
        }
        for (EdgeId id = 0; id < g.num_edges(); ++id) {
            EXPECT_TRUE(seen[id]);
            auto [a, b] = g.endpoints(id);
            EXPECT_LT(a, b);
            EXPECT_EQ(g.edge_id(a, b), id);
        }
    }
}

TEST(BfsTree, Path) {
    auto t = bfs_tree(gen::path(4), 0);
    EXPECT_EQ(t.dist[3], 3u);
    EXPECT_EQ(t.parent[3], 2u);
    EXPECT_EQ(t.dist[0], 0u);
    EXPECT_EQ(t.parent[0], kNoVertex);
}

TEST(BfsTree, CycleTieBreak) {
    auto t = bfs_tree(gen::cycle(6), 0);
    EXPECT_EQ(t.dist[3], 3u);
    EXPECT_EQ(t.parent[3], 2u);
}

TEST(BfsTree, Disconnected) {
    auto t = bfs_tree(make(4, {{0, 1}, {2, 3}}), 0);
    EXPECT_EQ(t.dist[2], kUnreachable);
    EXPECT_EQ(t.dist[3], kUnreachable);
    EXPECT_EQ(t.parent[2], kNoVertex);
    EXPECT_EQ(t.bfs_order.size(), 2u);
}

TEST(BfsTree, RootOutOfRange) { EXPECT_THROW(bfs_tree(gen::path(3), 3), std::out_of_range); }

// Textbook BFS written independently of the library.
static std::vector<Dist> reference_bfs(const Graph &g, Vertex s) {
    std::vector<Dist> d(g.num_vertices(), kUnreachable);
    std::deque<Vertex> q{s};
    d[s] = 0;
    while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto [a, b] : g.edges()) {
            Vertex w = a == u ? b : (b == u ? a : kNoVertex);
            if (w != kNoVertex && d[w] == kUnreachable) {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
        }
    }
    return d;
}

TEST(BfsTree, MatchesReferenceAndParentRule) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_graph(25 + seed, seed);
        for (Vertex root : {Vertex{0}, Vertex{7}}) {
            auto t = bfs_tree(g, root);
            EXPECT_EQ(t.dist, reference_bfs(g, root));
            for (auto [u, v] : g.edges()) {
                auto du = static_cast<long>(t.dist[u]), dv = static_cast<long>(t.dist[v]);
                EXPECT_LE(std::abs(du - dv), 1);
            }
            for (Vertex v = 0; v < g.num_vertices(); ++v) {
                if (v == root) continue;
                Vertex best = kNoVertex;
                for (Vertex w : g.neighbors(v))
                    if (t.dist[w] + 1 == t.dist[v]) best = std::min(best, w);
                EXPECT_EQ(t.parent[v], best);
            }
            for (std::size_t i = 1; i < t.bfs_order.size(); ++i)
                EXPECT_LE(t.dist[t.bfs_order[i - 1]], t.dist[t.bfs_order[i]]);
        }
    }
}

TEST(CanonicalPath, Examples) {
    auto t = bfs_tree(gen::path(3), 0);
    EXPECT_EQ(canonical_path_edges(t, 2), (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_TRUE(canonical_path_edges(t, 0).empty());
    auto c = bfs_tree(gen::cycle(6), 0);
    EXPECT_EQ(canonical_path_edges(c, 3), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(CanonicalPath, UnreachableThrows) {
    auto t = bfs_tree(make(4, {{0, 1}, {2, 3}}), 0);
    EXPECT_THROW(canonical_path_edges(t, 3), std::invalid_argument);
}

TEST(Lca, Examples) {
    auto p = make_tree(gen::path(4), 0);
    EXPECT_EQ(p->lca.lca(2, 3), 2u);
    auto star = make_tree(make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), 0);
    EXPECT_EQ(star->lca.lca(1, 2), 0u);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(star->lca.lca(v, v), v);
}

TEST(Lca, OutsideComponentThrows) {
    auto t = make_tree(make(4, {{0, 1}, {2, 3}}), 0);
    EXPECT_THROW(t->lca.lca(0, 2), std::invalid_argument);
}

TEST(Lca, MatchesNaiveWalk) {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const std::size_t n = 500;
        auto g = seed % 2 ? random_tree(n, seed) : random_graph(n, seed);
        auto rt = make_tree(g, static_cast<Vertex>(seed * 31 % n));
        std::uniform_int_distribution<Vertex> pick(0, n - 1);
        for (int q = 0; q < 10000; ++q) {
            Vertex u = pick(rng), v = pick(rng);
            auto pu = naive_path_to_root(rt->tree, u), pv = naive_path_to_root(rt->tree, v);
            Vertex naive = kNoVertex;
            for (Vertex a : pu)
                if (std::find(pv.begin(), pv.end(), a) != pv.end()) {
                    naive = a;
                    break;
                }
            Vertex got = rt->lca.lca(u, v);
            ASSERT_EQ(got, naive);
            EXPECT_EQ(rt->lca.lca(v, u), got);
            EXPECT_LE(rt->dist(got), std::min(rt->dist(u), rt->dist(v)));
        }
    }
}

TEST(EdgeOnPath, Examples) {
    auto g = gen::path(4);
    auto t = make_tree(g, 0);
    EXPECT_TRUE(edge_on_path(*t, {1, 2}, 3));
    EXPECT_TRUE(edge_on_path(*t, {2, 1}, 3));
    EXPECT_FALSE(edge_on_path(*t, {2, 3}, 1));
    auto tri = make_tree(gen::cycle(3), 0);
    EXPECT_FALSE(edge_on_path(*tri, {1, 2}, 2));
}

TEST(EdgeOnPath, MatchesPathScan) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 10 + seed * 9;
        auto g = seed % 2 ? random_tree(n, seed) : random_graph(n, seed);
        auto t = make_tree(g, 0);
        for (Vertex v = 0; v < n; ++v) {
            auto path = canonical_path_edges(t->tree, v);
            for (auto [a, b] : g.edges()) {
                bool scan = std::any_of(path.begin(), path.end(), [&](Edge e) {
                    return (e.u == a && e.v == b) || (e.u == b && e.v == a);
                });
                ASSERT_EQ(edge_on_path(*t, {a, b}, v), scan);
            }
        }
    }
}

TEST(DistanceStore, AgreesWithTrees) {
    auto g = random_graph(40, 3);
    DistanceStore store;
    std::vector<ShortestPathTree> trees;
    for (Vertex r : {0u, 5u, 39u}) {
        trees.push_back(bfs_tree(g, r));
        store.insert_tree(trees.back());
    }
    for (const auto &t : trees)
        for (Vertex v = 0; v < 40; ++v) EXPECT_EQ(store.get(t.root, v), t.dist[v]);
    EXPECT_THROW(store.get(1, 0), std::out_of_range);
}
