#include <replpath/pair_rp.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

using namespace replpath;
using namespace testing_support;

TEST(PairRp, CycleDetour) {
    auto pr = pair_replacement_paths(gen::cycle(6), 0, 2);
    EXPECT_EQ(pr.path, (std::vector<Edge>{{0, 1}, {1, 2}}));
    EXPECT_EQ(pr.dist, (std::vector<Dist>{4, 4}));
}

TEST(PairRp, Bridge) {
    auto pr = pair_replacement_paths(gen::path(3), 0, 2);
    EXPECT_EQ(pr.dist, (std::vector<Dist>{kUnreachable, kUnreachable}));
}

TEST(PairRp, SameVertex) { EXPECT_TRUE(pair_replacement_paths(gen::cycle(5), 3, 3).dist.empty()); }

TEST(PairRp, Unreachable) {
    EXPECT_THROW(pair_replacement_paths(make(4, {{0, 1}, {2, 3}}), 0, 3), std::invalid_argument);
}

TEST(PairRp, AllCycles) {
    for (std::size_t n = 3; n <= 64; ++n) {
        auto g = gen::cycle(n);
        for (Vertex t = 1; t < n; ++t) {
            auto pr = pair_replacement_paths(g, 0, t);
            for (Dist d : pr.dist) EXPECT_EQ(d, n - pr.path.size());
        }
    }
}

TEST(PairRp, RandomMatchesOracle) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 10 + seed % 51;
        auto g = random_graph(n, seed);
        const Vertex s = static_cast<Vertex>(seed % n), t = static_cast<Vertex>((seed * 13 + 5) % n);
        auto pr = pair_replacement_paths(g, s, t);
        ASSERT_EQ(pr.dist.size(), pr.path.size());
        const Dist base = static_cast<Dist>(pr.path.size());
        for (std::size_t i = 0; i < pr.path.size(); ++i) {
            ASSERT_EQ(pr.dist[i], brute_force_rp(g, s, t, pr.path[i])) << "seed " << seed << " i " << i;
            EXPECT_GE(pr.dist[i], base);
        }
    }
}

TEST(PairRp, AllPathEdgesOfForty) {
    auto g = random_graph(40, 1234);
    auto ts = bfs_tree(g, 0);
    for (Vertex t = 1; t < 40; ++t) {
        auto pr = pair_replacement_paths(g, 0, t);
        for (std::size_t i = 0; i < pr.path.size(); ++i) EXPECT_EQ(pr.dist[i], brute_force_rp(g, 0, t, pr.path[i]));
    }
}

TEST(PairRp, CrossingEdgeCertificate) {
    // every single non-path edge crossing the cut is an upper bound
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_graph(30, seed);
        auto ts = bfs_tree(g, 0), tt_tree = bfs_tree(g, 29);
        auto pr = pair_replacement_paths(g, ts, tt_tree.dist, 29);
        auto lca = LcaIndex(ts);
        for (std::size_t i = 0; i < pr.path.size(); ++i) {
            const Vertex below = pr.path[i].v;
            for (auto [a, b] : g.edges()) {
                for (int f = 0; f < 2; ++f) {
                    Vertex x = f ? b : a, y = f ? a : b;
                    if (lca.is_ancestor(below, x) || !lca.is_ancestor(below, y)) continue;
                    if (x == pr.path[i].u && y == below) continue;
                    EXPECT_GE(ts.dist[x] + 1 + tt_tree.dist[y], pr.dist[i]);
                }
            }
        }
    }
}
