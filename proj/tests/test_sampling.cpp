#include <replpath/sampling.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace replpath;
using namespace testing_support;

static std::vector<Vertex> spread_sources(std::size_t n, std::size_t sigma, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(sigma);
    std::sort(all.begin(), all.end());
    return all;
}

TEST(Scales, Formulae) {
    AlgoConfig cfg;
    auto sc = Scales::make(1'000'000, 1, cfg);
    EXPECT_EQ(sc.log_n, 20u);
    EXPECT_DOUBLE_EQ(sc.unit, 1000.0 * 20);
    EXPECT_DOUBLE_EQ(sc.near_limit, 2 * 1000.0 * 20);
    EXPECT_EQ(sc.top, 10u);
    EXPECT_NEAR(sc.probability(0), 0.004, 1e-12);
    EXPECT_NEAR(sc.probability(3), 0.0005, 1e-12);
}

TEST(Scales, SmallGraphSaturates) {
    AlgoConfig cfg;
    auto sc = Scales::make(4, 1, cfg);
    EXPECT_DOUBLE_EQ(sc.probability(0), 1.0);
    EXPECT_EQ(sc.top, 1u);
    auto L = sample_landmarks(gen::path(4), std::vector<Vertex>{0}, cfg);
    EXPECT_EQ(L.sets.level(0).size(), 4u);
}

TEST(Scales, LogConventionAtLeastOne) {
    EXPECT_EQ(log2_ceil(1), 1u);
    EXPECT_EQ(log2_ceil(2), 1u);
    EXPECT_EQ(log2_ceil(3), 2u);
    EXPECT_EQ(log2_ceil(1024), 10u);
    EXPECT_EQ(log2_ceil(1025), 11u);
}

TEST(Config, Validation) {
    AlgoConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.c_sample = 0.5;
    EXPECT_THROW(cfg.validate(), ValidationError);
    cfg = {};
    cfg.aux_span = 1.5;
    EXPECT_THROW(cfg.validate(), ValidationError);
    cfg = {};
    cfg.near_multiplier = 0.5;
    EXPECT_THROW(cfg.validate(), ValidationError);
    cfg = {};
    cfg.threshold_override = 0.0;
    EXPECT_THROW(cfg.validate(), ValidationError);
}

TEST(Sampling, Deterministic) {
    auto g = gen::path(3000);
    AlgoConfig cfg;
    cfg.seed = 99;
    std::vector<Vertex> src{3, 17};
    auto a = sample_landmarks(g, src, cfg), b = sample_landmarks(g, src, cfg);
    EXPECT_EQ(a.all, b.all);
    for (std::uint32_t k = 0; k < a.sets.levels(); ++k) EXPECT_EQ(a.sets.level(k), b.sets.level(k));
    auto c1 = sample_centers(g, src, cfg), c2 = sample_centers(g, src, cfg);
    EXPECT_EQ(c1.priority, c2.priority);
    cfg.seed = 100;
    EXPECT_NE(sample_landmarks(g, src, cfg).all, a.all);
}

TEST(Sampling, CentersIndependentOfLandmarks) {
    auto g = gen::path(5000);
    AlgoConfig cfg;
    std::vector<Vertex> src{0};
    auto L = sample_landmarks(g, src, cfg);
    auto C = sample_centers(g, src, cfg);
    EXPECT_NE(L.sets.level(0), C.sets.level(0));
}

TEST(Sampling, ForcedMembership) {
    auto g = gen::path(4000);
    AlgoConfig cfg;
    std::vector<Vertex> src{1, 500, 3999};
    auto L = sample_landmarks(g, src, cfg);
    auto C = sample_centers(g, src, cfg);
    for (Vertex s : src) {
        for (std::uint32_t k = 0; k < L.sets.levels(); ++k) EXPECT_TRUE(L.sets.contains(k, s));
        EXPECT_TRUE(C.sets.contains(0, s));
        EXPECT_TRUE(std::binary_search(L.all.begin(), L.all.end(), s));
    }
}

TEST(Sampling, PriorityIsMaxLevel) {
    auto g = gen::path(3000);
    AlgoConfig cfg;
    auto C = sample_centers(g, std::vector<Vertex>{0}, cfg);
    for (Vertex v = 0; v < 3000; ++v) {
        std::int32_t expect = -1;
        for (std::uint32_t k = 0; k < C.sets.levels(); ++k)
            if (C.sets.contains(k, v)) expect = static_cast<std::int32_t>(k);
        EXPECT_EQ(C.priority[v], expect);
    }
}

TEST(Sampling, SaturatedCentersHaveTopPriority) {
    auto g = gen::cycle(6);
    AlgoConfig cfg;
    std::vector<Vertex> src{0, 1, 2, 3, 4, 5};
    auto sc = Scales::make(6, 6, cfg);
    auto C = sample_centers(g, src, sc, cfg.seed);
    if (sc.probability(sc.top) >= 1.0) {
        for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(C.priority[v], static_cast<std::int32_t>(sc.top));
    }
    // n = 4, sigma = 1: every level saturates
    auto C4 = sample_centers(gen::path(4), std::vector<Vertex>{0}, cfg);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(C4.priority[v], 1);
}

TEST(Sampling, EmptySourcesRejected) {
    AlgoConfig cfg;
    EXPECT_THROW(sample_landmarks(gen::path(3), std::vector<Vertex>{}, cfg), ValidationError);
}

TEST(Sampling, CenterSizesMonteCarlo) {
    const std::size_t n = 10'000, sigma = 4;
    auto g = gen::path(n);
    AlgoConfig cfg;
    const auto sc = Scales::make(n, sigma, cfg);
    std::vector<double> mean(sc.top + 1, 0.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto src = spread_sources(n, sigma, seed);
        auto C = sample_centers(g, src, sc, seed);
        for (std::uint32_t k = 0; k <= sc.top; ++k) {
            const double size = static_cast<double>(C.sets.level(k).size());
            const double bound = 4.0 / std::ldexp(1.0, static_cast<int>(k)) * std::sqrt(double(n * sigma)) *
                                 (1 + std::log(double(n)));
            EXPECT_LE(size, 3 * bound) << "k=" << k << " seed=" << seed;
            mean[k] += size / 20;
        }
    }
    for (std::uint32_t k = 0; k <= sc.top; ++k) {
        const double expect = std::min(1.0, sc.probability(k)) * n;
        EXPECT_NEAR(mean[k], expect, 0.25 * expect + 5) << "k=" << k;
    }
}

TEST(Sampling, LandmarkUnionSize) {
    const std::size_t n = 10'000;
    auto g = gen::path(n);
    AlgoConfig cfg;
    for (std::size_t sigma : {1u, 4u, 16u}) {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            cfg.seed = seed;
            auto L = sample_landmarks(g, spread_sources(n, sigma, seed), cfg);
            const double bound = 8 * cfg.c_sample * std::sqrt(double(n * sigma)) * std::log2(double(n));
            EXPECT_LE(double(L.all.size()), bound);
        }
    }
}
