#include <replpath/bmm.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace replpath;

namespace {

BoolMatrix identity(std::size_t n) {
    BoolMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) m.set(k, k);
    return m;
}

BoolMatrix random_matrix(std::size_t n, double density, std::mt19937_64 &rng) {
    std::bernoulli_distribution bit(density);
    BoolMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, bit(rng));
    return m;
}

} // namespace

TEST(BoolMatrixText, RoundTrip) {
    auto m = BoolMatrix::parse("3\n101\n010\n001\n");
    EXPECT_TRUE(m.at(0, 0));
    EXPECT_FALSE(m.at(0, 1));
    EXPECT_EQ(m.ones(), 4u);
    EXPECT_EQ(m.to_string(), "3\n101\n010\n001\n");
    EXPECT_THROW(BoolMatrix::parse("2\n10\n"), ParseError);
    EXPECT_THROW(BoolMatrix::parse("2\n10\n1x\n"), ParseError);
    EXPECT_THROW(BoolMatrix::parse("2\n101\n10\n"), ParseError);
}

TEST(Reduction, ZeroMatricesHaveNoMatrixEdges) {
    BoolMatrix zero(4);
    auto rg = build_reduction_graph(zero, zero, 1, 0);
    for (auto [u, v] : rg.g.edges()) {
        EXPECT_GE(std::max(u, v), 3 * rg.padded) << "edge inside the matrix layers";
    }
    EXPECT_EQ(boolean_multiply(zero, zero, 1, AlgoConfig{}), zero);
}

TEST(Reduction, SizesAndInstanceCount) {
    std::mt19937_64 rng(5);
    for (std::size_t n : {1, 3, 4, 7, 9}) {
        for (std::size_t sigma : {1, 2, 4}) {
            auto A = random_matrix(n, 0.3, rng), B = random_matrix(n, 0.3, rng);
            const auto q = reduction_spine(n, sigma);
            EXPECT_GE(q * q * sigma, n);
            EXPECT_TRUE(q == 1 || (q - 1) * (q - 1) * sigma < n);
            for (std::size_t i = 0; i < q; ++i) {
                auto rg = build_reduction_graph(A, B, sigma, i);
                EXPECT_EQ(rg.sources.size(), sigma);
                EXPECT_EQ(rg.g.num_vertices(), 4 * rg.padded + rg.rows_per_graph);
                EXPECT_LE(rg.g.num_edges(), A.ones() + B.ones() + rg.rows_per_graph * (q + 2));
            }
            EXPECT_THROW(build_reduction_graph(A, B, sigma, q), ValidationError);
        }
    }
}

TEST(Reduction, ConnectorLengthsGrowAlongTheSpine) {
    BoolMatrix A(4), B(4);
    auto rg = build_reduction_graph(A, B, 1, 0);
    ASSERT_EQ(rg.spine, 2u);
    auto d = bfs_tree(rg.g, rg.sources[0]).dist;
    // source is spine position 1; position 0 sits one step back
    EXPECT_EQ(d[rg.a(1)], 4u);
    EXPECT_EQ(d[rg.a(0)], 1u + 2u);
}

TEST(Bmm, IdentityTimesIdentity) {
    for (std::size_t sigma : {1, 2, 4}) EXPECT_EQ(boolean_multiply(identity(4), identity(4), sigma, AlgoConfig{}), identity(4));
}

TEST(Bmm, SingleWitness) {
    BoolMatrix A(5), B(5), want(5);
    A.set(1, 3);
    B.set(3, 4);
    want.set(1, 4);
    EXPECT_EQ(boolean_multiply(A, B, 1, AlgoConfig{}), want);
    EXPECT_EQ(boolean_multiply(A, B, 2, AlgoConfig{}), want);
}

TEST(Bmm, DimensionMismatch) {
    EXPECT_THROW(boolean_multiply(BoolMatrix(3), BoolMatrix(4), 1, AlgoConfig{}), ValidationError);
    EXPECT_THROW(boolean_multiply(BoolMatrix(3), BoolMatrix(3), 0, AlgoConfig{}), ValidationError);
}

TEST(Bmm, RandomMatchesDirectProduct) {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
        const std::size_t n = 1 + rng() % 8;
        const std::size_t sigma = std::size_t{1} << (rng() % 3);
        const double density = 0.1 + 0.1 * static_cast<double>(rng() % 5);
        auto A = random_matrix(n, density, rng), B = random_matrix(n, density, rng);
        AlgoConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(it + 1);
        EXPECT_EQ(boolean_multiply(A, B, sigma, cfg), direct_product(A, B))
            << "n=" << n << " sigma=" << sigma << "\nA=\n" << A.to_string() << "B=\n" << B.to_string();
    }
}

TEST(Bmm, DecodedOnesHaveWitnesses) {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 10; ++it) {
        auto A = random_matrix(6, 0.25, rng), B = random_matrix(6, 0.25, rng);
        auto C = boolean_multiply(A, B, 2, AlgoConfig{});
        for (std::size_t x = 0; x < 6; ++x)
            for (std::size_t z = 0; z < 6; ++z) {
                if (!C.at(x, z)) continue;
                bool witness = false;
                for (std::size_t y = 0; y < 6; ++y) witness = witness || (A.at(x, y) && B.at(y, z));
                EXPECT_TRUE(witness) << x << "," << z;
            }
    }
}
