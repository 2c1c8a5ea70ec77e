#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "rescoh/errors.hpp"
#include "rescoh/linalg.hpp"
#include "rescoh/sampling.hpp"

using namespace rescoh;
using testing_helpers::to_rows;

namespace {

FpMatrix random_matrix(Sampler& s, std::size_t r, std::size_t c, const Prime& p, bool sparse) {
    FpMatrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (!sparse || s.below(3) == 0) m.set(i, j, s.below(p.value()));
    return m;
}

}  // namespace

TEST(Linalg, FromRowsReducesNegatives) {
    const auto m = FpMatrix::from_rows({{-1, 5}, {7, -8}}, Prime(5));
    EXPECT_EQ(m.at(0, 0), 4u);
    EXPECT_EQ(m.at(0, 1), 0u);
    EXPECT_EQ(m.at(1, 0), 2u);
    EXPECT_EQ(m.at(1, 1), 2u);
}

TEST(Linalg, RankAgreesWithOracle) {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        const Prime p(q);
        auto s = Sampler::for_test(q, 0, "rank_oracle");
        for (int trial = 0; trial < 60; ++trial) {
            const auto m = random_matrix(s, 1 + s.below(7), 1 + s.below(7), p, trial % 2);
            EXPECT_EQ(rank(m), oracle::rank(to_rows(m), q));
        }
    }
}

TEST(Linalg, RankOfTransposeAndNullity) {
    const Prime p(3);
    auto s = Sampler::for_test(3, 0, "rank_nullity");
    for (int trial = 0; trial < 80; ++trial) {
        const auto m = random_matrix(s, 1 + s.below(8), 1 + s.below(8), p, trial % 3 == 0);
        EXPECT_EQ(rank(m), rank(m.transpose()));
        const Subspace k = nullspace(m);
        EXPECT_EQ(k.dim() + rank(m), m.cols());
        for (const auto& v : k.basis()) EXPECT_TRUE(is_zero(m.apply(v)));
    }
}

TEST(Linalg, RrefIsIdempotent) {
    const Prime p(5);
    auto s = Sampler::for_test(5, 0, "rref_idem");
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = random_matrix(s, 1 + s.below(6), 1 + s.below(6), p, trial % 2);
        const auto once = rref(m);
        EXPECT_EQ(rref(once.matrix).matrix, once.matrix);
        EXPECT_EQ(once.pivots.size(), once.rank);
    }
}

TEST(Linalg, MatrixProductAndPower) {
    const Prime p(7);
    const auto a = FpMatrix::from_rows({{1, 2}, {3, 4}}, p);
    const auto b = FpMatrix::from_rows({{0, 1}, {1, 0}}, p);
    EXPECT_EQ(a * b, FpMatrix::from_rows({{2, 1}, {4, 3}}, p));
    EXPECT_EQ(a.pow(0), FpMatrix::identity(2, p));
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_EQ((a - a).is_zero(), true);
    EXPECT_THROW(a * FpMatrix(3, 3, p), DimensionMismatch);
}

TEST(Linalg, StackingShapes) {
    const Prime p(2);
    const auto i2 = FpMatrix::identity(2, p);
    EXPECT_EQ(vstack({i2, i2}).rows(), 4u);
    EXPECT_EQ(hstack({i2, i2, i2}).cols(), 6u);
    EXPECT_THROW(vstack({i2, FpMatrix(1, 3, p)}), DimensionMismatch);
}

TEST(Linalg, SubspaceContainmentAndReduce) {
    const Prime p(3);
    const auto S = Subspace::span(3, p, {{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
    EXPECT_EQ(S.dim(), 2u);
    EXPECT_TRUE(S.contains(Vec{1, 2, 1}));
    EXPECT_FALSE(S.contains(Vec{0, 0, 1}));
    const auto T = Subspace::span(3, p, {{1, 1, 0}});
    EXPECT_TRUE(S.contains(T));
    EXPECT_FALSE(T.contains(S));
    EXPECT_EQ(Subspace::span(3, p, {{0, 1, 1}, {1, 1, 0}}), S);
}

TEST(Linalg, SolveReturnsParticularSolution) {
    const Prime p(5);
    const auto m = FpMatrix::from_rows({{1, 2, 0}, {0, 0, 1}}, p);
    const auto x = solve(m, {3, 4});
    ASSERT_TRUE(x);
    EXPECT_EQ(m.apply(*x), (Vec{3, 4}));
    const auto singular = FpMatrix::from_rows({{1, 1}, {2, 2}}, p);
    EXPECT_FALSE(solve(singular, {1, 0}));
}

TEST(Linalg, QuotientDimRequiresComplex) {
    const Prime p(2);
    // F^2 --[1 0]^T--> ... a 2-term complex with d2 d1 = 0.
    const auto d1 = FpMatrix::from_rows({{1}, {0}}, p);
    const auto d2 = FpMatrix::from_rows({{0, 1}}, p);
    EXPECT_EQ(quotient_dim(d1, d2), 0u);
    const auto bad = FpMatrix::from_rows({{1, 0}}, p);
    EXPECT_THROW(quotient_dim(d1, bad), NotAComplex);
}

TEST(Linalg, ComplementRepresentativesSpanQuotient) {
    const Prime p(3);
    const auto Z = Subspace::span(4, p, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
    const auto B = Subspace::span(4, p, {{1, 1, 0, 0}});
    const auto reps = complement_representatives(Z, B);
    EXPECT_EQ(reps.size(), 2u);
    auto all = reps;
    all.push_back(B.basis()[0]);
    EXPECT_EQ(Subspace::span(4, p, all), Z);
}
