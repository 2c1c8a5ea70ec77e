#include <gtest/gtest.h>

#include "matrix_models.hpp"
#include "rescoh/catalog.hpp"
#include "rescoh/errors.hpp"
#include "rescoh/liealg.hpp"
#include "rescoh/sampling.hpp"

using namespace rescoh;

namespace {

struct Modelled {
    std::string name;
    RestrictedLieAlgebra L;
    std::vector<FpMatrix> rho;
};

std::vector<Modelled> modelled() {
    std::vector<Modelled> out;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const Prime p(q);
        out.push_back({"heisenberg" + std::to_string(q), heisenberg_algebra(p), models::heisenberg(p)});
        out.push_back({"affine" + std::to_string(q), affine_line_algebra(p), models::affine_line(p)});
    }
    for (std::uint32_t q : {2u, 3u, 5u, 7u})
        out.push_back({"witt" + std::to_string(q), witt_algebra(Prime(q)).algebra, models::witt(Prime(q))});
    return out;
}

FpMatrix commutator(const FpMatrix& a, const FpMatrix& b) { return a * b - b * a; }

}  // namespace

TEST(LieAlg, ConstructorRejectsBrokenAntisymmetry) {
    const Prime p(3);
    StructureConstants c(2, std::vector<Vec>(2, zero_vec(2)));
    c[0][1] = {0, 1};
    EXPECT_THROW(RestrictedLieAlgebra::create(p, c, {zero_vec(2), zero_vec(2)}), InvalidStructure);
    c[1][0] = {0, 2};
    EXPECT_NO_THROW(RestrictedLieAlgebra::create(p, c, {zero_vec(2), zero_vec(2)}));
    c[0][0] = {1, 0};
    EXPECT_THROW(RestrictedLieAlgebra::create(p, c, {zero_vec(2), zero_vec(2)}), InvalidStructure);
}

TEST(LieAlg, ConstructorRejectsJacobiFailure) {
    // [x,y] = y, [x,z] = z, [y,z] = x breaks Jacobi over F_5.
    const Prime p(5);
    StructureConstants c(3, std::vector<Vec>(3, zero_vec(3)));
    auto set = [&](std::size_t i, std::size_t j, Vec v) {
        c[i][j] = v;
        c[j][i] = vneg(p, v);
    };
    set(0, 1, {0, 1, 0});
    set(0, 2, {0, 0, 1});
    set(1, 2, {1, 0, 0});
    EXPECT_THROW(RestrictedLieAlgebra::create(p, c, std::vector<Vec>(3, zero_vec(3))), InvalidStructure);
    EXPECT_NO_THROW(RestrictedLieAlgebra::unchecked(p, c, std::vector<Vec>(3, zero_vec(3))));
}

TEST(LieAlg, ShapeErrors) {
    const Prime p(2);
    StructureConstants c(2, std::vector<Vec>(2, zero_vec(2)));
    EXPECT_THROW(RestrictedLieAlgebra::create(p, c, {zero_vec(2)}), DimensionMismatch);
    EXPECT_THROW(RestrictedLieAlgebra::create(p, c, {zero_vec(2), zero_vec(2)}, {"a"}), DimensionMismatch);
}

TEST(LieAlg, MultibracketIsLeftNormed) {
    const auto L = heisenberg_algebra(Prime(3));
    const auto x = basis_element(L, 0), y = basis_element(L, 1), z = basis_element(L, 2);
    EXPECT_EQ(multibracket(L, {x, y}), z);
    EXPECT_EQ(multibracket(L, {y, x}), vneg(L.prime(), z));
    EXPECT_EQ(multibracket(L, {x}), x);
    EXPECT_TRUE(is_zero(multibracket(L, {x, y, x})));
    EXPECT_THROW(multibracket(L, {}), EmptySequence);
    const auto A = affine_line_algebra(Prime(5));
    const auto a = basis_element(A, 0), b = basis_element(A, 1);
    // [b, a] = -b, so three steps give -b.
    EXPECT_EQ(bracket_power(A, b, a, 3), vneg(A.prime(), b));
    EXPECT_EQ(bracket_power(A, b, a, 0), b);
}

TEST(LieAlg, StructureMatchesMatrixModels) {
    for (const auto& m : modelled())
        for (std::size_t i = 0; i < m.L.dim(); ++i)
            for (std::size_t j = 0; j < m.L.dim(); ++j)
                EXPECT_EQ(models::image(m.rho, m.L.bracket_basis(i, j)), commutator(m.rho[i], m.rho[j]))
                    << m.name << " " << i << " " << j;
}

TEST(LieAlg, PPowerMatchesMatrixModels) {
    for (const auto& m : modelled()) {
        const Prime& p = m.L.prime();
        for (const auto& x : verification_set(m.L, "model_p_power", 243, 200)) {
            const auto lhs = models::image(m.rho, p_power(m.L, x));
            EXPECT_EQ(lhs, models::image(m.rho, x).pow(p.value())) << m.name;
        }
    }
}

TEST(LieAlg, R2CorrectionIsJacobsonDefect) {
    for (const auto& m : modelled()) {
        auto s = Sampler::for_test(m.L.prime(), m.L.dim(), "r2_" + m.name);
        const std::uint32_t q = m.L.prime().value();
        for (int t = 0; t < 30; ++t) {
            const auto g = s.vec(m.L.dim(), m.L.prime()), h = s.vec(m.L.dim(), m.L.prime());
            const auto G = models::image(m.rho, g), H = models::image(m.rho, h);
            EXPECT_EQ(models::image(m.rho, r2_correction(m.L, g, h)), (G + H).pow(q) - G.pow(q) - H.pow(q)) << m.name;
        }
    }
}

TEST(LieAlg, R2CorrectionAtTwoIsTheBracket) {
    const auto L = witt_algebra(Prime(2)).algebra;
    const auto a = basis_element(L, 0), b = basis_element(L, 1);
    EXPECT_EQ(r2_correction(L, a, b), bracket(L, a, b));
}

TEST(LieAlg, PPowerIsPSemilinear) {
    for (const auto& [name, L] : corpus()) {
        const Prime& p = L.prime();
        for (const auto& x : verification_set(L, "r1", 81, 40))
            for (std::uint32_t lam = 0; lam < p.value(); ++lam)
                EXPECT_EQ(p_power(L, vscale(p, lam, x)), vscale(p, p.pow(lam, p.value()), p_power(L, x))) << name;
    }
}

TEST(LieAlg, PeelOrderIndependent) {
    for (const auto& [name, L] : corpus())
        for (const auto& x : verification_set(L, "peel", 243, 500))
            EXPECT_EQ(p_power(L, x, PeelOrder::Ascending), p_power(L, x, PeelOrder::Descending)) << name;
}

TEST(LieAlg, AdjointIsRestricted) {
    for (const auto& [name, L] : corpus())
        for (std::size_t i = 0; i < L.dim(); ++i) {
            const auto g = basis_element(L, i);
            EXPECT_EQ(ad_matrix(L, p_power(L, g)), ad_matrix(L, g).pow(L.prime().value())) << name << " " << i;
        }
}

TEST(LieAlg, CorpusPassesVerification) {
    for (const auto& [name, L] : corpus()) {
        const Report r = verify_restricted(L);
        EXPECT_TRUE(r.ok()) << name << ": " << (r.ok() ? "" : r.first_failure()->name);
    }
}

TEST(LieAlg, VerificationNamesTheBrokenAxiom) {
    // y^[p] = x: (ad y)^3 = 0 while ad x is not.
    const Prime p(3);
    const auto H = heisenberg_algebra(p);
    auto pi = H.pi_images();
    pi[1] = {1, 0, 0};
    const auto bad = RestrictedLieAlgebra::unchecked(p, H.structure_constants(), pi, H.labels());
    const Report r = verify_restricted(bad);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.first_failure()->name, "r3");
    EXPECT_TRUE(r.first_failure()->counterexample.has_value());
}

TEST(LieAlg, VerificationSetSize) {
    const auto L = abelian_algebra(Prime(3), 3, false);
    EXPECT_TRUE(enumerates_all(L));
    EXPECT_EQ(verification_set(L, "size").size(), 27u);
    const auto W = witt_algebra(Prime(5)).algebra;
    EXPECT_FALSE(enumerates_all(W));
    const auto sample = verification_set(W, "size", 243, 50);
    EXPECT_EQ(sample.size(), 55u);
    EXPECT_EQ(sample, verification_set(W, "size", 243, 50));
}

TEST(LieAlg, InferRecoversWittOperator) {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        const auto W = witt_algebra(Prime(q)).algebra;
        const auto inf = infer_p_operator(W.structure_constants(), W.prime());
        EXPECT_EQ(inf.center_dim, 0u);
        EXPECT_EQ(inf.pi, W.pi_images()) << q;
        EXPECT_TRUE(inf.report.ok());
    }
}

TEST(LieAlg, InferReportsCenterAmbiguity) {
    const auto H = heisenberg_algebra(Prime(3));
    const auto inf = infer_p_operator(H.structure_constants(), H.prime());
    EXPECT_EQ(inf.center_dim, 1u);
    const auto L = RestrictedLieAlgebra::create(H.prime(), H.structure_constants(), inf.pi);
    EXPECT_TRUE(verify_restricted(L).ok());
}

TEST(LieAlg, InferRejectsNonRestrictable) {
    // Filiform [x,y] = z, [x,z] = w over F_2: (ad x)^2 sends y to w, and nothing
    // commuting with x does that.
    const Prime p(2);
    StructureConstants c(4, std::vector<Vec>(4, zero_vec(4)));
    c[0][1] = c[1][0] = unit_vec(4, 2);
    c[0][2] = c[2][0] = unit_vec(4, 3);
    EXPECT_THROW(infer_p_operator(c, p), NotRestrictable);
}

TEST(Witt, RepresentationIsTheHandModel) {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        const auto W = witt_algebra(Prime(q));
        EXPECT_EQ(W.rep, models::witt(Prime(q)));
        for (std::size_t i = 0; i < q; ++i)
            for (std::size_t j = 0; j < q; ++j) {
                Vec expect = zero_vec(q);
                expect[(i + j) % q] = Prime(q).reduce(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i));
                EXPECT_EQ(W.algebra.bracket_basis(i, j), expect);
            }
        EXPECT_EQ(W.algebra.pi(0), unit_vec(q, 0));
        for (std::size_t j = 1; j < q; ++j) EXPECT_TRUE(is_zero(W.algebra.pi(j)));
    }
}

TEST(Witt, RepresentPushesCoordinatesThroughRho) {
    const auto W = witt_algebra(Prime(3));
    const Vec x{1, 2, 0};
    EXPECT_EQ(represent(W.rep, x), models::image(W.rep, x));
}

TEST(Catalog, CorpusShape) {
    EXPECT_EQ(abelian_corpus().size(), 18u);
    EXPECT_EQ(corpus().size(), 28u);
    for (const auto& [name, L] : abelian_corpus()) EXPECT_TRUE(L.is_abelian()) << name;
    EXPECT_TRUE(abelian_algebra(Prime(3), 2, false).is_strongly_abelian());
    EXPECT_FALSE(abelian_algebra(Prime(3), 2, true).is_strongly_abelian());
    EXPECT_FALSE(heisenberg_algebra(Prime(3)).is_abelian());
}
