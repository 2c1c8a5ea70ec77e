#include <gtest/gtest.h>

#include "matrix_models.hpp"
#include "rescoh/catalog.hpp"
#include "rescoh/errors.hpp"
#include "rescoh/gmod.hpp"
#include "rescoh/sampling.hpp"
#include "rescoh/ures.hpp"

using namespace rescoh;

namespace {

/// Exponents below `max_exp` (default: anything below p).
UresElement random_sparse(const UresAlgebra& U, Sampler& s, std::size_t terms, std::uint32_t max_exp = 0) {
    const std::uint32_t q = U.prime().value();
    UresElement out;
    for (std::size_t t = 0; t < terms; ++t) {
        PBWMonomial m(U.rank());
        for (auto& k : m) k = s.below(max_exp ? max_exp : q);
        U.axpy(1 + s.below(q - 1 ? q - 1 : 1), U.monomial(m), out);
    }
    return out;
}

FpMatrix word_product(const std::vector<FpMatrix>& rho, const std::vector<std::size_t>& word) {
    FpMatrix m = FpMatrix::identity(rho[0].rows(), rho[0].prime());
    for (auto i : word) m = m * rho[i];
    return m;
}

}  // namespace

TEST(Ures, PbwBasisSizeAndOrder) {
    for (const auto& [name, L] : corpus()) {
        const auto B = pbw_basis(L, 1'000'000);
        std::uint64_t expect = 1;
        for (std::size_t i = 0; i < L.dim(); ++i) expect *= L.prime().value();
        ASSERT_EQ(B.size(), expect) << name;
        EXPECT_TRUE(std::is_sorted(B.begin(), B.end())) << name;
        const UresAlgebra U(L);
        for (std::size_t k = 0; k < B.size(); ++k) EXPECT_EQ(U.encode(B[k]), k);
    }
    EXPECT_THROW(pbw_basis(witt_algebra(Prime(7)).algebra), TooLarge);
    EXPECT_EQ(pbw_basis(abelian_algebra(Prime(2), 1, false)), (std::vector<PBWMonomial>{{0}, {1}}));
}

TEST(Ures, TruncatedPolynomialProducts) {
    // Strongly abelian: exponents add and anything reaching p vanishes.
    const Prime p(3);
    const UresAlgebra U(abelian_algebra(p, 2, false));
    for (const auto& a : pbw_basis(U.lie()))
        for (const auto& b : pbw_basis(U.lie())) {
            PBWMonomial c{a[0] + b[0], a[1] + b[1]};
            const UresElement expect = (c[0] < 3 && c[1] < 3) ? U.monomial(c) : U.zero();
            EXPECT_EQ(U.multiply(U.monomial(a), U.monomial(b)), expect);
        }
}

TEST(Ures, IdempotentGeneratorProducts) {
    // n = 1 with e^[p] = e: e^a e^b = e^(a+b) below p, else e^(a+b-p+1).
    for (std::uint32_t q : {2u, 3u, 5u}) {
        const UresAlgebra U(abelian_algebra(Prime(q), 1, true));
        for (std::uint32_t a = 0; a < q; ++a)
            for (std::uint32_t b = 0; b < q; ++b) {
                const std::uint32_t c = a + b < q ? a + b : a + b - q + 1;
                EXPECT_EQ(U.multiply(U.monomial({a}), U.monomial({b})), U.monomial({c})) << q << " " << a << " " << b;
            }
    }
}

TEST(Ures, NormalizeMatchesMatrixWordProducts) {
    struct Case {
        RestrictedLieAlgebra L;
        std::vector<FpMatrix> rho;
    };
    std::vector<Case> cases;
    for (std::uint32_t q : {2u, 3u, 5u}) {
        cases.push_back({heisenberg_algebra(Prime(q)), models::heisenberg(Prime(q))});
        cases.push_back({affine_line_algebra(Prime(q)), models::affine_line(Prime(q))});
    }
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) cases.push_back({witt_algebra(Prime(q)).algebra, models::witt(Prime(q))});
    for (const auto& c : cases) {
        const UresAlgebra U(c.L);
        auto s = Sampler::for_test(c.L.prime(), c.L.dim(), "word_products");
        for (int t = 0; t < 40; ++t) {
            std::vector<std::size_t> word(1 + s.below(2 * c.L.prime().value()));
            for (auto& w : word) w = s.below(static_cast<std::uint32_t>(c.L.dim()));
            const FpMatrix expect = word_product(c.rho, word);
            EXPECT_EQ(represent(U, U.normalize(word, RewriteStrategy::Leftmost), c.rho), expect);
        }
    }
}

TEST(Ures, RewritingIsConfluent) {
    for (const auto& [name, L] : corpus()) {
        const UresAlgebra U(L);
        auto s = Sampler::for_test(L.prime(), L.dim(), "confluence");
        for (int t = 0; t < 25; ++t) {
            std::vector<std::size_t> word(s.below(3 * L.prime().value() + 1));
            for (auto& w : word) w = s.below(static_cast<std::uint32_t>(L.dim()));
            EXPECT_EQ(U.normalize(word, RewriteStrategy::Leftmost), U.normalize(word, RewriteStrategy::Rightmost))
                << name;
        }
    }
}

TEST(Ures, GeneratorPowerIsPOperator) {
    for (const auto& [name, L] : corpus()) {
        const UresAlgebra U(L);
        for (std::size_t i = 0; i < L.dim(); ++i) {
            const std::vector<std::size_t> word(L.prime().value(), i);
            EXPECT_EQ(U.normalize(word), U.from_lie(L.pi(i))) << name;
        }
    }
}

TEST(Ures, Associativity) {
    for (const auto& [name, L] : corpus()) {
        const UresAlgebra U(L);
        const auto B = pbw_basis(L, 1'000'000);
        if (B.size() <= 9) {
            for (const auto& a : B)
                for (const auto& b : B)
                    for (const auto& c : B) {
                        const auto x = U.monomial(a), y = U.monomial(b), z = U.monomial(c);
                        EXPECT_EQ(U.multiply(U.multiply(x, y), z), U.multiply(x, U.multiply(y, z))) << name;
                    }
            continue;
        }
        auto s = Sampler::for_test(L.prime(), L.dim(), "assoc");
        // Dense monomials in the Witt envelopes for p = 5, 7 cost minutes to multiply.
        const std::uint32_t cap = B.size() > 625 ? 2 : 0;
        for (int t = 0; t < 10; ++t) {
            const auto x = random_sparse(U, s, 3, cap), y = random_sparse(U, s, 3, cap), z = random_sparse(U, s, 3, cap);
            EXPECT_EQ(U.multiply(U.multiply(x, y), z), U.multiply(x, U.multiply(y, z))) << name;
        }
    }
}

TEST(Ures, AugmentationIsMultiplicative) {
    for (const auto& [name, L] : corpus()) {
        if (L.dim() > 3 && L.prime().value() > 5) continue;
        const UresAlgebra U(L);
        auto s = Sampler::for_test(L.prime(), L.dim(), "augmentation");
        for (int t = 0; t < 15; ++t) {
            const auto x = random_sparse(U, s, 4), y = random_sparse(U, s, 4);
            EXPECT_EQ(augmentation(U.multiply(x, y)), L.prime().mul(augmentation(x), augmentation(y))) << name;
        }
    }
}

TEST(Ures, ActionIsCompatibleWithProducts) {
    for (const auto& [name, L] : corpus()) {
        if (L.dim() > 3 && L.prime().value() > 5) continue;
        const auto M = adjoint_module(share(L));
        const UresAlgebra U(L);
        auto s = Sampler::for_test(L.prime(), L.dim(), "action_products");
        for (int t = 0; t < 15; ++t) {
            const auto a = random_sparse(U, s, 3), b = random_sparse(U, s, 3);
            const Vec v = s.vec(M.dim, L.prime());
            EXPECT_EQ(act(U, U.multiply(a, b), M, v), act(U, a, M, act(U, b, M, v))) << name;
        }
    }
}

TEST(Ures, WittRepresentationIsARingMap) {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        const auto W = witt_algebra(Prime(q));
        const UresAlgebra U(W.algebra);
        const Report r = verify_representation(U, W.rep);
        EXPECT_TRUE(r.ok()) << q << ": " << (r.ok() ? "" : r.first_failure()->name);
        for (const char* name : {"bracket", "p_power", "ures_products"}) EXPECT_NE(r.find(name), nullptr);
    }
}

TEST(Ures, RepresentationCheckCatchesAWrongMatrix) {
    const auto W = witt_algebra(Prime(3));
    auto rho = W.rep;
    rho[1].set(0, 0, 1);
    const Report r = verify_representation(UresAlgebra(W.algebra), rho);
    EXPECT_FALSE(r.ok());
}

TEST(Ures, EncodeDecodeRoundTrip) {
    const UresAlgebra U(heisenberg_algebra(Prime(5)));
    for (const auto& m : pbw_basis(U.lie())) EXPECT_EQ(U.decode(U.encode(m)), m);
}

TEST(Ures, WittThreeWorkedExamples) {
    const UresAlgebra U(witt_algebra(Prime(3)).algebra);
    // D1 D0 = D0 D1 + [D1, D0] = D0 D1 - D1.
    UresElement expect = U.monomial({1, 1, 0});
    U.axpy(2, U.generator(1), expect);
    EXPECT_EQ(U.normalize({1, 0}), expect);
    EXPECT_EQ(U.normalize({0, 0, 0}), U.generator(0));
    EXPECT_THROW(U.normalize({3}), IndexOutOfRange);
    const auto W = witt_algebra(Prime(3));
    const auto prod = U.multiply(U.monomial({1, 1, 0}), U.generator(0));
    EXPECT_EQ(represent(U, prod, W.rep), W.rep[0] * W.rep[1] * W.rep[0]);
}

TEST(Ures, UnitAndRelations) {
    for (const auto& [name, L] : corpus()) {
        if (L.dim() > 5) continue;
        const UresAlgebra U(L);
        const std::uint32_t q = L.prime().value();
        for (std::size_t i = 0; i < L.dim(); ++i) {
            EXPECT_EQ(U.multiply(U.generator(i), U.one()), U.generator(i));
            PBWMonomial m(L.dim(), 0);
            m[i] = q - 1;
            EXPECT_EQ(U.multiply(U.generator(i), U.monomial(m)), U.from_lie(L.pi(i))) << name;
            for (std::size_t j = 0; j < L.dim(); ++j) {
                const auto a = U.generator(i), b = U.generator(j);
                EXPECT_EQ(U.sub(U.multiply(a, b), U.multiply(b, a)), U.from_lie(L.bracket_basis(i, j))) << name;
            }
        }
    }
}

TEST(Ures, AugmentationAndTrivialAction) {
    const Prime p(5);
    const auto L = share(abelian_algebra(p, 2, false));
    const UresAlgebra U(*L);
    UresElement u = U.scalar(3);
    U.axpy(2, U.monomial({1, 1}), u);
    EXPECT_EQ(augmentation(u), 3u);
    EXPECT_EQ(augmentation(U.one()), 1u);
    EXPECT_EQ(augmentation(U.generator(0)), 0u);
    EXPECT_EQ(act(U, u, trivial_module(L), Vec{4}), (Vec{2}));
    const auto W = share(witt_algebra(Prime(3)).algebra);
    const UresAlgebra UW(*W);
    EXPECT_EQ(act(UW, UW.generator(0), adjoint_module(W), unit_vec(3, 1)), W->bracket_basis(0, 1));
    EXPECT_EQ(act(UW, UW.one(), adjoint_module(W), Vec{1, 2, 0}), (Vec{1, 2, 0}));
}
