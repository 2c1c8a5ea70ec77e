#include "rescoh/gmod.hpp"

#include <string>

#include "rescoh/errors.hpp"

namespace rescoh {

FpMatrix RestrictedModule::action(const AlgElement& x) const { return represent(rho, x); }

bool same_algebra(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b) {
    return &a == &b || (a.prime() == b.prime() && a.structure_constants() == b.structure_constants() &&
                        a.pi_images() == b.pi_images());
}

RestrictedModule make_module(AlgebraPtr L, std::vector<FpMatrix> rho) {
    if (!L) throw DimensionMismatch("module without an algebra");
    if (rho.size() != L->dim())
        throw DimensionMismatch("expected " + std::to_string(L->dim()) + " action matrices");
    const std::size_t m = rho.empty() ? 0 : rho[0].rows();
    for (const auto& r : rho) {
        if (r.rows() != m || r.cols() != m) throw DimensionMismatch("action matrices must be square of equal size");
        if (!(r.prime() == L->prime())) throw DimensionMismatch("action matrix over a different prime");
    }
    RestrictedModule M;
    M.algebra = std::move(L);
    M.dim = m;
    M.rho = std::move(rho);
    return M;
}

RestrictedModule trivial_module(AlgebraPtr L, std::size_t dim) {
    std::vector<FpMatrix> rho(L->dim(), FpMatrix(dim, dim, L->prime()));
    RestrictedModule M = make_module(L, std::move(rho));
    M.dim = dim;
    return M;
}

RestrictedModule adjoint_module(AlgebraPtr L) {
    std::vector<FpMatrix> rho;
    for (std::size_t i = 0; i < L->dim(); ++i) rho.push_back(ad_matrix(*L, basis_element(*L, i)));
    return make_module(L, std::move(rho));
}

RestrictedModule hom_module(const RestrictedModule& N, const RestrictedModule& M) {
    if (!same_algebra(N.lie(), M.lie())) throw MixedAlgebras("Hom between modules of different algebras");
    const std::size_t nd = N.dim, md = M.dim, d = nd * md;
    const Prime& p = M.prime();
    std::vector<FpMatrix> rho;
    for (std::size_t i = 0; i < M.lie().dim(); ++i) {
        FpMatrix a(d, d, p);
        // Unit E (tgt <- src): rho_M E has entries rho_M[t][tgt] at (t, src);
        // E rho_N has entries rho_N[src][s] at (tgt, s).
        for (std::size_t src = 0; src < nd; ++src)
            for (std::size_t tgt = 0; tgt < md; ++tgt) {
                const std::size_t col = hom_index(src, tgt, md);
                for (std::size_t t = 0; t < md; ++t)
                    a.add_to(hom_index(src, t, md), col, M.rho[i].at(t, tgt));
                for (std::size_t s = 0; s < nd; ++s)
                    a.add_to(hom_index(s, tgt, md), col, p.neg(N.rho[i].at(src, s)));
            }
        rho.push_back(a);
    }
    RestrictedModule H = make_module(M.algebra, std::move(rho));
    H.dim = d;
    return H;
}

RestrictedModule direct_sum(const RestrictedModule& A, const RestrictedModule& B) {
    if (!same_algebra(A.lie(), B.lie())) throw MixedAlgebras("direct sum of modules of different algebras");
    const std::size_t d = A.dim + B.dim;
    std::vector<FpMatrix> rho;
    for (std::size_t i = 0; i < A.lie().dim(); ++i) {
        FpMatrix m(d, d, A.prime());
        for (std::size_t r = 0; r < A.dim; ++r)
            for (std::size_t c = 0; c < A.dim; ++c) m.set(r, c, A.rho[i].at(r, c));
        for (std::size_t r = 0; r < B.dim; ++r)
            for (std::size_t c = 0; c < B.dim; ++c) m.set(A.dim + r, A.dim + c, B.rho[i].at(r, c));
        rho.push_back(m);
    }
    RestrictedModule S = make_module(A.algebra, std::move(rho));
    S.dim = d;
    return S;
}

Report verify_module(const RestrictedModule& M) {
    Report report;
    const auto& L = M.lie();
    const std::size_t n = L.dim();
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
        for (std::size_t j = i + 1; j < n && bad.empty(); ++j) {
            FpMatrix lhs = M.rho[i] * M.rho[j] - M.rho[j] * M.rho[i];
            if (!(lhs == M.action(L.bracket_basis(i, j))))
                bad = "[" + L.labels()[i] + "," + L.labels()[j] + "]";
        }
    bad.empty() ? report.pass("bracket_compatibility") : report.fail("bracket_compatibility", bad);
    bad.clear();
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
        if (!(M.rho[i].pow(L.prime().value()) == M.action(L.pi(i)))) bad = L.labels()[i];
    bad.empty() ? report.pass("p_compatibility") : report.fail("p_compatibility", bad);
    return report;
}

Subspace invariants(const RestrictedModule& M) {
    if (M.rho.empty()) return Subspace::span(M.dim, M.prime(), [&] {
        std::vector<Vec> all;
        for (std::size_t i = 0; i < M.dim; ++i) all.push_back(unit_vec(M.dim, i));
        return all;
    }());
    return nullspace(vstack(M.rho));
}

Vec act(const UresAlgebra& U, const UresElement& u, const RestrictedModule& M, const Vec& v) {
    if (v.size() != M.dim) throw DimensionMismatch("vector not in module");
    return act(U, u, M.rho, v);
}

}  // namespace rescoh
