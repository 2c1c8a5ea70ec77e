#include "rescoh/interp.hpp"

#include <string>

#include "rescoh/errors.hpp"

namespace rescoh {

namespace {

Vec head(const Vec& v, std::size_t k) { return Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k)); }
Vec tail(const Vec& v, std::size_t k) { return Vec(v.begin() + static_cast<std::ptrdiff_t>(k), v.end()); }

Vec concat(const Vec& a, const Vec& b) {
    Vec out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

DerivationSpace restricted_derivations(const RestrictedLieAlgebra& L, const VerifyOptions& opts) {
    const std::size_t n = L.dim();
    const Prime& p = L.prime();
    auto u = [n](std::size_t i, std::size_t r) { return i * n + r; };
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r) {
                Vec row = zero_vec(n * n);
                const Vec& cij = L.bracket_basis(i, j);
                for (std::size_t k = 0; k < n; ++k) row[u(k, r)] = p.add(row[u(k, r)], cij[k]);
                for (std::size_t a = 0; a < n; ++a) {
                    row[u(j, a)] = p.sub(row[u(j, a)], L.bracket_basis(i, a)[r]);
                    row[u(i, a)] = p.sub(row[u(i, a)], L.bracket_basis(a, j)[r]);
                }
                if (!is_zero(row)) rows.push_back(std::move(row));
            }
    // Condition (ii) is linear in D but not in g, so it is imposed element by element.
    for (const auto& g : verification_set(L, "restricted_derivations", opts.exhaustive_bound, opts.samples)) {
        const AlgElement gp = p_power(L, g);
        const FpMatrix A = ad_matrix(L, g).pow(p.value() - 1);
        for (std::size_t r = 0; r < n; ++r) {
            Vec row = zero_vec(n * n);
            for (std::size_t k = 0; k < n; ++k) row[u(k, r)] = p.add(row[u(k, r)], gp[k]);
            for (std::size_t s = 0; s < n; ++s) {
                if (!A.at(r, s)) continue;
                for (std::size_t k = 0; k < n; ++k)
                    row[u(k, s)] = p.sub(row[u(k, s)], p.mul(A.at(r, s), g[k]));
            }
            if (!is_zero(row)) rows.push_back(std::move(row));
        }
    }
    FpMatrix system(rows.size(), n * n, p);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n * n; ++c) system.set(r, c, rows[r][c]);
    return {nullspace(system), enumerates_all(L, opts.exhaustive_bound)};
}

Subspace inner_derivations(const RestrictedLieAlgebra& L) {
    const std::size_t n = L.dim();
    std::vector<Vec> ads;
    for (std::size_t j = 0; j < n; ++j) {
        Vec v = zero_vec(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t r = 0; r < n; ++r) v[i * n + r] = L.bracket_basis(j, i)[r];
        ads.push_back(std::move(v));
    }
    return Subspace::span(n * n, L.prime(), ads);
}

std::size_t outer_derivation_dim(const RestrictedLieAlgebra& L, const VerifyOptions& opts) {
    return restricted_derivations(L, opts).basis.dim() - inner_derivations(L).dim();
}

Vec random_element(const Subspace& s, Sampler& rng) {
    Vec out = zero_vec(s.ambient_dim());
    for (const auto& b : s.basis()) vaxpy(s.prime(), rng.below(s.prime().value()), b, out);
    return out;
}

FpMatrix hom_value(const Vec& psi, std::size_t i, std::size_t n_dim, std::size_t m_dim, const Prime& p) {
    const std::size_t h = n_dim * m_dim;
    FpMatrix out(m_dim, n_dim, p);
    for (std::size_t src = 0; src < n_dim; ++src)
        for (std::size_t tgt = 0; tgt < m_dim; ++tgt) out.set(tgt, src, psi.at(i * h + hom_index(src, tgt, m_dim)));
    return out;
}

ExtensionModule extension_module(const RestrictedModule& N, const RestrictedModule& M, const Vec& psi) {
    if (!same_algebra(N.lie(), M.lie())) throw MixedAlgebras("N and M live over different algebras");
    const std::size_t a = N.dim, b = M.dim, n = N.lie().dim();
    if (psi.size() != n * a * b) throw DimensionMismatch("psi is not a 1-cochain with values in Hom(N, M)");
    std::vector<FpMatrix> rho;
    for (std::size_t i = 0; i < n; ++i) {
        FpMatrix r(a + b, a + b, N.prime());
        const FpMatrix off = hom_value(psi, i, a, b, N.prime());
        for (std::size_t x = 0; x < a; ++x)
            for (std::size_t y = 0; y < a; ++y) r.set(x, y, N.rho[i].at(x, y));
        for (std::size_t x = 0; x < b; ++x) {
            for (std::size_t y = 0; y < b; ++y) r.set(a + x, a + y, M.rho[i].at(x, y));
            for (std::size_t y = 0; y < a; ++y) r.set(a + x, y, off.at(x, y));
        }
        rho.push_back(std::move(r));
    }
    return {make_module(N.algebra, std::move(rho)), a, b};
}

namespace {

/// psi'(g)(n) = g s(n) - s(g n) for the splitting s(n) = (n, F n), in Hom(N, M) cochain coordinates.
Vec extract_module_cocycle(const ExtensionModule& ext, const RestrictedModule& N, const FpMatrix& F) {
    const std::size_t a = ext.n_dim, b = ext.m_dim, n = N.lie().dim();
    const Prime& p = N.prime();
    auto split = [&](const Vec& v) { return concat(v, F.apply(v)); };
    Vec out(n * a * b, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t src = 0; src < a; ++src) {
            const Vec e = unit_vec(a, src);
            const Vec diff = vsub(p, ext.E.rho[i].apply(split(e)), split(N.rho[i].apply(e)));
            if (!is_zero(head(diff, a))) throw InvalidStructure("extension does not project onto N");
            const Vec m = tail(diff, a);
            for (std::size_t tgt = 0; tgt < b; ++tgt) out[i * a * b + hom_index(src, tgt, b)] = m[tgt];
        }
    return out;
}

FpMatrix hom_matrix(const Vec& f, std::size_t a, std::size_t b, const Prime& p) { return hom_value(f, 0, a, b, p); }

}  // namespace

Report module_extension_roundtrip(const RestrictedModule& N, const RestrictedModule& M, const Vec& psi,
                                  std::size_t perturbations) {
    if (!same_algebra(N.lie(), M.lie())) throw MixedAlgebras("N and M live over different algebras");
    const Prime& p = N.prime();
    const std::size_t a = N.dim, b = M.dim;
    const RestrictedModule H = hom_module(N, M);
    if (psi.size() != classical_cochain_dim(H, 1)) throw DimensionMismatch("psi length");
    if (!is_zero(to_coords(H, delta1(H, psi)))) throw NotACocycle("delta^1 psi != 0");

    Report report;
    const ExtensionModule ext = extension_module(N, M, psi);
    const Report axioms = verify_module(ext.E);
    axioms.ok() ? report.pass("module_axioms")
                : report.fail("module_axioms", axioms.first_failure()->name + ": " +
                                                   axioms.first_failure()->counterexample.value_or(""));

    const FpMatrix zero(b, a, p);
    extract_module_cocycle(ext, N, zero) == psi ? report.pass("canonical_roundtrip")
                                                : report.fail("canonical_roundtrip", "psi' != psi");

    const FpMatrix d0 = delta0_matrix(H);
    Sampler rng = Sampler::for_test(p.value(), N.lie().dim(), "module_extension_roundtrip");
    std::string bad;
    for (std::size_t t = 0; t < perturbations && bad.empty(); ++t) {
        const Vec f = rng.vec(a * b, p);
        const Vec shifted = extract_module_cocycle(ext, N, hom_matrix(f, a, b, p));
        if (vsub(p, shifted, psi) != d0.apply(vneg(p, f))) bad = "perturbation " + std::to_string(t);
    }
    bad.empty() ? report.pass("perturbed_roundtrip") : report.fail("perturbed_roundtrip", bad);

    if (auto f = solve(d0, psi)) {
        // (n, m) -> (n, m - f(n)) must intertwine E with N (+) M.
        const FpMatrix F = hom_matrix(*f, a, b, p);
        FpMatrix phi = FpMatrix::identity(a + b, p);
        for (std::size_t x = 0; x < b; ++x)
            for (std::size_t y = 0; y < a; ++y) phi.set(a + x, y, p.neg(F.at(x, y)));
        const RestrictedModule plain = direct_sum(N, M);
        bool ok = true;
        for (std::size_t i = 0; i < N.lie().dim() && ok; ++i) ok = phi * ext.E.rho[i] == plain.rho[i] * phi;
        ok ? report.pass("split_equivalence") : report.fail("split_equivalence", "map does not intertwine");
    }
    return report;
}

ExtensionAlgebra extension_algebra(const RestrictedModule& H, const Cochain2& c2, const std::vector<Vec>& h_pmap) {
    for (const auto& v : h_pmap)
        if (!is_zero(v)) throw NotStronglyAbelian("the kernel of an extension must have zero p-operator");
    const auto& L = H.lie();
    const Prime& p = L.prime();
    const std::size_t m = H.dim, n = L.dim(), d = m + n;
    if (c2.phi.size() != classical_cochain_dim(H, 2) || c2.omega_basis.size() != n)
        throw DimensionMismatch("cochain does not match the coefficient module");
    StructureConstants c(d, std::vector<Vec>(d, zero_vec(d)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t a = 0; a < m; ++a) {
            const Vec col = H.rho[i].column(a);
            for (std::size_t r = 0; r < m; ++r) {
                c[m + i][a][r] = col[r];
                c[a][m + i][r] = p.neg(col[r]);
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            c[m + i][m + j] = concat(eval_cochain_basis(H, 2, c2.phi, {i, j}), L.bracket_basis(i, j));
        }
    }
    std::vector<Vec> pi(d, zero_vec(d));
    for (std::size_t i = 0; i < n; ++i) pi[m + i] = concat(c2.omega_basis[i], L.pi(i));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) labels.push_back("h" + std::to_string(a));
    for (const auto& l : L.labels()) labels.push_back(l);
    return {RestrictedLieAlgebra::unchecked(p, std::move(c), std::move(pi), std::move(labels)), m};
}

namespace {

/// (phi', omega') read off e with the splitting g -> (-psi(g), g); psi = 0 is the canonical one.
Cochain2 extract_algebra_cocycle(const ExtensionAlgebra& ext, const RestrictedModule& H, const Vec& psi) {
    const auto& L = H.lie();
    const Prime& p = L.prime();
    const std::size_t m = ext.h_dim, n = L.dim();
    auto sigma = [&](const AlgElement& g) { return concat(vneg(p, eval_cochain(H, 1, psi, {g})), g); };
    Cochain2 out;
    TupleIndex pairs(n, 2);
    out.phi.assign(pairs.size() * m, 0);
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        const auto& T = pairs.tuple(r);
        const AlgElement gi = basis_element(L, T[0]), gj = basis_element(L, T[1]);
        const Vec diff = vsub(p, bracket(ext.e, sigma(gi), sigma(gj)), sigma(bracket(L, gi, gj)));
        if (!is_zero(tail(diff, m))) throw InvalidStructure("extension does not project onto g");
        const Vec h = head(diff, m);
        std::copy(h.begin(), h.end(), out.phi.begin() + static_cast<std::ptrdiff_t>(r * m));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const AlgElement g = basis_element(L, i);
        const Vec diff = vsub(p, p_power(ext.e, sigma(g)), sigma(L.pi(i)));
        if (!is_zero(tail(diff, m))) throw InvalidStructure("extension p-operator does not project onto g");
        out.omega_basis.push_back(head(diff, m));
    }
    return out;
}

std::string first_failure_text(const Report& r) {
    const Check* f = r.first_failure();
    return f ? f->name + ": " + f->counterexample.value_or("") : "";
}

/// A is a restricted homomorphism from `src` to `dst` on basis data.
bool is_restricted_hom(const FpMatrix& A, const RestrictedLieAlgebra& src, const RestrictedLieAlgebra& dst) {
    const std::size_t d = src.dim();
    for (std::size_t i = 0; i < d; ++i) {
        const AlgElement x = basis_element(src, i);
        if (A.apply(src.pi(i)) != p_power(dst, A.apply(x))) return false;
        for (std::size_t j = i + 1; j < d; ++j)
            if (A.apply(src.bracket_basis(i, j)) != bracket(dst, A.apply(x), A.apply(basis_element(src, j))))
                return false;
    }
    return true;
}

}  // namespace

Report algebra_extension_roundtrip(const RestrictedModule& H, const Cochain2& c2, const std::vector<Vec>& h_pmap,
                                   std::size_t perturbations, const VerifyOptions& opts) {
    const auto& L = H.lie();
    const Prime& p = L.prime();
    const std::size_t m = H.dim, n = L.dim();
    const ExtensionAlgebra ext = extension_algebra(H, c2, h_pmap);
    if (!is_zero(to_coords(H, delta2(H, c2)))) throw NotACocycle("delta^2 (phi, omega) != 0");

    Report report;
    const Report axioms = verify_restricted(ext.e, opts);
    axioms.ok() ? report.pass("restricted_axioms") : report.fail("restricted_axioms", first_failure_text(axioms));

    const Vec c2_coords = to_coords(H, c2);
    const Vec no_psi = zero_vec(classical_cochain_dim(H, 1));
    to_coords(H, extract_algebra_cocycle(ext, H, no_psi)) == c2_coords
        ? report.pass("canonical_roundtrip")
        : report.fail("canonical_roundtrip", "(phi', omega') != (phi, omega)");

    Sampler rng = Sampler::for_test(p.value(), n, "algebra_extension_roundtrip");
    std::string bad;
    for (std::size_t t = 0; t < 20 && bad.empty(); ++t) {
        const AlgElement g = rng.nonbasis_vec(n, p);
        const Vec got = p_power(ext.e, concat(zero_vec(m), g));
        if (tail(got, m) != p_power(L, g) || head(got, m) != eval_omega(H, c2, g)) bad = "sample " + std::to_string(t);
    }
    bad.empty() ? report.pass("omega_general") : report.fail("omega_general", bad);

    bad.clear();
    const FpMatrix d1 = delta1_matrix(H);
    for (std::size_t t = 0; t < perturbations && bad.empty(); ++t) {
        const Vec psi = rng.vec(classical_cochain_dim(H, 1), p);
        const Vec shifted = to_coords(H, extract_algebra_cocycle(ext, H, psi));
        if (vsub(p, shifted, c2_coords) != d1.apply(psi)) bad = "perturbation " + std::to_string(t);
    }
    bad.empty() ? report.pass("perturbed_roundtrip") : report.fail("perturbed_roundtrip", bad);

    if (auto psi = solve(d1, c2_coords)) {
        Cochain2 zero{zero_vec(c2.phi.size()), std::vector<Vec>(n, zero_vec(m))};
        const ExtensionAlgebra split = extension_algebra(H, zero);
        FpMatrix A = FpMatrix::identity(m + n, p);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec v = eval_cochain_basis(H, 1, *psi, {i});
            for (std::size_t r = 0; r < m; ++r) A.set(r, m + i, p.neg(v[r]));
        }
        is_restricted_hom(A, ext.e, split.e) ? report.pass("split_equivalence")
                                             : report.fail("split_equivalence", "(h - psi(g), g) is not a homomorphism");
    }
    return report;
}

RestrictedLieAlgebra deformed_algebra(const RestrictedLieAlgebra& L, const Cochain2& c2) {
    const RestrictedModule ad = adjoint_module(share(L));
    const Prime& p = L.prime();
    const std::size_t n = L.dim(), d = 2 * n;
    if (c2.phi.size() != classical_cochain_dim(ad, 2) || c2.omega_basis.size() != n)
        throw DimensionMismatch("deformation cochain must have adjoint coefficients");
    StructureConstants c(d, std::vector<Vec>(d, zero_vec(d)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& cij = L.bracket_basis(i, j);
            c[i][j] = concat(cij, i == j ? zero_vec(n) : eval_cochain_basis(ad, 2, c2.phi, {i, j}));
            c[i][n + j] = concat(zero_vec(n), cij);
            c[n + i][j] = concat(zero_vec(n), cij);
        }
    std::vector<Vec> pi(d, zero_vec(d));
    for (std::size_t i = 0; i < n; ++i) pi[i] = concat(L.pi(i), c2.omega_basis.at(i));
    std::vector<std::string> labels = L.labels();
    for (const auto& l : L.labels()) labels.push_back("t" + l);
    return RestrictedLieAlgebra::unchecked(p, std::move(c), std::move(pi), std::move(labels));
}

DeformationResult deformation_check(const AlgebraPtr& L, const Cochain2& c2, const std::optional<Vec>& psi,
                                    const VerifyOptions& opts) {
    const RestrictedModule ad = adjoint_module(L);
    const Prime& p = L->prime();
    const std::size_t n = L->dim();
    DeformationResult res;
    const RestrictedLieAlgebra D = deformed_algebra(*L, c2);
    res.is_cocycle = is_zero(to_coords(ad, delta2(ad, c2)));
    res.axioms = verify_restricted(D, opts);
    res.deformation_ok = res.axioms.ok();
    res.deformation_ok == res.is_cocycle
        ? res.report.pass("agreement")
        : res.report.fail("agreement", std::string("axioms ") + (res.deformation_ok ? "pass" : "fail") +
                                           " but cocycle predicate is " + (res.is_cocycle ? "true" : "false"));
    if (psi) {
        Cochain2 zero{zero_vec(c2.phi.size()), std::vector<Vec>(n, zero_vec(n))};
        const RestrictedLieAlgebra T = deformed_algebra(*L, zero);
        FpMatrix A = FpMatrix::identity(2 * n, p);
        for (std::size_t i = 0; i < n; ++i) {
            const Vec v = eval_cochain_basis(ad, 1, *psi, {i});
            for (std::size_t r = 0; r < n; ++r) A.set(n + r, i, p.neg(v[r]));
        }
        const bool coboundary = to_coords(ad, delta1(ad, *psi)) == to_coords(ad, c2);
        coboundary && is_restricted_hom(A, D, T)
            ? res.report.pass("trivial_equivalence")
            : res.report.fail("trivial_equivalence",
                              coboundary ? "x - t psi(x) is not a homomorphism" : "c2 != delta^1 psi");
    }
    return res;
}

}  // namespace rescoh
