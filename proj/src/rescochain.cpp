#include "rescoh/rescochain.hpp"

#include <string>

#include "rescoh/errors.hpp"

namespace rescoh {

std::size_t cochain2_dim(const RestrictedModule& M) {
    return classical_cochain_dim(M, 2) + M.lie().dim() * M.dim;
}

std::size_t cochain3_dim(const RestrictedModule& M) {
    const std::size_t n = M.lie().dim();
    return classical_cochain_dim(M, 3) + n * n * M.dim;
}

Vec to_coords(const RestrictedModule& M, const Cochain2& c) {
    if (c.phi.size() != classical_cochain_dim(M, 2) || c.omega_basis.size() != M.lie().dim())
        throw DimensionMismatch("2-cochain shape");
    Vec out = c.phi;
    for (const auto& w : c.omega_basis) {
        if (w.size() != M.dim) throw DimensionMismatch("omega value length");
        out.insert(out.end(), w.begin(), w.end());
    }
    return out;
}

Vec to_coords(const RestrictedModule& M, const Cochain3& c) {
    const std::size_t n = M.lie().dim();
    if (c.alpha.size() != classical_cochain_dim(M, 3) || c.beta_basis.size() != n)
        throw DimensionMismatch("3-cochain shape");
    Vec out = c.alpha;
    for (const auto& row : c.beta_basis) {
        if (row.size() != n) throw DimensionMismatch("3-cochain shape");
        for (const auto& b : row) {
            if (b.size() != M.dim) throw DimensionMismatch("beta value length");
            out.insert(out.end(), b.begin(), b.end());
        }
    }
    return out;
}

Cochain2 cochain2_from_coords(const RestrictedModule& M, const Vec& coords) {
    if (coords.size() != cochain2_dim(M)) throw DimensionMismatch("2-cochain coordinate length");
    const std::size_t c2 = classical_cochain_dim(M, 2), m = M.dim;
    Cochain2 c;
    c.phi.assign(coords.begin(), coords.begin() + c2);
    for (std::size_t i = 0; i < M.lie().dim(); ++i)
        c.omega_basis.emplace_back(coords.begin() + c2 + i * m, coords.begin() + c2 + (i + 1) * m);
    return c;
}

Cochain3 cochain3_from_coords(const RestrictedModule& M, const Vec& coords) {
    if (coords.size() != cochain3_dim(M)) throw DimensionMismatch("3-cochain coordinate length");
    const std::size_t c3 = classical_cochain_dim(M, 3), m = M.dim, n = M.lie().dim();
    Cochain3 c;
    c.alpha.assign(coords.begin(), coords.begin() + c3);
    c.beta_basis.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto at = coords.begin() + c3 + (i * n + j) * m;
            c.beta_basis[i][j].assign(at, at + m);
        }
    return c;
}

namespace {

void guard(const RestrictedModule& M) {
    if (!M.lie().is_abelian() && M.prime().value() > kMaxCochainPrime)
        throw UnsupportedPrime("omega/beta extension on a nonabelian algebra needs p <= " +
                               std::to_string(kMaxCochainPrime));
}

// One bracket sequence (g_1..g_p) with g_1 = A, g_2 = B, built position by position.
// Positions are 1-based to match the sums; index 0 is unused.
struct SequenceState {
    std::vector<const AlgElement*> g;
    std::vector<const FpMatrix*> rho;
    std::vector<AlgElement> prefix;  // prefix[m] = [g_1, ..., g_m]
    std::size_t count_a = 0;
    /// Number of sequences this state stands for (more than one only for abelian algebras).
    std::uint32_t multiplicity = 1;
};

template <typename Leaf>
void enumerate_sequences(const RestrictedLieAlgebra& L, const AlgElement& A, const AlgElement& B,
                         const FpMatrix& rhoA, const FpMatrix& rhoB, Leaf&& leaf) {
    const std::size_t p = L.prime().value();
    SequenceState st;
    st.g.assign(p + 1, nullptr);
    st.rho.assign(p + 1, nullptr);
    st.prefix.assign(p + 1, AlgElement());
    st.g[1] = &A;
    st.rho[1] = &rhoA;
    st.g[2] = &B;
    st.rho[2] = &rhoB;
    st.prefix[1] = A;
    st.prefix[2] = bracket(L, A, B);
    st.count_a = 1;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos > p) {
            leaf(st);
            return;
        }
        for (int pick = 0; pick < 2; ++pick) {
            const bool is_a = pick == 0;
            st.g[pos] = is_a ? &A : &B;
            st.rho[pos] = is_a ? &rhoA : &rhoB;
            st.count_a += is_a;
            if (pos < p) st.prefix[pos] = bracket(L, st.prefix[pos - 1], *st.g[pos]);
            self(self, pos + 1);
            st.count_a -= is_a;
        }
    };
    if (!L.is_abelian()) {
        rec(rec, 3);
        return;
    }
    // Abelian: every prefix of length >= 2 vanishes and the operators commute, so a
    // sequence's contribution depends only on how many A's it has. One representative
    // per count, weighted by the number of arrangements.
    for (std::size_t j = 0; j + 2 <= p; ++j) {
        for (std::size_t pos = 3; pos <= p; ++pos) {
            const bool is_a = pos < 3 + j;
            st.g[pos] = is_a ? &A : &B;
            st.rho[pos] = is_a ? &rhoA : &rhoB;
            if (pos < p) st.prefix[pos] = zero_vec(A.size());
        }
        st.count_a = 1 + j;
        st.multiplicity = binom_mod(p - 2, j, L.prime()).value();
        if (st.multiplicity) leaf(st);
    }
}

// Sum over sequences of (1/#A) sum_{k=0}^{p-2} (-1)^k g_p..g_{p-k+1} phi([g_1..g_{p-k-1}], g_{p-k}).
Vec star_correction(const RestrictedModule& M, const Vec& phi, const AlgElement& A, const AlgElement& B) {
    const auto& L = M.lie();
    const Prime& p = M.prime();
    const std::size_t pv = p.value();
    const FpMatrix rhoA = M.action(A), rhoB = M.action(B);
    Vec total = zero_vec(M.dim);
    enumerate_sequences(L, A, B, rhoA, rhoB, [&](const SequenceState& st) {
        Vec seq_sum = zero_vec(M.dim);
        for (std::size_t k = 0; k + 2 <= pv; ++k) {
            const AlgElement& head = st.prefix[pv - k - 1];
            if (is_zero(head)) continue;
            Vec v = eval_cochain(M, 2, phi, {head, *st.g[pv - k]});
            for (std::size_t idx = pv - k + 1; idx <= pv; ++idx) v = st.rho[idx]->apply(v);
            vaxpy(p, p.sign(k), v, seq_sum);
        }
        vaxpy(p, p.mul(st.multiplicity, p.inv(static_cast<std::uint32_t>(st.count_a))), seq_sum, total);
    });
    return total;
}

// Sum over sequences l (l_1 = 1, l_2 = 2) of (1/#{l_i = 1}) sum_j (-1)^j sum_k C(j,k)
// (operators) alpha([g, h_{l_{p-k}}, ..., h_{l_{p-j+1}}], [h_{l_1}..h_{l_{p-j-1}}], h_{l_{p-j}}).
Vec starstar_correction(const RestrictedModule& M, const Vec& alpha, const AlgElement& g, const AlgElement& H1,
                        const AlgElement& H2, StarStarReading reading) {
    const auto& L = M.lie();
    const Prime& p = M.prime();
    const std::size_t pv = p.value();
    const FpMatrix rho1 = M.action(H1), rho2 = M.action(H2);
    Vec total = zero_vec(M.dim);
    enumerate_sequences(L, H1, H2, rho1, rho2, [&](const SequenceState& st) {
        Vec seq_sum = zero_vec(M.dim);
        for (std::size_t j = 0; j + 2 <= pv; ++j) {
            const AlgElement& mid = st.prefix[pv - j - 1];
            if (is_zero(mid)) continue;
            const AlgElement& last = *st.g[pv - j];
            const std::size_t k_lo = reading == StarStarReading::Derived ? 0 : 1;
            for (std::size_t k = k_lo; k <= j; ++k) {
                const std::uint32_t c = binom_mod(j, k, p).value();
                if (!c) continue;
                AlgElement first = g;
                for (std::size_t idx = pv - k; idx >= pv - j + 1 && idx <= pv; --idx)
                    first = bracket(L, first, *st.g[idx]);
                if (is_zero(first)) continue;
                Vec v = eval_cochain(M, 3, alpha, {first, mid, last});
                // Operators h_{l_p} ... h_{l_lo}, the rightmost acting first.
                const std::size_t lo = reading == StarStarReading::Derived ? pv - k + 1 : pv - k - 1;
                for (std::size_t idx = lo; idx <= pv; ++idx) v = st.rho[idx]->apply(v);
                vaxpy(p, p.mul(p.sign(j), c), v, seq_sum);
            }
        }
        vaxpy(p, p.mul(st.multiplicity, p.inv(static_cast<std::uint32_t>(st.count_a))), seq_sum, total);
    });
    return total;
}

}  // namespace

Vec eval_omega(const RestrictedModule& M, const Cochain2& c, const AlgElement& g, PeelOrder order) {
    const auto& L = M.lie();
    const Prime& p = M.prime();
    if (g.size() != L.dim()) throw DimensionMismatch("element length");
    guard(M);
    Vec total = zero_vec(M.dim);
    AlgElement rest = g;
    for (;;) {
        const std::size_t i = peel_index(rest, order);
        if (i == rest.size()) break;
        const std::uint32_t lambda = rest[i];
        AlgElement a = zero_vec(L.dim());
        a[i] = lambda;
        rest[i] = 0;
        vaxpy(p, p.pow(lambda, p.value()), c.omega_basis[i], total);
        if (!is_zero(rest)) total = vadd(p, total, star_correction(M, c.phi, a, rest));
    }
    return total;
}

Vec eval_beta(const RestrictedModule& M, const Cochain3& c, const AlgElement& g, const AlgElement& h,
              PeelOrder order, StarStarReading reading) {
    const auto& L = M.lie();
    const Prime& p = M.prime();
    const std::size_t n = L.dim();
    if (g.size() != n || h.size() != n) throw DimensionMismatch("element length");
    guard(M);
    Vec total = zero_vec(M.dim);
    AlgElement rest = h;
    for (;;) {
        const std::size_t i = peel_index(rest, order);
        if (i == rest.size()) break;
        const std::uint32_t lambda = rest[i];
        AlgElement a = zero_vec(n);
        a[i] = lambda;
        rest[i] = 0;
        const std::uint32_t lp = p.pow(lambda, p.value());
        for (std::size_t r = 0; r < n; ++r)
            if (g[r]) vaxpy(p, p.mul(lp, g[r]), c.beta_basis[r][i], total);
        if (!is_zero(rest))
            total = vsub(p, total, starstar_correction(M, c.alpha, g, a, rest, reading));
    }
    return total;
}

Vec psi_tilde(const RestrictedModule& M, const Vec& psi, const AlgElement& g) {
    const Prime& p = M.prime();
    Vec a = eval_cochain(M, 1, psi, {p_power(M.lie(), g)});
    Vec b = M.action(g).pow(p.value() - 1).apply(eval_cochain(M, 1, psi, {g}));
    return vsub(p, a, b);
}

Vec induced_beta(const RestrictedModule& M, const Cochain2& c, const AlgElement& g, const AlgElement& h) {
    const auto& L = M.lie();
    const Prime& p = M.prime();
    const std::size_t pv = p.value();
    Vec out = eval_cochain(M, 2, c.phi, {g, p_power(L, h)});
    const FpMatrix rh = M.action(h);
    for (std::size_t i = 0; i < pv; ++i) {
        const std::size_t j = pv - 1 - i;
        AlgElement first = bracket_power(L, g, h, j);
        if (is_zero(first)) continue;
        Vec v = rh.pow(i).apply(eval_cochain(M, 2, c.phi, {first, h}));
        vaxpy(p, p.neg(p.sign(i)), v, out);
    }
    return vadd(p, out, M.action(g).apply(eval_omega(M, c, h)));
}

FpMatrix delta0_matrix(const RestrictedModule& M) { return delta_cl_matrix(M, 0); }

Cochain2 delta1(const RestrictedModule& M, const Vec& psi) {
    const auto& L = M.lie();
    const Prime& p = M.prime();
    if (psi.size() != classical_cochain_dim(M, 1)) throw DimensionMismatch("1-cochain length");
    Cochain2 c;
    c.phi = delta_cl(M, 1, psi);
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Vec a = eval_cochain(M, 1, psi, {L.pi(i)});
        Vec b = M.rho[i].pow(p.value() - 1).apply(eval_cochain_basis(M, 1, psi, {i}));
        c.omega_basis.push_back(vsub(p, a, b));
    }
    return c;
}

FpMatrix delta1_matrix(const RestrictedModule& M) {
    const std::size_t src = classical_cochain_dim(M, 1);
    FpMatrix d(cochain2_dim(M), src, M.prime());
    for (std::size_t col = 0; col < src; ++col) d.set_column(col, to_coords(M, delta1(M, unit_vec(src, col))));
    return d;
}

Cochain3 delta2(const RestrictedModule& M, const Cochain2& c) {
    const auto& L = M.lie();
    const Prime& p = M.prime();
    const std::size_t n = L.dim(), pv = p.value();
    Cochain3 out;
    out.alpha = delta_cl(M, 2, c.phi);
    out.beta_basis.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const AlgElement ei = basis_element(L, i);
        for (std::size_t j = 0; j < n; ++j) {
            const AlgElement ej = basis_element(L, j);
            Vec v = eval_cochain(M, 2, c.phi, {ei, L.pi(j)});
            for (std::size_t a = 0; a < pv; ++a) {
                const std::size_t b = pv - 1 - a;
                AlgElement first = bracket_power(L, ei, ej, b);
                if (is_zero(first)) continue;
                Vec t = M.rho[j].pow(a).apply(eval_cochain(M, 2, c.phi, {first, ej}));
                vaxpy(p, p.neg(p.sign(a)), t, v);
            }
            v = vadd(p, v, M.rho[i].apply(c.omega_basis[j]));
            out.beta_basis[i][j] = v;
        }
    }
    return out;
}

FpMatrix delta2_matrix(const RestrictedModule& M) {
    const std::size_t src = cochain2_dim(M);
    FpMatrix d(cochain3_dim(M), src, M.prime());
    for (std::size_t col = 0; col < src; ++col)
        d.set_column(col, to_coords(M, delta2(M, cochain2_from_coords(M, unit_vec(src, col)))));
    return d;
}

CohomologyResult restricted_cohomology(const RestrictedModule& M, std::size_t k) {
    switch (k) {
        case 0:
            return cohomology_at(FpMatrix(M.dim, 0, M.prime()), delta0_matrix(M));
        case 1:
            return cohomology_at(delta0_matrix(M), delta1_matrix(M));
        case 2:
            return cohomology_at(delta1_matrix(M), delta2_matrix(M));
        default:
            throw DegreeTooHigh("restricted cohomology is available for k <= 2");
    }
}

ClassicalComparison compare_classical(const RestrictedModule& M, std::size_t k) {
    if (k != 1 && k != 2) throw DegreeTooHigh("comparison is defined for k = 1, 2");
    CohomologyResult res = restricted_cohomology(M, k);
    CohomologyResult cl = classical_cohomology(M, k);
    const std::size_t cdim = classical_cochain_dim(M, k);
    Subspace boundaries = column_space(delta_cl_matrix(M, k - 1));

    std::vector<Vec> columns = boundaries.basis();
    columns.insert(columns.end(), cl.representatives.begin(), cl.representatives.end());
    FpMatrix system = columns.empty() ? FpMatrix(cdim, 0, M.prime()) : FpMatrix::from_columns(columns, cdim, M.prime());

    FpMatrix map(cl.dim, res.dim, M.prime());
    for (std::size_t r = 0; r < res.dim; ++r) {
        Vec image(res.representatives[r].begin(), res.representatives[r].begin() + cdim);
        auto x = solve(system, image);
        if (!x) throw NotAComplex("restricted cocycle does not map to a classical cocycle");
        for (std::size_t c = 0; c < cl.dim; ++c) map.set(c, r, (*x)[boundaries.dim() + c]);
    }
    return {map, res.dim - rank(map)};
}

}  // namespace rescoh
