#include "rescoh/classical.hpp"

#include <algorithm>
#include <string>

#include "rescoh/errors.hpp"

namespace rescoh {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

TupleIndex::TupleIndex(std::size_t n, std::size_t q) : n_(n) {
    if (n > 24) throw TooLarge("tuple index supports n <= 24");
    by_mask_.assign(std::size_t{1} << n, static_cast<std::size_t>(-1));
    if (q > n) return;
    std::vector<std::size_t> t(q);
    for (std::size_t i = 0; i < q; ++i) t[i] = i;
    for (;;) {
        std::size_t mask = 0;
        for (auto x : t) mask |= std::size_t{1} << x;
        by_mask_[mask] = tuples_.size();
        tuples_.push_back(t);
        // Next combination in lexicographic order.
        std::size_t i = q;
        while (i > 0 && t[i - 1] == n - q + i - 1) --i;
        if (i == 0) break;
        ++t[i - 1];
        for (std::size_t j = i; j < q; ++j) t[j] = t[j - 1] + 1;
    }
}

std::size_t TupleIndex::rank(const std::vector<std::size_t>& t) const {
    std::size_t mask = 0;
    for (auto x : t) {
        if (x >= n_) throw IndexOutOfRange("tuple entry " + std::to_string(x));
        mask |= std::size_t{1} << x;
    }
    std::size_t r = by_mask_[mask];
    if (r == static_cast<std::size_t>(-1)) throw IndexOutOfRange("not an indexed tuple");
    return r;
}

std::size_t classical_cochain_dim(const RestrictedModule& M, std::size_t q) {
    return binomial(M.lie().dim(), q) * M.dim;
}

Vec eval_cochain_basis(const RestrictedModule& M, std::size_t q, const Vec& phi,
                       const std::vector<std::size_t>& indices) {
    const std::size_t m = M.dim;
    if (indices.size() != q) throw DimensionMismatch("cochain evaluated at wrong number of arguments");
    std::vector<std::size_t> t = indices;
    bool odd = false;
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = 0; j + 1 < t.size() - i; ++j)
            if (t[j] > t[j + 1]) {
                std::swap(t[j], t[j + 1]);
                odd = !odd;
            }
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return zero_vec(m);
    // Ranking through a TupleIndex per call would be wasteful; use the
    // combinatorial number system directly (lexicographic rank).
    const std::size_t n = M.lie().dim();
    std::size_t r = 0, prev = 0;
    for (std::size_t i = 0; i < q; ++i) {
        for (std::size_t v = (i ? prev + 1 : 0); v < t[i]; ++v) r += binomial(n - v - 1, q - i - 1);
        prev = t[i];
    }
    Vec out(phi.begin() + r * m, phi.begin() + (r + 1) * m);
    return odd ? vneg(M.prime(), out) : out;
}

namespace {

void eval_rec(const RestrictedModule& M, std::size_t q, const Vec& phi, const std::vector<AlgElement>& args,
              std::size_t depth, std::uint32_t coef, std::vector<std::size_t>& idx, Vec& out) {
    const Prime& p = M.prime();
    if (depth == q) {
        vaxpy(p, coef, eval_cochain_basis(M, q, phi, idx), out);
        return;
    }
    const auto& g = args[depth];
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i]) continue;
        if (std::find(idx.begin(), idx.end(), i) != idx.end()) continue;
        idx.push_back(i);
        eval_rec(M, q, phi, args, depth + 1, p.mul(coef, g[i]), idx, out);
        idx.pop_back();
    }
}

}  // namespace

Vec eval_cochain(const RestrictedModule& M, std::size_t q, const Vec& phi, const std::vector<AlgElement>& args) {
    if (args.size() != q) throw DimensionMismatch("cochain evaluated at wrong number of arguments");
    if (phi.size() != classical_cochain_dim(M, q)) throw DimensionMismatch("cochain coordinate length");
    Vec out = zero_vec(M.dim);
    std::vector<std::size_t> idx;
    eval_rec(M, q, phi, args, 0, 1, idx, out);
    return out;
}

Vec delta_cl(const RestrictedModule& M, std::size_t q, const Vec& phi) {
    const auto& L = M.lie();
    const std::size_t n = L.dim(), m = M.dim;
    const Prime& p = M.prime();
    if (phi.size() != classical_cochain_dim(M, q)) throw DimensionMismatch("cochain coordinate length");
    TupleIndex target(n, q + 1);
    Vec out(target.size() * m, 0);
    for (std::size_t r = 0; r < target.size(); ++r) {
        const auto& T = target.tuple(r);
        Vec val = zero_vec(m);
        // Positions s, t are 1-based in the sign exponents.
        for (std::size_t s = 0; s < T.size(); ++s)
            for (std::size_t t = s + 1; t < T.size(); ++t) {
                const std::uint32_t sign = p.sign(s + t + 1);
                for (const auto& term : L.sparse_bracket(T[s], T[t])) {
                    std::vector<std::size_t> args{term.index};
                    for (std::size_t u = 0; u < T.size(); ++u)
                        if (u != s && u != t) args.push_back(T[u]);
                    vaxpy(p, p.mul(sign, term.coef), eval_cochain_basis(M, q, phi, args), val);
                }
            }
        for (std::size_t s = 0; s < T.size(); ++s) {
            std::vector<std::size_t> args;
            for (std::size_t u = 0; u < T.size(); ++u)
                if (u != s) args.push_back(T[u]);
            Vec v = M.rho[T[s]].apply(eval_cochain_basis(M, q, phi, args));
            vaxpy(p, p.sign(s + 1), v, val);
        }
        std::copy(val.begin(), val.end(), out.begin() + r * m);
    }
    return out;
}

FpMatrix delta_cl_matrix(const RestrictedModule& M, std::size_t q) {
    const std::size_t src = classical_cochain_dim(M, q), dst = classical_cochain_dim(M, q + 1);
    FpMatrix d(dst, src, M.prime());
    for (std::size_t c = 0; c < src; ++c) d.set_column(c, delta_cl(M, q, unit_vec(src, c)));
    return d;
}

CohomologyResult cohomology_at(const FpMatrix& incoming, const FpMatrix& outgoing) {
    CohomologyResult res;
    res.dim = quotient_dim(incoming, outgoing);
    res.representatives = complement_representatives(nullspace(outgoing), column_space(incoming));
    if (res.representatives.size() != res.dim) throw NotAComplex("representative count disagrees with rank count");
    return res;
}

CohomologyResult classical_cohomology(const RestrictedModule& M, std::size_t q) {
    FpMatrix outgoing = delta_cl_matrix(M, q);
    FpMatrix incoming = q == 0 ? FpMatrix(classical_cochain_dim(M, 0), 0, M.prime()) : delta_cl_matrix(M, q - 1);
    return cohomology_at(incoming, outgoing);
}

}  // namespace rescoh
