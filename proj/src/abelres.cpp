#include "rescoh/abelres.hpp"

#include <bit>
#include <string>

#include "rescoh/errors.hpp"
#include "rescoh/sampling.hpp"

namespace rescoh {

std::size_t ChainGenerator::t() const {
    std::size_t t = 0;
    for (auto x : mu) t += x;
    return t;
}

std::size_t ChainGenerator::s() const { return static_cast<std::size_t>(std::popcount(wedge)); }

std::vector<std::size_t> ChainGenerator::wedge_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < 32; ++i)
        if (wedge >> i & 1u) out.push_back(i);
    return out;
}

namespace {

void multidegrees(std::size_t n, std::size_t t, std::size_t pos, std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
    if (pos + 1 == n) {
        cur[pos] = static_cast<std::uint32_t>(t);
        out.push_back(cur);
        return;
    }
    // First coordinate smallest first gives lexicographic order.
    for (std::size_t a = 0; a <= t; ++a) {
        cur[pos] = static_cast<std::uint32_t>(a);
        multidegrees(n, t - a, pos + 1, cur, out);
    }
}

/// Sign of e_I ^ e_J relative to e_{I u J}; zero when they overlap.
int wedge_sign(std::uint32_t I, std::uint32_t J) {
    if (I & J) return 0;
    std::size_t inversions = 0;
    for (std::size_t j = 0; j < 32; ++j)
        if (J >> j & 1u) inversions += static_cast<std::size_t>(std::popcount(I >> (j + 1)));
    return inversions % 2 ? -1 : 1;
}

std::uint32_t signed_residue(const Prime& p, int sign, std::uint32_t c) { return sign < 0 ? p.neg(c) : c; }

}  // namespace

std::vector<ChainGenerator> chain_generators(std::size_t n, std::size_t k) {
    if (n > 31) throw TooLarge("resolution supports n <= 31");
    std::vector<ChainGenerator> out;
    for (std::size_t t = 0; 2 * t <= k; ++t) {
        const std::size_t s = k - 2 * t;
        if (s > n) continue;
        std::vector<std::vector<std::uint32_t>> mus;
        if (n == 0) {
            if (t == 0) mus.push_back({});
        } else {
            std::vector<std::uint32_t> cur(n, 0);
            multidegrees(n, t, 0, cur, mus);
        }
        TupleIndex subsets(n, s);
        for (const auto& mu : mus)
            for (const auto& I : subsets.tuples()) {
                std::uint32_t mask = 0;
                for (auto i : I) mask |= 1u << i;
                out.push_back({mu, mask});
            }
    }
    return out;
}

AbelianResolution::AbelianResolution(const RestrictedLieAlgebra& L) : U_(L), u_dim_(1) {
    if (!L.is_abelian()) throw NotAbelian("the resolution is built for abelian algebras only");
    for (std::size_t i = 0; i < L.dim(); ++i) u_dim_ *= L.prime().value();
}

std::vector<std::pair<ChainGenerator, UresElement>> AbelianResolution::d_generator(const ChainGenerator& g,
                                                                                   DifferentialPart part) const {
    const auto& L = lie();
    const Prime& p = L.prime();
    const std::size_t n = L.dim();
    std::map<ChainGenerator, UresElement> acc;
    auto add = [&](ChainGenerator h, std::uint32_t coef, const UresElement& u) {
        if (!coef) return;
        U_.axpy(coef, u, acc[std::move(h)]);
    };
    if (part != DifferentialPart::Symmetric) {
        std::size_t a = 0;
        for (auto i : g.wedge_indices()) {
            ChainGenerator h{g.mu, g.wedge & ~(1u << i)};
            add(h, p.sign(a), U_.generator(i));
            ++a;
        }
    }
    if (part != DifferentialPart::Koszul) {
        PBWMonomial top(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t muj = g.mu[j] % p.value();
            if (!muj) continue;
            ChainGenerator base{g.mu, g.wedge};
            base.mu[j] -= 1;
            const Vec& img = L.pi(j);
            for (std::size_t l = 0; l < n; ++l) {
                const int sg = wedge_sign(1u << l, g.wedge);
                if (!img[l] || !sg) continue;
                add({base.mu, g.wedge | (1u << l)}, signed_residue(p, sg, p.mul(muj, img[l])), U_.one());
            }
            const int sg = wedge_sign(1u << j, g.wedge);
            if (sg) {
                PBWMonomial m(n, 0);
                m[j] = p.value() - 1;
                add({base.mu, g.wedge | (1u << j)}, signed_residue(p, -sg, muj), U_.monomial(m));
            }
        }
    }
    std::vector<std::pair<ChainGenerator, UresElement>> out;
    for (auto& [h, u] : acc)
        if (!u.terms.empty()) out.emplace_back(h, std::move(u));
    return out;
}

ChainElement AbelianResolution::d(const ChainElement& x, DifferentialPart part) const {
    ChainElement out;
    for (const auto& [g, u] : x)
        for (const auto& [h, v] : d_generator(g, part)) U_.axpy(1, U_.multiply(v, u), out[h]);
    for (auto it = out.begin(); it != out.end();) it = it->second.terms.empty() ? out.erase(it) : std::next(it);
    return out;
}

ChainElement AbelianResolution::multiply(const ChainElement& a, const ChainElement& b) const {
    const Prime& p = lie().prime();
    ChainElement out;
    for (const auto& [g, x] : a)
        for (const auto& [h, y] : b) {
            const int sg = wedge_sign(g.wedge, h.wedge);
            if (!sg) continue;
            ChainGenerator gh{g.mu, g.wedge | h.wedge};
            for (std::size_t i = 0; i < gh.mu.size(); ++i) gh.mu[i] += h.mu[i];
            U_.axpy(signed_residue(p, sg, 1), U_.multiply(x, y), out[gh]);
        }
    for (auto it = out.begin(); it != out.end();) it = it->second.terms.empty() ? out.erase(it) : std::next(it);
    return out;
}

ChainElement AbelianResolution::add(const ChainElement& a, const ChainElement& b) const {
    ChainElement out = a;
    for (const auto& [g, u] : b) U_.axpy(1, u, out[g]);
    for (auto it = out.begin(); it != out.end();) it = it->second.terms.empty() ? out.erase(it) : std::next(it);
    return out;
}

ChainElement AbelianResolution::scale(std::uint32_t s, const ChainElement& a) const {
    ChainElement out;
    for (const auto& [g, u] : a) {
        UresElement v = U_.scale(s, u);
        if (!v.terms.empty()) out[g] = std::move(v);
    }
    return out;
}

bool AbelianResolution::is_zero(const ChainElement& a) const {
    for (const auto& [g, u] : a)
        if (!u.terms.empty()) return false;
    return true;
}

ChainElement AbelianResolution::generator_element(const ChainGenerator& g, const UresElement& u) const {
    ChainElement out;
    if (!u.terms.empty()) out[g] = u;
    return out;
}

ChainElement AbelianResolution::g0(std::size_t i) const {
    return generator_element({std::vector<std::uint32_t>(lie().dim(), 0), 0}, U_.generator(i));
}

ChainElement AbelianResolution::g1(std::size_t i) const {
    return generator_element({std::vector<std::uint32_t>(lie().dim(), 0), 1u << i}, U_.one());
}

ChainElement AbelianResolution::g2(std::size_t i) const {
    std::vector<std::uint32_t> mu(lie().dim(), 0);
    mu.at(i) = 1;
    return generator_element({mu, 0}, U_.one());
}

ChainElement AbelianResolution::c(std::size_t i) const {
    const auto& L = lie();
    const Prime& p = L.prime();
    const std::size_t n = L.dim();
    ChainElement out;
    for (std::size_t l = 0; l < n; ++l)
        if (L.pi(i)[l]) out = add(out, generator_element({std::vector<std::uint32_t>(n, 0), 1u << l}, U_.scalar(L.pi(i)[l])));
    PBWMonomial m(n, 0);
    m.at(i) = p.value() - 1;
    return add(out, generator_element({std::vector<std::uint32_t>(n, 0), 1u << i}, U_.monomial(m, p.neg(1))));
}

ChainBasisElement ChainComplexSlice::basis_element(const UresAlgebra& U, std::size_t index) const {
    const auto& g = generators.at(index / u_dim);
    return {g.mu, g.wedge_indices(), U.decode(index % u_dim)};
}

namespace {

std::map<ChainGenerator, std::size_t> index_of(const std::vector<ChainGenerator>& gens) {
    std::map<ChainGenerator, std::size_t> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) idx[gens[i]] = i;
    return idx;
}

/// Matrix of d (or a part of it) from the free module on `src` to the one on `dst`,
/// over F with the PBW basis in each generator slot.
FpMatrix differential_matrix(const AbelianResolution& R, const std::vector<ChainGenerator>& src,
                             const std::vector<ChainGenerator>& dst, DifferentialPart part) {
    const auto& U = R.ures();
    const std::size_t P = R.u_dim();
    const auto dst_index = index_of(dst);
    FpMatrix m(dst.size() * P, src.size() * P, U.prime());
    for (std::size_t gi = 0; gi < src.size(); ++gi) {
        const auto terms = R.d_generator(src[gi], part);
        for (std::uint64_t r = 0; r < P; ++r) {
            UresElement x;
            x.terms[r] = 1;
            for (const auto& [h, u] : terms) {
                auto it = dst_index.find(h);
                if (it == dst_index.end()) throw IndexOutOfRange("differential leaves the target degree");
                for (const auto& [key, c] : U.multiply(u, x).terms) m.add_to(it->second * P + key, gi * P + r, c);
            }
        }
    }
    return m;
}

Vec to_coordinates(const AbelianResolution& R, const ChainElement& x, const std::vector<ChainGenerator>& gens) {
    const auto idx = index_of(gens);
    const std::size_t P = R.u_dim();
    Vec v(gens.size() * P, 0);
    for (const auto& [g, u] : x) {
        auto it = idx.find(g);
        if (it == idx.end()) throw IndexOutOfRange("element has a generator outside the slice");
        for (const auto& [key, c] : u.terms) v[it->second * P + key] = c;
    }
    return v;
}

}  // namespace

std::vector<ChainComplexSlice> build_resolution(const RestrictedLieAlgebra& L, std::size_t k_max,
                                                const BuildOptions& opts) {
    AbelianResolution R(L);
    if (k_max > L.prime().value() && !opts.allow_beyond_p)
        throw DegreeTooHigh("resolution degrees are capped at p = " + std::to_string(L.prime().value()));
    std::vector<ChainComplexSlice> slices;
    for (std::size_t k = 0; k <= k_max; ++k) {
        ChainComplexSlice s{k, chain_generators(L.dim(), k), R.u_dim(), FpMatrix(0, 0, L.prime())};
        if (s.dim() > opts.max_slice_dim)
            throw TooLarge("C_" + std::to_string(k) + " has dimension " + std::to_string(s.dim()));
        if (k == 0) {
            s.d = FpMatrix(1, R.u_dim(), L.prime());
            s.d.set(0, 0, 1);
        } else {
            s.d = differential_matrix(R, s.generators, slices[k - 1].generators, DifferentialPart::Full);
        }
        slices.push_back(std::move(s));
    }
    return slices;
}

Report resolution_complex_checks(const std::vector<ChainComplexSlice>& slices) {
    Report report;
    std::string bad;
    for (std::size_t k = 2; k < slices.size() && bad.empty(); ++k)
        if (!(slices[k - 1].d * slices[k].d).is_zero()) bad = "k=" + std::to_string(k);
    bad.empty() ? report.pass("d_squared") : report.fail("d_squared", bad);
    if (slices.size() > 1) {
        (slices[0].d * slices[1].d).is_zero() ? report.pass("augmentation")
                                             : report.fail("augmentation", "eps d_1 != 0");
    }
    return report;
}

std::size_t resolution_homology(const std::vector<ChainComplexSlice>& slices, std::size_t k) {
    if (k + 1 >= slices.size())
        throw DegreeTooHigh("homology at degree " + std::to_string(k) + " needs C_" + std::to_string(k + 1));
    return quotient_dim(slices[k + 1].d, slices[k].d);
}

AuxHomology aux_C_homology(const RestrictedLieAlgebra& L, std::size_t k) {
    AbelianResolution R(L);
    const std::size_t n = L.dim(), P = R.u_dim();
    if (k > n) throw DegreeTooHigh("Lambda^k vanishes for k > n");
    auto gens = [&](std::size_t s) { return s > n ? std::vector<ChainGenerator>{} : chain_generators(n, s); };
    // With mu = 0 only, the generators of wedge degree s are exactly those of total degree s
    // with t = 0; filter them.
    auto wedge_only = [&](std::size_t s) {
        std::vector<ChainGenerator> out;
        for (auto& g : gens(s))
            if (g.t() == 0) out.push_back(g);
        return out;
    };
    const auto here = wedge_only(k);
    FpMatrix out_map = k == 0 ? FpMatrix(0, here.size() * P, L.prime())
                              : differential_matrix(R, here, wedge_only(k - 1), DifferentialPart::Koszul);
    const auto above = wedge_only(k + 1);
    FpMatrix in_map = above.empty() ? FpMatrix(here.size() * P, 0, L.prime())
                                    : differential_matrix(R, above, here, DifferentialPart::Koszul);

    AuxHomology res;
    res.dim = quotient_dim(in_map, out_map);

    TupleIndex tuples(n, k);
    for (const auto& I : tuples.tuples()) {
        ChainElement e = R.generator_element({std::vector<std::uint32_t>(n, 0), 0}, R.ures().one());
        if (L.is_strongly_abelian()) {
            PBWMonomial m(n, 0);
            std::uint32_t mask = 0;
            for (auto i : I) {
                m[i] = L.prime().value() - 1;
                mask |= 1u << i;
            }
            e = R.generator_element({std::vector<std::uint32_t>(n, 0), mask}, R.ures().monomial(m));
        } else {
            for (auto i : I) e = R.multiply(e, R.c(i));
        }
        res.representatives.push_back(to_coordinates(R, e, here));
    }
    bool cycles = true;
    for (const auto& v : res.representatives) cycles = cycles && is_zero(out_map.apply(v));
    Subspace boundaries = column_space(in_map);
    std::vector<Vec> all = boundaries.basis();
    all.insert(all.end(), res.representatives.begin(), res.representatives.end());
    const std::size_t joint = Subspace::span(here.size() * P, L.prime(), all).dim();
    res.representatives_form_basis =
        cycles && joint == boundaries.dim() + res.representatives.size() && res.representatives.size() == res.dim;
    return res;
}

namespace {

/// Symbol complex: basis e^mu (x) c_I with F coefficients, the same index set as chain_generators.
FpMatrix symbol_boundary(std::size_t n, const Prime& p, const std::vector<ChainGenerator>& src,
                         const std::vector<ChainGenerator>& dst) {
    const auto idx = index_of(dst);
    FpMatrix m(dst.size(), src.size(), p);
    for (std::size_t c = 0; c < src.size(); ++c) {
        const auto& g = src[c];
        for (std::size_t j = 0; j < n; ++j) {
            const std::uint32_t muj = g.mu[j] % p.value();
            const int sg = wedge_sign(1u << j, g.wedge);
            if (!muj || !sg) continue;
            ChainGenerator h{g.mu, g.wedge | (1u << j)};
            h.mu[j] -= 1;
            m.add_to(idx.at(h), c, signed_residue(p, sg, muj));
        }
    }
    return m;
}

FpMatrix symbol_homotopy(const Prime& p, const std::vector<ChainGenerator>& src,
                         const std::vector<ChainGenerator>& dst) {
    const auto idx = index_of(dst);
    FpMatrix m(dst.size(), src.size(), p);
    for (std::size_t c = 0; c < src.size(); ++c) {
        const auto& g = src[c];
        std::size_t a = 0;
        for (auto i : g.wedge_indices()) {
            ChainGenerator h{g.mu, g.wedge & ~(1u << i)};
            h.mu[i] += 1;
            m.add_to(idx.at(h), c, p.sign(a));
            ++a;
        }
    }
    return m;
}

}  // namespace

Report frakC_check(const RestrictedLieAlgebra& L, std::size_t k_max) {
    AbelianResolution R(L);
    const Prime& p = L.prime();
    const std::size_t n = L.dim(), P = R.u_dim();
    if (k_max >= p.value()) throw DegreeTooHigh("k_max must be below p");
    std::vector<std::vector<ChainGenerator>> sym;
    for (std::size_t k = 0; k <= k_max + 2; ++k) sym.push_back(chain_generators(n, k));
    // boundary[k] : degree k -> k-1, homotopy[k] : degree k -> k+1.
    std::vector<FpMatrix> boundary, homotopy;
    for (std::size_t k = 0; k <= k_max + 1; ++k) {
        boundary.push_back(k == 0 ? FpMatrix(0, sym[0].size(), p) : symbol_boundary(n, p, sym[k], sym[k - 1]));
        homotopy.push_back(symbol_homotopy(p, sym[k], sym[k + 1]));
    }
    Report report;

    std::string bad;
    for (std::size_t k = 0; k <= k_max && bad.empty(); ++k) {
        FpMatrix total = boundary[k + 1] * homotopy[k];
        if (k > 0) total = total + homotopy[k - 1] * boundary[k];
        for (std::size_t c = 0; c < sym[k].size() && bad.empty(); ++c) {
            Vec expect = zero_vec(sym[k].size());
            expect[c] = static_cast<std::uint32_t>((sym[k][c].t() + sym[k][c].s()) % p.value());
            if (total.column(c) != expect) bad = "degree " + std::to_string(k) + " symbol " + std::to_string(c);
        }
    }
    bad.empty() ? report.pass("homotopy") : report.fail("homotopy", bad);

    bad.clear();
    auto realize = [&](const ChainGenerator& g) {
        ChainElement e = R.generator_element({g.mu, 0}, R.ures().one());
        for (auto i : g.wedge_indices()) e = R.multiply(e, R.c(i));
        return e;
    };
    for (std::size_t k = 1; k <= k_max && bad.empty(); ++k)
        for (std::size_t c = 0; c < sym[k].size() && bad.empty(); ++c) {
            ChainElement lhs;
            for (std::size_t r = 0; r < sym[k - 1].size(); ++r)
                if (boundary[k].at(r, c)) lhs = R.add(lhs, R.scale(boundary[k].at(r, c), realize(sym[k - 1][r])));
            ChainElement rhs = R.d(realize(sym[k][c]), DifferentialPart::Symmetric);
            if (!R.is_zero(R.add(lhs, R.scale(p.neg(1), rhs))))
                bad = "degree " + std::to_string(k) + " symbol " + std::to_string(c);
        }
    bad.empty() ? report.pass("realization") : report.fail("realization", bad);

    // The U_res factor is a free passenger, so homology over F is P times the symbol homology.
    const std::size_t h0 = P * quotient_dim(boundary[1], boundary[0]);
    h0 == P ? report.pass("homology_H0")
            : report.fail("homology_H0", "dim H_0 = " + std::to_string(h0) + ", expected " + std::to_string(P));
    bad.clear();
    for (std::size_t k = 1; k <= k_max && bad.empty(); ++k) {
        const std::size_t h = P * quotient_dim(boundary[k + 1], boundary[k]);
        if (h) bad = "dim H_" + std::to_string(k) + " = " + std::to_string(h);
    }
    bad.empty() ? report.pass("homology_vanishes") : report.fail("homology_vanishes", bad);
    return report;
}

Report dga_check(const RestrictedLieAlgebra& L, std::size_t degree_bound, std::size_t samples) {
    AbelianResolution R(L);
    const Prime& p = L.prime();
    const std::size_t n = L.dim();
    if (degree_bound >= p.value()) throw DegreeTooHigh("degree bound must be below p");
    Report report;

    auto degree_of = [](const ChainElement& x) { return x.begin()->first.degree(); };
    auto leibniz = [&](const ChainElement& a, const ChainElement& b) {
        ChainElement lhs = R.d(R.multiply(a, b));
        ChainElement rhs = R.multiply(R.d(a), b);
        const std::uint32_t sg = p.sign(degree_of(a));
        rhs = R.add(rhs, R.scale(sg, R.multiply(a, R.d(b))));
        return R.is_zero(R.add(lhs, R.scale(p.neg(1), rhs)));
    };

    std::vector<std::pair<std::string, ChainElement>> gens;
    for (std::size_t i = 0; i < n; ++i) {
        gens.emplace_back("g0_" + std::to_string(i), R.g0(i));
        gens.emplace_back("g1_" + std::to_string(i), R.g1(i));
        gens.emplace_back("g2_" + std::to_string(i), R.g2(i));
    }
    std::string bad;
    for (const auto& [na, a] : gens)
        for (const auto& [nb, b] : gens)
            if (bad.empty() && !leibniz(a, b)) bad = na + "*" + nb;
    bad.empty() ? report.pass("leibniz_generators") : report.fail("leibniz_generators", bad);

    bad.clear();
    Sampler s = Sampler::for_test(p.value(), n, "dga_check");
    std::vector<std::vector<ChainGenerator>> by_degree;
    for (std::size_t k = 0; k <= degree_bound; ++k) by_degree.push_back(chain_generators(n, k));
    const std::uint64_t P = R.u_dim();
    auto random_monomial = [&](std::size_t max_degree) {
        for (;;) {
            const std::size_t k = s.below(static_cast<std::uint32_t>(max_degree + 1));
            if (by_degree[k].empty()) continue;
            const auto& g = by_degree[k][s.below(static_cast<std::uint32_t>(by_degree[k].size()))];
            UresElement u;
            u.terms[s.next() % P] = 1 + s.below(p.value() - 1);
            return R.generator_element(g, u);
        }
    };
    for (std::size_t i = 0; i < samples && bad.empty(); ++i) {
        ChainElement a = random_monomial(degree_bound);
        ChainElement b = random_monomial(degree_bound - degree_of(a));
        if (!leibniz(a, b)) bad = "sample " + std::to_string(i);
    }
    bad.empty() ? report.pass("leibniz_sampled") : report.fail("leibniz_sampled", bad);

    bad.clear();
    for (std::size_t i = 0; i < n && bad.empty(); ++i) {
        if (!R.is_zero(R.d(R.c(i)))) bad = "c_" + std::to_string(i);
        if (!R.is_zero(R.add(R.d(R.g2(i)), R.scale(p.neg(1), R.c(i))))) bad = "d(g2_" + std::to_string(i) + ") != c";
    }
    bad.empty() ? report.pass("c_cycles") : report.fail("c_cycles", bad);

    bad.clear();
    for (std::uint32_t mask = 1; mask < (1u << n) && bad.empty(); ++mask) {
        if (std::popcount(mask) < 2 || static_cast<std::size_t>(std::popcount(mask)) > degree_bound) continue;
        ChainElement prod = R.generator_element({std::vector<std::uint32_t>(n, 0), 0}, R.ures().one());
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) prod = R.multiply(prod, R.c(i));
        if (!R.is_zero(R.d(prod))) bad = "mask " + std::to_string(mask);
    }
    bad.empty() ? report.pass("c_products") : report.fail("c_products", bad);
    return report;
}

std::size_t abelian_cochain_dim(const RestrictedModule& M, std::size_t k) {
    return chain_generators(M.lie().dim(), k).size() * M.dim;
}

FpMatrix abelian_cochain_differential(const AbelianResolution& R, const RestrictedModule& M, std::size_t k) {
    const std::size_t n = R.lie().dim(), m = M.dim;
    const auto src = chain_generators(n, k);
    const auto dst = chain_generators(n, k + 1);
    const auto src_index = index_of(src);
    FpMatrix out(dst.size() * m, src.size() * m, M.prime());
    for (std::size_t r = 0; r < dst.size(); ++r)
        for (const auto& [g, u] : R.d_generator(dst[r])) {
            const std::size_t c = src_index.at(g);
            FpMatrix block = represent(R.ures(), u, M.rho);
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) out.add_to(r * m + a, c * m + b, block.at(a, b));
        }
    return out;
}

std::size_t abelian_cochain_cohomology(const RestrictedModule& M, std::size_t k, bool allow_beyond_exact_range) {
    const auto& L = M.lie();
    if (!allow_beyond_exact_range && k + 1 >= L.prime().value())
        throw DegreeTooHigh("dualized cohomology needs k + 1 < p");
    AbelianResolution R(L);
    FpMatrix outgoing = abelian_cochain_differential(R, M, k);
    FpMatrix incoming = k == 0 ? FpMatrix(abelian_cochain_dim(M, 0), 0, M.prime())
                               : abelian_cochain_differential(R, M, k - 1);
    return quotient_dim(incoming, outgoing);
}

}  // namespace rescoh
