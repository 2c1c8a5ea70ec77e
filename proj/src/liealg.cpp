#include "rescoh/liealg.hpp"

#include <sstream>
#include <string>

#include "rescoh/errors.hpp"
#include "rescoh/sampling.hpp"

namespace rescoh {

namespace {

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
    if (labels.empty())
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    if (labels.size() != n) throw DimensionMismatch("label count differs from dimension");
    return labels;
}

}  // namespace

RestrictedLieAlgebra::RestrictedLieAlgebra(Prime p, StructureConstants c, std::vector<Vec> pi,
                                           std::vector<std::string> labels)
    : p_(p), n_(pi.size()), c_(std::move(c)), pi_(std::move(pi)),
      labels_(default_labels(n_, std::move(labels))), abelian_(true) {
    if (c_.size() != n_) throw DimensionMismatch("structure constants have wrong outer size");
    sparse_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (c_[i].size() != n_) throw DimensionMismatch("structure constants have wrong inner size");
        if (pi_[i].size() != n_) throw DimensionMismatch("p-operator image has wrong length");
        for (auto& x : pi_[i]) x %= p_.value();
        for (std::size_t j = 0; j < n_; ++j) {
            if (c_[i][j].size() != n_) throw DimensionMismatch("bracket vector has wrong length");
            for (std::size_t k = 0; k < n_; ++k) {
                auto& x = c_[i][j][k];
                x %= p_.value();
                if (x) {
                    sparse_[i * n_ + j].push_back({static_cast<std::uint32_t>(k), x});
                    abelian_ = false;
                }
            }
        }
    }
}

RestrictedLieAlgebra RestrictedLieAlgebra::unchecked(Prime p, StructureConstants c, std::vector<Vec> pi,
                                                     std::vector<std::string> labels) {
    return RestrictedLieAlgebra(p, std::move(c), std::move(pi), std::move(labels));
}

RestrictedLieAlgebra RestrictedLieAlgebra::create(Prime p, StructureConstants c, std::vector<Vec> pi,
                                                  std::vector<std::string> labels) {
    RestrictedLieAlgebra L(p, std::move(c), std::move(pi), std::move(labels));
    VerifyOptions opts;
    opts.samples = 0;
    opts.exhaustive_bound = 0;
    Report r = verify_restricted(L, opts);
    for (const char* name : {"antisymmetry", "jacobi"}) {
        const Check* ch = r.find(name);
        if (ch && !ch->pass) throw InvalidStructure(std::string(name) + " fails at " + *ch->counterexample);
    }
    return L;
}

bool RestrictedLieAlgebra::is_strongly_abelian() const {
    if (!abelian_) return false;
    for (const auto& v : pi_)
        if (!is_zero(v)) return false;
    return true;
}

AlgElement basis_element(const RestrictedLieAlgebra& L, std::size_t i) {
    if (i >= L.dim()) throw IndexOutOfRange("basis index " + std::to_string(i));
    return unit_vec(L.dim(), i);
}

AlgElement bracket(const RestrictedLieAlgebra& L, const AlgElement& x, const AlgElement& y) {
    const std::size_t n = L.dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("element length differs from dimension");
    const std::uint32_t p = L.prime().value();
    std::vector<std::uint64_t> acc(n, 0);
    if (!L.is_abelian()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!y[j] || i == j) continue;
                const std::uint64_t s = static_cast<std::uint64_t>(x[i]) * y[j] % p;
                for (const auto& t : L.sparse_bracket(i, j)) acc[t.index] += s * t.coef;
            }
        }
    }
    AlgElement r(n);
    for (std::size_t k = 0; k < n; ++k) r[k] = static_cast<std::uint32_t>(acc[k] % p);
    return r;
}

AlgElement multibracket(const RestrictedLieAlgebra& L, const std::vector<AlgElement>& gs) {
    if (gs.empty()) throw EmptySequence("multibracket of no elements");
    AlgElement acc = gs[0];
    if (acc.size() != L.dim()) throw DimensionMismatch("element length differs from dimension");
    for (std::size_t i = 1; i < gs.size(); ++i) acc = bracket(L, acc, gs[i]);
    return acc;
}

AlgElement bracket_power(const RestrictedLieAlgebra& L, const AlgElement& x, const AlgElement& y,
                         std::size_t copies) {
    AlgElement acc = x;
    for (std::size_t i = 0; i < copies && !is_zero(acc); ++i) acc = bracket(L, acc, y);
    return acc;
}

namespace {

void r2_dfs(const RestrictedLieAlgebra& L, const AlgElement& g, const AlgElement& h, const AlgElement& prefix,
            std::size_t depth, std::size_t count_g, AlgElement& acc) {
    if (is_zero(prefix)) return;
    const Prime& p = L.prime();
    if (depth == p.value()) {
        vaxpy(p, p.inv(static_cast<std::uint32_t>(count_g)), prefix, acc);
        return;
    }
    r2_dfs(L, g, h, bracket(L, prefix, g), depth + 1, count_g + 1, acc);
    r2_dfs(L, g, h, bracket(L, prefix, h), depth + 1, count_g, acc);
}

void guard_prime(const RestrictedLieAlgebra& L) {
    if (!L.is_abelian() && L.prime().value() > kMaxNonabelianPrime)
        throw UnsupportedPrime("nonabelian p-power needs p <= " + std::to_string(kMaxNonabelianPrime));
}

}  // namespace

AlgElement r2_correction(const RestrictedLieAlgebra& L, const AlgElement& g, const AlgElement& h) {
    AlgElement acc = zero_vec(L.dim());
    if (L.is_abelian()) return acc;
    guard_prime(L);
    r2_dfs(L, g, h, bracket(L, g, h), 2, 1, acc);
    return acc;
}

std::size_t peel_index(const AlgElement& x, PeelOrder order) {
    if (order == PeelOrder::Ascending) {
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i]) return i;
    } else {
        for (std::size_t i = x.size(); i-- > 0;)
            if (x[i]) return i;
    }
    return x.size();
}

AlgElement p_power(const RestrictedLieAlgebra& L, const AlgElement& x, PeelOrder order) {
    const Prime& p = L.prime();
    if (x.size() != L.dim()) throw DimensionMismatch("element length differs from dimension");
    guard_prime(L);
    AlgElement total = zero_vec(L.dim());
    AlgElement rest = x;
    for (;;) {
        std::size_t i = peel_index(rest, order);
        if (i == rest.size()) break;
        const std::uint32_t lambda = rest[i];
        AlgElement g = zero_vec(L.dim());
        g[i] = lambda;
        rest[i] = 0;
        vaxpy(p, p.pow(lambda, p.value()), L.pi(i), total);
        if (!is_zero(rest)) total = vadd(p, total, r2_correction(L, g, rest));
    }
    return total;
}

FpMatrix ad_matrix(const RestrictedLieAlgebra& L, const AlgElement& x) {
    FpMatrix m(L.dim(), L.dim(), L.prime());
    for (std::size_t j = 0; j < L.dim(); ++j) m.set_column(j, bracket(L, x, basis_element(L, j)));
    return m;
}

bool enumerates_all(const RestrictedLieAlgebra& L, std::uint64_t exhaustive_bound) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        total *= L.prime().value();
        if (total > exhaustive_bound) return false;
    }
    return true;
}

std::vector<AlgElement> verification_set(const RestrictedLieAlgebra& L, const std::string& name,
                                         std::uint64_t exhaustive_bound, std::size_t samples) {
    const std::size_t n = L.dim();
    const std::uint32_t p = L.prime().value();
    std::vector<AlgElement> out;
    if (enumerates_all(L, exhaustive_bound)) {
        AlgElement v = zero_vec(n);
        for (;;) {
            out.push_back(v);
            std::size_t k = 0;
            while (k < n && ++v[k] == p) v[k++] = 0;
            if (k == n) break;
        }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) out.push_back(basis_element(L, i));
    Sampler s = Sampler::for_test(p, n, name);
    for (std::size_t i = 0; i < samples; ++i) out.push_back(s.vec(n, L.prime()));
    return out;
}

Report verify_restricted(const RestrictedLieAlgebra& L, const VerifyOptions& opts) {
    Report report;
    const std::size_t n = L.dim();
    const Prime& p = L.prime();
    auto done = [&] { return opts.stop_at_first_failure && !report.ok(); };

    {
        std::string bad;
        for (std::size_t i = 0; i < n && bad.empty(); ++i)
            for (std::size_t j = i; j < n && bad.empty(); ++j)
                if (vadd(p, L.bracket_basis(i, j), L.bracket_basis(j, i)) != zero_vec(n))
                    bad = "[" + L.labels()[i] + "," + L.labels()[j] + "]";
        bad.empty() ? report.pass("antisymmetry") : report.fail("antisymmetry", bad);
    }
    if (done()) return report;

    {
        std::string bad;
        for (std::size_t i = 0; i < n && bad.empty(); ++i)
            for (std::size_t j = i + 1; j < n && bad.empty(); ++j)
                for (std::size_t k = j + 1; k < n && bad.empty(); ++k) {
                    auto a = basis_element(L, i), b = basis_element(L, j), c = basis_element(L, k);
                    AlgElement s = multibracket(L, {a, b, c});
                    s = vadd(p, s, multibracket(L, {b, c, a}));
                    s = vadd(p, s, multibracket(L, {c, a, b}));
                    if (!is_zero(s))
                        bad = "(" + L.labels()[i] + "," + L.labels()[j] + "," + L.labels()[k] + ")";
                }
        bad.empty() ? report.pass("jacobi") : report.fail("jacobi", bad);
    }
    if (done()) return report;

    // The constructor runs with an empty set to check only the bilinear axioms.
    if (opts.exhaustive_bound == 0 && opts.samples == 0) return report;

    const auto elements = verification_set(L, "verify_restricted", opts.exhaustive_bound, opts.samples);
    std::vector<AlgElement> powers;
    powers.reserve(elements.size());
    for (const auto& h : elements) powers.push_back(p_power(L, h));

    {
        std::string bad;
        for (std::size_t e = 0; e < elements.size() && bad.empty(); ++e)
            for (std::size_t i = 0; i < n && bad.empty(); ++i) {
                auto g = basis_element(L, i);
                if (bracket(L, g, powers[e]) != bracket_power(L, g, elements[e], p.value()))
                    bad = "g=" + L.labels()[i] + " h=" + vec_str(elements[e]);
            }
        bad.empty() ? report.pass("r3") : report.fail("r3", bad);
    }
    if (done()) return report;

    {
        std::string bad;
        for (std::size_t e = 0; e < elements.size() && bad.empty(); ++e)
            if (p_power(L, elements[e], PeelOrder::Descending) != powers[e])
                bad = "x=" + vec_str(elements[e]);
        bad.empty() ? report.pass("peel_order") : report.fail("peel_order", bad);
    }
    return report;
}

InferredPOperator infer_p_operator(const StructureConstants& c, Prime p,
                                   const std::vector<std::string>& labels) {
    const std::size_t n = c.size();
    RestrictedLieAlgebra bare = RestrictedLieAlgebra::create(p, c, std::vector<Vec>(n, zero_vec(n)), labels);
    // Column k of the system is vec(ad e_k); unknowns are the coordinates of x.
    FpMatrix system(n * n, n, p);
    std::vector<FpMatrix> ads;
    for (std::size_t k = 0; k < n; ++k) {
        ads.push_back(ad_matrix(bare, basis_element(bare, k)));
        system.set_column(k, ads.back().data());
    }
    std::vector<Vec> pi;
    for (std::size_t j = 0; j < n; ++j) {
        FpMatrix target = ads[j].pow(p.value());
        auto x = solve(system, target.data());
        if (!x) throw NotRestrictable("(ad " + bare.labels()[j] + ")^p is not inner");
        pi.push_back(*x);
    }
    InferredPOperator out{pi, n - rank(system), {}};
    RestrictedLieAlgebra L = RestrictedLieAlgebra::create(p, c, pi, labels);
    out.report = verify_restricted(L);
    if (!out.report.ok()) {
        const Check* f = out.report.first_failure();
        throw VerificationFailed(f->name + " fails at " + f->counterexample.value_or(""));
    }
    return out;
}

FpMatrix represent(const std::vector<FpMatrix>& rho, const AlgElement& x) {
    if (rho.empty()) throw EmptySequence("representation with no matrices");
    if (rho.size() != x.size()) throw DimensionMismatch("element length differs from representation");
    FpMatrix m(rho[0].rows(), rho[0].cols(), rho[0].prime());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) m = m + rho[i].scaled(x[i]);
    return m;
}

WittAlgebra witt_algebra(Prime prime) {
    const std::uint32_t p = prime.value();
    StructureConstants c(p, std::vector<Vec>(p, zero_vec(p)));
    std::vector<Vec> pi(p, zero_vec(p));
    std::vector<std::string> labels;
    std::vector<FpMatrix> rep;
    for (std::uint32_t i = 0; i < p; ++i) {
        labels.push_back("D" + std::to_string(i));
        for (std::uint32_t j = 0; j < p; ++j)
            c[i][j][(i + j) % p] = prime.sub(j, i);
        FpMatrix m(p, p, prime);
        for (std::uint32_t k = 0; k < p; ++k) m.set((k + i) % p, k, k);
        rep.push_back(m);
    }
    pi[0][0] = 1;
    auto L = RestrictedLieAlgebra::create(prime, c, pi, labels);
    for (std::uint32_t i = 0; i < p; ++i) {
        if (!(rep[i].pow(p) == represent(rep, pi[i])))
            throw VerificationFailed("Witt representation is not restricted at D" + std::to_string(i));
        for (std::uint32_t j = 0; j < p; ++j)
            if (!(rep[i] * rep[j] - rep[j] * rep[i] == represent(rep, c[i][j])))
                throw VerificationFailed("Witt representation is not a homomorphism at [D" +
                                         std::to_string(i) + ",D" + std::to_string(j) + "]");
    }
    return {std::move(L), std::move(rep)};
}

}  // namespace rescoh
