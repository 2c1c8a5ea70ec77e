#include "rescoh/ures.hpp"

#include <functional>
#include <string>
#include <tuple>

#include "rescoh/errors.hpp"
#include "rescoh/sampling.hpp"

namespace rescoh {

std::vector<PBWMonomial> pbw_basis(const RestrictedLieAlgebra& L, std::uint64_t bound) {
    const std::size_t n = L.dim();
    const std::uint32_t p = L.prime().value();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= p;
        if (total > bound) throw TooLarge("p^n exceeds PBW basis bound " + std::to_string(bound));
    }
    std::vector<PBWMonomial> out;
    out.reserve(total);
    PBWMonomial m(n, 0);
    for (std::uint64_t c = 0; c < total; ++c) {
        out.push_back(m);
        // Increment with the last exponent fastest, which gives lexicographic order.
        for (std::size_t j = n; j-- > 0;) {
            if (++m[j] < p) break;
            m[j] = 0;
        }
    }
    return out;
}

UresAlgebra::UresAlgebra(RestrictedLieAlgebra L) : L_(std::move(L)) {
    const std::size_t n = L_.dim();
    const std::uint64_t p = L_.prime().value();
    place_.assign(n, 1);
    std::uint64_t acc = 1;
    for (std::size_t j = n; j-- > 0;) {
        place_[j] = acc;
        if (acc > (std::uint64_t{1} << 56) / p) throw TooLarge("p^n does not fit monomial codes");
        acc *= p;
    }
}

std::uint64_t UresAlgebra::encode(const PBWMonomial& m) const {
    if (m.size() != rank()) throw DimensionMismatch("monomial length");
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] >= prime().value()) throw IndexOutOfRange("PBW exponent must be < p");
        key += m[j] * place_[j];
    }
    return key;
}

PBWMonomial UresAlgebra::decode(std::uint64_t key) const {
    PBWMonomial m(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        m[j] = static_cast<std::uint32_t>(key / place_[j]);
        key %= place_[j];
    }
    return m;
}

UresElement UresAlgebra::one() const { return scalar(1); }

UresElement UresAlgebra::scalar(std::uint32_t c) const {
    UresElement u;
    c %= prime().value();
    if (c) u.terms[0] = c;
    return u;
}

UresElement UresAlgebra::generator(std::size_t i) const {
    if (i >= rank()) throw IndexOutOfRange("generator index " + std::to_string(i));
    PBWMonomial m(rank(), 0);
    m[i] = 1;
    return monomial(m);
}

UresElement UresAlgebra::monomial(const PBWMonomial& m, std::uint32_t coef) const {
    UresElement u;
    coef %= prime().value();
    if (coef) u.terms[encode(m)] = coef;
    return u;
}

UresElement UresAlgebra::from_lie(const AlgElement& x) const {
    if (x.size() != rank()) throw DimensionMismatch("element length");
    UresElement u;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i]) u.terms[place_[i]] = x[i];
    return u;
}

void UresAlgebra::axpy(std::uint32_t s, const UresElement& x, UresElement& y) const {
    const Prime& p = prime();
    s %= p.value();
    if (!s) return;
    for (const auto& [k, c] : x.terms) {
        auto it = y.terms.find(k);
        std::uint32_t add = p.mul(s, c);
        if (it == y.terms.end()) {
            y.terms.emplace(k, add);
        } else {
            it->second = p.add(it->second, add);
            if (!it->second) y.terms.erase(it);
        }
    }
}

UresElement UresAlgebra::add(const UresElement& a, const UresElement& b) const {
    UresElement r = a;
    axpy(1, b, r);
    return r;
}

UresElement UresAlgebra::sub(const UresElement& a, const UresElement& b) const {
    UresElement r = a;
    axpy(prime().neg(1), b, r);
    return r;
}

UresElement UresAlgebra::scale(std::uint32_t s, const UresElement& a) const {
    UresElement r;
    axpy(s, a, r);
    return r;
}

UresElement UresAlgebra::normalize(const std::vector<std::size_t>& word, RewriteStrategy strategy) const {
    const std::size_t n = rank();
    const Prime& p = prime();
    const std::size_t pv = p.value();
    for (auto w : word)
        if (w >= n) throw IndexOutOfRange("generator index " + std::to_string(w) + " in word");

    using Word = std::vector<std::size_t>;
    auto inversions = [](const Word& w) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
        return c;
    };
    // Every rewrite either shortens a word or swaps one descent, so popping the
    // longest, most inverted word first sees each word once with its full coefficient.
    // Rewriting is linear; only the redex chosen inside a word follows the strategy.
    using Key = std::tuple<std::size_t, std::size_t, Word>;
    std::map<Key, std::uint32_t, std::greater<Key>> pending;
    pending[{word.size(), inversions(word), word}] = 1;
    UresElement result;
    auto push = [&](Word w, std::uint32_t c) {
        if (!c) return;
        const std::size_t len = w.size(), inv = inversions(w);
        auto& slot = pending[{len, inv, std::move(w)}];
        slot = p.add(slot, c);
    };
    while (!pending.empty()) {
        auto it = pending.begin();
        Word w = std::get<2>(it->first);
        std::uint32_t coef = it->second;
        pending.erase(it);
        if (!coef) continue;

        // Redexes: a descent w[k] > w[k+1], or p equal letters starting at k.
        auto redex_at = [&](std::size_t k) -> int {
            if (k + 1 < w.size() && w[k] > w[k + 1]) return 1;
            if (k + pv <= w.size()) {
                bool run = true;
                for (std::size_t t = 1; t < pv && run; ++t) run = w[k + t] == w[k];
                if (run) return 2;
            }
            return 0;
        };
        std::size_t pos = w.size();
        int kind = 0;
        if (strategy == RewriteStrategy::Leftmost) {
            for (std::size_t k = 0; k < w.size() && !kind; ++k)
                if ((kind = redex_at(k))) pos = k;
        } else {
            for (std::size_t k = w.size(); k-- > 0 && !kind;)
                if ((kind = redex_at(k))) pos = k;
        }

        if (kind == 0) {
            PBWMonomial m(n, 0);
            for (auto g : w) ++m[g];
            UresElement term;
            term.terms[encode(m)] = coef;
            axpy(1, term, result);
        } else if (kind == 1) {
            const std::size_t a = w[pos], b = w[pos + 1];
            Word swapped = w;
            std::swap(swapped[pos], swapped[pos + 1]);
            push(swapped, coef);
            for (const auto& t : L_.sparse_bracket(a, b)) {
                Word shorter(w.begin(), w.begin() + pos);
                shorter.push_back(t.index);
                shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
                push(shorter, p.mul(coef, t.coef));
            }
        } else {
            const Vec& img = L_.pi(w[pos]);
            for (std::size_t l = 0; l < n; ++l) {
                if (!img[l]) continue;
                Word shorter(w.begin(), w.begin() + pos);
                shorter.push_back(l);
                shorter.insert(shorter.end(), w.begin() + pos + pv, w.end());
                push(shorter, p.mul(coef, img[l]));
            }
        }
    }
    return result;
}

UresElement UresAlgebra::lmul_monomial(std::size_t i, std::uint64_t key) const {
    const std::uint64_t memo_key = key * rank() + i;
    {
        std::lock_guard<std::mutex> lock(memo_mutex_);
        auto it = memo_.find(memo_key);
        if (it != memo_.end()) return it->second;
    }
    const std::uint32_t p = prime().value();
    PBWMonomial k = decode(key);
    std::size_t j = 0;
    while (j < k.size() && k[j] == 0) ++j;

    UresElement result;
    if (i < j) {
        k[i] = 1;
        result.terms[encode(k)] = 1;
    } else if (i == j) {
        if (k[i] + 1 < p) {
            k[i] += 1;
            result.terms[encode(k)] = 1;
        } else {
            // e_i^p = e_i^[p]
            k[i] = 0;
            UresElement rest;
            rest.terms[encode(k)] = 1;
            const Vec& img = L_.pi(i);
            for (std::size_t l = 0; l < img.size(); ++l)
                if (img[l]) axpy(img[l], left_multiply(l, rest), result);
        }
    } else {
        // e_i e_j X = e_j (e_i X) + [e_i, e_j] X
        k[j] -= 1;
        UresElement x;
        x.terms[encode(k)] = 1;
        result = left_multiply(j, left_multiply(i, x));
        for (const auto& t : L_.sparse_bracket(i, j)) axpy(t.coef, left_multiply(t.index, x), result);
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(memo_key, result);
    return result;
}

UresElement UresAlgebra::left_multiply(std::size_t i, const UresElement& a) const {
    if (i >= rank()) throw IndexOutOfRange("generator index " + std::to_string(i));
    UresElement r;
    for (const auto& [key, c] : a.terms) axpy(c, lmul_monomial(i, key), r);
    return r;
}

UresElement UresAlgebra::multiply(const UresElement& a, const UresElement& b) const {
    UresElement r;
    for (const auto& [key, c] : a.terms) {
        PBWMonomial m = decode(key);
        UresElement y = b;
        for (std::size_t j = m.size(); j-- > 0;)
            for (std::uint32_t t = 0; t < m[j]; ++t) y = left_multiply(j, y);
        axpy(c, y, r);
    }
    return r;
}

std::uint32_t augmentation(const UresElement& u) {
    auto it = u.terms.find(0);
    return it == u.terms.end() ? 0 : it->second;
}

Vec act(const UresAlgebra& U, const UresElement& u, const std::vector<FpMatrix>& rho, const Vec& v) {
    if (rho.size() != U.rank()) throw DimensionMismatch("representation has wrong number of matrices");
    const Prime& p = U.prime();
    Vec out = zero_vec(v.size());
    for (const auto& [key, c] : u.terms) {
        PBWMonomial m = U.decode(key);
        Vec w = v;
        for (std::size_t j = m.size(); j-- > 0;)
            for (std::uint32_t t = 0; t < m[j]; ++t) w = rho[j].apply(w);
        vaxpy(p, c, w, out);
    }
    return out;
}

FpMatrix represent(const UresAlgebra& U, const UresElement& u, const std::vector<FpMatrix>& rho) {
    if (rho.size() != U.rank()) throw DimensionMismatch("representation has wrong number of matrices");
    const std::size_t d = rho.empty() ? 0 : rho[0].rows();
    FpMatrix out(d, d, U.prime());
    for (const auto& [key, c] : u.terms) {
        PBWMonomial m = U.decode(key);
        FpMatrix acc = FpMatrix::identity(d, U.prime());
        for (std::size_t j = 0; j < m.size(); ++j)
            if (m[j]) acc = acc * rho[j].pow(m[j]);
        out = out + acc.scaled(c);
    }
    return out;
}

Report verify_representation(const UresAlgebra& U, const std::vector<FpMatrix>& rho, std::uint64_t exhaustive_bound,
                             std::size_t samples) {
    const auto& L = U.lie();
    const Prime& p = L.prime();
    const std::size_t n = L.dim();
    Report report;
    const auto elements = verification_set(L, "verify_representation", exhaustive_bound, samples);
    const bool all = enumerates_all(L, exhaustive_bound);
    std::vector<FpMatrix> images;
    for (const auto& x : elements) images.push_back(represent(rho, x));

    std::string bad;
    auto check_pair = [&](std::size_t a, std::size_t b) {
        const FpMatrix lhs = represent(rho, bracket(L, elements[a], elements[b]));
        if (lhs != images[a] * images[b] - images[b] * images[a]) bad = "pair " + std::to_string(a) + "," + std::to_string(b);
    };
    if (all) {
        for (std::size_t a = 0; a < elements.size() && bad.empty(); ++a)
            for (std::size_t b = a + 1; b < elements.size() && bad.empty(); ++b) check_pair(a, b);
    } else {
        // Basis pairs first, then each sample against its mirror.
        for (std::size_t a = 0; a < n && bad.empty(); ++a)
            for (std::size_t b = a + 1; b < n && bad.empty(); ++b) check_pair(a, b);
        for (std::size_t a = n; a < elements.size() && bad.empty(); ++a) check_pair(a, elements.size() - 1 - (a - n));
    }
    bad.empty() ? report.pass("bracket") : report.fail("bracket", bad);

    bad.clear();
    for (std::size_t a = 0; a < elements.size() && bad.empty(); ++a)
        if (represent(rho, p_power(L, elements[a])) != images[a].pow(p.value())) bad = "element " + std::to_string(a);
    bad.empty() ? report.pass("p_power") : report.fail("p_power", bad);

    bad.clear();
    std::uint64_t dim = 1;
    for (std::size_t i = 0; i < n; ++i) dim *= p.value();
    auto check_product = [&](const UresElement& a, const UresElement& b, const std::string& label) {
        if (represent(U, U.multiply(a, b), rho) != represent(U, a, rho) * represent(U, b, rho)) bad = label;
    };
    if (dim <= exhaustive_bound) {
        for (std::uint64_t a = 0; a < dim && bad.empty(); ++a)
            for (std::uint64_t b = 0; b < dim && bad.empty(); ++b)
                check_product(U.monomial(U.decode(a)), U.monomial(U.decode(b)),
                              "monomials " + std::to_string(a) + "," + std::to_string(b));
    } else {
        Sampler s = Sampler::for_test(p.value(), n, "verify_representation");
        // Products of dense high-degree elements fill all of U_res; samples stay at
        // total degree <= 3 so the rewriting is exercised without that blowup.
        auto random_element = [&] {
            UresElement u;
            for (int t = 0; t < 3; ++t) {
                PBWMonomial m(n, 0);
                for (std::uint32_t k = s.below(4); k > 0; --k) {
                    const std::size_t j = s.below(static_cast<std::uint32_t>(n));
                    if (m[j] + 1 < p.value()) ++m[j];
                }
                U.axpy(1 + s.below(p.value() - 1), U.monomial(m), u);
            }
            return u;
        };
        for (std::size_t i = 0; i < samples && bad.empty(); ++i)
            check_product(random_element(), random_element(), "sample " + std::to_string(i));
    }
    bad.empty() ? report.pass("ures_products") : report.fail("ures_products", bad);
    return report;
}

}  // namespace rescoh
