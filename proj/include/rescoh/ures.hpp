#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "rescoh/liealg.hpp"

namespace rescoh {

/// Exponent vector (k_0, ..., k_{n-1}), 0 <= k_j < p, standing for e_0^k_0 ... e_{n-1}^k_{n-1}.
using PBWMonomial = std::vector<std::uint32_t>;

/// Linear combination of PBW monomials. Keys are monomial codes of the owning
/// UresAlgebra; their numeric order is the lexicographic order of exponent vectors.
struct UresElement {
    std::map<std::uint64_t, std::uint32_t> terms;
    friend bool operator==(const UresElement& a, const UresElement& b) { return a.terms == b.terms; }
};

constexpr std::uint64_t kPbwBasisBound = 3125;

/// All p^n monomials in lexicographic order; throws TooLarge beyond `bound`.
std::vector<PBWMonomial> pbw_basis(const RestrictedLieAlgebra& L, std::uint64_t bound = kPbwBasisBound);

enum class RewriteStrategy { Leftmost, Rightmost };

/// U_res(L). Holds a memo of left multiplications by generators, guarded by a mutex.
class UresAlgebra {
public:
    explicit UresAlgebra(RestrictedLieAlgebra L);

    const RestrictedLieAlgebra& lie() const { return L_; }
    const Prime& prime() const { return L_.prime(); }
    std::size_t rank() const { return L_.dim(); }

    std::uint64_t encode(const PBWMonomial& m) const;
    PBWMonomial decode(std::uint64_t key) const;

    UresElement zero() const { return {}; }
    UresElement one() const;
    UresElement scalar(std::uint32_t c) const;
    UresElement generator(std::size_t i) const;
    UresElement monomial(const PBWMonomial& m, std::uint32_t coef = 1) const;
    /// Image of a Lie algebra element under g -> U_res.
    UresElement from_lie(const AlgElement& x) const;

    UresElement add(const UresElement& a, const UresElement& b) const;
    UresElement sub(const UresElement& a, const UresElement& b) const;
    UresElement scale(std::uint32_t s, const UresElement& a) const;
    /// y += s * x
    void axpy(std::uint32_t s, const UresElement& x, UresElement& y) const;

    /// Rewrites a word in the generators to PBW form by swaps and p-th power
    /// reductions, applying the rule at the leftmost or rightmost redex.
    UresElement normalize(const std::vector<std::size_t>& word,
                          RewriteStrategy strategy = RewriteStrategy::Leftmost) const;

    /// e_i * a, memoized on (i, monomial).
    UresElement left_multiply(std::size_t i, const UresElement& a) const;
    UresElement multiply(const UresElement& a, const UresElement& b) const;

private:
    UresElement lmul_monomial(std::size_t i, std::uint64_t key) const;

    RestrictedLieAlgebra L_;
    std::vector<std::uint64_t> place_;  // place_[j] = p^(n-1-j)
    mutable std::mutex memo_mutex_;
    mutable std::unordered_map<std::uint64_t, UresElement> memo_;
};

/// Coefficient of the empty monomial.
std::uint32_t augmentation(const UresElement& u);

/// u acting on v through a representation rho of L; monomials act right to left,
/// so rho[n-1]^k_{n-1} is applied first.
Vec act(const UresAlgebra& U, const UresElement& u, const std::vector<FpMatrix>& rho, const Vec& v);

/// Matrix of u under rho.
FpMatrix represent(const UresAlgebra& U, const UresElement& u, const std::vector<FpMatrix>& rho);

/// rho respects brackets and p-th powers, and U_res products go to matrix products.
/// Exhaustive over elements (and PBW monomial pairs) when those sets fit under
/// `exhaustive_bound`, sampled otherwise. Checks: "bracket", "p_power", "ures_products".
Report verify_representation(const UresAlgebra& U, const std::vector<FpMatrix>& rho,
                             std::uint64_t exhaustive_bound = 243, std::size_t samples = 500);

}  // namespace rescoh
