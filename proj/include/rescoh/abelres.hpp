#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <tuple>
#include <utility>
#include <vector>

#include "rescoh/classical.hpp"
#include "rescoh/report.hpp"
#include "rescoh/ures.hpp"

namespace rescoh {

/// Free generator e^mu (x) e_I of the resolution, I given as a bitmask.
struct ChainGenerator {
    std::vector<std::uint32_t> mu;
    std::uint32_t wedge = 0;

    std::size_t t() const;
    std::size_t s() const;
    std::size_t degree() const { return 2 * t() + s(); }
    std::vector<std::size_t> wedge_indices() const;

    friend bool operator<(const ChainGenerator& a, const ChainGenerator& b) {
        return std::tie(a.mu, a.wedge) < std::tie(b.mu, b.wedge);
    }
    friend bool operator==(const ChainGenerator& a, const ChainGenerator& b) {
        return a.mu == b.mu && a.wedge == b.wedge;
    }
};

/// e^mu (x) e_I (x) e^r.
struct ChainBasisElement {
    std::vector<std::uint32_t> mu;
    std::vector<std::size_t> I;
    PBWMonomial r;
};

/// Generators of total degree k: by t ascending, then mu and I lexicographically.
std::vector<ChainGenerator> chain_generators(std::size_t n, std::size_t k);

/// Element of S(g) (x) Lambda(g) (x) U_res as U-coefficients on generators.
using ChainElement = std::map<ChainGenerator, UresElement>;

/// Which parts of the differential to apply: the Koszul part (first sum) and the
/// part coming from the symmetric factor (second and third sums).
enum class DifferentialPart { Full, Koszul, Symmetric };

/// Abelian-case resolution context: owns U_res and evaluates d on chain elements.
class AbelianResolution {
public:
    /// Throws NotAbelian.
    explicit AbelianResolution(const RestrictedLieAlgebra& L);

    const RestrictedLieAlgebra& lie() const { return U_.lie(); }
    const UresAlgebra& ures() const { return U_; }
    std::size_t u_dim() const { return u_dim_; }

    /// d(gen (x) 1) as (generator, coefficient) terms.
    std::vector<std::pair<ChainGenerator, UresElement>> d_generator(const ChainGenerator& g,
                                                                    DifferentialPart part = DifferentialPart::Full) const;
    ChainElement d(const ChainElement& x, DifferentialPart part = DifferentialPart::Full) const;
    /// (e^mu e_I x)(e^nu e_J y) = e^{mu+nu} (e_I ^ e_J) xy.
    ChainElement multiply(const ChainElement& a, const ChainElement& b) const;
    ChainElement add(const ChainElement& a, const ChainElement& b) const;
    ChainElement scale(std::uint32_t s, const ChainElement& a) const;
    bool is_zero(const ChainElement& a) const;

    ChainElement generator_element(const ChainGenerator& g, const UresElement& u) const;
    /// g^0_i = 1 (x) 1 (x) e_i, g^1_i = 1 (x) e_i (x) 1, g^2_i = e_i (x) 1 (x) 1.
    ChainElement g0(std::size_t i) const;
    ChainElement g1(std::size_t i) const;
    ChainElement g2(std::size_t i) const;
    /// c_i = e_i^[p] (x) 1 - e_i (x) e_i^(p-1), in Lambda^1 (x) U.
    ChainElement c(std::size_t i) const;

private:
    UresAlgebra U_;
    std::size_t u_dim_;
};

struct ChainComplexSlice {
    std::size_t degree = 0;
    std::vector<ChainGenerator> generators;
    std::size_t u_dim = 0;
    /// d_k : C_k -> C_{k-1}; for k = 0 this is the augmentation C_0 -> F (1 row).
    FpMatrix d;

    std::size_t dim() const { return generators.size() * u_dim; }
    /// Basis vector index = generator index * u_dim + PBW code of r.
    ChainBasisElement basis_element(const UresAlgebra& U, std::size_t index) const;
};

struct BuildOptions {
    /// Permit k_max above p (exactness is only claimed below p).
    bool allow_beyond_p = false;
    /// Refuse when some slice would have more than this many basis vectors.
    std::size_t max_slice_dim = 20000;
};

/// Slices C_0..C_{k_max}. Throws NotAbelian, DegreeTooHigh (k_max > p), TooLarge.
std::vector<ChainComplexSlice> build_resolution(const RestrictedLieAlgebra& L, std::size_t k_max,
                                                const BuildOptions& opts = {});

/// Checks "d_squared" at every built degree and "augmentation" (eps d_1 = 0).
Report resolution_complex_checks(const std::vector<ChainComplexSlice>& slices);

/// Augmented homology at degree k (k = 0 uses ker eps). Needs slices up to k + 1.
std::size_t resolution_homology(const std::vector<ChainComplexSlice>& slices, std::size_t k);

struct AuxHomology {
    std::size_t dim = 0;
    /// Expected class representatives as coordinate vectors on Lambda^k (x) U
    /// (wedge tuple index * u_dim + PBW code).
    std::vector<Vec> representatives;
    /// Representatives are cycles, independent modulo boundaries, and as many as dim.
    bool representatives_form_basis = false;
};

/// Homology of Lambda^k g (x) U_res under the Koszul part of d.
AuxHomology aux_C_homology(const RestrictedLieAlgebra& L, std::size_t k);

/// Homotopy identity, realization of the symbol complex inside C, and homology
/// of the symbol complex up to k_max. Checks: "homotopy", "realization",
/// "homology_H0", "homology_vanishes".
Report frakC_check(const RestrictedLieAlgebra& L, std::size_t k_max);

/// Leibniz rule and cycle checks on the product structure of C_*.
/// Checks: "leibniz_generators", "leibniz_sampled", "c_cycles", "c_products".
Report dga_check(const RestrictedLieAlgebra& L, std::size_t degree_bound, std::size_t samples = 100);

/// dim of the dualized cochain space Hom_U(C_k, M) = (#generators of degree k) * dim M.
std::size_t abelian_cochain_dim(const RestrictedModule& M, std::size_t k);

/// H^k of Hom_U(C_*, M). Requires k + 1 < p unless `allow_beyond_exact_range`.
std::size_t abelian_cochain_cohomology(const RestrictedModule& M, std::size_t k,
                                       bool allow_beyond_exact_range = false);

/// Matrix of the dual differential Hom_U(C_k, M) -> Hom_U(C_{k+1}, M).
FpMatrix abelian_cochain_differential(const AbelianResolution& R, const RestrictedModule& M, std::size_t k);

}  // namespace rescoh
