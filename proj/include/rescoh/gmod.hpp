#pragma once

#include <memory>
#include <string>
#include <vector>

#include "rescoh/liealg.hpp"
#include "rescoh/report.hpp"
#include "rescoh/ures.hpp"

namespace rescoh {

using AlgebraPtr = std::shared_ptr<const RestrictedLieAlgebra>;

inline AlgebraPtr share(RestrictedLieAlgebra L) {
    return std::make_shared<const RestrictedLieAlgebra>(std::move(L));
}

/// A g-module given by matrices: rho[i] is the action of e_i.
struct RestrictedModule {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<FpMatrix> rho;

    const RestrictedLieAlgebra& lie() const { return *algebra; }
    const Prime& prime() const { return algebra->prime(); }
    /// Action matrix of a general element.
    FpMatrix action(const AlgElement& x) const;
};

/// Shape-checked construction; the module axioms are judged by verify_module.
RestrictedModule make_module(AlgebraPtr L, std::vector<FpMatrix> rho);
RestrictedModule trivial_module(AlgebraPtr L, std::size_t dim = 1);
RestrictedModule adjoint_module(AlgebraPtr L);
/// Hom(N, M) with (g f) = rho_M(g) f - f rho_N(g). Basis: matrix units, index
/// src * dim(M) + tgt. Throws MixedAlgebras.
RestrictedModule hom_module(const RestrictedModule& N, const RestrictedModule& M);
RestrictedModule direct_sum(const RestrictedModule& A, const RestrictedModule& B);

/// Index of the matrix unit sending source basis vector `src` to target `tgt`.
inline std::size_t hom_index(std::size_t src, std::size_t tgt, std::size_t target_dim) {
    return src * target_dim + tgt;
}

/// Checks "bracket_compatibility" on basis pairs and "p_compatibility" on the basis.
Report verify_module(const RestrictedModule& M);

/// M^g, the common kernel of all rho[i].
Subspace invariants(const RestrictedModule& M);

Vec act(const UresAlgebra& U, const UresElement& u, const RestrictedModule& M, const Vec& v);

/// True when both modules are over the same algebra (same structure, not just same pointer).
bool same_algebra(const RestrictedLieAlgebra& a, const RestrictedLieAlgebra& b);

}  // namespace rescoh
