#pragma once

#include <optional>
#include <vector>

#include "rescoh/gmod.hpp"
#include "rescoh/report.hpp"
#include "rescoh/rescochain.hpp"
#include "rescoh/sampling.hpp"

namespace rescoh {

/// Derivations are stored in 1-cochain layout: coordinate i * n + r is the
/// e_r-coefficient of D(e_i). This makes Der_res directly comparable with Z^1(g; g).
struct DerivationSpace {
    Subspace basis;
    /// False when condition (ii) was only checked on a sampled verification set.
    bool exhaustive = true;
};

/// Solves D[g,h] = [g,Dh] + [Dg,h] on basis pairs and D(g^[p]) = (ad g)^(p-1) D(g)
/// on verification_set(L).
DerivationSpace restricted_derivations(const RestrictedLieAlgebra& L, const VerifyOptions& opts = {});

/// span of ad(e_i), same layout.
Subspace inner_derivations(const RestrictedLieAlgebra& L);

/// dim Der_res / ad.
std::size_t outer_derivation_dim(const RestrictedLieAlgebra& L, const VerifyOptions& opts = {});

/// Uniform element of a subspace (random combination of its basis).
Vec random_element(const Subspace& s, Sampler& rng);

struct ExtensionModule {
    RestrictedModule E;
    /// N occupies coordinates [0, n_dim), M occupies [n_dim, n_dim + m_dim).
    std::size_t n_dim = 0;
    std::size_t m_dim = 0;
};

/// psi(e_i) as a dim(M) x dim(N) matrix, read from a cochain on hom_module(N, M).
FpMatrix hom_value(const Vec& psi, std::size_t i, std::size_t n_dim, std::size_t m_dim, const Prime& p);

/// E = N (+) M with g(n, m) = (gn, gm + psi(g)(n)). No cocycle check.
ExtensionModule extension_module(const RestrictedModule& N, const RestrictedModule& M, const Vec& psi);

/// Builds E from a cocycle psi, checks the module axioms, extracts the cocycle back
/// with the canonical splitting (exact) and with the splitting n -> (n, f(n)) for a
/// sampled f (difference delta^0(-f)). When psi is a coboundary delta^0(f), also checks
/// that (n, m) -> (n, m - f(n)) is an isomorphism onto N (+) M.
/// Checks: "module_axioms", "canonical_roundtrip", "perturbed_roundtrip", and
/// "split_equivalence" when psi is a coboundary. Throws NotACocycle, MixedAlgebras.
Report module_extension_roundtrip(const RestrictedModule& N, const RestrictedModule& M, const Vec& psi,
                                  std::size_t perturbations = 3);

struct ExtensionAlgebra {
    RestrictedLieAlgebra e;
    /// h occupies the first h_dim basis vectors, g the remaining ones.
    std::size_t h_dim = 0;
};

/// e = h (+) g with [(h,g),(h',g')] = (g h' - g' h + phi(g,g'), [g,g']) and
/// (0, e_i)^[p] = (omega(e_i), e_i^[p]), (h, 0)^[p] = 0. A nonzero `h_pmap`
/// is rejected with NotStronglyAbelian. No cocycle check.
ExtensionAlgebra extension_algebra(const RestrictedModule& H, const Cochain2& c2,
                                   const std::vector<Vec>& h_pmap = {});

/// Builds e from a cocycle, runs verify_restricted, extracts (phi', omega') with the
/// canonical splitting g -> (0, g) (exact, and omega' also at sampled general g), and
/// with the splitting g -> (-psi(g), g) for sampled psi (difference delta^1 psi).
/// When c2 = delta^1 psi for a known psi, (h, g) -> (h - psi(g), g) is checked to be
/// an isomorphism onto the split extension.
/// Checks: "restricted_axioms", "canonical_roundtrip", "omega_general",
/// "perturbed_roundtrip", and "split_equivalence" when c2 is a coboundary.
/// Throws NotACocycle, NotStronglyAbelian.
Report algebra_extension_roundtrip(const RestrictedModule& H, const Cochain2& c2,
                                   const std::vector<Vec>& h_pmap = {}, std::size_t perturbations = 3,
                                   const VerifyOptions& opts = {});

/// F[t]/(t^2) (x) g as a 2n-dimensional algebra: basis e_0..e_{n-1}, t e_0..t e_{n-1};
/// [e_i, e_j] = [e_i, e_j] + phi(e_i, e_j) t, [e_i, t e_j] = t [e_i, e_j],
/// e_i^[p] = e_i^[p] + omega(e_i) t, (t e_i)^[p] = 0.
RestrictedLieAlgebra deformed_algebra(const RestrictedLieAlgebra& L, const Cochain2& c2);

struct DeformationResult {
    bool is_cocycle = false;
    /// The deformed algebra passed verify_restricted.
    bool deformation_ok = false;
    /// verify_restricted on the deformed algebra; names the failing axiom.
    Report axioms;
    /// "agreement" (deformation_ok == is_cocycle) and, when psi was supplied,
    /// "trivial_equivalence": x -> x - t psi(x) carries the deformation onto the trivial one.
    Report report;
};

/// c2 has adjoint coefficients. `psi` marks c2 as delta^1 psi.
DeformationResult deformation_check(const AlgebraPtr& L, const Cochain2& c2,
                                    const std::optional<Vec>& psi = std::nullopt, const VerifyOptions& opts = {});

}  // namespace rescoh
