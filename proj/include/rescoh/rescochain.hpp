#pragma once

#include <vector>

#include "rescoh/classical.hpp"

namespace rescoh {

/// (phi, omega): phi a classical 2-cochain, omega stored by its basis values.
struct Cochain2 {
    Vec phi;
    std::vector<Vec> omega_basis;
};

/// (alpha, beta): alpha a classical 3-cochain, beta stored as beta_basis[i][j] = beta(e_i, e_j).
struct Cochain3 {
    Vec alpha;
    std::vector<std::vector<Vec>> beta_basis;
};

/// Largest prime for which the omega/beta extension algorithms run on nonabelian algebras.
constexpr std::uint32_t kMaxCochainPrime = 7;

std::size_t cochain2_dim(const RestrictedModule& M);
std::size_t cochain3_dim(const RestrictedModule& M);

/// Coordinates: phi (tuple-lex, module fastest) then omega (basis order, module fastest).
Vec to_coords(const RestrictedModule& M, const Cochain2& c);
/// Coordinates: alpha then beta, with beta(e_i, e_j) at ((i * n + j) * m).
Vec to_coords(const RestrictedModule& M, const Cochain3& c);
Cochain2 cochain2_from_coords(const RestrictedModule& M, const Vec& coords);
Cochain3 cochain3_from_coords(const RestrictedModule& M, const Vec& coords);

/// omega(g) from the basis values using the *-property. Independent of `order` only
/// when some map with the *-property takes the given basis values. That holds for
/// every phi when p = 2 and for every closed phi; on the nonabelian catalog entries
/// at p = 3 the closed phi are the only ones (see README).
Vec eval_omega(const RestrictedModule& M, const Cochain2& c, const AlgElement& g,
               PeelOrder order = PeelOrder::Ascending);

/// Which index pattern to use in the beta additivity correction. `Derived` is the
/// one that closes under delta^2 (see README); `AsPrinted` keeps the literal
/// subscripts and is retained so the discrepancy stays demonstrable.
enum class StarStarReading { Derived, AsPrinted };

/// beta(g, h) from the basis values using the **-property. Same caveat as eval_omega:
/// peel-order independent for beta = delta^2 of a pair in C^2.
Vec eval_beta(const RestrictedModule& M, const Cochain3& c, const AlgElement& g, const AlgElement& h,
              PeelOrder order = PeelOrder::Ascending, StarStarReading reading = StarStarReading::Derived);

/// psi(g^[p]) - g^(p-1) psi(g) at a general element.
Vec psi_tilde(const RestrictedModule& M, const Vec& psi, const AlgElement& g);

/// beta(g, h) = phi(g, h^[p]) - sum_{i+j=p-1} (-1)^i h^i phi([g, h x j], h) + g omega(h),
/// evaluated directly at general elements.
Vec induced_beta(const RestrictedModule& M, const Cochain2& c, const AlgElement& g, const AlgElement& h);

FpMatrix delta0_matrix(const RestrictedModule& M);
Cochain2 delta1(const RestrictedModule& M, const Vec& psi);
FpMatrix delta1_matrix(const RestrictedModule& M);
Cochain3 delta2(const RestrictedModule& M, const Cochain2& c);
FpMatrix delta2_matrix(const RestrictedModule& M);

/// k = 0, 1, 2; throws DegreeTooHigh beyond.
CohomologyResult restricted_cohomology(const RestrictedModule& M, std::size_t k);

struct ClassicalComparison {
    /// Column r: image of restricted representative r in classical representative coordinates.
    FpMatrix map_matrix;
    std::size_t kernel_dim;
};

/// Map H^k -> H^k_cl induced by forgetting omega (k = 2) or the identity (k = 1).
ClassicalComparison compare_classical(const RestrictedModule& M, std::size_t k);

}  // namespace rescoh
