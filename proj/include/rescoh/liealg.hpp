#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rescoh/linalg.hpp"
#include "rescoh/report.hpp"

namespace rescoh {

/// Coordinates of an element in the basis e_0..e_{n-1}.
using AlgElement = Vec;

/// c[i][j] = coordinates of [e_i, e_j].
using StructureConstants = std::vector<std::vector<Vec>>;

/// Nonabelian p-power evaluation enumerates 2^(p-2) bracket sequences; refuse beyond this.
constexpr std::uint32_t kMaxNonabelianPrime = 13;

class RestrictedLieAlgebra {
public:
    /// Validates shapes, antisymmetry and the Jacobi identity; throws InvalidStructure.
    /// R3 is not enforced here; run verify_restricted.
    static RestrictedLieAlgebra create(Prime p, StructureConstants c, std::vector<Vec> pi,
                                       std::vector<std::string> labels = {});
    /// Shape checks only. For candidate structures (deformations, extensions) that
    /// verify_restricted is about to judge.
    static RestrictedLieAlgebra unchecked(Prime p, StructureConstants c, std::vector<Vec> pi,
                                          std::vector<std::string> labels = {});

    const Prime& prime() const { return p_; }
    std::size_t dim() const { return n_; }
    const Vec& bracket_basis(std::size_t i, std::size_t j) const { return c_[i][j]; }
    const StructureConstants& structure_constants() const { return c_; }
    const Vec& pi(std::size_t i) const { return pi_[i]; }
    const std::vector<Vec>& pi_images() const { return pi_; }
    const std::vector<std::string>& labels() const { return labels_; }

    bool is_abelian() const { return abelian_; }
    bool is_strongly_abelian() const;

    struct Term {
        std::uint32_t index;
        std::uint32_t coef;
    };
    /// Nonzero entries of [e_i, e_j].
    const std::vector<Term>& sparse_bracket(std::size_t i, std::size_t j) const {
        return sparse_[i * n_ + j];
    }

private:
    RestrictedLieAlgebra(Prime p, StructureConstants c, std::vector<Vec> pi,
                         std::vector<std::string> labels);

    Prime p_;
    std::size_t n_;
    StructureConstants c_;
    std::vector<Vec> pi_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Term>> sparse_;
    bool abelian_;
};

AlgElement basis_element(const RestrictedLieAlgebra& L, std::size_t i);

AlgElement bracket(const RestrictedLieAlgebra& L, const AlgElement& x, const AlgElement& y);
/// Left-normed [[..[g1 g2] g3]..] gk]; throws EmptySequence.
AlgElement multibracket(const RestrictedLieAlgebra& L, const std::vector<AlgElement>& gs);
/// [x, y, y, ..., y] with `copies` copies of y.
AlgElement bracket_power(const RestrictedLieAlgebra& L, const AlgElement& x, const AlgElement& y,
                         std::size_t copies);

/// Sum over sequences (g, h, g3..gp), gi in {g, h}, of [g, h, g3, ..., gp] / #(g):
/// the bracket correction in (g + h)^[p].
AlgElement r2_correction(const RestrictedLieAlgebra& L, const AlgElement& g, const AlgElement& h);

enum class PeelOrder { Ascending, Descending };

/// Index peeled first: least (ascending) or greatest (descending) nonzero coordinate.
std::size_t peel_index(const AlgElement& x, PeelOrder order);

/// x^[p] from the basis values, by repeated use of the additivity rule.
AlgElement p_power(const RestrictedLieAlgebra& L, const AlgElement& x,
                   PeelOrder order = PeelOrder::Ascending);

/// Matrix of ad x (column j is [x, e_j]).
FpMatrix ad_matrix(const RestrictedLieAlgebra& L, const AlgElement& x);

/// Every element when p^n <= exhaustive_bound, else the basis followed by `samples`
/// deterministic samples seeded from (p, n, name).
std::vector<AlgElement> verification_set(const RestrictedLieAlgebra& L, const std::string& name,
                                         std::uint64_t exhaustive_bound = 243,
                                         std::size_t samples = 500);
bool enumerates_all(const RestrictedLieAlgebra& L, std::uint64_t exhaustive_bound = 243);

struct VerifyOptions {
    std::uint64_t exhaustive_bound = 243;
    std::size_t samples = 500;
    bool stop_at_first_failure = false;
};

/// Checks "antisymmetry", "jacobi", "r3" and "peel_order".
Report verify_restricted(const RestrictedLieAlgebra& L, const VerifyOptions& opts = {});

struct InferredPOperator {
    std::vector<Vec> pi;
    /// Dimension of the center; when positive, pi is one of several valid choices.
    std::size_t center_dim;
    Report report;
};

/// Solves ad(x_j) = (ad e_j)^p for each basis vector. Throws NotRestrictable or
/// VerificationFailed.
InferredPOperator infer_p_operator(const StructureConstants& c, Prime p,
                                   const std::vector<std::string>& labels = {});

struct WittAlgebra {
    RestrictedLieAlgebra algebra;
    /// rep[j] = matrix of D_j on the basis 1, x, ..., x^(p-1) of F_p[x]/(x^p - 1).
    std::vector<FpMatrix> rep;
};

/// [D_i, D_j] = (j - i) D_{i+j mod p}, D_0^[p] = D_0, D_j^[p] = 0 otherwise.
WittAlgebra witt_algebra(Prime p);

/// Image of an element under a representation given on the basis.
FpMatrix represent(const std::vector<FpMatrix>& rho, const AlgElement& x);

}  // namespace rescoh
