#pragma once

#include <cstddef>
#include <vector>

#include "rescoh/gmod.hpp"

namespace rescoh {

/// Increasing q-subsets of {0..n-1} in lexicographic order, with inverse lookup.
class TupleIndex {
public:
    TupleIndex(std::size_t n, std::size_t q);
    std::size_t size() const { return tuples_.size(); }
    const std::vector<std::size_t>& tuple(std::size_t r) const { return tuples_[r]; }
    const std::vector<std::vector<std::size_t>>& tuples() const { return tuples_; }
    /// Rank of an increasing tuple.
    std::size_t rank(const std::vector<std::size_t>& t) const;

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> tuples_;
    std::vector<std::size_t> by_mask_;
};

std::size_t binomial(std::size_t n, std::size_t k);

/// A skew q-linear map g^q -> M stored on increasing basis tuples; coordinate of
/// (tuple rank r, module index a) is r * dim(M) + a.
struct ClassicalCochain {
    std::size_t q = 0;
    Vec values;
};

/// Evaluation of a degree-q cochain (coordinates `phi`) at general elements.
Vec eval_cochain(const RestrictedModule& M, std::size_t q, const Vec& phi, const std::vector<AlgElement>& args);

/// Value at a basis tuple given in any order (sign of the sorting permutation, or
/// zero when an index repeats).
Vec eval_cochain_basis(const RestrictedModule& M, std::size_t q, const Vec& phi,
                       const std::vector<std::size_t>& indices);

std::size_t classical_cochain_dim(const RestrictedModule& M, std::size_t q);

/// delta(phi)(g_1..g_{q+1}) = sum_{s<t} (-1)^{s+t-1} phi([g_s g_t], ...) + sum_s (-1)^s g_s phi(...),
/// so delta(m)(g) = -g m.
Vec delta_cl(const RestrictedModule& M, std::size_t q, const Vec& phi);
FpMatrix delta_cl_matrix(const RestrictedModule& M, std::size_t q);

struct CohomologyResult {
    std::size_t dim = 0;
    /// Cocycles independent modulo coboundaries, reduced and in echelon form.
    std::vector<Vec> representatives;
};

CohomologyResult classical_cohomology(const RestrictedModule& M, std::size_t q);

/// Cohomology at the middle of A --incoming--> B --outgoing--> C.
CohomologyResult cohomology_at(const FpMatrix& incoming, const FpMatrix& outgoing);

}  // namespace rescoh
