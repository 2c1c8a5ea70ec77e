#pragma once

#include <string>
#include <vector>

#include "rescoh/liealg.hpp"

namespace rescoh {

/// Abelian algebra of dimension n. With `nonzero_pi`, e_i^[p] = e_i + e_{i+1}
/// (indices mod n, and e_0^[p] = e_0 when n = 1); otherwise strongly abelian.
RestrictedLieAlgebra abelian_algebra(Prime p, std::size_t n, bool nonzero_pi);

/// [x, y] = z with z central and zero p-operator.
RestrictedLieAlgebra heisenberg_algebra(Prime p);

/// [x, y] = y, x^[p] = x, y^[p] = 0.
RestrictedLieAlgebra affine_line_algebra(Prime p);

struct CorpusAlgebra {
    std::string name;
    RestrictedLieAlgebra algebra;
};

/// The standard test corpus: abelian (n = 1, 2, 3; both p-operator regimes) at
/// p = 2, 3, 5, the Heisenberg and affine-line algebras at p = 2, 3, 5, and the
/// Witt algebras at p = 2, 3, 5, 7.
std::vector<CorpusAlgebra> corpus();
/// Abelian members of corpus() only.
std::vector<CorpusAlgebra> abelian_corpus();

}  // namespace rescoh
