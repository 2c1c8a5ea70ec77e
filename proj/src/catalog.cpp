#include "rescoh/catalog.hpp"

namespace rescoh {

namespace {

StructureConstants zero_constants(std::size_t n) {
    return StructureConstants(n, std::vector<Vec>(n, zero_vec(n)));
}

}  // namespace

RestrictedLieAlgebra abelian_algebra(Prime p, std::size_t n, bool nonzero_pi) {
    std::vector<Vec> pi(n, zero_vec(n));
    if (nonzero_pi) {
        for (std::size_t i = 0; i < n; ++i) {
            pi[i][i] = 1;
            if (n > 1) pi[i][(i + 1) % n] = p.add(pi[i][(i + 1) % n], 1);
        }
    }
    return RestrictedLieAlgebra::create(p, zero_constants(n), pi);
}

RestrictedLieAlgebra heisenberg_algebra(Prime p) {
    auto c = zero_constants(3);
    c[0][1][2] = 1;
    c[1][0][2] = p.neg(1);
    return RestrictedLieAlgebra::create(p, c, std::vector<Vec>(3, zero_vec(3)), {"x", "y", "z"});
}

RestrictedLieAlgebra affine_line_algebra(Prime p) {
    auto c = zero_constants(2);
    c[0][1][1] = 1;
    c[1][0][1] = p.neg(1);
    return RestrictedLieAlgebra::create(p, c, {unit_vec(2, 0), zero_vec(2)}, {"x", "y"});
}

std::vector<CorpusAlgebra> abelian_corpus() {
    std::vector<CorpusAlgebra> out;
    for (std::uint32_t p : {2u, 3u, 5u})
        for (std::size_t n : {1u, 2u, 3u})
            for (bool nz : {false, true})
                out.push_back({"abelian(n=" + std::to_string(n) + ",p=" + std::to_string(p) +
                                   (nz ? ",pi!=0)" : ",pi=0)"),
                               abelian_algebra(Prime(p), n, nz)});
    return out;
}

std::vector<CorpusAlgebra> corpus() {
    std::vector<CorpusAlgebra> out = abelian_corpus();
    for (std::uint32_t p : {2u, 3u, 5u}) {
        out.push_back({"heisenberg(p=" + std::to_string(p) + ")", heisenberg_algebra(Prime(p))});
        out.push_back({"affine_line(p=" + std::to_string(p) + ")", affine_line_algebra(Prime(p))});
    }
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        out.push_back({"witt(p=" + std::to_string(p) + ")", witt_algebra(Prime(p)).algebra});
    return out;
}

}  // namespace rescoh
