#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rescoh/gmod.hpp"
#include "rescoh/rescochain.hpp"

namespace rescoh {

struct ModuleBlock {
    std::string name;
    std::size_t dim = 0;
    /// One matrix per basis label, in basis order.
    std::vector<FpMatrix> action;
};

/// Parsed algebra definition file. Coefficients are reduced mod p.
struct AlgebraFile {
    std::string name;
    std::uint32_t p = 0;
    std::vector<std::string> labels;
    /// brackets[i][j] = [e_i, e_j]; undeclared pairs are zero.
    StructureConstants brackets;
    /// pmap[i] = e_i^[p]; empty when not declared (only allowed with require_pmap = false).
    std::vector<std::optional<Vec>> pmap;
    std::vector<ModuleBlock> modules;

    friend bool operator==(const AlgebraFile& a, const AlgebraFile& b);
};

struct ParseOptions {
    /// Every basis label needs a pmap line. `infer` turns this off.
    bool require_pmap = true;
};

/// Throws SyntaxError, NonPrimeModulus, DuplicateLabel, UnresolvedReference.
AlgebraFile parse_algebra_file(std::string_view text, const ParseOptions& opts = {});

/// Canonical text: every bracket pair and every pmap entry written out.
std::string emit_algebra_file(const AlgebraFile& f);

AlgebraFile from_algebra(const RestrictedLieAlgebra& L, const std::string& name,
                         std::vector<ModuleBlock> modules = {});

/// Antisymmetry and Jacobi are enforced (InvalidStructure); R3 is left to verify_restricted.
/// Throws UnresolvedReference when a pmap entry is missing.
RestrictedLieAlgebra to_algebra(const AlgebraFile& f);
/// Shape checks only, for reporting every axiom rather than stopping at the first.
RestrictedLieAlgebra to_algebra_unchecked(const AlgebraFile& f);

/// "trivial", "adjoint" or a module block of the file. Throws UnresolvedReference.
RestrictedModule find_module(const AlgebraFile& f, const AlgebraPtr& L, const std::string& name);

/// Cocycle file with adjoint coefficients:
///   phi [X,Y] = <terms>
///   omega X = <terms>
/// Undeclared values are zero. Throws SyntaxError, DuplicateLabel, UnresolvedReference.
Cochain2 parse_cocycle_file(std::string_view text, const RestrictedModule& adjoint);

/// Runs the command line tool; JSON (or DSL text for `witt --emit`) goes to `out`,
/// usage errors to `err`. Returns 0, 1 (a check failed) or 2 (usage or input error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rescoh
