#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "rescoh/abelres.hpp"
#include "rescoh/catalog.hpp"
#include "rescoh/errors.hpp"
#include "rescoh/field.hpp"
#include "rescoh/frontend.hpp"
#include "rescoh/interp.hpp"

namespace rescoh {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kToolVersion = "0.1.0";

/// Bad invocation or unreadable input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

Json checks_json(const Report& r) {
    Json arr = Json::array();
    for (const auto& c : r.checks()) {
        Json j;
        j["name"] = c.name;
        j["pass"] = c.pass;
        if (c.counterexample) j["counterexample"] = *c.counterexample;
        arr.push_back(std::move(j));
    }
    return arr;
}

void expect_equal(Report& r, const std::string& name, std::size_t got, std::size_t want) {
    got == want ? r.pass(name) : r.fail(name, std::to_string(got) + " != " + std::to_string(want));
}

struct Outcome {
    Json results = Json::object();
    Report checks;
};

std::string terms_string(const Vec& v, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(v[i]) + "*" + labels[i];
    }
    return s.empty() ? "0" : s;
}

Outcome cmd_validate(const AlgebraFile& f) {
    Outcome o;
    auto A = share(to_algebra_unchecked(f));
    o.results["algebra"] = f.name;
    o.results["p"] = f.p;
    o.results["dim"] = A->dim();
    o.results["labels"] = A->labels();
    o.results["abelian"] = A->is_abelian();
    o.results["strongly_abelian"] = A->is_strongly_abelian();
    o.checks.append(verify_restricted(*A));
    Json mods = Json::array();
    for (const auto& mb : f.modules) {
        mods.push_back(mb.name);
        o.checks.append(verify_module(make_module(A, mb.action)), "module." + mb.name + ".");
    }
    o.results["modules"] = mods;
    return o;
}

Outcome cmd_cohomology(const AlgebraFile& f, const std::string& module, std::size_t k, bool classical_only) {
    Outcome o;
    auto A = share(to_algebra(f));
    const RestrictedModule M = find_module(f, A, module);
    o.results["module"] = module;
    o.results["module_dim"] = M.dim;
    o.results["degree"] = k;
    o.results["classical_dim"] = classical_cohomology(M, k).dim;
    if (classical_only) return o;

    const bool dual_ok = A->is_abelian() && k + 1 < f.p;
    if (k <= 2) {
        const std::size_t r = restricted_cohomology(M, k).dim;
        o.results["restricted_dim"] = r;
        o.results["method"] = "restricted_cochains";
        if (k == 0) expect_equal(o.checks, "h0_invariants", r, invariants(M).dim());
        if (k >= 1) {
            const std::size_t kernel = compare_classical(M, k).kernel_dim;
            o.results["to_classical_kernel_dim"] = kernel;
            if (k == 1) expect_equal(o.checks, "h1_injects", kernel, 0);
        }
        if (dual_ok) {
            const std::size_t d = abelian_cochain_cohomology(M, k);
            o.results["abelian_dual_dim"] = d;
            expect_equal(o.checks, "abelian_cross_check", r, d);
        }
    } else if (dual_ok) {
        o.results["restricted_dim"] = abelian_cochain_cohomology(M, k);
        o.results["method"] = "abelian_resolution";
    } else {
        throw DegreeTooHigh("restricted H^k beyond k = 2 needs an abelian algebra and k + 1 < p");
    }
    return o;
}

Outcome cmd_dims(const AlgebraFile& f) {
    Outcome o;
    auto A = share(to_algebra(f));
    const std::size_t n = A->dim();
    std::vector<std::string> names{"trivial", "adjoint"};
    for (const auto& mb : f.modules) names.push_back(mb.name);
    Json mods = Json::object();
    for (const auto& name : names) {
        const RestrictedModule M = find_module(f, A, name);
        const std::size_t m = M.dim;
        Json j;
        j["dim"] = m;
        Json cl = Json::array();
        for (std::size_t q = 0; q <= n; ++q) cl.push_back(classical_cochain_dim(M, q));
        j["classical"] = cl;
        j["restricted"] = {{"C0", m}, {"C1", n * m}, {"C2", cochain2_dim(M)}, {"C3", cochain3_dim(M)}};
        expect_equal(o.checks, name + ".C2", cochain2_dim(M), n * (n + 1) / 2 * m);
        expect_equal(o.checks, name + ".C3", cochain3_dim(M), n * (n + 1) * (n + 2) / 6 * m);
        if (A->is_abelian()) {
            Json dual = Json::array();
            for (std::size_t k = 0; k < f.p; ++k) {
                const std::size_t d = abelian_cochain_dim(M, k);
                dual.push_back(d);
                expect_equal(o.checks, name + ".dual_C" + std::to_string(k), d, binomial(n + k - 1, k) * m);
            }
            j["abelian_dual"] = dual;
        }
        mods[name] = j;
    }
    o.results["n"] = n;
    o.results["p"] = f.p;
    o.results["modules"] = mods;
    return o;
}

Outcome cmd_derivations(const AlgebraFile& f) {
    Outcome o;
    auto A = share(to_algebra(f));
    const DerivationSpace der = restricted_derivations(*A);
    const Subspace inner = inner_derivations(*A);
    const RestrictedModule ad = adjoint_module(A);
    const std::size_t h1 = restricted_cohomology(ad, 1).dim;
    o.results["der_res_dim"] = der.basis.dim();
    o.results["inner_dim"] = inner.dim();
    o.results["outer_dim"] = der.basis.dim() - inner.dim();
    o.results["h1_adjoint"] = h1;
    o.results["exhaustive"] = der.exhaustive;
    der.basis.contains(inner) ? o.checks.pass("inner_are_restricted")
                              : o.checks.fail("inner_are_restricted", "some ad(x) fails the conditions");
    nullspace(delta1_matrix(ad)) == der.basis ? o.checks.pass("z1_equals_der_res")
                                              : o.checks.fail("z1_equals_der_res", "subspaces differ");
    expect_equal(o.checks, "outer_equals_h1", der.basis.dim() - inner.dim(), h1);
    return o;
}

Outcome cmd_resolve(const AlgebraFile& f, std::size_t k_max) {
    Outcome o;
    const RestrictedLieAlgebra L = to_algebra(f);
    if (k_max >= f.p) throw DegreeTooHigh("--kmax must be below p");
    BuildOptions opts;
    opts.allow_beyond_p = true;
    const auto slices = build_resolution(L, k_max + 1, opts);
    Json dims = Json::array(), hom = Json::array();
    for (const auto& s : slices) dims.push_back(s.dim());
    std::string nonzero;
    for (std::size_t k = 0; k <= k_max; ++k) {
        const std::size_t h = resolution_homology(slices, k);
        hom.push_back(h);
        if (h && nonzero.empty()) nonzero = "H_" + std::to_string(k) + " = " + std::to_string(h);
    }
    o.results["kmax"] = k_max;
    o.results["slice_dims"] = dims;
    o.results["homology"] = hom;
    o.checks.append(resolution_complex_checks(slices));
    nonzero.empty() ? o.checks.pass("exact") : o.checks.fail("exact", nonzero);
    return o;
}

Outcome cmd_deform(const AlgebraFile& f, const std::string& cocycle_text) {
    Outcome o;
    auto A = share(to_algebra(f));
    const Cochain2 c2 = parse_cocycle_file(cocycle_text, adjoint_module(A));
    const DeformationResult res = deformation_check(A, c2);
    o.results["is_cocycle"] = res.is_cocycle;
    o.results["deformation_ok"] = res.deformation_ok;
    const Check* bad = res.axioms.first_failure();
    o.results["failing_axiom"] = bad ? Json(bad->name) : Json(nullptr);
    o.checks.append(res.axioms, "deformed.");
    o.checks.append(res.report);
    return o;
}

Outcome cmd_identities(std::uint32_t p) {
    Outcome o;
    o.results["p"] = p;
    o.checks.append(verify_identities(Prime(p)));
    return o;
}

Outcome cmd_witt(std::uint32_t p) {
    Outcome o;
    const WittAlgebra W = witt_algebra(Prime(p));
    o.results["p"] = p;
    o.results["dim"] = W.algebra.dim();
    o.results["labels"] = W.algebra.labels();
    o.checks.append(verify_restricted(W.algebra));
    o.checks.append(verify_representation(UresAlgebra(W.algebra), W.rep), "representation.");
    return o;
}

Outcome cmd_infer(const AlgebraFile& f) {
    Outcome o;
    Prime P(f.p);
    try {
        const InferredPOperator inf = infer_p_operator(f.brackets, P, f.labels);
        Json pm = Json::object();
        for (std::size_t i = 0; i < f.labels.size(); ++i) pm[f.labels[i]] = terms_string(inf.pi[i], f.labels);
        o.results["pmap"] = pm;
        o.results["center_dim"] = inf.center_dim;
        o.results["unique"] = inf.center_dim == 0;
        o.checks.pass("restrictable");
        o.checks.append(inf.report);
    } catch (const NotRestrictable& e) {
        o.checks.fail("restrictable", e.what());
    } catch (const VerificationFailed& e) {
        o.checks.fail("inferred_operator_verifies", e.what());
    }
    return o;
}

std::string emit_witt(std::uint32_t p) {
    const WittAlgebra W = witt_algebra(Prime(p));
    ModuleBlock natural{"natural", p, W.rep};
    return emit_algebra_file(from_algebra(W.algebra, "witt" + std::to_string(p), {natural}));
}

std::string emit_inferred(AlgebraFile f) {
    const InferredPOperator inf = infer_p_operator(f.brackets, Prime(f.p), f.labels);
    for (std::size_t i = 0; i < f.labels.size(); ++i) f.pmap[i] = inf.pi[i];
    return emit_algebra_file(f);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Restricted Lie algebra cohomology over F_p"};
    app.require_subcommand(1);
    std::string file, module = "trivial", cocycle;
    std::size_t degree = 0, kmax = 0;
    std::uint32_t p = 0;
    bool classical = false, emit = false;

    auto* validate = app.add_subcommand("validate", "Check the algebra axioms and every module block");
    validate->add_option("file", file)->required();
    auto* cohomology = app.add_subcommand("cohomology", "Restricted and classical cohomology dimensions");
    cohomology->add_option("file", file)->required();
    cohomology->add_option("--module", module, "trivial, adjoint or a module block name");
    cohomology->add_option("--degree", degree)->required();
    cohomology->add_flag("--classical", classical, "Only the classical (Chevalley-Eilenberg) dimension");
    auto* dims = app.add_subcommand("dims", "Cochain space dimensions");
    dims->add_option("file", file)->required();
    auto* derivations = app.add_subcommand("derivations", "Restricted derivations modulo inner ones");
    derivations->add_option("file", file)->required();
    auto* resolve = app.add_subcommand("resolve", "Abelian free resolution and its homology");
    resolve->add_option("file", file)->required();
    resolve->add_option("--kmax", kmax)->required();
    auto* deform = app.add_subcommand("deform-check", "Check an infinitesimal deformation");
    deform->add_option("file", file)->required();
    deform->add_option("--cocycle", cocycle)->required();
    auto* identities = app.add_subcommand("identities", "Binomial identity checks");
    identities->add_option("--p", p)->required();
    auto* witt = app.add_subcommand("witt", "Witt algebra checks, or its definition file");
    witt->add_option("--p", p)->required();
    witt->add_flag("--emit", emit, "Print the definition file instead of the report");
    auto* infer = app.add_subcommand("infer", "Infer the p-operator of a file without pmap lines");
    infer->add_option("file", file)->required();
    infer->add_flag("--emit", emit, "Print the completed definition file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string digest_input;
        std::string command;
        Outcome o;
        auto load = [&](const ParseOptions& opts = {}) {
            const std::string text = read_file(file);
            digest_input += text;
            return parse_algebra_file(text, opts);
        };
        if (*validate) {
            command = "validate";
            o = cmd_validate(load());
        } else if (*cohomology) {
            command = "cohomology";
            o = cmd_cohomology(load(), module, degree, classical);
        } else if (*dims) {
            command = "dims";
            o = cmd_dims(load());
        } else if (*derivations) {
            command = "derivations";
            o = cmd_derivations(load());
        } else if (*resolve) {
            command = "resolve";
            o = cmd_resolve(load(), kmax);
        } else if (*deform) {
            command = "deform-check";
            const AlgebraFile f = load();
            const std::string text = read_file(cocycle);
            digest_input += text;
            o = cmd_deform(f, text);
        } else if (*identities) {
            command = "identities";
            digest_input = "identities --p " + std::to_string(p);
            o = cmd_identities(p);
        } else if (*witt) {
            if (emit) {
                out << emit_witt(p);
                return 0;
            }
            command = "witt";
            digest_input = "witt --p " + std::to_string(p);
            o = cmd_witt(p);
        } else if (*infer) {
            ParseOptions opts;
            opts.require_pmap = false;
            const AlgebraFile f = load(opts);
            if (emit) {
                out << emit_inferred(f);
                return 0;
            }
            command = "infer";
            o = cmd_infer(f);
        }
        Json doc;
        doc["tool_version"] = kToolVersion;
        doc["input_digest"] = "sha256:" + sha256_hex(digest_input);
        doc["command"] = command;
        doc["results"] = o.results;
        doc["checks"] = checks_json(o.checks);
        out << doc.dump(2) << '\n';
        return o.checks.ok() ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace rescoh
