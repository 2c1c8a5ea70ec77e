#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "rescoh/catalog.hpp"
#include "rescoh/errors.hpp"
#include "rescoh/frontend.hpp"

using namespace rescoh;
using Json = nlohmann::json;

namespace {

std::string data(const std::string& name) { return std::string(RESCOH_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    args.insert(args.begin(), "rescoh");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const Json* find_check(const Json& doc, const std::string& name) {
    for (const auto& c : doc["checks"])
        if (c["name"] == name) return &c;
    return nullptr;
}

}  // namespace

TEST(Parser, EmitThenParseIsIdentity) {
    for (const auto& [name, L] : corpus()) {
        const AlgebraFile f = from_algebra(L, "entry");
        const AlgebraFile g = parse_algebra_file(emit_algebra_file(f));
        EXPECT_TRUE(f == g) << name;
        EXPECT_EQ(emit_algebra_file(g), emit_algebra_file(f)) << name;
    }
}

TEST(Parser, WittFileRoundTrip) {
    const WittAlgebra W = witt_algebra(Prime(3));
    const AlgebraFile f = from_algebra(W.algebra, "witt3", {{"natural", 3, W.rep}});
    const std::string text = emit_algebra_file(f);
    const AlgebraFile g = parse_algebra_file(text);
    EXPECT_TRUE(f == g);
    const RestrictedLieAlgebra L = to_algebra(g);
    EXPECT_EQ(L.structure_constants(), W.algebra.structure_constants());
    EXPECT_EQ(L.pi_images(), W.algebra.pi_images());
    EXPECT_EQ(L.labels(), (std::vector<std::string>{"D0", "D1", "D2"}));
    const auto M = find_module(g, share(L), "natural");
    EXPECT_TRUE(M.rho == W.rep);
}

TEST(Parser, CheckedInWittFileMatchesCatalog) {
    const AlgebraFile f = parse_algebra_file(slurp(data("witt5.alg")));
    const WittAlgebra W = witt_algebra(Prime(5));
    EXPECT_EQ(f.p, 5u);
    EXPECT_EQ(to_algebra(f).structure_constants(), W.algebra.structure_constants());
    EXPECT_EQ(emit_algebra_file(f), slurp(data("witt5.alg")));
}

TEST(Parser, CoefficientsReduceModP) {
    const AlgebraFile f = parse_algebra_file(slurp(data("witt3_missing_pmap.alg")), {.require_pmap = false});
    // [D1,D0] = -1*D1 reads as 2*D1 over GF(3).
    EXPECT_EQ(f.brackets[1][0], (Vec{0, 2, 0}));
    EXPECT_FALSE(f.pmap[1].has_value());
    EXPECT_EQ(f.pmap[0], (Vec{1, 0, 0}));
}

TEST(Parser, UndeclaredBracketsAreZero) {
    const AlgebraFile f = parse_algebra_file(slurp(data("heis3.alg")));
    EXPECT_EQ(f.brackets[0][2], zero_vec(3));
    EXPECT_EQ(f.brackets[1][0], (Vec{0, 0, 2}));
}

TEST(Parser, MissingPmapNamesTheLabel) {
    try {
        parse_algebra_file(slurp(data("witt3_missing_pmap.alg")));
        FAIL() << "expected UnresolvedReference";
    } catch (const UnresolvedReference& e) {
        EXPECT_NE(std::string(e.what()).find("D1"), std::string::npos) << e.what();
    }
}

TEST(Parser, NonPrimeModulus) {
    EXPECT_THROW(parse_algebra_file(slurp(data("gf4.alg"))), NonPrimeModulus);
    EXPECT_THROW(parse_algebra_file("algebra a over GF(1)\nbasis x\npmap x^[p] = 0\n"), NonPrimeModulus);
}

TEST(Parser, SyntaxErrorPosition) {
    try {
        parse_algebra_file("algebra a over GF(3)\nbasis x y\nbracket [x y] = x\n");
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 12u);
        EXPECT_EQ(e.expected(), "','");
    }
    try {
        parse_algebra_file("algebra a over GF(3)\nbasis x\npmap x^[p] = 2 x\n");
        FAIL() << "expected SyntaxError";
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 16u);
    }
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\nbasis x\n$\n"), SyntaxError);
    EXPECT_THROW(parse_algebra_file(""), SyntaxError);
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\n"), SyntaxError);
}

TEST(Parser, Duplicates) {
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\nbasis x x\n"), DuplicateLabel);
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\nbasis x\npmap x^[p] = 0\npmap x^[p] = x\n"), DuplicateLabel);
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\nbasis x y\nbracket [x,y] = x\nbracket [x,y] = y\n",
                                    {.require_pmap = false}),
                 DuplicateLabel);
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\nbasis x\npmap x^[p] = 0\nmodule adjoint dim 1\n"),
                 DuplicateLabel);
}

TEST(Parser, UnknownLabelAndMissingAction) {
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\nbasis x\npmap x^[p] = q\n"), UnresolvedReference);
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\nbasis x y\npmap x^[p] = 0\npmap y^[p] = 0\n"
                                    "module m dim 1\naction x = [[0]]\n"),
                 UnresolvedReference);
    EXPECT_THROW(parse_algebra_file("algebra a over GF(3)\nbasis x\npmap x^[p] = 0\nmodule m dim 2\naction x = [[0,0]]\n"),
                 SyntaxError);
}

TEST(Parser, AntisymmetryIsNotFilledIn) {
    // Only [x,y] declared: [y,x] stays zero and the structure is rejected.
    const AlgebraFile f =
        parse_algebra_file("algebra a over GF(3)\nbasis x y\nbracket [x,y] = y\npmap x^[p] = x\npmap y^[p] = 0\n");
    EXPECT_EQ(f.brackets[1][0], zero_vec(2));
    EXPECT_THROW(to_algebra(f), InvalidStructure);
}

TEST(CocycleFile, ParsesAndOrientsPairs) {
    const auto A = share(witt_algebra(Prime(3)).algebra);
    const auto ad = adjoint_module(A);
    const Cochain2 c = parse_cocycle_file(slurp(data("witt3_trivial.coc")), ad);
    Vec psi = zero_vec(9);
    psi[1] = 1;  // psi(D0) = D1
    EXPECT_EQ(to_coords(ad, c), to_coords(ad, delta1(ad, psi)));
    // [D2,D0] = v is stored as [D0,D2] = -v.
    const Cochain2 d = parse_cocycle_file("phi [D2,D0] = D0\nomega D1 = 2*D2\n", ad);
    EXPECT_EQ(d.phi[3], 2u);
    EXPECT_EQ(d.omega_basis[1], (Vec{0, 0, 2}));
    EXPECT_THROW(parse_cocycle_file("phi [D0,D0] = D1\n", ad), SyntaxError);
    EXPECT_THROW(parse_cocycle_file("omega D0 = D1\nomega D0 = D2\n", ad), DuplicateLabel);
    EXPECT_THROW(parse_cocycle_file("phi [D0,E] = D1\n", ad), UnresolvedReference);
    EXPECT_THROW(parse_cocycle_file("psi D0 = D1\n", ad), SyntaxError);
}

TEST(Cli, ValidateAndEnvelope) {
    const auto r = cli({"validate", data("heis3.alg")});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["command"], "validate");
    EXPECT_EQ(doc["tool_version"], "0.1.0");
    EXPECT_EQ(doc["input_digest"].get<std::string>().rfind("sha256:", 0), 0u);
    EXPECT_EQ(doc["input_digest"].get<std::string>().size(), 7u + 64u);
    EXPECT_EQ(doc["results"]["dim"], 3);
    for (const char* name : {"antisymmetry", "jacobi", "r3", "module.std.p_compatibility"})
        EXPECT_NE(find_check(doc, name), nullptr) << name;
    for (const auto& c : doc["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST(Cli, OutputIsByteStable) {
    for (const std::vector<std::string> args :
         {std::vector<std::string>{"dims", data("heis3.alg")}, {"cohomology", data("ab2.alg"), "--degree", "1"},
          {"resolve", data("ab2.alg"), "--kmax", "2"}, {"identities", "--p", "7"}}) {
        const auto a = cli(args), b = cli(args);
        EXPECT_EQ(a.code, 0) << a.err;
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, DigestDependsOnInputBytes) {
    const auto a = Json::parse(cli({"validate", data("heis3.alg")}).out);
    const auto b = Json::parse(cli({"validate", data("ab2.alg")}).out);
    EXPECT_NE(a["input_digest"], b["input_digest"]);
    // SHA-256 of the string "identities --p 5".
    const auto c = Json::parse(cli({"identities", "--p", "5"}).out);
    EXPECT_EQ(c["input_digest"], "sha256:1820a42c2c867cb597cb6a3af09a81d3b12ad77ea4b0610e928ae5691aae16ee");
}

TEST(Cli, ResolveAbelianPlane) {
    const auto r = cli({"resolve", data("ab2.alg"), "--kmax", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["results"]["homology"], Json::array({0, 0, 0}));
    EXPECT_EQ(doc["results"]["slice_dims"], Json::array({9, 18, 27, 36}));
    EXPECT_EQ(cli({"resolve", data("ab2.alg"), "--kmax", "3"}).code, 2);
    EXPECT_EQ(cli({"resolve", data("heis3.alg"), "--kmax", "1"}).code, 2);
}

TEST(Cli, Cohomology) {
    const auto r = cli({"cohomology", data("heis3.alg"), "--degree", "1", "--module", "adjoint"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["results"]["method"], "restricted_cochains");
    EXPECT_TRUE(doc["results"].contains("restricted_dim"));
    EXPECT_EQ(doc["results"]["to_classical_kernel_dim"], 0);
    const auto ab = Json::parse(cli({"cohomology", data("ab2.alg"), "--degree", "1", "--module", "tri"}).out);
    ASSERT_NE(find_check(ab, "abelian_cross_check"), nullptr);
    EXPECT_TRUE((*find_check(ab, "abelian_cross_check"))["pass"].get<bool>());
    EXPECT_EQ(cli({"cohomology", data("heis3.alg"), "--degree", "3"}).code, 2);
    EXPECT_EQ(cli({"cohomology", data("heis3.alg"), "--degree", "1", "--module", "nope"}).code, 2);
    const auto cl = Json::parse(cli({"cohomology", data("heis3.alg"), "--degree", "3", "--classical"}).out);
    EXPECT_EQ(cl["results"]["classical_dim"], 1);
}

TEST(Cli, DeformCheckExitCodes) {
    const std::string w3 = testing::TempDir() + "witt3.alg";
    {
        std::ofstream o(w3);
        const auto e = cli({"witt", "--p", "3", "--emit"});
        ASSERT_EQ(e.code, 0);
        o << e.out;
    }
    const auto ok = cli({"deform-check", w3, "--cocycle", data("witt3_trivial.coc")});
    EXPECT_EQ(ok.code, 0) << ok.out;
    const auto bad = cli({"deform-check", w3, "--cocycle", data("witt3_nonclosed.coc")});
    EXPECT_EQ(bad.code, 1);
    const Json doc = Json::parse(bad.out);
    EXPECT_EQ(doc["results"]["failing_axiom"], "jacobi");
    EXPECT_EQ(doc["results"]["is_cocycle"], false);
    ASSERT_NE(find_check(doc, "agreement"), nullptr);
    EXPECT_TRUE((*find_check(doc, "agreement"))["pass"].get<bool>());
}

TEST(Cli, InputErrorsExitTwo) {
    const auto missing = cli({"validate", data("witt3_missing_pmap.alg")});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("D1"), std::string::npos);
    EXPECT_EQ(cli({"validate", data("gf4.alg")}).code, 2);
    EXPECT_EQ(cli({"validate", data("does_not_exist.alg")}).code, 2);
    EXPECT_EQ(cli({"frobnicate"}).code, 2);
    EXPECT_EQ(cli({}).code, 2);
    EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, Infer) {
    const auto r = cli({"infer", data("witt3_missing_pmap.alg")});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json doc = Json::parse(r.out);
    EXPECT_EQ(doc["results"]["pmap"]["D1"], "0");
    EXPECT_EQ(doc["results"]["pmap"]["D0"], "1*D0");
    EXPECT_EQ(doc["results"]["unique"], true);
    const auto emitted = cli({"infer", data("witt3_missing_pmap.alg"), "--emit"});
    EXPECT_EQ(to_algebra(parse_algebra_file(emitted.out)).pi_images(), witt_algebra(Prime(3)).algebra.pi_images());
    const auto fil = cli({"infer", data("filiform2.alg")});
    EXPECT_EQ(fil.code, 1);
    EXPECT_FALSE((*find_check(Json::parse(fil.out), "restrictable"))["pass"].get<bool>());
}

TEST(Cli, WittAndIdentities) {
    const auto w = cli({"witt", "--p", "5"});
    EXPECT_EQ(w.code, 0) << w.out;
    EXPECT_EQ(Json::parse(w.out)["results"]["dim"], 5);
    const auto i = cli({"identities", "--p", "13"});
    EXPECT_EQ(i.code, 0);
    EXPECT_EQ(cli({"identities", "--p", "12"}).code, 2);
}

TEST(Cli, BinaryExitCodes) {
    const std::string bin = RESCOH_CLI_PATH;
    const auto run = [&](const std::string& args) {
        const int status = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    EXPECT_EQ(run("validate " + data("ab2.alg")), 0);
    EXPECT_EQ(run("infer " + data("filiform2.alg")), 1);
    EXPECT_EQ(run("validate " + data("gf4.alg")), 2);
}
