#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "rescoh/errors.hpp"
#include "rescoh/frontend.hpp"

namespace rescoh {

namespace {

enum class Kind { Ident, Int, Punct, End };

struct Token {
    Kind kind;
    std::string text;
    std::size_t column;  // 1-based
    std::int64_t value = 0;
};

std::vector<Token> lex_line(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = line.size();
    while (i < n) {
        const char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t col = i + 1;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < n && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
            out.push_back({Kind::Ident, std::string(line.substr(i, j - i)), col});
            i = j;
            continue;
        }
        const bool negative = c == '-' && i + 1 < n && std::isdigit(static_cast<unsigned char>(line[i + 1]));
        if (std::isdigit(static_cast<unsigned char>(c)) || negative) {
            std::size_t j = negative ? i + 1 : i;
            while (j < n && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
            const std::string digits(line.substr(i, j - i));
            if (j - i > 18) throw SyntaxError(line_no, col, "integer of at most 18 digits");
            out.push_back({Kind::Int, digits, col, std::stoll(digits)});
            i = j;
            continue;
        }
        if (std::string_view("[](),;=+*^").find(c) != std::string_view::npos) {
            out.push_back({Kind::Punct, std::string(1, c), col});
            ++i;
            continue;
        }
        throw SyntaxError(line_no, col, "a label, an integer or one of [](),;=+*^");
    }
    out.push_back({Kind::End, "", n + 1});
    return out;
}

std::uint32_t residue(std::int64_t v, std::uint32_t p) {
    const std::int64_t r = v % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

class Cursor {
public:
    Cursor(std::vector<Token> toks, std::size_t line) : toks_(std::move(toks)), line_(line) {}

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Kind::End; }
    bool is_punct(char c) const { return peek().kind == Kind::Punct && peek().text[0] == c; }
    bool is_word(std::string_view w) const { return peek().kind == Kind::Ident && peek().text == w; }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(line_, peek().column, expected);
    }
    const Token& take() { return toks_[pos_++]; }
    void punct(char c) {
        if (!is_punct(c)) fail(std::string("'") + c + "'");
        ++pos_;
    }
    void word(std::string_view w) {
        if (!is_word(w)) fail("'" + std::string(w) + "'");
        ++pos_;
    }
    const Token& ident(const std::string& what) {
        if (peek().kind != Kind::Ident) fail(what);
        return take();
    }
    std::int64_t integer(const std::string& what) {
        if (peek().kind != Kind::Int) fail(what);
        return take().value;
    }
    void end() {
        if (!at_end()) fail("end of line");
    }
    std::size_t line() const { return line_; }

private:
    std::vector<Token> toks_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

using LabelIndex = std::map<std::string, std::size_t>;

std::size_t resolve(const LabelIndex& idx, const Token& t) {
    auto it = idx.find(t.text);
    if (it == idx.end()) throw UnresolvedReference("unknown label '" + t.text + "'");
    return it->second;
}

/// <term> ('+' <term>)*, term = '0' | <int> '*' <id> | <id>.
Vec parse_terms(Cursor& cur, const LabelIndex& idx, std::size_t n, std::uint32_t p) {
    Vec out(n, 0);
    for (;;) {
        if (cur.peek().kind == Kind::Int) {
            const std::int64_t c = cur.take().value;
            if (cur.is_punct('*')) {
                cur.punct('*');
                const std::size_t i = resolve(idx, cur.ident("a basis label"));
                out[i] = static_cast<std::uint32_t>((out[i] + residue(c, p)) % p);
            } else if (c != 0) {
                cur.fail("'*' after a nonzero coefficient");
            }
        } else if (cur.peek().kind == Kind::Ident) {
            const std::size_t i = resolve(idx, cur.take());
            out[i] = (out[i] + 1) % p;
        } else {
            cur.fail("a term (<int>*<label>, <label> or 0)");
        }
        if (!cur.is_punct('+')) break;
        cur.punct('+');
    }
    return out;
}

std::string terms_text(const Vec& v, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i]) continue;
        if (!s.empty()) s += " + ";
        s += std::to_string(v[i]) + "*" + labels[i];
    }
    return s.empty() ? "0" : s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    for (;;) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    return lines;
}

/// '[' '[' row ']' (';' '[' row ']')* ']' with rows of integers separated by commas.
std::vector<std::vector<std::int64_t>> parse_matrix(Cursor& cur) {
    std::vector<std::vector<std::int64_t>> rows;
    cur.punct('[');
    for (;;) {
        cur.punct('[');
        std::vector<std::int64_t> row;
        row.push_back(cur.integer("an integer"));
        while (!cur.is_punct(']')) {
            if (cur.is_punct(',')) cur.punct(',');
            row.push_back(cur.integer("an integer or ']'"));
        }
        cur.punct(']');
        rows.push_back(std::move(row));
        if (!cur.is_punct(';')) break;
        cur.punct(';');
    }
    cur.punct(']');
    return rows;
}

}  // namespace

bool operator==(const AlgebraFile& a, const AlgebraFile& b) {
    if (a.name != b.name || a.p != b.p || a.labels != b.labels || a.brackets != b.brackets || a.pmap != b.pmap ||
        a.modules.size() != b.modules.size())
        return false;
    for (std::size_t i = 0; i < a.modules.size(); ++i) {
        const auto &x = a.modules[i], &y = b.modules[i];
        if (x.name != y.name || x.dim != y.dim || !(x.action == y.action)) return false;
    }
    return true;
}

AlgebraFile parse_algebra_file(std::string_view text, const ParseOptions& opts) {
    AlgebraFile f;
    LabelIndex idx;
    bool have_header = false, have_basis = false;
    std::set<std::pair<std::size_t, std::size_t>> seen_brackets;
    std::vector<std::vector<bool>> seen_actions;
    std::size_t line_no = 0;
    for (std::string_view raw : split_lines(text)) {
        ++line_no;
        Cursor cur(lex_line(raw, line_no), line_no);
        if (cur.at_end()) continue;
        if (!have_header) {
            cur.word("algebra");
            f.name = cur.ident("an algebra name").text;
            cur.word("over");
            cur.word("GF");
            cur.punct('(');
            const std::int64_t p = cur.integer("a prime modulus");
            cur.punct(')');
            cur.end();
            if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
                throw NonPrimeModulus("GF(" + std::to_string(p) + ") is not a prime field");
            f.p = Prime(static_cast<std::uint32_t>(p)).value();
            have_header = true;
            continue;
        }
        if (!have_basis) {
            cur.word("basis");
            do {
                const Token& t = cur.ident("a basis label");
                if (idx.count(t.text)) throw DuplicateLabel("basis label '" + t.text + "' repeated");
                idx[t.text] = f.labels.size();
                f.labels.push_back(t.text);
            } while (!cur.at_end());
            const std::size_t n = f.labels.size();
            f.brackets.assign(n, std::vector<Vec>(n, Vec(n, 0)));
            f.pmap.assign(n, std::nullopt);
            have_basis = true;
            continue;
        }
        const std::size_t n = f.labels.size();
        if (cur.is_word("bracket")) {
            cur.word("bracket");
            cur.punct('[');
            const Token a = cur.ident("a basis label");
            cur.punct(',');
            const Token b = cur.ident("a basis label");
            cur.punct(']');
            cur.punct('=');
            const std::size_t i = resolve(idx, a), j = resolve(idx, b);
            if (!seen_brackets.insert({i, j}).second)
                throw DuplicateLabel("bracket [" + a.text + "," + b.text + "] declared twice");
            f.brackets[i][j] = parse_terms(cur, idx, n, f.p);
            cur.end();
        } else if (cur.is_word("pmap")) {
            cur.word("pmap");
            const Token a = cur.ident("a basis label");
            cur.punct('^');
            cur.punct('[');
            cur.word("p");
            cur.punct(']');
            cur.punct('=');
            const std::size_t i = resolve(idx, a);
            if (f.pmap[i]) throw DuplicateLabel("pmap for '" + a.text + "' declared twice");
            f.pmap[i] = parse_terms(cur, idx, n, f.p);
            cur.end();
        } else if (cur.is_word("module")) {
            cur.word("module");
            const Token name = cur.ident("a module name");
            cur.word("dim");
            const std::int64_t m = cur.integer("a module dimension");
            cur.end();
            if (m < 1) throw SyntaxError(line_no, 1, "a positive module dimension");
            if (name.text == "trivial" || name.text == "adjoint")
                throw DuplicateLabel("module name '" + name.text + "' is reserved");
            for (const auto& mb : f.modules)
                if (mb.name == name.text) throw DuplicateLabel("module '" + name.text + "' declared twice");
            const Prime P(f.p);
            f.modules.push_back({name.text, static_cast<std::size_t>(m),
                                 std::vector<FpMatrix>(n, FpMatrix(static_cast<std::size_t>(m),
                                                                   static_cast<std::size_t>(m), P))});
            seen_actions.emplace_back(n, false);
        } else if (cur.is_word("action")) {
            if (f.modules.empty()) cur.fail("a module line before 'action'");
            cur.word("action");
            const Token a = cur.ident("a basis label");
            cur.punct('=');
            const std::size_t i = resolve(idx, a);
            const std::size_t col = cur.peek().column;
            const auto rows = parse_matrix(cur);
            cur.end();
            auto& mb = f.modules.back();
            const std::string shape = std::to_string(mb.dim) + " rows of " + std::to_string(mb.dim) + " integers";
            if (rows.size() != mb.dim) throw SyntaxError(line_no, col, shape);
            for (const auto& r : rows)
                if (r.size() != mb.dim) throw SyntaxError(line_no, col, shape);
            if (seen_actions.back()[i]) throw DuplicateLabel("action of '" + a.text + "' declared twice");
            seen_actions.back()[i] = true;
            mb.action[i] = FpMatrix::from_rows(rows, Prime(f.p));
        } else {
            cur.fail("'bracket', 'pmap', 'module' or 'action'");
        }
    }
    if (!have_header) throw SyntaxError(line_no, 1, "'algebra'");
    if (!have_basis) throw SyntaxError(line_no, 1, "'basis'");
    for (std::size_t k = 0; k < f.modules.size(); ++k)
        for (std::size_t i = 0; i < f.labels.size(); ++i)
            if (!seen_actions[k][i])
                throw UnresolvedReference("module '" + f.modules[k].name + "' has no action for " + f.labels[i]);
    if (opts.require_pmap)
        for (std::size_t i = 0; i < f.labels.size(); ++i)
            if (!f.pmap[i]) throw UnresolvedReference("no pmap line for " + f.labels[i]);
    return f;
}

std::string emit_algebra_file(const AlgebraFile& f) {
    std::ostringstream os;
    os << "algebra " << f.name << " over GF(" << f.p << ")\n";
    os << "basis";
    for (const auto& l : f.labels) os << ' ' << l;
    os << '\n';
    const std::size_t n = f.labels.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            os << "bracket [" << f.labels[i] << ',' << f.labels[j] << "] = " << terms_text(f.brackets[i][j], f.labels)
               << '\n';
    for (std::size_t i = 0; i < n; ++i)
        if (f.pmap[i]) os << "pmap " << f.labels[i] << "^[p] = " << terms_text(*f.pmap[i], f.labels) << '\n';
    for (const auto& mb : f.modules) {
        os << "module " << mb.name << " dim " << mb.dim << '\n';
        for (std::size_t i = 0; i < n; ++i) {
            os << "action " << f.labels[i] << " = [";
            for (std::size_t r = 0; r < mb.dim; ++r) {
                os << (r ? ";[" : "[");
                for (std::size_t c = 0; c < mb.dim; ++c) os << (c ? "," : "") << mb.action[i].at(r, c);
                os << ']';
            }
            os << "]\n";
        }
    }
    return os.str();
}

AlgebraFile from_algebra(const RestrictedLieAlgebra& L, const std::string& name, std::vector<ModuleBlock> modules) {
    AlgebraFile f;
    f.name = name;
    f.p = L.prime().value();
    f.labels = L.labels();
    f.brackets = L.structure_constants();
    for (const auto& v : L.pi_images()) f.pmap.emplace_back(v);
    f.modules = std::move(modules);
    return f;
}

namespace {

std::vector<Vec> required_pmap(const AlgebraFile& f) {
    std::vector<Vec> pi;
    for (std::size_t i = 0; i < f.labels.size(); ++i) {
        if (!f.pmap[i]) throw UnresolvedReference("no pmap line for " + f.labels[i]);
        pi.push_back(*f.pmap[i]);
    }
    return pi;
}

}  // namespace

RestrictedLieAlgebra to_algebra(const AlgebraFile& f) {
    return RestrictedLieAlgebra::create(Prime(f.p), f.brackets, required_pmap(f), f.labels);
}

RestrictedLieAlgebra to_algebra_unchecked(const AlgebraFile& f) {
    return RestrictedLieAlgebra::unchecked(Prime(f.p), f.brackets, required_pmap(f), f.labels);
}

RestrictedModule find_module(const AlgebraFile& f, const AlgebraPtr& L, const std::string& name) {
    if (name == "trivial") return trivial_module(L);
    if (name == "adjoint") return adjoint_module(L);
    for (const auto& mb : f.modules)
        if (mb.name == name) return make_module(L, mb.action);
    throw UnresolvedReference("no module named '" + name + "'");
}

Cochain2 parse_cocycle_file(std::string_view text, const RestrictedModule& adjoint) {
    const auto& L = adjoint.lie();
    const std::size_t n = L.dim();
    const std::uint32_t p = L.prime().value();
    LabelIndex idx;
    for (std::size_t i = 0; i < n; ++i) idx[L.labels()[i]] = i;
    Cochain2 c{Vec(classical_cochain_dim(adjoint, 2), 0), std::vector<Vec>(n, Vec(n, 0))};
    TupleIndex pairs(n, 2);
    std::set<std::pair<std::size_t, std::size_t>> seen_phi;
    std::set<std::size_t> seen_omega;
    std::size_t line_no = 0;
    for (std::string_view raw : split_lines(text)) {
        ++line_no;
        Cursor cur(lex_line(raw, line_no), line_no);
        if (cur.at_end()) continue;
        if (cur.is_word("phi")) {
            cur.word("phi");
            cur.punct('[');
            const Token a = cur.ident("a basis label");
            cur.punct(',');
            const Token b = cur.ident("a basis label");
            cur.punct(']');
            cur.punct('=');
            std::size_t i = resolve(idx, a), j = resolve(idx, b);
            if (i == j) throw SyntaxError(line_no, b.column, "two distinct labels");
            Vec v = parse_terms(cur, idx, n, p);
            cur.end();
            if (i > j) {
                std::swap(i, j);
                v = vneg(L.prime(), v);
            }
            if (!seen_phi.insert({i, j}).second)
                throw DuplicateLabel("phi [" + a.text + "," + b.text + "] declared twice");
            std::copy(v.begin(), v.end(), c.phi.begin() + static_cast<std::ptrdiff_t>(pairs.rank({i, j}) * n));
        } else if (cur.is_word("omega")) {
            cur.word("omega");
            const Token a = cur.ident("a basis label");
            cur.punct('=');
            const std::size_t i = resolve(idx, a);
            Vec v = parse_terms(cur, idx, n, p);
            cur.end();
            if (!seen_omega.insert(i).second) throw DuplicateLabel("omega " + a.text + " declared twice");
            c.omega_basis[i] = std::move(v);
        } else {
            cur.fail("'phi' or 'omega'");
        }
    }
    return c;
}

}  // namespace rescoh
