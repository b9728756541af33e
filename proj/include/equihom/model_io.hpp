#pragma once

// Line-oriented, human-writable file formats for models, bases and Mackey
// tables (exact grammar in docs/model-format.md).  Parsing returns either a
// validated value or a list of positioned diagnostics; unknown fields are
// rejected.  Degrees serialize as "a+b*s" (full RO(C2)), "k*rho[H]" /
// "k*rho[H]-1" (regular), or a plain integer (trivial stabilizer).

#include <charconv>
#include <sstream>

#include "equihom/mackey.hpp"
#include "equihom/purering.hpp"

namespace equihom {

struct Diagnostic {
    int line = 0;
    int col = 0;
    std::string message;

    std::string to_string() const {
        return "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + message;
    }
};

template <typename T>
struct ParseResult {
    std::optional<T> value;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return value.has_value() && diagnostics.empty(); }

    const T& require_ok() const {
        if (!ok()) {
            std::string msg = "parse failed";
            for (auto& d : diagnostics) msg += "\n  " + d.to_string();
            throw domain_error(msg);
        }
        return *value;
    }
};

namespace ioparse {

struct Token {
    std::string text;
    int col = 0;
};

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

inline std::optional<long long> parse_int(const std::string& s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
    return v;
}

/// "c1", "c2", "c4", ... (prime powers)
inline std::optional<CyclicGroup> parse_group_name(const std::string& s) {
    if (s.size() < 2 || (s[0] != 'c' && s[0] != 'C')) return std::nullopt;
    auto n = parse_int(s.substr(1));
    if (!n || *n < 1) return std::nullopt;
    for (int p = 2; p <= *n; ++p) {
        int e = 0;
        long long o = 1;
        while (o < *n) {
            o *= p;
            ++e;
        }
        if (o == *n) {
            bool prime = true;
            for (int d = 2; d * d <= p; ++d)
                if (p % d == 0) prime = false;
            if (prime) return cyclic(p, e);
        }
    }
    if (*n == 1) return cyclic(2, 0);
    return std::nullopt;
}

inline std::optional<Subgroup> parse_subgroup_name(const CyclicGroup& g, const std::string& s) {
    if (s == "e") return Subgroup{1};
    if (s.size() >= 2 && (s[0] == 'c' || s[0] == 'C')) {
        auto n = parse_int(s.substr(1));
        if (n && divides(static_cast<int>(*n), g.order())) return Subgroup{static_cast<int>(*n)};
    }
    return std::nullopt;
}

/// degree := int | k*rho[H](-1)? | a+b*s | a-b*s
inline std::optional<CellDegree> parse_degree(const CyclicGroup& g, const std::string& s) {
    auto rho = s.find("*rho[");
    if (rho != std::string::npos) {
        auto close = s.find(']', rho);
        if (close == std::string::npos) return std::nullopt;
        auto k = parse_int(s.substr(0, rho));
        auto stab = parse_subgroup_name(g, s.substr(rho + 5, close - rho - 5));
        if (!k || !stab) return std::nullopt;
        std::string rest = s.substr(close + 1);
        int eps = 0;
        if (rest == "-1")
            eps = 1;
        else if (!rest.empty())
            return std::nullopt;
        return CellDegree{make_reg_degree(*stab, *k, eps)};
    }
    auto star_s = s.find("*s");
    if (star_s != std::string::npos && star_s + 2 == s.size()) {
        // a+b*s or a-b*s; find the sign separating a from b (skip a leading sign)
        size_t pos = s.size();
        for (size_t i = 1; i + 2 < s.size(); ++i)
            if (s[i] == '+' || s[i] == '-') pos = i;
        if (pos >= s.size()) return std::nullopt;
        auto a = parse_int(s.substr(0, pos));
        auto b = parse_int(s[pos] == '+' ? s.substr(pos + 1, star_s - pos - 1)
                                         : s.substr(pos, star_s - pos));
        if (!a || !b) return std::nullopt;
        return CellDegree{DegreeC2{*a, *b}};
    }
    auto n = parse_int(s);
    if (!n) return std::nullopt;
    return CellDegree{integer_degree(*n)};
}

inline std::string degree_string(const CellDegree& d) { return degree_to_string(d); }

/// factor := int | a_s(^i)? | u_s(^j)? | gen(^e)?
inline bool parse_factor(const PureRingModel& md, const std::string& f, CoefMono& c,
                         Monomial& m, std::string& err) {
    if (auto n = parse_int(f)) {
        c.n *= *n;
        return true;
    }
    std::string base = f;
    long long exp = 1;
    auto caret = f.find('^');
    if (caret != std::string::npos) {
        base = f.substr(0, caret);
        auto e = parse_int(f.substr(caret + 1));
        if (!e || *e < 0) {
            err = "bad exponent in '" + f + "'";
            return false;
        }
        exp = *e;
    }
    if (base == "a_s") {
        c.cone.a_exp += exp;
        return true;
    }
    if (base == "u_s") {
        c.cone.u_exp += exp;
        return true;
    }
    for (size_t i = 0; i < md.gens.size(); ++i)
        if (md.gens[i].name == base) {
            if (exp > 0) m.exps[static_cast<int>(i)] += exp;
            return true;
        }
    err = "unknown factor '" + base + "'";
    return false;
}

/// term := 1 | factor(*factor)*  with an optional leading '-'
inline bool parse_term(const PureRingModel& md, std::string t, Term& out, std::string& err) {
    out = Term{};
    if (!t.empty() && t[0] == '-') {
        out.c.n = -1;
        t = t.substr(1);
    }
    if (t == "1" || t.empty()) return true;
    size_t i = 0;
    while (i <= t.size()) {
        size_t j = t.find('*', i);
        // '*s' or '*rho' never occur in terms; '*' is always a separator here
        if (j == std::string::npos) j = t.size();
        std::string f = t.substr(i, j - i);
        if (f.empty()) {
            err = "empty factor";
            return false;
        }
        if (!parse_factor(md, f, out.c, out.m, err)) return false;
        if (j == t.size()) break;
        i = j + 1;
    }
    return true;
}

/// poly := 0 | term ( + term)*   (tokens already split on spaces: the caller
/// passes the joined text)
inline bool parse_poly(const PureRingModel& md, const std::string& text, Poly& out,
                       std::string& err) {
    out.clear();
    if (text == "0") return true;
    size_t i = 0;
    std::string cur;
    auto flush = [&]() -> bool {
        if (cur.empty()) return true;
        Term t;
        if (!parse_term(md, cur, t, err)) return false;
        out.push_back(t);
        cur.clear();
        return true;
    };
    while (i < text.size()) {
        if (text.compare(i, 3, " + ") == 0) {
            if (!flush()) return false;
            i += 3;
            continue;
        }
        cur += text[i++];
    }
    return flush();
}

inline bool parse_tensor(const PureRingModel& md, const std::string& text, TensorExpr& out,
                         std::string& err) {
    out.clear();
    size_t i = 0;
    std::string cur;
    std::vector<std::string> terms;
    while (i < text.size()) {
        if (text.compare(i, 3, " + ") == 0) {
            terms.push_back(cur);
            cur.clear();
            i += 3;
            continue;
        }
        cur += text[i++];
    }
    terms.push_back(cur);
    for (auto& t : terms) {
        auto mid = t.find(" (x) ");
        if (mid == std::string::npos) {
            err = "tensor term '" + t + "' lacks ' (x) '";
            return false;
        }
        Term l, r;
        if (!parse_term(md, t.substr(0, mid), l, err)) return false;
        if (!parse_term(md, t.substr(mid + 5), r, err)) return false;
        out.push_back(TensorTerm{l.c * r.c, l.m, r.m});
    }
    return true;
}

} // namespace ioparse

inline Element parse_element(const PureRingModel& md, Subgroup level, const std::string& text) {
    Poly p;
    std::string err;
    require(ioparse::parse_poly(md, text, p, err), "element '" + text + "': " + err);
    return make_element(md, level, p);
}

// ---------------------------------------------------------------------------
// Model files

inline ParseResult<PureRingModel> parse_model(const std::string& text) {
    using namespace ioparse;
    ParseResult<PureRingModel> out;
    PureRingModel md;
    bool have_format = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::vector<std::pair<int, std::vector<Token>>> deferred; // rel/dl/cop lines
    auto fail = [&](int ln, int col, const std::string& msg) {
        out.diagnostics.push_back(Diagnostic{ln, col, msg});
    };

    // pass 1: headers and generators
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<Token> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& key = tok[0].text;
        auto rest_from = [&](size_t idx) {
            std::string s;
            for (size_t i = idx; i < tok.size(); ++i) {
                if (!s.empty()) s += " ";
                s += tok[i].text;
            }
            return s;
        };
        if (key == "format:") {
            if (rest_from(1) != "equihom-model 1")
                fail(lineno, tok[0].col, "unsupported format (want 'equihom-model 1')");
            have_format = true;
        } else if (key == "name:") {
            md.name = rest_from(1);
        } else if (key == "group:") {
            auto g = parse_group_name(tok.size() > 1 ? tok[1].text : "");
            if (!g)
                fail(lineno, tok.size() > 1 ? tok[1].col : tok[0].col, "bad group");
            else
                md.group = *g;
        } else if (key == "coeff:") {
            std::string c = tok.size() > 1 ? tok[1].text : "";
            if (c == "f2")
                md.coeff = Coeff::F2;
            else if (c == "z")
                md.coeff = Coeff::Z;
            else
                fail(lineno, tok[0].col, "coeff must be f2 or z");
        } else if (key == "gen") {
            if (tok.size() != 8 || tok[2].text != "u" || tok[4].text != "deg" ||
                tok[6].text != "sign" || (tok[7].text != "+" && tok[7].text != "-")) {
                fail(lineno, tok[0].col, "expected: gen <name> u <int> deg <degree> sign <+|->");
                continue;
            }
            ModelGen g;
            g.name = tok[1].text;
            for (auto& existing : md.gens)
                if (existing.name == g.name)
                    fail(lineno, tok[1].col, "duplicate generator '" + g.name + "'");
            auto u = parse_int(tok[3].text);
            if (!u) {
                fail(lineno, tok[3].col, "bad underlying degree");
                continue;
            }
            g.underlying = *u;
            auto d = parse_degree(md.group, tok[5].text);
            if (!d) {
                fail(lineno, tok[5].col, "bad degree '" + tok[5].text + "'");
                continue;
            }
            g.cell_deg = *d;
            if (auto* r = std::get_if<RegDegree>(&g.cell_deg))
                g.stab = r->stab;
            else
                g.stab = Subgroup{2};
            g.sign = tok[7].text == "-" ? -1 : 1;
            if (underlying_dim(g.cell_deg) != g.underlying)
                fail(lineno, tok[3].col,
                     "dimension mismatch: generator '" + g.name + "' declares underlying " +
                         std::to_string(g.underlying) + " but its degree has dimension " +
                         std::to_string(underlying_dim(g.cell_deg)));
            md.gens.push_back(g);
        } else if (key == "rel" || key == "dl" || key == "cop") {
            deferred.push_back({lineno, tok});
        } else {
            fail(lineno, tok[0].col, "unknown field '" + key + "'");
        }
    }
    if (!have_format) fail(1, 1, "missing 'format: equihom-model 1' header");

    // pass 2: relations, DL rows, coproduct rows
    for (auto& [ln, tok] : deferred) {
        const std::string& key = tok[0].text;
        auto arrow = std::find_if(tok.begin(), tok.end(),
                                  [](const Token& t) { return t.text == "->"; });
        if (arrow == tok.end()) {
            fail(ln, tok[0].col, "missing '->'");
            continue;
        }
        size_t arrow_idx = static_cast<size_t>(arrow - tok.begin());
        auto joined = [&](size_t from, size_t to) {
            std::string s;
            for (size_t i = from; i < to; ++i) {
                if (!s.empty()) s += " ";
                s += tok[i].text;
            }
            return s;
        };
        std::string rhs_text = joined(arrow_idx + 1, tok.size());
        std::string err;
        if (key == "rel") {
            if (arrow_idx != 2) {
                fail(ln, tok[0].col, "expected: rel <monomial> -> <poly>");
                continue;
            }
            Term lhs;
            if (!parse_term(md, tok[1].text, lhs, err) || lhs.c.n != 1 || !lhs.c.cone.is_one()) {
                fail(ln, tok[1].col, err.empty() ? "relation lhs must be a monic monomial" : err);
                continue;
            }
            Relation r;
            r.lhs = lhs.m;
            if (!parse_poly(md, rhs_text, r.rhs, err)) {
                fail(ln, arrow->col, err);
                continue;
            }
            // degree compatibility and non-increase
            if (md.group.order() == 2) {
                DegreeC2 ld = as_full_c2(md.mono_degree(r.lhs));
                for (auto& t : r.rhs) {
                    DegreeC2 rd = t.c.cone.degree() + as_full_c2(md.mono_degree(t.m));
                    if (!(rd == ld))
                        fail(ln, arrow->col, "relation is not homogeneous: lhs " +
                                                 ld.to_string() + " vs rhs " + rd.to_string());
                }
            }
            for (auto& t : r.rhs)
                if (md.mono_dim(t.m) + t.c.cone.degree().underlying_dim() > md.mono_dim(r.lhs))
                    fail(ln, arrow->col, "rewrite increases the underlying degree");
            md.relations.push_back(r);
        } else if (key == "dl") {
            if (arrow_idx != 3) {
                fail(ln, tok[0].col, "expected: dl <gen> <i> -> <poly>");
                continue;
            }
            int gen = -1;
            for (size_t i = 0; i < md.gens.size(); ++i)
                if (md.gens[i].name == tok[1].text) gen = static_cast<int>(i);
            auto iv = parse_int(tok[2].text);
            if (gen < 0 || !iv) {
                fail(ln, tok[1].col, "bad DL row");
                continue;
            }
            Poly v;
            if (!parse_poly(md, rhs_text, v, err)) {
                fail(ln, arrow->col, err);
                continue;
            }
            if (md.group.order() == 2) {
                DegreeC2 expect =
                    as_full_c2(md.gens[gen].cell_deg) + to_full_c2(RegDegree{Subgroup{2}, *iv, 0});
                for (auto& t : v) {
                    DegreeC2 got = t.c.cone.degree() + as_full_c2(md.mono_degree(t.m));
                    if (!(got == expect))
                        fail(ln, arrow->col, "DL row has the wrong degree");
                }
            }
            md.dl[{gen, *iv}] = v;
        } else { // cop
            if (arrow_idx != 2) {
                fail(ln, tok[0].col, "expected: cop <gen> -> <tensor poly>");
                continue;
            }
            int gen = -1;
            for (size_t i = 0; i < md.gens.size(); ++i)
                if (md.gens[i].name == tok[1].text) gen = static_cast<int>(i);
            if (gen < 0) {
                fail(ln, tok[1].col, "unknown generator '" + tok[1].text + "'");
                continue;
            }
            TensorExpr psi;
            if (!parse_tensor(md, rhs_text, psi, err)) {
                fail(ln, arrow->col, err);
                continue;
            }
            DegreeC2 expect = as_full_c2(md.gens[gen].cell_deg);
            for (auto& t : psi) {
                DegreeC2 got = t.c.cone.degree() + as_full_c2(md.mono_degree(t.left)) +
                               as_full_c2(md.mono_degree(t.right));
                if (md.group.order() == 2 && !(got == expect))
                    fail(ln, arrow->col, "coproduct row has the wrong degree");
            }
            md.coproduct[gen] = psi;
        }
    }

    if (out.diagnostics.empty()) out.value = md;
    return out;
}

// ---------------------------------------------------------------------------
// Basis files

inline ParseResult<Basis> parse_basis(const std::string& text) {
    using namespace ioparse;
    ParseResult<Basis> out;
    Basis b;
    bool have_format = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](int col, const std::string& msg) {
        out.diagnostics.push_back(Diagnostic{lineno, col, msg});
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<Token> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& key = tok[0].text;
        if (key == "format:") {
            if (tok.size() != 3 || tok[1].text != "equihom-basis" || tok[2].text != "1")
                fail(tok[0].col, "unsupported format (want 'equihom-basis 1')");
            have_format = true;
        } else if (key == "group:") {
            auto g = parse_group_name(tok.size() > 1 ? tok[1].text : "");
            if (!g)
                fail(tok[0].col, "bad group");
            else
                b.group = *g;
        } else if (key == "coeff:") {
            std::string c = tok.size() > 1 ? tok[1].text : "";
            if (c == "f2")
                b.coeff = Coeff::F2;
            else if (c == "z")
                b.coeff = Coeff::Z;
            else
                fail(tok[0].col, "coeff must be f2 or z");
        } else if (key == "cell") {
            if (tok.size() != 4) {
                fail(tok[0].col, "expected: cell <label> <stab> <degree>");
                continue;
            }
            auto stab = parse_subgroup_name(b.group, tok[2].text);
            auto deg = parse_degree(b.group, tok[3].text);
            if (!stab) {
                fail(tok[2].col, "bad stabilizer '" + tok[2].text + "'");
                continue;
            }
            if (!deg) {
                fail(tok[3].col, "bad degree '" + tok[3].text + "'");
                continue;
            }
            b.cells.push_back(Cell{tok[1].text, *stab, *deg});
        } else {
            fail(tok[0].col, "unknown field '" + key + "'");
        }
    }
    if (!have_format)
        out.diagnostics.push_back(Diagnostic{1, 1, "missing 'format: equihom-basis 1' header"});
    if (out.diagnostics.empty()) {
        try {
            validate_basis(b);
            out.value = b;
        } catch (const domain_error& e) {
            out.diagnostics.push_back(Diagnostic{0, 0, e.what()});
        }
    }
    return out;
}

inline std::string emit_basis(const Basis& b) {
    std::ostringstream os;
    os << "format: equihom-basis 1\n";
    os << "group: " << (b.group.order() == 1 ? "c1" : "c" + std::to_string(b.group.order()))
       << "\n";
    os << "coeff: " << coeff_name(b.coeff) << "\n";
    for (const Cell& c : b.cells)
        os << "cell " << c.label << " " << c.stab.name() << " " << degree_to_string(c.degree)
           << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Mackey table files

inline ParseResult<MackeyTable> parse_mackey(const std::string& text) {
    using namespace ioparse;
    ParseResult<MackeyTable> out;
    MackeyTable m;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_format = false, have_group = false;
    auto fail = [&](int col, const std::string& msg) {
        out.diagnostics.push_back(Diagnostic{lineno, col, msg});
    };
    std::vector<std::pair<int, std::vector<Token>>> maps;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<Token> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& key = tok[0].text;
        if (key == "format:") {
            if (tok.size() != 3 || tok[1].text != "equihom-mackey" || tok[2].text != "1")
                fail(tok[0].col, "unsupported format");
            have_format = true;
        } else if (key == "group:") {
            auto g = parse_group_name(tok.size() > 1 ? tok[1].text : "");
            if (!g)
                fail(tok[0].col, "bad group");
            else {
                m.group = *g;
                have_group = true;
                m.level_dim.assign(m.group.exponent + 1, 0);
                m.res.assign(m.group.exponent, Mat());
                m.tr.assign(m.group.exponent, Mat());
                m.weyl.assign(m.group.exponent + 1, Mat());
            }
        } else if (key == "coeff:") {
            std::string c = tok.size() > 1 ? tok[1].text : "";
            if (c == "f2")
                m.scalars = Coeff::F2;
            else if (c == "z")
                m.scalars = Coeff::Z;
            else
                fail(tok[0].col, "coeff must be f2 or z");
        } else if (key == "name:") {
            m.name.clear();
            for (size_t i = 1; i < tok.size(); ++i)
                m.name += (i > 1 ? " " : "") + tok[i].text;
        } else if (key == "level") {
            if (!have_group || tok.size() != 4 || tok[2].text != "dim") {
                fail(tok[0].col, "expected: level <H> dim <n> (after group:)");
                continue;
            }
            auto h = parse_subgroup_name(m.group, tok[1].text);
            auto n = parse_int(tok[3].text);
            if (!h || !n || *n < 0) {
                fail(tok[1].col, "bad level line");
                continue;
            }
            m.level_dim[m.exponent_of(*h)] = static_cast<int>(*n);
        } else if (key == "res" || key == "tr" || key == "weyl") {
            maps.push_back({lineno, tok});
        } else {
            fail(tok[0].col, "unknown field '" + key + "'");
        }
    }
    if (!have_format)
        out.diagnostics.push_back(Diagnostic{1, 1, "missing 'format: equihom-mackey 1' header"});
    for (auto& [ln, tok] : maps) {
        lineno = ln;
        const std::string& key = tok[0].text;
        size_t header = key == "weyl" ? 2 : 3;
        if (tok.size() < header) {
            fail(tok[0].col, "truncated map line");
            continue;
        }
        auto h1 = parse_subgroup_name(m.group, tok[1].text);
        std::optional<Subgroup> h2 =
            key == "weyl" ? h1 : parse_subgroup_name(m.group, tok[2].text);
        if (!h1 || !h2) {
            fail(tok[1].col, "bad subgroup");
            continue;
        }
        int e1 = m.exponent_of(*h1), e2 = m.exponent_of(*h2);
        int rows, cols;
        if (key == "res") {
            if (e2 != e1 - 1) {
                fail(tok[1].col, "res must go one level down");
                continue;
            }
            rows = m.level_dim[e2];
            cols = m.level_dim[e1];
        } else if (key == "tr") {
            if (e2 != e1 + 1) {
                fail(tok[1].col, "tr must go one level up");
                continue;
            }
            rows = m.level_dim[e2];
            cols = m.level_dim[e1];
        } else {
            rows = cols = m.level_dim[e1];
        }
        if (tok.size() != header + static_cast<size_t>(rows) * cols) {
            fail(tok[0].col, "expected " + std::to_string(rows * cols) + " matrix entries");
            continue;
        }
        Mat mat(rows, cols);
        bool bad = false;
        for (int i = 0; i < rows * cols; ++i) {
            auto v = parse_int(tok[header + i].text);
            if (!v) {
                fail(tok[header + i].col, "bad integer");
                bad = true;
                break;
            }
            mat.a[static_cast<size_t>(i)] = *v;
        }
        if (bad) continue;
        if (key == "res")
            m.res[e1 - 1] = mat;
        else if (key == "tr")
            m.tr[e1] = mat;
        else
            m.weyl[e1] = mat;
    }
    if (out.diagnostics.empty()) out.value = m;
    return out;
}

inline std::string emit_mackey(const MackeyTable& m) {
    std::ostringstream os;
    os << "format: equihom-mackey 1\n";
    if (!m.name.empty()) os << "name: " << m.name << "\n";
    os << "group: " << (m.group.order() == 1 ? "c1" : "c" + std::to_string(m.group.order()))
       << "\n";
    os << "coeff: " << coeff_name(m.scalars) << "\n";
    auto sub_name = [&](int e) {
        int o = 1;
        for (int i = 0; i < e; ++i) o *= m.group.prime;
        return Subgroup{o}.name();
    };
    auto entries = [](const Mat& mat) {
        std::string s;
        for (i64 v : mat.a) s += " " + std::to_string(v);
        return s;
    };
    for (int e = 0; e <= m.group.exponent; ++e)
        os << "level " << sub_name(e) << " dim " << m.level_dim[e] << "\n";
    for (int e = 0; e < m.group.exponent; ++e)
        os << "res " << sub_name(e + 1) << " " << sub_name(e) << entries(m.res[e]) << "\n";
    for (int e = 0; e < m.group.exponent; ++e)
        os << "tr " << sub_name(e) << " " << sub_name(e + 1) << entries(m.tr[e]) << "\n";
    for (int e = 0; e <= m.group.exponent; ++e)
        os << "weyl " << sub_name(e) << entries(m.weyl[e]) << "\n";
    return os.str();
}

/// Canonical serialization; parse(emit(m)) reproduces the model.
inline std::string emit_model(const PureRingModel& md) {
    std::ostringstream os;
    os << "format: equihom-model 1\n";
    if (!md.name.empty()) os << "name: " << md.name << "\n";
    os << "group: " << (md.group.order() == 1 ? "c1" : "c" + std::to_string(md.group.order()))
       << "\n";
    os << "coeff: " << coeff_name(md.coeff) << "\n";
    for (const ModelGen& g : md.gens)
        os << "gen " << g.name << " u " << g.underlying << " deg "
           << degree_to_string(g.cell_deg) << " sign " << (g.sign < 0 ? "-" : "+") << "\n";
    for (const Relation& r : md.relations)
        os << "rel " << md.mono_string(r.lhs) << " -> " << poly_string(md, r.rhs) << "\n";
    for (auto& [key, v] : md.dl)
        os << "dl " << md.gens[key.first].name << " " << key.second << " -> "
           << poly_string(md, v) << "\n";
    for (auto& [gen, psi] : md.coproduct)
        os << "cop " << md.gens[gen].name << " -> " << tensor_string(md, psi) << "\n";
    return os.str();
}

} // namespace equihom
