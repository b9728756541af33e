// equihom: calculator for RO(C2)-graded free bases over cyclic 2-groups --
// orbit calculus, point homology, box/norm/dual bases, lifted ring structure
// (products, norms, conorms, Dyer-Lashof), and Koszul Tor pages.
//
// Exit codes: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "equihom/check.hpp"
#include "equihom/demos.hpp"

using namespace equihom;

namespace {

struct Options {
    std::string format = "text";
    long long trunc = 12;
};

long long default_trunc() {
    if (const char* env = std::getenv("EQUIHOM_TRUNC")) {
        try {
            return std::stoll(env);
        } catch (...) {
            throw domain_error("EQUIHOM_TRUNC is not an integer");
        }
    }
    return 12;
}

void guard_trunc(long long t) {
    if (t < 0 || t > 16)
        throw domain_error("truncation " + std::to_string(t) +
                           " is outside the supported range 0..16 (enumeration guard)");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

PureRingModel load_model(const std::string& spec, Coeff coeff) {
    if (spec == "bur" || spec == "bbur" || spec == "dual-steenrod")
        return builtin_model(spec, coeff);
    ParseResult<PureRingModel> r = parse_model(read_file(spec));
    if (!r.ok()) {
        std::string msg = "model '" + spec + "' failed to parse";
        for (auto& d : r.diagnostics) msg += "\n  " + d.to_string();
        throw domain_error(msg);
    }
    return *r.value;
}

Basis load_basis(const std::string& path) {
    ParseResult<Basis> r = parse_basis(read_file(path));
    if (!r.ok()) {
        std::string msg = "basis '" + path + "' failed to parse";
        for (auto& d : r.diagnostics) msg += "\n  " + d.to_string();
        throw domain_error(msg);
    }
    return *r.value;
}

CyclicGroup group_arg(const std::string& s) {
    auto g = ioparse::parse_group_name(s);
    if (!g) throw CLI::ValidationError("--group", "bad group name '" + s + "'");
    return *g;
}

Coeff coeff_arg(const std::string& s) {
    if (s == "f2") return Coeff::F2;
    if (s == "z") return Coeff::Z;
    throw CLI::ValidationError("--coeff", "want f2 or z");
}

GSet orbits_arg(const CyclicGroup& g, const std::string& csv) {
    GSet t{g, {}};
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        auto s = ioparse::parse_subgroup_name(g, cur);
        if (!s) throw domain_error("bad orbit stabilizer '" + cur + "'");
        t.add_orbit(*s);
        cur.clear();
    };
    for (char c : csv) {
        if (c == ',')
            flush();
        else
            cur += c;
    }
    flush();
    return t;
}

void emit(const Options& opt, const std::string& text, const ResultDoc& doc) {
    if (opt.format == "json")
        std::cout << doc.dump();
    else
        std::cout << text;
}

ResultDoc doc_of(const std::string& kind, const std::string& input, json payload) {
    ResultDoc d;
    d.kind = kind;
    d.digest = digest_of(input);
    d.payload = std::move(payload);
    return d;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"equihom: RO(C2)-graded free-basis calculator"};
    app.require_subcommand(1);
    Options opt;
    opt.trunc = -1; // resolved after parsing: flag > env > 12
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));

    // ---- gset ------------------------------------------------------------
    auto* gset = app.add_subcommand("gset", "orbit calculus for finite G-sets");
    gset->require_subcommand(1);
    std::string gname = "c2", orbits_csv, to_name = "e", from_name = "e";
    auto* gprod = gset->add_subcommand("prod", "orbit product G/H x G/K");
    gprod->add_option("--group", gname)->required();
    gprod->add_option("--orbits", orbits_csv, "two stabilizers, e.g. C2,C2")->required();
    auto* gres = gset->add_subcommand("res", "restriction to a subgroup");
    gres->add_option("--group", gname)->required();
    gres->add_option("--to", to_name)->required();
    gres->add_option("--orbits", orbits_csv)->required();
    auto* gcoind = gset->add_subcommand("coind", "coinduction Map^H(G,-)");
    gcoind->add_option("--group", gname)->required();
    gcoind->add_option("--from", from_name)->required();
    gcoind->add_option("--orbits", orbits_csv)->required();

    // ---- point-homology ---------------------------------------------------
    auto* ph = app.add_subcommand("point-homology", "RO(C2)-graded homology of a point");
    std::string deg_csv = "0,0", coeff_name_arg = "f2";
    ph->add_option("--deg", deg_csv, "a,b for degree a + b*sigma")->required();
    ph->add_option("--coeff", coeff_name_arg, "f2|z");

    // ---- basis -------------------------------------------------------------
    auto* basis = app.add_subcommand("basis", "operations on free bases");
    basis->require_subcommand(1);
    std::string in_a, in_b, stab_name = "C2", mackey_name = "f2";
    long long k_arg = 0;
    int eps_arg = 0;
    auto* bbox = basis->add_subcommand("box", "box product of two bases");
    bbox->add_option("--a", in_a)->required();
    bbox->add_option("--b", in_b)->required();
    auto* bnorm = basis->add_subcommand("norm", "norm of a basis along H <= G");
    bnorm->add_option("--in", in_a)->required();
    bnorm->add_option("--to", gname, "target group")->required();
    auto* bdual = basis->add_subcommand("dual", "dual basis (negated degrees)");
    bdual->add_option("--in", in_a)->required();
    auto* bhom = basis->add_subcommand("homology", "H_{k rho_K - eps} of a pure basis");
    bhom->add_option("--in", in_a)->required();
    bhom->add_option("--stab", stab_name, "the subgroup K")->required();
    bhom->add_option("--k", k_arg)->required();
    bhom->add_option("--eps", eps_arg)->check(CLI::IsMember({0, 1}));
    bhom->add_option("--coeff", mackey_name, "f2|z|burnside");
    auto* biso = basis->add_subcommand("isotropic", "generalized isotropy predicate");
    biso->add_option("--in", in_a)->required();
    auto* bphi = basis->add_subcommand("phi", "geometric fixed points of a basis");
    bphi->add_option("--in", in_a)->required();

    // ---- pure ---------------------------------------------------------------
    auto* pure = app.add_subcommand("pure", "lifted ring structure of a model");
    pure->require_subcommand(1);
    std::string model_spec, x_expr = "1", y_expr = "1", level_name = "G", map_name = "diag";
    std::string pure_coeff = "z";
    long long dl_i = 0;
    int dl_eps = 0;
    auto add_model = [&](CLI::App* c) {
        c->add_option("--model", model_spec, "model file or builtin (bur|bbur|dual-steenrod)")
            ->required();
        c->add_option("--coeff", pure_coeff, "coefficients for builtin models: f2|z");
    };
    auto* pmult = pure->add_subcommand("mult", "lifted product of two elements");
    add_model(pmult);
    pmult->add_option("--x", x_expr)->required();
    pmult->add_option("--y", y_expr)->required();
    pmult->add_option("--level", level_name, "G|e");
    auto* pnorm = pure->add_subcommand("norm", "Tambara norm of an underlying element");
    add_model(pnorm);
    pnorm->add_option("--x", x_expr)->required();
    auto* pconorm = pure->add_subcommand("conorm", "coproduct/conorm of an element");
    add_model(pconorm);
    pconorm->add_option("--x", x_expr)->required();
    pconorm->add_option("--map", map_name, "fold|diag");
    pconorm->add_option("--level", level_name, "G|e");
    auto* pdl = pure->add_subcommand("dl", "Dyer-Lashof operation Q^{i rho - eps}");
    add_model(pdl);
    pdl->add_option("--i", dl_i)->required();
    pdl->add_option("--eps", dl_eps)->check(CLI::IsMember({0, 1}));
    pdl->add_option("--x", x_expr)->required();
    auto* pexpand = pure->add_subcommand("expand", "free basis of the model");
    add_model(pexpand);
    long long trunc_flag = -1;
    pexpand->add_option("--trunc", trunc_flag, "underlying degree bound (<= 16)");

    // ---- ss ------------------------------------------------------------------
    auto* ss = app.add_subcommand("ss", "spectral sequence E2 pages");
    ss->require_subcommand(1);
    std::string twisted_x = "point";
    auto* ssbar = ss->add_subcommand("bar", "bar E2: Tor over the model's homology");
    add_model(ssbar);
    ssbar->add_option("--trunc", trunc_flag);
    auto* sstw = ss->add_subcommand("twisted", "twisted bar E2 (underlying grading)");
    add_model(sstw);
    sstw->add_option("--trunc", trunc_flag);
    sstw->add_option("--x", twisted_x, "point|free");
    auto* ssem = ss->add_subcommand("em", "Eilenberg-Moore E2 over the cohomology");
    add_model(ssem);
    ssem->add_option("--trunc", trunc_flag);

    // ---- demo ------------------------------------------------------------------
    auto* demo = app.add_subcommand("demo", "end-to-end worked computations");
    demo->require_subcommand(1);
    std::string demo_coeff = "z";
    auto* dbur = demo->add_subcommand("bur", "free basis of the Real classifying space model");
    dbur->add_option("--coeff", demo_coeff);
    dbur->add_option("--trunc", trunc_flag);
    auto* dbbur = demo->add_subcommand("bbur", "bar spectral sequence end to end");
    dbbur->add_option("--coeff", demo_coeff);
    dbbur->add_option("--trunc", trunc_flag);
    auto* dcoind = demo->add_subcommand("coinduced-c4", "coinduced basis over C4");
    dcoind->add_option("--coeff", demo_coeff);
    dcoind->add_option("--trunc", trunc_flag);
    auto* dds = demo->add_subcommand("dual-steenrod", "norm of the dual Steenrod basis");
    dds->add_option("--trunc", trunc_flag);

    // ---- check ---------------------------------------------------------------
    auto* check = app.add_subcommand("check", "run all axiom/oracle self-tests");
    std::string data_dir = ".";
    bool no_files = false;
    check->add_option("--data", data_dir, "repository root for golden files");
    check->add_flag("--no-files", no_files, "skip golden-file checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        opt.trunc = trunc_flag >= 0 ? trunc_flag : default_trunc();

        if (gprod->parsed()) {
            CyclicGroup g = group_arg(gname);
            std::vector<Subgroup> subs;
            std::string cur;
            for (char ch : orbits_csv + ",") {
                if (ch == ',') {
                    auto s = ioparse::parse_subgroup_name(g, cur);
                    require(s.has_value(), "bad orbit stabilizer '" + cur + "'");
                    subs.push_back(*s);
                    cur.clear();
                } else
                    cur += ch;
            }
            require(subs.size() == 2, "gset prod expects exactly two orbits, e.g. --orbits C2,C2");
            GSet result = orbit_product(g, subs[0], subs[1]);
            emit(opt, result.to_string() + "\n",
                 doc_of("gset-prod", gname + "|" + orbits_csv, gset_json(result)));
        } else if (gres->parsed()) {
            CyclicGroup g = group_arg(gname);
            GSet t = orbits_arg(g, orbits_csv);
            auto k = ioparse::parse_subgroup_name(g, to_name);
            require(k.has_value(), "bad subgroup '" + to_name + "'");
            GSet result = restrict_gset(g, *k, t);
            emit(opt, result.to_string() + "\n",
                 doc_of("gset-res", gname + "|" + to_name + "|" + orbits_csv,
                        gset_json(result)));
        } else if (gcoind->parsed()) {
            CyclicGroup g = group_arg(gname);
            auto h = ioparse::parse_subgroup_name(g, from_name);
            require(h.has_value(), "bad subgroup '" + from_name + "'");
            GSet t = orbits_arg(subgroup_as_group(g, *h), orbits_csv);
            GSet result = coinduce(g, *h, t);
            emit(opt, result.to_string() + "\n",
                 doc_of("gset-coind", gname + "|" + from_name + "|" + orbits_csv,
                        gset_json(result)));
        } else if (ph->parsed()) {
            auto comma = deg_csv.find(',');
            require(comma != std::string::npos, "--deg wants a,b");
            DegreeC2 d{std::stoll(deg_csv.substr(0, comma)), std::stoll(deg_csv.substr(comma + 1))};
            Coeff c = coeff_arg(coeff_name_arg);
            PointLevels v = point_homology(c, d);
            std::ostringstream os;
            std::string label;
            if (auto cone = cone_monomial_for(d); cone && !v.at_g.is_zero())
                label = " (" + cone->to_string() + ")";
            os << "level G: " << v.at_g.to_string(c) << label << "\n";
            os << "level e: " << v.at_e.to_string(c) << "\n";
            if (v.at_g == v.at_e && !v.at_g.is_zero() && v.res_iso(c)) os << "res iso\n";
            emit(opt, os.str(),
                 doc_of("point-homology", deg_csv + "|" + coeff_name_arg,
                        point_levels_json(v, c)));
        } else if (bbox->parsed()) {
            Basis r = box(load_basis(in_a), load_basis(in_b));
            emit(opt, emit_basis(r), doc_of("basis-box", in_a + "|" + in_b, basis_json(r)));
        } else if (bnorm->parsed()) {
            Basis b = load_basis(in_a);
            CyclicGroup g = group_arg(gname);
            Basis r = norm_basis(full_subgroup(b.group), g, b);
            emit(opt, emit_basis(r), doc_of("basis-norm", in_a + "|" + gname, basis_json(r)));
        } else if (bdual->parsed()) {
            Basis r = dual_basis(load_basis(in_a));
            emit(opt, emit_basis(r), doc_of("basis-dual", in_a, basis_json(r)));
        } else if (bhom->parsed()) {
            Basis b = load_basis(in_a);
            auto k = ioparse::parse_subgroup_name(b.group, stab_name);
            require(k.has_value(), "bad subgroup '" + stab_name + "'");
            MackeyTable m = builtin_mackey(b.group, mackey_name);
            PureHomology h = homology_of_pure(b, *k, k_arg, eps_arg, m);
            emit(opt, pure_homology_text(h),
                 doc_of("basis-homology",
                        in_a + "|" + stab_name + "|" + std::to_string(k_arg) + "|" +
                            std::to_string(eps_arg) + "|" + mackey_name,
                        pure_homology_json(h)));
        } else if (biso->parsed()) {
            bool iso = generalized_isotropic(load_basis(in_a));
            emit(opt, std::string(iso ? "true" : "false") + "\n",
                 doc_of("basis-isotropic", in_a, json{{"isotropic", iso}}));
        } else if (bphi->parsed()) {
            PhiBasis r = geometric_fixed_basis(load_basis(in_a));
            std::ostringstream os;
            json gens = json::array();
            for (auto& g : r.generators) {
                os << g.label << " deg " << g.degree;
                if (g.eps_flag) os << " (eps)";
                os << "\n";
                gens.push_back(
                    json{{"degree", g.degree}, {"eps", g.eps_flag}, {"label", g.label}});
            }
            emit(opt, os.str(), doc_of("basis-phi", in_a, json{{"generators", gens}}));
        } else if (pmult->parsed() || pnorm->parsed() || pconorm->parsed() || pdl->parsed() ||
                   pexpand->parsed()) {
            Coeff c = coeff_arg(pure_coeff);
            PureRingModel md = load_model(model_spec, c);
            Subgroup level = level_name == "e" ? Subgroup{1} : full_subgroup(md.group);
            std::string input = emit_model(md);
            if (pmult->parsed()) {
                Element x = parse_element(md, level, x_expr);
                Element y = parse_element(md, level, y_expr);
                Element r = lift_product(md, x, y);
                emit(opt, element_string(md, r) + "\n",
                     doc_of("pure-mult", input + "|" + x_expr + "|" + y_expr,
                            json{{"result", element_string(md, r)}}));
            } else if (pnorm->parsed()) {
                Element x = parse_element(md, Subgroup{1}, x_expr);
                Element r = norm_element(md, x);
                emit(opt, element_string(md, r) + "\n",
                     doc_of("pure-norm", input + "|" + x_expr,
                            json{{"result", element_string(md, r)}}));
            } else if (pconorm->parsed()) {
                Element x = parse_element(md, level, x_expr);
                TensorExpr r = conorm_element(
                    md, x, map_name == "fold" ? ConormTarget::Fold : ConormTarget::DiagonalFree);
                emit(opt, tensor_string(md, r) + "\n",
                     doc_of("pure-conorm", input + "|" + x_expr + "|" + map_name,
                            json{{"result", tensor_string(md, r)}}));
            } else if (pdl->parsed()) {
                Element x = parse_element(md, full_subgroup(md.group), x_expr);
                Element r = dyer_lashof(md, dl_i, dl_eps, x);
                emit(opt, element_string(md, r) + "\n",
                     doc_of("pure-dl",
                            input + "|" + std::to_string(dl_i) + "|" + std::to_string(dl_eps) +
                                "|" + x_expr,
                            json{{"result", element_string(md, r)}}));
            } else {
                guard_trunc(opt.trunc);
                Basis b = expand_basis(md, opt.trunc);
                emit(opt, basis_table_text(b),
                     doc_of("pure-expand", input + "|" + std::to_string(opt.trunc),
                            basis_json(b)));
            }
        } else if (ssbar->parsed() || sstw->parsed() || ssem->parsed()) {
            guard_trunc(opt.trunc);
            Coeff c = coeff_arg(pure_coeff);
            PureRingModel md = load_model(model_spec, c);
            std::string input = emit_model(md) + "|" + std::to_string(opt.trunc);
            if (ssbar->parsed()) {
                TorComparison tc = bar_page_for_model(md, opt.trunc);
                require(tc.match, "bar page disagrees with the exterior closed form");
                std::string text = "E2: exterior classes verified against Koszul homology\n" +
                                   tor_page_text(tc.computed);
                emit(opt, text, doc_of("ss-bar", input, tor_page_json(tc.computed)));
            } else if (sstw->parsed()) {
                TorPage p = twisted_bar_e2(md, twisted_x == "point", opt.trunc);
                std::string text = p.note + "\nground: " + p.ground + "\n" + tor_page_text(p);
                emit(opt, text, doc_of("ss-twisted", input + "|" + twisted_x, tor_page_json(p)));
            } else {
                TorComparison tc = em_e2(md, opt.trunc);
                require(tc.match, "EM page disagrees with the closed form");
                std::string text = tc.computed.note + "\n" + tor_page_text(tc.computed);
                emit(opt, text, doc_of("ss-em", input, tor_page_json(tc.computed)));
            }
        } else if (dbur->parsed() || dbbur->parsed() || dcoind->parsed() || dds->parsed()) {
            guard_trunc(opt.trunc);
            Coeff c = coeff_arg(demo_coeff);
            DemoOutput d;
            if (dbur->parsed())
                d = demo_bur(c, opt.trunc);
            else if (dbbur->parsed())
                d = demo_bbur(c, opt.trunc);
            else if (dcoind->parsed())
                d = demo_coinduced_c4(c, opt.trunc == 12 ? 6 : opt.trunc);
            else
                d = demo_dual_steenrod(opt.trunc == 12 ? 4 : opt.trunc);
            emit(opt, d.text, d.doc);
        } else if (check->parsed()) {
            std::optional<std::string> root;
            if (!no_files) root = data_dir;
            auto outcomes = run_all_checks(root);
            bool all = true;
            for (auto& o : outcomes) {
                std::cout << (o.pass ? "PASS " : "FAIL ") << o.name;
                if (!o.pass) std::cout << ": " << o.message;
                std::cout << "\n";
                all = all && o.pass;
            }
            return all ? 0 : 1;
        }
        return 0;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
