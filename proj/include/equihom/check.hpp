#pragma once

// Self-test registry behind `equihom check`: axiom checks, oracle
// agreements, engine self-checks, and golden-file revalidation.  Exit code 0
// iff everything passes.

#include <filesystem>
#include <fstream>

#include "equihom/demos.hpp"

namespace equihom {

struct CheckOutcome {
    std::string name;
    bool pass = true;
    std::string message;
};

namespace selfcheck {

inline void check_true(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

inline void mackey_axioms() {
    for (int e = 0; e <= 3; ++e) {
        CyclicGroup g = cyclic(2, e);
        for (auto& m : {constant_mackey(g, Coeff::F2), constant_mackey(g, Coeff::Z),
                        burnside_mackey(g)}) {
            CheckReport r = check_mackey_axioms(m);
            check_true(r.pass, m.name + " over " + g.name() + ": " + r.witness);
        }
    }
    CheckReport odd = check_mackey_axioms(burnside_mackey(cyclic(3, 2)));
    check_true(odd.pass, "Burnside over C9: " + odd.witness);
}

inline void mackey_eval_axioms() {
    for (int e = 1; e <= 3; ++e) {
        CyclicGroup g = cyclic(2, e);
        GSet t{g, {}};
        for (Subgroup s : subgroups(g)) t.add_orbit(s);
        for (auto& m : {constant_mackey(g, Coeff::F2), constant_mackey(g, Coeff::Z),
                        burnside_mackey(g)}) {
            CheckReport r = check_mackey_axioms(eval_at_gset(m, t));
            check_true(r.pass, "eval of " + m.name + " at " + t.to_string() + ": " + r.witness);
        }
    }
}

inline void gset_formulas() {
    for (auto [p, emax] :
         std::vector<std::pair<int, int>>{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}}) {
        for (int e = 0; e <= emax; ++e) {
            CyclicGroup g = cyclic(p, e);
            if (g.order() > 16) continue;
            for (Subgroup h : subgroups(g))
                for (Subgroup k : subgroups(g)) {
                    GSet via_formula = orbit_product(g, h, k);
                    GSet via_points =
                        explicit_product(make_explicit(single_orbit(g, h)),
                                         make_explicit(single_orbit(g, k)))
                            .decompose();
                    check_true(via_formula == via_points,
                               "orbit_product disagrees with enumeration over " + g.name());
                    GSet res_formula = restrict_gset(g, k, single_orbit(g, h));
                    GSet res_points =
                        explicit_restrict(g, k, make_explicit(single_orbit(g, h))).decompose();
                    check_true(res_formula == res_points,
                               "restrict_gset disagrees with enumeration over " + g.name());
                }
        }
    }
}

inline void point_ring_routes() {
    for (long long a = -6; a <= 6; ++a)
        for (long long b = -6; b <= 6; ++b)
            for (Coeff c : {Coeff::F2, Coeff::Z}) {
                PointLevels r1 = point_homology(c, {a, b});
                PointLevels r2 = point_homology_dual_route(c, {a, b});
                check_true(r1.at_g == r2.at_g && r1.at_e == r2.at_e,
                           "point ring routes disagree at (" + std::to_string(a) + "," +
                               std::to_string(b) + ") over " + coeff_name(c));
            }
    for (long long i = 0; i <= 4; ++i)
        for (long long j = 0; j <= 4; ++j) {
            ConeMonomial m{i, j};
            check_true(!point_homology(Coeff::F2, m.degree()).at_g.is_zero(),
                       "positive cone class " + m.to_string() + " vanished");
        }
}

inline void koszul_engine() {
    PureRingModel bu = bur_model(Coeff::F2, 8);
    TorComparison tc = bar_page_for_model(bu, 10);
    check_true(tc.match, "Koszul homology disagrees with the exterior closed form");
    PureRingModel buz = bur_model(Coeff::Z, 8);
    TorComparison tz = bar_page_for_model(buz, 10);
    check_true(tz.match, "Koszul homology over Z disagrees with the closed form");
}

inline void bbur_pipeline() {
    PureRingModel bu = bur_model(Coeff::Z, 16);
    TorComparison bar = bar_page_for_model(bu, 12);
    check_true(bar.match, "bar page mismatch");
    CollapseResult col = collapse_and_extend(bar.computed, bu, 12);
    check_true(col.collapsed, col.diagnostic);
    PureRingModel expect = bbur_presentation(Coeff::Z, 12);
    check_true(col.presentation.gens.size() == expect.gens.size(),
               "presentation generator count mismatch");
    check_true(col.presentation.relations.size() == expect.relations.size(),
               "presentation relation count mismatch");
}

inline void norm_rule() {
    PureRingModel ds = dual_steenrod_model();
    Basis underlying = expand_basis(ds, 4);
    Basis n = norm_basis(Subgroup{1}, cyclic(2, 1), underlying); // asserts the profile rule
    long long tuples = 0;
    for (auto& c : n.cells) tuples += 2 / c.stab.order;
    long long r = static_cast<long long>(underlying.cells.size());
    check_true(tuples == r * r, "norm monomial count is not r^2");
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    check_true(static_cast<bool>(in), "cannot open " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline void golden_files(const std::filesystem::path& root) {
    // shipped models re-parse and match the builtin constructions
    for (auto [file, coeff] : std::vector<std::pair<std::string, Coeff>>{
             {"models/bur.model", Coeff::Z}, {"models/bur-f2.model", Coeff::F2}}) {
        std::string text = read_file(root / file);
        ParseResult<PureRingModel> parsed = parse_model(text);
        check_true(parsed.ok(), file + ": " +
                                    (parsed.diagnostics.empty()
                                         ? "no value"
                                         : parsed.diagnostics[0].to_string()));
        check_true(emit_model(*parsed.value) == emit_model(bur_model(coeff, 16)),
                   file + " does not match the builtin model");
        check_true(emit_model(*parsed.value) == text, file + " is not in canonical form");
    }
    std::string ds = read_file(root / "models/dual-steenrod.model");
    ParseResult<PureRingModel> pds = parse_model(ds);
    check_true(pds.ok(), "models/dual-steenrod.model failed to parse");
    check_true(emit_model(*pds.value) == emit_model(dual_steenrod_model()),
               "models/dual-steenrod.model does not match the builtin model");

    // the bbur golden text is reproduced byte for byte
    std::string golden = read_file(root / "tests/golden/bbur_z_trunc12.txt");
    check_true(demo_bbur(Coeff::Z, 12).text == golden,
               "demo bbur output differs from tests/golden/bbur_z_trunc12.txt");

    // result documents round-trip losslessly
    DemoOutput d = demo_bur(Coeff::Z, 8);
    check_true(parse_result(d.doc.dump()).to_json() == d.doc.to_json() &&
                   parse_result(d.doc.dump()).dump() == d.doc.dump(),
               "result round trip failed");
}

} // namespace selfcheck

inline std::vector<CheckOutcome> run_all_checks(const std::optional<std::string>& data_root) {
    std::vector<std::pair<std::string, std::function<void()>>> checks = {
        {"mackey-axioms", selfcheck::mackey_axioms},
        {"mackey-eval-axioms", selfcheck::mackey_eval_axioms},
        {"gset-formulas-vs-enumeration", selfcheck::gset_formulas},
        {"point-ring-dual-routes", selfcheck::point_ring_routes},
        {"koszul-closed-form", selfcheck::koszul_engine},
        {"bbur-pipeline", selfcheck::bbur_pipeline},
        {"norm-degree-rule", selfcheck::norm_rule},
    };
    if (data_root)
        checks.push_back({"golden-files", [&] { selfcheck::golden_files(*data_root); }});
    std::vector<CheckOutcome> out;
    for (auto& [name, fn] : checks) {
        CheckOutcome o;
        o.name = name;
        try {
            fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.message = e.what();
        }
        out.push_back(o);
    }
    return out;
}

} // namespace equihom
