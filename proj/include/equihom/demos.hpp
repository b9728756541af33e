#pragma once

// End-to-end demo computations, shared by the CLI and the test suites.
// Text output is deterministic; `demo bbur` is held byte-for-byte to the
// golden file in tests/golden/.

#include "equihom/result_io.hpp"

namespace equihom {

struct DemoOutput {
    std::string text;
    ResultDoc doc;
};

inline std::string demo_header(const std::string& name, Coeff coeff, long long trunc) {
    std::ostringstream os;
    os << "# equihom demo " << name << "\n";
    os << "coeff: " << coeff_name(coeff) << "\n";
    os << "truncation (underlying): " << trunc << "\n";
    return os.str();
}

/// Free basis of the Real classifying-space model up to the truncation:
/// p(n) monomials in degree n*rho[C2].
inline DemoOutput demo_bur(Coeff coeff, long long trunc) {
    PureRingModel md = bur_model(coeff, static_cast<int>(trunc / 2 < 1 ? 1 : trunc / 2));
    Basis b = expand_basis(md, trunc);
    std::ostringstream os;
    os << demo_header("bur", coeff, trunc);
    os << "basis of the polynomial model: monomials in a1..a" << md.gens.size() << "\n";
    os << basis_table_text(b);
    DemoOutput out;
    out.text = os.str();
    out.doc.kind = "demo-bur";
    out.doc.digest = digest_of(emit_model(md) + "|trunc=" + std::to_string(trunc));
    out.doc.payload = basis_json(b);
    return out;
}

/// Bar spectral sequence end to end: E2 over the polynomial model, collapse
/// certification, and the extended presentation with y_i^2 = a_s y_{2i+1}.
inline DemoOutput demo_bbur(Coeff coeff, long long trunc) {
    PureRingModel md = bur_model(coeff, 16);
    TorComparison bar = bar_page_for_model(md, trunc);
    require(bar.match, "demo bbur: Koszul homology disagrees with the exterior closed form");
    CollapseResult col = collapse_and_extend(bar.computed, md, trunc);
    require(col.collapsed, "demo bbur: " + col.diagnostic);
    col.presentation.name = "bbur";

    std::ostringstream os;
    os << demo_header("bbur", coeff, trunc);
    os << "ground ring: polynomial on a1..a" << [&] {
        int n = 0;
        for (auto& g : md.gens)
            if (g.underlying + 1 <= trunc) ++n;
        return n;
    }() << ", |a_i| = i*rho[C2]\n";
    os << "E2 = Tor over the ground ring of (H, H): exterior classes y[a_i] in bidegree "
          "(-1, i*rho[C2])\n";
    os << "engine check: Koszul homology equals the exterior closed form: ok\n";
    os << tor_page_text(bar.computed);
    os << "collapse: certified by generalized isotropy\n";
    os << "presentation:\n";
    for (const ModelGen& g : col.presentation.gens)
        os << "  gen " << g.name << " u " << g.underlying << " deg "
           << degree_to_string(g.cell_deg) << " sign " << (g.sign < 0 ? "-" : "+") << "\n";
    for (const Relation& r : col.presentation.relations)
        os << "  rel " << col.presentation.mono_string(r.lhs) << " -> "
           << poly_string(col.presentation, r.rhs) << "\n";
    os << "degrees: deg(y_i) = i*rho[C2] + 1\n";

    DemoOutput out;
    out.text = os.str();
    out.doc.kind = "demo-bbur";
    out.doc.digest = digest_of(emit_model(md) + "|trunc=" + std::to_string(trunc));
    out.doc.payload = json{{"e2", tor_page_json(bar.computed)},
                           {"presentation", presentation_json(col.presentation)}};
    return out;
}

/// Coinduced table: Map^{C2}(C4, -) of the extended presentation's basis.
inline DemoOutput demo_coinduced_c4(Coeff coeff, long long trunc) {
    // build the presentation wide enough that every relation target is
    // present, then expand only up to the requested truncation
    PureRingModel pres = bbur_presentation(coeff, 2 * trunc + 1);
    CoinducedTable table = coinduce_result(pres, cyclic(2, 2), trunc);
    std::ostringstream os;
    os << demo_header("coinduced-c4", coeff, trunc);
    os << "base: the extended presentation of the bar run, cells up to underlying " << trunc
       << "\n";
    os << coinduced_text(table);
    DemoOutput out;
    out.text = os.str();
    out.doc.kind = "demo-coinduced-c4";
    out.doc.digest = digest_of(emit_model(pres) + "|trunc=" + std::to_string(trunc));
    out.doc.payload = coinduced_json(table);
    return out;
}

/// Norm of the dual Steenrod monomial basis from e to C2, with the
/// ||f|| = (|f|/|H_f|) rho_{H_f} degree rule checked orbit by orbit.
inline DemoOutput demo_dual_steenrod(long long trunc) {
    PureRingModel ds = dual_steenrod_model();
    Basis underlying = expand_basis(ds, trunc);
    Basis normed = norm_basis(Subgroup{1}, cyclic(2, 1), underlying);
    std::ostringstream os;
    os << demo_header("dual-steenrod", Coeff::F2, trunc);
    os << "underlying monomial basis of F2[xi1] (x) E(tau0), " << underlying.cells.size()
       << " monomials\n";
    os << "norm to C2: orbits with ||f|| = (|f|/|H_f|) rho[H_f]\n";
    os << basis_table_text(normed);
    long long r = static_cast<long long>(underlying.cells.size());
    long long tuples = 0;
    for (auto& c : normed.cells) tuples += 2 / c.stab.order;
    os << "monomial count: " << tuples << " (= " << r << "^2)\n";
    DemoOutput out;
    out.text = os.str();
    out.doc.kind = "demo-dual-steenrod";
    out.doc.digest = digest_of(emit_model(ds) + "|trunc=" + std::to_string(trunc));
    out.doc.payload = basis_json(normed);
    return out;
}

} // namespace equihom
