#pragma once

// Shipped models: the Real classifying space model (polynomial classes
// a_i in degree i*rho_2 with Weyl signs (-1)^i, Dyer-Lashof rows
// Q^{i rho}(a_n) = binom(n, i-n-1) a_{n+i} mod decomposables, and the
// standard polynomial coproduct), and the underlying dual Steenrod
// presentation F2[xi1] (x) E(tau0) used by the norm demos.

#include "equihom/purering.hpp"

namespace equihom {

inline long long binom_mod2(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    return ((~n & k) == 0) ? 1 : 0; // Lucas
}

/// Polynomial model on classes a_1 .. a_max_index, |a_i| = i*rho_2,
/// gamma(a_i) = (-1)^i a_i.
inline PureRingModel bur_model(Coeff coeff, int max_index = 16) {
    require(max_index >= 1 && max_index <= 64, "bur model: index range");
    PureRingModel md;
    md.name = "bur";
    md.group = cyclic(2, 1);
    md.coeff = coeff;
    for (int i = 1; i <= max_index; ++i) {
        ModelGen g;
        g.name = "a" + std::to_string(i);
        g.underlying = 2 * i;
        g.stab = Subgroup{2};
        g.cell_deg = make_reg_degree(Subgroup{2}, i, 0);
        g.sign = (i % 2) ? -1 : 1;
        md.gens.push_back(g);
    }
    // Dyer-Lashof rows: Q^{i rho}(a_n) = binom(n, i-n-1) a_{n+i} mod dec
    for (int n = 1; n <= max_index; ++n)
        for (int i = 1; n + i <= max_index; ++i) {
            long long c = binom_mod2(n, i - n - 1);
            Poly v;
            if (c) {
                Monomial m;
                m.exps[md.gen_index("a" + std::to_string(n + i))] = 1;
                v.push_back(Term{CoefMono{1, ConeMonomial{}}, m});
            }
            md.dl[{md.gen_index("a" + std::to_string(n)), i}] = v;
        }
    // coproduct psi(a_n) = sum a_t (x) a_{n-t}, a_0 = 1
    for (int n = 1; n <= max_index; ++n) {
        TensorExpr psi;
        for (int t = 0; t <= n; ++t) {
            TensorTerm tt;
            if (t > 0) tt.left.exps[md.gen_index("a" + std::to_string(t))] = 1;
            if (n - t > 0) tt.right.exps[md.gen_index("a" + std::to_string(n - t))] = 1;
            psi.push_back(tt);
        }
        md.coproduct[md.gen_index("a" + std::to_string(n))] = psi;
    }
    return md;
}

/// Underlying monomial model F2[xi1] (x) E(tau0) over the trivial group;
/// its norm to C2 is taken at the basis level.
inline PureRingModel dual_steenrod_model() {
    PureRingModel md;
    md.name = "dual-steenrod";
    md.group = cyclic(2, 0);
    md.coeff = Coeff::F2;
    ModelGen xi{"xi1", 1, Subgroup{1}, integer_degree(1), 1};
    ModelGen tau{"tau0", 1, Subgroup{1}, integer_degree(1), 1};
    md.gens = {xi, tau};
    Relation sq;
    sq.lhs.exps[1] = 2; // tau0^2 = 0
    md.relations.push_back(sq);
    return md;
}

/// The expected output presentation of the bar run: exterior-looking classes
/// y_i of degree i*rho_2 + 1 with y_i^2 = a_sigma y_{2i+1}.  Shipped for
/// cross-checking the pipeline; the demo computes it from scratch.
inline PureRingModel bbur_presentation(Coeff coeff, long long max_underlying = 12) {
    PureRingModel md;
    md.name = "bbur";
    md.group = cyclic(2, 1);
    md.coeff = coeff;
    for (int i = 1; 2 * i + 1 <= max_underlying; ++i) {
        ModelGen g;
        g.name = "y" + std::to_string(i);
        g.underlying = 2 * i + 1;
        g.stab = Subgroup{2};
        g.cell_deg = DegreeC2{i + 1, i}; // i*rho_2 + 1
        g.sign = 1;
        md.gens.push_back(g);
    }
    for (int i = 1; 2 * i + 1 <= max_underlying; ++i) {
        if (2 * (2 * i + 1) + 1 > max_underlying) break; // y_{2i+1} exists?
        Relation r;
        r.lhs.exps[md.gen_index("y" + std::to_string(i))] = 2;
        Monomial target;
        target.exps[md.gen_index("y" + std::to_string(2 * i + 1))] = 1;
        r.rhs.push_back(Term{CoefMono{1, a_sigma_class}, target});
        md.relations.push_back(r);
    }
    return md;
}

inline PureRingModel builtin_model(const std::string& name, Coeff coeff, int max_index = 16) {
    if (name == "bur") return bur_model(coeff, max_index);
    if (name == "dual-steenrod") return dual_steenrod_model();
    if (name == "bbur") return bbur_presentation(coeff);
    throw domain_error("unknown builtin model '" + name + "'");
}

} // namespace equihom
