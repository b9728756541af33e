#pragma once

// Homologically pure ring models.  A model is an underlying graded
// presentation (generators with Weyl signs, monomial rewrite rules) together
// with a cell rule assigning equivariant degrees to monomials.  Restriction
// to the underlying level is injective in the relevant degrees, so products,
// norms, conorms and Dyer-Lashof operations are computed underlying and
// lifted coefficient-by-coefficient.

#include <functional>
#include <map>
#include <sstream>

#include "equihom/freebasis.hpp"
#include "equihom/point_homology.hpp"

namespace equihom {

// ---------------------------------------------------------------------------
// Monomials and polynomials with point-ring coefficients

struct Monomial {
    std::map<int, long long> exps; // gen id -> exponent (> 0)

    bool is_unit() const { return exps.empty(); }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (auto& [g, e] : o.exps) r.exps[g] += e;
        return r;
    }

    bool divides(const Monomial& m) const {
        for (auto& [g, e] : exps) {
            auto it = m.exps.find(g);
            if (it == m.exps.end() || it->second < e) return false;
        }
        return true;
    }

    Monomial quotient_by(const Monomial& d) const {
        Monomial r = *this;
        for (auto& [g, e] : d.exps) {
            r.exps[g] -= e;
            if (r.exps[g] == 0) r.exps.erase(g);
        }
        return r;
    }

    bool operator<(const Monomial& o) const { return exps < o.exps; }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

struct CoefMono {
    long long n = 1;   // integer scalar (taken mod 2 for F2 models)
    ConeMonomial cone; // a_sigma^i u_sigma^j

    CoefMono operator*(const CoefMono& o) const { return CoefMono{n * o.n, cone * o.cone}; }
    bool operator==(const CoefMono& o) const { return n == o.n && cone == o.cone; }
};

struct Term {
    CoefMono c;
    Monomial m;

    bool operator==(const Term& o) const { return c == o.c && m == o.m; }
};

using Poly = std::vector<Term>;

struct TensorTerm {
    CoefMono c;
    Monomial left, right;
};

using TensorExpr = std::vector<TensorTerm>;

// ---------------------------------------------------------------------------
// The model

struct ModelGen {
    std::string name;
    long long underlying = 0;
    Subgroup stab{2};
    CellDegree cell_deg;
    int sign = 1; // Weyl action on the underlying generator
};

struct Relation {
    Monomial lhs;
    Poly rhs;
};

struct PureRingModel {
    std::string name;
    CyclicGroup group;
    Coeff coeff = Coeff::F2;
    std::vector<ModelGen> gens;
    std::vector<Relation> relations;
    std::map<std::pair<int, long long>, Poly> dl; // (gen, i) -> Q^{i rho_2}(gen) mod dec
    std::map<int, TensorExpr> coproduct;          // gen -> psi(gen)

    int gen_index(const std::string& n) const {
        for (size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == n) return static_cast<int>(i);
        throw domain_error("model '" + name + "': unknown generator '" + n + "'");
    }

    long long mono_dim(const Monomial& m) const {
        long long d = 0;
        for (auto& [g, e] : m.exps) d += e * gens[g].underlying;
        return d;
    }

    Subgroup mono_stab(const Monomial& m) const {
        Subgroup s = full_subgroup(group);
        for (auto& [g, e] : m.exps) {
            (void)e;
            s = meet(s, gens[g].stab);
        }
        return s;
    }

    CellDegree mono_degree(const Monomial& m) const {
        Subgroup s = mono_stab(m);
        CellDegree d = make_reg_degree(s, 0, 0);
        for (auto& [g, e] : m.exps)
            for (long long i = 0; i < e; ++i)
                d = add_cell_degrees(group, d, res_cell_degree(group, gens[g].cell_deg, s));
        return d;
    }

    int mono_sign(const Monomial& m) const {
        int s = 1;
        for (auto& [g, e] : m.exps)
            if (gens[g].sign < 0 && (e % 2)) s = -s;
        return s;
    }

    std::string mono_string(const Monomial& m) const {
        if (m.is_unit()) return "1";
        std::string s;
        for (auto& [g, e] : m.exps) {
            if (!s.empty()) s += "*";
            s += gens[g].name;
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// Normalization (rewriting + collection)

inline long long normalize_scalar(const PureRingModel& md, long long n) {
    if (md.coeff == Coeff::F2) return ((n % 2) + 2) % 2;
    return n;
}

inline Poly collect(const PureRingModel& md, const Poly& p) {
    std::map<std::pair<ConeMonomial, Monomial>, long long> acc;
    for (const Term& t : p) acc[{t.c.cone, t.m}] += t.c.n;
    Poly out;
    for (auto& [key, n] : acc) {
        long long v = normalize_scalar(md, n);
        if (v != 0) out.push_back(Term{CoefMono{v, key.first}, key.second});
    }
    return out;
}

/// Apply the rewrite rules until every monomial is reduced.
inline Poly rewrite(const PureRingModel& md, Poly p) {
    int fuel = 100000;
    bool changed = true;
    while (changed) {
        changed = false;
        Poly next;
        for (const Term& t : p) {
            const Relation* hit = nullptr;
            for (const Relation& r : md.relations)
                if (r.lhs.divides(t.m)) { hit = &r; break; }
            if (!hit) {
                next.push_back(t);
                continue;
            }
            require(--fuel > 0, "model '" + md.name + "': rewriting does not terminate");
            changed = true;
            Monomial q = t.m.quotient_by(hit->lhs);
            for (const Term& rt : hit->rhs)
                next.push_back(Term{t.c * rt.c, rt.m * q});
        }
        p = collect(md, next);
    }
    return p;
}

inline bool mono_reduced(const PureRingModel& md, const Monomial& m) {
    for (const Relation& r : md.relations)
        if (r.lhs.divides(m)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Elements

struct Element {
    Subgroup level{2}; // full subgroup, or e for underlying elements
    Poly terms;
    bool mod_decomposables = false;

    bool is_zero() const { return terms.empty(); }
};

/// Evaluate point-ring coefficients at the underlying level: a_sigma -> 0,
/// u_sigma -> 1.
inline Poly restrict_coeffs(const PureRingModel& md, const Poly& p) {
    Poly out;
    for (const Term& t : p) {
        if (t.c.cone.a_exp > 0) continue;
        out.push_back(Term{CoefMono{t.c.n, ConeMonomial{}}, t.m});
    }
    return collect(md, out);
}

inline Element restrict_element(const PureRingModel& md, const Element& x) {
    require(x.level.order == md.group.order(), "restrict: element is not at the full level");
    Element out;
    out.level = trivial_subgroup();
    out.terms = restrict_coeffs(md, x.terms);
    out.mod_decomposables = x.mod_decomposables;
    return out;
}

inline void check_z_cone(const PureRingModel& md, const Poly& p) {
    if (md.coeff == Coeff::F2) return;
    for (const Term& t : p)
        require(t.c.cone.u_exp == 0,
                "model '" + md.name + "': u_sigma coefficients are outside the supported cone "
                "for Z models (scalars and a_sigma powers only)");
}

/// Common degree of a homogeneous polynomial (coefficient degree included).
inline std::optional<DegreeC2> poly_degree_c2(const PureRingModel& md, const Poly& p) {
    std::optional<DegreeC2> deg;
    for (const Term& t : p) {
        DegreeC2 d = t.c.cone.degree();
        CellDegree cd = md.mono_degree(t.m);
        if (md.group.order() == 2 && md.mono_stab(t.m).order == 2)
            d = d + as_full_c2(cd);
        else
            d = d + DegreeC2{underlying_dim(cd), 0}; // integer-degree bookkeeping
        if (!deg)
            deg = d;
        else if (!(*deg == d))
            return std::nullopt;
    }
    return deg ? deg : std::optional<DegreeC2>(DegreeC2{0, 0});
}

inline Element make_element(const PureRingModel& md, Subgroup level, Poly terms,
                            bool mod_dec = false) {
    Element e;
    e.level = level;
    e.terms = rewrite(md, collect(md, std::move(terms)));
    if (level.order == 1) e.terms = restrict_coeffs(md, e.terms);
    check_z_cone(md, e.terms);
    e.mod_decomposables = mod_dec;
    require(poly_degree_c2(md, e.terms).has_value(),
            "element is not homogeneous in one RO-degree");
    return e;
}

/// The multiplication of the Green functor lift: multiply underlying images
/// with the rewrite system and lift coefficient-wise (unique because all
/// restriction maps are injections in regular degrees).
inline Element lift_product(const PureRingModel& md, const Element& x, const Element& y) {
    require(x.level == y.level, "lift_product: elements live at different levels");
    Poly prod;
    for (const Term& tx : x.terms)
        for (const Term& ty : y.terms) prod.push_back(Term{tx.c * ty.c, tx.m * ty.m});
    return make_element(md, x.level, std::move(prod),
                        x.mod_decomposables || y.mod_decomposables);
}

/// N_e^G for G = C2: the conjugate product Prod_gamma gamma(x) computed with
/// the Weyl signs, then lifted to the unique full-level element restricting
/// to it.
inline Element norm_element(const PureRingModel& md, const Element& x) {
    require(md.group.order() == 2, "norm_element: implemented for G = C2");
    require(x.level.order == 1, "norm_element: input must be an underlying element");
    require(!x.mod_decomposables, "norm_element: input is only defined mod decomposables");

    // gamma(x): apply Weyl signs to each monomial
    Poly gx;
    for (const Term& t : x.terms)
        gx.push_back(Term{CoefMono{t.c.n * md.mono_sign(t.m), t.c.cone}, t.m});
    Poly prod;
    for (const Term& tx : x.terms)
        for (const Term& tg : gx) prod.push_back(Term{tx.c * tg.c, tx.m * tg.m});
    Poly underlying = restrict_coeffs(md, rewrite(md, collect(md, std::move(prod))));

    // target degree: an underlying class of degree d norms into d * rho_2
    long long d = 0;
    if (!x.terms.empty()) {
        auto deg = poly_degree_c2(md, x.terms);
        require(deg.has_value(), "norm_element: input is not homogeneous");
        d = deg->underlying_dim();
    }
    DegreeC2 target = to_full_c2(RegDegree{Subgroup{2}, d, 0});

    // lift monomial-by-monomial; u_sigma powers repair fixed-dimension drift
    Poly lifted;
    for (const Term& t : underlying) {
        DegreeC2 got = as_full_c2(md.mono_degree(t.m));
        CoefMono c{t.c.n, ConeMonomial{}};
        if (!(got == target)) {
            DegreeC2 diff{target.a - got.a, target.b - got.b};
            if (diff.a >= 0 && diff.a + diff.b == 0 && md.coeff == Coeff::F2) {
                c.cone = ConeMonomial{0, diff.a};
            } else {
                std::ostringstream os;
                os << "norm_element: underlying value has a term of degree " << got.to_string()
                   << " that does not lift to " << target.to_string() << " (term "
                   << md.mono_string(t.m) << ")";
                throw domain_error(os.str());
            }
        }
        lifted.push_back(Term{c, t.m});
    }
    return make_element(md, full_subgroup(md.group), std::move(lifted));
}

// ---------------------------------------------------------------------------
// Conorm / coproduct

enum class ConormTarget {
    Fold,        // the coproduct, along the fold map
    DiagonalFree // the conorm to Map(G/e, X): twisted tensor of conjugates
};

inline TensorExpr coproduct_of_monomial(const PureRingModel& md, const Monomial& m) {
    TensorExpr acc{TensorTerm{CoefMono{}, Monomial{}, Monomial{}}};
    for (auto& [g, e] : m.exps) {
        auto it = md.coproduct.find(g);
        require(it != md.coproduct.end(), "model '" + md.name +
                                              "': no coproduct row for generator '" +
                                              md.gens[g].name + "'");
        for (long long i = 0; i < e; ++i) {
            TensorExpr next;
            for (const TensorTerm& a : acc)
                for (const TensorTerm& b : it->second)
                    next.push_back(TensorTerm{a.c * b.c, a.left * b.left, a.right * b.right});
            acc = std::move(next);
        }
    }
    return acc;
}

inline TensorExpr collect_tensor(const PureRingModel& md, const TensorExpr& t) {
    std::map<std::tuple<ConeMonomial, Monomial, Monomial>, long long> accum;
    for (const TensorTerm& tt : t) accum[{tt.c.cone, tt.left, tt.right}] += tt.c.n;
    TensorExpr out;
    for (auto& [key, n] : accum) {
        long long v = normalize_scalar(md, n);
        if (v)
            out.push_back(
                TensorTerm{CoefMono{v, std::get<0>(key)}, std::get<1>(key), std::get<2>(key)});
    }
    return out;
}

/// Conorm maps read off the underlying coproduct table.  Fold gives the
/// untwisted coproduct; the conorm along the diagonal to Map(C2, X) twists
/// the second tensor factor by the Weyl action.
inline TensorExpr conorm_element(const PureRingModel& md, const Element& x, ConormTarget target) {
    require(!x.mod_decomposables, "conorm: input is only defined mod decomposables");
    TensorExpr out;
    for (const Term& t : x.terms) {
        TensorExpr psi = coproduct_of_monomial(md, t.m);
        for (TensorTerm tt : psi) {
            tt.c = tt.c * t.c;
            if (target == ConormTarget::DiagonalFree)
                tt.c.n *= md.mono_sign(tt.right); // gamma on the second factor
            out.push_back(tt);
        }
    }
    return collect_tensor(md, out);
}

// ---------------------------------------------------------------------------
// Dyer-Lashof operations

/// Q^{i rho_2 - eps}.  eps = 0 on a class of degree i rho_2 is the square;
/// on generators it is the model's table, mod decomposables.  eps = 1
/// vanishes for isotropic models (the odd operations land in cells induced
/// from the trivial group, and there are none).
inline Element dyer_lashof(const PureRingModel& md, long long i, int eps, const Element& x) {
    require(md.coeff == Coeff::F2, "dyer_lashof: F2 models only");
    require(!md.dl.empty(), "model '" + md.name + "': no Dyer-Lashof table");
    require(eps == 0 || eps == 1, "dyer_lashof: eps must be 0 or 1");
    require(x.level.order == md.group.order(), "dyer_lashof: element must be at the full level");

    if (eps == 1) {
        for (const ModelGen& g : md.gens)
            require(g.stab.order == md.group.order(),
                    "dyer_lashof: eps = 1 vanishing needs an isotropic model");
        return Element{x.level, {}, false};
    }
    if (x.is_zero()) return Element{x.level, {}, x.mod_decomposables};

    auto deg = poly_degree_c2(md, x.terms);
    require(deg.has_value(), "dyer_lashof: input is not homogeneous");
    DegreeC2 irho = to_full_c2(RegDegree{Subgroup{2}, i, 0});
    if (*deg == irho) return lift_product(md, x, x); // the square, exactly

    require(x.terms.size() == 1 && x.terms[0].c.n == 1 && x.terms[0].c.cone.is_one(),
            "dyer_lashof: away from the square degree, inputs must be basis monomials");
    const Monomial& m = x.terms[0].m;
    require(m.exps.size() == 1 && m.exps.begin()->second == 1,
            "dyer_lashof: decomposable input without Cartan data");
    int gen = m.exps.begin()->first;
    auto it = md.dl.find({gen, i});
    require(it != md.dl.end(), "model '" + md.name + "': no DL row for Q^{" +
                                   std::to_string(i) + " rho}(" + md.gens[gen].name + ")");
    return make_element(md, x.level, it->second, /*mod_dec=*/true);
}

// ---------------------------------------------------------------------------
// Basis expansion

/// All rewrite-reduced monic monomials up to the underlying-degree bound.
/// Divisibility is monotone, so nothing reduced extends a reducible word.
inline std::vector<Monomial> reduced_monomials(const PureRingModel& md, long long max_underlying) {
    std::vector<Monomial> out;
    std::function<void(Monomial, int, long long)> walk = [&](Monomial m, int from,
                                                             long long dim) {
        if (!mono_reduced(md, m)) return;
        out.push_back(m);
        for (int g = from; g < static_cast<int>(md.gens.size()); ++g) {
            long long nd = dim + md.gens[g].underlying;
            if (md.gens[g].underlying <= 0 || nd > max_underlying) continue;
            Monomial next = m;
            next.exps[g] += 1;
            walk(next, g, nd);
        }
    };
    walk(Monomial{}, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/// The reduced monomials as cells with the model's cell rule.
inline Basis expand_basis(const PureRingModel& md, long long max_underlying) {
    Basis out{md.group, md.coeff, {}};
    for (const Monomial& m : reduced_monomials(md, max_underlying))
        out.cells.push_back(Cell{md.mono_string(m), md.mono_stab(m), md.mono_degree(m)});
    sort_canonically(out);
    validate_basis(out);
    return out;
}

// ---------------------------------------------------------------------------
// Printing / parsing of elements

inline std::string scaled_string(const PureRingModel& md, const CoefMono& c,
                                 const std::string& mono) {
    long long n = normalize_scalar(md, c.n);
    std::string prefix;
    if (n < 0) {
        prefix = "-";
        n = -n;
    }
    std::vector<std::string> parts;
    if (n != 1) parts.push_back(std::to_string(n));
    if (!c.cone.is_one()) parts.push_back(c.cone.to_string());
    if (mono != "1") parts.push_back(mono);
    if (parts.empty()) parts.push_back("1");
    std::string s = prefix;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += "*";
        s += parts[i];
    }
    return s;
}

inline std::string poly_string(const PureRingModel& md, const Poly& p) {
    if (p.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += " + ";
        s += scaled_string(md, p[i].c, md.mono_string(p[i].m));
    }
    return s;
}

inline std::string element_string(const PureRingModel& md, const Element& e) {
    std::string s = poly_string(md, e.terms);
    if (e.mod_decomposables) s += "  (mod decomposables)";
    return s;
}

inline std::string tensor_string(const PureRingModel& md, const TensorExpr& t) {
    if (t.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += " + ";
        std::string pair = md.mono_string(t[i].left) + " (x) " + md.mono_string(t[i].right);
        s += scaled_string(md, t[i].c, pair);
    }
    return s;
}

} // namespace equihom
