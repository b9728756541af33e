#pragma once

// Bases of R-free spectra: indexed families of induced cells
// (label, stabilizer, degree).  Box products and norms act on the indexing
// G-sets by the orbit calculus; degrees follow by restriction/addition and,
// for norms, by the rule ||f|| = (|f|/|H_f|) rho_{H_f}, cross-checked against
// the character of the coinduced representation.

#include <algorithm>
#include <set>

#include "equihom/grading.hpp"
#include "equihom/groups.hpp"
#include "equihom/mackey.hpp"

namespace equihom {

struct Cell {
    std::string label;
    Subgroup stab;
    CellDegree degree;

    long long dim() const { return underlying_dim(degree); }
};

struct Basis {
    CyclicGroup group;
    Coeff coeff = Coeff::F2;
    std::vector<Cell> cells;
};

inline void validate_basis(const Basis& b) {
    std::set<std::string> labels;
    for (const Cell& c : b.cells) {
        require_subgroup(b.group, c.stab);
        require(labels.insert(c.label).second, "basis: duplicate label '" + c.label + "'");
        if (auto* r = std::get_if<RegDegree>(&c.degree)) {
            require(r->stab == c.stab, "basis: cell '" + c.label +
                                           "' degree stabilizer differs from cell stabilizer");
        } else {
            require(b.group.order() == 2 && c.stab.order == 2,
                    "basis: full RO(C2) degrees only exist at the top level over C2");
        }
    }
}

inline bool all_regular(const Basis& b) {
    return std::all_of(b.cells.begin(), b.cells.end(),
                       [](const Cell& c) { return is_regular(c.degree); });
}

/// Finitely many cells in each underlying dimension; trivially decidable for
/// the finite lists this module works with.
inline std::map<long long, long long> dimension_histogram(const Basis& b) {
    std::map<long long, long long> h;
    for (const Cell& c : b.cells) ++h[c.dim()];
    return h;
}

inline void sort_canonically(Basis& b) {
    std::sort(b.cells.begin(), b.cells.end(), [](const Cell& x, const Cell& y) {
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        if (x.stab.order != y.stab.order) return x.stab.order > y.stab.order;
        return x.label < y.label;
    });
}

// ---------------------------------------------------------------------------
// Characters of cell degrees (for norm-degree bookkeeping)

/// Character of the degree's representation at the group element h_0^power,
/// where h_0 generates the cell's stabilizer.
inline long long degree_character(const CellDegree& d, long long power, int stab_order) {
    power = ((power % stab_order) + stab_order) % stab_order;
    if (auto* r = std::get_if<RegDegree>(&d)) {
        long long chi = (power == 0) ? r->k * r->stab.order : 0; // regular rep
        return chi - r->eps;                                     // minus a trivial line
    }
    const DegreeC2& f = std::get<DegreeC2>(d);
    return power == 0 ? f.a + f.b : f.a - f.b;
}

// ---------------------------------------------------------------------------
// Box product

/// Restrict a cell degree to a subgroup S of its stabilizer, as RegDegree
/// when possible (always for S = e or regular input).
inline CellDegree res_cell_degree(const CyclicGroup& g, const CellDegree& d, Subgroup s) {
    if (auto* r = std::get_if<RegDegree>(&d)) return res_degree(*r, s);
    const DegreeC2& f = std::get<DegreeC2>(d);
    if (s.order == 1) return integer_degree(f.underlying_dim());
    require(g.order() == 2, "degree restriction: full degrees live over C2");
    return f;
}

inline CellDegree add_cell_degrees(const CyclicGroup& g, const CellDegree& x, const CellDegree& y) {
    if (is_regular(x) && is_regular(y)) {
        auto sum = add_reg(g, std::get<RegDegree>(x), std::get<RegDegree>(y));
        if (!sum.fell_back) return sum.reg;
        return sum.full;
    }
    // mixed/full addition only happens at the top of C2
    require(g.order() == 2, "degree addition: full degrees live over C2");
    return as_full_c2(x) + as_full_c2(y);
}

/// Basis of the smash product: cell pairs expand along the double coset
/// decomposition of the product of their orbits.
inline Basis box(const Basis& b1, const Basis& b2) {
    require(b1.group == b2.group, "box: groups differ");
    require(b1.coeff == b2.coeff, "box: coefficients differ");
    Basis out{b1.group, b1.coeff, {}};
    for (const Cell& c1 : b1.cells)
        for (const Cell& c2 : b2.cells) {
            GSet prod = orbit_product(out.group, c1.stab, c2.stab);
            for (auto& [stab_order, copies] : prod.orbits) {
                Subgroup s{stab_order};
                CellDegree d = add_cell_degrees(out.group, res_cell_degree(out.group, c1.degree, s),
                                                res_cell_degree(out.group, c2.degree, s));
                for (long long i = 0; i < copies; ++i) {
                    std::string label = c1.label + "*" + c2.label;
                    if (copies > 1) label += "@" + std::to_string(i);
                    out.cells.push_back(Cell{label, s, d});
                }
            }
        }
    sort_canonically(out);
    validate_basis(out);
    return out;
}

// ---------------------------------------------------------------------------
// Norm

struct NormOrbit {
    std::string label;        // representative tuple, point labels joined by '*'
    Subgroup stab;            // G-stabilizer
    long long total_dim = 0;  // |f|
    std::vector<long long> fixed_dims; // profile over subgroups of stab, ascending
    bool regular_form = false;
    RegDegree degree;         // (|f|/|H_f|) rho_{H_f} when regular_form
};

/// Norm of a basis along H <= G at the level of indexing data: orbits of
/// Map^H(G, cells) with total dimension, stabilizer, and the character
/// profile of the coinduced representation.
inline std::vector<NormOrbit> norm_orbits(const CyclicGroup& g, Subgroup h, const Basis& b) {
    require(b.group == subgroup_as_group(g, h), "norm: basis is not over the subgroup");
    int m = g.order() / h.order;
    require(m <= 8, "norm: index [G:H] = " + std::to_string(m) + " exceeds guard 8");

    // indexing H-set: one orbit per cell, points = (cell, coset of stab)
    struct Point {
        int cell;
        int shift; // the point gamma_H^shift . base
        std::string label;
    };
    std::vector<Point> points;
    std::vector<int> gamma_h; // H-action on points
    for (int ci = 0; ci < static_cast<int>(b.cells.size()); ++ci) {
        int orb = h.order / b.cells[ci].stab.order;
        int base = static_cast<int>(points.size());
        for (int i = 0; i < orb; ++i) {
            std::string lab = b.cells[ci].label;
            if (orb > 1) lab += "#" + std::to_string(i);
            points.push_back(Point{ci, i, lab});
            gamma_h.push_back(base + (i + 1) % orb);
        }
    }
    long long total = 1;
    for (int i = 0; i < m; ++i) {
        total *= static_cast<long long>(points.size());
        require(total <= (1 << 22), "norm: enumeration guard exceeded");
    }
    if (points.empty()) return {};

    auto decode = [&](long long code) {
        std::vector<int> tup(m);
        for (int i = 0; i < m; ++i) {
            tup[i] = static_cast<int>(code % points.size());
            code /= points.size();
        }
        return tup;
    };
    auto encode = [&](const std::vector<int>& tup) {
        long long code = 0, place = 1;
        for (int i = 0; i < m; ++i) {
            code += place * tup[i];
            place *= static_cast<long long>(points.size());
        }
        return code;
    };
    auto step = [&](const std::vector<int>& tup) {
        std::vector<int> nxt(m);
        for (int i = 0; i + 1 < m; ++i) nxt[i] = tup[i + 1];
        nxt[m - 1] = gamma_h[tup[0]];
        return nxt;
    };

    std::vector<NormOrbit> out;
    std::set<long long> seen;
    for (long long code = 0; code < total; ++code) {
        if (seen.count(code)) continue;
        // walk the orbit, remember the smallest code as representative
        std::vector<long long> orbit;
        std::vector<int> tup = decode(code);
        long long cur = code;
        do {
            orbit.push_back(cur);
            seen.insert(cur);
            tup = step(tup);
            cur = encode(tup);
        } while (cur != code);
        long long rep = *std::min_element(orbit.begin(), orbit.end());
        std::vector<int> rep_tup = decode(rep);

        NormOrbit o;
        o.stab = Subgroup{g.order() / static_cast<int>(orbit.size())};
        for (int i = 0; i < m; ++i) {
            if (i) o.label += "|";
            o.label += points[rep_tup[i]].label;
            o.total_dim += b.cells[points[rep_tup[i]].cell].dim();
        }
        // character profile: dim W^K = (1/|K|) sum over gamma^j in K of
        // chi_W(gamma^j).  A coordinate contributes only when its position is
        // fixed (m | j) and the twist gamma_H^{j/m} fixes the underlying
        // point; the trace is then the cell representation's character.
        for (int k_ord = 1; k_ord <= o.stab.order; k_ord *= g.prime) {
            long long u = g.order() / k_ord; // K = <gamma^u>
            long long chi_sum = 0;
            for (long long t = 0; t < k_ord; ++t) {
                long long j = u * t;
                if (j % m != 0) continue;
                long long q = j / m;
                for (int i = 0; i < m; ++i) {
                    const Cell& c = b.cells[points[rep_tup[i]].cell];
                    int orbit_size = h.order / c.stab.order;
                    if (q % orbit_size != 0) continue; // the point moves, no trace
                    chi_sum += degree_character(c.degree, q / orbit_size, c.stab.order);
                }
            }
            require(chi_sum % k_ord == 0, "norm: non-integral fixed dimension");
            o.fixed_dims.push_back(chi_sum / k_ord);
        }
        out.push_back(o);
    }
    std::sort(out.begin(), out.end(), [](const NormOrbit& a, const NormOrbit& b2) {
        if (a.total_dim != b2.total_dim) return a.total_dim < b2.total_dim;
        if (a.stab.order != b2.stab.order) return a.stab.order > b2.stab.order;
        return a.label < b2.label;
    });
    return out;
}

/// Norm of a basis with integer or regular degrees: each orbit f gets the
/// cell (H_f, (|f|/|H_f|) rho_{H_f}); divisibility failures signal a
/// malformed basis.  The character profile must agree with the rho-rule.
inline Basis norm_basis(Subgroup h, const CyclicGroup& g, const Basis& b) {
    for (const Cell& c : b.cells)
        require(is_regular(c.degree), "norm: cell '" + c.label + "' has a non-regular degree");
    std::vector<NormOrbit> orbits = norm_orbits(g, h, b);
    Basis out{g, b.coeff, {}};
    for (auto& o : orbits) {
        require(o.total_dim % o.stab.order == 0,
                "norm: dimension " + std::to_string(o.total_dim) + " of orbit '" + o.label +
                    "' is not divisible by |" + o.stab.name() + "|");
        RegDegree d = make_reg_degree(o.stab, o.total_dim / o.stab.order, 0);
        // the rho-rule and the character profile must agree
        int idx = 0;
        for (int k_ord = 1; k_ord <= o.stab.order; k_ord *= g.prime, ++idx)
            require(o.fixed_dims[idx] == o.total_dim / k_ord,
                    "norm: profile of orbit '" + o.label + "' is not the regular profile");
        out.cells.push_back(Cell{o.label, o.stab, d});
    }
    sort_canonically(out);
    validate_basis(out);
    return out;
}

// ---------------------------------------------------------------------------
// Duality

inline Basis dual_basis(const Basis& b) {
    Basis out{b.group, b.coeff, {}};
    for (const Cell& c : b.cells) {
        CellDegree nd;
        if (auto* r = std::get_if<RegDegree>(&c.degree)) {
            auto n = negate_reg(b.group, *r);
            if (n.fell_back)
                nd = n.full;
            else
                nd = n.reg;
        } else {
            nd = -std::get<DegreeC2>(c.degree);
        }
        std::string label = c.label;
        if (!label.empty() && label.back() == '^')
            label.pop_back(); // dual of dual restores the original label
        else
            label += "^";
        out.cells.push_back(Cell{label, c.stab, nd});
    }
    validate_basis(out);
    return out;
}

// ---------------------------------------------------------------------------
// Homology of homologically pure bases

struct PureHomology {
    CyclicGroup group;
    Coeff scalars = Coeff::Z;
    std::vector<AbGroup> levels; // by subgroup exponent, ascending
    std::vector<std::string> contributing_cells;

    bool all_zero() const {
        return std::all_of(levels.begin(), levels.end(),
                           [](const AbGroup& g) { return g.is_zero(); });
    }
};

/// H_{k rho_K - eps}(E; M) for a homologically pure basis.
///   eps = 0: cells of dimension k|K| contribute M(G/K x G/J x G/L) at level L;
///   eps = 1: cells of dimension k|K| - 1 contribute one copy of the induced
///            functor M_{G/e} per free double coset of K\G/J.
inline PureHomology homology_of_pure(const Basis& b, Subgroup k_sub, long long k, int eps,
                                     const MackeyTable& m) {
    require(eps == 0 || eps == 1, "homology_of_pure: eps must be 0 or 1");
    require(m.group == b.group, "homology_of_pure: coefficient group mismatch");
    for (const Cell& c : b.cells)
        require(is_regular(c.degree),
                "homology_of_pure: cell '" + c.label + "' has a non-regular degree");
    require_subgroup(b.group, k_sub);

    const CyclicGroup g = b.group;
    PureHomology out;
    out.group = g;
    out.scalars = m.scalars;
    out.levels.assign(g.exponent + 1, AbGroup{});

    long long target = k * k_sub.order - eps;
    for (const Cell& c : b.cells) {
        if (c.dim() != target) continue;
        if (eps == 0) {
            out.contributing_cells.push_back(c.label);
            for (int l = 0; l <= g.exponent; ++l) {
                int l_ord = 1;
                for (int i = 0; i < l; ++i) l_ord *= g.prime;
                GSet triple = gset_product(gset_product(single_orbit(g, k_sub),
                                                        single_orbit(g, c.stab)),
                                           single_orbit(g, Subgroup{l_ord}));
                out.levels[l] += mackey_value_at(m, triple);
            }
        } else {
            // free double cosets of K\G/J exist only when K n J = e
            if (std::gcd(k_sub.order, c.stab.order) != 1) continue;
            long long count = g.order() / std::lcm(k_sub.order, c.stab.order);
            out.contributing_cells.push_back(c.label);
            for (int l = 0; l <= g.exponent; ++l) {
                int l_ord = 1;
                for (int i = 0; i < l; ++i) l_ord *= g.prime;
                GSet prod = gset_product(single_orbit(g, trivial_subgroup()),
                                         single_orbit(g, Subgroup{l_ord}));
                out.levels[l] += ab_sum(mackey_value_at(m, prod), count);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generalized isotropy (the collapse certificate)

/// No pair of cells in adjacent dimensions n, n-1 whose orbit product
/// contains a free orbit.
inline bool generalized_isotropic(const Basis& b) {
    for (const Cell& c : b.cells)
        require(is_regular(c.degree),
                "generalized_isotropic: cell '" + c.label + "' has a non-regular degree");
    for (const Cell& c1 : b.cells)
        for (const Cell& c2 : b.cells) {
            if (c1.dim() != c2.dim() + 1) continue;
            GSet prod = orbit_product(b.group, c1.stab, c2.stab);
            if (prod.orbits.count(1)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Geometric fixed points

struct PhiGenerator {
    std::string label;
    long long degree = 0; // fixed dimension
    int eps_flag = 0;     // 1 when the cell degree was k rho - 1
};

struct PhiBasis {
    std::vector<PhiGenerator> generators;
};

/// Drop cells induced from the trivial group; full-stabilizer cells map to
/// their fixed dimension.
inline PhiBasis geometric_fixed_basis(const Basis& b) {
    require(b.group.order() == 2, "geometric fixed points: implemented over C2");
    PhiBasis out;
    for (const Cell& c : b.cells) {
        if (c.stab.order == 1) continue;
        PhiGenerator g;
        g.label = c.label;
        if (auto* r = std::get_if<RegDegree>(&c.degree)) {
            g.degree = r->fixed_dim();
            g.eps_flag = r->eps;
        } else {
            g.degree = std::get<DegreeC2>(c.degree).fixed_dim();
        }
        out.generators.push_back(g);
    }
    std::sort(out.generators.begin(), out.generators.end(),
              [](const PhiGenerator& a, const PhiGenerator& b2) {
                  return a.degree != b2.degree ? a.degree < b2.degree : a.label < b2.label;
              });
    return out;
}

} // namespace equihom
