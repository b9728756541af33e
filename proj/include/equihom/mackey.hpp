#pragma once

// Mackey functor tables for cyclic p-groups.  A table stores one finitely
// generated level per subgroup (free over Z, or an F2 vector space), the
// adjacent restriction/transfer matrices, and the Weyl (generator) action at
// each level.  Arbitrary composites are built from the adjacent maps, and the
// double coset formula is a checkable property, not an assumption.

#include <string>
#include <vector>

#include "equihom/groups.hpp"
#include "equihom/linalg.hpp"

namespace equihom {

struct MackeyTable {
    CyclicGroup group;
    Coeff scalars = Coeff::Z;
    std::string name;
    std::vector<int> level_dim; // index = subgroup exponent, 0..group.exponent
    std::vector<Mat> res;       // res[i] : level i+1 -> level i
    std::vector<Mat> tr;        // tr[i]  : level i   -> level i+1
    std::vector<Mat> weyl;      // weyl[i]: level i   -> level i

    int levels() const { return group.exponent + 1; }

    int exponent_of(Subgroup h) const {
        int e = 0, o = 1;
        while (o < h.order) { o *= group.prime; ++e; }
        require(o == h.order, "mackey: not a subgroup order");
        return e;
    }

    AbGroup level_group(int exponent) const {
        AbGroup g;
        if (scalars == Coeff::F2)
            g.torsion.assign(level_dim[exponent], 2);
        else
            g.rank = level_dim[exponent];
        return g;
    }

    Mat res_composite(int from_exp, int to_exp) const {
        require(to_exp <= from_exp, "mackey: res goes downward");
        Mat m = Mat::identity(level_dim[from_exp]);
        for (int i = from_exp - 1; i >= to_exp; --i) m = res[i] * m;
        return maybe_mod(m);
    }

    Mat tr_composite(int from_exp, int to_exp) const {
        require(from_exp <= to_exp, "mackey: tr goes upward");
        Mat m = Mat::identity(level_dim[from_exp]);
        for (int i = from_exp; i < to_exp; ++i) m = tr[i] * m;
        return maybe_mod(m);
    }

    Mat weyl_power(int exponent, long long c) const {
        long long order = 1;
        for (int i = exponent; i < group.exponent; ++i) order *= group.prime;
        c = ((c % order) + order) % order;
        Mat m = Mat::identity(level_dim[exponent]);
        for (long long i = 0; i < c; ++i) m = weyl[exponent] * m;
        return maybe_mod(m);
    }

    Mat maybe_mod(const Mat& m) const { return scalars == Coeff::F2 ? m.mod(2) : m; }

    bool mats_equal(const Mat& a, const Mat& b) const {
        if (scalars == Coeff::F2) return a.mod(2) == b.mod(2);
        return a == b;
    }
};

// ---------------------------------------------------------------------------
// Built-in tables

/// Constant Mackey functor: restrictions identity, transfers multiply by the
/// index.  `scalars` picks F2 or Z.
inline MackeyTable constant_mackey(const CyclicGroup& g, Coeff scalars) {
    MackeyTable m;
    m.group = g;
    m.scalars = scalars;
    m.name = scalars == Coeff::F2 ? "constant F2" : "constant Z";
    m.level_dim.assign(g.exponent + 1, 1);
    for (int i = 0; i < g.exponent; ++i) {
        m.res.push_back(Mat::identity(1));
        m.tr.push_back(Mat::scalar(1, g.prime));
        m.weyl.push_back(Mat::identity(1));
    }
    m.weyl.push_back(Mat::identity(1));
    if (scalars == Coeff::F2)
        for (auto& t : m.tr) t = t.mod(2);
    return m;
}

/// Burnside ring Mackey functor A: level H_k is free on the orbits [H_k/H_j],
/// j <= k;  restriction decomposes orbits, transfer induces them up.
inline MackeyTable burnside_mackey(const CyclicGroup& g) {
    MackeyTable m;
    m.group = g;
    m.scalars = Coeff::Z;
    m.name = "Burnside A";
    for (int k = 0; k <= g.exponent; ++k) m.level_dim.push_back(k + 1);
    for (int k = 0; k < g.exponent; ++k) {
        Mat r(k + 1, k + 2); // level k+1 -> level k
        for (int j = 0; j <= k; ++j) r.at(j, j) = g.prime; // [H_{k+1}/H_j] -> p [H_k/H_j]
        r.at(k, k + 1) = 1;                                // [H_{k+1}/H_{k+1}] -> [H_k/H_k]
        m.res.push_back(r);
        Mat t(k + 2, k + 1);
        for (int j = 0; j <= k; ++j) t.at(j, j) = 1; // [H_k/H_j] -> [H_{k+1}/H_j]
        m.tr.push_back(t);
        m.weyl.push_back(Mat::identity(k + 1));
    }
    m.weyl.push_back(Mat::identity(g.exponent + 1));
    return m;
}

inline MackeyTable builtin_mackey(const CyclicGroup& g, const std::string& name) {
    if (name == "f2") return constant_mackey(g, Coeff::F2);
    if (name == "z") return constant_mackey(g, Coeff::Z);
    if (name == "burnside" || name == "a") return burnside_mackey(g);
    throw domain_error("unknown coefficient table '" + name + "' (want f2|z|burnside)");
}

// ---------------------------------------------------------------------------
// Axioms

struct CheckReport {
    bool pass = true;
    std::string witness;

    void fail(const std::string& w) {
        if (pass) witness = w;
        pass = false;
    }
};

/// Verify Weyl periodicity, naturality of res/tr under the Weyl action, and
/// every composite res o tr against the double coset formula.
inline CheckReport check_mackey_axioms(const MackeyTable& m) {
    CheckReport rep;
    const int n = m.group.exponent;
    // Weyl action at the top level is trivial, and has order [G:H] below
    if (!m.mats_equal(m.weyl[n], Mat::identity(m.level_dim[n])))
        rep.fail("weyl action at the top level is not the identity");
    for (int i = 0; i <= n; ++i) {
        long long ord = 1;
        for (int j = i; j < n; ++j) ord *= m.group.prime;
        if (!m.mats_equal(m.weyl_power(i, ord), Mat::identity(m.level_dim[i])))
            rep.fail("weyl action at level " + std::to_string(i) + " has wrong order");
    }
    for (int i = 0; i < n; ++i) {
        if (!m.mats_equal(m.maybe_mod(m.res[i] * m.weyl[i + 1]), m.maybe_mod(m.weyl[i] * m.res[i])))
            rep.fail("res does not commute with weyl at level " + std::to_string(i));
        if (!m.mats_equal(m.maybe_mod(m.tr[i] * m.weyl[i]), m.maybe_mod(m.weyl[i + 1] * m.tr[i])))
            rep.fail("tr does not commute with weyl at level " + std::to_string(i));
    }
    // double coset formula inside every ambient subgroup H_h:
    //   res^h_a tr^h_b = sum_{i<d} tr^a_c weyl_c^{[G:H_h] i} res^b_c,
    //   c = min(a,b), d = p^(h - max(a,b)).
    for (int h = 0; h <= n; ++h)
        for (int a = 0; a <= h; ++a)
            for (int b = 0; b <= h; ++b) {
                Mat lhs = m.maybe_mod(m.res_composite(h, a) * m.tr_composite(b, h));
                int c = std::min(a, b);
                long long d = 1;
                for (int i = std::max(a, b); i < h; ++i) d *= m.group.prime;
                long long gh_index = 1;
                for (int i = h; i < n; ++i) gh_index *= m.group.prime;
                Mat rhs(m.level_dim[a], m.level_dim[b]);
                for (long long i = 0; i < d; ++i) {
                    Mat term = m.tr_composite(c, a) * m.weyl_power(c, gh_index * i) *
                               m.res_composite(b, c);
                    rhs = rhs + term;
                }
                if (!m.mats_equal(lhs, m.maybe_mod(rhs)))
                    rep.fail("double coset formula fails at (H=" + std::to_string(h) +
                             ", K=" + std::to_string(a) + ", J=" + std::to_string(b) + ")");
            }
    return rep;
}

// ---------------------------------------------------------------------------
// Evaluation at a finite G-set: M_T = M(T x -), with induced res/tr/weyl.

namespace detail {

struct OrbitIndex {
    std::vector<int> reps;        // orbit representatives (point ids)
    std::vector<int> stab_exp;    // per orbit
    std::vector<int> offset;      // block offset into the level
    std::vector<int> orbit_of;    // point -> orbit number
    std::vector<long long> shift; // point -> c with point = gamma^c . rep
    int dim = 0;
};

inline OrbitIndex index_orbits(const ExplicitGSet& x, const MackeyTable& m) {
    OrbitIndex oi;
    oi.orbit_of.assign(x.size(), -1);
    oi.shift.assign(x.size(), 0);
    for (int p = 0; p < x.size(); ++p) {
        if (oi.orbit_of[p] >= 0) continue;
        int id = static_cast<int>(oi.reps.size());
        oi.reps.push_back(p);
        long long c = 0;
        int q = p;
        while (oi.orbit_of[q] < 0) {
            oi.orbit_of[q] = id;
            oi.shift[q] = c;
            q = x.gamma[q];
            ++c;
        }
        int orbit_size = static_cast<int>(c);
        int stab_order = x.group.order() / orbit_size;
        oi.stab_exp.push_back(m.exponent_of(Subgroup{stab_order}));
        oi.offset.push_back(oi.dim);
        oi.dim += m.level_dim[oi.stab_exp.back()];
    }
    return oi;
}

inline void add_block(Mat& dst, int roff, int coff, const Mat& blk) {
    for (int i = 0; i < blk.rows; ++i)
        for (int j = 0; j < blk.cols; ++j) dst.at(roff + i, coff + j) += blk.at(i, j);
}

} // namespace detail

/// M evaluated at T: level at G/L is M(T x G/L).  The induced restrictions,
/// transfers and Weyl actions come from the explicit orbit matching of
/// T x G/L over the projections T x G/K -> T x G/L and the translation maps.
inline MackeyTable eval_at_gset(const MackeyTable& m, const GSet& t) {
    require(t.group == m.group, "eval_at_gset: group mismatch");
    const CyclicGroup g = m.group;
    const int n = g.exponent;

    ExplicitGSet te = make_explicit(t);
    std::vector<ExplicitGSet> x;     // T x G/H_l per level
    std::vector<detail::OrbitIndex> oi;
    std::vector<int> coset_count;    // [G : H_l]
    for (int l = 0; l <= n; ++l) {
        int ord = 1;
        for (int i = 0; i < l; ++i) ord *= g.prime;
        GSet orb = single_orbit(g, Subgroup{ord});
        ExplicitGSet prod = explicit_product(te, make_explicit(orb));
        x.push_back(prod);
        oi.push_back(detail::index_orbits(prod, m));
        coset_count.push_back(g.order() / ord);
    }

    MackeyTable out;
    out.group = g;
    out.scalars = m.scalars;
    out.name = m.name + " @ " + t.to_string();
    for (int l = 0; l <= n; ++l) out.level_dim.push_back(oi[l].dim);

    // locate (orbit, shift) of a point in level l
    auto locate = [&](int l, int point) {
        return std::pair<int, long long>(oi[l].orbit_of[point], oi[l].shift[point]);
    };

    // res[l] : level l+1 -> level l along T x G/H_l -> T x G/H_{l+1}
    for (int l = 0; l < n; ++l) {
        Mat r(oi[l].dim, oi[l + 1].dim);
        Mat tmat(oi[l + 1].dim, oi[l].dim);
        int nb_l = coset_count[l];
        int nb_u = coset_count[l + 1];
        for (size_t o = 0; o < oi[l].reps.size(); ++o) {
            int p = oi[l].reps[o];
            int tpt = p / nb_l, cos = p % nb_l;
            int image = tpt * nb_u + (cos % nb_u);
            auto [o2, c] = locate(l + 1, image);
            int se_src = oi[l + 1].stab_exp[o2]; // stabilizer of the target orbit
            int se_dst = oi[l].stab_exp[o];
            // contravariant: res_{S2 -> S1} o weyl_{S2}^c
            Mat blk = m.res_composite(se_src, se_dst) * m.weyl_power(se_src, c);
            detail::add_block(r, oi[l].offset[o], oi[l + 1].offset[o2], m.maybe_mod(blk));
            // covariant mate: weyl_{S2}^{-c} o tr_{S1 -> S2}
            Mat tb = m.weyl_power(se_src, -c) * m.tr_composite(se_dst, se_src);
            detail::add_block(tmat, oi[l + 1].offset[o2], oi[l].offset[o], m.maybe_mod(tb));
        }
        out.res.push_back(out.maybe_mod(r));
        out.tr.push_back(out.maybe_mod(tmat));
    }

    // weyl at level l: translation (t, j) -> (t, j+1) on the coset factor
    for (int l = 0; l <= n; ++l) {
        Mat w(oi[l].dim, oi[l].dim);
        int nb = coset_count[l];
        for (size_t o = 0; o < oi[l].reps.size(); ++o) {
            int p = oi[l].reps[o];
            int tpt = p / nb, cos = p % nb;
            int image = tpt * nb + (cos + 1) % nb;
            auto [o2, c] = locate(l, image);
            Mat blk = m.weyl_power(oi[l].stab_exp[o2], c); // same stabilizer level
            detail::add_block(w, oi[l].offset[o], oi[l].offset[o2], m.maybe_mod(blk));
        }
        out.weyl.push_back(out.maybe_mod(w));
    }
    return out;
}

/// The value M(T) as a plain abelian group (level of the full subgroup of T's
/// own group): direct sum of M-levels over the orbits of T.
inline AbGroup mackey_value_at(const MackeyTable& m, const GSet& t) {
    // T may live over a subgroup of m.group; each orbit K/J contributes M(G/J)
    AbGroup out;
    for (auto& [stab, mult] : t.orbits) {
        int e = m.exponent_of(Subgroup{stab});
        out += ab_sum(m.level_group(e), mult);
    }
    return out;
}

} // namespace equihom
