#pragma once

// Virtual-representation degrees.  Two encodings:
//   DegreeC2   a + b*sigma, full RO(C2) (ambient group C2 only);
//   RegDegree  k*rho_H - eps with eps in {0,1} (any cyclic group; at H = e
//              this is just the integer k, and eps is normalized away).

#include <string>
#include <variant>

#include "equihom/groups.hpp"

namespace equihom {

struct DegreeC2 {
    long long a = 0; // multiplicity of the trivial representation
    long long b = 0; // multiplicity of sigma

    long long underlying_dim() const { return a + b; }
    long long fixed_dim() const { return a; }

    DegreeC2 operator+(const DegreeC2& o) const { return {a + o.a, b + o.b}; }
    DegreeC2 operator-() const { return {-a, -b}; }
    bool operator==(const DegreeC2& o) const { return a == o.a && b == o.b; }
    bool operator<(const DegreeC2& o) const { return a != o.a ? a < o.a : b < o.b; }

    std::string to_string() const {
        std::string s = std::to_string(a);
        s += (b < 0 ? "-" : "+");
        s += std::to_string(b < 0 ? -b : b) + "*s";
        return s;
    }
};

struct RegDegree {
    Subgroup stab;   // H
    long long k = 0; // multiple of rho_H
    int eps = 0;     // 0 or 1

    long long underlying_dim() const { return k * stab.order - eps; }

    /// Dimension of the H-fixed part (one trivial summand per rho_H, minus eps).
    long long fixed_dim() const { return k - eps; }

    bool operator==(const RegDegree& o) const {
        return stab == o.stab && k == o.k && eps == o.eps;
    }

    std::string to_string() const {
        if (stab.order == 1) return std::to_string(k);
        std::string s = std::to_string(k) + "*rho[" + stab.name() + "]";
        if (eps) s += "-1";
        return s;
    }
};

/// Normalize: at H = e the regular representation is the trivial line, so
/// k*rho_e - eps is the integer k - eps.
inline RegDegree make_reg_degree(Subgroup stab, long long k, int eps) {
    require(eps == 0 || eps == 1, "degree: eps must be 0 or 1");
    if (stab.order == 1) return RegDegree{stab, k - eps, 0};
    return RegDegree{stab, k, eps};
}

inline RegDegree integer_degree(long long n) { return RegDegree{trivial_subgroup(), n, 0}; }

/// k*rho_H restricted to K <= H is k*[H:K]*rho_K.
inline RegDegree res_degree(const RegDegree& d, Subgroup k) {
    require_contained(k, d.stab);
    long long idx = d.stab.order / k.order;
    return make_reg_degree(k, d.k * idx, d.eps);
}

/// rho_2 = 1 + sigma, so k*rho_2 - eps = (k - eps) + k*sigma.
inline DegreeC2 to_full_c2(const RegDegree& d) {
    require(d.stab.order == 2, "to_full_c2: stabilizer must be C2");
    return DegreeC2{d.k - d.eps, d.k};
}

inline DegreeC2 res_full_c2_to_e(const DegreeC2& d) {
    return d; // callers want the underlying integer; see underlying_dim()
}

struct RegAddResult {
    bool ok = false;
    bool fell_back = false; // result left RegDegree form, DegreeC2 returned
    RegDegree reg;
    DegreeC2 full;
};

/// Add two regular degrees over the same stabilizer.  When the eps-sum
/// overflows {0,1} the sum can only be expressed in full RO(C2) (stabilizer
/// C2 in ambient C2); anywhere else it is an error.
inline RegAddResult add_reg(const CyclicGroup& ambient, const RegDegree& x, const RegDegree& y) {
    require(x.stab == y.stab, "degree add: stabilizers differ");
    RegAddResult out;
    int eps_sum = x.eps + y.eps;
    if (x.stab.order == 1 || eps_sum <= 1) {
        out.ok = true;
        out.reg = make_reg_degree(x.stab, x.k + y.k, x.stab.order == 1 ? 0 : eps_sum);
        if (x.stab.order == 1) out.reg = integer_degree(x.underlying_dim() + y.underlying_dim());
        return out;
    }
    if (ambient.order() == 2 && x.stab.order == 2) {
        out.ok = true;
        out.fell_back = true;
        out.full = to_full_c2(x) + to_full_c2(y);
        return out;
    }
    throw domain_error("degree add: eps overflow outside C2");
}

struct RegNegateResult {
    bool fell_back = false;
    RegDegree reg;
    DegreeC2 full;
};

inline RegNegateResult negate_reg(const CyclicGroup& ambient, const RegDegree& d) {
    RegNegateResult out;
    if (d.eps == 0 || d.stab.order == 1) {
        out.reg = make_reg_degree(d.stab, -d.k, d.eps);
        return out;
    }
    if (ambient.order() == 2 && d.stab.order == 2) {
        out.fell_back = true;
        out.full = -to_full_c2(d);
        return out;
    }
    throw domain_error("degree negate: eps overflow outside C2");
}

// ---------------------------------------------------------------------------
// CellDegree: what a basis cell may carry.

using CellDegree = std::variant<RegDegree, DegreeC2>;

inline bool is_regular(const CellDegree& d) { return std::holds_alternative<RegDegree>(d); }

inline long long underlying_dim(const CellDegree& d) {
    if (auto* r = std::get_if<RegDegree>(&d)) return r->underlying_dim();
    return std::get<DegreeC2>(d).underlying_dim();
}

inline long long fixed_dim(const CellDegree& d) {
    if (auto* r = std::get_if<RegDegree>(&d)) return r->fixed_dim();
    return std::get<DegreeC2>(d).fixed_dim();
}

inline std::string degree_to_string(const CellDegree& d) {
    if (auto* r = std::get_if<RegDegree>(&d)) return r->to_string();
    return std::get<DegreeC2>(d).to_string();
}

inline bool degree_equal(const CellDegree& x, const CellDegree& y) {
    if (x.index() != y.index()) return false;
    if (auto* r = std::get_if<RegDegree>(&x)) return *r == std::get<RegDegree>(y);
    return std::get<DegreeC2>(x) == std::get<DegreeC2>(y);
}

/// DegreeC2 view of any degree at stabilizer C2 in ambient C2.
inline DegreeC2 as_full_c2(const CellDegree& d) {
    if (auto* r = std::get_if<RegDegree>(&d)) return to_full_c2(*r);
    return std::get<DegreeC2>(d);
}

} // namespace equihom
