#pragma once

// Cyclic p-groups, their subgroup chain, finite G-sets as orbit multisets,
// and the orbit calculus: products, restriction, induction, coinduction.
// Everything is exactly testable against brute-force enumeration, and the
// enumeration machinery itself is part of the module (coinduction is defined
// by it).

#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "equihom/common.hpp"

namespace equihom {

struct CyclicGroup {
    int prime = 2;
    int exponent = 0; // order = prime^exponent

    int order() const {
        int o = 1;
        for (int i = 0; i < exponent; ++i) o *= prime;
        return o;
    }

    bool operator==(const CyclicGroup& o) const {
        return prime == o.prime && exponent == o.exponent;
    }
    bool operator!=(const CyclicGroup& o) const { return !(*this == o); }

    std::string name() const { return order() == 1 ? "e" : "C" + std::to_string(order()); }
};

inline CyclicGroup cyclic(int prime, int exponent) {
    require(prime >= 2, "group: prime must be >= 2");
    require(exponent >= 0, "group: exponent must be >= 0");
    for (int d = 2; d * d <= prime; ++d)
        require(prime % d != 0, "group: " + std::to_string(prime) + " is not prime");
    return CyclicGroup{prime, exponent};
}

/// Subgroup of a cyclic group, identified by its order (divisor chain).
struct Subgroup {
    int order = 1;

    bool operator==(const Subgroup& o) const { return order == o.order; }
    bool operator!=(const Subgroup& o) const { return order != o.order; }
    bool operator<(const Subgroup& o) const { return order < o.order; }

    std::string name() const { return order == 1 ? "e" : "C" + std::to_string(order); }
};

inline Subgroup trivial_subgroup() { return Subgroup{1}; }
inline Subgroup full_subgroup(const CyclicGroup& g) { return Subgroup{g.order()}; }

inline bool divides(int a, int b) { return a != 0 && b % a == 0; }

inline void require_subgroup(const CyclicGroup& g, const Subgroup& h) {
    require(divides(h.order, g.order()),
            "subgroup " + h.name() + " does not sit in " + g.name());
}

inline void require_contained(const Subgroup& k, const Subgroup& h) {
    require(divides(k.order, h.order),
            "subgroup " + k.name() + " is not contained in " + h.name());
}

/// All subgroups, ascending by order: e = C_{p^0} < ... < G.
inline std::vector<Subgroup> subgroups(const CyclicGroup& g) {
    std::vector<Subgroup> out;
    int o = 1;
    for (int i = 0; i <= g.exponent; ++i) {
        out.push_back(Subgroup{o});
        o *= g.prime;
    }
    return out;
}

inline Subgroup meet(const Subgroup& a, const Subgroup& b) {
    return Subgroup{std::gcd(a.order, b.order)};
}
inline Subgroup join(const Subgroup& a, const Subgroup& b) {
    return Subgroup{std::lcm(a.order, b.order)};
}

/// The subgroup of G of order `ord`; the chain makes this unique.
inline Subgroup subgroup_of_order(const CyclicGroup& g, int ord) {
    Subgroup h{ord};
    require_subgroup(g, h);
    return h;
}

// ---------------------------------------------------------------------------
// GSet: multiset of orbits keyed by stabilizer order.

struct GSet {
    CyclicGroup group;
    std::map<int, long long> orbits; // stabilizer order -> multiplicity (> 0)

    long long cardinality() const {
        long long n = 0;
        for (auto& [stab, mult] : orbits) n += mult * (group.order() / stab);
        return n;
    }

    long long orbit_count() const {
        long long n = 0;
        for (auto& [stab, mult] : orbits) n += mult;
        return n;
    }

    GSet& add_orbit(Subgroup stab, long long mult = 1) {
        require_subgroup(group, stab);
        if (mult != 0) {
            orbits[stab.order] += mult;
            if (orbits[stab.order] == 0) orbits.erase(stab.order);
        }
        return *this;
    }

    bool operator==(const GSet& o) const { return group == o.group && orbits == o.orbits; }

    /// "2 x C4/C2 + 1 x C4/e"; orbits with larger stabilizers first.
    std::string to_string() const {
        if (orbits.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = orbits.rbegin(); it != orbits.rend(); ++it) {
            if (!first) os << " + ";
            first = false;
            os << it->second << " x " << group.name() << "/" << Subgroup{it->first}.name();
        }
        return os.str();
    }
};

inline GSet empty_gset(const CyclicGroup& g) { return GSet{g, {}}; }

inline GSet single_orbit(const CyclicGroup& g, Subgroup stab, long long mult = 1) {
    GSet t{g, {}};
    t.add_orbit(stab, mult);
    return t;
}

// ---------------------------------------------------------------------------
// Orbit calculus (closed formulas; cyclic groups have trivial conjugation,
// so the double coset formula carries no twisting).

/// G/H x G/K  =  |G|/lcm(|H|,|K|) copies of G/(H n K).
inline GSet orbit_product(const CyclicGroup& g, Subgroup h, Subgroup k) {
    require_subgroup(g, h);
    require_subgroup(g, k);
    GSet out{g, {}};
    long long copies = g.order() / std::lcm(h.order, k.order);
    out.add_orbit(meet(h, k), copies);
    return out;
}

/// Bilinear extension of orbit_product to arbitrary G-sets.
inline GSet gset_product(const GSet& a, const GSet& b) {
    require(a.group == b.group, "gset_product: groups differ");
    GSet out{a.group, {}};
    for (auto& [sa, ma] : a.orbits)
        for (auto& [sb, mb] : b.orbits) {
            GSet p = orbit_product(a.group, Subgroup{sa}, Subgroup{sb});
            for (auto& [s, m] : p.orbits) out.add_orbit(Subgroup{s}, m * ma * mb);
        }
    return out;
}

inline GSet gset_union(const GSet& a, const GSet& b) {
    require(a.group == b.group, "gset_union: groups differ");
    GSet out = a;
    for (auto& [s, m] : b.orbits) out.add_orbit(Subgroup{s}, m);
    return out;
}

inline CyclicGroup subgroup_as_group(const CyclicGroup& g, Subgroup k) {
    require_subgroup(g, k);
    int e = 0, o = 1;
    while (o < k.order) { o *= g.prime; ++e; }
    return CyclicGroup{g.prime, e};
}

/// i_K^* (G/J)  =  |G|/lcm(|J|,|K|) copies of K/(J n K); extended additively.
inline GSet restrict_gset(const CyclicGroup& g, Subgroup k, const GSet& t) {
    require_subgroup(g, k);
    require(t.group == g, "restrict_gset: set is not over the given group");
    GSet out{subgroup_as_group(g, k), {}};
    for (auto& [sj, m] : t.orbits) {
        long long copies = g.order() / std::lcm(sj, k.order);
        out.add_orbit(meet(Subgroup{sj}, k), copies * m);
    }
    return out;
}

/// G x_H (H/L) = G/L, orbitwise.
inline GSet induce_gset(const CyclicGroup& g, Subgroup h, const GSet& t) {
    require_subgroup(g, h);
    require(t.group == subgroup_as_group(g, h), "induce_gset: set is not over the subgroup");
    GSet out{g, {}};
    for (auto& [s, m] : t.orbits) out.add_orbit(Subgroup{s}, m);
    return out;
}

// ---------------------------------------------------------------------------
// Explicit G-sets: points with the generator's permutation.  This is the
// enumeration backend: orbit decompositions read off stabilizers from orbit
// sizes (legal because the subgroup lattice is a chain).

struct ExplicitGSet {
    CyclicGroup group;
    std::vector<int> gamma; // generator action as a permutation of points

    int size() const { return static_cast<int>(gamma.size()); }

    std::vector<int> orbit_of(int p) const {
        std::vector<int> orb{p};
        int q = gamma[p];
        while (q != p) {
            orb.push_back(q);
            q = gamma[q];
        }
        return orb;
    }

    /// Canonical orbit decomposition.
    GSet decompose() const {
        GSet out{group, {}};
        std::vector<char> seen(gamma.size(), 0);
        for (int p = 0; p < size(); ++p) {
            if (seen[p]) continue;
            auto orb = orbit_of(p);
            for (int q : orb) seen[q] = 1;
            int stab = group.order() / static_cast<int>(orb.size());
            out.add_orbit(Subgroup{stab});
        }
        return out;
    }

    /// Orbit representatives (smallest point of each orbit, ascending).
    std::vector<int> orbit_reps() const {
        std::vector<int> reps;
        std::vector<char> seen(gamma.size(), 0);
        for (int p = 0; p < size(); ++p) {
            if (seen[p]) continue;
            reps.push_back(p);
            for (int q : orbit_of(p)) seen[q] = 1;
        }
        return reps;
    }
};

/// Realize a GSet with points grouped orbit by orbit (larger stabilizers
/// first, matching to_string order).
inline ExplicitGSet make_explicit(const GSet& t) {
    ExplicitGSet e{t.group, {}};
    for (auto it = t.orbits.rbegin(); it != t.orbits.rend(); ++it) {
        int orb_size = t.group.order() / it->first;
        for (long long m = 0; m < it->second; ++m) {
            int base = e.size();
            for (int i = 0; i < orb_size; ++i)
                e.gamma.push_back(base + (i + 1) % orb_size);
        }
    }
    return e;
}

inline ExplicitGSet explicit_product(const ExplicitGSet& a, const ExplicitGSet& b) {
    require(a.group == b.group, "explicit_product: groups differ");
    ExplicitGSet e{a.group, {}};
    int nb = b.size();
    e.gamma.resize(static_cast<size_t>(a.size()) * nb);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < nb; ++j)
            e.gamma[static_cast<size_t>(i) * nb + j] = a.gamma[i] * nb + b.gamma[j];
    return e;
}

/// Same points, acted on by K = <gamma^[G:K]>.
inline ExplicitGSet explicit_restrict(const CyclicGroup& g, Subgroup k, const ExplicitGSet& t) {
    require_subgroup(g, k);
    int step = g.order() / k.order;
    ExplicitGSet e{subgroup_as_group(g, k), {}};
    e.gamma.resize(t.gamma.size());
    for (int p = 0; p < t.size(); ++p) {
        int q = p;
        for (int s = 0; s < step; ++s) q = t.gamma[q];
        e.gamma[p] = q;
    }
    return e;
}

/// Map^H(G,T) realized as tuples over coset representatives e, g, ..., g^(m-1)
/// of H\G with the shift-and-twist action:
///   gamma . (t_0, ..., t_{m-1}) = (t_1, ..., t_{m-1}, gamma_H t_0).
inline ExplicitGSet explicit_coinduce(const CyclicGroup& g, Subgroup h, const ExplicitGSet& t) {
    require_subgroup(g, h);
    int m = g.order() / h.order;
    require(m <= 8, "coinduce: index [G:H] = " + std::to_string(m) + " exceeds guard 8");
    double points = 1;
    for (int i = 0; i < m; ++i) points *= static_cast<double>(std::max(t.size(), 1));
    require(points <= (1 << 22), "coinduce: |T|^[G:H] exceeds enumeration guard");

    long long n = 1;
    for (int i = 0; i < m; ++i) n *= t.size();
    ExplicitGSet e{g, {}};
    if (t.size() == 0) {
        // Map(G, empty) is empty unless [G:H] = 0 (never); single point if m = 0.
        e.gamma.clear();
        return e;
    }
    e.gamma.resize(static_cast<size_t>(n));
    std::vector<int> tup(m);
    for (long long code = 0; code < n; ++code) {
        long long c = code;
        for (int i = 0; i < m; ++i) {
            tup[i] = static_cast<int>(c % t.size());
            c /= t.size();
        }
        // shift left, twist last coordinate by the H-generator
        long long img = 0;
        for (int i = 0; i < m; ++i) {
            int v = (i < m - 1) ? tup[i + 1] : t.gamma[tup[0]];
            long long place = 1;
            for (int j = 0; j < i; ++j) place *= t.size();
            img += place * v;
        }
        e.gamma[static_cast<size_t>(code)] = static_cast<int>(img);
    }
    return e;
}

/// Map^H(G,T) as an orbit decomposition (the operation's contract).
inline GSet coinduce(const CyclicGroup& g, Subgroup h, const GSet& t) {
    require(t.group == subgroup_as_group(g, h), "coinduce: set is not over the subgroup");
    return explicit_coinduce(g, h, make_explicit(t)).decompose();
}

} // namespace equihom
