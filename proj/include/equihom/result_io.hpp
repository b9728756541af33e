#pragma once

// Computation results as documents: a kind tag, a digest of the inputs, and
// the payload.  Text mode renders degree tables in rho/sigma notation; json
// mode is canonical (sorted keys, integers only) and round-trips losslessly.

#include <json.hpp>

#include "equihom/freebasis.hpp"
#include "equihom/model_io.hpp"
#include "equihom/point_homology.hpp"
#include "equihom/specseq.hpp"

namespace equihom {

using json = nlohmann::json;

/// FNV-1a 64-bit digest of the canonical input text.
inline std::string digest_of(const std::string& text) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return std::string(buf);
}

struct ResultDoc {
    std::string kind;
    std::string digest;
    json payload;

    json to_json() const {
        return json{{"digest", digest},
                    {"format", "equihom-result 1"},
                    {"kind", kind},
                    {"payload", payload}};
    }

    std::string dump() const { return to_json().dump(2) + "\n"; }
};

inline ResultDoc parse_result(const std::string& text) {
    json j = json::parse(text);
    require(j.at("format").get<std::string>() == "equihom-result 1",
            "unsupported result format");
    ResultDoc d;
    d.kind = j.at("kind").get<std::string>();
    d.digest = j.at("digest").get<std::string>();
    d.payload = j.at("payload");
    return d;
}

// ---------------------------------------------------------------------------
// JSON payload builders

inline json gset_json(const GSet& t) {
    json orbits = json::array();
    for (auto it = t.orbits.rbegin(); it != t.orbits.rend(); ++it)
        orbits.push_back(json{{"mult", it->second}, {"stab", Subgroup{it->first}.name()}});
    return json{{"group", t.group.name()}, {"orbits", orbits}};
}

inline json abgroup_json(const AbGroup& g, Coeff c) {
    return json{{"pretty", g.to_string(c)}, {"rank", g.rank}, {"torsion", g.torsion}};
}

inline json point_levels_json(const PointLevels& v, Coeff c) {
    return json{{"level_G", abgroup_json(v.at_g, c)},
                {"level_e", abgroup_json(v.at_e, c)},
                {"res_iso", v.res_iso(c)}};
}

inline json basis_json(const Basis& b) {
    json cells = json::array();
    for (const Cell& c : b.cells)
        cells.push_back(json{{"degree", degree_to_string(c.degree)},
                             {"label", c.label},
                             {"stab", c.stab.name()}});
    return json{{"cells", cells},
                {"coeff", coeff_name(b.coeff)},
                {"group", b.group.name()}};
}

inline json pure_homology_json(const PureHomology& h) {
    json levels = json::array();
    int ord = 1;
    for (int e = 0; e <= h.group.exponent; ++e) {
        levels.push_back(json{{"group", abgroup_json(h.levels[e], h.scalars)},
                              {"level", Subgroup{ord}.name()}});
        ord *= h.group.prime;
    }
    return json{{"cells", h.contributing_cells}, {"levels", levels}};
}

inline json tor_page_json(const TorPage& p) {
    json entries = json::array();
    for (auto& [k, e] : p.entries) {
        json entry{{"degree", k.second.to_string()},
                   {"labels", e.labels},
                   {"rank", e.rank},
                   {"s", k.first},
                   {"torsion", e.torsion}};
        if (e.swap_fixed_rank >= 0) entry["swap_fixed_rank"] = e.swap_fixed_rank;
        entries.push_back(entry);
    }
    json out{{"coeff", coeff_name(p.base)},
             {"entries", entries},
             {"grading", p.grading == PageGrading::RO ? "ro" : "underlying"}};
    if (!p.note.empty()) out["note"] = p.note;
    if (!p.ground.empty()) out["ground"] = p.ground;
    return out;
}

inline json presentation_json(const PureRingModel& md) {
    json gens = json::array();
    for (const ModelGen& g : md.gens)
        gens.push_back(json{{"degree", degree_to_string(g.cell_deg)},
                            {"name", g.name},
                            {"sign", g.sign},
                            {"underlying", g.underlying}});
    json rels = json::array();
    for (const Relation& r : md.relations)
        rels.push_back(json{{"lhs", md.mono_string(r.lhs)}, {"rhs", poly_string(md, r.rhs)}});
    return json{{"coeff", coeff_name(md.coeff)},
                {"generators", gens},
                {"group", md.group.name()},
                {"name", md.name},
                {"relations", rels}};
}

inline json coinduced_json(const CoinducedTable& t) {
    json orbits = json::array();
    for (const NormOrbit& o : t.orbits)
        orbits.push_back(json{{"fixed_dims", o.fixed_dims},
                              {"label", o.label},
                              {"stab", o.stab.name()},
                              {"underlying", o.total_dim}});
    return json{{"group", t.group.name()}, {"orbits", orbits}, {"tuples", t.tuple_count}};
}

// ---------------------------------------------------------------------------
// Text rendering

inline std::string tor_page_text(const TorPage& p) {
    // sort entries by filtration depth, then underlying dimension, then a
    std::vector<std::pair<std::pair<int, DegreeC2>, const TorEntry*>> rows;
    for (auto& [k, e] : p.entries) rows.push_back({k, &e});
    std::sort(rows.begin(), rows.end(), [](auto& x, auto& y) {
        if (x.first.first != y.first.first) return x.first.first > y.first.first;
        long long ux = x.first.second.underlying_dim(), uy = y.first.second.underlying_dim();
        if (ux != uy) return ux < uy;
        return x.first.second.a < y.first.second.a;
    });
    std::ostringstream os;
    for (auto& [k, e] : rows) {
        os << "  s=" << k.first << " deg " << k.second.to_string();
        if (p.grading == PageGrading::RO && k.second.a == k.second.b)
            os << " (" << k.second.a << "*rho[C2])";
        os << " rank " << (e->rank + static_cast<long long>(e->torsion.size()));
        if (!e->torsion.empty()) {
            os << " torsion";
            for (i64 t : e->torsion) os << " " << t;
        }
        if (e->swap_fixed_rank >= 0) os << " swap-fixed " << e->swap_fixed_rank;
        if (!e->labels.empty()) {
            os << "  ";
            for (size_t i = 0; i < e->labels.size(); ++i)
                os << (i ? ", " : "") << e->labels[i];
        }
        os << "\n";
    }
    return os.str();
}

inline std::string basis_table_text(const Basis& b) {
    std::ostringstream os;
    std::map<long long, std::vector<const Cell*>> by_dim;
    for (const Cell& c : b.cells) by_dim[c.dim()].push_back(&c);
    for (auto& [d, cells] : by_dim) {
        os << "  underlying " << d << " rank " << cells.size() << "  ";
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ", ";
            os << cells[i]->label << " (" << cells[i]->stab.name() << ", "
               << degree_to_string(cells[i]->degree) << ")";
        }
        os << "\n";
    }
    os << "total cells: " << b.cells.size() << "\n";
    return os.str();
}

inline std::string pure_homology_text(const PureHomology& h) {
    std::ostringstream os;
    int ord = 1;
    std::vector<std::string> lines;
    for (int e = 0; e <= h.group.exponent; ++e) {
        lines.push_back("level " + Subgroup{ord}.name() + ": " +
                        h.levels[e].to_string(h.scalars));
        ord *= h.group.prime;
    }
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) os << *it << "\n";
    if (!h.contributing_cells.empty()) {
        os << "cells:";
        for (auto& c : h.contributing_cells) os << " " << c;
        os << "\n";
    }
    return os.str();
}

inline std::string coinduced_text(const CoinducedTable& t) {
    std::ostringstream os;
    auto subs = subgroups(t.group);
    os << "orbit table of Map^[C2](" << t.group.name() << ", cells): stab, fixed dims over [";
    for (size_t i = 0; i < subs.size(); ++i) os << (i ? ", " : "") << subs[i].name();
    os << "], label\n";
    for (const NormOrbit& o : t.orbits) {
        os << "  stab " << o.stab.name() << " dims [";
        for (size_t i = 0; i < o.fixed_dims.size(); ++i)
            os << (i ? "," : "") << o.fixed_dims[i];
        os << "]";
        if (o.regular_form || o.stab.order == 1)
            os << " deg " << o.total_dim;
        else if (o.fixed_dims.size() >= 2) {
            // stab C2 orbits carry an exact RO(C2) form
            if (o.stab.order == 2)
                os << " deg " << DegreeC2{o.fixed_dims[1], o.total_dim - o.fixed_dims[1]}.to_string();
        }
        os << " " << o.label << "\n";
    }
    os << "tuples: " << t.tuple_count << "\n";
    return os.str();
}

} // namespace equihom
