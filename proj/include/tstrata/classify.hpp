#pragma once

// Names the homeomorphism type of the total space where the theory does,
// decides whether it is a topological manifold, and regenerates the three
// summary tables from the same dispatch.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <tstrata/chardata.hpp>
#include <tstrata/iso.hpp>
#include <tstrata/lattice.hpp>
#include <tstrata/model.hpp>
#include <tstrata/orbit_space.hpp>

namespace tstrata {

struct ManifoldFlag {
    bool value = false;
    std::string reason;
};

struct ClassificationResult {
    Lmn lmn;
    std::string named_type;  // constructor-like, stable for machine output
    std::string display;     // one-line prose
    std::vector<std::string> tags;
    ManifoldFlag manifold;
    std::optional<HomologyProfile> homology;
    std::vector<std::string> notes;
};

inline ManifoldFlag is_manifold(const CharacteristicData& d) {
    const OrbitSpace& q = d.space();
    if (d.lmn().n == 0)
        return {true, "free part aside, the total space is a principal torus "
                      "bundle over a manifold"};
    NormalityReport norm = is_normal(q);
    if (norm.normal) {
        if (q.kind() == SpaceKind::graph)
            return {true, connected_components(q) == 1
                              ? "the orbit space is an interval"
                              : "every component of the orbit space is an interval"};
        return {true, "the orbit space is a normal 2-stratifold, a compact "
                      "surface with boundary"};
    }
    for (const auto& [id, count] : norm.link_components)
        if (count != 1) {
            std::ostringstream os;
            os << "stratum '" << id << "' has a disconnected link (" << count
               << " components)";
            return {false, os.str()};
        }
    return {false, "the orbit space is not normal"};
}

namespace detail {

inline std::string torus_name(std::size_t m) {
    return "T^" + std::to_string(m);
}

inline std::string surface_type_name(const OrbitSpace& q) {
    std::ostringstream os;
    os << (q.surface_orientable() ? "orientable" : "non-orientable") << " genus "
       << q.surface_genus();
    return os.str();
}

inline std::string graph_summary(const OrbitSpace& q) {
    std::ostringstream os;
    os << q.vertices().size() << (q.vertices().size() == 1 ? " vertex" : " vertices")
       << ", " << q.edges().size() << (q.edges().size() == 1 ? " edge" : " edges");
    return os.str();
}

inline std::string stratifold_summary(const OrbitSpace& q) {
    std::ostringstream os;
    os << q.circles().size() << (q.circles().size() == 1 ? " circle" : " circles")
       << ", " << q.pieces().size() << (q.pieces().size() == 1 ? " piece" : " pieces");
    return os.str();
}

// The canonical rank-2 interval datum with basis labels; the weak-iso
// comparison against it corroborates the determinant trichotomy.
inline CharacteristicData basis_interval_data() {
    OrbitSpace q = OrbitSpace::interval();
    CharacteristicFunctor f = default_functor(q, 2);
    f.assignment.emplace("v0", line_of(PrimitiveVector({Int(1), Int(0)})));
    f.assignment.emplace("v1", line_of(PrimitiveVector({Int(0), Int(1)})));
    return CharacteristicData::make(std::move(q), std::move(f), ChernClass::zero());
}

inline ClassificationResult classify_connected(const CharacteristicData& d) {
    const OrbitSpace& q = d.space();
    const std::size_t m = d.functor().torus_rank;
    ClassificationResult r;
    r.lmn = d.lmn();
    r.manifold = is_manifold(d);

    switch (q.kind()) {
    case SpaceKind::points:
        r.named_type = "Torus(" + std::to_string(m) + ")";
        r.display = "the torus " + torus_name(m);
        break;
    case SpaceKind::circle:
        r.named_type = "PrincipalBundleOverCircle(" + std::to_string(m) + ")";
        r.display = "principal " + torus_name(m) +
                    "-bundle over S^1; trivial, homeomorphic to S^1 x " +
                    torus_name(m);
        break;
    case SpaceKind::closed_surface:
        r.named_type = "PrincipalBundleOverSurface(" + surface_type_name(q) +
                       ", c=" + d.chern().to_string() + ")";
        r.display = "principal T^1-bundle over the " + surface_type_name(q) +
                    " surface, Chern class " + d.chern().to_string();
        break;
    case SpaceKind::graph: {
        r.homology = homology(build_canonical_complex(d));
        if (is_interval(q) && m == 1) {
            r.named_type = "QuasitoricCP1";
            r.display = "the quasitoric manifold CP^1";
            break;
        }
        if (is_interval(q) && m == 2) {
            const Int k = abs(det2(d.label(q.vertices()[0]).generator(),
                                   d.label(q.vertices()[1]).generator()));
            if (k == 1) {
                r.named_type = "Sphere3";
                r.display = "the 3-sphere S^3";
                // Independent corroboration: a determinant-1 pair is a basis,
                // so the datum is weakly isomorphic to the standard one.
                if (decide_iso(d, basis_interval_data(), true).is_isomorphic())
                    r.tags.push_back("MomentAngleS3");
            } else if (k == 0) {
                r.named_type = "S2xS1";
                r.display = "S^2 x S^1";
            } else {
                r.named_type = "LensSpaceOrder(" + k.str() + ")";
                r.display = "lens space, order " + k.str();
            }
            break;
        }
        r.named_type = "CanonicalOverGraph(" + graph_summary(q) + ")";
        r.display = "canonical model over a graph (" + graph_summary(q) + ")";
        break;
    }
    case SpaceKind::stratifold: {
        auto form = surface_with_boundary_form(q);
        if (form) {
            r.named_type = "CanonicalOverStratifold(" + form->to_string() + ")";
            r.display =
                "canonical model over a normal 2-stratifold: " + form->to_string();
        } else {
            r.named_type = "CanonicalOverStratifold(" + stratifold_summary(q) + ")";
            r.display =
                "canonical model over a 2-stratifold (" + stratifold_summary(q) + ")";
        }
        break;
    }
    }
    return r;
}

// Restriction of the datum to one component of its base. Graph edges are
// renumbered inside the component, but they are top strata and carry the
// trivial label, so only vertex labels need copying.
inline CharacteristicData restrict_to(const CharacteristicData& d,
                                      const OrbitSpace& part) {
    const std::size_t m = d.functor().torus_rank;
    CharacteristicFunctor f = default_functor(part, m);
    if (part.kind() == SpaceKind::graph && m >= 2)
        for (const auto& v : part.vertices())
            f.assignment.emplace(v, d.label(v));
    return CharacteristicData::make(part, std::move(f), d.chern());
}

}  // namespace detail

inline ClassificationResult classify(const CharacteristicData& d) {
    const OrbitSpace& q = d.space();
    if (connected_components(q) == 1) return detail::classify_connected(d);

    ClassificationResult r;
    r.lmn = d.lmn();
    r.manifold = {true, ""};
    std::vector<std::string> parts;
    for (const OrbitSpace& part : components(q)) {
        ClassificationResult sub =
            detail::classify_connected(detail::restrict_to(d, part));
        parts.push_back(sub.named_type);
        if (!sub.manifold.value && r.manifold.value)
            r.manifold = sub.manifold;
    }
    if (r.manifold.value)
        r.manifold.reason = "every component is a manifold";
    std::string joined;
    for (std::size_t i = 0; i < parts.size(); ++i)
        joined += (i ? ", " : "") + parts[i];
    r.named_type = "DisjointUnion[" + joined + "]";
    r.display = "disjoint union of " + std::to_string(parts.size()) +
                " components: " + joined;
    r.notes.push_back(
        "the classification assumes a connected total space; components were "
        "classified separately");
    if (q.kind() == SpaceKind::graph)
        r.homology = homology(build_canonical_complex(d));
    return r;
}

struct TableSet {
    std::string table1, table2, table3;
};

namespace detail {

inline CharacteristicData representative_data(const Lmn& t) {
    if (t.n == 0) {
        OrbitSpace q = t.l == 0   ? OrbitSpace::points(1)
                       : t.l == 1 ? OrbitSpace::circle()
                                  : OrbitSpace::closed_surface(true, 0);
        auto f = default_functor(q, t.m);
        return CharacteristicData::make(std::move(q), std::move(f),
                                        ChernClass::zero());
    }
    if (t.l == 0) {  // graph base: the interval
        if (t.m == 2) return basis_interval_data();
        OrbitSpace q = OrbitSpace::interval();
        auto f = default_functor(q, 1);
        return CharacteristicData::make(std::move(q), std::move(f),
                                        ChernClass::zero());
    }
    OrbitSpace disk = OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 1}}}});
    auto f = default_functor(disk, 1);
    return CharacteristicData::make(std::move(disk), std::move(f),
                                    ChernClass::zero());
}

inline std::string base_symbol(const OrbitSpace& q) {
    switch (q.kind()) {
    case SpaceKind::points: return "{*}";
    case SpaceKind::circle: return "S^1";
    case SpaceKind::closed_surface: return "closed surface";
    case SpaceKind::graph: return "graph";
    case SpaceKind::stratifold: return "2-stratifold";
    }
    return "?";
}

// Table 2's total-space column: the generic family of the dispatch, before
// any interval specialization.
inline std::string family_symbol(const Lmn& t) {
    if (t.l == 0 && t.n == 0) return torus_name(t.m);
    if (t.l == 1 && t.n == 0)
        return "principal " + torus_name(t.m) + "-bundle ~= S^1 x " +
               torus_name(t.m);
    if (t.l == 2) return "principal " + torus_name(t.m) + "-bundle";
    if (t.l == 0) return "over graph";
    return "over 2-stratifold";
}

// Table 2's functor column, read off the representative's labels.
inline std::string functor_symbol(const CharacteristicData& d) {
    bool trivial = false, full = false, other = false;
    for (const auto& [id, sub] : d.functor().assignment) {
        if (sub.rank() == 0)
            trivial = true;
        else if (sub.rank() == sub.ambient_rank())
            full = true;
        else
            other = true;
    }
    if (other) return "lambda";
    if (trivial && full) return "{1,T}";
    return "{1}";
}

// Table 2's Chern column: symbolic exactly where H^2 of the base is nonzero.
inline std::string chern_symbol(const OrbitSpace& q) {
    return q.kind() == SpaceKind::closed_surface ? "c" : "0";
}

// Table 3's orbit-space column: which bases of this family produce manifolds.
inline std::string manifold_orbit_symbol(const CharacteristicData& rep) {
    if (rep.lmn().n == 0) return base_symbol(rep.space());
    return rep.space().kind() == SpaceKind::graph
               ? "interval"
               : "compact surface with boundary";
}

inline std::string layout(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size())
                line += std::string(width[i] - row[i].size() + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

}  // namespace detail

inline TableSet enumerate_tables() {
    std::vector<std::vector<std::string>> t1{{"dim X", "dim Q", "l", "m", "n"}};
    std::vector<std::vector<std::string>> t2{
        {"dim X", "dim Q", "l", "m", "n", "X", "(Q, lambda, c)"}};
    std::vector<std::vector<std::string>> t3{
        {"dim X", "dim Q", "l", "m", "n", "orbit space"}};

    for (const Lmn& t : admissible_triples()) {
        CharacteristicData rep = detail::representative_data(t);
        ClassificationResult res = classify(rep);
        std::vector<std::string> dims{
            std::to_string(t.dim_space()), std::to_string(t.dim_orbit()),
            std::to_string(t.l), std::to_string(t.m), std::to_string(t.n)};

        t1.push_back(dims);

        std::vector<std::string> row2 = dims;
        row2.push_back(detail::family_symbol(t));
        row2.push_back("(" + detail::base_symbol(rep.space()) + ", " +
                       detail::functor_symbol(rep) + ", " +
                       detail::chern_symbol(rep.space()) + ")");
        t2.push_back(row2);

        // Table 3 lists orbit spaces of manifolds; the representatives are
        // chosen in the manifold family, which the dispatch must confirm.
        std::vector<std::string> row3 = dims;
        row3.push_back(res.manifold.value ? detail::manifold_orbit_symbol(rep)
                                          : "(none)");
        t3.push_back(row3);
    }

    TableSet out;
    out.table1 = "Table 1: admissible dimension triples\n" + detail::layout(t1);
    out.table2 =
        "Table 2: total spaces and characteristic data\n" + detail::layout(t2);
    out.table3 =
        "Table 3: orbit spaces of topological manifolds\n" + detail::layout(t3);
    return out;
}

}  // namespace tstrata
