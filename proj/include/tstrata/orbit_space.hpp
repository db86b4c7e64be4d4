#pragma once

// Combinatorial orbit spaces of dimension <= 2: finite point sets, the
// circle, finite graphs, closed surfaces, and 2-stratifolds (surface pieces
// glued along singular circles). Each carries a two-step filtration encoded
// by (l, n): the lowest skeleton has dimension l and the filtration has n
// proper steps, so the space has dimension l + n.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tstrata {

enum class SpaceKind { points, circle, graph, closed_surface, stratifold };

inline std::string space_kind_name(SpaceKind k) {
    switch (k) {
    case SpaceKind::points: return "points";
    case SpaceKind::circle: return "circle";
    case SpaceKind::graph: return "graph";
    case SpaceKind::closed_surface: return "closed_surface";
    case SpaceKind::stratifold: return "stratifold";
    }
    return "?";
}

struct GraphEdge {
    std::string a, b;  // unordered ends; orientation a -> b is a storage artifact
    bool is_loop() const { return a == b; }
};

struct BoundaryAttachment {
    std::string circle;
    std::size_t degree = 1;  // local sheet count contributed to the circle's link
};

struct SurfacePiece {
    std::string id;
    bool orientable = true;
    std::size_t genus = 0;
    std::vector<BoundaryAttachment> boundary;
};

struct Stratum {
    std::string id;
    std::size_t dimension = 0;
    std::vector<std::string> closure_contains;  // lower strata in the closure
};

struct LinkDescription {
    std::size_t component_count = 0;
    std::vector<std::size_t> points_per_component;  // for 0-dimensional links
};

struct Violation {
    std::string code;     // stable machine name, e.g. "density"
    std::string subject;  // stratum id or field the violation is about
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct NormalityReport {
    bool normal = true;
    // (lower stratum id, link component count); empty when there are no
    // lower strata.
    std::vector<std::pair<std::string, std::size_t>> link_components;
};

struct SurfaceForm {
    bool orientable = true;
    std::size_t genus = 0;
    std::size_t boundary_count = 0;
    bool operator==(const SurfaceForm&) const = default;
    std::string to_string() const {
        std::ostringstream os;
        os << (orientable ? "orientable" : "non-orientable") << ", genus " << genus
           << ", " << boundary_count << " boundary circle"
           << (boundary_count == 1 ? "" : "s");
        return os.str();
    }
};

namespace detail {
inline void check_id(const std::string& id) {
    if (id.empty())
        throw std::invalid_argument("stratum id must be nonempty");
    if (id.find('#') != std::string::npos)
        throw std::invalid_argument("stratum id '" + id + "' uses reserved character '#'");
}
}  // namespace detail

class OrbitSpace {
public:
    static OrbitSpace points(std::size_t count) {
        OrbitSpace q(SpaceKind::points);
        q.point_count_ = count;
        return q;
    }
    static OrbitSpace circle() { return OrbitSpace(SpaceKind::circle); }

    static OrbitSpace graph(std::vector<std::string> vertices,
                            std::vector<GraphEdge> edges) {
        OrbitSpace q(SpaceKind::graph);
        std::set<std::string> seen;
        for (const auto& v : vertices) {
            detail::check_id(v);
            if (!seen.insert(v).second)
                throw std::invalid_argument("duplicate vertex id '" + v + "'");
        }
        for (const auto& e : edges) {
            if (!seen.count(e.a) || !seen.count(e.b))
                throw std::invalid_argument("edge references unknown vertex '" +
                                            (seen.count(e.a) ? e.b : e.a) + "'");
        }
        q.vertices_ = std::move(vertices);
        q.edges_ = std::move(edges);
        return q;
    }

    // The 2-vertex path graph; the manifold case of a graph base.
    static OrbitSpace interval() {
        return graph({"v0", "v1"}, {{"v0", "v1"}});
    }

    static OrbitSpace closed_surface(bool orientable, std::size_t genus) {
        if (!orientable && genus == 0)
            throw std::invalid_argument(
                "non-orientable surface needs genus >= 1 (crosscap count)");
        OrbitSpace q(SpaceKind::closed_surface);
        q.orientable_ = orientable;
        q.genus_ = genus;
        return q;
    }

    static OrbitSpace stratifold(std::vector<std::string> circles,
                                 std::vector<SurfacePiece> pieces) {
        OrbitSpace q(SpaceKind::stratifold);
        std::set<std::string> seen;
        for (const auto& c : circles) {
            detail::check_id(c);
            if (!seen.insert(c).second)
                throw std::invalid_argument("duplicate circle id '" + c + "'");
        }
        for (const auto& p : pieces) {
            detail::check_id(p.id);
            if (!seen.insert(p.id).second)
                throw std::invalid_argument("duplicate piece id '" + p.id + "'");
            if (!p.orientable && p.genus == 0)
                throw std::invalid_argument("non-orientable piece '" + p.id +
                                            "' needs genus >= 1");
            for (const auto& att : p.boundary) {
                if (std::find(circles.begin(), circles.end(), att.circle) ==
                    circles.end())
                    throw std::invalid_argument("piece '" + p.id +
                                                "' attaches to unknown circle '" +
                                                att.circle + "'");
                if (att.degree < 1)
                    throw std::invalid_argument("piece '" + p.id +
                                                "' has attachment of degree 0");
            }
        }
        q.circles_ = std::move(circles);
        q.pieces_ = std::move(pieces);
        return q;
    }

    SpaceKind kind() const { return kind_; }

    // Filtration data.
    std::size_t skeleton_dim() const {  // l
        switch (kind_) {
        case SpaceKind::points: return 0;
        case SpaceKind::circle: return 1;
        case SpaceKind::graph: return 0;
        case SpaceKind::closed_surface: return 2;
        case SpaceKind::stratifold: return 1;
        }
        return 0;
    }
    std::size_t depth() const {  // n
        return (kind_ == SpaceKind::graph || kind_ == SpaceKind::stratifold) ? 1 : 0;
    }
    std::size_t dimension() const { return skeleton_dim() + depth(); }

    std::size_t point_count() const { return point_count_; }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<GraphEdge>& edges() const { return edges_; }
    bool surface_orientable() const { return orientable_; }
    std::size_t surface_genus() const { return genus_; }
    const std::vector<std::string>& circles() const { return circles_; }
    const std::vector<SurfacePiece>& pieces() const { return pieces_; }

    std::string edge_id(std::size_t i) const { return "e#" + std::to_string(i); }

    bool operator==(const OrbitSpace& o) const {
        if (kind_ != o.kind_) return false;
        switch (kind_) {
        case SpaceKind::points: return point_count_ == o.point_count_;
        case SpaceKind::circle: return true;
        case SpaceKind::graph: {
            if (vertices_ != o.vertices_ || edges_.size() != o.edges_.size())
                return false;
            for (std::size_t i = 0; i < edges_.size(); ++i)
                if (edges_[i].a != o.edges_[i].a || edges_[i].b != o.edges_[i].b)
                    return false;
            return true;
        }
        case SpaceKind::closed_surface:
            return orientable_ == o.orientable_ && genus_ == o.genus_;
        case SpaceKind::stratifold: {
            if (circles_ != o.circles_ || pieces_.size() != o.pieces_.size())
                return false;
            for (std::size_t i = 0; i < pieces_.size(); ++i) {
                const auto& p = pieces_[i];
                const auto& r = o.pieces_[i];
                if (p.id != r.id || p.orientable != r.orientable ||
                    p.genus != r.genus || p.boundary.size() != r.boundary.size())
                    return false;
                for (std::size_t j = 0; j < p.boundary.size(); ++j)
                    if (p.boundary[j].circle != r.boundary[j].circle ||
                        p.boundary[j].degree != r.boundary[j].degree)
                        return false;
            }
            return true;
        }
        }
        return false;
    }

private:
    explicit OrbitSpace(SpaceKind k) : kind_(k) {}

    SpaceKind kind_;
    std::size_t point_count_ = 0;
    std::vector<std::string> vertices_;
    std::vector<GraphEdge> edges_;
    bool orientable_ = true;
    std::size_t genus_ = 0;
    std::vector<std::string> circles_;
    std::vector<SurfacePiece> pieces_;
};

// All strata with their closure relations, lower-dimensional strata first.
inline std::vector<Stratum> strata_poset(const OrbitSpace& q) {
    std::vector<Stratum> out;
    switch (q.kind()) {
    case SpaceKind::points:
        for (std::size_t i = 0; i < q.point_count(); ++i)
            out.push_back({"point" + std::to_string(i), 0, {}});
        break;
    case SpaceKind::circle:
        out.push_back({"circle", 1, {}});
        break;
    case SpaceKind::graph: {
        for (const auto& v : q.vertices()) out.push_back({v, 0, {}});
        for (std::size_t i = 0; i < q.edges().size(); ++i) {
            const auto& e = q.edges()[i];
            std::vector<std::string> below{e.a};
            if (e.b != e.a) below.push_back(e.b);
            out.push_back({q.edge_id(i), 1, std::move(below)});
        }
        break;
    }
    case SpaceKind::closed_surface:
        out.push_back({"surface", 2, {}});
        break;
    case SpaceKind::stratifold: {
        for (const auto& c : q.circles()) out.push_back({c, 1, {}});
        for (const auto& p : q.pieces()) {
            std::vector<std::string> below;
            for (const auto& att : p.boundary)
                if (std::find(below.begin(), below.end(), att.circle) == below.end())
                    below.push_back(att.circle);
            out.push_back({p.id, 2, std::move(below)});
        }
        break;
    }
    }
    return out;
}

// Link of a stratum. Lower strata in our catalogue always have 0-dimensional
// links: one point per local sheet. Top strata have empty links.
inline LinkDescription link_of(const OrbitSpace& q, const std::string& stratum_id) {
    switch (q.kind()) {
    case SpaceKind::graph: {
        if (std::find(q.vertices().begin(), q.vertices().end(), stratum_id) !=
            q.vertices().end()) {
            std::size_t ends = 0;
            for (const auto& e : q.edges()) {
                if (e.a == stratum_id) ++ends;
                if (e.b == stratum_id) ++ends;  // a loop contributes two ends
            }
            return {ends, std::vector<std::size_t>(ends, 1)};
        }
        break;
    }
    case SpaceKind::stratifold: {
        if (std::find(q.circles().begin(), q.circles().end(), stratum_id) !=
            q.circles().end()) {
            std::size_t sheets = 0;
            for (const auto& p : q.pieces())
                for (const auto& att : p.boundary)
                    if (att.circle == stratum_id) sheets += att.degree;
            return {sheets, std::vector<std::size_t>(sheets, 1)};
        }
        break;
    }
    default:
        break;
    }
    // Top strata (and anything without lower-dimensional neighbors).
    for (const auto& s : strata_poset(q))
        if (s.id == stratum_id) return {0, {}};
    throw std::invalid_argument("unknown stratum '" + stratum_id + "'");
}

inline NormalityReport is_normal(const OrbitSpace& q) {
    NormalityReport report;
    const std::size_t top_dim = q.dimension();
    for (const auto& s : strata_poset(q)) {
        if (s.dimension == top_dim) continue;
        LinkDescription link = link_of(q, s.id);
        report.link_components.emplace_back(s.id, link.component_count);
        if (link.component_count != 1) report.normal = false;
    }
    return report;
}

// Pseudomanifold axioms that are checkable on the combinatorial presentation:
// a top stratum exists, top strata are dense (every lower stratum lies in the
// closure of some top stratum), and no top stratum is closed.
inline ValidationReport validate_pseudomanifold(const OrbitSpace& q) {
    ValidationReport report;
    auto add = [&](std::string code, std::string subject, std::string message) {
        report.violations.push_back({std::move(code), std::move(subject),
                                     std::move(message)});
    };
    switch (q.kind()) {
    case SpaceKind::points:
        if (q.point_count() == 0)
            add("empty", "space", "point set is empty");
        break;
    case SpaceKind::circle:
    case SpaceKind::closed_surface:
        break;  // construction already enforced everything checkable
    case SpaceKind::graph: {
        if (q.vertices().empty())
            add("empty", "space", "graph has no strata");
        else if (q.edges().empty())
            add("no-top-stratum", "space",
                "graph has vertices but no edges; top strata must be dense");
        for (const auto& v : q.vertices()) {
            if (link_of(q, v).component_count == 0 && !q.edges().empty())
                add("density", v,
                    "density fails at vertex '" + v + "': no incident edge end");
        }
        break;
    }
    case SpaceKind::stratifold: {
        if (q.circles().empty() && q.pieces().empty())
            add("empty", "space", "stratifold has no strata");
        else if (q.pieces().empty())
            add("no-top-stratum", "space",
                "stratifold has circles but no surface pieces");
        for (const auto& p : q.pieces()) {
            if (p.boundary.empty())
                add("closed-top-stratum", p.id,
                    "piece '" + p.id +
                        "' has no boundary attachments, so it is closed; "
                        "model it as a closed surface instead");
        }
        for (const auto& c : q.circles()) {
            if (link_of(q, c).component_count == 0 && !q.pieces().empty())
                add("density", c,
                    "density fails at circle '" + c + "': no attached piece");
        }
        break;
    }
    }
    return report;
}

inline bool is_interval(const OrbitSpace& q) {
    return q.kind() == SpaceKind::graph && q.vertices().size() == 2 &&
           q.edges().size() == 1 && !q.edges()[0].is_loop();
}

inline bool is_single_loop(const OrbitSpace& q) {
    return q.kind() == SpaceKind::graph && q.vertices().size() == 1 &&
           q.edges().size() == 1 && q.edges()[0].is_loop();
}

namespace detail {
struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::vector<std::size_t> parent;
};
}  // namespace detail

inline std::size_t connected_components(const OrbitSpace& q) {
    switch (q.kind()) {
    case SpaceKind::points:
        return q.point_count();
    case SpaceKind::circle:
    case SpaceKind::closed_surface:
        return 1;
    case SpaceKind::graph: {
        std::map<std::string, std::size_t> index;
        for (const auto& v : q.vertices()) index.emplace(v, index.size());
        detail::UnionFind uf(index.size());
        for (const auto& e : q.edges()) uf.unite(index[e.a], index[e.b]);
        std::set<std::size_t> roots;
        for (std::size_t i = 0; i < index.size(); ++i) roots.insert(uf.find(i));
        return roots.size();
    }
    case SpaceKind::stratifold: {
        std::map<std::string, std::size_t> index;
        for (const auto& c : q.circles()) index.emplace(c, index.size());
        for (const auto& p : q.pieces()) index.emplace(p.id, index.size());
        detail::UnionFind uf(index.size());
        for (const auto& p : q.pieces())
            for (const auto& att : p.boundary) uf.unite(index[p.id], index[att.circle]);
        std::set<std::size_t> roots;
        for (std::size_t i = 0; i < index.size(); ++i) roots.insert(uf.find(i));
        return roots.size();
    }
    }
    return 0;
}

// Split into connected components, preserving stratum ids (except for point
// sets, whose strata are renumbered per component).
inline std::vector<OrbitSpace> components(const OrbitSpace& q) {
    std::vector<OrbitSpace> out;
    switch (q.kind()) {
    case SpaceKind::points:
        for (std::size_t i = 0; i < q.point_count(); ++i)
            out.push_back(OrbitSpace::points(1));
        break;
    case SpaceKind::circle:
    case SpaceKind::closed_surface:
        out.push_back(q);
        break;
    case SpaceKind::graph: {
        std::map<std::string, std::size_t> index;
        for (const auto& v : q.vertices()) index.emplace(v, index.size());
        detail::UnionFind uf(index.size());
        for (const auto& e : q.edges()) uf.unite(index[e.a], index[e.b]);
        std::map<std::size_t, std::size_t> root_slot;
        for (const auto& v : q.vertices()) {
            std::size_t r = uf.find(index[v]);
            root_slot.emplace(r, root_slot.size());
        }
        std::vector<std::vector<std::string>> verts(root_slot.size());
        std::vector<std::vector<GraphEdge>> edges(root_slot.size());
        for (const auto& v : q.vertices())
            verts[root_slot[uf.find(index[v])]].push_back(v);
        for (const auto& e : q.edges())
            edges[root_slot[uf.find(index[e.a])]].push_back(e);
        for (std::size_t i = 0; i < verts.size(); ++i)
            out.push_back(OrbitSpace::graph(verts[i], edges[i]));
        break;
    }
    case SpaceKind::stratifold: {
        std::map<std::string, std::size_t> index;
        for (const auto& c : q.circles()) index.emplace(c, index.size());
        for (const auto& p : q.pieces()) index.emplace(p.id, index.size());
        detail::UnionFind uf(index.size());
        for (const auto& p : q.pieces())
            for (const auto& att : p.boundary) uf.unite(index[p.id], index[att.circle]);
        std::map<std::size_t, std::size_t> root_slot;
        for (const auto& c : q.circles()) root_slot.emplace(uf.find(index[c]), root_slot.size());
        for (const auto& p : q.pieces()) root_slot.emplace(uf.find(index[p.id]), root_slot.size());
        std::vector<std::vector<std::string>> circles(root_slot.size());
        std::vector<std::vector<SurfacePiece>> pieces(root_slot.size());
        for (const auto& c : q.circles())
            circles[root_slot[uf.find(index[c])]].push_back(c);
        for (const auto& p : q.pieces())
            pieces[root_slot[uf.find(index[p.id])]].push_back(p);
        for (std::size_t i = 0; i < circles.size(); ++i)
            out.push_back(OrbitSpace::stratifold(circles[i], pieces[i]));
        break;
    }
    }
    return out;
}

// Classification invariants of a normal 2-stratifold, read off from its one
// surface piece. Normality makes every singular circle a degree-1 boundary
// of exactly one sheet, so the underlying space is the piece itself with its
// boundary circles filled back in as point sets of the lower stratum.
inline std::optional<SurfaceForm> surface_with_boundary_form(const OrbitSpace& q) {
    if (q.kind() != SpaceKind::stratifold)
        throw std::invalid_argument("surface_with_boundary_form: not a 2-stratifold");
    if (!validate_pseudomanifold(q).ok()) return std::nullopt;
    if (!is_normal(q).normal) return std::nullopt;
    if (connected_components(q) != 1 || q.pieces().size() != 1) return std::nullopt;
    const SurfacePiece& p = q.pieces()[0];
    return SurfaceForm{p.orientable, p.genus, q.circles().size()};
}

}  // namespace tstrata
