#pragma once

// Random orbit-space generators for property tests. Everything produced here
// must pass validate_pseudomanifold; tests that need broken inputs build them
// by hand.

#include <random>
#include <string>
#include <vector>

#include <tstrata/orbit_space.hpp>

namespace testgen {

using tstrata::BoundaryAttachment;
using tstrata::GraphEdge;
using tstrata::OrbitSpace;
using tstrata::SurfacePiece;

inline std::vector<std::string> vertex_names(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("v" + std::to_string(i));
    return names;
}

inline OrbitSpace random_connected_graph(std::mt19937_64& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> vcount(1, max_vertices);
    const std::size_t k = vcount(rng);
    auto names = vertex_names(k);
    std::vector<GraphEdge> edges;
    for (std::size_t i = 1; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> prev(0, i - 1);
        edges.push_back({names[prev(rng)], names[i]});
    }
    std::uniform_int_distribution<std::size_t> extra(0, 3);
    std::uniform_int_distribution<std::size_t> any(0, k - 1);
    for (std::size_t i = extra(rng); i > 0; --i)
        edges.push_back({names[any(rng)], names[any(rng)]});
    if (edges.empty()) edges.push_back({names[0], names[0]});  // lone vertex: loop
    return OrbitSpace::graph(names, edges);
}

inline OrbitSpace random_graph(std::mt19937_64& rng, std::size_t max_vertices) {
    // Possibly disconnected: union of 1 or 2 connected graphs.
    std::uniform_int_distribution<int> pieces(1, 2);
    if (pieces(rng) == 1) return random_connected_graph(rng, max_vertices);
    OrbitSpace a = random_connected_graph(rng, max_vertices / 2 + 1);
    OrbitSpace b = random_connected_graph(rng, max_vertices / 2 + 1);
    std::vector<std::string> names = a.vertices();
    std::vector<GraphEdge> edges = a.edges();
    for (const auto& v : b.vertices()) names.push_back("w" + v.substr(1));
    for (const auto& e : b.edges())
        edges.push_back({"w" + e.a.substr(1), "w" + e.b.substr(1)});
    return OrbitSpace::graph(names, edges);
}

inline OrbitSpace random_stratifold(std::mt19937_64& rng, bool force_normal) {
    std::uniform_int_distribution<std::size_t> ccount(1, 3), pcount(1, 3);
    std::uniform_int_distribution<std::size_t> genus(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    const std::size_t nc = ccount(rng);
    std::vector<std::string> circles;
    for (std::size_t i = 0; i < nc; ++i) circles.push_back("c" + std::to_string(i));

    std::vector<SurfacePiece> pieces;
    if (force_normal) {
        // One piece picking up every circle once with degree 1.
        SurfacePiece p{"p0", coin(rng) == 0, genus(rng), {}};
        if (!p.orientable && p.genus == 0) p.genus = 1;
        for (const auto& c : circles) p.boundary.push_back({c, 1});
        pieces.push_back(std::move(p));
    } else {
        const std::size_t np = pcount(rng);
        std::uniform_int_distribution<std::size_t> anyc(0, nc - 1);
        std::uniform_int_distribution<std::size_t> deg(1, 3);
        std::uniform_int_distribution<std::size_t> atts(1, 3);
        for (std::size_t i = 0; i < np; ++i) {
            SurfacePiece p{"p" + std::to_string(i), coin(rng) == 0, genus(rng), {}};
            if (!p.orientable && p.genus == 0) p.genus = 1;
            for (std::size_t a = atts(rng); a > 0; --a)
                p.boundary.push_back({circles[anyc(rng)], deg(rng)});
            pieces.push_back(std::move(p));
        }
        // Re-attach circles nothing picked up, keeping the space dense.
        for (const auto& c : circles) {
            bool used = false;
            for (const auto& p : pieces)
                for (const auto& att : p.boundary)
                    if (att.circle == c) used = true;
            if (!used) pieces[0].boundary.push_back({c, 1});
        }
    }
    return OrbitSpace::stratifold(circles, pieces);
}

inline OrbitSpace random_valid_space(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<std::size_t> pts(1, 4), genus(0, 3), ng(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    switch (kind(rng)) {
    case 0: return OrbitSpace::points(pts(rng));
    case 1: return OrbitSpace::circle();
    case 2:
        return coin(rng) == 0 ? OrbitSpace::closed_surface(true, genus(rng))
                              : OrbitSpace::closed_surface(false, ng(rng));
    case 3: return random_graph(rng, 6);
    default: return random_stratifold(rng, coin(rng) == 0);
    }
}

}  // namespace testgen
