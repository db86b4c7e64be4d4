#pragma once

// Cellular chain complexes of canonical models over graph bases, assembled
// as a graph of spaces: one quotient torus per vertex, one torus cylinder
// per edge. Homology is computed exactly via Smith normal form.

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <tstrata/chardata.hpp>
#include <tstrata/lattice.hpp>
#include <tstrata/orbit_space.hpp>

namespace tstrata {

struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // coefficients >= 2, divisibility-ordered
    bool operator==(const HomologyGroup&) const = default;

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        if (free_rank == 1) { os << "Z"; first = false; }
        else if (free_rank > 1) { os << "Z^" << free_rank; first = false; }
        for (const Int& t : torsion) {
            os << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }
};

struct HomologyProfile {
    std::vector<HomologyGroup> groups;  // degree 0 .. d
    bool operator==(const HomologyProfile&) const = default;

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t k = 0; k < groups.size(); ++k)
            os << (k ? ", " : "") << groups[k].to_string();
        os << ')';
        return os.str();
    }
};

class ChainComplex {
public:
    // boundaries[k] is the matrix of d_k : C_k -> C_{k-1} with one column per
    // k-cell; boundaries[0] has zero rows. Checks shapes and dd = 0.
    static ChainComplex create(std::vector<std::size_t> dims,
                               std::vector<IntMatrix> boundaries,
                               std::vector<std::vector<std::string>> cell_names) {
        if (dims.empty() || boundaries.size() != dims.size())
            throw std::invalid_argument("chain complex: degree count mismatch");
        if (!cell_names.empty() && cell_names.size() != dims.size())
            throw std::invalid_argument("chain complex: cell name shape mismatch");
        for (std::size_t k = 0; k < dims.size(); ++k) {
            const std::size_t want_rows = k == 0 ? 0 : dims[k - 1];
            if (boundaries[k].rows() != want_rows || boundaries[k].cols() != dims[k])
                throw std::invalid_argument("chain complex: boundary shape mismatch at degree " +
                                            std::to_string(k));
            if (!cell_names.empty() && cell_names[k].size() != dims[k])
                throw std::invalid_argument("chain complex: cell name count mismatch");
        }
        for (std::size_t k = 0; k + 1 < dims.size(); ++k)
            if (!(boundaries[k] * boundaries[k + 1]).is_zero())
                throw std::invalid_argument("chain complex: dd != 0 at degree " +
                                            std::to_string(k + 1));
        if (cell_names.empty()) {
            cell_names.resize(dims.size());
            for (std::size_t k = 0; k < dims.size(); ++k)
                for (std::size_t i = 0; i < dims[k]; ++i)
                    cell_names[k].push_back("c" + std::to_string(k) + "_" +
                                            std::to_string(i));
        }
        return ChainComplex(std::move(dims), std::move(boundaries),
                            std::move(cell_names));
    }

    std::size_t top_degree() const { return dims_.size() - 1; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const IntMatrix& boundary(std::size_t k) const { return boundaries_[k]; }
    const std::vector<std::vector<std::string>>& cell_names() const {
        return cell_names_;
    }

    Int euler_characteristic() const {
        Int chi = 0;
        for (std::size_t k = 0; k < dims_.size(); ++k)
            chi += (k % 2 == 0 ? Int(1) : Int(-1)) * Int(dims_[k]);
        return chi;
    }

private:
    ChainComplex(std::vector<std::size_t> dims, std::vector<IntMatrix> boundaries,
                 std::vector<std::vector<std::string>> names)
        : dims_(std::move(dims)), boundaries_(std::move(boundaries)),
          cell_names_(std::move(names)) {}

    std::vector<std::size_t> dims_;
    std::vector<IntMatrix> boundaries_;
    std::vector<std::vector<std::string>> cell_names_;
};

inline HomologyProfile homology(const ChainComplex& c) {
    const std::size_t d = c.top_degree();
    // rank and divisors of each boundary map; index k = rank of d_k
    std::vector<std::size_t> ranks(d + 2, 0);
    std::vector<std::vector<Int>> divisors(d + 2);
    for (std::size_t k = 0; k <= d; ++k) {
        SmithDecomposition s = smith_normal_form(c.boundary(k));
        divisors[k] = s.divisors();
        ranks[k] = divisors[k].size();
    }
    HomologyProfile profile;
    for (std::size_t k = 0; k <= d; ++k) {
        HomologyGroup g;
        g.free_rank = c.dims()[k] - ranks[k] - ranks[k + 1];
        if (k + 1 <= d)
            for (const Int& t : divisors[k + 1])
                if (t >= 2) g.torsion.push_back(t);
        profile.groups.push_back(std::move(g));
    }
    return profile;
}

inline Int euler_from_homology(const HomologyProfile& p) {
    Int chi = 0;
    for (std::size_t k = 0; k < p.groups.size(); ++k)
        chi += (k % 2 == 0 ? Int(1) : Int(-1)) * Int(p.groups[k].free_rank);
    return chi;
}

namespace detail {
// The canonical primitive functional vanishing on the line spanned by (p,q).
inline std::vector<Int> normal_functional(const PrimitiveVector& gen) {
    return primitivize({gen[1], -gen[0]}).coords();
}
}  // namespace detail

// Cellular model of the canonical total space over a graph base. Vertex v
// contributes the quotient torus T^m/lambda(v); edge e = (v0, v1) contributes
// a cylinder cell sigma x I for every cell sigma of the standard CW torus,
// with boundary
//   d(sigma x I) = (d sigma) x I + (-1)^{dim sigma} (q_{v1}(sigma) - q_{v0}(sigma)),
// where q_v is the cellular quotient map onto the vertex space.
inline ChainComplex build_canonical_complex(const CharacteristicData& data) {
    const OrbitSpace& q = data.space();
    if (q.kind() != SpaceKind::graph)
        throw std::invalid_argument(
            "canonical complexes are built over graph bases only");
    const std::size_t m = data.functor().torus_rank;
    if (m != 1 && m != 2)
        throw std::invalid_argument("canonical complex: torus rank must be 1 or 2");
    if (!data.chern().is_zero())
        throw std::invalid_argument("canonical complex requires a zero Chern class");

    const auto& verts = q.vertices();
    const auto& edges = q.edges();
    const std::size_t nv = verts.size(), ne = edges.size();
    std::map<std::string, std::size_t> vidx;
    for (std::size_t i = 0; i < nv; ++i) vidx.emplace(verts[i], i);

    std::vector<std::vector<std::string>> names;
    std::vector<std::size_t> dims;
    std::vector<IntMatrix> boundaries;

    if (m == 1) {
        // Vertex spaces are points; each edge adds a point cylinder and a
        // fiber-circle cylinder whose ends collapse.
        dims = {nv, ne, ne};
        names.resize(3);
        for (const auto& v : verts) names[0].push_back("b(" + v + ")");
        for (std::size_t i = 0; i < ne; ++i) {
            names[1].push_back("c0(" + q.edge_id(i) + ")");
            names[2].push_back("c1(" + q.edge_id(i) + ")");
        }
        IntMatrix d1(nv, ne);
        for (std::size_t i = 0; i < ne; ++i) {
            d1.at(vidx[edges[i].b], i) += 1;
            d1.at(vidx[edges[i].a], i) -= 1;
        }
        boundaries = {IntMatrix(0, nv), std::move(d1), IntMatrix(ne, ne)};
    } else {
        // Vertex spaces are circles: cells b(v), s(v). Edge cylinders come
        // from the 0-cell, the two 1-cells, and the 2-cell of T^2.
        dims = {nv, nv + ne, 2 * ne, ne};
        names.resize(4);
        for (const auto& v : verts) names[0].push_back("b(" + v + ")");
        for (const auto& v : verts) names[1].push_back("s(" + v + ")");
        for (std::size_t i = 0; i < ne; ++i)
            names[1].push_back("c0(" + q.edge_id(i) + ")");
        for (std::size_t i = 0; i < ne; ++i) {
            names[2].push_back("c1x(" + q.edge_id(i) + ")");
            names[2].push_back("c1y(" + q.edge_id(i) + ")");
        }
        for (std::size_t i = 0; i < ne; ++i)
            names[3].push_back("c2(" + q.edge_id(i) + ")");

        IntMatrix d1(nv, nv + ne);  // s(v) columns are cycles
        for (std::size_t i = 0; i < ne; ++i) {
            d1.at(vidx[edges[i].b], nv + i) += 1;
            d1.at(vidx[edges[i].a], nv + i) -= 1;
        }
        IntMatrix d2(nv + ne, 2 * ne);
        for (std::size_t i = 0; i < ne; ++i) {
            const std::size_t a = vidx[edges[i].a], b = vidx[edges[i].b];
            std::vector<Int> alpha_a =
                detail::normal_functional(data.label(edges[i].a).generator());
            std::vector<Int> alpha_b =
                detail::normal_functional(data.label(edges[i].b).generator());
            for (std::size_t coord = 0; coord < 2; ++coord) {
                // d(e_i x I) = q_{v0}(e_i) - q_{v1}(e_i); for loops the two
                // ends collapse onto the same circle and cancel.
                d2.at(a, 2 * i + coord) += alpha_a[coord];
                d2.at(b, 2 * i + coord) -= alpha_b[coord];
            }
        }
        boundaries = {IntMatrix(0, nv), std::move(d1), std::move(d2),
                      IntMatrix(2 * ne, ne)};
    }
    return ChainComplex::create(std::move(dims), std::move(boundaries),
                                std::move(names));
}

// Closed-form homology of the canonical model over the interval with vertex
// labels v and w: H_1 = Z^2 / <v, w> read off the Smith form, H_2 free of
// rank 2 - rank<v, w>, H_0 and H_3 infinite cyclic. |det| = 1, |det| = 0 and
// |det| = k >= 2 give the three sphere / S^2 x S^1 / lens profiles.
inline HomologyProfile interval_closed_form(const PrimitiveVector& v,
                                            const PrimitiveVector& w) {
    if (v.dimension() != 2 || w.dimension() != 2)
        throw std::invalid_argument("interval_closed_form: labels must lie in Z^2");
    IntMatrix mat(2, 2);
    for (std::size_t j = 0; j < 2; ++j) {
        mat.at(0, j) = v[j];
        mat.at(1, j) = w[j];
    }
    SmithDecomposition s = smith_normal_form(mat);
    std::vector<Int> divisors = s.divisors();
    const std::size_t r = divisors.size();

    HomologyProfile p;
    p.groups.push_back({1, {}});
    HomologyGroup h1;
    h1.free_rank = 2 - r;
    for (const Int& d : divisors)
        if (d >= 2) h1.torsion.push_back(d);
    p.groups.push_back(std::move(h1));
    p.groups.push_back({2 - r, {}});
    p.groups.push_back({1, {}});
    return p;
}

// Plain-text dump of a complex for external checking.
inline std::string to_text(const ChainComplex& c) {
    std::ostringstream os;
    os << "chain-complex\n";
    os << "top-degree " << c.top_degree() << "\n";
    os << "dims";
    for (std::size_t d : c.dims()) os << ' ' << d;
    os << "\n";
    for (std::size_t k = 0; k <= c.top_degree(); ++k) {
        os << "cells " << k << ":";
        for (const auto& name : c.cell_names()[k]) os << ' ' << name;
        os << "\n";
    }
    for (std::size_t k = 1; k <= c.top_degree(); ++k) {
        const IntMatrix& b = c.boundary(k);
        os << "boundary " << k << " (" << b.rows() << "x" << b.cols() << "):\n";
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j)
                os << (j ? " " : "") << b.at(i, j);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace tstrata
