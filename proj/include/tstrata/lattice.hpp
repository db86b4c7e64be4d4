#pragma once

// Exact integer linear algebra over Z: dense matrices of arbitrary-precision
// integers, Smith and Hermite normal forms with transform tracking, primitive
// vectors and saturated sublattices (the "subtorus" side of the dictionary
// between sublattices of Z^m and subtori of T^m).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tstrata {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Floor division; b must be positive. Used to reduce entries into [0, b).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// Dense row-major integer matrix. Degenerate shapes (0 x n, n x 0) are legal;
// they show up as boundary maps of empty cell sets.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer");
            entries_.insert(entries_.end(), r.begin(), r.end());
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        std::size_t cols = rows.empty() ? 0 : rows.front().size();
        IntMatrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("IntMatrix: ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const {
        return {entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
    }
    void negate_col(std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
    }
    // row_dst += k * row_src
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
    }
    // col_dst += k * col_src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
        for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("IntMatrix: shape mismatch in product");
        IntMatrix out(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) += a * o.at(k, j);
            }
        return out;
    }

    IntMatrix transposed() const {
        IntMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const Int& x) { return x == 0; });
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
        }
        os << ']';
        return os.str();
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

// Row vector times matrix: the ambient torus automorphism acts on labels and
// cocycle coefficients from the right throughout.
inline std::vector<Int> apply_row(const std::vector<Int>& v, const IntMatrix& p) {
    if (v.size() != p.rows())
        throw std::invalid_argument("apply_row: shape mismatch");
    std::vector<Int> out(p.cols(), Int(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < p.cols(); ++j) out[j] += v[i] * p.at(i, j);
    }
    return out;
}

// Fraction-free Gaussian elimination (Bareiss). Exact divisions only.
inline Int determinant(IntMatrix a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = n;
            for (std::size_t r = k + 1; r < n; ++r)
                if (a.at(r, k) != 0) { piv = r; break; }
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

// Classical adjugate; satisfies a * adjugate(a) = det(a) * I.
inline IntMatrix adjugate(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("adjugate: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return IntMatrix(0, 0);
    if (n == 1) return IntMatrix::identity(1);
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc++) = a.at(r, c);
                }
                ++mr;
            }
            Int cof = determinant(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            out.at(i, j) = cof;
        }
    return out;
}

inline bool is_unimodular(const IntMatrix& a) {
    if (a.rows() != a.cols()) return false;
    const Int d = determinant(a);
    return d == 1 || d == -1;
}

// Inverse of a unimodular matrix, again integral.
inline IntMatrix unimodular_inverse(const IntMatrix& a) {
    const Int d = determinant(a);
    if (d != 1 && d != -1)
        throw std::invalid_argument("unimodular_inverse: determinant is not +-1");
    IntMatrix adj = adjugate(a);
    if (d == -1)
        for (std::size_t i = 0; i < adj.rows(); ++i)
            for (std::size_t j = 0; j < adj.cols(); ++j) adj.at(i, j) = -adj.at(i, j);
    return adj;
}

// Smith decomposition m = u * d * v with u, v unimodular and d diagonal,
// d(0,0) | d(1,1) | ... all nonnegative.
struct SmithDecomposition {
    IntMatrix u, d, v;
    std::vector<Int> divisors() const {
        std::vector<Int> out;
        const std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i)
            if (d.at(i, i) != 0) out.push_back(d.at(i, i));
        return out;
    }
    std::size_t rank() const { return divisors().size(); }
};

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithDecomposition s{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& u = s.u;
    IntMatrix& d = s.d;
    IntMatrix& v = s.v;

    // Every elementary operation on d is mirrored by its inverse on u or v so
    // that u * d * v stays equal to the input.
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        d.swap_rows(i, j);
        u.swap_cols(i, j);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        d.swap_cols(i, j);
        v.swap_rows(i, j);
    };
    auto negate_row = [&](std::size_t i) {
        d.negate_row(i);
        u.negate_col(i);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& k) {
        d.add_row_multiple(dst, src, k);
        u.add_col_multiple(src, dst, -k);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& k) {
        d.add_col_multiple(dst, src, k);
        v.add_row_multiple(src, dst, -k);
    };

    const std::size_t bound = std::min(rows, cols);
    for (std::size_t t = 0; t < bound; ++t) {
        // Pick the nonzero entry of smallest magnitude in the trailing block.
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (d.at(i, j) == 0) continue;
                if (pi == rows || abs(d.at(i, j)) < abs(d.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi == rows) break;  // trailing block is zero
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            // Clear column t below the pivot, then row t to its right. A swap
            // while clearing the row can re-dirty the column, hence the loop.
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    while (d.at(i, t) != 0) {
                        Int q = d.at(i, t) / d.at(t, t);
                        if (q != 0) add_row(i, t, -q);
                        if (d.at(i, t) != 0) swap_rows(i, t);
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    while (d.at(t, j) != 0) {
                        Int q = d.at(t, j) / d.at(t, t);
                        if (q != 0) add_col(j, t, -q);
                        if (d.at(t, j) != 0) swap_cols(j, t);
                    }
                }
                for (std::size_t i = t + 1; i < rows && !dirty; ++i)
                    if (d.at(i, t) != 0) dirty = true;
            }
            // Divisibility: fold any offending row into row t and redo.
            bool ok = true;
            for (std::size_t i = t + 1; i < rows && ok; ++i)
                for (std::size_t j = t + 1; j < cols && ok; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(t, i, 1);
                        ok = false;
                    }
            if (ok) break;
        }
        if (d.at(t, t) < 0) negate_row(t);
    }
    return s;
}

inline std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

// Row-style Hermite normal form of the row span: echelon basis with positive
// pivots and entries above each pivot reduced into [0, pivot). Zero rows are
// dropped, so equal row lattices yield identical results.
inline IntMatrix hermite_row_basis(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        for (;;) {
            std::size_t piv = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (a.at(i, c) == 0) continue;
                if (piv == rows || abs(a.at(i, c)) < abs(a.at(piv, c))) piv = i;
            }
            if (piv == rows) break;
            a.swap_rows(r, piv);
            bool cleared = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a.at(i, c) == 0) continue;
                Int q = a.at(i, c) / a.at(r, c);
                a.add_row_multiple(i, r, -q);
                if (a.at(i, c) != 0) cleared = false;
            }
            if (cleared) {
                if (a.at(r, c) < 0) a.negate_row(r);
                for (std::size_t i = 0; i < r; ++i) {
                    Int q = floor_div(a.at(i, c), a.at(r, c));
                    if (q != 0) a.add_row_multiple(i, r, -q);
                }
                ++r;
                break;
            }
        }
    }
    IntMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = a.at(i, j);
    return out;
}

// A nonzero vector with gcd of entries 1 and first nonzero entry positive:
// the canonical generator of a 1-dimensional subtorus.
class PrimitiveVector {
public:
    explicit PrimitiveVector(std::vector<Int> coords) : coords_(std::move(coords)) {
        Int g = 0;
        for (const Int& c : coords_) g = gcd(g, c);
        if (g != 1)
            throw std::invalid_argument("PrimitiveVector: entries are not coprime");
        for (const Int& c : coords_) {
            if (c == 0) continue;
            if (c < 0)
                throw std::invalid_argument(
                    "PrimitiveVector: first nonzero entry must be positive");
            break;
        }
    }

    std::size_t dimension() const { return coords_.size(); }
    const std::vector<Int>& coords() const { return coords_; }
    const Int& operator[](std::size_t i) const { return coords_[i]; }

    bool operator==(const PrimitiveVector& o) const { return coords_ == o.coords_; }
    bool operator!=(const PrimitiveVector& o) const { return !(*this == o); }
    bool operator<(const PrimitiveVector& o) const { return coords_ < o.coords_; }

    std::string to_string() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < coords_.size(); ++i)
            os << (i ? "," : "") << coords_[i];
        os << ')';
        return os.str();
    }

private:
    std::vector<Int> coords_;
};

// Divide out the content and fix the sign. The zero vector generates no line.
inline PrimitiveVector primitivize(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& c : v) g = gcd(g, c);
    if (g == 0)
        throw std::invalid_argument("primitivize: zero vector has no direction");
    std::vector<Int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
    for (const Int& c : out) {
        if (c == 0) continue;
        if (c < 0)
            for (Int& x : out) x = -x;
        break;
    }
    return PrimitiveVector(std::move(out));
}

// 2x2 determinant of a pair of vectors in Z^2. Its absolute value is the
// index-type invariant attached to an edge or vertex pair.
inline Int det2(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != 2 || b.size() != 2)
        throw std::invalid_argument("det2: vectors must have dimension 2");
    return a[0] * b[1] - a[1] * b[0];
}

inline Int det2(const PrimitiveVector& a, const PrimitiveVector& b) {
    return det2(a.coords(), b.coords());
}

// Unimodular matrix whose first row is v. Existence is exactly primitivity;
// the remaining rows come out of the Smith decomposition of the 1 x m row.
inline IntMatrix complete_to_unimodular(const PrimitiveVector& v) {
    const std::size_t m = v.dimension();
    IntMatrix row(1, m);
    for (std::size_t j = 0; j < m; ++j) row.at(0, j) = v[j];
    SmithDecomposition s = smith_normal_form(row);
    // row = u * d * v with d = (1, 0, ..., 0), so row = +- first row of s.v.
    IntMatrix out = s.v;
    if (s.u.at(0, 0) == -1) out.negate_row(0);
    return out;
}

// Saturated sublattice of Z^m in canonical (Hermite) basis form; the lattice
// dictionary image of a subtorus of T^m. Saturation closes the integer span
// under division: any lattice vector with a multiple in the span is in it.
class PrimitiveSubtorus {
public:
    static PrimitiveSubtorus trivial(std::size_t ambient) {
        return PrimitiveSubtorus(ambient, IntMatrix(0, ambient));
    }
    static PrimitiveSubtorus full(std::size_t ambient) {
        return PrimitiveSubtorus(ambient, IntMatrix::identity(ambient));
    }

    // Span the given vectors, saturate, and store the Hermite basis.
    static PrimitiveSubtorus from_vectors(std::size_t ambient,
                                          const std::vector<std::vector<Int>>& gens) {
        for (const auto& g : gens)
            if (g.size() != ambient)
                throw std::invalid_argument("PrimitiveSubtorus: generator has wrong dimension");
        if (gens.empty()) return trivial(ambient);
        IntMatrix a = IntMatrix::from_rows(gens);
        SmithDecomposition s = smith_normal_form(a);
        const std::size_t r = s.rank();
        // a = u d v: the row span of a saturates to the span of the first
        // r rows of v, because d scales those rows by its divisors.
        IntMatrix sat(r, ambient);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < ambient; ++j) sat.at(i, j) = s.v.at(i, j);
        return PrimitiveSubtorus(ambient, hermite_row_basis(sat));
    }

    std::size_t ambient_rank() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    bool operator==(const PrimitiveSubtorus& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const PrimitiveSubtorus& o) const { return !(*this == o); }

    bool is_trivial() const { return rank() == 0; }
    bool is_full() const { return rank() == ambient_; }

    // Membership in the underlying lattice (not just the rational span).
    bool contains(const std::vector<Int>& w) const {
        if (w.size() != ambient_)
            throw std::invalid_argument("PrimitiveSubtorus::contains: wrong dimension");
        std::vector<Int> rem = w;
        std::size_t ri = 0;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (ri < basis_.rows() && basis_.at(ri, c) != 0) {
                const Int& p = basis_.at(ri, c);
                if (rem[c] % p != 0) return false;
                Int q = rem[c] / p;
                if (q != 0)
                    for (std::size_t j = c; j < ambient_; ++j) rem[j] -= q * basis_.at(ri, j);
                ++ri;
            } else if (rem[c] != 0) {
                return false;
            }
        }
        return true;
    }

    bool contains(const PrimitiveSubtorus& o) const {
        if (o.ambient_ != ambient_)
            throw std::invalid_argument("PrimitiveSubtorus::contains: ambient mismatch");
        for (std::size_t i = 0; i < o.basis_.rows(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    // Canonical generator of a rank-1 subtorus.
    PrimitiveVector generator() const {
        if (rank() != 1)
            throw std::invalid_argument("PrimitiveSubtorus::generator: rank is not 1");
        return PrimitiveVector(basis_.row(0));
    }

    // Image under a torus automorphism acting by v -> v * p on the lattice.
    PrimitiveSubtorus transformed_by(const IntMatrix& p) const {
        if (!is_unimodular(p) || p.rows() != ambient_)
            throw std::invalid_argument("PrimitiveSubtorus::transformed_by: not an automorphism");
        std::vector<std::vector<Int>> rows;
        rows.reserve(basis_.rows());
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            rows.push_back(apply_row(basis_.row(i), p));
        return from_vectors(ambient_, rows);
    }

    std::string to_string() const {
        if (is_trivial()) return "{1}";
        if (is_full()) return "T";
        std::ostringstream os;
        os << "span";
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            os << (i ? "," : "") << PrimitiveVector(basis_.row(i)).to_string();
        }
        return os.str();
    }

private:
    PrimitiveSubtorus(std::size_t ambient, IntMatrix basis)
        : ambient_(ambient), basis_(std::move(basis)) {}

    std::size_t ambient_;
    IntMatrix basis_;  // Hermite basis of a saturated lattice
};

inline PrimitiveSubtorus subtorus_from_vectors(std::size_t ambient,
                                               const std::vector<std::vector<Int>>& gens) {
    return PrimitiveSubtorus::from_vectors(ambient, gens);
}

inline PrimitiveSubtorus line_of(const PrimitiveVector& v) {
    return PrimitiveSubtorus::from_vectors(v.dimension(), {v.coords()});
}

// Unique integer matrix p with sources[i] * p = signs[i] * targets[i], if it
// exists, is integral and is unimodular; otherwise nullopt. The sources must
// form a basis of Q^m for uniqueness, which the determinant check enforces.
inline std::optional<IntMatrix> solve_unimodular_map(
    const std::vector<std::vector<Int>>& sources,
    const std::vector<std::vector<Int>>& targets,
    const std::vector<int>& signs) {
    const std::size_t m = sources.size();
    if (targets.size() != m || signs.size() != m)
        throw std::invalid_argument("solve_unimodular_map: size mismatch");
    IntMatrix s(m, m), t(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        if (sources[i].size() != m || targets[i].size() != m)
            throw std::invalid_argument("solve_unimodular_map: dimension mismatch");
        for (std::size_t j = 0; j < m; ++j) {
            s.at(i, j) = sources[i][j];
            t.at(i, j) = Int(signs[i]) * targets[i][j];
        }
    }
    const Int ds = determinant(s);
    if (ds == 0) return std::nullopt;
    // p = s^{-1} t = adj(s) t / det(s), valid only if the division is exact.
    IntMatrix num = adjugate(s) * t;
    IntMatrix p(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (num.at(i, j) % ds != 0) return std::nullopt;
            p.at(i, j) = num.at(i, j) / ds;
        }
    if (!is_unimodular(p)) return std::nullopt;
    return p;
}

}  // namespace tstrata
