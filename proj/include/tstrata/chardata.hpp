#pragma once

// Characteristic data (Q, lambda, c): the orbit space, the stratum-to-subtorus
// assignment, and the Chern class of the free part. Construction validates
// everything; a CharacteristicData value is valid by virtue of existing.

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <tstrata/lattice.hpp>
#include <tstrata/orbit_space.hpp>

namespace tstrata {

struct Lmn {
    std::size_t l = 0, m = 1, n = 0;
    bool operator==(const Lmn&) const = default;
    bool operator<(const Lmn& o) const {
        return std::tuple(l, m, n) < std::tuple(o.l, o.m, o.n);
    }
    std::size_t dim_space() const { return l + m + n; }
    std::size_t dim_orbit() const { return l + n; }
    std::string to_string() const {
        std::ostringstream os;
        os << '(' << l << ',' << m << ',' << n << ')';
        return os.str();
    }
};

// The dimension triples realizable by a locally standard action of T^m whose
// orbit space has an l-dimensional lowest skeleton and an n-step filtration:
// n never exceeds m (stabilizer ranks), the orbit space has dimension at most
// 2, and the total space has dimension 1..3.
inline std::vector<Lmn> admissible_triples() {
    std::vector<Lmn> out;
    for (std::size_t dim_x = 1; dim_x <= 3; ++dim_x)
        for (std::size_t dim_q = 0; dim_q <= 2; ++dim_q)
            for (std::size_t l = dim_q + 1; l-- > 0;) {  // larger l first
                std::size_t n = dim_q - l;
                if (l + n > dim_x) continue;
                std::size_t m = dim_x - l - n;
                if (m < 1 || n > m) continue;
                out.push_back({l, m, n});
            }
    return out;
}

inline Lmn infer_lmn(const OrbitSpace& q, std::size_t m) {
    Lmn lmn{q.skeleton_dim(), m, q.depth()};
    for (const Lmn& t : admissible_triples())
        if (t == lmn) return lmn;
    throw std::invalid_argument("unsupported dimension profile (l,m,n) = " +
                                lmn.to_string());
}

struct CharacteristicFunctor {
    std::size_t torus_rank = 1;
    std::map<std::string, PrimitiveSubtorus> assignment;

    const PrimitiveSubtorus& at(const std::string& stratum) const {
        auto it = assignment.find(stratum);
        if (it == assignment.end())
            throw std::invalid_argument("no label for stratum '" + stratum + "'");
        return it->second;
    }
    bool operator==(const CharacteristicFunctor& o) const {
        return torus_rank == o.torus_rank && assignment == o.assignment;
    }
};

// Top strata always carry the trivial subtorus; for m = 1 the lower strata
// can only carry T^1, so the functor is forced and callers may omit labels.
inline CharacteristicFunctor default_functor(const OrbitSpace& q, std::size_t m) {
    CharacteristicFunctor f;
    f.torus_rank = m;
    const std::size_t top = q.dimension();
    for (const Stratum& s : strata_poset(q)) {
        if (s.dimension == top)
            f.assignment.emplace(s.id, PrimitiveSubtorus::trivial(m));
        else if (m == 1)
            f.assignment.emplace(s.id, PrimitiveSubtorus::full(1));
    }
    return f;
}

inline ValidationReport validate_functor(const OrbitSpace& q,
                                         const CharacteristicFunctor& lambda) {
    ValidationReport report;
    auto add = [&](std::string code, std::string subject, std::string message) {
        report.violations.push_back({std::move(code), std::move(subject),
                                     std::move(message)});
    };
    auto poset = strata_poset(q);
    const std::size_t dim_q = q.dimension();
    std::map<std::string, const Stratum*> by_id;
    for (const auto& s : poset) by_id.emplace(s.id, &s);

    for (const auto& [id, subtorus] : lambda.assignment) {
        if (!by_id.count(id)) {
            add("unknown-stratum", id, "label on nonexistent stratum '" + id + "'");
            continue;
        }
        if (subtorus.ambient_rank() != lambda.torus_rank)
            add("rank-mismatch", id,
                "label of '" + id + "' lives in a rank-" +
                    std::to_string(subtorus.ambient_rank()) + " torus, expected " +
                    std::to_string(lambda.torus_rank));
    }
    for (const auto& s : poset) {
        auto it = lambda.assignment.find(s.id);
        if (it == lambda.assignment.end()) {
            add("missing-label", s.id, "stratum '" + s.id + "' has no label");
            continue;
        }
        if (it->second.ambient_rank() != lambda.torus_rank) continue;  // reported
        const std::size_t want = dim_q - s.dimension;
        if (it->second.rank() != want)
            add("codimension-rule", s.id,
                "codimension rule: stratum '" + s.id + "' has codimension " +
                    std::to_string(want) + " but its label has rank " +
                    std::to_string(it->second.rank()));
    }
    // Monotonicity on the poset: the label of a stratum contains the labels
    // of everything whose closure it meets. With the codimension rule in
    // force this only bites for deeper filtrations, but check it anyway.
    for (const auto& s : poset) {
        auto here = lambda.assignment.find(s.id);
        if (here == lambda.assignment.end()) continue;
        for (const auto& below_id : s.closure_contains) {
            auto below = lambda.assignment.find(below_id);
            if (below == lambda.assignment.end()) continue;
            if (here->second.ambient_rank() != lambda.torus_rank ||
                below->second.ambient_rank() != lambda.torus_rank)
                continue;
            if (!below->second.contains(here->second))
                add("monotonicity", s.id,
                    "label of '" + s.id + "' is not contained in the label of '" +
                        below_id + "'");
        }
    }
    return report;
}

class ChernClass {
public:
    enum class Kind { zero_group, free_vector, torsion_vector };

    static ChernClass zero() { return ChernClass(Kind::zero_group, {}, {}); }
    static ChernClass free_vector(std::vector<Int> c) {
        return ChernClass(Kind::free_vector, std::move(c), {});
    }
    static ChernClass torsion_vector(std::vector<int> bits) {
        for (auto& b : bits) b = ((b % 2) + 2) % 2;
        return ChernClass(Kind::torsion_vector, {}, std::move(bits));
    }

    Kind kind() const { return kind_; }
    const std::vector<Int>& free() const { return free_; }
    const std::vector<int>& torsion() const { return torsion_; }

    bool is_zero() const {
        switch (kind_) {
        case Kind::zero_group: return true;
        case Kind::free_vector:
            for (const auto& x : free_)
                if (x != 0) return false;
            return true;
        case Kind::torsion_vector:
            for (auto b : torsion_)
                if (b != 0) return false;
            return true;
        }
        return true;
    }

    ChernClass negated() const {
        if (kind_ != Kind::free_vector) return *this;
        std::vector<Int> c = free_;
        for (auto& x : c) x = -x;
        return free_vector(std::move(c));
    }

    // Right action of a torus automorphism on the coefficient vector.
    ChernClass transformed_by(const IntMatrix& p) const {
        switch (kind_) {
        case Kind::zero_group:
            return *this;
        case Kind::free_vector:
            return free_vector(apply_row(free_, p));
        case Kind::torsion_vector: {
            std::vector<Int> lifted(torsion_.begin(), torsion_.end());
            std::vector<Int> image = apply_row(lifted, p);
            std::vector<int> bits(image.size());
            for (std::size_t i = 0; i < image.size(); ++i)
                bits[i] = static_cast<int>(((image[i] % 2) + 2) % 2);
            return torsion_vector(std::move(bits));
        }
        }
        return *this;
    }

    bool operator==(const ChernClass& o) const {
        return kind_ == o.kind_ && free_ == o.free_ && torsion_ == o.torsion_;
    }

    std::string to_string() const {
        std::ostringstream os;
        switch (kind_) {
        case Kind::zero_group: return "0";
        case Kind::free_vector:
            os << '(';
            for (std::size_t i = 0; i < free_.size(); ++i)
                os << (i ? "," : "") << free_[i];
            os << ')';
            return os.str();
        case Kind::torsion_vector:
            os << '(';
            for (std::size_t i = 0; i < torsion_.size(); ++i)
                os << (i ? "," : "") << torsion_[i] << " mod 2";
            os << ')';
            return os.str();
        }
        return "?";
    }

private:
    ChernClass(Kind k, std::vector<Int> f, std::vector<int> t)
        : kind_(k), free_(std::move(f)), torsion_(std::move(t)) {}
    Kind kind_;
    std::vector<Int> free_;
    std::vector<int> torsion_;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report)
        : std::runtime_error(summarize(report)), report_(std::move(report)) {}
    const ValidationReport& report() const { return report_; }

private:
    static std::string summarize(const ValidationReport& r) {
        if (r.violations.empty()) return "validation failed";
        std::ostringstream os;
        os << r.violations.front().message;
        if (r.violations.size() > 1)
            os << " (+" << r.violations.size() - 1 << " more)";
        return os.str();
    }
    ValidationReport report_;
};

class CharacteristicData {
public:
    static CharacteristicData make(OrbitSpace q, CharacteristicFunctor lambda,
                                   ChernClass c) {
        ValidationReport report = validate_pseudomanifold(q);
        std::optional<Lmn> lmn;
        try {
            lmn = infer_lmn(q, lambda.torus_rank);
        } catch (const std::invalid_argument& e) {
            report.violations.push_back({"dimension-profile", "space", e.what()});
        }
        {
            ValidationReport functor_report = validate_functor(q, lambda);
            for (auto& v : functor_report.violations)
                report.violations.push_back(std::move(v));
        }
        c = check_chern(q, lambda.torus_rank, std::move(c), report);
        if (!report.ok()) throw ValidationError(std::move(report));
        return CharacteristicData(std::move(q), std::move(lambda), std::move(c), *lmn);
    }

    const OrbitSpace& space() const { return q_; }
    const CharacteristicFunctor& functor() const { return lambda_; }
    const ChernClass& chern() const { return c_; }
    const Lmn& lmn() const { return lmn_; }
    const PrimitiveSubtorus& label(const std::string& stratum) const {
        return lambda_.at(stratum);
    }

    // Image under a torus automorphism: every subtorus and the Chern vector
    // move by the same p. Revalidates, which keeps the class invariant airtight.
    CharacteristicData transformed_by(const IntMatrix& p) const {
        CharacteristicFunctor f;
        f.torus_rank = lambda_.torus_rank;
        for (const auto& [id, sub] : lambda_.assignment)
            f.assignment.emplace(id, sub.transformed_by(p));
        return make(q_, std::move(f), c_.transformed_by(p));
    }

    bool operator==(const CharacteristicData& o) const {
        return q_ == o.q_ && lambda_ == o.lambda_ && c_ == o.c_;
    }

private:
    CharacteristicData(OrbitSpace q, CharacteristicFunctor lambda, ChernClass c,
                       Lmn lmn)
        : q_(std::move(q)), lambda_(std::move(lambda)), c_(std::move(c)), lmn_(lmn) {}

    // The Chern class lives in H^2 of the base, which is nonzero only for
    // closed surfaces: Z^m if orientable, (Z/2)^m if not. Everything else
    // must carry the zero group; zero vectors normalize to the right variant.
    static ChernClass check_chern(const OrbitSpace& q, std::size_t m, ChernClass c,
                                  ValidationReport& report) {
        auto add = [&](std::string message) {
            report.violations.push_back({"chern-class", "chern", std::move(message)});
        };
        if (q.kind() != SpaceKind::closed_surface) {
            if (!c.is_zero())
                add("the base has no 2-dimensional cohomology; the Chern class "
                    "must be zero");
            return ChernClass::zero();
        }
        if (q.surface_orientable()) {
            if (c.kind() == ChernClass::Kind::zero_group)
                return ChernClass::free_vector(std::vector<Int>(m, Int(0)));
            if (c.kind() != ChernClass::Kind::free_vector) {
                add("orientable surface needs an integer Chern vector");
                return c;
            }
            if (c.free().size() != m)
                add("Chern vector has length " + std::to_string(c.free().size()) +
                    ", expected " + std::to_string(m));
            return c;
        }
        if (c.kind() == ChernClass::Kind::zero_group)
            return ChernClass::torsion_vector(std::vector<int>(m, 0));
        if (c.kind() != ChernClass::Kind::torsion_vector) {
            add("non-orientable surface carries a mod-2 Chern vector");
            return c;
        }
        if (c.torsion().size() != m)
            add("mod-2 Chern vector has length " + std::to_string(c.torsion().size()) +
                ", expected " + std::to_string(m));
        return c;
    }

    OrbitSpace q_;
    CharacteristicFunctor lambda_;
    ChernClass c_;
    Lmn lmn_;
};

struct ConditionReport {
    bool holds = false;
    std::string explanation;
};

// Whether the inclusion of the free part (the union of top strata) is a
// homotopy equivalence. Decided per component on the combinatorial model;
// for 2-stratifolds with singular circles we do not certify the positive
// cases and answer conservatively.
inline ConditionReport check_homotopy_equivalence_condition(const OrbitSpace& q) {
    switch (q.kind()) {
    case SpaceKind::points:
    case SpaceKind::circle:
    case SpaceKind::closed_surface:
        return {true, "the filtration has a single step: the free part is the whole space"};
    case SpaceKind::graph: {
        for (const OrbitSpace& part : components(q)) {
            if (is_interval(part)) continue;
            if (part.edges().size() >= 2)
                return {false,
                        "a connected graph with two or more edges has a "
                        "disconnected free part"};
            return {false, "a loop is not homotopy equivalent to its open edge"};
        }
        return {true,
                "every component is an interval: the component and its open "
                "edge are both contractible"};
    }
    case SpaceKind::stratifold:
        return {false,
                "not certified: removing the singular circles can change the "
                "homotopy type, and the combinatorial model does not decide it"};
    }
    return {false, "unsupported space"};
}

// Whether H^2 of the free part vanishes with Z^m coefficients, which makes
// the extension step of the semi-trivial classification surjective.
inline ConditionReport check_condition_surjective(const OrbitSpace& q, std::size_t m) {
    (void)m;  // vanishing below holds for every coefficient rank
    switch (q.kind()) {
    case SpaceKind::graph:
        return {true, "H^2 of a 1-complex vanishes"};
    case SpaceKind::stratifold:
        return {true, "the free part is a non-compact surface, so its H^2 vanishes"};
    default:
        throw std::invalid_argument(
            "check_condition_surjective: base is not semi-trivial with n = 1");
    }
}

}  // namespace tstrata
