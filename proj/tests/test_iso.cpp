#include <catch2/catch_amalgamated.hpp>

#include <tstrata/iso.hpp>

#include "data_gen.hpp"

using namespace tstrata;

namespace {

PrimitiveVector pv(int a, int b) {
    return PrimitiveVector(std::vector<Int>{Int(a), Int(b)});
}

CharacteristicData surface_data(bool orientable, std::size_t genus, ChernClass c) {
    OrbitSpace q = OrbitSpace::closed_surface(orientable, genus);
    return CharacteristicData::make(q, default_functor(q, 1), std::move(c));
}

CharacteristicData stratifold_data(OrbitSpace q) {
    auto f = default_functor(q, 1);
    return CharacteristicData::make(std::move(q), std::move(f), ChernClass::zero());
}

CharacteristicData plain_graph_data(std::vector<std::string> vertices,
                                    std::vector<GraphEdge> edges) {
    OrbitSpace q = OrbitSpace::graph(std::move(vertices), std::move(edges));
    auto f = default_functor(q, 1);
    return CharacteristicData::make(std::move(q), std::move(f), ChernClass::zero());
}

const std::string* record_field(const InvariantRecord& r, const std::string& key) {
    return r.find(key);
}

}  // namespace

TEST_CASE("invariant record pins the determinant multisets") {
    auto d = testgen::interval_data(pv(1, 0), pv(0, 1));
    auto rec = weak_iso_invariants(d);
    REQUIRE(record_field(rec, "pair determinant multiset"));
    CHECK(*record_field(rec, "pair determinant multiset") == "{1}");
    CHECK(*record_field(rec, "edge determinant multiset") == "{1}");
    CHECK(*record_field(rec, "dimension profile") == d.lmn().to_string());

    auto lens = testgen::interval_data(pv(1, 0), pv(1, 2));
    CHECK(*record_field(weak_iso_invariants(lens), "pair determinant multiset") ==
          "{2}");

    // Triangle with pairwise unimodular labels.
    OrbitSpace tri = OrbitSpace::graph({"a", "b", "c"},
                                       {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    auto f = default_functor(tri, 2);
    f.assignment.emplace("a", line_of(pv(1, 0)));
    f.assignment.emplace("b", line_of(pv(0, 1)));
    f.assignment.emplace("c", line_of(pv(1, 1)));
    auto dtri = CharacteristicData::make(tri, f, ChernClass::zero());
    CHECK(*record_field(weak_iso_invariants(dtri), "pair determinant multiset") ==
          "{1,1,1}");
}

TEST_CASE("strict isomorphism matches intervals with swapped labels") {
    auto d1 = testgen::interval_data(pv(1, 0), pv(0, 1));
    auto d2 = testgen::interval_data(pv(0, 1), pv(1, 0));
    auto v = decide_iso(d1, d2, false);
    REQUIRE(v.is_isomorphic());
    CHECK(v.witness().psi == IntMatrix::identity(2));
    CHECK(v.witness().stratum_map.at("v0") == "v1");
    CHECK(v.witness().stratum_map.at("v1") == "v0");
    CHECK(verify_witness(d1, d2, v.witness(), false));
}

TEST_CASE("weak isomorphism separates interval label pairs by determinant") {
    auto d1 = testgen::interval_data(pv(1, 0), pv(0, 1));
    auto d2 = testgen::interval_data(pv(1, 0), pv(1, 2));
    auto v = decide_iso(d1, d2, true);
    REQUIRE(v.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(v.certificate().invariant == "edge determinant multiset");
    CHECK(v.certificate().left == "{1}");
    CHECK(v.certificate().right == "{2}");

    auto lens2 = testgen::interval_data(pv(1, 0), pv(1, 2));
    auto lens3 = testgen::interval_data(pv(1, 0), pv(1, 3));
    auto w = decide_iso(lens2, lens3, true);
    REQUIRE(w.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(w.certificate().invariant == "edge determinant multiset");
    CHECK(w.certificate().left != w.certificate().right);
}

TEST_CASE("strict rejects a label change that weak absorbs") {
    auto d1 = testgen::interval_data(pv(1, 0), pv(0, 1));
    IntMatrix shear{{1, 1}, {0, 1}};
    auto d2 = d1.transformed_by(shear);
    auto strict = decide_iso(d1, d2, false);
    REQUIRE(strict.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(strict.certificate().invariant == "label multiset");
    auto weak = decide_iso(d1, d2, true);
    REQUIRE(weak.is_isomorphic());
    CHECK(verify_witness(d1, d2, weak.witness(), true));
}

TEST_CASE("weak isomorphism accepts transformed and relabeled graph data") {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        auto d = testgen::random_graph_data(rng, 2, 6, trial % 2 == 0);
        IntMatrix psi = testgen::random_unimodular(rng, 2, 10);
        auto moved = testgen::random_relabel(rng, d.transformed_by(psi));
        auto v = decide_iso(d, moved, true);
        INFO("trial " << trial);
        REQUIRE(v.is_isomorphic());
        CHECK(verify_witness(d, moved, v.witness(), true));
        CHECK(weak_iso_invariants(d).fields ==
              weak_iso_invariants(moved).fields);
        CHECK(homology(build_canonical_complex(d)) ==
              homology(build_canonical_complex(moved)));
    }
}

TEST_CASE("strict isomorphism survives relabeling and implies weak") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = testgen::random_graph_data(rng, trial % 2 ? 1 : 2, 6);
        auto renamed = testgen::random_relabel(rng, d);
        auto strict = decide_iso(d, renamed, false);
        INFO("trial " << trial);
        REQUIRE(strict.is_isomorphic());
        CHECK(strict.witness().psi ==
              IntMatrix::identity(d.functor().torus_rank));
        CHECK(verify_witness(d, renamed, strict.witness(), false));
        CHECK(decide_iso(d, renamed, true).is_isomorphic());
    }
}

TEST_CASE("verdicts are symmetric in their arguments") {
    std::mt19937_64 rng(8181);
    std::vector<CharacteristicData> corpus;
    corpus.push_back(testgen::interval_data(pv(1, 0), pv(0, 1)));
    corpus.push_back(testgen::interval_data(pv(1, 0), pv(1, 2)));
    corpus.push_back(testgen::interval_data(pv(2, 1), pv(1, 1)));
    for (int i = 0; i < 6; ++i)
        corpus.push_back(testgen::random_graph_data(rng, 2, 5));
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = 0; j < corpus.size(); ++j) {
            for (bool weak : {false, true}) {
                auto ab = decide_iso(corpus[i], corpus[j], weak);
                auto ba = decide_iso(corpus[j], corpus[i], weak);
                INFO("pair " << i << "," << j << " weak=" << weak);
                CHECK(ab.kind() == ba.kind());
            }
        }
}

TEST_CASE("every decidable datum is isomorphic to itself") {
    std::mt19937_64 rng(60601);
    for (int trial = 0; trial < 25; ++trial) {
        OrbitSpace q = testgen::random_valid_space(rng);
        std::size_t m = 1;
        if (q.kind() == SpaceKind::points) m = 1 + trial % 3;
        if (q.kind() == SpaceKind::circle || q.kind() == SpaceKind::graph)
            m = 1 + trial % 2;
        auto f = default_functor(q, m);
        if (q.kind() == SpaceKind::graph && m == 2)
            for (const auto& v : q.vertices())
                f.assignment.emplace(v, line_of(testgen::random_primitive(rng, 2)));
        auto d = CharacteristicData::make(q, f, ChernClass::zero());
        for (bool weak : {false, true}) {
            auto v = decide_iso(d, d, weak);
            INFO("trial " << trial << " weak=" << weak << " kind "
                          << space_kind_name(q.kind()));
            if (q.kind() == SpaceKind::stratifold && !is_normal(q).normal) {
                CHECK(v.kind() == IsoVerdict::Kind::unknown);
            } else {
                REQUIRE(v.is_isomorphic());
                CHECK(verify_witness(d, d, v.witness(), weak));
            }
        }
    }
}

TEST_CASE("surface data compares through the chern class") {
    auto c = [](int k) { return ChernClass::free_vector({Int(k)}); };
    SECTION("strict accepts sign flips across orientation reversal") {
        auto a = surface_data(true, 2, c(3));
        auto b = surface_data(true, 2, c(-3));
        auto v = decide_iso(a, b, false);
        REQUIRE(v.is_isomorphic());
        CHECK_FALSE(v.witness().note.empty());
        CHECK(decide_iso(a, surface_data(true, 2, c(3)), false).is_isomorphic());
    }
    SECTION("contents separate weak classes") {
        auto v = decide_iso(surface_data(true, 2, c(3)), surface_data(true, 2, c(5)),
                            true);
        REQUIRE(v.kind() == IsoVerdict::Kind::not_isomorphic);
        CHECK(v.certificate().invariant == "chern content");
        CHECK(v.certificate().left == "3");
        CHECK(v.certificate().right == "5");
        CHECK(decide_iso(surface_data(true, 2, c(3)), surface_data(true, 2, c(5)),
                         false)
                  .kind() == IsoVerdict::Kind::not_isomorphic);
    }
    SECTION("zero against nonzero") {
        auto v = decide_iso(surface_data(true, 1, ChernClass::zero()),
                            surface_data(true, 1, c(2)), true);
        REQUIRE(v.kind() == IsoVerdict::Kind::not_isomorphic);
        CHECK(v.certificate().invariant == "chern content");
    }
    SECTION("genus and orientability are screened first") {
        auto v = decide_iso(surface_data(true, 1, c(1)), surface_data(true, 2, c(1)),
                            false);
        REQUIRE(v.kind() == IsoVerdict::Kind::not_isomorphic);
        CHECK(v.certificate().invariant == "surface type");
    }
    SECTION("mod-2 classes on non-orientable bases") {
        auto one = ChernClass::torsion_vector({1});
        auto zero = ChernClass::torsion_vector({0});
        auto v = decide_iso(surface_data(false, 1, one), surface_data(false, 1, zero),
                            true);
        REQUIRE(v.kind() == IsoVerdict::Kind::not_isomorphic);
        CHECK(v.certificate().invariant == "chern mod-2 class");
        auto w = decide_iso(surface_data(false, 2, one), surface_data(false, 2, one),
                            false);
        REQUIRE(w.is_isomorphic());
    }
}

TEST_CASE("point and low-dimensional bases") {
    auto points = [](std::size_t k, std::size_t m) {
        OrbitSpace q = OrbitSpace::points(k);
        return CharacteristicData::make(q, default_functor(q, m),
                                        ChernClass::zero());
    };
    CHECK(decide_iso(points(3, 2), points(3, 2), false).is_isomorphic());
    auto v = decide_iso(points(3, 2), points(4, 2), true);
    REQUIRE(v.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(v.certificate().invariant == "component count");

    auto circle = [](std::size_t m) {
        OrbitSpace q = OrbitSpace::circle();
        return CharacteristicData::make(q, default_functor(q, m),
                                        ChernClass::zero());
    };
    CHECK(decide_iso(circle(1), circle(1), true).is_isomorphic());
    auto w = decide_iso(circle(1), circle(2), true);
    REQUIRE(w.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(w.certificate().invariant == "dimension profile");
}

TEST_CASE("normal stratifolds compare by their surface forms") {
    OrbitSpace disk = OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 1}}}});
    OrbitSpace disk2 = OrbitSpace::stratifold({"r"}, {{"s", true, 0, {{"r", 1}}}});
    auto v = decide_iso(stratifold_data(disk), stratifold_data(disk2), false);
    REQUIRE(v.is_isomorphic());
    CHECK(v.witness().stratum_map.at("c") == "r");
    CHECK(v.witness().stratum_map.at("p") == "s");

    OrbitSpace moebius =
        OrbitSpace::stratifold({"c"}, {{"p", false, 1, {{"c", 1}}}});
    auto w = decide_iso(stratifold_data(disk), stratifold_data(moebius), true);
    REQUIRE(w.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(w.certificate().invariant == "component surface forms");
}

TEST_CASE("disconnected normal stratifolds pair components by form") {
    OrbitSpace a = OrbitSpace::stratifold(
        {"c0", "c1", "c2"},
        {{"p0", true, 0, {{"c0", 1}}}, {"p1", true, 0, {{"c1", 1}, {"c2", 1}}}});
    OrbitSpace b = OrbitSpace::stratifold(
        {"d0", "d1", "d2"},
        {{"q0", true, 0, {{"d0", 1}, {"d1", 1}}}, {"q1", true, 0, {{"d2", 1}}}});
    auto da = stratifold_data(a);
    auto db = stratifold_data(b);
    auto v = decide_iso(da, db, false);
    REQUIRE(v.is_isomorphic());
    CHECK(verify_witness(da, db, v.witness(), false));
    CHECK(v.witness().stratum_map.at("p0") == "q1");
    CHECK(v.witness().stratum_map.at("p1") == "q0");
}

TEST_CASE("non-normal stratifolds stay undecided when invariants agree") {
    OrbitSpace pinched = OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 2}}}});
    auto d = stratifold_data(pinched);
    auto v = decide_iso(d, d, true);
    REQUIRE(v.kind() == IsoVerdict::Kind::unknown);
    CHECK(v.reason().find("not decided") != std::string::npos);

    OrbitSpace other = OrbitSpace::stratifold({"c"}, {{"p", true, 1, {{"c", 2}}}});
    auto w = decide_iso(d, stratifold_data(other), true);
    REQUIRE(w.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(w.certificate().invariant == "incidence canonical form");

    OrbitSpace disk = OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 1}}}});
    auto x = decide_iso(d, stratifold_data(disk), true);
    REQUIRE(x.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(x.certificate().invariant == "normality");
}

TEST_CASE("equal degree sequences do not fool the graph comparison") {
    // Two trees on 7 vertices with degree multiset {1,1,1,1,2,3,3}: in the
    // first the two branch vertices are adjacent, in the second they are not.
    auto t1 = plain_graph_data({"1", "2", "3", "4", "5", "6", "7"},
                               {{"1", "2"},
                                {"2", "3"},
                                {"3", "4"},
                                {"3", "5"},
                                {"2", "6"},
                                {"6", "7"}});
    auto t2 = plain_graph_data({"1", "2", "3", "4", "5", "6", "7"},
                               {{"1", "2"},
                                {"2", "3"},
                                {"3", "4"},
                                {"4", "5"},
                                {"2", "6"},
                                {"4", "7"}});
    auto r1 = weak_iso_invariants(t1);
    auto r2 = weak_iso_invariants(t2);
    REQUIRE(*record_field(r1, "degree multiset") ==
            *record_field(r2, "degree multiset"));
    for (bool weak : {false, true}) {
        auto v = decide_iso(t1, t2, weak);
        REQUIRE(v.kind() == IsoVerdict::Kind::not_isomorphic);
        CHECK(v.certificate().invariant == "unlabeled graph canonical form");
    }
}

TEST_CASE("loops and parallel edges are part of the graph structure") {
    auto loop = plain_graph_data({"v"}, {{"v", "v"}});
    CHECK(decide_iso(loop, loop, true).is_isomorphic());
    auto two_loops = plain_graph_data({"v"}, {{"v", "v"}, {"v", "v"}});
    auto v = decide_iso(loop, two_loops, true);
    REQUIRE(v.kind() == IsoVerdict::Kind::not_isomorphic);
    CHECK(v.certificate().invariant == "edge count");

    auto path = plain_graph_data({"a", "b"}, {{"a", "b"}});
    auto doubled = plain_graph_data({"a", "b"}, {{"a", "b"}, {"a", "b"}});
    auto w = decide_iso(path, doubled, false);
    CHECK(w.kind() == IsoVerdict::Kind::not_isomorphic);
}

TEST_CASE("witness tampering is caught by verify_witness") {
    auto d1 = testgen::interval_data(pv(1, 0), pv(0, 1));
    auto d2 = testgen::interval_data(pv(0, 1), pv(1, 0));
    auto v = decide_iso(d1, d2, false);
    REQUIRE(v.is_isomorphic());

    IsoWitness broken = v.witness();
    std::swap(broken.stratum_map.at("v0"), broken.stratum_map.at("v1"));
    CHECK_FALSE(verify_witness(d1, d2, broken, false));

    IsoWitness wrong_psi = v.witness();
    wrong_psi.psi = IntMatrix{{1, 1}, {0, 1}};
    CHECK_FALSE(verify_witness(d1, d2, wrong_psi, false));
    CHECK_FALSE(verify_witness(d1, d2, wrong_psi, true));

    IsoWitness dropped = v.witness();
    dropped.stratum_map.erase("e#0");
    CHECK_FALSE(verify_witness(d1, d2, dropped, false));
}

TEST_CASE("the invariant record does not depend on presentation") {
    std::mt19937_64 rng(271828);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = testgen::random_graph_data(rng, 2, 6, trial % 2 == 0);
        IntMatrix psi = testgen::random_unimodular(rng, 2, 8);
        auto moved = testgen::random_relabel(rng, d.transformed_by(psi));
        INFO("trial " << trial);
        CHECK(weak_iso_invariants(d).fields == weak_iso_invariants(moved).fields);
    }
}
