#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <tstrata/classify.hpp>

#include "data_gen.hpp"

using namespace tstrata;

namespace {

PrimitiveVector pv(int a, int b) {
    return PrimitiveVector(std::vector<Int>{Int(a), Int(b)});
}

HomologyProfile profile(std::initializer_list<HomologyGroup> groups) {
    HomologyProfile p;
    for (const auto& g : groups) p.groups.push_back(g);
    return p;
}

CharacteristicData plain_data(OrbitSpace q, std::size_t m,
                              ChernClass c = ChernClass::zero()) {
    auto f = default_functor(q, m);
    return CharacteristicData::make(std::move(q), std::move(f), std::move(c));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("interval trichotomy") {
    SECTION("basis labels give the 3-sphere") {
        auto d = testgen::interval_data(pv(1, 0), pv(0, 1));
        auto r = classify(d);
        CHECK(r.named_type == "Sphere3");
        CHECK(r.display == "the 3-sphere S^3");
        REQUIRE(r.homology.has_value());
        CHECK(*r.homology ==
              profile({{1, {}}, {0, {}}, {0, {}}, {1, {}}}));
        CHECK(std::count(r.tags.begin(), r.tags.end(), "MomentAngleS3") == 1);
        CHECK(r.manifold.value);
    }
    SECTION("equal label lines give S^2 x S^1") {
        auto d = testgen::interval_data(pv(1, 0), pv(1, 0));
        auto r = classify(d);
        CHECK(r.named_type == "S2xS1");
        REQUIRE(r.homology.has_value());
        CHECK(*r.homology ==
              profile({{1, {}}, {1, {}}, {1, {}}, {1, {}}}));
        CHECK(r.manifold.value);
    }
    SECTION("order-5 labels give the lens space") {
        auto d = testgen::interval_data(pv(1, 0), pv(1, 5));
        auto r = classify(d);
        CHECK(r.named_type == "LensSpaceOrder(5)");
        CHECK(r.display == "lens space, order 5");
        REQUIRE(r.homology.has_value());
        CHECK(*r.homology ==
              profile({{1, {}}, {0, {Int(5)}}, {0, {}}, {1, {}}}));
    }
    SECTION("random coprime pairs land on the stated order") {
        std::mt19937_64 rng(11213);
        for (int trial = 0; trial < 10; ++trial) {
            std::uniform_int_distribution<int> kk(2, 30), qq(-30, 30);
            int k = kk(rng), q = qq(rng);
            while (gcd(Int(q), Int(k)) != 1) q = qq(rng);
            auto d = testgen::interval_data(
                pv(1, 0), primitivize(std::vector<Int>{Int(q), Int(k)}));
            auto r = classify(d);
            INFO("q=" << q << " k=" << k);
            CHECK(r.named_type == "LensSpaceOrder(" + std::to_string(k) + ")");
            REQUIRE(r.homology.has_value());
            CHECK(r.homology->groups[1] == HomologyGroup{0, {Int(k)}});
        }
    }
    SECTION("the named type only depends on the weak isomorphism class") {
        std::mt19937_64 rng(90125);
        std::vector<CharacteristicData> seeds;
        seeds.push_back(testgen::interval_data(pv(1, 0), pv(0, 1)));
        seeds.push_back(testgen::interval_data(pv(1, 0), pv(1, 0)));
        seeds.push_back(testgen::interval_data(pv(1, 0), pv(3, 7)));
        for (const auto& d : seeds)
            for (int trial = 0; trial < 10; ++trial) {
                IntMatrix psi = testgen::random_unimodular(rng, 2, 10);
                auto moved = d.transformed_by(psi);
                CHECK(classify(moved).named_type == classify(d).named_type);
            }
    }
}

TEST_CASE("rank-1 interval is the quasitoric CP^1") {
    OrbitSpace q = OrbitSpace::interval();
    auto r = classify(plain_data(q, 1));
    CHECK(r.named_type == "QuasitoricCP1");
    CHECK(r.manifold.value);
    CHECK(r.manifold.reason.find("interval") != std::string::npos);
    REQUIRE(r.homology.has_value());
    CHECK(*r.homology == profile({{1, {}}, {0, {}}, {1, {}}}));
}

TEST_CASE("loop graph is a pseudomanifold but not a manifold") {
    OrbitSpace q = OrbitSpace::graph({"v"}, {{"v", "v"}});
    auto r = classify(plain_data(q, 1));
    CHECK(r.named_type == "CanonicalOverGraph(1 vertex, 1 edge)");
    CHECK_FALSE(r.manifold.value);
    CHECK(r.manifold.reason.find("link") != std::string::npos);
    REQUIRE(r.homology.has_value());
    CHECK(*r.homology == profile({{1, {}}, {1, {}}, {1, {}}}));
}

TEST_CASE("free actions classify as bundles") {
    CHECK(classify(plain_data(OrbitSpace::points(1), 3)).named_type == "Torus(3)");
    CHECK(classify(plain_data(OrbitSpace::points(1), 1)).display == "the torus T^1");
    auto circ = classify(plain_data(OrbitSpace::circle(), 2));
    CHECK(circ.named_type == "PrincipalBundleOverCircle(2)");
    CHECK(circ.manifold.value);
    CHECK_FALSE(circ.homology.has_value());

    auto surf = classify(plain_data(OrbitSpace::closed_surface(true, 2), 1,
                                    ChernClass::free_vector({Int(3)})));
    CHECK(surf.named_type == "PrincipalBundleOverSurface(orientable genus 2, c=(3))");
    CHECK(surf.manifold.value);
}

TEST_CASE("stratifold bases") {
    SECTION("the disk") {
        OrbitSpace disk =
            OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 1}}}});
        auto r = classify(plain_data(disk, 1));
        CHECK(r.named_type ==
              "CanonicalOverStratifold(orientable, genus 0, 1 boundary circle)");
        CHECK(r.manifold.value);
        CHECK_FALSE(r.homology.has_value());
    }
    SECTION("two sheets along a circle break the manifold property") {
        OrbitSpace pinched =
            OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 2}}}});
        auto r = classify(plain_data(pinched, 1));
        CHECK(r.named_type == "CanonicalOverStratifold(1 circle, 1 piece)");
        CHECK_FALSE(r.manifold.value);
        CHECK(r.manifold.reason.find("'c'") != std::string::npos);
    }
    SECTION("random normal stratifolds are manifolds with a surface form") {
        std::mt19937_64 rng(777001);
        for (int trial = 0; trial < 10; ++trial) {
            OrbitSpace q = testgen::random_stratifold(rng, true);
            auto r = classify(plain_data(q, 1));
            INFO("trial " << trial);
            CHECK(r.manifold.value);
            CHECK(r.named_type.find("genus") != std::string::npos);
        }
    }
}

TEST_CASE("disconnected bases are reported componentwise") {
    auto tori = classify(plain_data(OrbitSpace::points(3), 2));
    CHECK(tori.named_type == "DisjointUnion[Torus(2), Torus(2), Torus(2)]");
    CHECK(tori.manifold.value);
    REQUIRE_FALSE(tori.notes.empty());

    OrbitSpace two = OrbitSpace::graph({"v0", "v1", "w0", "w1"},
                                       {{"v0", "v1"}, {"w0", "w1"}});
    auto f = default_functor(two, 2);
    f.assignment.emplace("v0", line_of(pv(1, 0)));
    f.assignment.emplace("v1", line_of(pv(0, 1)));
    f.assignment.emplace("w0", line_of(pv(1, 0)));
    f.assignment.emplace("w1", line_of(pv(1, 2)));
    auto d = CharacteristicData::make(two, f, ChernClass::zero());
    auto r = classify(d);
    CHECK(r.named_type == "DisjointUnion[Sphere3, LensSpaceOrder(2)]");
    CHECK(r.manifold.value);
    REQUIRE(r.homology.has_value());
    CHECK(*r.homology ==
          profile({{2, {}}, {0, {Int(2)}}, {0, {}}, {2, {}}}));

    OrbitSpace with_loop = OrbitSpace::graph({"v0", "v1", "w"},
                                             {{"v0", "v1"}, {"w", "w"}});
    auto broken = classify(plain_data(with_loop, 1));
    CHECK_FALSE(broken.manifold.value);
}

TEST_CASE("classification homology agrees with the chain model") {
    std::mt19937_64 rng(5551212);
    for (int trial = 0; trial < 15; ++trial) {
        auto d = testgen::random_graph_data(rng, 1 + trial % 2, 6, trial % 3 != 0);
        auto r = classify(d);
        REQUIRE(r.homology.has_value());
        CHECK(*r.homology == homology(build_canonical_complex(d)));
    }
}

TEST_CASE("tables regenerate from the dispatch") {
    TableSet tables = enumerate_tables();
    auto line_count = [](const std::string& s) {
        return std::count(s.begin(), s.end(), '\n');
    };
    // Title + header + 9 data rows each.
    CHECK(line_count(tables.table1) == 11);
    CHECK(line_count(tables.table2) == 11);
    CHECK(line_count(tables.table3) == 11);

    SECTION("pinned entries") {
        std::istringstream in(tables.table2);
        std::string line, graph_row;
        while (std::getline(in, line))
            if (line.find("(graph, {1,T}, 0)") != std::string::npos)
                graph_row = line;
        REQUIRE_FALSE(graph_row.empty());
        CHECK(graph_row.rfind("2", 0) == 0);
        CHECK(graph_row.find("over graph") != std::string::npos);

        CHECK(tables.table2.find("(closed surface, {1}, c)") != std::string::npos);
        CHECK(tables.table2.find("(graph, lambda, 0)") != std::string::npos);
        std::istringstream in3(tables.table3);
        std::string last;
        while (std::getline(in3, line))
            if (!line.empty()) last = line;
        CHECK(last.find("compact surface with boundary") != std::string::npos);
        CHECK(tables.table3.find("(none)") == std::string::npos);
    }

    SECTION("golden file") {
        std::string want =
            read_file(std::string(TSTRATA_SOURCE_DIR) + "/tests/golden/tables.txt");
        CHECK(tables.table1 + "\n" + tables.table2 + "\n" + tables.table3 == want);
    }
}
