#include <catch2/catch_amalgamated.hpp>

#include <tstrata/orbit_space.hpp>

#include "space_gen.hpp"

using namespace tstrata;

namespace {

OrbitSpace single_loop() { return OrbitSpace::graph({"v"}, {{"v", "v"}}); }

OrbitSpace disk_pair() {
    return OrbitSpace::stratifold(
        {"c"}, {{"p0", true, 0, {{"c", 1}}}, {"p1", true, 0, {{"c", 1}}}});
}

const Stratum* find_stratum(const std::vector<Stratum>& poset, const std::string& id) {
    for (const auto& s : poset)
        if (s.id == id) return &s;
    return nullptr;
}

}  // namespace

TEST_CASE("strata_poset on the basic spaces") {
    SECTION("interval: two vertices below one edge") {
        auto poset = strata_poset(OrbitSpace::interval());
        REQUIRE(poset.size() == 3);
        const Stratum* edge = find_stratum(poset, "e#0");
        REQUIRE(edge != nullptr);
        REQUIRE(edge->dimension == 1);
        REQUIRE(edge->closure_contains == std::vector<std::string>{"v0", "v1"});
    }
    SECTION("loop: one vertex below one edge, listed once") {
        auto poset = strata_poset(single_loop());
        REQUIRE(poset.size() == 2);
        const Stratum* edge = find_stratum(poset, "e#0");
        REQUIRE(edge->closure_contains == std::vector<std::string>{"v"});
    }
    SECTION("two disks over one circle") {
        auto poset = strata_poset(disk_pair());
        REQUIRE(poset.size() == 3);
        REQUIRE(find_stratum(poset, "p0")->closure_contains ==
                std::vector<std::string>{"c"});
        REQUIRE(find_stratum(poset, "p1")->closure_contains ==
                std::vector<std::string>{"c"});
    }
}

TEST_CASE("link_of counts local sheets") {
    REQUIRE(link_of(single_loop(), "v").component_count == 2);
    REQUIRE(link_of(OrbitSpace::interval(), "v0").component_count == 1);
    SECTION("degree-2 attachment contributes two points") {
        auto q = OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 2}}}});
        REQUIRE(link_of(q, "c").component_count == 2);
        REQUIRE(link_of(q, "c").points_per_component ==
                std::vector<std::size_t>{1, 1});
    }
    SECTION("top strata have empty links") {
        REQUIRE(link_of(OrbitSpace::interval(), "e#0").component_count == 0);
        REQUIRE(link_of(OrbitSpace::circle(), "circle").component_count == 0);
    }
    REQUIRE_THROWS_AS(link_of(single_loop(), "nope"), std::invalid_argument);
}

TEST_CASE("is_normal") {
    REQUIRE(is_normal(OrbitSpace::interval()).normal);
    REQUIRE_FALSE(is_normal(single_loop()).normal);
    SECTION("one degree-1 sheet per circle is normal") {
        auto q = OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 1}}}});
        REQUIRE(is_normal(q).normal);
    }
    SECTION("two sheets on a circle is not") {
        REQUIRE_FALSE(is_normal(disk_pair()).normal);
    }
    SECTION("report lists every lower stratum") {
        auto rep = is_normal(single_loop());
        REQUIRE(rep.link_components ==
                std::vector<std::pair<std::string, std::size_t>>{{"v", 2}});
    }
}

TEST_CASE("validate_pseudomanifold") {
    SECTION("isolated vertex breaks density") {
        auto q = OrbitSpace::graph({"a", "b", "z"}, {{"a", "b"}});
        auto rep = validate_pseudomanifold(q);
        REQUIRE(rep.violations.size() == 1);
        REQUIRE(rep.violations[0].code == "density");
        REQUIRE(rep.violations[0].subject == "z");
    }
    SECTION("interval is clean") {
        REQUIRE(validate_pseudomanifold(OrbitSpace::interval()).ok());
    }
    SECTION("disk pair is a valid (non-normal) pseudomanifold") {
        REQUIRE(validate_pseudomanifold(disk_pair()).ok());
    }
    SECTION("edgeless graph has no top stratum") {
        auto rep = validate_pseudomanifold(OrbitSpace::graph({"a"}, {}));
        REQUIRE_FALSE(rep.ok());
        REQUIRE(rep.violations[0].code == "no-top-stratum");
    }
    SECTION("closed piece inside a stratifold") {
        auto q = OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 1}}},
                                                {"closed", true, 2, {}}});
        auto rep = validate_pseudomanifold(q);
        REQUIRE_FALSE(rep.ok());
        REQUIRE(rep.violations[0].code == "closed-top-stratum");
    }
    SECTION("unattached circle") {
        auto q = OrbitSpace::stratifold({"c", "lonely"}, {{"p", true, 0, {{"c", 1}}}});
        auto rep = validate_pseudomanifold(q);
        REQUIRE_FALSE(rep.ok());
        REQUIRE(rep.violations[0].code == "density");
        REQUIRE(rep.violations[0].subject == "lonely");
    }
    SECTION("empty spaces") {
        REQUIRE_FALSE(validate_pseudomanifold(OrbitSpace::points(0)).ok());
        REQUIRE_FALSE(validate_pseudomanifold(OrbitSpace::graph({}, {})).ok());
    }
}

TEST_CASE("construction rejects malformed incidence data") {
    REQUIRE_THROWS_AS(OrbitSpace::graph({"a"}, {{"a", "ghost"}}), std::invalid_argument);
    REQUIRE_THROWS_AS(OrbitSpace::graph({"a", "a"}, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"d", 1}}}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 0}}}}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(OrbitSpace::closed_surface(false, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(OrbitSpace::graph({"e#0"}, {}), std::invalid_argument);
}

TEST_CASE("surface_with_boundary_form") {
    SECTION("disk") {
        auto q = OrbitSpace::stratifold({"c"}, {{"p", true, 0, {{"c", 1}}}});
        auto form = surface_with_boundary_form(q);
        REQUIRE(form.has_value());
        REQUIRE(*form == SurfaceForm{true, 0, 1});
    }
    SECTION("two sheets: absent") {
        REQUIRE_FALSE(surface_with_boundary_form(disk_pair()).has_value());
    }
    SECTION("genus-1 piece with two boundary circles") {
        auto q = OrbitSpace::stratifold(
            {"c0", "c1"}, {{"p", true, 1, {{"c0", 1}, {"c1", 1}}}});
        auto form = surface_with_boundary_form(q);
        REQUIRE(form.has_value());
        REQUIRE(*form == SurfaceForm{true, 1, 2});
    }
    SECTION("only stratifolds qualify") {
        REQUIRE_THROWS_AS(surface_with_boundary_form(OrbitSpace::circle()),
                          std::invalid_argument);
    }
}

TEST_CASE("structural predicates") {
    REQUIRE(is_interval(OrbitSpace::interval()));
    REQUIRE_FALSE(is_interval(single_loop()));
    REQUIRE(is_single_loop(single_loop()));
    REQUIRE_FALSE(is_single_loop(OrbitSpace::interval()));
    SECTION("two disjoint loops") {
        auto q = OrbitSpace::graph({"a", "b"}, {{"a", "a"}, {"b", "b"}});
        REQUIRE(connected_components(q) == 2);
        auto parts = components(q);
        REQUIRE(parts.size() == 2);
        REQUIRE(is_single_loop(parts[0]));
        REQUIRE(is_single_loop(parts[1]));
    }
    SECTION("points split into singletons") {
        REQUIRE(connected_components(OrbitSpace::points(3)) == 3);
        REQUIRE(components(OrbitSpace::points(3)).size() == 3);
    }
}

TEST_CASE("poset and validator properties on random spaces") {
    std::mt19937_64 rng(20240117);
    for (int trial = 0; trial < 120; ++trial) {
        OrbitSpace q = testgen::random_valid_space(rng);
        CAPTURE(space_kind_name(q.kind()));

        // The module's own builders produce valid pseudomanifolds.
        REQUIRE(validate_pseudomanifold(q).ok());

        auto poset = strata_poset(q);
        REQUIRE_FALSE(poset.empty());
        const std::size_t top = q.dimension();

        // Frontier condition: closure relations only point at strata of
        // strictly lower dimension, and those strata exist.
        for (const auto& s : poset) {
            for (const auto& below : s.closure_contains) {
                const Stratum* b = find_stratum(poset, below);
                REQUIRE(b != nullptr);
                REQUIRE(b->dimension < s.dimension);
            }
            if (s.dimension < top) {
                REQUIRE(link_of(q, s.id).component_count >= 1);
                // Density: some top stratum's closure contains s.
                bool covered = false;
                for (const auto& t : poset)
                    if (t.dimension == top)
                        for (const auto& below : t.closure_contains)
                            if (below == s.id) covered = true;
                REQUIRE(covered);
            }
        }

        // is_normal agrees with the links it reports.
        auto rep = is_normal(q);
        bool all_one = true;
        for (const auto& [id, count] : rep.link_components) {
            REQUIRE(link_of(q, id).component_count == count);
            if (count != 1) all_one = false;
        }
        REQUIRE(rep.normal == all_one);

        // A connected normal space has exactly one top stratum.
        if (rep.normal && connected_components(q) == 1) {
            std::size_t tops = 0;
            for (const auto& s : poset)
                if (s.dimension == top) ++tops;
            REQUIRE(tops == 1);
        }

        // Components are valid, and their strata partition the original.
        auto parts = components(q);
        REQUIRE(parts.size() == connected_components(q));
        std::size_t total = 0;
        for (const auto& part : parts) {
            REQUIRE(validate_pseudomanifold(part).ok());
            total += strata_poset(part).size();
        }
        REQUIRE(total == poset.size());
    }
}
