#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hyperbox/homsearch.hpp"

using namespace hyperbox;

TEST_CASE("generators have the expected shapes") {
    auto half = path_r(1);
    CHECK(half.vertices().size() == 1);
    CHECK(half.edges().size() == 1);
    CHECK(half.incidences().size() == 1);
    CHECK(half == unit_incidence_r());

    auto p1 = path_r(2);
    CHECK(p1.vertices().size() == 2);
    CHECK(p1.edges().size() == 1);
    CHECK(p1.incidences().size() == 2);

    auto p2 = path_r(4);
    CHECK(p2.vertices().size() == 3);
    CHECK(p2.edges().size() == 2);
    CHECK(p2.incidences().size() == 4);

    CHECK(path_r(0).vertices().size() == 1);
    CHECK(path_r(0).edges().empty());

    auto c2 = cycle_r(2);
    CHECK(c2.vertices().size() == 2);
    CHECK(c2.edges().size() == 2);
    CHECK(c2.incidences().size() == 4);

    CHECK(unit_edge_r().vertices().empty());
    CHECK(unit_edge_q().edges().size() == 1);
    CHECK(n_edge_h(3).endpoints(0).size() == 3);

    CHECK(path_r_head(2) == "v1");
    CHECK(path_r_head(3) == "e1");

    CHECK_THROWS_AS(path_r(-1), std::invalid_argument);
    CHECK_THROWS_AS(path_q(-2), std::invalid_argument);
}

TEST_CASE("empty objects are legal in all three categories") {
    CHECK(validate(Quiver::make({}, {}, {}, {})).ok);
    CHECK(validate(SetSystemHypergraph::make({}, {}, {})).ok);
    CHECK(validate(IncidenceHypergraph::make({}, {}, {}, {}, {})).ok);
    CHECK(count_homs(IncidenceHypergraph::make({}, {}, {}, {}, {}), path_r(2)) == 1);
}

TEST_CASE("validate rejects out-of-range structure maps") {
    auto g = unit_incidence_r();
    auto bad = IncidenceMorphism::unchecked(detail::shared(g), detail::shared(g), {0}, {0}, {7});
    auto r = validate(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("out of range") != std::string::npos);
}

TEST_CASE("direct-image condition is enforced for hypergraph morphisms") {
    // both endpoints of a 2-edge to one vertex, but the edge to a 2-edge
    auto e2 = n_edge_h(2);
    auto bad = HypergraphMorphism::unchecked(detail::shared(e2), detail::shared(e2), {0, 0}, {0});
    auto r = validate(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("direct-image") != std::string::npos);

    // collapsing is fine when a size-1 edge exists in the codomain
    auto loop = SetSystemHypergraph::make({"v0"}, {"e0"}, {{"e0", {"v0"}}});
    CHECK_NOTHROW(HypergraphMorphism::from_labels(e2, loop, {{"v0", "v0"}, {"v1", "v0"}},
                                                  {{"e0", "e0"}}));
}

TEST_CASE("labels must be unique within a sort") {
    CHECK_THROWS_AS(Quiver::make({"v0", "v0"}, {}, {}, {}), std::invalid_argument);
    // the same label may appear in different sorts
    CHECK_NOTHROW(IncidenceHypergraph::make({"x"}, {"x"}, {"x"}, {{"x", "x"}}, {{"x", "x"}}));
}

TEST_CASE("composition and identities satisfy the category laws") {
    auto p1 = path_r(2);
    auto g = fixtures::diamond_r();
    auto homs = enumerate_homs(p1, g);
    REQUIRE_FALSE(homs.empty());
    for (const auto& f : homs) {
        CHECK(compose(identity(g), f) == f);
        CHECK(compose(f, identity(p1)) == f);
    }
    // the vertex swap of the length-one path is an involution
    auto swap = IncidenceMorphism::from_labels(p1, p1, {{"v0", "v1"}, {"v1", "v0"}},
                                               {{"e0", "e0"}}, {{"i0", "i1"}, {"i1", "i0"}});
    CHECK(compose(swap, swap) == identity(p1));

    auto f = homs.front();
    auto into_dual = enumerate_homs(g, g);
    REQUIRE_FALSE(into_dual.empty());
    CHECK(compose(compose(into_dual.front(), f), identity(p1)) ==
          compose(into_dual.front(), compose(f, identity(p1))));
    CHECK_THROWS_AS(compose(f, into_dual.front()), std::invalid_argument);
}

TEST_CASE("path map classification") {
    auto p1 = path_r(2);
    auto g = fixtures::diamond_r();
    // both incidences onto one incidence: a backstep
    auto back = IncidenceMorphism::from_labels(
        p1, g, {{"v0", "v0"}, {"v1", "v0"}}, {{"e0", "e0"}}, {{"i0", "i0"}, {"i1", "i0"}});
    CHECK(classify_path_map(back) == PathMapClass::backstep);
    // distinct incidences, distinct vertices: an adjacency
    auto adj = IncidenceMorphism::from_labels(
        p1, g, {{"v0", "v0"}, {"v1", "v1"}}, {{"e0", "e0"}}, {{"i0", "i0"}, {"i1", "i1"}});
    CHECK(classify_path_map(adj) == PathMapClass::adjacency);
    // parallel incidences in the doubled object give a loop
    auto dbl = fixtures::doubled_r();
    auto loop = IncidenceMorphism::from_labels(
        p1, dbl, {{"v0", "v0"}, {"v1", "v0"}}, {{"e0", "e1"}}, {{"i0", "i1"}, {"i1", "i2"}});
    CHECK(classify_path_map(loop) == PathMapClass::loop);
    CHECK_THROWS_AS(classify_path_map(identity(g)), std::invalid_argument);
}

TEST_CASE("classification partitions the maps of the length-one path") {
    auto p1 = path_r(2);
    for (const auto& g : {fixtures::diamond_r(), fixtures::doubled_r()}) {
        int backsteps = 0, loops = 0, adjacencies = 0;
        for (const auto& m : enumerate_homs(p1, g)) {
            switch (classify_path_map(m)) {
                case PathMapClass::backstep: backsteps++; break;
                case PathMapClass::loop:
                    loops++;
                    adjacencies++;
                    break;
                case PathMapClass::adjacency: adjacencies++; break;
            }
        }
        CHECK(backsteps + adjacencies == count_homs(p1, g));
        CHECK(backsteps == static_cast<int>(g.incidences().size()));
    }
}

TEST_CASE("unit generators represent their sorts") {
    for (const auto& g : {fixtures::diamond_r(), fixtures::doubled_r(), path_r(3), cycle_r(2)}) {
        CHECK(count_homs(unit_vertex_r(), g) == static_cast<long long>(g.vertices().size()));
        CHECK(count_homs(unit_edge_r(), g) == static_cast<long long>(g.edges().size()));
        CHECK(count_homs(unit_incidence_r(), g) == static_cast<long long>(g.incidences().size()));
    }
    auto q = cycle_q(3);
    CHECK(count_homs(unit_vertex_q(), q) == 3);
    CHECK(count_homs(unit_edge_q(), q) == 3);
    auto h = cycle_h(3);
    CHECK(count_homs(unit_vertex_h(), h) == 3);
}
