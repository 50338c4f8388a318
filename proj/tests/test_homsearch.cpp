#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hyperbox/homsearch.hpp"
#include "hyperbox/products.hpp"
#include "hyperbox/random_gen.hpp"

using namespace hyperbox;

TEST_CASE("hom counts on the diamond") {
    auto g = fixtures::diamond_r();
    CHECK(count_homs(path_r(1), g) == 10);
    CHECK(count_homs(unit_vertex_r(), path_r(2)) == 2);

    AnchorConstraint loops;
    loops.vertex = {{"v0", "v0"}, {"v1", "v0"}};
    auto at_v0 = enumerate_homs(path_r(2), g, loops);
    CHECK(at_v0.size() == 3);
    for (const auto& m : at_v0) CHECK(classify_path_map(m) == PathMapClass::backstep);

    AnchorConstraint cross;
    cross.vertex = {{"v0", "v0"}, {"v1", "v1"}};
    CHECK(count_homs(path_r(2), g, cross) == 1);

    // the doubled object carries five closed walk maps at its first vertex
    AnchorConstraint closed;
    closed.vertex = {{"v0", "v0"}, {"v1", "v0"}};
    CHECK(count_homs(path_r(2), fixtures::doubled_r(), closed) == 5);
}

TEST_CASE("enumerate and count agree, in canonical order") {
    Rng rng(11);
    for (int it = 0; it < 20; ++it) {
        auto a = gen::incidence(rng, 3, 3, 4);
        auto b = gen::incidence(rng, 3, 3, 4);
        auto homs = enumerate_homs(a, b);
        CHECK(static_cast<long long>(homs.size()) == count_homs(a, b));
        for (size_t i = 0; i + 1 < homs.size(); ++i) CHECK(canonical_less(homs[i], homs[i + 1]));
        for (const auto& m : homs) CHECK(validate(m).ok);
        auto again = enumerate_homs(a, b);
        CHECK(homs == again);
    }
}

TEST_CASE("anchored counts match filtered unanchored enumeration") {
    auto g = fixtures::doubled_r();
    auto p = path_r(2);
    for (const auto& tail : g.vertices())
        for (const auto& head : g.vertices()) {
            AnchorConstraint a;
            a.vertex = {{"v0", tail}, {"v1", head}};
            long long filtered = 0;
            for (const auto& m : enumerate_homs(p, g)) {
                if (g.vertices()[m.vertex_map()[0]] == tail &&
                    g.vertices()[m.vertex_map()[1]] == head)
                    filtered++;
            }
            CHECK(count_homs(p, g, a) == filtered);
        }
    AnchorConstraint bad;
    bad.vertex = {{"nope", "v0"}};
    CHECK_THROWS_AS(count_homs(p, g, bad), std::invalid_argument);
}

TEST_CASE("monic filters restrict the enumeration") {
    auto g = fixtures::doubled_r();
    auto p = path_r(2);
    auto all = enumerate_homs(p, g);
    auto incidence_monic = enumerate_homs(p, g, {}, MonicFilter::incidence);
    auto vertex_monic = enumerate_homs(p, g, {}, MonicFilter::vertex);
    for (const auto& m : incidence_monic)
        CHECK(m.incidence_map()[0] != m.incidence_map()[1]);
    for (const auto& m : vertex_monic) CHECK(m.vertex_map()[0] != m.vertex_map()[1]);
    CHECK(incidence_monic.size() ==
          static_cast<size_t>(count_homs(p, g, {}, MonicFilter::incidence)));
    CHECK(vertex_monic.size() < all.size());
    CHECK(incidence_monic.size() == all.size() - g.incidences().size());
}

TEST_CASE("composites of enumerated morphisms are enumerated") {
    auto a = path_r(1), b = path_r(2), c = fixtures::doubled_r();
    auto fs = enumerate_homs(a, b);
    auto gs = enumerate_homs(b, c);
    auto hs = enumerate_homs(a, c);
    for (const auto& f : fs)
        for (const auto& g : gs) {
            auto gf = compose(g, f);
            CHECK(std::find(hs.begin(), hs.end(), gf) != hs.end());
        }
}

TEST_CASE("quiver and set-system enumeration") {
    CHECK(count_homs(path_q(1), cycle_q(2)) == 2);
    CHECK(count_homs(path_q(2), cycle_q(2)) == 2);
    CHECK(count_homs(path_h(1), cycle_h(2)) == 4);
    // a square maps onto the two-cycle in 32 ways
    CHECK(count_homs(box_h(path_h(1), path_h(1)), cycle_h(2)) == 32);
    // empty endpoint sets must map to empty endpoint sets
    auto empty_edge = SetSystemHypergraph::make({"v0"}, {"e0"}, {{"e0", {}}});
    CHECK(count_homs(empty_edge, path_h(1)) == 0);
    CHECK(count_homs(empty_edge, empty_edge) == 1);
}

TEST_CASE("isomorphism search with witnesses") {
    CHECK(is_isomorphic(path_r(1), dual(path_r(1))));
    CHECK_FALSE(is_isomorphic(path_r(2), dual(path_r(2))));  // 2+1 vs 1+2 sort sizes
    auto w = find_isomorphism(cycle_r(2), cycle_r(2));
    REQUIRE(w.has_value());
    CHECK(validate(*w).ok);
    CHECK(compose(inverse(*w), *w) == identity(cycle_r(2)));

    // relabeled copies are isomorphic
    auto relabeled = IncidenceHypergraph::make(
        {"a", "b"}, {"x"}, {"p", "q"}, {{"p", "a"}, {"q", "b"}}, {{"p", "x"}, {"q", "x"}});
    CHECK(is_isomorphic(path_r(2), relabeled));
    CHECK_FALSE(is_isomorphic(path_r(2), cycle_r(1)));

    CHECK(is_isomorphic(cycle_q(3), cycle_q(3)));
    CHECK_FALSE(is_isomorphic(cycle_q(3), path_q(3)));
    CHECK(is_isomorphic(cycle_h(4), cycle_h(4)));
    CHECK_FALSE(is_isomorphic(cycle_h(4), path_h(4)));
}

TEST_CASE("isomorphism is an equivalence on a small pool") {
    Rng rng(3);
    std::vector<IncidenceHypergraph> pool;
    for (int i = 0; i < 8; ++i) pool.push_back(gen::incidence(rng, 3, 3, 4));
    for (const auto& x : pool) CHECK(is_isomorphic(x, x));
    for (const auto& x : pool)
        for (const auto& y : pool) {
            bool xy = is_isomorphic(x, y);
            CHECK(xy == is_isomorphic(y, x));
            if (xy)
                for (const auto& z : pool)
                    if (is_isomorphic(y, z)) CHECK(is_isomorphic(x, z));
        }
}

TEST_CASE("hom counts overflow loudly instead of wrapping") {
    // 64 isolated vertices into a 4-vertex object: 4^64 maps
    std::vector<std::string> vs;
    for (int i = 0; i < 64; ++i) vs.push_back("u" + std::to_string(i));
    auto big = IncidenceHypergraph::make(vs, {}, {}, {}, {});
    auto target = IncidenceHypergraph::make({"a", "b", "c", "d"}, {}, {}, {}, {});
    CHECK_THROWS_AS(count_homs(big, target), OverflowError);
}
