#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hyperbox/exponentials.hpp"
#include "hyperbox/functors.hpp"
#include "hyperbox/homsearch.hpp"
#include "hyperbox/random_gen.hpp"

using namespace hyperbox;

TEST_CASE("undirecting") {
    CHECK(undirect(path_q(1)) == path_h(1));
    auto loop = Quiver::make({"v0"}, {"e0"}, {{"e0", "v0"}}, {{"e0", "v0"}});
    CHECK(undirect(loop).endpoints(0).size() == 1);
    Rng rng(2);
    for (int it = 0; it < 10; ++it) {
        auto q = gen::quiver(rng, 3, 3), p = gen::quiver(rng, 3, 3);
        CHECK(undirect(box_q(q, p)) == box_h(undirect(q), undirect(p)));
        CHECK(undirect(q).is_multigraph());
    }
}

TEST_CASE("associated digraph") {
    auto d = associated_digraph(path_h(1));
    CHECK(d.vertices().size() == 2);
    CHECK(d.edges().size() == 2);
    auto loop = SetSystemHypergraph::make({"v0"}, {"e0"}, {{"e0", {"v0"}}});
    CHECK(associated_digraph(loop).edges().size() == 1);
    CHECK_THROWS_AS(associated_digraph(n_edge_h(3)), std::invalid_argument);

    Rng rng(6);
    for (int it = 0; it < 8; ++it) {
        auto g = gen::multigraph(rng, 3, 3), h = gen::multigraph(rng, 3, 3);
        auto psi = digraph_structure_psi(g, h);
        CHECK(compose(psi, inverse(psi)) == identity(psi.codomain()));
        CHECK(compose(inverse(psi), psi) == identity(psi.domain()));
    }
}

TEST_CASE("inclusion and deletion") {
    CHECK(del(inclusion_n(cycle_h(3))) == cycle_h(3));
    auto d3 = del(n_edge_h(3));
    CHECK(d3.vertices().size() == 3);
    CHECK(d3.edges().empty());
    // Del of the box exponential keeps the 2-edges; the universal property
    // pinned sixteen of them (16 cross-pair endpoint sets times colorings).
    auto x = exp_box_h(path_h(1), cycle_h(2));
    CHECK(del(x.carrier).edges().size() == 16);
    Rng rng(13);
    for (int it = 0; it < 8; ++it) {
        auto a = gen::hypergraph(rng, 3, 3, 3), b = gen::hypergraph(rng, 3, 3, 3);
        CHECK(del(box_h(a, b)) == box_h(del(a), del(b)));
    }
}

TEST_CASE("incidence forming") {
    CHECK(incidence_forming(n_edge_h(3)).incidences().size() == 3);
    auto e2 = n_edge_h(2), e3 = n_edge_h(3);
    CHECK(is_isomorphic(incidence_forming(box_h(e2, e3)),
                        box_r(incidence_forming(e2), incidence_forming(e3))));
    // Phi sends the incidence (1, (v, e), w) to ((v, w), (1, e, w))
    auto phi = incidence_structure_phi(e2, e3);
    int di = phi.domain().incidence_index(tagged_label(1, pair_label("v0", "e0"), "v1"));
    REQUIRE(di >= 0);
    CHECK(phi.codomain().incidences()[phi.incidence_map()[di]] ==
          pair_label(pair_label("v0", "v1"), tagged_label(1, "e0", "v1")));
    CHECK(compose(inverse(phi), phi) == identity(phi.domain()));
}

TEST_CASE("bipartite incidence functor") {
    auto g = fixtures::doubled_r();
    auto y = bipartite_incidence(g);
    CHECK(y.vertices().size() == g.vertices().size() + g.edges().size());
    CHECK(y.edges().size() == g.incidences().size());
    for (int n = 1; n <= 6; ++n) CHECK(is_isomorphic(u_bipartite(path_r(n)), path_h(n)));

    // Psi sends the edge-class pair ((2, e), (1, w)) to the tag-2 product edge
    auto h = path_r(2);
    auto Psi = bipartite_structure_psi(g, h);
    int dv = Psi.domain().vertex_index(pair_label("2:e0", "1:v1"));
    REQUIRE(dv >= 0);
    CHECK(Psi.codomain().vertices()[Psi.vertex_map()[dv]] == "2:" + tagged_label(2, "e0", "v1"));
    CHECK(compose(inverse(Psi), Psi) == identity(Psi.domain()));

    Rng rng(17);
    for (int it = 0; it < 6; ++it) {
        auto a = gen::incidence(rng, 2, 2, 3), b = gen::incidence(rng, 2, 2, 3);
        CHECK(is_isomorphic(u_bipartite(laplacian_product(a, b)),
                            box_h(u_bipartite(a), u_bipartite(b))));
    }
}

TEST_CASE("unit objects break the directed comparison but not the undirected one") {
    auto one = unit_incidence_r();
    auto lhs = bipartite_incidence(laplacian_product(one, one));
    auto rhs = box_q(bipartite_incidence(one), bipartite_incidence(one));
    CHECK_FALSE(is_isomorphic(lhs, rhs));
    CHECK(is_isomorphic(undirect(lhs), undirect(rhs)));
}

TEST_CASE("functors preserve identities and composition") {
    auto fs = enumerate_homs(path_r(1), path_r(2));
    auto gs = enumerate_homs(path_r(2), fixtures::doubled_r());
    for (const auto& f : fs)
        for (const auto& g : gs) {
            CHECK(bipartite_incidence_mor(compose(g, f)) ==
                  compose(bipartite_incidence_mor(g), bipartite_incidence_mor(f)));
            CHECK(u_bipartite_mor(compose(g, f)) ==
                  compose(u_bipartite_mor(g), u_bipartite_mor(f)));
        }
    auto g = fixtures::doubled_r();
    CHECK(bipartite_incidence_mor(identity(g)) == identity(bipartite_incidence(g)));
    CHECK(incidence_forming_mor(identity(cycle_h(2))) == identity(incidence_forming(cycle_h(2))));
    auto qs = enumerate_homs(path_q(1), cycle_q(2));
    for (const auto& f : qs) CHECK(validate(undirect_mor(f)).ok);
    auto hs = enumerate_homs(path_h(1), cycle_h(2));
    for (const auto& f : hs) {
        CHECK(validate(associated_digraph_mor(f)).ok);
        CHECK(validate(incidence_forming_mor(f)).ok);
        CHECK(validate(del_mor(f)).ok);
    }
}
