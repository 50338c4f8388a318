#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hyperbox/exponentials.hpp"
#include "hyperbox/verify.hpp"
#include "hyperbox/random_gen.hpp"

using namespace hyperbox;

TEST_CASE("quiver box exponential of the one-path into the two-cycle") {
    auto x = exp_box_q(path_q(1), cycle_q(2));
    CHECK(x.carrier.vertices().size() == 2);
    CHECK(x.carrier.edges().size() == 2);
    // each edge runs between the two distinct hom vertices
    for (size_t e = 0; e < 2; ++e) CHECK(x.carrier.source(static_cast<int>(e)) !=
                                         x.carrier.target(static_cast<int>(e)));
    CHECK(validate(x.eval).ok);
}

TEST_CASE("set-system box exponential edges are endpoint-colored pairs") {
    auto x = exp_box_h(path_h(1), cycle_h(2));
    CHECK(x.carrier.vertices().size() == 4);
    // The universal property pins the edge count: maps out of the square
    // P1 box P1 into C2 number 32, and each corresponds to a vertex-pair
    // plus edge choice in the carrier. That forces a 16/16/4 split by
    // endpoint-set size (36 edges in total).
    CHECK(count_homs(box_h(path_h(1), path_h(1)), cycle_h(2)) == 32);
    CHECK(count_homs(path_h(1), x.carrier) == 32);
    int by_size[5] = {0, 0, 0, 0, 0};
    for (size_t e = 0; e < x.carrier.edges().size(); ++e)
        by_size[x.carrier.endpoints(static_cast<int>(e)).size()]++;
    CHECK(by_size[2] == 16);
    CHECK(by_size[3] == 16);
    CHECK(by_size[4] == 4);
    CHECK(x.carrier.edges().size() == 36);
    // every edge (A, g) has endpoint set A by construction
    for (size_t e = 0; e < x.edges.size(); ++e)
        CHECK(x.edges[e].members == x.carrier.endpoints(static_cast<int>(e)));
    CHECK(validate(x.eval).ok);
}

TEST_CASE("incidence box exponential of the generator into the one-path") {
    auto x = exp_box_r(unit_incidence_r(), path_r(2));
    CHECK(x.carrier.vertices().size() == 2);
    CHECK(x.carrier.edges().size() == 1);
    CHECK(x.carrier.incidences().size() == 2);
    CHECK(validate(x.eval).ok);
}

TEST_CASE("incidence box exponential edge sort counts all functions") {
    Rng rng(4);
    for (int it = 0; it < 8; ++it) {
        auto g = gen::incidence(rng, 2, 2, 2);
        auto h = gen::incidence(rng, 2, 2, 3);
        auto x = exp_box_r(g, h);
        size_t expected = 1;
        bool none = false;
        for (size_t v = 0; v < g.vertices().size(); ++v) {
            expected *= h.edges().size();
            if (h.edges().empty()) none = true;
        }
        CHECK(x.carrier.edges().size() == (none ? 0 : expected));
    }
}

TEST_CASE("laplacian exponential worked objects") {
    auto small = exp_laplacian(path_r(1), path_r(2));
    CHECK(small.carrier.vertices().size() == 2);
    CHECK(small.carrier.edges().size() == 2);
    CHECK(small.carrier.incidences().size() == 4);

    auto diamond = exp_laplacian(path_r(1), fixtures::diamond_r());
    CHECK(diamond.carrier.vertices().size() == 10);
    CHECK(diamond.carrier.edges().size() == 10);

    auto doubled = exp_laplacian(path_r(1), fixtures::doubled_r());
    CHECK(doubled.carrier.vertices().size() == 6);
    CHECK(doubled.carrier.edges().size() == 6);
    // parallel incidences produce parallel edges: two edges with the same
    // attached port multiset
    std::vector<std::vector<int>> ports(doubled.carrier.edges().size());
    for (size_t i = 0; i < doubled.carrier.incidences().size(); ++i)
        ports[doubled.carrier.attachment(static_cast<int>(i))].push_back(
            doubled.carrier.port(static_cast<int>(i)));
    for (auto& p : ports) std::sort(p.begin(), p.end());
    bool parallel = false;
    for (size_t a = 0; a < ports.size(); ++a)
        for (size_t b = a + 1; b < ports.size(); ++b)
            if (!ports[a].empty() && ports[a] == ports[b]) parallel = true;
    CHECK(parallel);
}

TEST_CASE("attachment maps agree with direct restriction along the prism blocks") {
    auto g = path_r(2);
    auto h = fixtures::doubled_r();
    auto x = exp_laplacian(g, h);
    auto hp = detail::shared(h);
    for (size_t p = 0; p < x.carrier.incidences().size(); ++p) {
        const auto& psi = x.incidence_homs[p];
        // port: restrict psi to the (1, -, v0) / (2, -, v0) blocks
        std::vector<int> vv(g.vertices().size()), ee(g.edges().size()), ii(g.incidences().size());
        for (size_t v = 0; v < g.vertices().size(); ++v)
            vv[v] = psi.vertex_map()[x.prism.vertex_index(tagged_label(1, g.vertices()[v], "v0"))];
        for (size_t e = 0; e < g.edges().size(); ++e)
            ee[e] = psi.edge_map()[x.prism.edge_index(tagged_label(2, g.edges()[e], "v0"))];
        for (size_t i = 0; i < g.incidences().size(); ++i)
            ii[i] = psi.incidence_map()[x.prism.incidence_index(
                tagged_label(1, g.incidences()[i], "v0"))];
        auto restricted = IncidenceMorphism::make(detail::shared(g), hp, vv, ee, ii);
        CHECK(image_label(restricted) ==
              x.carrier.vertices()[x.carrier.port(static_cast<int>(p))]);
        // attachment: restrict to the (4, -, e0) / (3, -, e0) / (2, -, e0) blocks
        std::vector<int> dv(g.edges().size()), de(g.vertices().size()), di(g.incidences().size());
        for (size_t e = 0; e < g.edges().size(); ++e)
            dv[e] = psi.vertex_map()[x.prism.vertex_index(tagged_label(4, g.edges()[e], "e0"))];
        for (size_t v = 0; v < g.vertices().size(); ++v)
            de[v] = psi.edge_map()[x.prism.edge_index(tagged_label(3, g.vertices()[v], "e0"))];
        for (size_t i = 0; i < g.incidences().size(); ++i)
            di[i] = psi.incidence_map()[x.prism.incidence_index(
                tagged_label(2, g.incidences()[i], "e0"))];
        auto dual_restricted = IncidenceMorphism::make(detail::shared(dual(g)), hp, dv, de, di);
        CHECK(image_label(dual_restricted) ==
              x.carrier.edges()[x.carrier.attachment(static_cast<int>(p))]);
    }
}

TEST_CASE("currying the unitor picks the identity hom") {
    auto g = path_r(2);
    auto x = exp_laplacian(g, g);
    auto rho = lap_right_unitor(g);
    auto curried = curry_laplacian(x, rho, unit_vertex_r());
    REQUIRE(curried.vertex_map().size() == 1);
    CHECK(x.vertex_homs[curried.vertex_map()[0]] == identity(g));
}

TEST_CASE("adjunction bijections and unique factorization") {
    auto g = path_r(1), k = path_r(2), h = fixtures::doubled_r();
    auto x = exp_laplacian(g, h);
    auto prod = laplacian_product(g, k);
    auto phis = enumerate_homs(prod, h);
    auto psis = enumerate_homs(k, x.carrier);
    REQUIRE(phis.size() == psis.size());
    for (const auto& psi : psis) CHECK(curry_laplacian(x, uncurry_laplacian(x, psi), k) == psi);
    size_t checked = 0;
    for (const auto& phi : phis) {
        auto psi = curry_laplacian(x, phi, k);
        CHECK(uncurry_laplacian(x, psi) == phi);
        if (checked++ < 25) {
            int found = 0;
            for (const auto& cand : psis)
                if (uncurry_laplacian(x, cand) == phi) found++;
            CHECK(found == 1);
        }
    }

    auto xq = exp_box_q(path_q(1), cycle_q(2));
    auto kq = cycle_q(2);
    auto qphis = enumerate_homs(box_q(path_q(1), kq), cycle_q(2));
    auto qpsis = enumerate_homs(kq, xq.carrier);
    CHECK(qphis.size() == qpsis.size());
    for (const auto& phi : qphis)
        CHECK(uncurry_box_q(xq, curry_box_q(xq, phi, kq)) == phi);

    auto xr = exp_box_r(g, h);
    auto rphis = enumerate_homs(box_r(g, k), h);
    auto rpsis = enumerate_homs(k, xr.carrier);
    CHECK(rphis.size() == rpsis.size());
    for (const auto& phi : rphis)
        CHECK(uncurry_box_r(xr, curry_box_r(xr, phi, k)) == phi);

    auto xh = exp_box_h(path_h(1), cycle_h(2));
    auto kh = path_h(1);
    for (const auto& phi : detail::take_prefix(enumerate_homs(box_h(path_h(1), kh), cycle_h(2)), 32))
        CHECK(uncurry_box_h(xh, curry_box_h(xh, phi, kh)) == phi);

    auto xm = exp_box_m(path_h(1), cycle_h(2));
    CHECK(count_homs(kh, xm.carrier) == count_homs(box_h(path_h(1), kh), cycle_h(2)));
    for (const auto& phi : detail::take_prefix(enumerate_homs(box_h(path_h(1), kh), cycle_h(2)), 32))
        CHECK(uncurry_box_m(xm, curry_box_m(xm, phi, kh)) == phi);

    CHECK_THROWS_AS(curry_laplacian(x, phis.front(), h), std::invalid_argument);
}

TEST_CASE("the two incidence exponentials share their vertex sort") {
    Rng rng(8);
    for (int it = 0; it < 6; ++it) {
        auto g = gen::incidence(rng, 2, 1, 2);
        auto h = gen::incidence(rng, 2, 2, 3);
        CHECK(exp_box_r(g, h).carrier.vertices() == exp_laplacian(g, h).carrier.vertices());
    }
}

TEST_CASE("size guard rejects oversized enumerations") {
    CHECK_THROWS_AS(exp_box_h(path_h(1), cycle_h(2), 2), SizeGuardError);
    // 3 edges ^ 9 vertices = 19683 functions > 2^8
    auto big = IncidenceHypergraph::make(
        {"a", "b", "c", "d", "e", "f", "g", "h", "i"}, {}, {}, {}, {});
    auto three = IncidenceHypergraph::make({}, {"x", "y", "z"}, {}, {}, {});
    CHECK_THROWS_AS(exp_box_r(big, three, 8), SizeGuardError);
    CHECK(default_size_guard() >= 1);
}
