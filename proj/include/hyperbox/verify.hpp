#pragma once

// Property suites behind the `verify` command and the acceptance tests.
// Every suite draws its corpus from a seeded generator and returns a
// CheckReport whose text is byte-stable for a fixed seed.

#include "functors.hpp"
#include "random_gen.hpp"
#include "spectral.hpp"

namespace hyperbox {
namespace detail {

template <class M>
std::vector<M> take_prefix(std::vector<M> xs, size_t cap) {
    if (xs.size() > cap) xs.resize(cap);
    return xs;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coherence
// ---------------------------------------------------------------------------

/// Pentagon, triangle, and hexagon for the four box products and the
/// Laplacian product, commutator involutivity, bifunctoriality on
/// enumerated morphisms, the anti-unitor triangle, and the two composite
/// routes of the duality triangle diagram.
inline CheckReport coherence_suite(std::uint64_t seed, int pairs = 10) {
    CheckReport rep;
    Rng rng(seed);

    bool pent_q = true, pent_h = true, pent_m = true, pent_r = true, pent_l = true;
    bool tri_q = true, tri_h = true, tri_m = true, tri_r = true, tri_l = true;
    bool hex_q = true, hex_h = true, hex_m = true, hex_r = true, hex_l = true;
    bool inv_q = true, inv_h = true, inv_m = true, inv_r = true, inv_l = true;
    bool anti_tri = true, triforce_ok = true, closure = true, cards = true;

    for (int it = 0; it < pairs; ++it) {
        // quiver laws
        {
            auto W = gen::quiver(rng, 2, 2), X = gen::quiver(rng, 2, 2);
            auto Y = gen::quiver(rng, 2, 2), Z = gen::quiver(rng, 2, 2);
            auto left = compose(associator_q(W, X, box_q(Y, Z)), associator_q(box_q(W, X), Y, Z));
            auto right = compose(compose(box_q_mor(identity(W), associator_q(X, Y, Z)),
                                         associator_q(W, box_q(X, Y), Z)),
                                 box_q_mor(associator_q(W, X, Y), identity(Z)));
            pent_q = pent_q && left == right;
            auto t1 = compose(box_q_mor(identity(W), left_unitor_q(X)),
                              associator_q(W, unit_vertex_q(), X));
            tri_q = tri_q && t1 == box_q_mor(right_unitor_q(W), identity(X));
            auto h1 = compose(associator_q(X, Y, W),
                              compose(commutator_q(W, box_q(X, Y)), associator_q(W, X, Y)));
            auto h2 = compose(box_q_mor(identity(X), commutator_q(W, Y)),
                              compose(associator_q(X, W, Y),
                                      box_q_mor(commutator_q(W, X), identity(Y))));
            hex_q = hex_q && h1 == h2;
            inv_q = inv_q && compose(commutator_q(X, W), commutator_q(W, X)) ==
                                 identity(box_q(W, X)) &&
                    compose(right_unitor_q(W), inverse(right_unitor_q(W))) == identity(W) &&
                    compose(left_unitor_q(W), inverse(left_unitor_q(W))) == identity(W);
            cards = cards && box_q(W, X).edges().size() ==
                                 W.edges().size() * X.vertices().size() +
                                     W.vertices().size() * X.edges().size();
        }
        // set-system laws
        {
            auto W = gen::hypergraph(rng, 2, 2, 3), X = gen::hypergraph(rng, 2, 2, 3);
            auto Y = gen::hypergraph(rng, 2, 2, 3), Z = gen::hypergraph(rng, 2, 2, 3);
            auto left = compose(associator_h(W, X, box_h(Y, Z)), associator_h(box_h(W, X), Y, Z));
            auto right = compose(compose(box_h_mor(identity(W), associator_h(X, Y, Z)),
                                         associator_h(W, box_h(X, Y), Z)),
                                 box_h_mor(associator_h(W, X, Y), identity(Z)));
            pent_h = pent_h && left == right;
            auto t1 = compose(box_h_mor(identity(W), left_unitor_h(X)),
                              associator_h(W, unit_vertex_h(), X));
            tri_h = tri_h && t1 == box_h_mor(right_unitor_h(W), identity(X));
            auto h1 = compose(associator_h(X, Y, W),
                              compose(commutator_h(W, box_h(X, Y)), associator_h(W, X, Y)));
            auto h2 = compose(box_h_mor(identity(X), commutator_h(W, Y)),
                              compose(associator_h(X, W, Y),
                                      box_h_mor(commutator_h(W, X), identity(Y))));
            hex_h = hex_h && h1 == h2;
            inv_h = inv_h && compose(commutator_h(X, W), commutator_h(W, X)) ==
                                 identity(box_h(W, X)) &&
                    compose(right_unitor_h(W), inverse(right_unitor_h(W))) == identity(W);
            cards = cards && box_h(W, X).vertices().size() ==
                                 W.vertices().size() * X.vertices().size();
        }
        // multigraph laws (the restriction of the set-system structure)
        {
            auto W = gen::multigraph(rng, 2, 2), X = gen::multigraph(rng, 2, 2);
            auto Y = gen::multigraph(rng, 2, 2), Z = gen::multigraph(rng, 2, 2);
            closure = closure && box_h(W, X).is_multigraph();
            auto left = compose(associator_h(W, X, box_h(Y, Z)), associator_h(box_h(W, X), Y, Z));
            auto right = compose(compose(box_h_mor(identity(W), associator_h(X, Y, Z)),
                                         associator_h(W, box_h(X, Y), Z)),
                                 box_h_mor(associator_h(W, X, Y), identity(Z)));
            pent_m = pent_m && left == right;
            auto t1 = compose(box_h_mor(identity(W), left_unitor_h(X)),
                              associator_h(W, unit_vertex_h(), X));
            tri_m = tri_m && t1 == box_h_mor(right_unitor_h(W), identity(X));
            auto h1 = compose(associator_h(X, Y, W),
                              compose(commutator_h(W, box_h(X, Y)), associator_h(W, X, Y)));
            auto h2 = compose(box_h_mor(identity(X), commutator_h(W, Y)),
                              compose(associator_h(X, W, Y),
                                      box_h_mor(commutator_h(W, X), identity(Y))));
            hex_m = hex_m && h1 == h2;
            inv_m = inv_m && compose(commutator_h(X, W), commutator_h(W, X)) ==
                                 identity(box_h(W, X));
        }
        // incidence box laws
        {
            auto W = gen::incidence(rng, 2, 2, 2), X = gen::incidence(rng, 2, 2, 2);
            auto Y = gen::incidence(rng, 2, 2, 2), Z = gen::incidence(rng, 2, 2, 2);
            auto left = compose(associator_r(W, X, box_r(Y, Z)), associator_r(box_r(W, X), Y, Z));
            auto right = compose(compose(box_r_mor(identity(W), associator_r(X, Y, Z)),
                                         associator_r(W, box_r(X, Y), Z)),
                                 box_r_mor(associator_r(W, X, Y), identity(Z)));
            pent_r = pent_r && left == right;
            auto t1 = compose(box_r_mor(identity(W), left_unitor_r(X)),
                              associator_r(W, unit_vertex_r(), X));
            tri_r = tri_r && t1 == box_r_mor(right_unitor_r(W), identity(X));
            auto h1 = compose(associator_r(X, Y, W),
                              compose(commutator_r(W, box_r(X, Y)), associator_r(W, X, Y)));
            auto h2 = compose(box_r_mor(identity(X), commutator_r(W, Y)),
                              compose(associator_r(X, W, Y),
                                      box_r_mor(commutator_r(W, X), identity(Y))));
            hex_r = hex_r && h1 == h2;
            inv_r = inv_r && compose(commutator_r(X, W), commutator_r(W, X)) ==
                                 identity(box_r(W, X)) &&
                    compose(right_unitor_r(W), inverse(right_unitor_r(W))) == identity(W);
            cards = cards && box_r(W, X).incidences().size() ==
                                 W.incidences().size() * X.vertices().size() +
                                     W.vertices().size() * X.incidences().size();
        }
        // Laplacian laws
        {
            auto W = gen::incidence(rng, 2, 2, 2), X = gen::incidence(rng, 2, 2, 2);
            auto Y = gen::incidence(rng, 2, 2, 2), Z = gen::incidence(rng, 2, 2, 2);
            auto left = compose(lap_associator(W, X, laplacian_product(Y, Z)),
                                lap_associator(laplacian_product(W, X), Y, Z));
            auto right = compose(compose(laplacian_mor(identity(W), lap_associator(X, Y, Z)),
                                         lap_associator(W, laplacian_product(X, Y), Z)),
                                 laplacian_mor(lap_associator(W, X, Y), identity(Z)));
            pent_l = pent_l && left == right;
            auto t1 = compose(laplacian_mor(identity(W), lap_left_unitor(X)),
                              lap_associator(W, unit_vertex_r(), X));
            tri_l = tri_l && t1 == laplacian_mor(lap_right_unitor(W), identity(X));
            auto h1 = compose(lap_associator(X, Y, W),
                              compose(lap_commutator(W, laplacian_product(X, Y)),
                                      lap_associator(W, X, Y)));
            auto h2 = compose(laplacian_mor(identity(X), lap_commutator(W, Y)),
                              compose(lap_associator(X, W, Y),
                                      laplacian_mor(lap_commutator(W, X), identity(Y))));
            hex_l = hex_l && h1 == h2;
            inv_l = inv_l && compose(lap_commutator(X, W), lap_commutator(W, X)) ==
                                 identity(laplacian_product(W, X)) &&
                    compose(lap_right_unitor(W), inverse(lap_right_unitor(W))) == identity(W) &&
                    compose(lap_left_unitor(W), inverse(lap_left_unitor(W))) == identity(W);
            cards = cards && laplacian_product(W, X).vertices().size() ==
                                 W.vertices().size() * X.vertices().size() +
                                     W.edges().size() * X.edges().size();

            // anti-unitor triangle: lambda-hat after the commutator is rho-hat
            anti_tri = anti_tri &&
                       compose(anti_unitor_left(W), lap_commutator(W, unit_edge_r())) ==
                           anti_unitor_right(W);

            // duality triangle: both composite routes (G lap H)-dual -> G-dual lap H agree
            auto GH = laplacian_product(W, X);
            auto e1 = unit_edge_r();
            auto routeA =
                compose(laplacian_mor(anti_unitor_left(W), identity(X)),
                        compose(inverse(lap_associator(e1, W, X)), inverse(anti_unitor_left(GH))));
            auto routeB = compose(
                laplacian_mor(compose(anti_unitor_right(W), lap_commutator(e1, W)), identity(X)),
                compose(inverse(lap_associator(e1, W, X)),
                        compose(lap_commutator(GH, e1), inverse(anti_unitor_right(GH)))));
            auto routeC =
                compose(laplacian_mor(identity(W), anti_unitor_right(X)),
                        compose(lap_associator(W, X, e1), inverse(anti_unitor_right(GH))));
            auto routeD = compose(
                laplacian_mor(identity(W), compose(anti_unitor_left(X), lap_commutator(X, e1))),
                compose(lap_associator(W, X, e1), inverse(anti_unitor_right(GH))));
            triforce_ok = triforce_ok && routeA == routeB && routeC == routeD &&
                          is_isomorphic(dual(GH), laplacian_product(dual(W), X)) &&
                          is_isomorphic(dual(GH), laplacian_product(W, dual(X)));
        }
    }

    auto n = std::to_string(pairs);
    rep.check(pent_q, "pentagon holds for box-q on " + n + " random quadruples");
    rep.check(pent_h, "pentagon holds for box-h on " + n + " random quadruples");
    rep.check(pent_m, "pentagon holds for box-m on " + n + " random quadruples");
    rep.check(pent_r, "pentagon holds for box-r on " + n + " random quadruples");
    rep.check(pent_l, "pentagon holds for the Laplacian product on " + n + " random quadruples");
    rep.check(tri_q && tri_h && tri_m && tri_r && tri_l,
              "unitor triangle holds for all five products");
    rep.check(hex_q && hex_h && hex_m && hex_r && hex_l,
              "commutator hexagon holds for all five products");
    rep.check(inv_q && inv_h && inv_m && inv_r && inv_l,
              "unitors and commutators invert as constructed");
    rep.check(anti_tri, "anti-unitor triangle: lambda-hat o gamma = rho-hat");
    rep.check(triforce_ok, "duality-triangle composite isomorphisms agree on both coordinates");
    rep.check(closure, "box product of multigraphs is a multigraph");
    rep.check(cards, "tagged-union cardinality identities hold");

    // bifunctoriality over enumerated morphisms of fixed small chains
    {
        bool bif = true;
        auto f1s = detail::take_prefix(enumerate_homs(path_r(1), path_r(2)), 3);
        auto f2s = detail::take_prefix(enumerate_homs(path_r(2), cycle_r(1)), 3);
        auto g1s = detail::take_prefix(enumerate_homs(unit_incidence_r(), path_r(1)), 3);
        auto g2s = detail::take_prefix(enumerate_homs(path_r(1), cycle_r(2)), 3);
        for (auto& f1 : f1s)
            for (auto& f2 : f2s)
                for (auto& g1 : g1s)
                    for (auto& g2 : g2s) {
                        bif = bif && laplacian_mor(compose(f2, f1), compose(g2, g1)) ==
                                         compose(laplacian_mor(f2, g2), laplacian_mor(f1, g1));
                        bif = bif && box_r_mor(compose(f2, f1), compose(g2, g1)) ==
                                         compose(box_r_mor(f2, g2), box_r_mor(f1, g1));
                    }
        auto a = path_r(2), b = cycle_r(1);
        bif = bif && laplacian_mor(identity(a), identity(b)) == identity(laplacian_product(a, b));
        bif = bif && box_r_mor(identity(a), identity(b)) == identity(box_r(a, b));
        auto q1s = detail::take_prefix(enumerate_homs(path_q(1), path_q(2)), 3);
        auto q2s = detail::take_prefix(enumerate_homs(path_q(2), cycle_q(2)), 3);
        for (auto& f1 : q1s)
            for (auto& f2 : q2s)
                for (auto& g1 : q1s)
                    for (auto& g2 : q2s)
                        bif = bif && box_q_mor(compose(f2, f1), compose(g2, g1)) ==
                                         compose(box_q_mor(f2, g2), box_q_mor(f1, g1));
        auto h1s = detail::take_prefix(enumerate_homs(path_h(1), path_h(2)), 3);
        auto h2s = detail::take_prefix(enumerate_homs(path_h(2), cycle_h(2)), 3);
        for (auto& f1 : h1s)
            for (auto& f2 : h2s)
                for (auto& g1 : h1s)
                    for (auto& g2 : h2s)
                        bif = bif && box_h_mor(compose(f2, f1), compose(g2, g1)) ==
                                         compose(box_h_mor(f2, g2), box_h_mor(f1, g1));
        rep.check(bif, "products are bifunctors on enumerated morphisms");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Adjunctions
// ---------------------------------------------------------------------------

namespace detail {

struct AdjunctionStats {
    long long triples = 0;
    bool counts_ok = true, round_ok = true, unique_ok = true;
};

template <class ExpT, class ProdObj, class Mor>
void adjunction_case(AdjunctionStats& st, const ExpT& x, const ProdObj& prod,
                     const std::vector<Mor>& phis, const std::vector<Mor>& psis,
                     const std::function<Mor(const Mor&)>& do_curry,
                     const std::function<Mor(const Mor&)>& do_uncurry) {
    (void)prod;
    st.triples++;
    st.counts_ok = st.counts_ok && phis.size() == psis.size();
    auto phi_sample = take_prefix(phis, 40);
    for (const auto& phi : phi_sample) {
        auto psi = do_curry(phi);
        if (!(do_uncurry(psi) == phi)) st.round_ok = false;
        int found = 0;
        for (const auto& cand : psis)
            if (do_uncurry(cand) == phi) found++;
        if (found != 1) st.unique_ok = false;
    }
    for (const auto& psi : take_prefix(psis, 40))
        if (!(do_curry(do_uncurry(psi)) == psi)) st.round_ok = false;
    (void)x;
}

}  // namespace detail

/// Hom-set bijections, curry/uncurry round trips, and uniqueness of the
/// universal factorization for all five exponentials.
inline CheckReport adjunction_suite(std::uint64_t seed, int triples = 10) {
    CheckReport rep;
    Rng rng(seed);
    detail::AdjunctionStats q, h, m, r, l;

    for (int it = 0; it < triples; ++it) {
        {
            auto G = gen::quiver(rng, 2, 2), K = gen::quiver(rng, 2, 2), H = gen::quiver(rng, 3, 3);
            auto x = exp_box_q(G, H);
            auto prod = box_q(G, K);
            auto phis = enumerate_homs(prod, H);
            auto psis = enumerate_homs(K, x.carrier);
            detail::adjunction_case<QuiverExponential, Quiver, QuiverMorphism>(
                q, x, prod, phis, psis,
                [&](const QuiverMorphism& p) { return curry_box_q(x, p, K); },
                [&](const QuiverMorphism& p) { return uncurry_box_q(x, p); });
        }
        {
            auto G = gen::hypergraph(rng, 2, 1, 2), K = gen::hypergraph(rng, 2, 2, 2),
                 H = gen::hypergraph(rng, 2, 2, 2);
            auto x = exp_box_h(G, H);
            auto prod = box_h(G, K);
            auto phis = enumerate_homs(prod, H);
            auto psis = enumerate_homs(K, x.carrier);
            detail::adjunction_case<HypergraphExponential, SetSystemHypergraph,
                                    HypergraphMorphism>(
                h, x, prod, phis, psis,
                [&](const HypergraphMorphism& p) { return curry_box_h(x, p, K); },
                [&](const HypergraphMorphism& p) { return uncurry_box_h(x, p); });
        }
        {
            auto G = gen::multigraph(rng, 2, 1), K = gen::multigraph(rng, 2, 2),
                 H = gen::multigraph(rng, 2, 2);
            auto x = exp_box_m(G, H);
            auto prod = box_h(G, K);
            auto phis = enumerate_homs(prod, H);
            auto psis = enumerate_homs(K, x.carrier);
            detail::adjunction_case<MultigraphExponential, SetSystemHypergraph,
                                    HypergraphMorphism>(
                m, x, prod, phis, psis,
                [&](const HypergraphMorphism& p) { return curry_box_m(x, p, K); },
                [&](const HypergraphMorphism& p) { return uncurry_box_m(x, p); });
        }
        {
            auto G = gen::incidence(rng, 2, 1, 2), K = gen::incidence(rng, 2, 2, 2),
                 H = gen::incidence(rng, 2, 2, 3);
            auto x = exp_box_r(G, H);
            auto prod = box_r(G, K);
            auto phis = enumerate_homs(prod, H);
            auto psis = enumerate_homs(K, x.carrier);
            detail::adjunction_case<BoxRExponential, IncidenceHypergraph, IncidenceMorphism>(
                r, x, prod, phis, psis,
                [&](const IncidenceMorphism& p) { return curry_box_r(x, p, K); },
                [&](const IncidenceMorphism& p) { return uncurry_box_r(x, p); });
        }
        {
            auto G = gen::incidence(rng, 2, 1, 2), K = gen::incidence(rng, 2, 2, 2),
                 H = gen::incidence(rng, 2, 2, 3);
            auto x = exp_laplacian(G, H);
            auto prod = laplacian_product(G, K);
            auto phis = enumerate_homs(prod, H);
            auto psis = enumerate_homs(K, x.carrier);
            detail::adjunction_case<LaplacianExponential, IncidenceHypergraph, IncidenceMorphism>(
                l, x, prod, phis, psis,
                [&](const IncidenceMorphism& p) { return curry_laplacian(x, p, K); },
                [&](const IncidenceMorphism& p) { return uncurry_laplacian(x, p); });
        }
    }

    auto report_kind = [&](const char* name, const detail::AdjunctionStats& st) {
        auto n = std::to_string(st.triples);
        rep.check(st.counts_ok, std::string(name) + ": hom-set sizes agree across the adjunction (" + n + " triples)");
        rep.check(st.round_ok, std::string(name) + ": curry/uncurry round trips are identities");
        rep.check(st.unique_ok, std::string(name) + ": the universal factorization is unique");
    };
    report_kind("box-q", q);
    report_kind("box-h", h);
    report_kind("box-m", m);
    report_kind("box-v", r);
    report_kind("laplacian", l);

    // the two path-evaluated exponentials share their vertex sort
    {
        bool agree = true;
        Rng rng2(seed + 1);
        for (int it = 0; it < triples; ++it) {
            auto G = gen::incidence(rng2, 2, 1, 2), H = gen::incidence(rng2, 2, 2, 3);
            agree = agree &&
                    exp_box_r(G, H).carrier.vertices() == exp_laplacian(G, H).carrier.vertices();
        }
        rep.check(agree, "box-v and laplacian exponentials agree on vertex sets");
    }
    // duality of the Laplacian exponential
    {
        bool dual_ok = true;
        Rng rng2(seed + 2);
        for (int it = 0; it < triples; ++it) {
            auto G = gen::incidence(rng2, 2, 1, 2), H = gen::incidence(rng2, 2, 2, 2);
            auto x = exp_laplacian(G, H);
            dual_ok = dual_ok && is_isomorphic(dual(x.carrier), exp_laplacian(G, dual(H)).carrier);
            dual_ok = dual_ok && is_isomorphic(dual(x.carrier), exp_laplacian(dual(G), H).carrier);
        }
        rep.check(dual_ok, "laplacian exponential duality: [G,H]# ~ [G,H#] ~ [G#,H]");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Functors
// ---------------------------------------------------------------------------

inline CheckReport functor_suite(std::uint64_t seed, int pairs = 10) {
    CheckReport rep;
    Rng rng(seed);

    bool u_strict = true, del_strict = true, n_strict = true;
    bool psi_iso = true, phi_iso = true, Psi_iso = true, unit_maps_ok = true;
    bool ubip_monoidal = true;
    for (int it = 0; it < pairs; ++it) {
        auto Q = gen::quiver(rng, 3, 3), P = gen::quiver(rng, 3, 3);
        u_strict = u_strict && undirect(box_q(Q, P)) == box_h(undirect(Q), undirect(P));
        auto A = gen::hypergraph(rng, 3, 3, 3), B = gen::hypergraph(rng, 3, 3, 3);
        del_strict = del_strict && del(box_h(A, B)) == box_h(del(A), del(B));
        auto M1 = gen::multigraph(rng, 3, 3), M2 = gen::multigraph(rng, 3, 3);
        n_strict = n_strict && inclusion_n(box_h(M1, M2)) == box_h(inclusion_n(M1), inclusion_n(M2));
        auto psi = digraph_structure_psi(M1, M2);
        psi_iso = psi_iso && compose(psi, inverse(psi)) == identity(psi.codomain());
        auto phi = incidence_structure_phi(A, B);
        phi_iso = phi_iso && compose(phi, inverse(phi)) == identity(phi.codomain());
        auto G = gen::incidence(rng, 2, 2, 3), H = gen::incidence(rng, 2, 2, 3);
        auto Psi = bipartite_structure_psi(G, H);
        Psi_iso = Psi_iso && compose(Psi, inverse(Psi)) == identity(Psi.codomain());
        ubip_monoidal = ubip_monoidal && is_isomorphic(u_bipartite(laplacian_product(G, H)),
                                                       box_h(u_bipartite(G), u_bipartite(H)));
    }
    {
        auto psiu = digraph_structure_psi_unit();
        auto Psiu = bipartite_structure_psi_unit();
        unit_maps_ok = compose(psiu, inverse(psiu)) == identity(psiu.codomain()) &&
                       compose(Psiu, inverse(Psiu)) == identity(Psiu.codomain());
    }
    rep.check(u_strict, "U is strict monoidal on objects: U(Q box P) = U(Q) box U(P)");
    rep.check(n_strict, "N is strict monoidal on objects");
    rep.check(del_strict, "Del is strict monoidal on objects");
    rep.check(psi_iso && unit_maps_ok, "psi and its unit map are isomorphisms");
    rep.check(phi_iso, "Phi is an isomorphism");
    rep.check(Psi_iso, "Psi is an isomorphism");
    rep.check(ubip_monoidal,
              "bipartite representation carries the Laplacian product to the box product");

    // naturality of Psi and Phi on enumerated morphisms of fixed objects
    {
        bool nat = true;
        auto fs = detail::take_prefix(enumerate_homs(path_r(1), path_r(2)), 4);
        auto gs = detail::take_prefix(enumerate_homs(cycle_r(1), cycle_r(2)), 4);
        for (auto& f : fs)
            for (auto& g : gs) {
                auto left = compose(bipartite_structure_psi(f.codomain(), g.codomain()),
                                    box_h_mor(u_bipartite_mor(f), u_bipartite_mor(g)));
                auto right = compose(u_bipartite_mor(laplacian_mor(f, g)),
                                     bipartite_structure_psi(f.domain(), g.domain()));
                nat = nat && left == right;
            }
        auto hs = detail::take_prefix(enumerate_homs(path_h(1), path_h(2)), 4);
        auto ks = detail::take_prefix(enumerate_homs(cycle_h(2), cycle_h(2)), 4);
        for (auto& f : hs)
            for (auto& g : ks) {
                auto left = compose(incidence_structure_phi(f.codomain(), g.codomain()),
                                    box_r_mor(incidence_forming_mor(f), incidence_forming_mor(g)));
                auto right = compose(incidence_forming_mor(box_h_mor(f, g)),
                                     incidence_structure_phi(f.domain(), g.domain()));
                nat = nat && left == right;
            }
        rep.check(nat, "Psi and Phi naturality squares commute on enumerated morphisms");
    }
    // functoriality on enumerated morphisms
    {
        bool fun = true;
        auto fs = detail::take_prefix(enumerate_homs(path_r(1), path_r(2)), 4);
        auto gs = detail::take_prefix(enumerate_homs(path_r(2), cycle_r(1)), 4);
        for (auto& f : fs)
            for (auto& g : gs) {
                fun = fun && bipartite_incidence_mor(compose(g, f)) ==
                                 compose(bipartite_incidence_mor(g), bipartite_incidence_mor(f));
                fun = fun && dual_mor(compose(g, f)) == compose(dual_mor(g), dual_mor(f));
            }
        auto qs = detail::take_prefix(enumerate_homs(path_q(1), path_q(2)), 4);
        auto rs = detail::take_prefix(enumerate_homs(path_q(2), cycle_q(2)), 4);
        for (auto& f : qs)
            for (auto& g : rs)
                fun = fun && undirect_mor(compose(g, f)) ==
                                 compose(undirect_mor(g), undirect_mor(f));
        fun = fun && bipartite_incidence_mor(identity(path_r(2))) ==
                         identity(bipartite_incidence(path_r(2)));
        fun = fun && undirect_mor(identity(path_q(2))) == identity(undirect(path_q(2)));
        rep.check(fun, "functors preserve identities and composition on enumerated morphisms");
    }
    // the path doubling law for the bipartite representation
    {
        bool ok = true;
        for (int n = 1; n <= 6; ++n) ok = ok && is_isomorphic(u_bipartite(path_r(n)), path_h(n));
        rep.check(ok, "bipartite representation doubles paths: UY(P_{n/2}) ~ P_n for n = 1..6");
    }
    // unit objects do not transport along the directed functor
    {
        auto one = unit_incidence_r();
        auto lhs = bipartite_incidence(laplacian_product(one, one));
        auto rhs = box_q(bipartite_incidence(one), bipartite_incidence(one));
        rep.check(!is_isomorphic(lhs, rhs),
                  "Y(1 lap 1) and Y(1) box Y(1) are not isomorphic as quivers");
        rep.check(is_isomorphic(undirect(lhs), undirect(rhs)),
                  "their undirected images are isomorphic");
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Weak walks and the census
// ---------------------------------------------------------------------------

/// Random oriented corpus: matrix identities and the walk classification.
inline CheckReport weakwalk_suite(std::uint64_t seed, int objects = 20, int k_max = 2) {
    CheckReport rep;
    Rng rng(seed);
    bool transpose_ok = true;
    CheckReport merged;
    for (int it = 0; it < objects; ++it) {
        auto g = gen::incidence(rng, 6, 6, 12, 1, 0);
        auto o = gen::orientation(rng, g);
        auto oriented = OrientedHypergraph::make(g, o);
        auto sub = verify_weak_walk_theorem(oriented, k_max);
        if (!sub.ok) merged.merge(sub);
        merged.ok = merged.ok && sub.ok;
        auto od = OrientedHypergraph::make(dual(g), o);
        transpose_ok =
            transpose_ok && incidence_matrix(od) == incidence_matrix(oriented).transpose();
    }
    rep.check(merged.ok, "weak-walk theorem verified on " + std::to_string(objects) +
                             " random oriented hypergraphs (k <= " + std::to_string(k_max) + ")");
    for (const auto& l : merged.lines)
        if (l.rfind("FAIL", 0) == 0) rep.lines.push_back(l);
    rep.check(transpose_ok, "incidence matrix of the dual is the transpose");
    rep.ok = rep.ok && merged.ok;
    return rep;
}

/// All-plus corpus: matrix powers against unsigned walk counts.
inline CheckReport halfpower_suite(std::uint64_t seed, int objects = 10, int k_max = 4) {
    CheckReport rep;
    Rng rng(seed);
    bool all_ok = true;
    for (int it = 0; it < objects; ++it) {
        auto g = gen::incidence(rng, 6, 6, 12, 1, 0);
        auto sub = verify_weak_walk_theorem(OrientedHypergraph::extroverted(g), k_max);
        all_ok = all_ok && sub.ok;
        if (!sub.ok)
            for (const auto& l : sub.lines)
                if (l.rfind("FAIL", 0) == 0) rep.lines.push_back(l);
    }
    rep.check(all_ok, "half-power correspondence holds on " + std::to_string(objects) +
                          " extroverted objects for k = 1.." + std::to_string(k_max));
    return rep;
}

inline CheckReport census_suite(std::uint64_t seed, int objects = 10, int k_max = 2) {
    CheckReport rep;
    Rng rng(seed);
    for (int it = 0; it < objects; ++it) {
        auto g = gen::incidence(rng, 3, 3, 6, 1, 1);
        for (int k = 1; k <= k_max; ++k) rep.merge(laplacian_exponential_census(g, k));
    }
    return rep;
}

inline CheckReport weakwalk_files(const std::vector<OrientedHypergraph>& objs, int k_max) {
    CheckReport rep;
    for (const auto& g : objs) rep.merge(verify_weak_walk_theorem(g, k_max));
    return rep;
}

inline CheckReport census_files(const std::vector<IncidenceHypergraph>& objs, int k_max) {
    CheckReport rep;
    for (const auto& g : objs)
        for (int k = 1; k <= k_max; ++k) rep.merge(laplacian_exponential_census(g, k));
    return rep;
}

}  // namespace hyperbox
