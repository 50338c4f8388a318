#pragma once

// Functors between the graph-like categories: undirecting U, the
// associated digraph D, the multigraph inclusion N and its right adjoint
// Del, the incidence-forming functor, and the bipartite incidence functor
// with its undirected composite. Also their monoidal structure morphisms
// (psi for D, Phi for incidence-forming, Psi for the bipartite composite).

#include "products.hpp"

namespace hyperbox {

// ---------------------------------------------------------------------------
// U : quivers -> multigraphs
// ---------------------------------------------------------------------------

/// Undirects: same vertices and edges, endpoints {source, target}.
inline SetSystemHypergraph undirect(const Quiver& q) {
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (size_t e = 0; e < q.edges().size(); ++e) {
        const std::string& s = q.vertices()[q.source(static_cast<int>(e))];
        const std::string& t = q.vertices()[q.target(static_cast<int>(e))];
        std::vector<std::string> ends = {s};
        if (t != s) ends.push_back(t);
        eps.push_back({q.edges()[e], std::move(ends)});
    }
    return SetSystemHypergraph::make(q.vertices(), q.edges(), eps);
}

inline HypergraphMorphism undirect_mor(const QuiverMorphism& phi) {
    return HypergraphMorphism::make(detail::shared(undirect(phi.domain())),
                                    detail::shared(undirect(phi.codomain())), phi.vertex_map(),
                                    phi.edge_map());
}

// ---------------------------------------------------------------------------
// D : multigraphs -> quivers
// ---------------------------------------------------------------------------

inline std::string arc_label(const std::string& e, const std::string& x, const std::string& y) {
    return e + ":" + x + ":" + y;
}

/// Associated digraph: one arc (e, x, y) per ordering of the endpoints of
/// each proper 2-edge, and a single arc (e, v, v) per loop.
inline Quiver associated_digraph(const SetSystemHypergraph& g) {
    if (!g.is_multigraph())
        throw std::invalid_argument("associated_digraph requires a multigraph");
    std::vector<std::string> es;
    std::vector<std::pair<std::string, std::string>> src, tgt;
    for (size_t e = 0; e < g.edges().size(); ++e) {
        const auto& eps = g.endpoints(static_cast<int>(e));
        const std::string& el = g.edges()[e];
        if (eps.size() == 1) {
            const std::string& v = g.vertices()[eps[0]];
            es.push_back(arc_label(el, v, v));
            src.push_back({es.back(), v});
            tgt.push_back({es.back(), v});
        } else {
            const std::string& x = g.vertices()[eps[0]];
            const std::string& y = g.vertices()[eps[1]];
            es.push_back(arc_label(el, x, y));
            src.push_back({es.back(), x});
            tgt.push_back({es.back(), y});
            es.push_back(arc_label(el, y, x));
            src.push_back({es.back(), y});
            tgt.push_back({es.back(), x});
        }
    }
    return Quiver::make(g.vertices(), std::move(es), src, tgt);
}

inline QuiverMorphism associated_digraph_mor(const HypergraphMorphism& phi) {
    const SetSystemHypergraph& dg = phi.domain();
    const SetSystemHypergraph& cg = phi.codomain();
    auto dom = detail::shared(associated_digraph(dg));
    auto cod = detail::shared(associated_digraph(cg));
    std::vector<int> vmap = phi.vertex_map();
    std::vector<int> emap(dom->edges().size());
    for (size_t a = 0; a < dom->edges().size(); ++a) {
        int x = dom->source(static_cast<int>(a));
        int y = dom->target(static_cast<int>(a));
        // recover the underlying multigraph edge by stripping ":x:y"
        const std::string& l = dom->edges()[a];
        const std::string& xl = dg.vertices()[x];
        const std::string& yl = dg.vertices()[y];
        std::string el = l.substr(0, l.size() - xl.size() - yl.size() - 2);
        int e = dg.edge_index(el);
        if (e < 0) throw std::logic_error("associated_digraph_mor: lost edge " + el);
        emap[a] = detail::must_edge(
            *cod, arc_label(cg.edges()[phi.edge_map()[e]], cg.vertices()[phi.vertex_map()[x]],
                            cg.vertices()[phi.vertex_map()[y]]));
    }
    return QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

// ---------------------------------------------------------------------------
// N and Del between multigraphs and set-system hypergraphs
// ---------------------------------------------------------------------------

/// The inclusion is the identity on data.
inline SetSystemHypergraph inclusion_n(const SetSystemHypergraph& g) {
    if (!g.is_multigraph()) throw std::invalid_argument("inclusion_n requires a multigraph");
    return g;
}

/// Deletes edges whose endpoint set has size other than 1 or 2.
inline SetSystemHypergraph del(const SetSystemHypergraph& g) {
    std::vector<std::string> es;
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (size_t e = 0; e < g.edges().size(); ++e) {
        size_t deg = g.endpoints(static_cast<int>(e)).size();
        if (deg < 1 || deg > 2) continue;
        es.push_back(g.edges()[e]);
        std::vector<std::string> ends;
        for (int v : g.endpoints(static_cast<int>(e))) ends.push_back(g.vertices()[v]);
        eps.push_back({es.back(), std::move(ends)});
    }
    return SetSystemHypergraph::make(g.vertices(), std::move(es), eps);
}

inline HypergraphMorphism del_mor(const HypergraphMorphism& phi) {
    auto dom = detail::shared(del(phi.domain()));
    auto cod = detail::shared(del(phi.codomain()));
    std::vector<int> emap(dom->edges().size());
    for (size_t e = 0; e < dom->edges().size(); ++e) {
        int old_e = phi.domain().edge_index(dom->edges()[e]);
        // direct images preserve sizes 1..2, so the image edge survives Del
        emap[e] = detail::must_edge(*cod,
                                    phi.codomain().edges()[phi.edge_map()[old_e]]);
    }
    return HypergraphMorphism::make(dom, cod, phi.vertex_map(), std::move(emap));
}

// ---------------------------------------------------------------------------
// Incidence-forming functor : set-system hypergraphs -> incidence hypergraphs
// ---------------------------------------------------------------------------

/// Adds one incidence (v, e) per endpoint membership.
inline IncidenceHypergraph incidence_forming(const SetSystemHypergraph& g) {
    std::vector<std::string> is;
    std::vector<std::pair<std::string, std::string>> port, att;
    for (size_t e = 0; e < g.edges().size(); ++e)
        for (int v : g.endpoints(static_cast<int>(e))) {
            is.push_back(pair_label(g.vertices()[v], g.edges()[e]));
            port.push_back({is.back(), g.vertices()[v]});
            att.push_back({is.back(), g.edges()[e]});
        }
    return IncidenceHypergraph::make(g.vertices(), g.edges(), std::move(is), port, att);
}

inline IncidenceMorphism incidence_forming_mor(const HypergraphMorphism& phi) {
    const SetSystemHypergraph& dg = phi.domain();
    const SetSystemHypergraph& cg = phi.codomain();
    auto dom = detail::shared(incidence_forming(dg));
    auto cod = detail::shared(incidence_forming(cg));
    std::vector<int> imap(dom->incidences().size());
    for (size_t e = 0; e < dg.edges().size(); ++e)
        for (int v : dg.endpoints(static_cast<int>(e))) {
            int di = detail::must_incidence(
                *dom, pair_label(dg.vertices()[v], dg.edges()[e]));
            imap[di] = detail::must_incidence(
                *cod, pair_label(cg.vertices()[phi.vertex_map()[v]],
                                 cg.edges()[phi.edge_map()[e]]));
        }
    return IncidenceMorphism::make(dom, cod, phi.vertex_map(), phi.edge_map(), std::move(imap));
}

// ---------------------------------------------------------------------------
// Bipartite incidence functor : incidence hypergraphs -> quivers
// ---------------------------------------------------------------------------

/// Quiver on (1, V) and (2, E) with one arc per incidence, from its port
/// class to its attachment class.
inline Quiver bipartite_incidence(const IncidenceHypergraph& g) {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> src, tgt;
    for (const auto& v : g.vertices()) vs.push_back("1:" + v);
    for (const auto& e : g.edges()) vs.push_back("2:" + e);
    for (size_t i = 0; i < g.incidences().size(); ++i) {
        src.push_back({g.incidences()[i], "1:" + g.vertices()[g.port(static_cast<int>(i))]});
        tgt.push_back({g.incidences()[i], "2:" + g.edges()[g.attachment(static_cast<int>(i))]});
    }
    return Quiver::make(std::move(vs), g.incidences(), src, tgt);
}

inline QuiverMorphism bipartite_incidence_mor(const IncidenceMorphism& phi) {
    const IncidenceHypergraph& dg = phi.domain();
    const IncidenceHypergraph& cg = phi.codomain();
    auto dom = detail::shared(bipartite_incidence(dg));
    auto cod = detail::shared(bipartite_incidence(cg));
    std::vector<int> vmap(dom->vertices().size());
    for (size_t v = 0; v < dg.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, "1:" + dg.vertices()[v])] =
            detail::must_vertex(*cod, "1:" + cg.vertices()[phi.vertex_map()[v]]);
    for (size_t e = 0; e < dg.edges().size(); ++e)
        vmap[detail::must_vertex(*dom, "2:" + dg.edges()[e])] =
            detail::must_vertex(*cod, "2:" + cg.edges()[phi.edge_map()[e]]);
    std::vector<int> emap(dom->edges().size());
    for (size_t i = 0; i < dg.incidences().size(); ++i)
        emap[detail::must_edge(*dom, dg.incidences()[i])] =
            detail::must_edge(*cod, cg.incidences()[phi.incidence_map()[i]]);
    return QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

/// The canonical bipartite representation graph.
inline SetSystemHypergraph u_bipartite(const IncidenceHypergraph& g) {
    return undirect(bipartite_incidence(g));
}

inline HypergraphMorphism u_bipartite_mor(const IncidenceMorphism& phi) {
    return undirect_mor(bipartite_incidence_mor(phi));
}

// ---------------------------------------------------------------------------
// Monoidal structure morphisms
// ---------------------------------------------------------------------------

/// psi : D(G) box D(H) -> D(G box H), an isomorphism for multigraphs.
inline QuiverMorphism digraph_structure_psi(const SetSystemHypergraph& g,
                                            const SetSystemHypergraph& h) {
    auto dgq = associated_digraph(g);
    auto dhq = associated_digraph(h);
    auto dom = detail::shared(box_q(dgq, dhq));
    auto cod = detail::shared(associated_digraph(box_h(g, h)));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    // vertex labels of D(G) are the multigraph's own labels, so the pairs match directly
    for (const auto& v : dgq.vertices())
        for (const auto& w : dhq.vertices())
            vmap[detail::must_vertex(*dom, pair_label(v, w))] =
                detail::must_vertex(*cod, pair_label(v, w));
    for (size_t a = 0; a < dgq.edges().size(); ++a) {
        const std::string& arc = dgq.edges()[a];
        const std::string& v = dgq.vertices()[dgq.source(static_cast<int>(a))];
        const std::string& z = dgq.vertices()[dgq.target(static_cast<int>(a))];
        std::string e = arc.substr(0, arc.size() - v.size() - z.size() - 2);
        for (const auto& w : dhq.vertices()) {
            int di = detail::must_edge(*dom, tagged_label(1, arc, w));
            emap[di] = detail::must_edge(*cod, arc_label(tagged_label(1, e, w), pair_label(v, w),
                                                         pair_label(z, w)));
        }
    }
    for (size_t a = 0; a < dhq.edges().size(); ++a) {
        const std::string& arc = dhq.edges()[a];
        const std::string& w = dhq.vertices()[dhq.source(static_cast<int>(a))];
        const std::string& u = dhq.vertices()[dhq.target(static_cast<int>(a))];
        std::string f = arc.substr(0, arc.size() - w.size() - u.size() - 2);
        for (const auto& v : dgq.vertices()) {
            int di = detail::must_edge(*dom, tagged_label(2, v, arc));
            emap[di] = detail::must_edge(*cod, arc_label(tagged_label(2, v, f), pair_label(v, w),
                                                         pair_label(v, u)));
        }
    }
    return QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

/// psi-dot : V(1) -> D(V(1)).
inline QuiverMorphism digraph_structure_psi_unit() {
    return QuiverMorphism::from_labels(unit_vertex_q(), associated_digraph(unit_vertex_h()),
                                       {{"v0", "v0"}}, {});
}

/// Phi : I(G) box I(H) -> I(G box H), an isomorphism.
inline IncidenceMorphism incidence_structure_phi(const SetSystemHypergraph& g,
                                                 const SetSystemHypergraph& h) {
    auto ig = incidence_forming(g);
    auto ih = incidence_forming(h);
    auto dom = detail::shared(box_r(ig, ih));
    auto cod = detail::shared(incidence_forming(box_h(g, h)));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (const auto& v : ig.vertices())
        for (const auto& w : ih.vertices())
            vmap[detail::must_vertex(*dom, pair_label(v, w))] =
                detail::must_vertex(*cod, pair_label(v, w));
    for (const auto& e : ig.edges())
        for (const auto& w : ih.vertices())
            emap[detail::must_edge(*dom, tagged_label(1, e, w))] =
                detail::must_edge(*cod, tagged_label(1, e, w));
    for (const auto& v : ig.vertices())
        for (const auto& f : ih.edges())
            emap[detail::must_edge(*dom, tagged_label(2, v, f))] =
                detail::must_edge(*cod, tagged_label(2, v, f));
    for (size_t e = 0; e < g.edges().size(); ++e)
        for (int v : g.endpoints(static_cast<int>(e))) {
            std::string ginc = pair_label(g.vertices()[v], g.edges()[e]);
            for (const auto& w : ih.vertices()) {
                int di = detail::must_incidence(*dom, tagged_label(1, ginc, w));
                imap[di] = detail::must_incidence(
                    *cod, pair_label(pair_label(g.vertices()[v], w),
                                     tagged_label(1, g.edges()[e], w)));
            }
        }
    for (size_t f = 0; f < h.edges().size(); ++f)
        for (int w : h.endpoints(static_cast<int>(f))) {
            std::string hinc = pair_label(h.vertices()[w], h.edges()[f]);
            for (const auto& v : ig.vertices()) {
                int di = detail::must_incidence(*dom, tagged_label(2, v, hinc));
                imap[di] = detail::must_incidence(
                    *cod, pair_label(pair_label(v, h.vertices()[w]),
                                     tagged_label(2, v, h.edges()[f])));
            }
        }
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

/// Psi : UY(G) box UY(H) -> UY(G lap H), carrying the graph box product of
/// the bipartite representations onto the Laplacian product.
inline HypergraphMorphism bipartite_structure_psi(const IncidenceHypergraph& g,
                                                  const IncidenceHypergraph& h) {
    auto ug = u_bipartite(g);
    auto uh = u_bipartite(h);
    auto dom = detail::shared(box_h(ug, uh));
    auto cod = detail::shared(u_bipartite(laplacian_product(g, h)));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            vmap[detail::must_vertex(*dom, pair_label("1:" + v, "1:" + w))] =
                detail::must_vertex(*cod, "1:" + tagged_label(1, v, w));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            vmap[detail::must_vertex(*dom, pair_label("2:" + e, "1:" + w))] =
                detail::must_vertex(*cod, "2:" + tagged_label(2, e, w));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            vmap[detail::must_vertex(*dom, pair_label("1:" + v, "2:" + f))] =
                detail::must_vertex(*cod, "2:" + tagged_label(3, v, f));
    for (const auto& e : g.edges())
        for (const auto& f : h.edges())
            vmap[detail::must_vertex(*dom, pair_label("2:" + e, "2:" + f))] =
                detail::must_vertex(*cod, "1:" + tagged_label(4, e, f));
    for (const auto& i : g.incidences()) {
        for (const auto& w : h.vertices())
            emap[detail::must_edge(*dom, tagged_label(1, i, "1:" + w))] =
                detail::must_edge(*cod, tagged_label(1, i, w));
        for (const auto& f : h.edges())
            emap[detail::must_edge(*dom, tagged_label(1, i, "2:" + f))] =
                detail::must_edge(*cod, tagged_label(2, i, f));
    }
    for (const auto& j : h.incidences()) {
        for (const auto& v : g.vertices())
            emap[detail::must_edge(*dom, tagged_label(2, "1:" + v, j))] =
                detail::must_edge(*cod, tagged_label(4, v, j));
        for (const auto& e : g.edges())
            emap[detail::must_edge(*dom, tagged_label(2, "2:" + e, j))] =
                detail::must_edge(*cod, tagged_label(3, e, j));
    }
    return HypergraphMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

/// Psi-dot : V(1) -> UY(V(1)).
inline HypergraphMorphism bipartite_structure_psi_unit() {
    return HypergraphMorphism::from_labels(unit_vertex_h(), u_bipartite(unit_vertex_r()),
                                           {{"v0", "1:v0"}}, {});
}

}  // namespace hyperbox
