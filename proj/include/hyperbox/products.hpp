#pragma once

// The five monoidal products (quiver box, set-system box and its
// multigraph restriction, incidence box, Laplacian), incidence duality,
// and every structure map: unitors, commutators, associators, and the
// Laplacian anti-unitors. Product elements are labeled "x:y" (vertices of
// the box products) or "t:x:y" with the defining integer tag; nested
// products keep nested labels, so associators are honest relabelings.

#include "core.hpp"

namespace hyperbox {

inline std::string pair_label(const std::string& a, const std::string& b) { return a + ":" + b; }

inline std::string tagged_label(int tag, const std::string& a, const std::string& b) {
    return std::to_string(tag) + ":" + a + ":" + b;
}

/// Disjoint-union element of a product object: the defining integer tag
/// plus left/right coordinates.
struct TaggedElement {
    int tag = 0;
    std::string left, right;
    std::string label() const { return tagged_label(tag, left, right); }
};

namespace detail {
// Lookup that must succeed; a miss is a construction bug, not bad input.
template <class Obj>
int must_vertex(const Obj& o, const std::string& l) {
    int i = o.vertex_index(l);
    if (i < 0) throw std::logic_error("product construction lost vertex " + l);
    return i;
}
template <class Obj>
int must_edge(const Obj& o, const std::string& l) {
    int i = o.edge_index(l);
    if (i < 0) throw std::logic_error("product construction lost edge " + l);
    return i;
}
inline int must_incidence(const IncidenceHypergraph& o, const std::string& l) {
    int i = o.incidence_index(l);
    if (i < 0) throw std::logic_error("product construction lost incidence " + l);
    return i;
}
}  // namespace detail

// ---------------------------------------------------------------------------
// Box products
// ---------------------------------------------------------------------------

inline Quiver box_q(const Quiver& q, const Quiver& p) {
    std::vector<std::string> vs, es;
    std::vector<std::pair<std::string, std::string>> src, tgt;
    for (const auto& v : q.vertices())
        for (const auto& w : p.vertices()) vs.push_back(pair_label(v, w));
    for (size_t e = 0; e < q.edges().size(); ++e)
        for (const auto& w : p.vertices()) {
            std::string l = tagged_label(1, q.edges()[e], w);
            es.push_back(l);
            src.push_back({l, pair_label(q.vertices()[q.source(static_cast<int>(e))], w)});
            tgt.push_back({l, pair_label(q.vertices()[q.target(static_cast<int>(e))], w)});
        }
    for (const auto& v : q.vertices())
        for (size_t f = 0; f < p.edges().size(); ++f) {
            std::string l = tagged_label(2, v, p.edges()[f]);
            es.push_back(l);
            src.push_back({l, pair_label(v, p.vertices()[p.source(static_cast<int>(f))])});
            tgt.push_back({l, pair_label(v, p.vertices()[p.target(static_cast<int>(f))])});
        }
    return Quiver::make(std::move(vs), std::move(es), src, tgt);
}

inline QuiverMorphism box_q_mor(const QuiverMorphism& phi, const QuiverMorphism& psi) {
    const Quiver& dq = phi.domain();
    const Quiver& dp = psi.domain();
    const Quiver& cq = phi.codomain();
    const Quiver& cp = psi.codomain();
    auto dom = detail::shared(box_q(dq, dp));
    auto cod = detail::shared(box_q(cq, cp));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < dq.vertices().size(); ++v)
        for (size_t w = 0; w < dp.vertices().size(); ++w) {
            int di = detail::must_vertex(*dom, pair_label(dq.vertices()[v], dp.vertices()[w]));
            vmap[di] = detail::must_vertex(
                *cod, pair_label(cq.vertices()[phi.vertex_map()[v]], cp.vertices()[psi.vertex_map()[w]]));
        }
    for (size_t e = 0; e < dq.edges().size(); ++e)
        for (size_t w = 0; w < dp.vertices().size(); ++w) {
            int di = detail::must_edge(*dom, tagged_label(1, dq.edges()[e], dp.vertices()[w]));
            emap[di] = detail::must_edge(
                *cod, tagged_label(1, cq.edges()[phi.edge_map()[e]], cp.vertices()[psi.vertex_map()[w]]));
        }
    for (size_t v = 0; v < dq.vertices().size(); ++v)
        for (size_t f = 0; f < dp.edges().size(); ++f) {
            int di = detail::must_edge(*dom, tagged_label(2, dq.vertices()[v], dp.edges()[f]));
            emap[di] = detail::must_edge(
                *cod, tagged_label(2, cq.vertices()[phi.vertex_map()[v]], cp.edges()[psi.edge_map()[f]]));
        }
    return QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

inline SetSystemHypergraph box_h(const SetSystemHypergraph& g, const SetSystemHypergraph& h) {
    std::vector<std::string> vs, es;
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices()) vs.push_back(pair_label(v, w));
    for (size_t e = 0; e < g.edges().size(); ++e)
        for (const auto& w : h.vertices()) {
            std::string l = tagged_label(1, g.edges()[e], w);
            es.push_back(l);
            std::vector<std::string> ends;
            for (int v : g.endpoints(static_cast<int>(e)))
                ends.push_back(pair_label(g.vertices()[v], w));
            eps.push_back({l, std::move(ends)});
        }
    for (const auto& v : g.vertices())
        for (size_t f = 0; f < h.edges().size(); ++f) {
            std::string l = tagged_label(2, v, h.edges()[f]);
            es.push_back(l);
            std::vector<std::string> ends;
            for (int w : h.endpoints(static_cast<int>(f)))
                ends.push_back(pair_label(v, h.vertices()[w]));
            eps.push_back({l, std::move(ends)});
        }
    return SetSystemHypergraph::make(std::move(vs), std::move(es), eps);
}

inline HypergraphMorphism box_h_mor(const HypergraphMorphism& phi, const HypergraphMorphism& psi) {
    const SetSystemHypergraph& dg = phi.domain();
    const SetSystemHypergraph& dh = psi.domain();
    const SetSystemHypergraph& cg = phi.codomain();
    const SetSystemHypergraph& ch = psi.codomain();
    auto dom = detail::shared(box_h(dg, dh));
    auto cod = detail::shared(box_h(cg, ch));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < dg.vertices().size(); ++v)
        for (size_t w = 0; w < dh.vertices().size(); ++w) {
            int di = detail::must_vertex(*dom, pair_label(dg.vertices()[v], dh.vertices()[w]));
            vmap[di] = detail::must_vertex(
                *cod, pair_label(cg.vertices()[phi.vertex_map()[v]], ch.vertices()[psi.vertex_map()[w]]));
        }
    for (size_t e = 0; e < dg.edges().size(); ++e)
        for (size_t w = 0; w < dh.vertices().size(); ++w) {
            int di = detail::must_edge(*dom, tagged_label(1, dg.edges()[e], dh.vertices()[w]));
            emap[di] = detail::must_edge(
                *cod, tagged_label(1, cg.edges()[phi.edge_map()[e]], ch.vertices()[psi.vertex_map()[w]]));
        }
    for (size_t v = 0; v < dg.vertices().size(); ++v)
        for (size_t f = 0; f < dh.edges().size(); ++f) {
            int di = detail::must_edge(*dom, tagged_label(2, dg.vertices()[v], dh.edges()[f]));
            emap[di] = detail::must_edge(
                *cod, tagged_label(2, cg.vertices()[phi.vertex_map()[v]], ch.edges()[psi.edge_map()[f]]));
        }
    return HypergraphMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

inline IncidenceHypergraph box_r(const IncidenceHypergraph& g, const IncidenceHypergraph& h) {
    std::vector<std::string> vs, es, is;
    std::vector<std::pair<std::string, std::string>> port, att;
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices()) vs.push_back(pair_label(v, w));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices()) es.push_back(tagged_label(1, e, w));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges()) es.push_back(tagged_label(2, v, f));
    for (size_t i = 0; i < g.incidences().size(); ++i)
        for (const auto& w : h.vertices()) {
            std::string l = tagged_label(1, g.incidences()[i], w);
            is.push_back(l);
            port.push_back({l, pair_label(g.vertices()[g.port(static_cast<int>(i))], w)});
            att.push_back({l, tagged_label(1, g.edges()[g.attachment(static_cast<int>(i))], w)});
        }
    for (const auto& v : g.vertices())
        for (size_t j = 0; j < h.incidences().size(); ++j) {
            std::string l = tagged_label(2, v, h.incidences()[j]);
            is.push_back(l);
            port.push_back({l, pair_label(v, h.vertices()[h.port(static_cast<int>(j))])});
            att.push_back({l, tagged_label(2, v, h.edges()[h.attachment(static_cast<int>(j))])});
        }
    return IncidenceHypergraph::make(std::move(vs), std::move(es), std::move(is), port, att);
}

inline IncidenceMorphism box_r_mor(const IncidenceMorphism& phi, const IncidenceMorphism& psi) {
    const IncidenceHypergraph& dg = phi.domain();
    const IncidenceHypergraph& dh = psi.domain();
    const IncidenceHypergraph& cg = phi.codomain();
    const IncidenceHypergraph& ch = psi.codomain();
    auto dom = detail::shared(box_r(dg, dh));
    auto cod = detail::shared(box_r(cg, ch));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (size_t v = 0; v < dg.vertices().size(); ++v)
        for (size_t w = 0; w < dh.vertices().size(); ++w) {
            int di = detail::must_vertex(*dom, pair_label(dg.vertices()[v], dh.vertices()[w]));
            vmap[di] = detail::must_vertex(
                *cod, pair_label(cg.vertices()[phi.vertex_map()[v]], ch.vertices()[psi.vertex_map()[w]]));
        }
    for (size_t e = 0; e < dg.edges().size(); ++e)
        for (size_t w = 0; w < dh.vertices().size(); ++w) {
            int di = detail::must_edge(*dom, tagged_label(1, dg.edges()[e], dh.vertices()[w]));
            emap[di] = detail::must_edge(
                *cod, tagged_label(1, cg.edges()[phi.edge_map()[e]], ch.vertices()[psi.vertex_map()[w]]));
        }
    for (size_t v = 0; v < dg.vertices().size(); ++v)
        for (size_t f = 0; f < dh.edges().size(); ++f) {
            int di = detail::must_edge(*dom, tagged_label(2, dg.vertices()[v], dh.edges()[f]));
            emap[di] = detail::must_edge(
                *cod, tagged_label(2, cg.vertices()[phi.vertex_map()[v]], ch.edges()[psi.edge_map()[f]]));
        }
    for (size_t i = 0; i < dg.incidences().size(); ++i)
        for (size_t w = 0; w < dh.vertices().size(); ++w) {
            int di = detail::must_incidence(
                *dom, tagged_label(1, dg.incidences()[i], dh.vertices()[w]));
            imap[di] = detail::must_incidence(
                *cod, tagged_label(1, cg.incidences()[phi.incidence_map()[i]],
                                   ch.vertices()[psi.vertex_map()[w]]));
        }
    for (size_t v = 0; v < dg.vertices().size(); ++v)
        for (size_t j = 0; j < dh.incidences().size(); ++j) {
            int di = detail::must_incidence(
                *dom, tagged_label(2, dg.vertices()[v], dh.incidences()[j]));
            imap[di] = detail::must_incidence(
                *cod, tagged_label(2, cg.vertices()[phi.vertex_map()[v]],
                                   ch.incidences()[psi.incidence_map()[j]]));
        }
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

// ---------------------------------------------------------------------------
// Incidence duality
// ---------------------------------------------------------------------------

/// Swaps the vertex and edge sorts together with the port and attachment
/// maps; an involution on the nose.
inline IncidenceHypergraph dual(const IncidenceHypergraph& g) {
    std::vector<std::pair<std::string, std::string>> port, att;
    for (size_t i = 0; i < g.incidences().size(); ++i) {
        port.push_back({g.incidences()[i], g.edges()[g.attachment(static_cast<int>(i))]});
        att.push_back({g.incidences()[i], g.vertices()[g.port(static_cast<int>(i))]});
    }
    return IncidenceHypergraph::make(g.edges(), g.vertices(), g.incidences(), port, att);
}

inline IncidenceMorphism dual_mor(const IncidenceMorphism& phi) {
    auto dom = detail::shared(dual(phi.domain()));
    auto cod = detail::shared(dual(phi.codomain()));
    // Sorts keep their labels, so the index maps swap directly.
    return IncidenceMorphism::make(dom, cod, phi.edge_map(), phi.vertex_map(),
                                   phi.incidence_map());
}

// ---------------------------------------------------------------------------
// Laplacian product
// ---------------------------------------------------------------------------

// Vertices are the (1, v, w) and (4, e, f) blocks, edges the (2, e, w) and
// (3, v, f) blocks; each incidence step crosses to the dual side.
inline IncidenceHypergraph laplacian_product(const IncidenceHypergraph& g,
                                             const IncidenceHypergraph& h) {
    std::vector<std::string> vs, es, is;
    std::vector<std::pair<std::string, std::string>> port, att;
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices()) vs.push_back(tagged_label(1, v, w));
    for (const auto& e : g.edges())
        for (const auto& f : h.edges()) vs.push_back(tagged_label(4, e, f));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices()) es.push_back(tagged_label(2, e, w));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges()) es.push_back(tagged_label(3, v, f));
    for (size_t i = 0; i < g.incidences().size(); ++i) {
        const std::string& x = g.incidences()[i];
        const std::string sv = g.vertices()[g.port(static_cast<int>(i))];
        const std::string se = g.edges()[g.attachment(static_cast<int>(i))];
        for (const auto& w : h.vertices()) {
            std::string l = tagged_label(1, x, w);
            is.push_back(l);
            port.push_back({l, tagged_label(1, sv, w)});
            att.push_back({l, tagged_label(2, se, w)});
        }
        for (const auto& f : h.edges()) {
            std::string l = tagged_label(2, x, f);
            is.push_back(l);
            port.push_back({l, tagged_label(4, se, f)});
            att.push_back({l, tagged_label(3, sv, f)});
        }
    }
    for (size_t j = 0; j < h.incidences().size(); ++j) {
        const std::string& y = h.incidences()[j];
        const std::string sv = h.vertices()[h.port(static_cast<int>(j))];
        const std::string se = h.edges()[h.attachment(static_cast<int>(j))];
        for (const auto& e : g.edges()) {
            std::string l = tagged_label(3, e, y);
            is.push_back(l);
            port.push_back({l, tagged_label(4, e, se)});
            att.push_back({l, tagged_label(2, e, sv)});
        }
        for (const auto& v : g.vertices()) {
            std::string l = tagged_label(4, v, y);
            is.push_back(l);
            port.push_back({l, tagged_label(1, v, sv)});
            att.push_back({l, tagged_label(3, v, se)});
        }
    }
    return IncidenceHypergraph::make(std::move(vs), std::move(es), std::move(is), port, att);
}

inline IncidenceMorphism laplacian_mor(const IncidenceMorphism& phi, const IncidenceMorphism& psi) {
    const IncidenceHypergraph& dg = phi.domain();
    const IncidenceHypergraph& dh = psi.domain();
    const IncidenceHypergraph& cg = phi.codomain();
    const IncidenceHypergraph& ch = psi.codomain();
    auto dom = detail::shared(laplacian_product(dg, dh));
    auto cod = detail::shared(laplacian_product(cg, ch));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    auto gv = [&](size_t v) { return cg.vertices()[phi.vertex_map()[v]]; };
    auto ge = [&](size_t e) { return cg.edges()[phi.edge_map()[e]]; };
    auto gi = [&](size_t i) { return cg.incidences()[phi.incidence_map()[i]]; };
    auto hv = [&](size_t w) { return ch.vertices()[psi.vertex_map()[w]]; };
    auto he = [&](size_t f) { return ch.edges()[psi.edge_map()[f]]; };
    auto hi = [&](size_t j) { return ch.incidences()[psi.incidence_map()[j]]; };
    for (size_t v = 0; v < dg.vertices().size(); ++v)
        for (size_t w = 0; w < dh.vertices().size(); ++w) {
            int di = detail::must_vertex(*dom, tagged_label(1, dg.vertices()[v], dh.vertices()[w]));
            vmap[di] = detail::must_vertex(*cod, tagged_label(1, gv(v), hv(w)));
        }
    for (size_t e = 0; e < dg.edges().size(); ++e)
        for (size_t f = 0; f < dh.edges().size(); ++f) {
            int di = detail::must_vertex(*dom, tagged_label(4, dg.edges()[e], dh.edges()[f]));
            vmap[di] = detail::must_vertex(*cod, tagged_label(4, ge(e), he(f)));
        }
    for (size_t e = 0; e < dg.edges().size(); ++e)
        for (size_t w = 0; w < dh.vertices().size(); ++w) {
            int di = detail::must_edge(*dom, tagged_label(2, dg.edges()[e], dh.vertices()[w]));
            emap[di] = detail::must_edge(*cod, tagged_label(2, ge(e), hv(w)));
        }
    for (size_t v = 0; v < dg.vertices().size(); ++v)
        for (size_t f = 0; f < dh.edges().size(); ++f) {
            int di = detail::must_edge(*dom, tagged_label(3, dg.vertices()[v], dh.edges()[f]));
            emap[di] = detail::must_edge(*cod, tagged_label(3, gv(v), he(f)));
        }
    for (size_t i = 0; i < dg.incidences().size(); ++i) {
        for (size_t w = 0; w < dh.vertices().size(); ++w) {
            int di = detail::must_incidence(*dom,
                                            tagged_label(1, dg.incidences()[i], dh.vertices()[w]));
            imap[di] = detail::must_incidence(*cod, tagged_label(1, gi(i), hv(w)));
        }
        for (size_t f = 0; f < dh.edges().size(); ++f) {
            int di =
                detail::must_incidence(*dom, tagged_label(2, dg.incidences()[i], dh.edges()[f]));
            imap[di] = detail::must_incidence(*cod, tagged_label(2, gi(i), he(f)));
        }
    }
    for (size_t j = 0; j < dh.incidences().size(); ++j) {
        for (size_t e = 0; e < dg.edges().size(); ++e) {
            int di =
                detail::must_incidence(*dom, tagged_label(3, dg.edges()[e], dh.incidences()[j]));
            imap[di] = detail::must_incidence(*cod, tagged_label(3, ge(e), hi(j)));
        }
        for (size_t v = 0; v < dg.vertices().size(); ++v) {
            int di =
                detail::must_incidence(*dom, tagged_label(4, dg.vertices()[v], dh.incidences()[j]));
            imap[di] = detail::must_incidence(*cod, tagged_label(4, gv(v), hi(j)));
        }
    }
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

// ---------------------------------------------------------------------------
// Inverse of a bijective morphism
// ---------------------------------------------------------------------------

namespace detail {
inline std::vector<int> invert_map(const std::vector<int>& m, size_t cod_size, const char* what) {
    std::vector<int> inv(cod_size, -1);
    if (m.size() != cod_size) throw std::invalid_argument(std::string(what) + " map is not bijective");
    for (size_t i = 0; i < m.size(); ++i) {
        if (inv[m[i]] != -1)
            throw std::invalid_argument(std::string(what) + " map is not injective");
        inv[m[i]] = static_cast<int>(i);
    }
    return inv;
}
}  // namespace detail

inline QuiverMorphism inverse(const QuiverMorphism& m) {
    return QuiverMorphism::make(
        m.codomain_ptr(), m.domain_ptr(),
        detail::invert_map(m.vertex_map(), m.codomain().vertices().size(), "vertex"),
        detail::invert_map(m.edge_map(), m.codomain().edges().size(), "edge"));
}

inline HypergraphMorphism inverse(const HypergraphMorphism& m) {
    return HypergraphMorphism::make(
        m.codomain_ptr(), m.domain_ptr(),
        detail::invert_map(m.vertex_map(), m.codomain().vertices().size(), "vertex"),
        detail::invert_map(m.edge_map(), m.codomain().edges().size(), "edge"));
}

inline IncidenceMorphism inverse(const IncidenceMorphism& m) {
    return IncidenceMorphism::make(
        m.codomain_ptr(), m.domain_ptr(),
        detail::invert_map(m.vertex_map(), m.codomain().vertices().size(), "vertex"),
        detail::invert_map(m.edge_map(), m.codomain().edges().size(), "edge"),
        detail::invert_map(m.incidence_map(), m.codomain().incidences().size(), "incidence"));
}

// ---------------------------------------------------------------------------
// Structure maps: quiver box
// ---------------------------------------------------------------------------

/// r : Q box 1 -> Q
inline QuiverMorphism right_unitor_q(const Quiver& q) {
    auto dom = detail::shared(box_q(q, unit_vertex_q()));
    auto cod = detail::shared(q);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < q.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, pair_label(q.vertices()[v], "v0"))] = static_cast<int>(v);
    for (size_t e = 0; e < q.edges().size(); ++e)
        emap[detail::must_edge(*dom, tagged_label(1, q.edges()[e], "v0"))] = static_cast<int>(e);
    return QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

/// l : 1 box Q -> Q
inline QuiverMorphism left_unitor_q(const Quiver& q) {
    auto dom = detail::shared(box_q(unit_vertex_q(), q));
    auto cod = detail::shared(q);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < q.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, pair_label("v0", q.vertices()[v]))] = static_cast<int>(v);
    for (size_t e = 0; e < q.edges().size(); ++e)
        emap[detail::must_edge(*dom, tagged_label(2, "v0", q.edges()[e]))] = static_cast<int>(e);
    return QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

/// c : Q box P -> P box Q
inline QuiverMorphism commutator_q(const Quiver& q, const Quiver& p) {
    auto dom = detail::shared(box_q(q, p));
    auto cod = detail::shared(box_q(p, q));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (const auto& v : q.vertices())
        for (const auto& w : p.vertices())
            vmap[detail::must_vertex(*dom, pair_label(v, w))] =
                detail::must_vertex(*cod, pair_label(w, v));
    for (const auto& e : q.edges())
        for (const auto& w : p.vertices())
            emap[detail::must_edge(*dom, tagged_label(1, e, w))] =
                detail::must_edge(*cod, tagged_label(2, w, e));
    for (const auto& v : q.vertices())
        for (const auto& f : p.edges())
            emap[detail::must_edge(*dom, tagged_label(2, v, f))] =
                detail::must_edge(*cod, tagged_label(1, f, v));
    return QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

/// a : (Q box P) box M -> Q box (P box M)
inline QuiverMorphism associator_q(const Quiver& q, const Quiver& p, const Quiver& m) {
    auto dom = detail::shared(box_q(box_q(q, p), m));
    auto cod = detail::shared(box_q(q, box_q(p, m)));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (const auto& v : q.vertices())
        for (const auto& w : p.vertices())
            for (const auto& u : m.vertices())
                vmap[detail::must_vertex(*dom, pair_label(pair_label(v, w), u))] =
                    detail::must_vertex(*cod, pair_label(v, pair_label(w, u)));
    for (const auto& e : q.edges())
        for (const auto& w : p.vertices())
            for (const auto& u : m.vertices())
                emap[detail::must_edge(*dom, tagged_label(1, tagged_label(1, e, w), u))] =
                    detail::must_edge(*cod, tagged_label(1, e, pair_label(w, u)));
    for (const auto& v : q.vertices())
        for (const auto& f : p.edges())
            for (const auto& u : m.vertices())
                emap[detail::must_edge(*dom, tagged_label(1, tagged_label(2, v, f), u))] =
                    detail::must_edge(*cod, tagged_label(2, v, tagged_label(1, f, u)));
    for (const auto& v : q.vertices())
        for (const auto& w : p.vertices())
            for (const auto& g : m.edges())
                emap[detail::must_edge(*dom, tagged_label(2, pair_label(v, w), g))] =
                    detail::must_edge(*cod, tagged_label(2, v, tagged_label(2, w, g)));
    return QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

// ---------------------------------------------------------------------------
// Structure maps: set-system box
// ---------------------------------------------------------------------------

inline HypergraphMorphism right_unitor_h(const SetSystemHypergraph& g) {
    auto dom = detail::shared(box_h(g, unit_vertex_h()));
    auto cod = detail::shared(g);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < g.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, pair_label(g.vertices()[v], "v0"))] = static_cast<int>(v);
    for (size_t e = 0; e < g.edges().size(); ++e)
        emap[detail::must_edge(*dom, tagged_label(1, g.edges()[e], "v0"))] = static_cast<int>(e);
    return HypergraphMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

inline HypergraphMorphism left_unitor_h(const SetSystemHypergraph& g) {
    auto dom = detail::shared(box_h(unit_vertex_h(), g));
    auto cod = detail::shared(g);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < g.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, pair_label("v0", g.vertices()[v]))] = static_cast<int>(v);
    for (size_t e = 0; e < g.edges().size(); ++e)
        emap[detail::must_edge(*dom, tagged_label(2, "v0", g.edges()[e]))] = static_cast<int>(e);
    return HypergraphMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

inline HypergraphMorphism commutator_h(const SetSystemHypergraph& g,
                                       const SetSystemHypergraph& h) {
    auto dom = detail::shared(box_h(g, h));
    auto cod = detail::shared(box_h(h, g));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            vmap[detail::must_vertex(*dom, pair_label(v, w))] =
                detail::must_vertex(*cod, pair_label(w, v));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            emap[detail::must_edge(*dom, tagged_label(1, e, w))] =
                detail::must_edge(*cod, tagged_label(2, w, e));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            emap[detail::must_edge(*dom, tagged_label(2, v, f))] =
                detail::must_edge(*cod, tagged_label(1, f, v));
    return HypergraphMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

inline HypergraphMorphism associator_h(const SetSystemHypergraph& g, const SetSystemHypergraph& h,
                                       const SetSystemHypergraph& k) {
    auto dom = detail::shared(box_h(box_h(g, h), k));
    auto cod = detail::shared(box_h(g, box_h(h, k)));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            for (const auto& u : k.vertices())
                vmap[detail::must_vertex(*dom, pair_label(pair_label(v, w), u))] =
                    detail::must_vertex(*cod, pair_label(v, pair_label(w, u)));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            for (const auto& u : k.vertices())
                emap[detail::must_edge(*dom, tagged_label(1, tagged_label(1, e, w), u))] =
                    detail::must_edge(*cod, tagged_label(1, e, pair_label(w, u)));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            for (const auto& u : k.vertices())
                emap[detail::must_edge(*dom, tagged_label(1, tagged_label(2, v, f), u))] =
                    detail::must_edge(*cod, tagged_label(2, v, tagged_label(1, f, u)));
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            for (const auto& x : k.edges())
                emap[detail::must_edge(*dom, tagged_label(2, pair_label(v, w), x))] =
                    detail::must_edge(*cod, tagged_label(2, v, tagged_label(2, w, x)));
    return HypergraphMorphism::make(dom, cod, std::move(vmap), std::move(emap));
}

// ---------------------------------------------------------------------------
// Structure maps: incidence box
// ---------------------------------------------------------------------------

inline IncidenceMorphism right_unitor_r(const IncidenceHypergraph& g) {
    auto dom = detail::shared(box_r(g, unit_vertex_r()));
    auto cod = detail::shared(g);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (size_t v = 0; v < g.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, pair_label(g.vertices()[v], "v0"))] = static_cast<int>(v);
    for (size_t e = 0; e < g.edges().size(); ++e)
        emap[detail::must_edge(*dom, tagged_label(1, g.edges()[e], "v0"))] = static_cast<int>(e);
    for (size_t i = 0; i < g.incidences().size(); ++i)
        imap[detail::must_incidence(*dom, tagged_label(1, g.incidences()[i], "v0"))] =
            static_cast<int>(i);
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

inline IncidenceMorphism left_unitor_r(const IncidenceHypergraph& g) {
    auto dom = detail::shared(box_r(unit_vertex_r(), g));
    auto cod = detail::shared(g);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (size_t v = 0; v < g.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, pair_label("v0", g.vertices()[v]))] = static_cast<int>(v);
    for (size_t e = 0; e < g.edges().size(); ++e)
        emap[detail::must_edge(*dom, tagged_label(2, "v0", g.edges()[e]))] = static_cast<int>(e);
    for (size_t i = 0; i < g.incidences().size(); ++i)
        imap[detail::must_incidence(*dom, tagged_label(2, "v0", g.incidences()[i]))] =
            static_cast<int>(i);
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

inline IncidenceMorphism commutator_r(const IncidenceHypergraph& g, const IncidenceHypergraph& h) {
    auto dom = detail::shared(box_r(g, h));
    auto cod = detail::shared(box_r(h, g));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            vmap[detail::must_vertex(*dom, pair_label(v, w))] =
                detail::must_vertex(*cod, pair_label(w, v));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            emap[detail::must_edge(*dom, tagged_label(1, e, w))] =
                detail::must_edge(*cod, tagged_label(2, w, e));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            emap[detail::must_edge(*dom, tagged_label(2, v, f))] =
                detail::must_edge(*cod, tagged_label(1, f, v));
    for (const auto& i : g.incidences())
        for (const auto& w : h.vertices())
            imap[detail::must_incidence(*dom, tagged_label(1, i, w))] =
                detail::must_incidence(*cod, tagged_label(2, w, i));
    for (const auto& v : g.vertices())
        for (const auto& j : h.incidences())
            imap[detail::must_incidence(*dom, tagged_label(2, v, j))] =
                detail::must_incidence(*cod, tagged_label(1, j, v));
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

inline IncidenceMorphism associator_r(const IncidenceHypergraph& g, const IncidenceHypergraph& h,
                                      const IncidenceHypergraph& k) {
    auto dom = detail::shared(box_r(box_r(g, h), k));
    auto cod = detail::shared(box_r(g, box_r(h, k)));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            for (const auto& u : k.vertices())
                vmap[detail::must_vertex(*dom, pair_label(pair_label(v, w), u))] =
                    detail::must_vertex(*cod, pair_label(v, pair_label(w, u)));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            for (const auto& u : k.vertices())
                emap[detail::must_edge(*dom, tagged_label(1, tagged_label(1, e, w), u))] =
                    detail::must_edge(*cod, tagged_label(1, e, pair_label(w, u)));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            for (const auto& u : k.vertices())
                emap[detail::must_edge(*dom, tagged_label(1, tagged_label(2, v, f), u))] =
                    detail::must_edge(*cod, tagged_label(2, v, tagged_label(1, f, u)));
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            for (const auto& x : k.edges())
                emap[detail::must_edge(*dom, tagged_label(2, pair_label(v, w), x))] =
                    detail::must_edge(*cod, tagged_label(2, v, tagged_label(2, w, x)));
    for (const auto& i : g.incidences())
        for (const auto& w : h.vertices())
            for (const auto& u : k.vertices())
                imap[detail::must_incidence(*dom, tagged_label(1, tagged_label(1, i, w), u))] =
                    detail::must_incidence(*cod, tagged_label(1, i, pair_label(w, u)));
    for (const auto& v : g.vertices())
        for (const auto& j : h.incidences())
            for (const auto& u : k.vertices())
                imap[detail::must_incidence(*dom, tagged_label(1, tagged_label(2, v, j), u))] =
                    detail::must_incidence(*cod, tagged_label(2, v, tagged_label(1, j, u)));
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            for (const auto& x : k.incidences())
                imap[detail::must_incidence(*dom, tagged_label(2, pair_label(v, w), x))] =
                    detail::must_incidence(*cod, tagged_label(2, v, tagged_label(2, w, x)));
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

// ---------------------------------------------------------------------------
// Structure maps: Laplacian product
// ---------------------------------------------------------------------------

/// rho : G lap 1 -> G
inline IncidenceMorphism lap_right_unitor(const IncidenceHypergraph& g) {
    auto dom = detail::shared(laplacian_product(g, unit_vertex_r()));
    auto cod = detail::shared(g);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (size_t v = 0; v < g.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, tagged_label(1, g.vertices()[v], "v0"))] =
            static_cast<int>(v);
    for (size_t e = 0; e < g.edges().size(); ++e)
        emap[detail::must_edge(*dom, tagged_label(2, g.edges()[e], "v0"))] = static_cast<int>(e);
    for (size_t i = 0; i < g.incidences().size(); ++i)
        imap[detail::must_incidence(*dom, tagged_label(1, g.incidences()[i], "v0"))] =
            static_cast<int>(i);
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

/// lambda : 1 lap G -> G
inline IncidenceMorphism lap_left_unitor(const IncidenceHypergraph& g) {
    auto dom = detail::shared(laplacian_product(unit_vertex_r(), g));
    auto cod = detail::shared(g);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (size_t v = 0; v < g.vertices().size(); ++v)
        vmap[detail::must_vertex(*dom, tagged_label(1, "v0", g.vertices()[v]))] =
            static_cast<int>(v);
    for (size_t e = 0; e < g.edges().size(); ++e)
        emap[detail::must_edge(*dom, tagged_label(3, "v0", g.edges()[e]))] = static_cast<int>(e);
    for (size_t i = 0; i < g.incidences().size(); ++i)
        imap[detail::must_incidence(*dom, tagged_label(4, "v0", g.incidences()[i]))] =
            static_cast<int>(i);
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

/// gamma : G lap H -> H lap G; (n, x, y) goes to (n, y, x) on vertices and
/// (5 - n, y, x) on edges and incidences.
inline IncidenceMorphism lap_commutator(const IncidenceHypergraph& g,
                                        const IncidenceHypergraph& h) {
    auto dom = detail::shared(laplacian_product(g, h));
    auto cod = detail::shared(laplacian_product(h, g));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            vmap[detail::must_vertex(*dom, tagged_label(1, v, w))] =
                detail::must_vertex(*cod, tagged_label(1, w, v));
    for (const auto& e : g.edges())
        for (const auto& f : h.edges())
            vmap[detail::must_vertex(*dom, tagged_label(4, e, f))] =
                detail::must_vertex(*cod, tagged_label(4, f, e));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            emap[detail::must_edge(*dom, tagged_label(2, e, w))] =
                detail::must_edge(*cod, tagged_label(3, w, e));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            emap[detail::must_edge(*dom, tagged_label(3, v, f))] =
                detail::must_edge(*cod, tagged_label(2, f, v));
    for (const auto& i : g.incidences()) {
        for (const auto& w : h.vertices())
            imap[detail::must_incidence(*dom, tagged_label(1, i, w))] =
                detail::must_incidence(*cod, tagged_label(4, w, i));
        for (const auto& f : h.edges())
            imap[detail::must_incidence(*dom, tagged_label(2, i, f))] =
                detail::must_incidence(*cod, tagged_label(3, f, i));
    }
    for (const auto& j : h.incidences()) {
        for (const auto& e : g.edges())
            imap[detail::must_incidence(*dom, tagged_label(3, e, j))] =
                detail::must_incidence(*cod, tagged_label(2, j, e));
        for (const auto& v : g.vertices())
            imap[detail::must_incidence(*dom, tagged_label(4, v, j))] =
                detail::must_incidence(*cod, tagged_label(1, j, v));
    }
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

/// alpha : (G lap H) lap K -> G lap (H lap K), all twenty cases.
inline IncidenceMorphism lap_associator(const IncidenceHypergraph& g, const IncidenceHypergraph& h,
                                        const IncidenceHypergraph& k) {
    auto dom = detail::shared(laplacian_product(laplacian_product(g, h), k));
    auto cod = detail::shared(laplacian_product(g, laplacian_product(h, k)));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    auto T = tagged_label;
    // vertices
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            for (const auto& u : k.vertices())
                vmap[detail::must_vertex(*dom, T(1, T(1, v, w), u))] =
                    detail::must_vertex(*cod, T(1, v, T(1, w, u)));
    for (const auto& e : g.edges())
        for (const auto& f : h.edges())
            for (const auto& u : k.vertices())
                vmap[detail::must_vertex(*dom, T(1, T(4, e, f), u))] =
                    detail::must_vertex(*cod, T(4, e, T(2, f, u)));
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            for (const auto& x : k.edges())
                vmap[detail::must_vertex(*dom, T(4, T(2, e, w), x))] =
                    detail::must_vertex(*cod, T(4, e, T(3, w, x)));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            for (const auto& x : k.edges())
                vmap[detail::must_vertex(*dom, T(4, T(3, v, f), x))] =
                    detail::must_vertex(*cod, T(1, v, T(4, f, x)));
    // edges
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            for (const auto& u : k.vertices())
                emap[detail::must_edge(*dom, T(2, T(2, e, w), u))] =
                    detail::must_edge(*cod, T(2, e, T(1, w, u)));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            for (const auto& u : k.vertices())
                emap[detail::must_edge(*dom, T(2, T(3, v, f), u))] =
                    detail::must_edge(*cod, T(3, v, T(2, f, u)));
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            for (const auto& x : k.edges())
                emap[detail::must_edge(*dom, T(3, T(1, v, w), x))] =
                    detail::must_edge(*cod, T(3, v, T(3, w, x)));
    for (const auto& e : g.edges())
        for (const auto& f : h.edges())
            for (const auto& x : k.edges())
                emap[detail::must_edge(*dom, T(3, T(4, e, f), x))] =
                    detail::must_edge(*cod, T(2, e, T(4, f, x)));
    // incidences, outer tag 1: I(G lap H) x V(K)
    for (const auto& i : g.incidences())
        for (const auto& w : h.vertices())
            for (const auto& u : k.vertices())
                imap[detail::must_incidence(*dom, T(1, T(1, i, w), u))] =
                    detail::must_incidence(*cod, T(1, i, T(1, w, u)));
    for (const auto& i : g.incidences())
        for (const auto& f : h.edges())
            for (const auto& u : k.vertices())
                imap[detail::must_incidence(*dom, T(1, T(2, i, f), u))] =
                    detail::must_incidence(*cod, T(2, i, T(2, f, u)));
    for (const auto& e : g.edges())
        for (const auto& j : h.incidences())
            for (const auto& u : k.vertices())
                imap[detail::must_incidence(*dom, T(1, T(3, e, j), u))] =
                    detail::must_incidence(*cod, T(3, e, T(1, j, u)));
    for (const auto& v : g.vertices())
        for (const auto& j : h.incidences())
            for (const auto& u : k.vertices())
                imap[detail::must_incidence(*dom, T(1, T(4, v, j), u))] =
                    detail::must_incidence(*cod, T(4, v, T(1, j, u)));
    // incidences, outer tag 2: I(G lap H) x E(K)
    for (const auto& i : g.incidences())
        for (const auto& w : h.vertices())
            for (const auto& x : k.edges())
                imap[detail::must_incidence(*dom, T(2, T(1, i, w), x))] =
                    detail::must_incidence(*cod, T(2, i, T(3, w, x)));
    for (const auto& i : g.incidences())
        for (const auto& f : h.edges())
            for (const auto& x : k.edges())
                imap[detail::must_incidence(*dom, T(2, T(2, i, f), x))] =
                    detail::must_incidence(*cod, T(1, i, T(4, f, x)));
    for (const auto& e : g.edges())
        for (const auto& j : h.incidences())
            for (const auto& x : k.edges())
                imap[detail::must_incidence(*dom, T(2, T(3, e, j), x))] =
                    detail::must_incidence(*cod, T(3, e, T(2, j, x)));
    for (const auto& v : g.vertices())
        for (const auto& j : h.incidences())
            for (const auto& x : k.edges())
                imap[detail::must_incidence(*dom, T(2, T(4, v, j), x))] =
                    detail::must_incidence(*cod, T(4, v, T(2, j, x)));
    // incidences, outer tag 3: E(G lap H) x I(K)
    for (const auto& e : g.edges())
        for (const auto& w : h.vertices())
            for (const auto& y : k.incidences())
                imap[detail::must_incidence(*dom, T(3, T(2, e, w), y))] =
                    detail::must_incidence(*cod, T(3, e, T(4, w, y)));
    for (const auto& v : g.vertices())
        for (const auto& f : h.edges())
            for (const auto& y : k.incidences())
                imap[detail::must_incidence(*dom, T(3, T(3, v, f), y))] =
                    detail::must_incidence(*cod, T(4, v, T(3, f, y)));
    // incidences, outer tag 4: V(G lap H) x I(K)
    for (const auto& v : g.vertices())
        for (const auto& w : h.vertices())
            for (const auto& y : k.incidences())
                imap[detail::must_incidence(*dom, T(4, T(1, v, w), y))] =
                    detail::must_incidence(*cod, T(4, v, T(4, w, y)));
    for (const auto& e : g.edges())
        for (const auto& f : h.edges())
            for (const auto& y : k.incidences())
                imap[detail::must_incidence(*dom, T(4, T(4, e, f), y))] =
                    detail::must_incidence(*cod, T(3, e, T(3, f, y)));
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

/// rho-hat : G lap E(1) -> G-dual, the right anti-unitor.
inline IncidenceMorphism anti_unitor_right(const IncidenceHypergraph& g) {
    auto dom = detail::shared(laplacian_product(g, unit_edge_r()));
    auto cod = detail::shared(dual(g));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (const auto& e : g.edges())
        vmap[detail::must_vertex(*dom, tagged_label(4, e, "e0"))] = detail::must_vertex(*cod, e);
    for (const auto& v : g.vertices())
        emap[detail::must_edge(*dom, tagged_label(3, v, "e0"))] = detail::must_edge(*cod, v);
    for (const auto& i : g.incidences())
        imap[detail::must_incidence(*dom, tagged_label(2, i, "e0"))] =
            detail::must_incidence(*cod, i);
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

/// lambda-hat : E(1) lap G -> G-dual, the left anti-unitor.
inline IncidenceMorphism anti_unitor_left(const IncidenceHypergraph& g) {
    auto dom = detail::shared(laplacian_product(unit_edge_r(), g));
    auto cod = detail::shared(dual(g));
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (const auto& e : g.vertices())
        emap[detail::must_edge(*dom, tagged_label(2, "e0", e))] = detail::must_edge(*cod, e);
    for (const auto& e : g.edges())
        vmap[detail::must_vertex(*dom, tagged_label(4, "e0", e))] = detail::must_vertex(*cod, e);
    for (const auto& i : g.incidences())
        imap[detail::must_incidence(*dom, tagged_label(3, "e0", i))] =
            detail::must_incidence(*cod, i);
    return IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
}

}  // namespace hyperbox
