#pragma once

// The five internal homs: the quiver box exponential, the set-system box
// exponential and its multigraph restriction, the incidence box
// exponential, and the Laplacian exponential. Each carrier element is a
// concrete morphism (or function, or endpoint-colored pair), labeled by
// its canonical serialization; port/attachment/source/target maps are
// built by actual precomposition with the Yoneda generator morphisms and
// the (anti-)unitor inverses, not by ad-hoc index surgery.

#include <cstdlib>

#include "homsearch.hpp"
#include "products.hpp"

namespace hyperbox {

/// Cap on hom-set / function-set enumeration inside exponentials.
/// HYPERBOX_SIZE_GUARD overrides the default of 16 (~2^16 subsets).
inline int default_size_guard() {
    static const int guard = [] {
        if (const char* s = std::getenv("HYPERBOX_SIZE_GUARD")) {
            int v = std::atoi(s);
            if (v > 0) return v;
        }
        return 16;
    }();
    return guard;
}

// ---------------------------------------------------------------------------
// Yoneda generator morphisms and element pickers
// ---------------------------------------------------------------------------

/// V(1) -> E(1) in quivers, choosing the tail of the single edge.
inline QuiverMorphism yoneda_s() {
    return QuiverMorphism::from_labels(unit_vertex_q(), unit_edge_q(), {{"v0", "v0"}}, {});
}

/// V(1) -> E(1) in quivers, choosing the head of the single edge.
inline QuiverMorphism yoneda_t() {
    return QuiverMorphism::from_labels(unit_vertex_q(), unit_edge_q(), {{"v0", "v1"}}, {});
}

/// V(1) -> I(1) in incidence hypergraphs, choosing the only vertex.
inline IncidenceMorphism yoneda_y() {
    return IncidenceMorphism::from_labels(unit_vertex_r(), unit_incidence_r(), {{"v0", "v0"}}, {},
                                          {});
}

/// E(1) -> I(1) in incidence hypergraphs, choosing the only edge.
inline IncidenceMorphism yoneda_z() {
    return IncidenceMorphism::from_labels(unit_edge_r(), unit_incidence_r(), {}, {{"e0", "e0"}},
                                          {});
}

inline QuiverMorphism pick_vertex_q(std::shared_ptr<const Quiver> k, int v) {
    return QuiverMorphism::make(detail::shared(unit_vertex_q()), std::move(k), {v}, {});
}

inline QuiverMorphism pick_edge_q(std::shared_ptr<const Quiver> k, int e) {
    int s = k->source(e), t = k->target(e);
    return QuiverMorphism::make(detail::shared(unit_edge_q()), std::move(k), {s, t}, {e});
}

inline IncidenceMorphism pick_vertex_r(std::shared_ptr<const IncidenceHypergraph> k, int v) {
    return IncidenceMorphism::make(detail::shared(unit_vertex_r()), std::move(k), {v}, {}, {});
}

inline IncidenceMorphism pick_edge_r(std::shared_ptr<const IncidenceHypergraph> k, int e) {
    return IncidenceMorphism::make(detail::shared(unit_edge_r()), std::move(k), {}, {e}, {});
}

inline IncidenceMorphism pick_incidence_r(std::shared_ptr<const IncidenceHypergraph> k, int i) {
    int v = k->port(i), e = k->attachment(i);
    return IncidenceMorphism::make(detail::shared(unit_incidence_r()), std::move(k), {v}, {e}, {i});
}

namespace detail {

// Sorts homs by their serialized label; the labels become carrier elements.
template <class M>
std::pair<std::vector<std::string>, std::vector<M>> labeled_homs(std::vector<M> homs) {
    std::vector<std::pair<std::string, M>> tagged;
    tagged.reserve(homs.size());
    for (auto& m : homs) tagged.push_back({image_label(m), std::move(m)});
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> labels;
    std::vector<M> sorted;
    labels.reserve(tagged.size());
    sorted.reserve(tagged.size());
    for (auto& [l, m] : tagged) {
        labels.push_back(l);
        sorted.push_back(std::move(m));
    }
    return {std::move(labels), std::move(sorted)};
}

template <class Obj>
int lookup_vertex(const Obj& o, const std::string& l, const char* ctx) {
    int i = o.vertex_index(l);
    if (i < 0) throw std::logic_error(std::string(ctx) + ": unmatched carrier vertex " + l);
    return i;
}
template <class Obj>
int lookup_edge(const Obj& o, const std::string& l, const char* ctx) {
    int i = o.edge_index(l);
    if (i < 0) throw std::logic_error(std::string(ctx) + ": unmatched carrier edge " + l);
    return i;
}

inline std::string function_label(const std::vector<int>& images,
                                  const std::vector<std::string>& cod) {
    std::string out = "(";
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) out += ',';
        out += cod[images[i]];
    }
    out += ')';
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Quiver box exponential
// ---------------------------------------------------------------------------

struct QuiverExponential {
    Quiver carrier;
    Quiver source_obj, target_obj;          // the pair (Q1, Q2)
    Quiver edge_domain;                     // Q1 box E(1), the Q1-prism
    std::vector<QuiverMorphism> vertex_homs;  // aligned with carrier.vertices()
    std::vector<QuiverMorphism> edge_homs;    // aligned with carrier.edges()
    QuiverMorphism eval;                      // Q1 box carrier -> Q2
};

inline QuiverExponential exp_box_q(const Quiver& q1, const Quiver& q2) {
    QuiverExponential x;
    x.source_obj = q1;
    x.target_obj = q2;
    auto [vlabels, vhoms] = detail::labeled_homs(enumerate_homs(q1, q2));
    x.edge_domain = box_q(q1, unit_edge_q());
    auto [elabels, ehoms] = detail::labeled_homs(enumerate_homs(x.edge_domain, q2));
    x.vertex_homs = std::move(vhoms);
    x.edge_homs = std::move(ehoms);

    // source/target by precomposition with Q1 box Y(s|t) after the
    // inverse right unitor
    auto runitor_inv = inverse(right_unitor_q(q1));
    auto into_tail = compose(box_q_mor(identity(q1), yoneda_s()), runitor_inv);
    auto into_head = compose(box_q_mor(identity(q1), yoneda_t()), runitor_inv);
    std::vector<std::pair<std::string, std::string>> src, tgt;
    for (size_t e = 0; e < elabels.size(); ++e) {
        src.push_back({elabels[e], image_label(compose(x.edge_homs[e], into_tail))});
        tgt.push_back({elabels[e], image_label(compose(x.edge_homs[e], into_head))});
    }
    x.carrier = Quiver::make(vlabels, elabels, src, tgt);

    // bev : Q1 box carrier -> Q2
    auto dom = detail::shared(box_q(q1, x.carrier));
    auto cod = detail::shared(q2);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < q1.vertices().size(); ++v)
        for (size_t p = 0; p < vlabels.size(); ++p)
            vmap[detail::must_vertex(*dom, pair_label(q1.vertices()[v], vlabels[p]))] =
                x.vertex_homs[p].vertex_map()[v];
    for (size_t e = 0; e < q1.edges().size(); ++e)
        for (size_t p = 0; p < vlabels.size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(1, q1.edges()[e], vlabels[p]))] =
                x.vertex_homs[p].edge_map()[e];
    for (size_t v = 0; v < q1.vertices().size(); ++v)
        for (size_t p = 0; p < elabels.size(); ++p) {
            int prism_edge = x.edge_domain.edge_index(tagged_label(2, q1.vertices()[v], "e0"));
            emap[detail::must_edge(*dom, tagged_label(2, q1.vertices()[v], elabels[p]))] =
                x.edge_homs[p].edge_map()[prism_edge];
        }
    x.eval = QuiverMorphism::make(dom, cod, std::move(vmap), std::move(emap));
    return x;
}

/// Transposes phi : Q1 box K -> Q2 across the adjunction.
inline QuiverMorphism curry_box_q(const QuiverExponential& x, const QuiverMorphism& phi,
                                  const Quiver& k) {
    if (!(phi.domain() == box_q(x.source_obj, k)))
        throw std::invalid_argument("curry: domain is not the declared box product");
    auto kp = detail::shared(k);
    auto runitor_inv = inverse(right_unitor_q(x.source_obj));
    std::vector<int> vmap(k.vertices().size()), emap(k.edges().size());
    for (size_t w = 0; w < k.vertices().size(); ++w) {
        auto embed = compose(box_q_mor(identity(x.source_obj), pick_vertex_q(kp, static_cast<int>(w))),
                             runitor_inv);
        vmap[w] = detail::lookup_vertex(x.carrier, image_label(compose(phi, embed)), "curry_box_q");
    }
    for (size_t f = 0; f < k.edges().size(); ++f) {
        auto embed = box_q_mor(identity(x.source_obj), pick_edge_q(kp, static_cast<int>(f)));
        emap[f] = detail::lookup_edge(x.carrier, image_label(compose(phi, embed)), "curry_box_q");
    }
    return QuiverMorphism::make(kp, detail::shared(x.carrier), std::move(vmap), std::move(emap));
}

inline QuiverMorphism uncurry_box_q(const QuiverExponential& x, const QuiverMorphism& psi) {
    return compose(x.eval, box_q_mor(identity(x.source_obj), psi));
}

// ---------------------------------------------------------------------------
// Set-system box exponential
// ---------------------------------------------------------------------------

struct HypergraphExponential {
    SetSystemHypergraph carrier;
    SetSystemHypergraph source_obj, target_obj;
    std::vector<HypergraphMorphism> vertex_homs;  // aligned with carrier.vertices()
    struct Edge {
        std::vector<int> members;  // carrier vertex indices, sorted: the set A
        std::vector<int> g;        // V(G) -> E(H)
    };
    std::vector<Edge> edges;  // aligned with carrier.edges()
    HypergraphMorphism eval;  // G box carrier -> H
};

namespace detail {
inline std::string beta_edge_label(const std::vector<int>& members, const std::vector<int>& g,
                                   const std::vector<std::string>& vlabels,
                                   const std::vector<std::string>& hedges) {
    std::string out = "{";
    for (size_t i = 0; i < members.size(); ++i) {
        if (i) out += '+';
        out += vlabels[members[i]];
    }
    out += '}';
    out += function_label(g, hedges);
    return out;
}
}  // namespace detail

/// Edges are pairs (A, g): a set A of homs plus a function g from the
/// vertices of G to the edges of H whose endpoint sets match the pointwise
/// images of A. Enumeration is exponential in the hom count, so the size
/// guard rejects oversized hom-sets up front.
inline HypergraphExponential exp_box_h(const SetSystemHypergraph& g, const SetSystemHypergraph& h,
                                       int size_guard = default_size_guard()) {
    HypergraphExponential x;
    x.source_obj = g;
    x.target_obj = h;
    auto [vlabels, vhoms] = detail::labeled_homs(enumerate_homs(g, h));
    if (static_cast<int>(vlabels.size()) > size_guard)
        throw SizeGuardError("exp_box_h: hom-set size " + std::to_string(vlabels.size()) +
                             " exceeds the size guard " + std::to_string(size_guard));
    x.vertex_homs = std::move(vhoms);

    const size_t nh = vlabels.size();
    const size_t nv = g.vertices().size();
    std::vector<std::pair<std::string, HypergraphExponential::Edge>> raw_edges;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nh); ++mask) {
        std::vector<int> members;
        for (size_t p = 0; p < nh; ++p)
            if (mask >> p & 1) members.push_back(static_cast<int>(p));
        // for each vertex of G, the required endpoint set and the codomain
        // edges realizing it
        std::vector<std::vector<int>> candidates(nv);
        bool ok = true;
        for (size_t v = 0; v < nv && ok; ++v) {
            std::vector<int> need;
            for (int p : members) need.push_back(x.vertex_homs[p].vertex_map()[v]);
            std::sort(need.begin(), need.end());
            need.erase(std::unique(need.begin(), need.end()), need.end());
            for (size_t f = 0; f < h.edges().size(); ++f)
                if (h.endpoints(static_cast<int>(f)) == need)
                    candidates[v].push_back(static_cast<int>(f));
            if (candidates[v].empty()) ok = false;
        }
        if (!ok) continue;
        std::vector<int> gfun(nv, 0);
        std::vector<size_t> pos(nv, 0);
        while (true) {
            for (size_t v = 0; v < nv; ++v) gfun[v] = candidates[v][pos[v]];
            raw_edges.push_back({detail::beta_edge_label(members, gfun, vlabels, h.edges()),
                                 {members, gfun}});
            size_t v = 0;
            for (; v < nv; ++v) {
                if (++pos[v] < candidates[v].size()) break;
                pos[v] = 0;
            }
            if (v == nv) break;  // nv == 0 emits the single empty function once
        }
    }
    std::sort(raw_edges.begin(), raw_edges.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> elabels;
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (auto& [l, e] : raw_edges) {
        elabels.push_back(l);
        std::vector<std::string> ends;
        for (int p : e.members) ends.push_back(vlabels[p]);
        eps.push_back({l, std::move(ends)});
        x.edges.push_back(std::move(e));
    }
    x.carrier = SetSystemHypergraph::make(vlabels, elabels, eps);

    auto dom = detail::shared(box_h(g, x.carrier));
    auto cod = detail::shared(h);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < nv; ++v)
        for (size_t p = 0; p < vlabels.size(); ++p)
            vmap[detail::must_vertex(*dom, pair_label(g.vertices()[v], vlabels[p]))] =
                x.vertex_homs[p].vertex_map()[v];
    for (size_t e = 0; e < g.edges().size(); ++e)
        for (size_t p = 0; p < vlabels.size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(1, g.edges()[e], vlabels[p]))] =
                x.vertex_homs[p].edge_map()[e];
    for (size_t v = 0; v < nv; ++v)
        for (size_t p = 0; p < elabels.size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(2, g.vertices()[v], elabels[p]))] =
                x.edges[p].g[v];
    x.eval = HypergraphMorphism::make(dom, cod, std::move(vmap), std::move(emap));
    return x;
}

inline HypergraphMorphism curry_box_h(const HypergraphExponential& x,
                                      const HypergraphMorphism& phi,
                                      const SetSystemHypergraph& k) {
    const SetSystemHypergraph& g = x.source_obj;
    auto prod = box_h(g, k);
    if (!(phi.domain() == prod))
        throw std::invalid_argument("curry: domain is not the declared box product");
    std::vector<int> vmap(k.vertices().size()), emap(k.edges().size());
    for (size_t w = 0; w < k.vertices().size(); ++w) {
        std::vector<int> vv(g.vertices().size()), ee(g.edges().size());
        for (size_t v = 0; v < g.vertices().size(); ++v)
            vv[v] = phi.vertex_map()[detail::must_vertex(
                prod, pair_label(g.vertices()[v], k.vertices()[w]))];
        for (size_t e = 0; e < g.edges().size(); ++e)
            ee[e] = phi.edge_map()[detail::must_edge(
                prod, tagged_label(1, g.edges()[e], k.vertices()[w]))];
        auto slice = HypergraphMorphism::make(detail::shared(g), phi.codomain_ptr(), std::move(vv),
                                              std::move(ee));
        vmap[w] = detail::lookup_vertex(x.carrier, image_label(slice), "curry_box_h");
    }
    for (size_t f = 0; f < k.edges().size(); ++f) {
        std::vector<int> gfun(g.vertices().size());
        for (size_t v = 0; v < g.vertices().size(); ++v)
            gfun[v] = phi.edge_map()[detail::must_edge(
                prod, tagged_label(2, g.vertices()[v], k.edges()[f]))];
        std::vector<int> members;
        for (int w : k.endpoints(static_cast<int>(f))) members.push_back(vmap[w]);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        std::string l = detail::beta_edge_label(members, gfun, x.carrier.vertices(),
                                                x.target_obj.edges());
        emap[f] = detail::lookup_edge(x.carrier, l, "curry_box_h");
    }
    return HypergraphMorphism::make(detail::shared(k), detail::shared(x.carrier), std::move(vmap),
                                    std::move(emap));
}

inline HypergraphMorphism uncurry_box_h(const HypergraphExponential& x,
                                        const HypergraphMorphism& psi) {
    return compose(x.eval, box_h_mor(identity(x.source_obj), psi));
}

// ---------------------------------------------------------------------------
// Multigraph box exponential: Del of the set-system one
// ---------------------------------------------------------------------------

struct MultigraphExponential {
    SetSystemHypergraph carrier;  // only the edges with 1 or 2 endpoints survive
    SetSystemHypergraph source_obj, target_obj;
    std::vector<HypergraphMorphism> vertex_homs;
    std::vector<HypergraphExponential::Edge> edges;
    HypergraphMorphism eval;  // G box carrier -> H
};

inline MultigraphExponential exp_box_m(const SetSystemHypergraph& g, const SetSystemHypergraph& h,
                                       int size_guard = default_size_guard()) {
    if (!g.is_multigraph() || !h.is_multigraph())
        throw std::invalid_argument("exp_box_m requires multigraph inputs");
    auto full = exp_box_h(g, h, size_guard);
    MultigraphExponential x;
    x.source_obj = g;
    x.target_obj = h;
    x.vertex_homs = full.vertex_homs;
    std::vector<std::string> elabels;
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (size_t e = 0; e < full.carrier.edges().size(); ++e) {
        size_t deg = full.carrier.endpoints(static_cast<int>(e)).size();
        if (deg < 1 || deg > 2) continue;
        elabels.push_back(full.carrier.edges()[e]);
        std::vector<std::string> ends;
        for (int v : full.carrier.endpoints(static_cast<int>(e)))
            ends.push_back(full.carrier.vertices()[v]);
        eps.push_back({elabels.back(), std::move(ends)});
        x.edges.push_back(full.edges[e]);
    }
    x.carrier = SetSystemHypergraph::make(full.carrier.vertices(), elabels, eps);

    auto dom = detail::shared(box_h(g, x.carrier));
    auto cod = detail::shared(h);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size());
    for (size_t v = 0; v < g.vertices().size(); ++v)
        for (size_t p = 0; p < x.carrier.vertices().size(); ++p)
            vmap[detail::must_vertex(*dom, pair_label(g.vertices()[v], x.carrier.vertices()[p]))] =
                x.vertex_homs[p].vertex_map()[v];
    for (size_t e = 0; e < g.edges().size(); ++e)
        for (size_t p = 0; p < x.carrier.vertices().size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(1, g.edges()[e], x.carrier.vertices()[p]))] =
                x.vertex_homs[p].edge_map()[e];
    for (size_t v = 0; v < g.vertices().size(); ++v)
        for (size_t p = 0; p < elabels.size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(2, g.vertices()[v], elabels[p]))] =
                x.edges[p].g[v];
    x.eval = HypergraphMorphism::make(dom, cod, std::move(vmap), std::move(emap));
    return x;
}

inline HypergraphMorphism curry_box_m(const MultigraphExponential& x,
                                      const HypergraphMorphism& phi,
                                      const SetSystemHypergraph& k) {
    const SetSystemHypergraph& g = x.source_obj;
    auto prod = box_h(g, k);
    if (!(phi.domain() == prod))
        throw std::invalid_argument("curry: domain is not the declared box product");
    std::vector<int> vmap(k.vertices().size()), emap(k.edges().size());
    for (size_t w = 0; w < k.vertices().size(); ++w) {
        std::vector<int> vv(g.vertices().size()), ee(g.edges().size());
        for (size_t v = 0; v < g.vertices().size(); ++v)
            vv[v] = phi.vertex_map()[detail::must_vertex(
                prod, pair_label(g.vertices()[v], k.vertices()[w]))];
        for (size_t e = 0; e < g.edges().size(); ++e)
            ee[e] = phi.edge_map()[detail::must_edge(
                prod, tagged_label(1, g.edges()[e], k.vertices()[w]))];
        auto slice = HypergraphMorphism::make(detail::shared(g), phi.codomain_ptr(), std::move(vv),
                                              std::move(ee));
        vmap[w] = detail::lookup_vertex(x.carrier, image_label(slice), "curry_box_m");
    }
    for (size_t f = 0; f < k.edges().size(); ++f) {
        std::vector<int> gfun(g.vertices().size());
        for (size_t v = 0; v < g.vertices().size(); ++v)
            gfun[v] = phi.edge_map()[detail::must_edge(
                prod, tagged_label(2, g.vertices()[v], k.edges()[f]))];
        std::vector<int> members;
        for (int w : k.endpoints(static_cast<int>(f))) members.push_back(vmap[w]);
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        std::string l = detail::beta_edge_label(members, gfun, x.carrier.vertices(),
                                                x.target_obj.edges());
        emap[f] = detail::lookup_edge(x.carrier, l, "curry_box_m");
    }
    return HypergraphMorphism::make(detail::shared(k), detail::shared(x.carrier), std::move(vmap),
                                    std::move(emap));
}

inline HypergraphMorphism uncurry_box_m(const MultigraphExponential& x,
                                        const HypergraphMorphism& psi) {
    return compose(x.eval, box_h_mor(identity(x.source_obj), psi));
}

// ---------------------------------------------------------------------------
// Incidence box exponential
// ---------------------------------------------------------------------------

struct BoxRExponential {
    IncidenceHypergraph carrier;
    IncidenceHypergraph source_obj, target_obj;
    IncidenceHypergraph prism;  // G box I(1)
    std::vector<IncidenceMorphism> vertex_homs;
    std::vector<std::vector<int>> edge_functions;  // all functions V(G) -> E(H)
    std::vector<IncidenceMorphism> incidence_homs;
    IncidenceMorphism eval;
};

/// The edge sort is every function from the vertices of G to the edges of
/// H, with no compatibility constraint; the asymmetry is intentional and
/// is what the Laplacian exponential later repairs.
inline BoxRExponential exp_box_r(const IncidenceHypergraph& g, const IncidenceHypergraph& h,
                                 int size_guard = default_size_guard()) {
    BoxRExponential x;
    x.source_obj = g;
    x.target_obj = h;
    auto [vlabels, vhoms] = detail::labeled_homs(enumerate_homs(g, h));
    x.vertex_homs = std::move(vhoms);

    const size_t nv = g.vertices().size();
    const size_t ne = h.edges().size();
    {
        long long total = 1;
        for (size_t v = 0; v < nv; ++v) {
            total = detail::checked_mul(total, static_cast<long long>(ne));
            if (total > (1LL << size_guard))
                throw SizeGuardError("exp_box_r: function space exceeds the size guard");
        }
    }
    std::vector<std::string> elabels;
    if (ne == 0 && nv > 0) {
        // no functions at all
    } else {
        std::vector<int> fun(nv, 0);
        while (true) {
            x.edge_functions.push_back(fun);
            elabels.push_back(detail::function_label(fun, h.edges()));
            size_t v = 0;
            for (; v < nv; ++v) {
                if (++fun[v] < static_cast<int>(ne)) break;
                fun[v] = 0;
            }
            if (v == nv) break;
        }
    }
    // function labels sort with their enumeration only by accident; re-sort
    {
        std::vector<size_t> order(elabels.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return elabels[a] < elabels[b]; });
        std::vector<std::string> sl;
        std::vector<std::vector<int>> sf;
        for (size_t i : order) {
            sl.push_back(elabels[i]);
            sf.push_back(x.edge_functions[i]);
        }
        elabels = std::move(sl);
        x.edge_functions = std::move(sf);
    }

    x.prism = box_r(g, unit_incidence_r());
    auto [ilabels, ihoms] = detail::labeled_homs(enumerate_homs(x.prism, h));
    x.incidence_homs = std::move(ihoms);

    auto runitor_inv = inverse(right_unitor_r(g));
    auto into_vertex = compose(box_r_mor(identity(g), yoneda_y()), runitor_inv);  // G -> prism
    std::vector<std::pair<std::string, std::string>> port, att;
    for (size_t p = 0; p < ilabels.size(); ++p) {
        const auto& psi = x.incidence_homs[p];
        port.push_back({ilabels[p], image_label(compose(psi, into_vertex))});
        std::vector<int> fun(nv);
        for (size_t v = 0; v < nv; ++v) {
            int pe = x.prism.edge_index(tagged_label(2, g.vertices()[v], "e0"));
            fun[v] = psi.edge_map()[pe];
        }
        att.push_back({ilabels[p], detail::function_label(fun, h.edges())});
    }
    x.carrier = IncidenceHypergraph::make(vlabels, elabels, ilabels, port, att);

    // vev : G box carrier -> H
    auto dom = detail::shared(box_r(g, x.carrier));
    auto cod = detail::shared(h);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    for (size_t v = 0; v < nv; ++v)
        for (size_t p = 0; p < vlabels.size(); ++p)
            vmap[detail::must_vertex(*dom, pair_label(g.vertices()[v], vlabels[p]))] =
                x.vertex_homs[p].vertex_map()[v];
    for (size_t e = 0; e < g.edges().size(); ++e)
        for (size_t p = 0; p < vlabels.size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(1, g.edges()[e], vlabels[p]))] =
                x.vertex_homs[p].edge_map()[e];
    for (size_t v = 0; v < nv; ++v)
        for (size_t p = 0; p < elabels.size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(2, g.vertices()[v], elabels[p]))] =
                x.edge_functions[p][v];
    for (size_t i = 0; i < g.incidences().size(); ++i)
        for (size_t p = 0; p < vlabels.size(); ++p)
            imap[detail::must_incidence(*dom, tagged_label(1, g.incidences()[i], vlabels[p]))] =
                x.vertex_homs[p].incidence_map()[i];
    for (size_t v = 0; v < nv; ++v)
        for (size_t p = 0; p < ilabels.size(); ++p) {
            int pi = x.prism.incidence_index(tagged_label(2, g.vertices()[v], "i0"));
            imap[detail::must_incidence(*dom, tagged_label(2, g.vertices()[v], ilabels[p]))] =
                x.incidence_homs[p].incidence_map()[pi];
        }
    x.eval = IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
    return x;
}

inline IncidenceMorphism curry_box_r(const BoxRExponential& x, const IncidenceMorphism& phi,
                                     const IncidenceHypergraph& k) {
    const IncidenceHypergraph& g = x.source_obj;
    auto prod = box_r(g, k);
    if (!(phi.domain() == prod))
        throw std::invalid_argument("curry: domain is not the declared box product");
    auto kp = detail::shared(k);
    auto runitor_inv = inverse(right_unitor_r(g));
    std::vector<int> vmap(k.vertices().size()), emap(k.edges().size()),
        imap(k.incidences().size());
    for (size_t w = 0; w < k.vertices().size(); ++w) {
        auto embed =
            compose(box_r_mor(identity(g), pick_vertex_r(kp, static_cast<int>(w))), runitor_inv);
        vmap[w] = detail::lookup_vertex(x.carrier, image_label(compose(phi, embed)), "curry_box_r");
    }
    for (size_t f = 0; f < k.edges().size(); ++f) {
        std::vector<int> fun(g.vertices().size());
        for (size_t v = 0; v < g.vertices().size(); ++v)
            fun[v] = phi.edge_map()[detail::must_edge(
                prod, tagged_label(2, g.vertices()[v], k.edges()[f]))];
        emap[f] = detail::lookup_edge(
            x.carrier, detail::function_label(fun, x.target_obj.edges()), "curry_box_r");
    }
    for (size_t j = 0; j < k.incidences().size(); ++j) {
        auto embed = box_r_mor(identity(g), pick_incidence_r(kp, static_cast<int>(j)));
        std::string l = image_label(compose(phi, embed));
        int idx = x.carrier.incidence_index(l);
        if (idx < 0) throw std::logic_error("curry_box_r: unmatched carrier incidence " + l);
        imap[j] = idx;
    }
    return IncidenceMorphism::make(kp, detail::shared(x.carrier), std::move(vmap), std::move(emap),
                                   std::move(imap));
}

inline IncidenceMorphism uncurry_box_r(const BoxRExponential& x, const IncidenceMorphism& psi) {
    return compose(x.eval, box_r_mor(identity(x.source_obj), psi));
}

// ---------------------------------------------------------------------------
// Laplacian exponential
// ---------------------------------------------------------------------------

struct LaplacianExponential {
    IncidenceHypergraph carrier;
    IncidenceHypergraph source_obj, target_obj;
    IncidenceHypergraph dual_source;  // G-dual
    IncidenceHypergraph prism;        // G lap I(1), the incidence-prism
    std::vector<IncidenceMorphism> vertex_homs;     // R(G, H)
    std::vector<IncidenceMorphism> edge_homs;       // R(G-dual, H)
    std::vector<IncidenceMorphism> incidence_homs;  // R(G lap I(1), H)
    IncidenceMorphism eval;                         // cev : G lap carrier -> H
};

/// Vertices are homs from G, edges homs from the dual of G, and incidences
/// homs from the incidence-prism of G; the attachment map passes through
/// the right anti-unitor.
inline LaplacianExponential exp_laplacian(const IncidenceHypergraph& g,
                                          const IncidenceHypergraph& h) {
    LaplacianExponential x;
    x.source_obj = g;
    x.target_obj = h;
    x.dual_source = dual(g);
    x.prism = laplacian_product(g, unit_incidence_r());

    auto [vlabels, vhoms] = detail::labeled_homs(enumerate_homs(g, h));
    auto [elabels, ehoms] = detail::labeled_homs(enumerate_homs(x.dual_source, h));
    auto [ilabels, ihoms] = detail::labeled_homs(enumerate_homs(x.prism, h));
    x.vertex_homs = std::move(vhoms);
    x.edge_homs = std::move(ehoms);
    x.incidence_homs = std::move(ihoms);

    auto into_vertex = compose(laplacian_mor(identity(g), yoneda_y()),
                               inverse(lap_right_unitor(g)));  // G -> prism
    auto into_edge = compose(laplacian_mor(identity(g), yoneda_z()),
                             inverse(anti_unitor_right(g)));  // G-dual -> prism
    std::vector<std::pair<std::string, std::string>> port, att;
    for (size_t p = 0; p < ilabels.size(); ++p) {
        port.push_back({ilabels[p], image_label(compose(x.incidence_homs[p], into_vertex))});
        att.push_back({ilabels[p], image_label(compose(x.incidence_homs[p], into_edge))});
    }
    x.carrier = IncidenceHypergraph::make(vlabels, elabels, ilabels, port, att);

    // cev : G lap carrier -> H. The dual of G shares its element labels
    // with G, sorted identically, so index translation is direct.
    auto dom = detail::shared(laplacian_product(g, x.carrier));
    auto cod = detail::shared(h);
    std::vector<int> vmap(dom->vertices().size()), emap(dom->edges().size()),
        imap(dom->incidences().size());
    const size_t nv = g.vertices().size(), ne = g.edges().size(), ni = g.incidences().size();
    for (size_t v = 0; v < nv; ++v)
        for (size_t p = 0; p < vlabels.size(); ++p)
            vmap[detail::must_vertex(*dom, tagged_label(1, g.vertices()[v], vlabels[p]))] =
                x.vertex_homs[p].vertex_map()[v];
    for (size_t e = 0; e < ne; ++e)
        for (size_t p = 0; p < elabels.size(); ++p)
            vmap[detail::must_vertex(*dom, tagged_label(4, g.edges()[e], elabels[p]))] =
                x.edge_homs[p].vertex_map()[e];  // E(G) is V(G-dual)
    for (size_t e = 0; e < ne; ++e)
        for (size_t p = 0; p < vlabels.size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(2, g.edges()[e], vlabels[p]))] =
                x.vertex_homs[p].edge_map()[e];
    for (size_t v = 0; v < nv; ++v)
        for (size_t p = 0; p < elabels.size(); ++p)
            emap[detail::must_edge(*dom, tagged_label(3, g.vertices()[v], elabels[p]))] =
                x.edge_homs[p].edge_map()[v];  // V(G) is E(G-dual)
    for (size_t i = 0; i < ni; ++i) {
        for (size_t p = 0; p < vlabels.size(); ++p)
            imap[detail::must_incidence(*dom, tagged_label(1, g.incidences()[i], vlabels[p]))] =
                x.vertex_homs[p].incidence_map()[i];
        for (size_t p = 0; p < elabels.size(); ++p)
            imap[detail::must_incidence(*dom, tagged_label(2, g.incidences()[i], elabels[p]))] =
                x.edge_homs[p].incidence_map()[i];
    }
    for (size_t e = 0; e < ne; ++e)
        for (size_t p = 0; p < ilabels.size(); ++p) {
            int pi = x.prism.incidence_index(tagged_label(3, g.edges()[e], "i0"));
            imap[detail::must_incidence(*dom, tagged_label(3, g.edges()[e], ilabels[p]))] =
                x.incidence_homs[p].incidence_map()[pi];
        }
    for (size_t v = 0; v < nv; ++v)
        for (size_t p = 0; p < ilabels.size(); ++p) {
            int pi = x.prism.incidence_index(tagged_label(4, g.vertices()[v], "i0"));
            imap[detail::must_incidence(*dom, tagged_label(4, g.vertices()[v], ilabels[p]))] =
                x.incidence_homs[p].incidence_map()[pi];
        }
    x.eval = IncidenceMorphism::make(dom, cod, std::move(vmap), std::move(emap), std::move(imap));
    return x;
}

inline IncidenceMorphism curry_laplacian(const LaplacianExponential& x,
                                         const IncidenceMorphism& phi,
                                         const IncidenceHypergraph& k) {
    const IncidenceHypergraph& g = x.source_obj;
    if (!(phi.domain() == laplacian_product(g, k)))
        throw std::invalid_argument("curry: domain is not the declared Laplacian product");
    auto kp = detail::shared(k);
    auto runitor_inv = inverse(lap_right_unitor(g));
    auto antiunitor_inv = inverse(anti_unitor_right(g));
    std::vector<int> vmap(k.vertices().size()), emap(k.edges().size()),
        imap(k.incidences().size());
    for (size_t w = 0; w < k.vertices().size(); ++w) {
        auto embed = compose(laplacian_mor(identity(g), pick_vertex_r(kp, static_cast<int>(w))),
                             runitor_inv);
        vmap[w] =
            detail::lookup_vertex(x.carrier, image_label(compose(phi, embed)), "curry_laplacian");
    }
    for (size_t f = 0; f < k.edges().size(); ++f) {
        auto embed = compose(laplacian_mor(identity(g), pick_edge_r(kp, static_cast<int>(f))),
                             antiunitor_inv);
        emap[f] =
            detail::lookup_edge(x.carrier, image_label(compose(phi, embed)), "curry_laplacian");
    }
    for (size_t j = 0; j < k.incidences().size(); ++j) {
        auto embed = laplacian_mor(identity(g), pick_incidence_r(kp, static_cast<int>(j)));
        std::string l = image_label(compose(phi, embed));
        int idx = x.carrier.incidence_index(l);
        if (idx < 0) throw std::logic_error("curry_laplacian: unmatched carrier incidence " + l);
        imap[j] = idx;
    }
    return IncidenceMorphism::make(kp, detail::shared(x.carrier), std::move(vmap), std::move(emap),
                                   std::move(imap));
}

inline IncidenceMorphism uncurry_laplacian(const LaplacianExponential& x,
                                           const IncidenceMorphism& psi) {
    return compose(x.eval, laplacian_mor(identity(x.source_obj), psi));
}

/// G lap I(1): a copy of G and its dual joined by rung incidences.
inline IncidenceHypergraph incidence_prism(const IncidenceHypergraph& g) {
    return laplacian_product(g, unit_incidence_r());
}

}  // namespace hyperbox
