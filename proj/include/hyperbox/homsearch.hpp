#pragma once

// Exhaustive, deterministic enumeration of morphisms between finite
// objects, with optional anchor constraints, monic filters, and
// isomorphism search. Backtracking assigns incidences (or edges, for
// quivers) first, since those images force the rest through the
// structure maps; isolated elements are filled in last.

#include <array>
#include <functional>
#include <optional>

#include "core.hpp"

namespace hyperbox {

/// Pins selected domain elements to required codomain images.
struct AnchorConstraint {
    std::vector<std::pair<std::string, std::string>> vertex;
    std::vector<std::pair<std::string, std::string>> edge;
    std::vector<std::pair<std::string, std::string>> incidence;

    bool empty() const { return vertex.empty() && edge.empty() && incidence.empty(); }
};

enum class MonicFilter { none, incidence, vertex };

namespace detail {

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit count overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit count overflow");
    return r;
}

// Resolves label-level anchors into partial index maps (-1 = free).
inline std::vector<int> resolve_anchors(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::vector<std::string>& dom, const std::vector<std::string>& cod,
    const char* sort_name) {
    std::vector<int> out(dom.size(), -1);
    for (const auto& [a, b] : pairs) {
        int ai = require_index(dom, a, sort_name);
        int bi = require_index(cod, b, sort_name);
        if (out[ai] != -1 && out[ai] != bi)
            throw std::invalid_argument(std::string("conflicting anchors for ") + a);
        out[ai] = bi;
    }
    return out;
}

// Shared state for the incidence-hypergraph search.
struct RSearch {
    const IncidenceHypergraph& dom;
    const IncidenceHypergraph& cod;
    MonicFilter monic;
    std::vector<int> vmap, emap, imap;        // current partial assignment
    std::vector<int> vanchor, eanchor, ianchor;
    std::vector<char> vused, eused, iused;    // only consulted under monic filters
    std::vector<int> free_vertices, free_edges;
    std::function<void()> emit;               // called with complete maps
    long long count = 0;

    RSearch(const IncidenceHypergraph& d, const IncidenceHypergraph& c,
            const AnchorConstraint& anchors, MonicFilter mf)
        : dom(d), cod(c), monic(mf) {
        vanchor = resolve_anchors(anchors.vertex, d.vertices(), c.vertices(), "vertex");
        eanchor = resolve_anchors(anchors.edge, d.edges(), c.edges(), "edge");
        ianchor = resolve_anchors(anchors.incidence, d.incidences(), c.incidences(), "incidence");
        vmap.assign(d.vertices().size(), -1);
        emap.assign(d.edges().size(), -1);
        imap.assign(d.incidences().size(), -1);
        vused.assign(c.vertices().size(), 0);
        eused.assign(c.edges().size(), 0);
        iused.assign(c.incidences().size(), 0);
        std::vector<char> vhit(d.vertices().size(), 0), ehit(d.edges().size(), 0);
        for (size_t i = 0; i < d.incidences().size(); ++i) {
            vhit[d.port(static_cast<int>(i))] = 1;
            ehit[d.attachment(static_cast<int>(i))] = 1;
        }
        for (size_t v = 0; v < vhit.size(); ++v)
            if (!vhit[v]) free_vertices.push_back(static_cast<int>(v));
        for (size_t e = 0; e < ehit.size(); ++e)
            if (!ehit[e]) free_edges.push_back(static_cast<int>(e));
    }

    bool set_vertex(int v, int image) {
        if (vmap[v] != -1) return vmap[v] == image;
        if (vanchor[v] != -1 && vanchor[v] != image) return false;
        if (monic == MonicFilter::vertex) {
            if (vused[image]) return false;
            vused[image] = 1;
        }
        vmap[v] = image;
        return true;
    }
    void unset_vertex(int v, bool did_set) {
        if (!did_set) return;
        if (monic == MonicFilter::vertex) vused[vmap[v]] = 0;
        vmap[v] = -1;
    }
    bool set_edge(int e, int image) {
        if (emap[e] != -1) return emap[e] == image;
        if (eanchor[e] != -1 && eanchor[e] != image) return false;
        emap[e] = image;
        return true;
    }
    void unset_edge(int e, bool did_set) {
        if (did_set) emap[e] = -1;
    }

    void search_incidence(size_t i) {
        if (i == imap.size()) {
            finish_free(0);
            return;
        }
        int di = static_cast<int>(i);
        int dv = dom.port(di), de = dom.attachment(di);
        int lo = 0, hi = static_cast<int>(cod.incidences().size());
        if (ianchor[di] != -1) { lo = ianchor[di]; hi = lo + 1; }
        for (int c = lo; c < hi; ++c) {
            if (monic == MonicFilter::incidence && iused[c]) continue;
            bool vset = false, eset = false;
            int old_v = vmap[dv], old_e = emap[de];
            if (!set_vertex(dv, cod.port(c))) continue;
            vset = (old_v == -1);
            if (!set_edge(de, cod.attachment(c))) {
                unset_vertex(dv, vset);
                continue;
            }
            eset = (old_e == -1);
            imap[di] = c;
            if (monic == MonicFilter::incidence) iused[c] = 1;
            search_incidence(i + 1);
            if (monic == MonicFilter::incidence) iused[c] = 0;
            imap[di] = -1;
            unset_edge(de, eset);
            unset_vertex(dv, vset);
        }
    }

    // Fills isolated vertices and incidence-free edges. Uses a product
    // shortcut when counting without a vertex-monic filter.
    bool counting = false;
    void finish_free(size_t stage) {
        if (counting && monic != MonicFilter::vertex) {
            long long ways = 1;
            for (int e : free_edges)
                ways = checked_mul(ways, eanchor[e] != -1 ? 1 : static_cast<long long>(cod.edges().size()));
            for (int v : free_vertices)
                ways = checked_mul(ways, vanchor[v] != -1 ? 1 : static_cast<long long>(cod.vertices().size()));
            count = checked_add(count, ways);
            return;
        }
        if (stage < free_edges.size()) {
            int e = free_edges[stage];
            int lo = 0, hi = static_cast<int>(cod.edges().size());
            if (eanchor[e] != -1) { lo = eanchor[e]; hi = lo + 1; }
            for (int c = lo; c < hi; ++c) {
                emap[e] = c;
                finish_free(stage + 1);
                emap[e] = -1;
            }
            return;
        }
        size_t vstage = stage - free_edges.size();
        if (vstage < free_vertices.size()) {
            int v = free_vertices[vstage];
            int lo = 0, hi = static_cast<int>(cod.vertices().size());
            if (vanchor[v] != -1) { lo = vanchor[v]; hi = lo + 1; }
            for (int c = lo; c < hi; ++c) {
                if (monic == MonicFilter::vertex && vused[c]) continue;
                if (monic == MonicFilter::vertex) vused[c] = 1;
                vmap[v] = c;
                finish_free(stage + 1);
                vmap[v] = -1;
                if (monic == MonicFilter::vertex) vused[c] = 0;
            }
            return;
        }
        if (counting)
            count = checked_add(count, 1);
        else
            emit();
    }
};

// Quiver search: edges first (forcing both endpoints), isolated vertices last.
struct QSearch {
    const Quiver& dom;
    const Quiver& cod;
    std::vector<int> vmap, emap;
    std::vector<int> vanchor, eanchor;
    std::vector<int> free_vertices;
    std::function<void()> emit;
    long long count = 0;
    bool counting = false;

    QSearch(const Quiver& d, const Quiver& c, const AnchorConstraint& anchors) : dom(d), cod(c) {
        if (!anchors.incidence.empty())
            throw std::invalid_argument("incidence anchors are invalid for quivers");
        vanchor = resolve_anchors(anchors.vertex, d.vertices(), c.vertices(), "vertex");
        eanchor = resolve_anchors(anchors.edge, d.edges(), c.edges(), "edge");
        vmap.assign(d.vertices().size(), -1);
        emap.assign(d.edges().size(), -1);
        std::vector<char> hit(d.vertices().size(), 0);
        for (size_t e = 0; e < d.edges().size(); ++e) {
            hit[d.source(static_cast<int>(e))] = 1;
            hit[d.target(static_cast<int>(e))] = 1;
        }
        for (size_t v = 0; v < hit.size(); ++v)
            if (!hit[v]) free_vertices.push_back(static_cast<int>(v));
    }

    bool set_vertex(int v, int image) {
        if (vmap[v] != -1) return vmap[v] == image;
        if (vanchor[v] != -1 && vanchor[v] != image) return false;
        vmap[v] = image;
        return true;
    }

    void search_edge(size_t e) {
        if (e == emap.size()) {
            finish_free(0);
            return;
        }
        int de = static_cast<int>(e);
        int lo = 0, hi = static_cast<int>(cod.edges().size());
        if (eanchor[de] != -1) { lo = eanchor[de]; hi = lo + 1; }
        for (int c = lo; c < hi; ++c) {
            int s = dom.source(de), t = dom.target(de);
            int old_s = vmap[s];
            if (!set_vertex(s, cod.source(c))) continue;
            bool sset = (old_s == -1);
            int old_t = vmap[t];
            if (!set_vertex(t, cod.target(c))) {
                if (sset) vmap[s] = -1;
                continue;
            }
            bool tset = (old_t == -1);
            emap[de] = c;
            search_edge(e + 1);
            emap[de] = -1;
            if (tset) vmap[t] = -1;
            if (sset) vmap[s] = -1;
        }
    }

    void finish_free(size_t stage) {
        if (counting) {
            long long ways = 1;
            for (int v : free_vertices)
                ways = checked_mul(ways, vanchor[v] != -1 ? 1 : static_cast<long long>(cod.vertices().size()));
            count = checked_add(count, ways);
            return;
        }
        if (stage == free_vertices.size()) {
            emit();
            return;
        }
        int v = free_vertices[stage];
        int lo = 0, hi = static_cast<int>(cod.vertices().size());
        if (vanchor[v] != -1) { lo = vanchor[v]; hi = lo + 1; }
        for (int c = lo; c < hi; ++c) {
            vmap[v] = c;
            finish_free(stage + 1);
            vmap[v] = -1;
        }
    }
};

// Set-system search: vertices in index order; an edge is checked as soon
// as its last endpoint is assigned, and edge images are chosen at the end
// from the per-edge candidate sets (independent once vertices are fixed).
struct HSearch {
    const SetSystemHypergraph& dom;
    const SetSystemHypergraph& cod;
    std::vector<int> vmap;
    std::vector<int> vanchor, eanchor;
    std::vector<std::vector<int>> edges_closing_at;  // vertex -> edges whose last endpoint it is
    std::vector<int> empty_edges;                    // domain edges with no endpoints
    std::vector<std::vector<int>> candidates;        // per-edge codomain candidates
    std::function<void(const std::vector<int>&, const std::vector<int>&)> emit;  // vmap, emap
    long long count = 0;
    bool counting = false;

    HSearch(const SetSystemHypergraph& d, const SetSystemHypergraph& c,
            const AnchorConstraint& anchors)
        : dom(d), cod(c) {
        if (!anchors.incidence.empty())
            throw std::invalid_argument("incidence anchors are invalid for set-system hypergraphs");
        vanchor = resolve_anchors(anchors.vertex, d.vertices(), c.vertices(), "vertex");
        eanchor = resolve_anchors(anchors.edge, d.edges(), c.edges(), "edge");
        vmap.assign(d.vertices().size(), -1);
        edges_closing_at.assign(d.vertices().size(), {});
        candidates.assign(d.edges().size(), {});
        for (size_t e = 0; e < d.edges().size(); ++e) {
            const auto& eps = d.endpoints(static_cast<int>(e));
            if (eps.empty())
                empty_edges.push_back(static_cast<int>(e));
            else
                edges_closing_at[eps.back()].push_back(static_cast<int>(e));
        }
    }

    bool edge_candidates(int e) {
        std::vector<int> image;
        image.reserve(dom.endpoints(e).size());
        for (int v : dom.endpoints(e)) image.push_back(vmap[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        candidates[e].clear();
        for (size_t f = 0; f < cod.edges().size(); ++f) {
            if (eanchor[e] != -1 && eanchor[e] != static_cast<int>(f)) continue;
            if (cod.endpoints(static_cast<int>(f)) == image) candidates[e].push_back(static_cast<int>(f));
        }
        return !candidates[e].empty();
    }

    void run() {
        for (int e : empty_edges) {
            candidates[e].clear();
            for (size_t f = 0; f < cod.edges().size(); ++f) {
                if (eanchor[e] != -1 && eanchor[e] != static_cast<int>(f)) continue;
                if (cod.endpoints(static_cast<int>(f)).empty())
                    candidates[e].push_back(static_cast<int>(f));
            }
            if (candidates[e].empty()) return;
        }
        search_vertex(0);
    }

    void search_vertex(size_t v) {
        if (v == vmap.size()) {
            finish();
            return;
        }
        int dv = static_cast<int>(v);
        int lo = 0, hi = static_cast<int>(cod.vertices().size());
        if (vanchor[dv] != -1) { lo = vanchor[dv]; hi = lo + 1; }
        for (int c = lo; c < hi; ++c) {
            vmap[dv] = c;
            bool ok = true;
            for (int e : edges_closing_at[dv])
                if (!edge_candidates(e)) { ok = false; break; }
            if (ok) search_vertex(v + 1);
            vmap[dv] = -1;
        }
    }

    void finish() {
        if (counting) {
            long long ways = 1;
            for (size_t e = 0; e < candidates.size(); ++e)
                ways = checked_mul(ways, static_cast<long long>(candidates[e].size()));
            count = checked_add(count, ways);
            return;
        }
        std::vector<int> emap(candidates.size(), 0);
        pick_edge(0, emap);
    }

    void pick_edge(size_t e, std::vector<int>& emap) {
        if (e == emap.size()) {
            emit(vmap, emap);
            return;
        }
        for (int c : candidates[e]) {
            emap[e] = c;
            pick_edge(e + 1, emap);
        }
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// enumerate_homs / count_homs
// ---------------------------------------------------------------------------

inline std::vector<IncidenceMorphism> enumerate_homs(const IncidenceHypergraph& dom,
                                                     const IncidenceHypergraph& cod,
                                                     const AnchorConstraint& anchors = {},
                                                     MonicFilter monic = MonicFilter::none) {
    auto dp = detail::shared(dom);
    auto cp = detail::shared(cod);
    std::vector<IncidenceMorphism> out;
    detail::RSearch s(*dp, *cp, anchors, monic);
    s.emit = [&] { out.push_back(IncidenceMorphism::unchecked(dp, cp, s.vmap, s.emap, s.imap)); };
    s.search_incidence(0);
    std::sort(out.begin(), out.end(),
              [](const IncidenceMorphism& a, const IncidenceMorphism& b) { return canonical_less(a, b); });
    return out;
}

inline long long count_homs(const IncidenceHypergraph& dom, const IncidenceHypergraph& cod,
                            const AnchorConstraint& anchors = {},
                            MonicFilter monic = MonicFilter::none) {
    detail::RSearch s(dom, cod, anchors, monic);
    s.counting = true;
    s.search_incidence(0);
    return s.count;
}

inline std::vector<QuiverMorphism> enumerate_homs(const Quiver& dom, const Quiver& cod,
                                                  const AnchorConstraint& anchors = {}) {
    auto dp = detail::shared(dom);
    auto cp = detail::shared(cod);
    std::vector<QuiverMorphism> out;
    detail::QSearch s(*dp, *cp, anchors);
    s.emit = [&] { out.push_back(QuiverMorphism::unchecked(dp, cp, s.vmap, s.emap)); };
    s.search_edge(0);
    std::sort(out.begin(), out.end(),
              [](const QuiverMorphism& a, const QuiverMorphism& b) { return canonical_less(a, b); });
    return out;
}

inline long long count_homs(const Quiver& dom, const Quiver& cod,
                            const AnchorConstraint& anchors = {}) {
    detail::QSearch s(dom, cod, anchors);
    s.counting = true;
    s.search_edge(0);
    return s.count;
}

inline std::vector<HypergraphMorphism> enumerate_homs(const SetSystemHypergraph& dom,
                                                      const SetSystemHypergraph& cod,
                                                      const AnchorConstraint& anchors = {}) {
    auto dp = detail::shared(dom);
    auto cp = detail::shared(cod);
    std::vector<HypergraphMorphism> out;
    detail::HSearch s(*dp, *cp, anchors);
    s.emit = [&](const std::vector<int>& vm, const std::vector<int>& em) {
        out.push_back(HypergraphMorphism::unchecked(dp, cp, vm, em));
    };
    s.run();
    std::sort(out.begin(), out.end(),
              [](const HypergraphMorphism& a, const HypergraphMorphism& b) { return canonical_less(a, b); });
    return out;
}

inline long long count_homs(const SetSystemHypergraph& dom, const SetSystemHypergraph& cod,
                            const AnchorConstraint& anchors = {}) {
    detail::HSearch s(dom, cod, anchors);
    s.counting = true;
    s.run();
    return s.count;
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace detail {

template <class T>
std::vector<T> sorted_copy(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

inline std::vector<int> r_vertex_degrees(const IncidenceHypergraph& g) {
    std::vector<int> d(g.vertices().size(), 0);
    for (size_t i = 0; i < g.incidences().size(); ++i) d[g.port(static_cast<int>(i))]++;
    return d;
}
inline std::vector<int> r_edge_degrees(const IncidenceHypergraph& g) {
    std::vector<int> d(g.edges().size(), 0);
    for (size_t i = 0; i < g.incidences().size(); ++i) d[g.attachment(static_cast<int>(i))]++;
    return d;
}

// Bijective incidence assignment with injective propagation; free
// elements are matched up with whatever codomain elements remain.
// Degree and parallel-class signatures prune the candidate incidences,
// and branching prefers incidences touching already-mapped elements.
struct RIsoSearch {
    const IncidenceHypergraph& a;
    const IncidenceHypergraph& b;
    std::vector<int> vmap, emap, imap;
    std::vector<char> vused, eused, iused;
    std::vector<int> avdeg, aedeg, bvdeg, bedeg, apar, bpar;

    static std::vector<int> parallel_class_sizes(const IncidenceHypergraph& g) {
        std::vector<int> out(g.incidences().size(), 0);
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = 0; j < out.size(); ++j)
                if (g.port(static_cast<int>(i)) == g.port(static_cast<int>(j)) &&
                    g.attachment(static_cast<int>(i)) == g.attachment(static_cast<int>(j)))
                    out[i]++;
        return out;
    }

    RIsoSearch(const IncidenceHypergraph& x, const IncidenceHypergraph& y) : a(x), b(y) {
        vmap.assign(a.vertices().size(), -1);
        emap.assign(a.edges().size(), -1);
        imap.assign(a.incidences().size(), -1);
        vused.assign(b.vertices().size(), 0);
        eused.assign(b.edges().size(), 0);
        iused.assign(b.incidences().size(), 0);
        avdeg = r_vertex_degrees(a);
        aedeg = r_edge_degrees(a);
        bvdeg = r_vertex_degrees(b);
        bedeg = r_edge_degrees(b);
        apar = parallel_class_sizes(a);
        bpar = parallel_class_sizes(b);
    }

    int pick_next() const {
        int best = -1, best_score = -1;
        for (size_t i = 0; i < imap.size(); ++i) {
            if (imap[i] != -1) continue;
            int score = (vmap[a.port(static_cast<int>(i))] != -1) +
                        (emap[a.attachment(static_cast<int>(i))] != -1);
            if (score > best_score) {
                best_score = score;
                best = static_cast<int>(i);
            }
        }
        return best;
    }

    bool search(size_t assigned) {
        if (assigned == imap.size()) return fill_free();
        int di = pick_next();
        int dv = a.port(di), de = a.attachment(di);
        for (size_t c = 0; c < b.incidences().size(); ++c) {
            if (iused[c]) continue;
            int cv = b.port(static_cast<int>(c)), ce = b.attachment(static_cast<int>(c));
            if (avdeg[dv] != bvdeg[cv] || aedeg[de] != bedeg[ce] || apar[di] != bpar[c]) continue;
            bool vset = false, eset = false;
            if (vmap[dv] == -1) {
                if (vused[cv]) continue;
                vmap[dv] = cv;
                vused[cv] = 1;
                vset = true;
            } else if (vmap[dv] != cv) {
                continue;
            }
            if (emap[de] == -1) {
                if (eused[ce]) { if (vset) { vused[cv] = 0; vmap[dv] = -1; } continue; }
                emap[de] = ce;
                eused[ce] = 1;
                eset = true;
            } else if (emap[de] != ce) {
                if (vset) { vused[cv] = 0; vmap[dv] = -1; }
                continue;
            }
            imap[di] = static_cast<int>(c);
            iused[c] = 1;
            if (search(assigned + 1)) return true;
            iused[c] = 0;
            imap[di] = -1;
            if (eset) { eused[ce] = 0; emap[de] = -1; }
            if (vset) { vused[cv] = 0; vmap[dv] = -1; }
        }
        return false;
    }

    bool fill_free() {
        // Any pairing of the remaining elements works: nothing constrains them.
        size_t next = 0;
        for (size_t v = 0; v < vmap.size(); ++v) {
            if (vmap[v] != -1) continue;
            while (next < vused.size() && vused[next]) ++next;
            vmap[v] = static_cast<int>(next);
            vused[next] = 1;
        }
        next = 0;
        for (size_t e = 0; e < emap.size(); ++e) {
            if (emap[e] != -1) continue;
            while (next < eused.size() && eused[next]) ++next;
            emap[e] = static_cast<int>(next);
            eused[next] = 1;
        }
        return true;
    }
};

struct QIsoSearch {
    const Quiver& a;
    const Quiver& b;
    std::vector<int> vmap, emap;
    std::vector<char> vused, eused;
    std::vector<std::pair<int, int>> adeg, bdeg;  // (out, in) per vertex

    static std::vector<std::pair<int, int>> degrees(const Quiver& q) {
        std::vector<std::pair<int, int>> d(q.vertices().size(), {0, 0});
        for (size_t e = 0; e < q.edges().size(); ++e) {
            d[q.source(static_cast<int>(e))].first++;
            d[q.target(static_cast<int>(e))].second++;
        }
        return d;
    }

    QIsoSearch(const Quiver& x, const Quiver& y) : a(x), b(y) {
        vmap.assign(a.vertices().size(), -1);
        emap.assign(a.edges().size(), -1);
        vused.assign(b.vertices().size(), 0);
        eused.assign(b.edges().size(), 0);
        adeg = degrees(a);
        bdeg = degrees(b);
    }

    bool set_vertex(int v, int image, bool& did_set) {
        did_set = false;
        if (vmap[v] != -1) return vmap[v] == image;
        if (vused[image] || adeg[v] != bdeg[image]) return false;
        vmap[v] = image;
        vused[image] = 1;
        did_set = true;
        return true;
    }

    int pick_next() const {
        int best = -1, best_score = -1;
        for (size_t e = 0; e < emap.size(); ++e) {
            if (emap[e] != -1) continue;
            int score = (vmap[a.source(static_cast<int>(e))] != -1) +
                        (vmap[a.target(static_cast<int>(e))] != -1);
            if (score > best_score) {
                best_score = score;
                best = static_cast<int>(e);
            }
        }
        return best;
    }

    bool search(size_t assigned) {
        if (assigned == emap.size()) return fill_free();
        int de = pick_next();
        for (size_t c = 0; c < b.edges().size(); ++c) {
            if (eused[c]) continue;
            bool sset = false, tset = false;
            if (!set_vertex(a.source(de), b.source(static_cast<int>(c)), sset)) continue;
            if (!set_vertex(a.target(de), b.target(static_cast<int>(c)), tset)) {
                if (sset) { vused[vmap[a.source(de)]] = 0; vmap[a.source(de)] = -1; }
                continue;
            }
            emap[de] = static_cast<int>(c);
            eused[c] = 1;
            if (search(assigned + 1)) return true;
            eused[c] = 0;
            emap[de] = -1;
            if (tset) { vused[vmap[a.target(de)]] = 0; vmap[a.target(de)] = -1; }
            if (sset) { vused[vmap[a.source(de)]] = 0; vmap[a.source(de)] = -1; }
        }
        return false;
    }

    bool fill_free() {
        size_t next = 0;
        for (size_t v = 0; v < vmap.size(); ++v) {
            if (vmap[v] != -1) continue;
            while (next < vused.size() && vused[next]) ++next;
            vmap[v] = static_cast<int>(next);
            vused[next] = 1;
        }
        return true;
    }
};

// Vertex signatures (multiset of incident edge sizes) narrow the
// candidate lists; co-membership counts prune pairwise as the map grows;
// the most-constrained unassigned vertex is branched on first. Edge
// images are matched by backtracking once the vertex map is complete.
struct HIsoSearch {
    const SetSystemHypergraph& a;
    const SetSystemHypergraph& b;
    std::vector<int> vmap, emap;
    std::vector<char> vused, eused;
    std::vector<std::vector<int>> apair, bpair;  // co-membership counts
    std::vector<std::vector<int>> candidates;    // per domain vertex

    static std::vector<std::vector<int>> pair_counts(const SetSystemHypergraph& g) {
        size_t n = g.vertices().size();
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
        for (size_t e = 0; e < g.edges().size(); ++e)
            for (int u : g.endpoints(static_cast<int>(e)))
                for (int w : g.endpoints(static_cast<int>(e))) m[u][w]++;
        return m;
    }

    static std::vector<std::vector<int>> vertex_signatures(const SetSystemHypergraph& g) {
        std::vector<std::vector<int>> sig(g.vertices().size());
        for (size_t e = 0; e < g.edges().size(); ++e)
            for (int u : g.endpoints(static_cast<int>(e)))
                sig[u].push_back(static_cast<int>(g.endpoints(static_cast<int>(e)).size()));
        for (auto& s : sig) std::sort(s.begin(), s.end());
        return sig;
    }

    HIsoSearch(const SetSystemHypergraph& x, const SetSystemHypergraph& y) : a(x), b(y) {
        vmap.assign(a.vertices().size(), -1);
        emap.assign(a.edges().size(), -1);
        vused.assign(b.vertices().size(), 0);
        eused.assign(b.edges().size(), 0);
        apair = pair_counts(a);
        bpair = pair_counts(b);
        auto asig = vertex_signatures(a);
        auto bsig = vertex_signatures(b);
        candidates.resize(a.vertices().size());
        for (size_t v = 0; v < a.vertices().size(); ++v)
            for (size_t w = 0; w < b.vertices().size(); ++w)
                if (asig[v] == bsig[w]) candidates[v].push_back(static_cast<int>(w));
    }

    int pick_next() const {
        int best = -1, best_assigned = -1;
        for (size_t v = 0; v < vmap.size(); ++v) {
            if (vmap[v] != -1) continue;
            int assigned = 0;
            for (size_t u = 0; u < vmap.size(); ++u)
                if (vmap[u] != -1 && apair[v][u] > 0) assigned++;
            if (assigned > best_assigned) {
                best_assigned = assigned;
                best = static_cast<int>(v);
            }
        }
        return best;
    }

    bool search_vertex(size_t assigned) {
        if (assigned == vmap.size()) return search_edge(0);
        int v = pick_next();
        for (int c : candidates[v]) {
            if (vused[c]) continue;
            bool ok = true;
            for (size_t u = 0; u < vmap.size() && ok; ++u)
                if (vmap[u] != -1 && apair[v][u] != bpair[c][vmap[u]]) ok = false;
            if (!ok) continue;
            vmap[v] = c;
            vused[c] = 1;
            if (search_vertex(assigned + 1)) return true;
            vused[c] = 0;
            vmap[v] = -1;
        }
        return false;
    }

    bool search_edge(size_t e) {
        if (e == emap.size()) return true;
        std::vector<int> image;
        for (int v : a.endpoints(static_cast<int>(e))) image.push_back(vmap[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        for (size_t c = 0; c < b.edges().size(); ++c) {
            if (eused[c]) continue;
            if (!(b.endpoints(static_cast<int>(c)) == image)) continue;
            emap[e] = static_cast<int>(c);
            eused[c] = 1;
            if (search_edge(e + 1)) return true;
            eused[c] = 0;
            emap[e] = -1;
        }
        return false;
    }
};

}  // namespace detail

inline std::optional<IncidenceMorphism> find_isomorphism(const IncidenceHypergraph& a,
                                                         const IncidenceHypergraph& b) {
    if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size() ||
        a.incidences().size() != b.incidences().size())
        return std::nullopt;
    if (detail::sorted_copy(detail::r_vertex_degrees(a)) !=
            detail::sorted_copy(detail::r_vertex_degrees(b)) ||
        detail::sorted_copy(detail::r_edge_degrees(a)) !=
            detail::sorted_copy(detail::r_edge_degrees(b)))
        return std::nullopt;
    detail::RIsoSearch s(a, b);
    if (!s.search(0)) return std::nullopt;
    auto m = IncidenceMorphism::unchecked(detail::shared(a), detail::shared(b), s.vmap, s.emap,
                                          s.imap);
    if (auto r = validate(m); !r) throw std::logic_error("iso search produced a non-morphism: " + r.message);
    return m;
}

inline std::optional<QuiverMorphism> find_isomorphism(const Quiver& a, const Quiver& b) {
    if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size())
        return std::nullopt;
    auto degs = [](const Quiver& q) {
        std::vector<std::pair<int, int>> d(q.vertices().size(), {0, 0});
        for (size_t e = 0; e < q.edges().size(); ++e) {
            d[q.source(static_cast<int>(e))].first++;
            d[q.target(static_cast<int>(e))].second++;
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return std::nullopt;
    detail::QIsoSearch s(a, b);
    if (!s.search(0)) return std::nullopt;
    auto m = QuiverMorphism::unchecked(detail::shared(a), detail::shared(b), s.vmap, s.emap);
    if (auto r = validate(m); !r) throw std::logic_error("iso search produced a non-morphism: " + r.message);
    return m;
}

inline std::optional<HypergraphMorphism> find_isomorphism(const SetSystemHypergraph& a,
                                                          const SetSystemHypergraph& b) {
    if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size())
        return std::nullopt;
    auto vdegs = [](const SetSystemHypergraph& h) {
        std::vector<int> d(h.vertices().size(), 0);
        for (size_t e = 0; e < h.edges().size(); ++e)
            for (int v : h.endpoints(static_cast<int>(e))) d[v]++;
        std::sort(d.begin(), d.end());
        return d;
    };
    auto esizes = [](const SetSystemHypergraph& h) {
        std::vector<int> s;
        for (size_t e = 0; e < h.edges().size(); ++e)
            s.push_back(static_cast<int>(h.endpoints(static_cast<int>(e)).size()));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (vdegs(a) != vdegs(b) || esizes(a) != esizes(b)) return std::nullopt;
    detail::HIsoSearch s(a, b);
    if (!s.search_vertex(0)) return std::nullopt;
    auto m = HypergraphMorphism::unchecked(detail::shared(a), detail::shared(b), s.vmap, s.emap);
    if (auto r = validate(m); !r) throw std::logic_error("iso search produced a non-morphism: " + r.message);
    return m;
}

template <class Obj>
bool is_isomorphic(const Obj& a, const Obj& b) {
    return find_isomorphism(a, b).has_value();
}

}  // namespace hyperbox
