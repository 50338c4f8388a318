#pragma once

// Objects and morphisms for the three finite graph-like categories the
// library works with: quivers (directed multigraphs), set-system
// hypergraphs, and incidence hypergraphs.
//
// Elements are identified by string labels, unique within each sort
// (vertex / edge / incidence) of one object. Every object stores its
// sorts sorted lexicographically, so construction is canonical and all
// downstream enumeration is deterministic. Objects are immutable after
// construction and safe to share across threads.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperbox {

struct ValidationResult {
    bool ok = true;
    std::string message;
    explicit operator bool() const { return ok; }
    static ValidationResult pass() { return {true, {}}; }
    static ValidationResult fail(std::string msg) { return {false, std::move(msg)}; }
};

/// Thrown when an enumeration would exceed the configured size guard.
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when exact integer arithmetic would overflow 64 bits.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::string> sorted_unique(std::vector<std::string> xs, const char* sort_name) {
    std::sort(xs.begin(), xs.end());
    auto dup = std::adjacent_find(xs.begin(), xs.end());
    if (dup != xs.end())
        throw std::invalid_argument(std::string("duplicate ") + sort_name + " label: " + *dup);
    return xs;
}

inline int index_of(const std::vector<std::string>& xs, std::string_view label) {
    auto it = std::lower_bound(xs.begin(), xs.end(), label);
    if (it == xs.end() || *it != label) return -1;
    return static_cast<int>(it - xs.begin());
}

inline int require_index(const std::vector<std::string>& xs, std::string_view label,
                         const char* sort_name) {
    int i = index_of(xs, label);
    if (i < 0)
        throw std::invalid_argument(std::string("unknown ") + sort_name + " label: " +
                                    std::string(label));
    return i;
}

inline std::string join(const std::vector<std::string>& xs, char sep) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Objects
// ---------------------------------------------------------------------------

/// Directed multigraph: vertices, edges, and total source/target maps.
class Quiver {
public:
    Quiver() = default;

    static Quiver make(std::vector<std::string> vertices, std::vector<std::string> edges,
                       const std::vector<std::pair<std::string, std::string>>& source,
                       const std::vector<std::pair<std::string, std::string>>& target) {
        Quiver q;
        q.vertices_ = detail::sorted_unique(std::move(vertices), "vertex");
        q.edges_ = detail::sorted_unique(std::move(edges), "edge");
        q.source_.assign(q.edges_.size(), -1);
        q.target_.assign(q.edges_.size(), -1);
        auto fill = [&](const std::vector<std::pair<std::string, std::string>>& pairs,
                        std::vector<int>& out, const char* what) {
            for (const auto& [e, v] : pairs) {
                int ei = detail::require_index(q.edges_, e, "edge");
                if (out[ei] != -1)
                    throw std::invalid_argument(std::string(what) + " given twice for edge " + e);
                out[ei] = detail::require_index(q.vertices_, v, "vertex");
            }
            for (size_t i = 0; i < out.size(); ++i)
                if (out[i] == -1)
                    throw std::invalid_argument(std::string(what) + " missing for edge " +
                                                q.edges_[i]);
        };
        fill(source, q.source_, "source");
        fill(target, q.target_, "target");
        return q;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::string>& edges() const { return edges_; }
    int source(int e) const { return source_[e]; }
    int target(int e) const { return target_[e]; }
    const std::vector<int>& source_map() const { return source_; }
    const std::vector<int>& target_map() const { return target_; }

    int vertex_index(std::string_view l) const { return detail::index_of(vertices_, l); }
    int edge_index(std::string_view l) const { return detail::index_of(edges_, l); }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::vector<std::string> vertices_, edges_;
    std::vector<int> source_, target_;
};

/// Set-system hypergraph: each edge carries a subset of vertices.
class SetSystemHypergraph {
public:
    SetSystemHypergraph() = default;

    static SetSystemHypergraph make(
        std::vector<std::string> vertices, std::vector<std::string> edges,
        const std::vector<std::pair<std::string, std::vector<std::string>>>& endpoints) {
        SetSystemHypergraph h;
        h.vertices_ = detail::sorted_unique(std::move(vertices), "vertex");
        h.edges_ = detail::sorted_unique(std::move(edges), "edge");
        h.endpoints_.assign(h.edges_.size(), {});
        std::vector<bool> seen(h.edges_.size(), false);
        for (const auto& [e, vs] : endpoints) {
            int ei = detail::require_index(h.edges_, e, "edge");
            if (seen[ei])
                throw std::invalid_argument("endpoints given twice for edge " + e);
            seen[ei] = true;
            std::vector<int> idx;
            idx.reserve(vs.size());
            for (const auto& v : vs) idx.push_back(detail::require_index(h.vertices_, v, "vertex"));
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            h.endpoints_[ei] = std::move(idx);
        }
        for (size_t i = 0; i < h.edges_.size(); ++i)
            if (!seen[i])
                throw std::invalid_argument("endpoints missing for edge " + h.edges_[i]);
        return h;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::string>& edges() const { return edges_; }
    const std::vector<int>& endpoints(int e) const { return endpoints_[e]; }
    const std::vector<std::vector<int>>& endpoint_map() const { return endpoints_; }

    int vertex_index(std::string_view l) const { return detail::index_of(vertices_, l); }
    int edge_index(std::string_view l) const { return detail::index_of(edges_, l); }

    /// Multigraph predicate: every endpoint set has cardinality 1 or 2.
    bool is_multigraph() const {
        for (const auto& eps : endpoints_)
            if (eps.empty() || eps.size() > 2) return false;
        return true;
    }

    friend bool operator==(const SetSystemHypergraph&, const SetSystemHypergraph&) = default;

private:
    std::vector<std::string> vertices_, edges_;
    std::vector<std::vector<int>> endpoints_;
};

/// Incidence hypergraph: vertices, edges, and a separate incidence set,
/// each incidence attached to one vertex (port) and one edge (attachment).
class IncidenceHypergraph {
public:
    IncidenceHypergraph() = default;

    static IncidenceHypergraph make(
        std::vector<std::string> vertices, std::vector<std::string> edges,
        std::vector<std::string> incidences,
        const std::vector<std::pair<std::string, std::string>>& port,
        const std::vector<std::pair<std::string, std::string>>& attachment) {
        IncidenceHypergraph g;
        g.vertices_ = detail::sorted_unique(std::move(vertices), "vertex");
        g.edges_ = detail::sorted_unique(std::move(edges), "edge");
        g.incidences_ = detail::sorted_unique(std::move(incidences), "incidence");
        g.port_.assign(g.incidences_.size(), -1);
        g.attachment_.assign(g.incidences_.size(), -1);
        for (const auto& [i, v] : port) {
            int ii = detail::require_index(g.incidences_, i, "incidence");
            if (g.port_[ii] != -1) throw std::invalid_argument("port given twice for " + i);
            g.port_[ii] = detail::require_index(g.vertices_, v, "vertex");
        }
        for (const auto& [i, e] : attachment) {
            int ii = detail::require_index(g.incidences_, i, "incidence");
            if (g.attachment_[ii] != -1)
                throw std::invalid_argument("attachment given twice for " + i);
            g.attachment_[ii] = detail::require_index(g.edges_, e, "edge");
        }
        for (size_t i = 0; i < g.incidences_.size(); ++i) {
            if (g.port_[i] == -1)
                throw std::invalid_argument("port missing for incidence " + g.incidences_[i]);
            if (g.attachment_[i] == -1)
                throw std::invalid_argument("attachment missing for incidence " + g.incidences_[i]);
        }
        return g;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::string>& edges() const { return edges_; }
    const std::vector<std::string>& incidences() const { return incidences_; }
    int port(int i) const { return port_[i]; }
    int attachment(int i) const { return attachment_[i]; }
    const std::vector<int>& port_map() const { return port_; }
    const std::vector<int>& attachment_map() const { return attachment_; }

    int vertex_index(std::string_view l) const { return detail::index_of(vertices_, l); }
    int edge_index(std::string_view l) const { return detail::index_of(edges_, l); }
    int incidence_index(std::string_view l) const { return detail::index_of(incidences_, l); }

    friend bool operator==(const IncidenceHypergraph&, const IncidenceHypergraph&) = default;

private:
    std::vector<std::string> vertices_, edges_, incidences_;
    std::vector<int> port_, attachment_;
};

/// A +-1/-1 labeling of the incidences of one incidence hypergraph.
struct Orientation {
    std::vector<int> sign;  // aligned with the carrier's incidence order

    static Orientation all_plus(const IncidenceHypergraph& g) {
        return {std::vector<int>(g.incidences().size(), +1)};
    }
    static Orientation all_minus(const IncidenceHypergraph& g) {
        return {std::vector<int>(g.incidences().size(), -1)};
    }
};

inline ValidationResult validate(const Quiver& q) {
    const int nv = static_cast<int>(q.vertices().size());
    for (size_t e = 0; e < q.edges().size(); ++e) {
        if (q.source(static_cast<int>(e)) < 0 || q.source(static_cast<int>(e)) >= nv)
            return ValidationResult::fail("source out of range for edge " + q.edges()[e]);
        if (q.target(static_cast<int>(e)) < 0 || q.target(static_cast<int>(e)) >= nv)
            return ValidationResult::fail("target out of range for edge " + q.edges()[e]);
    }
    return ValidationResult::pass();
}

inline ValidationResult validate(const SetSystemHypergraph& h) {
    const int nv = static_cast<int>(h.vertices().size());
    for (size_t e = 0; e < h.edges().size(); ++e)
        for (int v : h.endpoints(static_cast<int>(e)))
            if (v < 0 || v >= nv)
                return ValidationResult::fail("endpoint out of range for edge " + h.edges()[e]);
    return ValidationResult::pass();
}

inline ValidationResult validate(const IncidenceHypergraph& g) {
    const int nv = static_cast<int>(g.vertices().size());
    const int ne = static_cast<int>(g.edges().size());
    for (size_t i = 0; i < g.incidences().size(); ++i) {
        if (g.port(static_cast<int>(i)) < 0 || g.port(static_cast<int>(i)) >= nv)
            return ValidationResult::fail("port out of range for incidence " + g.incidences()[i]);
        if (g.attachment(static_cast<int>(i)) < 0 || g.attachment(static_cast<int>(i)) >= ne)
            return ValidationResult::fail("attachment out of range for incidence " +
                                          g.incidences()[i]);
    }
    return ValidationResult::pass();
}

inline ValidationResult validate(const Orientation& o, const IncidenceHypergraph& g) {
    if (o.sign.size() != g.incidences().size())
        return ValidationResult::fail("orientation not total on incidences");
    for (size_t i = 0; i < o.sign.size(); ++i)
        if (o.sign[i] != 1 && o.sign[i] != -1)
            return ValidationResult::fail("orientation sign must be +1 or -1 at " +
                                          g.incidences()[i]);
    return ValidationResult::pass();
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

namespace detail {

template <class Obj>
std::shared_ptr<const Obj> shared(Obj obj) {
    return std::make_shared<const Obj>(std::move(obj));
}

inline std::vector<int> resolve_map(const std::vector<std::string>& dom,
                                    const std::vector<std::string>& cod,
                                    const std::vector<std::pair<std::string, std::string>>& pairs,
                                    const char* sort_name) {
    std::vector<int> out(dom.size(), -1);
    for (const auto& [a, b] : pairs) {
        int ai = require_index(dom, a, sort_name);
        if (out[ai] != -1) throw std::invalid_argument(std::string("image given twice for ") + a);
        out[ai] = require_index(cod, b, sort_name);
    }
    for (size_t i = 0; i < out.size(); ++i)
        if (out[i] == -1)
            throw std::invalid_argument(std::string("image missing for ") + sort_name + " " +
                                        dom[i]);
    return out;
}

inline bool in_range(const std::vector<int>& map, int bound) {
    for (int x : map)
        if (x < 0 || x >= bound) return false;
    return true;
}

}  // namespace detail

class QuiverMorphism {
public:
    QuiverMorphism() = default;

    static QuiverMorphism unchecked(std::shared_ptr<const Quiver> dom,
                                    std::shared_ptr<const Quiver> cod, std::vector<int> vmap,
                                    std::vector<int> emap) {
        QuiverMorphism m;
        m.dom_ = std::move(dom);
        m.cod_ = std::move(cod);
        m.vmap_ = std::move(vmap);
        m.emap_ = std::move(emap);
        return m;
    }

    static QuiverMorphism make(std::shared_ptr<const Quiver> dom,
                               std::shared_ptr<const Quiver> cod, std::vector<int> vmap,
                               std::vector<int> emap);

    static QuiverMorphism from_labels(
        Quiver dom, Quiver cod, const std::vector<std::pair<std::string, std::string>>& vmap,
        const std::vector<std::pair<std::string, std::string>>& emap) {
        auto d = detail::shared(std::move(dom));
        auto c = detail::shared(std::move(cod));
        auto vm = detail::resolve_map(d->vertices(), c->vertices(), vmap, "vertex");
        auto em = detail::resolve_map(d->edges(), c->edges(), emap, "edge");
        return make(d, c, std::move(vm), std::move(em));
    }

    const Quiver& domain() const { return *dom_; }
    const Quiver& codomain() const { return *cod_; }
    std::shared_ptr<const Quiver> domain_ptr() const { return dom_; }
    std::shared_ptr<const Quiver> codomain_ptr() const { return cod_; }
    const std::vector<int>& vertex_map() const { return vmap_; }
    const std::vector<int>& edge_map() const { return emap_; }

    friend bool operator==(const QuiverMorphism& a, const QuiverMorphism& b) {
        return a.vmap_ == b.vmap_ && a.emap_ == b.emap_ && *a.dom_ == *b.dom_ &&
               *a.cod_ == *b.cod_;
    }

private:
    std::shared_ptr<const Quiver> dom_, cod_;
    std::vector<int> vmap_, emap_;
};

class HypergraphMorphism {
public:
    HypergraphMorphism() = default;

    static HypergraphMorphism unchecked(std::shared_ptr<const SetSystemHypergraph> dom,
                                        std::shared_ptr<const SetSystemHypergraph> cod,
                                        std::vector<int> vmap, std::vector<int> emap) {
        HypergraphMorphism m;
        m.dom_ = std::move(dom);
        m.cod_ = std::move(cod);
        m.vmap_ = std::move(vmap);
        m.emap_ = std::move(emap);
        return m;
    }

    static HypergraphMorphism make(std::shared_ptr<const SetSystemHypergraph> dom,
                                   std::shared_ptr<const SetSystemHypergraph> cod,
                                   std::vector<int> vmap, std::vector<int> emap);

    static HypergraphMorphism from_labels(
        SetSystemHypergraph dom, SetSystemHypergraph cod,
        const std::vector<std::pair<std::string, std::string>>& vmap,
        const std::vector<std::pair<std::string, std::string>>& emap) {
        auto d = detail::shared(std::move(dom));
        auto c = detail::shared(std::move(cod));
        auto vm = detail::resolve_map(d->vertices(), c->vertices(), vmap, "vertex");
        auto em = detail::resolve_map(d->edges(), c->edges(), emap, "edge");
        return make(d, c, std::move(vm), std::move(em));
    }

    const SetSystemHypergraph& domain() const { return *dom_; }
    const SetSystemHypergraph& codomain() const { return *cod_; }
    std::shared_ptr<const SetSystemHypergraph> domain_ptr() const { return dom_; }
    std::shared_ptr<const SetSystemHypergraph> codomain_ptr() const { return cod_; }
    const std::vector<int>& vertex_map() const { return vmap_; }
    const std::vector<int>& edge_map() const { return emap_; }

    friend bool operator==(const HypergraphMorphism& a, const HypergraphMorphism& b) {
        return a.vmap_ == b.vmap_ && a.emap_ == b.emap_ && *a.dom_ == *b.dom_ &&
               *a.cod_ == *b.cod_;
    }

private:
    std::shared_ptr<const SetSystemHypergraph> dom_, cod_;
    std::vector<int> vmap_, emap_;
};

class IncidenceMorphism {
public:
    IncidenceMorphism() = default;

    static IncidenceMorphism unchecked(std::shared_ptr<const IncidenceHypergraph> dom,
                                       std::shared_ptr<const IncidenceHypergraph> cod,
                                       std::vector<int> vmap, std::vector<int> emap,
                                       std::vector<int> imap) {
        IncidenceMorphism m;
        m.dom_ = std::move(dom);
        m.cod_ = std::move(cod);
        m.vmap_ = std::move(vmap);
        m.emap_ = std::move(emap);
        m.imap_ = std::move(imap);
        return m;
    }

    static IncidenceMorphism make(std::shared_ptr<const IncidenceHypergraph> dom,
                                  std::shared_ptr<const IncidenceHypergraph> cod,
                                  std::vector<int> vmap, std::vector<int> emap,
                                  std::vector<int> imap);

    static IncidenceMorphism from_labels(
        IncidenceHypergraph dom, IncidenceHypergraph cod,
        const std::vector<std::pair<std::string, std::string>>& vmap,
        const std::vector<std::pair<std::string, std::string>>& emap,
        const std::vector<std::pair<std::string, std::string>>& imap) {
        auto d = detail::shared(std::move(dom));
        auto c = detail::shared(std::move(cod));
        auto vm = detail::resolve_map(d->vertices(), c->vertices(), vmap, "vertex");
        auto em = detail::resolve_map(d->edges(), c->edges(), emap, "edge");
        auto im = detail::resolve_map(d->incidences(), c->incidences(), imap, "incidence");
        return make(d, c, std::move(vm), std::move(em), std::move(im));
    }

    const IncidenceHypergraph& domain() const { return *dom_; }
    const IncidenceHypergraph& codomain() const { return *cod_; }
    std::shared_ptr<const IncidenceHypergraph> domain_ptr() const { return dom_; }
    std::shared_ptr<const IncidenceHypergraph> codomain_ptr() const { return cod_; }
    const std::vector<int>& vertex_map() const { return vmap_; }
    const std::vector<int>& edge_map() const { return emap_; }
    const std::vector<int>& incidence_map() const { return imap_; }

    friend bool operator==(const IncidenceMorphism& a, const IncidenceMorphism& b) {
        return a.vmap_ == b.vmap_ && a.emap_ == b.emap_ && a.imap_ == b.imap_ &&
               *a.dom_ == *b.dom_ && *a.cod_ == *b.cod_;
    }

private:
    std::shared_ptr<const IncidenceHypergraph> dom_, cod_;
    std::vector<int> vmap_, emap_, imap_;
};

inline ValidationResult validate(const QuiverMorphism& m) {
    const Quiver& d = m.domain();
    const Quiver& c = m.codomain();
    if (m.vertex_map().size() != d.vertices().size() || m.edge_map().size() != d.edges().size())
        return ValidationResult::fail("component map arity mismatch");
    if (!detail::in_range(m.vertex_map(), static_cast<int>(c.vertices().size())) ||
        !detail::in_range(m.edge_map(), static_cast<int>(c.edges().size())))
        return ValidationResult::fail("component map image out of range");
    for (size_t e = 0; e < d.edges().size(); ++e) {
        int fe = m.edge_map()[e];
        if (m.vertex_map()[d.source(static_cast<int>(e))] != c.source(fe))
            return ValidationResult::fail("source not preserved at edge " + d.edges()[e]);
        if (m.vertex_map()[d.target(static_cast<int>(e))] != c.target(fe))
            return ValidationResult::fail("target not preserved at edge " + d.edges()[e]);
    }
    return ValidationResult::pass();
}

// Set-system morphisms use direct-image equality: the image of the
// endpoint set of e equals the endpoint set of the image of e.
inline ValidationResult validate(const HypergraphMorphism& m) {
    const SetSystemHypergraph& d = m.domain();
    const SetSystemHypergraph& c = m.codomain();
    if (m.vertex_map().size() != d.vertices().size() || m.edge_map().size() != d.edges().size())
        return ValidationResult::fail("component map arity mismatch");
    if (!detail::in_range(m.vertex_map(), static_cast<int>(c.vertices().size())) ||
        !detail::in_range(m.edge_map(), static_cast<int>(c.edges().size())))
        return ValidationResult::fail("component map image out of range");
    for (size_t e = 0; e < d.edges().size(); ++e) {
        std::vector<int> image;
        image.reserve(d.endpoints(static_cast<int>(e)).size());
        for (int v : d.endpoints(static_cast<int>(e))) image.push_back(m.vertex_map()[v]);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (image != c.endpoints(m.edge_map()[e]))
            return ValidationResult::fail("direct-image condition violated at edge " +
                                          d.edges()[e]);
    }
    return ValidationResult::pass();
}

inline ValidationResult validate(const IncidenceMorphism& m) {
    const IncidenceHypergraph& d = m.domain();
    const IncidenceHypergraph& c = m.codomain();
    if (m.vertex_map().size() != d.vertices().size() || m.edge_map().size() != d.edges().size() ||
        m.incidence_map().size() != d.incidences().size())
        return ValidationResult::fail("component map arity mismatch");
    if (!detail::in_range(m.vertex_map(), static_cast<int>(c.vertices().size())) ||
        !detail::in_range(m.edge_map(), static_cast<int>(c.edges().size())) ||
        !detail::in_range(m.incidence_map(), static_cast<int>(c.incidences().size())))
        return ValidationResult::fail("component map image out of range");
    for (size_t i = 0; i < d.incidences().size(); ++i) {
        int fi = m.incidence_map()[i];
        if (m.vertex_map()[d.port(static_cast<int>(i))] != c.port(fi))
            return ValidationResult::fail("port not preserved at incidence " + d.incidences()[i]);
        if (m.edge_map()[d.attachment(static_cast<int>(i))] != c.attachment(fi))
            return ValidationResult::fail("attachment not preserved at incidence " +
                                          d.incidences()[i]);
    }
    return ValidationResult::pass();
}

inline QuiverMorphism QuiverMorphism::make(std::shared_ptr<const Quiver> dom,
                                           std::shared_ptr<const Quiver> cod,
                                           std::vector<int> vmap, std::vector<int> emap) {
    auto m = unchecked(std::move(dom), std::move(cod), std::move(vmap), std::move(emap));
    if (auto r = validate(m); !r) throw std::invalid_argument("invalid quiver morphism: " + r.message);
    return m;
}

inline HypergraphMorphism HypergraphMorphism::make(std::shared_ptr<const SetSystemHypergraph> dom,
                                                   std::shared_ptr<const SetSystemHypergraph> cod,
                                                   std::vector<int> vmap, std::vector<int> emap) {
    auto m = unchecked(std::move(dom), std::move(cod), std::move(vmap), std::move(emap));
    if (auto r = validate(m); !r)
        throw std::invalid_argument("invalid hypergraph morphism: " + r.message);
    return m;
}

inline IncidenceMorphism IncidenceMorphism::make(std::shared_ptr<const IncidenceHypergraph> dom,
                                                 std::shared_ptr<const IncidenceHypergraph> cod,
                                                 std::vector<int> vmap, std::vector<int> emap,
                                                 std::vector<int> imap) {
    auto m = unchecked(std::move(dom), std::move(cod), std::move(vmap), std::move(emap),
                       std::move(imap));
    if (auto r = validate(m); !r)
        throw std::invalid_argument("invalid incidence morphism: " + r.message);
    return m;
}

// ---------------------------------------------------------------------------
// Identity and composition
// ---------------------------------------------------------------------------

namespace detail {
inline std::vector<int> iota_map(size_t n) {
    std::vector<int> v(n);
    for (size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i);
    return v;
}
inline std::vector<int> compose_maps(const std::vector<int>& outer, const std::vector<int>& inner) {
    std::vector<int> out(inner.size());
    for (size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
    return out;
}
}  // namespace detail

inline QuiverMorphism identity(std::shared_ptr<const Quiver> q) {
    auto v = detail::iota_map(q->vertices().size());
    auto e = detail::iota_map(q->edges().size());
    return QuiverMorphism::unchecked(q, q, std::move(v), std::move(e));
}
inline QuiverMorphism identity(const Quiver& q) { return identity(detail::shared(q)); }

inline HypergraphMorphism identity(std::shared_ptr<const SetSystemHypergraph> h) {
    auto v = detail::iota_map(h->vertices().size());
    auto e = detail::iota_map(h->edges().size());
    return HypergraphMorphism::unchecked(h, h, std::move(v), std::move(e));
}
inline HypergraphMorphism identity(const SetSystemHypergraph& h) {
    return identity(detail::shared(h));
}

inline IncidenceMorphism identity(std::shared_ptr<const IncidenceHypergraph> g) {
    auto v = detail::iota_map(g->vertices().size());
    auto e = detail::iota_map(g->edges().size());
    auto i = detail::iota_map(g->incidences().size());
    return IncidenceMorphism::unchecked(g, g, std::move(v), std::move(e), std::move(i));
}
inline IncidenceMorphism identity(const IncidenceHypergraph& g) {
    return identity(detail::shared(g));
}

/// g after f. The middle objects must agree by value.
inline QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
    if (!(f.codomain() == g.domain()))
        throw std::invalid_argument("compose: codomain/domain mismatch");
    return QuiverMorphism::unchecked(f.domain_ptr(), g.codomain_ptr(),
                                     detail::compose_maps(g.vertex_map(), f.vertex_map()),
                                     detail::compose_maps(g.edge_map(), f.edge_map()));
}

inline HypergraphMorphism compose(const HypergraphMorphism& g, const HypergraphMorphism& f) {
    if (!(f.codomain() == g.domain()))
        throw std::invalid_argument("compose: codomain/domain mismatch");
    return HypergraphMorphism::unchecked(f.domain_ptr(), g.codomain_ptr(),
                                         detail::compose_maps(g.vertex_map(), f.vertex_map()),
                                         detail::compose_maps(g.edge_map(), f.edge_map()));
}

inline IncidenceMorphism compose(const IncidenceMorphism& g, const IncidenceMorphism& f) {
    if (!(f.codomain() == g.domain()))
        throw std::invalid_argument("compose: codomain/domain mismatch");
    return IncidenceMorphism::unchecked(f.domain_ptr(), g.codomain_ptr(),
                                        detail::compose_maps(g.vertex_map(), f.vertex_map()),
                                        detail::compose_maps(g.edge_map(), f.edge_map()),
                                        detail::compose_maps(g.incidence_map(), f.incidence_map()));
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Single isolated vertex in the quiver category.
inline Quiver unit_vertex_q() { return Quiver::make({"v0"}, {}, {}, {}); }

/// Single disjoint arc: two vertices with one edge from v0 to v1.
inline Quiver unit_edge_q() {
    return Quiver::make({"v0", "v1"}, {"e0"}, {{"e0", "v0"}}, {{"e0", "v1"}});
}

inline SetSystemHypergraph unit_vertex_h() { return SetSystemHypergraph::make({"v0"}, {}, {}); }

inline IncidenceHypergraph unit_vertex_r() {
    return IncidenceHypergraph::make({"v0"}, {}, {}, {}, {});
}

/// Loose edge: one edge, no vertices, no incidences.
inline IncidenceHypergraph unit_edge_r() {
    return IncidenceHypergraph::make({}, {"e0"}, {}, {}, {});
}

/// Single-incidence 1-edge: the terminal object of the incidence category.
inline IncidenceHypergraph unit_incidence_r() {
    return IncidenceHypergraph::make({"v0"}, {"e0"}, {"i0"}, {{"i0", "v0"}}, {{"i0", "e0"}});
}

inline Quiver path_q(int n) {
    if (n < 0) throw std::invalid_argument("path length must be nonnegative");
    std::vector<std::string> vs, es;
    std::vector<std::pair<std::string, std::string>> src, tgt;
    for (int i = 0; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        es.push_back("e" + std::to_string(i));
        src.push_back({es.back(), "v" + std::to_string(i)});
        tgt.push_back({es.back(), "v" + std::to_string(i + 1)});
    }
    return Quiver::make(std::move(vs), std::move(es), src, tgt);
}

inline Quiver cycle_q(int n) {
    if (n <= 0) throw std::invalid_argument("cycle length must be positive");
    std::vector<std::string> vs, es;
    std::vector<std::pair<std::string, std::string>> src, tgt;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        es.push_back("e" + std::to_string(i));
        src.push_back({es.back(), "v" + std::to_string(i)});
        tgt.push_back({es.back(), "v" + std::to_string((i + 1) % n)});
    }
    return Quiver::make(std::move(vs), std::move(es), src, tgt);
}

inline SetSystemHypergraph path_h(int n) {
    if (n < 0) throw std::invalid_argument("path length must be nonnegative");
    std::vector<std::string> vs, es;
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (int i = 0; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        es.push_back("e" + std::to_string(i));
        eps.push_back({es.back(), {"v" + std::to_string(i), "v" + std::to_string(i + 1)}});
    }
    return SetSystemHypergraph::make(std::move(vs), std::move(es), eps);
}

/// Cycle multigraph; n = 2 gives two parallel edges, n = 1 a loop.
inline SetSystemHypergraph cycle_h(int n) {
    if (n <= 0) throw std::invalid_argument("cycle length must be positive");
    std::vector<std::string> vs, es;
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i) {
        es.push_back("e" + std::to_string(i));
        eps.push_back({es.back(), {"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)}});
    }
    return SetSystemHypergraph::make(std::move(vs), std::move(es), eps);
}

/// Single edge with n endpoints.
inline SetSystemHypergraph n_edge_h(int n) {
    if (n < 0) throw std::invalid_argument("edge size must be nonnegative");
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    return SetSystemHypergraph::make(vs, {"e0"}, {{"e0", vs}});
}

/// Incidence path with k incidences: the alternating sequence
/// a0, i0, a1, i1, ..., a_k where even positions are vertices and odd
/// positions are edges. k = 1 is the single-incidence 1-edge, k = 2 the
/// path of length one.
inline IncidenceHypergraph path_r(int k) {
    if (k < 0) throw std::invalid_argument("path length must be nonnegative");
    std::vector<std::string> vs, es, is;
    std::vector<std::pair<std::string, std::string>> port, att;
    for (int j = 0; j <= k; ++j) {
        if (j % 2 == 0)
            vs.push_back("v" + std::to_string(j / 2));
        else
            es.push_back("e" + std::to_string(j / 2));
    }
    for (int j = 0; j < k; ++j) {
        // incidence i{j} joins a_j and a_{j+1}; one of them is the vertex
        std::string inc = "i" + std::to_string(j);
        is.push_back(inc);
        int lo = j, hi = j + 1;
        int vpos = (lo % 2 == 0) ? lo : hi;
        int epos = (lo % 2 == 0) ? hi : lo;
        port.push_back({inc, "v" + std::to_string(vpos / 2)});
        att.push_back({inc, "e" + std::to_string(epos / 2)});
    }
    return IncidenceHypergraph::make(std::move(vs), std::move(es), std::move(is), port, att);
}

/// Incidence cycle with k vertices, k edges, and 2k incidences.
inline IncidenceHypergraph cycle_r(int k) {
    if (k <= 0) throw std::invalid_argument("cycle length must be positive");
    std::vector<std::string> vs, es, is;
    std::vector<std::pair<std::string, std::string>> port, att;
    for (int j = 0; j < k; ++j) {
        vs.push_back("v" + std::to_string(j));
        es.push_back("e" + std::to_string(j));
    }
    for (int j = 0; j < k; ++j) {
        std::string a = "i" + std::to_string(2 * j);
        std::string b = "i" + std::to_string(2 * j + 1);
        is.push_back(a);
        is.push_back(b);
        port.push_back({a, "v" + std::to_string(j)});
        att.push_back({a, "e" + std::to_string(j)});
        port.push_back({b, "v" + std::to_string((j + 1) % k)});
        att.push_back({b, "e" + std::to_string(j)});
    }
    return IncidenceHypergraph::make(std::move(vs), std::move(es), std::move(is), port, att);
}

/// Tail label of path_r(k).
inline std::string path_r_tail(int) { return "v0"; }

/// Head label of path_r(k): a vertex for even k, an edge for odd k.
inline std::string path_r_head(int k) {
    return k % 2 == 0 ? "v" + std::to_string(k / 2) : "e" + std::to_string((k - 1) / 2);
}

// ---------------------------------------------------------------------------
// Path-map classification
// ---------------------------------------------------------------------------

enum class PathMapClass { backstep, loop, adjacency };

/// Classifies a map out of the length-one incidence path: a backstep is
/// not incidence-monic; an adjacency is incidence-monic; a loop is the
/// incidence-monic, non-vertex-monic sub-case.
inline PathMapClass classify_path_map(const IncidenceMorphism& f) {
    static const IncidenceHypergraph p1 = path_r(2);
    if (!(f.domain() == p1)) throw std::invalid_argument("classify_path_map: domain is not the length-one path");
    const auto& im = f.incidence_map();
    bool incidence_monic = im[0] != im[1];
    if (!incidence_monic) return PathMapClass::backstep;
    const auto& vm = f.vertex_map();
    bool vertex_monic = vm[0] != vm[1];
    return vertex_monic ? PathMapClass::adjacency : PathMapClass::loop;
}

// ---------------------------------------------------------------------------
// Canonical serializations
// ---------------------------------------------------------------------------

namespace detail {
inline std::string image_csv(const std::vector<int>& map, const std::vector<std::string>& cod) {
    std::string out;
    for (size_t i = 0; i < map.size(); ++i) {
        if (i) out += ',';
        out += cod[map[i]];
    }
    return out;
}
}  // namespace detail

/// Compact label for a morphism: the codomain images of the sorted domain
/// elements, one block per sort. Used to name exponential carrier elements.
inline std::string image_label(const QuiverMorphism& m) {
    return "[" + detail::image_csv(m.vertex_map(), m.codomain().vertices()) + "|" +
           detail::image_csv(m.edge_map(), m.codomain().edges()) + "]";
}

inline std::string image_label(const HypergraphMorphism& m) {
    return "[" + detail::image_csv(m.vertex_map(), m.codomain().vertices()) + "|" +
           detail::image_csv(m.edge_map(), m.codomain().edges()) + "]";
}

inline std::string image_label(const IncidenceMorphism& m) {
    return "[" + detail::image_csv(m.vertex_map(), m.codomain().vertices()) + "|" +
           detail::image_csv(m.edge_map(), m.codomain().edges()) + "|" +
           detail::image_csv(m.incidence_map(), m.codomain().incidences()) + "]";
}

/// Accumulates pass/fail lines for the verification suites and reports.
struct CheckReport {
    bool ok = true;
    std::vector<std::string> lines;

    void check(bool cond, const std::string& what) {
        lines.push_back((cond ? "ok: " : "FAIL: ") + what);
        ok = ok && cond;
    }
    void note(const std::string& what) { lines.push_back("note: " + what); }
    void merge(const CheckReport& other) {
        ok = ok && other.ok;
        lines.insert(lines.end(), other.lines.begin(), other.lines.end());
    }
    std::string text() const {
        std::string out;
        for (const auto& l : lines) {
            out += l;
            out += '\n';
        }
        return out;
    }
};

/// Lexicographic order on component maps; assumes equal domain/codomain.
inline bool canonical_less(const QuiverMorphism& a, const QuiverMorphism& b) {
    if (a.vertex_map() != b.vertex_map()) return a.vertex_map() < b.vertex_map();
    return a.edge_map() < b.edge_map();
}
inline bool canonical_less(const HypergraphMorphism& a, const HypergraphMorphism& b) {
    if (a.vertex_map() != b.vertex_map()) return a.vertex_map() < b.vertex_map();
    return a.edge_map() < b.edge_map();
}
inline bool canonical_less(const IncidenceMorphism& a, const IncidenceMorphism& b) {
    if (a.vertex_map() != b.vertex_map()) return a.vertex_map() < b.vertex_map();
    if (a.edge_map() != b.edge_map()) return a.edge_map() < b.edge_map();
    return a.incidence_map() < b.incidence_map();
}

}  // namespace hyperbox
