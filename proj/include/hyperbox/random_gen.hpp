#pragma once

// Seeded random objects for the property suites. Draws go through
// mt19937_64 with plain modulo so that a fixed seed produces the same
// corpus on every platform.

#include <random>

#include "core.hpp"

namespace hyperbox {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int below(int n) { return n > 0 ? static_cast<int>(engine_() % static_cast<std::uint64_t>(n)) : 0; }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin() { return (engine_() & 1) != 0; }

private:
    std::mt19937_64 engine_;
};

namespace gen {

inline std::vector<std::string> labels(const char* prefix, int n) {
    std::vector<std::string> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline IncidenceHypergraph incidence(Rng& rng, int max_v, int max_e, int max_i,
                                     int min_v = 0, int min_e = 0) {
    int nv = rng.between(min_v, max_v);
    int ne = rng.between(min_e, max_e);
    int ni = (nv > 0 && ne > 0) ? rng.below(max_i + 1) : 0;
    auto vs = labels("v", nv);
    auto es = labels("e", ne);
    auto is = labels("i", ni);
    std::vector<std::pair<std::string, std::string>> port, att;
    for (int i = 0; i < ni; ++i) {
        port.push_back({is[i], vs[rng.below(nv)]});
        att.push_back({is[i], es[rng.below(ne)]});
    }
    return IncidenceHypergraph::make(vs, es, is, port, att);
}

inline Quiver quiver(Rng& rng, int max_v, int max_e) {
    int nv = rng.below(max_v + 1);
    int ne = nv > 0 ? rng.below(max_e + 1) : 0;
    auto vs = labels("v", nv);
    auto es = labels("e", ne);
    std::vector<std::pair<std::string, std::string>> src, tgt;
    for (int e = 0; e < ne; ++e) {
        src.push_back({es[e], vs[rng.below(nv)]});
        tgt.push_back({es[e], vs[rng.below(nv)]});
    }
    return Quiver::make(vs, es, src, tgt);
}

inline SetSystemHypergraph hypergraph(Rng& rng, int max_v, int max_e, int max_arity) {
    int nv = rng.below(max_v + 1);
    int ne = rng.below(max_e + 1);
    auto vs = labels("v", nv);
    auto es = labels("e", ne);
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (int e = 0; e < ne; ++e) {
        int arity = nv > 0 ? rng.below(std::min(max_arity, nv) + 1) : 0;
        std::vector<std::string> ends;
        for (int a = 0; a < arity; ++a) ends.push_back(vs[rng.below(nv)]);
        eps.push_back({es[e], std::move(ends)});
    }
    return SetSystemHypergraph::make(vs, es, eps);
}

inline SetSystemHypergraph multigraph(Rng& rng, int max_v, int max_e) {
    int nv = rng.between(0, max_v);
    int ne = nv > 0 ? rng.below(max_e + 1) : 0;
    auto vs = labels("v", nv);
    auto es = labels("e", ne);
    std::vector<std::pair<std::string, std::vector<std::string>>> eps;
    for (int e = 0; e < ne; ++e) {
        std::vector<std::string> ends = {vs[rng.below(nv)]};
        if (rng.coin()) {
            std::string other = vs[rng.below(nv)];
            if (other != ends[0]) ends.push_back(other);
        }
        eps.push_back({es[e], std::move(ends)});
    }
    return SetSystemHypergraph::make(vs, es, eps);
}

inline Orientation orientation(Rng& rng, const IncidenceHypergraph& g) {
    Orientation o;
    o.sign.resize(g.incidences().size());
    for (auto& s : o.sign) s = rng.coin() ? 1 : -1;
    return o;
}

}  // namespace gen
}  // namespace hyperbox
