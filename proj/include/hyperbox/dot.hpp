#pragma once

// Graphviz DOT export. Incidence hypergraphs render in the bipartite
// style: solid circles for vertices, open circles for edges, one plain
// line per incidence. Output is fully determined by the object, so DOT
// files serve as golden artifacts.

#include "json_io.hpp"

namespace hyperbox {

namespace detail {
inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}
}  // namespace detail

inline std::string to_dot(const Quiver& q, const std::string& name = "quiver") {
    std::string out = "digraph " + detail::dot_quote(name) + " {\n";
    out += "  node [shape=circle];\n";
    for (const auto& v : q.vertices()) out += "  " + detail::dot_quote("v:" + v) + " [label=" + detail::dot_quote(v) + "];\n";
    for (size_t e = 0; e < q.edges().size(); ++e) {
        out += "  " + detail::dot_quote("v:" + q.vertices()[q.source(static_cast<int>(e))]) +
               " -> " + detail::dot_quote("v:" + q.vertices()[q.target(static_cast<int>(e))]) +
               " [label=" + detail::dot_quote(q.edges()[e]) + "];\n";
    }
    out += "}\n";
    return out;
}

inline std::string to_dot(const SetSystemHypergraph& h, const std::string& name = "hypergraph") {
    std::string out = "graph " + detail::dot_quote(name) + " {\n";
    out += "  node [shape=circle];\n";
    for (const auto& v : h.vertices())
        out += "  " + detail::dot_quote("v:" + v) + " [label=" + detail::dot_quote(v) +
               ", style=filled, fillcolor=black, fontcolor=white];\n";
    for (const auto& e : h.edges())
        out += "  " + detail::dot_quote("e:" + e) + " [label=" + detail::dot_quote(e) + "];\n";
    for (size_t e = 0; e < h.edges().size(); ++e)
        for (int v : h.endpoints(static_cast<int>(e)))
            out += "  " + detail::dot_quote("v:" + h.vertices()[v]) + " -- " +
                   detail::dot_quote("e:" + h.edges()[e]) + ";\n";
    out += "}\n";
    return out;
}

inline std::string to_dot(const IncidenceHypergraph& g, const std::string& name = "incidence") {
    std::string out = "graph " + detail::dot_quote(name) + " {\n";
    out += "  node [shape=circle];\n";
    for (const auto& v : g.vertices())
        out += "  " + detail::dot_quote("v:" + v) + " [label=" + detail::dot_quote(v) +
               ", style=filled, fillcolor=black, fontcolor=white];\n";
    for (const auto& e : g.edges())
        out += "  " + detail::dot_quote("e:" + e) + " [label=" + detail::dot_quote(e) + "];\n";
    for (size_t i = 0; i < g.incidences().size(); ++i)
        out += "  " + detail::dot_quote("v:" + g.vertices()[g.port(static_cast<int>(i))]) + " -- " +
               detail::dot_quote("e:" + g.edges()[g.attachment(static_cast<int>(i))]) +
               " [label=" + detail::dot_quote(g.incidences()[i]) + "];\n";
    out += "}\n";
    return out;
}

inline std::string to_dot(const GraphDocument& d, const std::string& name) {
    switch (d.category) {
        case Category::quiver: return to_dot(d.quiver(), name);
        case Category::hypergraph: return to_dot(d.hypergraph(), name);
        default: return to_dot(d.incidence(), name);
    }
}

}  // namespace hyperbox
