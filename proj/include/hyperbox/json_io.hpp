#pragma once

// JSON document format, schema "hyperbox/1". Canonical documents carry
// sorted label arrays and sorted structure-map pairs; serialize after
// parse reproduces the canonical form byte for byte. Unknown fields are
// rejected so that typos fail loudly.

#include <fstream>
#include <variant>

#include "core.hpp"
#include "json.hpp"

namespace hyperbox {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Category { quiver, hypergraph, incidence };

inline const char* category_name(Category c) {
    switch (c) {
        case Category::quiver: return "quiver";
        case Category::hypergraph: return "hypergraph";
        default: return "incidence";
    }
}

struct GraphDocument {
    Category category;
    std::variant<Quiver, SetSystemHypergraph, IncidenceHypergraph> object;
    std::optional<Orientation> orientation;

    const Quiver& quiver() const { return std::get<Quiver>(object); }
    const SetSystemHypergraph& hypergraph() const { return std::get<SetSystemHypergraph>(object); }
    const IncidenceHypergraph& incidence() const { return std::get<IncidenceHypergraph>(object); }
};

namespace detail {

inline void require_keys(const nlohmann::json& j, const std::vector<std::string>& required,
                         const std::vector<std::string>& optional) {
    for (const auto& k : required)
        if (!j.contains(k)) throw InputError("missing field: " + k);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& k = it.key();
        bool known = std::find(required.begin(), required.end(), k) != required.end() ||
                     std::find(optional.begin(), optional.end(), k) != optional.end();
        if (!known) throw InputError("unknown field: " + k);
    }
}

inline std::vector<std::string> string_array(const nlohmann::json& j, const char* field) {
    if (!j.is_array()) throw InputError(std::string(field) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) {
        if (!x.is_string()) throw InputError(std::string(field) + " must contain only strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

inline std::vector<std::pair<std::string, std::string>> pair_array(const nlohmann::json& j,
                                                                   const char* field) {
    if (!j.is_array()) throw InputError(std::string(field) + " must be an array of label pairs");
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& x : j) {
        if (!x.is_array() || x.size() != 2 || !x[0].is_string() || !x[1].is_string())
            throw InputError(std::string(field) + " entries must be [label, label] pairs");
        out.push_back({x[0].get<std::string>(), x[1].get<std::string>()});
    }
    return out;
}

}  // namespace detail

inline GraphDocument parse_document(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("document must be a JSON object");
    if (!j.contains("format") || !j["format"].is_string() ||
        j["format"].get<std::string>() != "hyperbox/1")
        throw InputError("unsupported document format; expected \"hyperbox/1\"");
    if (!j.contains("category") || !j["category"].is_string())
        throw InputError("missing category");
    std::string cat = j["category"].get<std::string>();
    try {
        if (cat == "quiver") {
            detail::require_keys(j, {"format", "category", "vertices", "edges", "source", "target"},
                                 {});
            auto q = Quiver::make(detail::string_array(j["vertices"], "vertices"),
                                  detail::string_array(j["edges"], "edges"),
                                  detail::pair_array(j["source"], "source"),
                                  detail::pair_array(j["target"], "target"));
            return {Category::quiver, std::move(q), std::nullopt};
        }
        if (cat == "hypergraph") {
            detail::require_keys(j, {"format", "category", "vertices", "edges", "endpoints"}, {});
            if (!j["endpoints"].is_array()) throw InputError("endpoints must be an array");
            std::vector<std::pair<std::string, std::vector<std::string>>> eps;
            for (const auto& x : j["endpoints"]) {
                if (!x.is_array() || x.size() != 2 || !x[0].is_string() || !x[1].is_array())
                    throw InputError("endpoints entries must be [edge, [vertices]] pairs");
                eps.push_back({x[0].get<std::string>(), detail::string_array(x[1], "endpoints")});
            }
            auto h = SetSystemHypergraph::make(detail::string_array(j["vertices"], "vertices"),
                                               detail::string_array(j["edges"], "edges"), eps);
            return {Category::hypergraph, std::move(h), std::nullopt};
        }
        if (cat == "incidence") {
            detail::require_keys(
                j, {"format", "category", "vertices", "edges", "incidences", "port", "attachment"},
                {"orientation"});
            auto g = IncidenceHypergraph::make(detail::string_array(j["vertices"], "vertices"),
                                               detail::string_array(j["edges"], "edges"),
                                               detail::string_array(j["incidences"], "incidences"),
                                               detail::pair_array(j["port"], "port"),
                                               detail::pair_array(j["attachment"], "attachment"));
            std::optional<Orientation> orient;
            if (j.contains("orientation")) {
                if (!j["orientation"].is_array())
                    throw InputError("orientation must be an array of [incidence, sign] pairs");
                Orientation o;
                o.sign.assign(g.incidences().size(), 0);
                for (const auto& x : j["orientation"]) {
                    if (!x.is_array() || x.size() != 2 || !x[0].is_string() ||
                        !x[1].is_number_integer())
                        throw InputError("orientation entries must be [incidence, +1|-1] pairs");
                    int idx = g.incidence_index(x[0].get<std::string>());
                    if (idx < 0)
                        throw InputError("orientation names unknown incidence " +
                                         x[0].get<std::string>());
                    int s = x[1].get<int>();
                    if (s != 1 && s != -1) throw InputError("orientation signs must be +1 or -1");
                    o.sign[idx] = s;
                }
                for (size_t i = 0; i < o.sign.size(); ++i)
                    if (o.sign[i] == 0)
                        throw InputError("orientation missing incidence " + g.incidences()[i]);
                orient = std::move(o);
            }
            return {Category::incidence, std::move(g), std::move(orient)};
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("unknown category: " + cat);
}

inline nlohmann::json to_json(const Quiver& q) {
    nlohmann::json j;
    j["format"] = "hyperbox/1";
    j["category"] = "quiver";
    j["vertices"] = q.vertices();
    j["edges"] = q.edges();
    auto& src = j["source"] = nlohmann::json::array();
    auto& tgt = j["target"] = nlohmann::json::array();
    for (size_t e = 0; e < q.edges().size(); ++e) {
        src.push_back({q.edges()[e], q.vertices()[q.source(static_cast<int>(e))]});
        tgt.push_back({q.edges()[e], q.vertices()[q.target(static_cast<int>(e))]});
    }
    return j;
}

inline nlohmann::json to_json(const SetSystemHypergraph& h) {
    nlohmann::json j;
    j["format"] = "hyperbox/1";
    j["category"] = "hypergraph";
    j["vertices"] = h.vertices();
    j["edges"] = h.edges();
    auto& eps = j["endpoints"] = nlohmann::json::array();
    for (size_t e = 0; e < h.edges().size(); ++e) {
        std::vector<std::string> ends;
        for (int v : h.endpoints(static_cast<int>(e))) ends.push_back(h.vertices()[v]);
        eps.push_back({h.edges()[e], ends});
    }
    return j;
}

inline nlohmann::json to_json(const IncidenceHypergraph& g,
                              const Orientation* orientation = nullptr) {
    nlohmann::json j;
    j["format"] = "hyperbox/1";
    j["category"] = "incidence";
    j["vertices"] = g.vertices();
    j["edges"] = g.edges();
    j["incidences"] = g.incidences();
    auto& port = j["port"] = nlohmann::json::array();
    auto& att = j["attachment"] = nlohmann::json::array();
    for (size_t i = 0; i < g.incidences().size(); ++i) {
        port.push_back({g.incidences()[i], g.vertices()[g.port(static_cast<int>(i))]});
        att.push_back({g.incidences()[i], g.edges()[g.attachment(static_cast<int>(i))]});
    }
    if (orientation) {
        auto& o = j["orientation"] = nlohmann::json::array();
        for (size_t i = 0; i < g.incidences().size(); ++i)
            o.push_back({g.incidences()[i], orientation->sign[i]});
    }
    return j;
}

inline nlohmann::json to_json(const GraphDocument& d) {
    switch (d.category) {
        case Category::quiver: return to_json(d.quiver());
        case Category::hypergraph: return to_json(d.hypergraph());
        default:
            return to_json(d.incidence(), d.orientation ? &*d.orientation : nullptr);
    }
}

inline std::string dump_document(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline GraphDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    try {
        return parse_document(j);
    } catch (InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace hyperbox
