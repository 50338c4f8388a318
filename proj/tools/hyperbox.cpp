// Command-line front end: parse and serialize objects, run products,
// exponentials, functors, hom searches, matrices, verification suites,
// and DOT export.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hyperbox/hyperbox.hpp"

namespace {

using namespace hyperbox;

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
}

GraphDocument load(const std::string& path) { return load_document(path); }

const Quiver& as_quiver(const GraphDocument& d, const std::string& path) {
    if (d.category != Category::quiver) throw InputError(path + ": expected a quiver document");
    return d.quiver();
}
const SetSystemHypergraph& as_hypergraph(const GraphDocument& d, const std::string& path) {
    if (d.category != Category::hypergraph)
        throw InputError(path + ": expected a hypergraph document");
    return d.hypergraph();
}
const SetSystemHypergraph& as_multigraph(const GraphDocument& d, const std::string& path) {
    const auto& h = as_hypergraph(d, path);
    if (!h.is_multigraph()) throw InputError(path + ": expected a multigraph");
    return h;
}
const IncidenceHypergraph& as_incidence(const GraphDocument& d, const std::string& path) {
    if (d.category != Category::incidence)
        throw InputError(path + ": expected an incidence document");
    return d.incidence();
}

std::string stem_of(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

// Anchor syntax: "x=y", optionally prefixed "v!x=y" / "e!x=y" / "i!x=y"
// when a label exists in more than one sort.
void add_anchor(AnchorConstraint& anchors, const GraphDocument& dom, const std::string& text) {
    auto eq = text.find('=');
    if (eq == std::string::npos) throw InputError("anchor must look like ELEMENT=IMAGE: " + text);
    std::string lhs = text.substr(0, eq), rhs = text.substr(eq + 1);
    char forced = 0;
    if (lhs.size() > 2 && lhs[1] == '!' && (lhs[0] == 'v' || lhs[0] == 'e' || lhs[0] == 'i')) {
        forced = lhs[0];
        lhs = lhs.substr(2);
    }
    bool in_v = false, in_e = false, in_i = false;
    switch (dom.category) {
        case Category::quiver:
            in_v = dom.quiver().vertex_index(lhs) >= 0;
            in_e = dom.quiver().edge_index(lhs) >= 0;
            break;
        case Category::hypergraph:
            in_v = dom.hypergraph().vertex_index(lhs) >= 0;
            in_e = dom.hypergraph().edge_index(lhs) >= 0;
            break;
        case Category::incidence:
            in_v = dom.incidence().vertex_index(lhs) >= 0;
            in_e = dom.incidence().edge_index(lhs) >= 0;
            in_i = dom.incidence().incidence_index(lhs) >= 0;
            break;
    }
    if (forced) {
        in_v = in_v && forced == 'v';
        in_e = in_e && forced == 'e';
        in_i = in_i && forced == 'i';
    }
    int hits = int(in_v) + int(in_e) + int(in_i);
    if (hits == 0) throw InputError("anchor names unknown element: " + lhs);
    if (hits > 1)
        throw InputError("anchor element " + lhs +
                         " is ambiguous; prefix with v!, e!, or i! to pick the sort");
    if (in_v)
        anchors.vertex.push_back({lhs, rhs});
    else if (in_e)
        anchors.edge.push_back({lhs, rhs});
    else
        anchors.incidence.push_back({lhs, rhs});
}

Orientation orientation_from_flag(const IncidenceHypergraph& g, const std::string& flag,
                                  const std::optional<Orientation>& embedded) {
    if (flag == "all-plus") return Orientation::all_plus(g);
    if (flag == "all-minus") return Orientation::all_minus(g);
    if (flag.empty()) {
        if (embedded) return *embedded;
        return Orientation::all_plus(g);
    }
    // anything else is a path to an incidence document carrying an orientation
    auto doc = load(flag);
    const auto& og = as_incidence(doc, flag);
    if (!doc.orientation) throw InputError(flag + ": document carries no orientation");
    if (!(og == g))
        throw InputError(flag + ": orientation file describes a different object");
    return *doc.orientation;
}

nlohmann::json morphism_json(const QuiverMorphism& m) {
    nlohmann::json j;
    auto& vm = j["vertex_map"] = nlohmann::json::object();
    for (size_t v = 0; v < m.vertex_map().size(); ++v)
        vm[m.domain().vertices()[v]] = m.codomain().vertices()[m.vertex_map()[v]];
    auto& em = j["edge_map"] = nlohmann::json::object();
    for (size_t e = 0; e < m.edge_map().size(); ++e)
        em[m.domain().edges()[e]] = m.codomain().edges()[m.edge_map()[e]];
    return j;
}
nlohmann::json morphism_json(const HypergraphMorphism& m) {
    nlohmann::json j;
    auto& vm = j["vertex_map"] = nlohmann::json::object();
    for (size_t v = 0; v < m.vertex_map().size(); ++v)
        vm[m.domain().vertices()[v]] = m.codomain().vertices()[m.vertex_map()[v]];
    auto& em = j["edge_map"] = nlohmann::json::object();
    for (size_t e = 0; e < m.edge_map().size(); ++e)
        em[m.domain().edges()[e]] = m.codomain().edges()[m.edge_map()[e]];
    return j;
}
nlohmann::json morphism_json(const IncidenceMorphism& m) {
    nlohmann::json j;
    auto& vm = j["vertex_map"] = nlohmann::json::object();
    for (size_t v = 0; v < m.vertex_map().size(); ++v)
        vm[m.domain().vertices()[v]] = m.codomain().vertices()[m.vertex_map()[v]];
    auto& em = j["edge_map"] = nlohmann::json::object();
    for (size_t e = 0; e < m.edge_map().size(); ++e)
        em[m.domain().edges()[e]] = m.codomain().edges()[m.edge_map()[e]];
    auto& im = j["incidence_map"] = nlohmann::json::object();
    for (size_t i = 0; i < m.incidence_map().size(); ++i)
        im[m.domain().incidences()[i]] = m.codomain().incidences()[m.incidence_map()[i]];
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperbox: box products, exponentials, and Laplacian machinery for "
                 "quivers, hypergraphs, and incidence hypergraphs"};
    app.require_subcommand(1);

    std::string kind, name, which, orientation_flag, format = "csv", out_path, suite;
    std::string path_a, path_b;
    std::vector<std::string> anchor_specs, verify_files;
    std::string monic;
    bool count_only = false;
    long long power = 1;
    int kmax = 2;
    std::uint64_t seed = 0;

    auto* product = app.add_subcommand("product", "box or Laplacian product of two objects");
    product->add_option("--kind", kind, "box-q|box-h|box-r|laplacian")
        ->required()
        ->check(CLI::IsMember({"box-q", "box-h", "box-r", "laplacian"}));
    product->add_option("a", path_a)->required();
    product->add_option("b", path_b)->required();
    product->add_option("--out", out_path);

    auto* exp = app.add_subcommand("exp", "box or Laplacian exponential of two objects");
    exp->add_option("--kind", kind, "box-q|box-h|box-r|box-v|laplacian")
        ->required()
        ->check(CLI::IsMember({"box-q", "box-h", "box-r", "box-v", "laplacian"}));
    exp->add_option("a", path_a)->required();
    exp->add_option("b", path_b)->required();
    exp->add_option("--out", out_path);

    auto* dualc = app.add_subcommand("dual", "incidence dual");
    dualc->add_option("a", path_a)->required();
    dualc->add_option("--out", out_path);

    auto* functor = app.add_subcommand("functor", "apply a functor to an object");
    functor->add_option("--name", name, "U|D|N|Del|I|UpsilonDiamond|UUpsilonDiamond")
        ->required()
        ->check(CLI::IsMember({"U", "D", "N", "Del", "I", "UpsilonDiamond", "UUpsilonDiamond"}));
    functor->add_option("a", path_a)->required();
    functor->add_option("--out", out_path);

    auto* homs = app.add_subcommand("homs", "enumerate or count morphisms A -> B");
    homs->add_option("a", path_a)->required();
    homs->add_option("b", path_b)->required();
    homs->add_option("--anchor", anchor_specs, "pin ELEMENT=IMAGE (repeatable)");
    homs->add_flag("--count", count_only, "print the count only");
    homs->add_option("--monic", monic, "incidence|vertex")
        ->check(CLI::IsMember({"incidence", "vertex"}));
    homs->add_option("--out", out_path);

    auto* matrix = app.add_subcommand("matrix", "oriented-hypergraph matrices");
    matrix->add_option("--which", which, "H|A|D|L|Hbar|Lbar")
        ->required()
        ->check(CLI::IsMember({"H", "A", "D", "L", "Hbar", "Lbar"}));
    matrix->add_option("--power", power, "matrix power (square matrices)");
    matrix->add_option("--orientation", orientation_flag,
                       "all-plus|all-minus|PATH (default: embedded, else all-plus)");
    matrix->add_option("--format", format, "csv|text")->check(CLI::IsMember({"csv", "text"}));
    matrix->add_option("a", path_a)->required();
    matrix->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "coherence|adjunction|weakwalk|census")
        ->required()
        ->check(CLI::IsMember({"coherence", "adjunction", "weakwalk", "census"}));
    verify->add_option("--kmax", kmax, "max incidence-path length for walk suites");
    verify->add_option("--seed", seed, "seed for the random corpus");
    verify->add_option("files", verify_files, "objects for weakwalk/census");
    verify->add_option("--out", out_path);

    auto* dotc = app.add_subcommand("dot", "Graphviz DOT export");
    dotc->add_option("a", path_a)->required();
    dotc->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*product) {
            auto da = load(path_a);
            auto db = load(path_b);
            nlohmann::json j;
            if (kind == "box-q")
                j = to_json(box_q(as_quiver(da, path_a), as_quiver(db, path_b)));
            else if (kind == "box-h")
                j = to_json(box_h(as_hypergraph(da, path_a), as_hypergraph(db, path_b)));
            else if (kind == "box-r")
                j = to_json(box_r(as_incidence(da, path_a), as_incidence(db, path_b)));
            else
                j = to_json(laplacian_product(as_incidence(da, path_a), as_incidence(db, path_b)));
            write_output(out_path, dump_document(j));
        } else if (*exp) {
            auto da = load(path_a);
            auto db = load(path_b);
            nlohmann::json j;
            if (kind == "box-q")
                j = to_json(exp_box_q(as_quiver(da, path_a), as_quiver(db, path_b)).carrier);
            else if (kind == "box-h")
                j = to_json(exp_box_h(as_hypergraph(da, path_a), as_hypergraph(db, path_b)).carrier);
            else if (kind == "box-r")
                j = to_json(exp_box_m(as_multigraph(da, path_a), as_multigraph(db, path_b)).carrier);
            else if (kind == "box-v")
                j = to_json(exp_box_r(as_incidence(da, path_a), as_incidence(db, path_b)).carrier);
            else
                j = to_json(exp_laplacian(as_incidence(da, path_a), as_incidence(db, path_b)).carrier);
            write_output(out_path, dump_document(j));
        } else if (*dualc) {
            auto da = load(path_a);
            write_output(out_path, dump_document(to_json(dual(as_incidence(da, path_a)))));
        } else if (*functor) {
            auto da = load(path_a);
            nlohmann::json j;
            if (name == "U")
                j = to_json(undirect(as_quiver(da, path_a)));
            else if (name == "D")
                j = to_json(associated_digraph(as_multigraph(da, path_a)));
            else if (name == "N")
                j = to_json(inclusion_n(as_multigraph(da, path_a)));
            else if (name == "Del")
                j = to_json(del(as_hypergraph(da, path_a)));
            else if (name == "I")
                j = to_json(incidence_forming(as_hypergraph(da, path_a)));
            else if (name == "UpsilonDiamond")
                j = to_json(bipartite_incidence(as_incidence(da, path_a)));
            else
                j = to_json(u_bipartite(as_incidence(da, path_a)));
            write_output(out_path, dump_document(j));
        } else if (*homs) {
            auto da = load(path_a);
            auto db = load(path_b);
            if (da.category != db.category)
                throw InputError("homs: objects live in different categories");
            AnchorConstraint anchors;
            for (const auto& s : anchor_specs) add_anchor(anchors, da, s);
            nlohmann::json j;
            if (da.category == Category::incidence) {
                MonicFilter mf = MonicFilter::none;
                if (monic == "incidence") mf = MonicFilter::incidence;
                if (monic == "vertex") mf = MonicFilter::vertex;
                if (count_only) {
                    j["count"] = count_homs(da.incidence(), db.incidence(), anchors, mf);
                } else {
                    auto ms = enumerate_homs(da.incidence(), db.incidence(), anchors, mf);
                    j["count"] = ms.size();
                    auto& arr = j["morphisms"] = nlohmann::json::array();
                    for (const auto& m : ms) arr.push_back(morphism_json(m));
                }
            } else if (!monic.empty()) {
                throw InputError("--monic applies to incidence-hypergraph objects");
            } else if (da.category == Category::quiver) {
                if (count_only) {
                    j["count"] = count_homs(da.quiver(), db.quiver(), anchors);
                } else {
                    auto ms = enumerate_homs(da.quiver(), db.quiver(), anchors);
                    j["count"] = ms.size();
                    auto& arr = j["morphisms"] = nlohmann::json::array();
                    for (const auto& m : ms) arr.push_back(morphism_json(m));
                }
            } else {
                if (count_only) {
                    j["count"] = count_homs(da.hypergraph(), db.hypergraph(), anchors);
                } else {
                    auto ms = enumerate_homs(da.hypergraph(), db.hypergraph(), anchors);
                    j["count"] = ms.size();
                    auto& arr = j["morphisms"] = nlohmann::json::array();
                    for (const auto& m : ms) arr.push_back(morphism_json(m));
                }
            }
            write_output(out_path, dump_document(j));
        } else if (*matrix) {
            auto da = load(path_a);
            const auto& g = as_incidence(da, path_a);
            auto oriented = OrientedHypergraph::make(
                g, orientation_from_flag(g, orientation_flag, da.orientation));
            IntMatrix m;
            std::vector<std::string> rows, cols;
            auto joint = g.vertices();
            joint.insert(joint.end(), g.edges().begin(), g.edges().end());
            if (which == "H") {
                if (power != 1) throw InputError("--power applies to square matrices only");
                m = incidence_matrix(oriented);
                rows = g.vertices();
                cols = g.edges();
            } else if (which == "A" || which == "D" || which == "L") {
                IntMatrix base = which == "A"   ? adjacency_matrix(oriented)
                                 : which == "D" ? degree_matrix(oriented)
                                                : laplacian_matrix(oriented);
                m = matrix_power(base, power);
                rows = cols = g.vertices();
            } else {
                IntMatrix base =
                    which == "Hbar" ? complete_incidence(oriented) : complete_laplacian(oriented);
                m = matrix_power(base, power);
                rows = cols = joint;
            }
            write_output(out_path, format == "csv" ? m.to_csv(rows, cols) : m.to_text());
        } else if (*verify) {
            CheckReport rep;
            if (suite == "coherence") {
                if (!verify_files.empty())
                    throw InputError("the coherence suite runs on a seeded random corpus");
                rep = coherence_suite(seed);
            } else if (suite == "adjunction") {
                if (!verify_files.empty())
                    throw InputError("the adjunction suite runs on a seeded random corpus");
                rep = adjunction_suite(seed);
            } else if (suite == "weakwalk") {
                if (verify_files.empty()) {
                    rep = weakwalk_suite(seed, 20, kmax);
                } else {
                    std::vector<OrientedHypergraph> objs;
                    for (const auto& f : verify_files) {
                        auto d = load(f);
                        const auto& g = as_incidence(d, f);
                        objs.push_back(OrientedHypergraph::make(
                            g, d.orientation ? *d.orientation : Orientation::all_plus(g)));
                    }
                    rep = weakwalk_files(objs, kmax);
                }
            } else {
                if (verify_files.empty()) {
                    rep = census_suite(seed, 10, kmax);
                } else {
                    std::vector<IncidenceHypergraph> objs;
                    for (const auto& f : verify_files) {
                        auto d = load(f);
                        objs.push_back(as_incidence(d, f));
                    }
                    rep = census_files(objs, kmax);
                }
            }
            write_output(out_path, rep.text());
            return rep.ok ? 0 : 1;
        } else if (*dotc) {
            auto da = load(path_a);
            write_output(out_path, to_dot(da, stem_of(path_a)));
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
