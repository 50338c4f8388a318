#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "hyperbox/dot.hpp"
#include "hyperbox/json_io.hpp"
#include "hyperbox/products.hpp"

using namespace hyperbox;

TEST_CASE("documents round trip through JSON") {
    auto g = fixtures::doubled_r();
    auto j = to_json(g);
    auto back = parse_document(j);
    CHECK(back.category == Category::incidence);
    CHECK(back.incidence() == g);
    CHECK(to_json(back.incidence()) == j);
    CHECK(dump_document(j) == dump_document(to_json(parse_document(j).incidence())));

    auto q = cycle_q(3);
    CHECK(parse_document(to_json(q)).quiver() == q);
    auto h = cycle_h(3);
    CHECK(parse_document(to_json(h)).hypergraph() == h);

    Orientation o = Orientation::all_minus(g);
    auto jo = to_json(g, &o);
    auto backo = parse_document(jo);
    REQUIRE(backo.orientation.has_value());
    CHECK(backo.orientation->sign == o.sign);
}

TEST_CASE("product labels survive serialization") {
    auto lap = laplacian_product(path_r(1), path_r(1));
    auto back = parse_document(to_json(lap));
    CHECK(back.incidence() == lap);
    CHECK(back.incidence().vertex_index("1:v0:v0") >= 0);
    CHECK(back.incidence().vertex_index("4:e0:e0") >= 0);
}

TEST_CASE("malformed documents are rejected with element names") {
    auto j = to_json(fixtures::doubled_r());
    SECTION("unknown field") {
        j["extra"] = 1;
        CHECK_THROWS_AS(parse_document(j), InputError);
    }
    SECTION("wrong format tag") {
        j["format"] = "hyperbox/2";
        CHECK_THROWS_AS(parse_document(j), InputError);
    }
    SECTION("unknown category") {
        j["category"] = "simplicial";
        CHECK_THROWS_AS(parse_document(j), InputError);
    }
    SECTION("dangling port reference") {
        j["port"][0][1] = "missing";
        try {
            parse_document(j);
            FAIL("expected InputError");
        } catch (const InputError& e) {
            CHECK(std::string(e.what()).find("missing") != std::string::npos);
        }
    }
    SECTION("incomplete attachment map") {
        j["attachment"].erase(0);
        CHECK_THROWS_AS(parse_document(j), InputError);
    }
    SECTION("partial orientation") {
        j["orientation"] = nlohmann::json::array();
        j["orientation"].push_back({"i0", 1});
        CHECK_THROWS_AS(parse_document(j), InputError);
    }
    SECTION("bad sign value") {
        auto g = fixtures::doubled_r();
        auto& arr = j["orientation"] = nlohmann::json::array();
        for (const auto& i : g.incidences()) arr.push_back({i, 3});
        CHECK_THROWS_AS(parse_document(j), InputError);
    }
}

TEST_CASE("dot export is deterministic and category-aware") {
    auto g = fixtures::doubled_r();
    auto d1 = to_dot(g, "doubled");
    auto d2 = to_dot(g, "doubled");
    CHECK(d1 == d2);
    CHECK(d1.find("graph \"doubled\"") == 0);
    CHECK(d1.find("style=filled") != std::string::npos);
    CHECK(d1.find("[label=\"i0\"]") != std::string::npos);

    auto dq = to_dot(cycle_q(2), "c2");
    CHECK(dq.find("digraph") == 0);
    CHECK(dq.find("->") != std::string::npos);

    auto dh = to_dot(cycle_h(2), "c2");
    CHECK(dh.find("\"v:v0\" -- \"e:e0\";") != std::string::npos);
}
