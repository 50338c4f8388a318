#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    auto dir = std::filesystem::temp_directory_path();
    auto out = dir / ("hyperbox_cli_out_" + std::to_string(counter) + ".txt");
    auto err = dir / ("hyperbox_cli_err_" + std::to_string(counter) + ".txt");
    counter++;
    std::string cmd = std::string(HYPERBOX_CLI_PATH) + " " + args + " > " + out.string() +
                      " 2> " + err.string();
    int rc = std::system(cmd.c_str());
    RunResult r{WEXITSTATUS(rc), slurp(out), slurp(err)};
    std::filesystem::remove(out);
    std::filesystem::remove(err);
    return r;
}

std::string data(const std::string& name) {
    return (std::filesystem::path(HYPERBOX_DATA_DIR) / name).string();
}

}  // namespace

TEST_CASE("product command emits the digon") {
    auto r = run_cli("product --kind laplacian " + data("unit_i_r.json") + " " +
                     data("unit_i_r.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"1:v0:v0\"") != std::string::npos);
    CHECK(r.out.find("\"4:e0:e0\"") != std::string::npos);
    CHECK(r.out == slurp(data("digon_lap.json")));
}

TEST_CASE("exp command reproduces the committed exponentials") {
    auto r = run_cli("exp --kind laplacian " + data("unit_i_r.json") + " " + data("p1_r.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == slurp(data("exp_l_half_p1.json")));
    auto rq = run_cli("exp --kind box-q " + data("p1_q.json") + " " + data("c2_q.json"));
    REQUIRE(rq.exit_code == 0);
    CHECK(rq.out == slurp(data("exp_b_p1_c2.json")));
    // the multigraph exponential keeps only the small edges
    auto rm = run_cli("exp --kind box-r " + data("p1_h.json") + " " + data("c2_h.json"));
    REQUIRE(rm.exit_code == 0);
    CHECK(rm.out.find("\"category\": \"hypergraph\"") != std::string::npos);
}

TEST_CASE("matrix command prints the reference Laplacian diagonal") {
    auto r = run_cli("matrix --which L " + data("diamond_r.json"));
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, row0, row1, row2, row3;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    std::getline(lines, row2);
    std::getline(lines, row3);
    CHECK(row0 == "v0,3,1,1,1");
    CHECK(row1 == "v1,1,2,1,0");
    CHECK(row2 == "v2,1,1,3,1");
    CHECK(row3 == "v3,1,0,1,2");

    auto rt = run_cli("matrix --which H --format text " + data("doubled_r.json"));
    REQUIRE(rt.exit_code == 0);
    CHECK(rt.out == "[ 1 2 ]\n[ 1 1 ]\n[ 1 0 ]\n");

    auto rp = run_cli("matrix --which Hbar --power 2 " + data("diamond_r.json"));
    CHECK(rp.exit_code == 0);
    auto bad = run_cli("matrix --which H --power 3 " + data("diamond_r.json"));
    CHECK(bad.exit_code == 2);
}

TEST_CASE("homs command counts and anchors") {
    auto r = run_cli("homs --count " + data("unit_i_r.json") + " " + data("diamond_r.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"count\": 10") != std::string::npos);

    auto ra = run_cli("homs --count --anchor v0=v0 --anchor v1=v0 " + data("p1_r.json") + " " +
                      data("diamond_r.json"));
    REQUIRE(ra.exit_code == 0);
    CHECK(ra.out.find("\"count\": 3") != std::string::npos);

    auto rm = run_cli("homs --count --monic incidence --anchor v0=v0 --anchor v1=v0 " +
                      data("p1_r.json") + " " + data("diamond_r.json"));
    REQUIRE(rm.exit_code == 0);
    CHECK(rm.out.find("\"count\": 0") != std::string::npos);

    auto rb = run_cli("homs --count --anchor nope=v0 " + data("p1_r.json") + " " +
                      data("diamond_r.json"));
    CHECK(rb.exit_code == 2);
}

TEST_CASE("verify suites succeed and report deterministically") {
    auto r1 = run_cli("verify --suite census --kmax 1 " + data("doubled_r.json"));
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("6 vertices, 6 edges") != std::string::npos);
    auto r2 = run_cli("verify --suite weakwalk --kmax 2 " + data("diamond_r.json"));
    CHECK(r2.exit_code == 0);
    auto r3 = run_cli("verify --suite coherence --seed 0");
    CHECK(r3.exit_code == 0);
    auto r4 = run_cli("verify --suite coherence --seed 0");
    CHECK(r3.out == r4.out);
}

TEST_CASE("dot output matches the golden files") {
    for (const auto& entry :
         std::filesystem::directory_iterator(std::filesystem::path(HYPERBOX_DATA_DIR))) {
        if (entry.path().extension() != ".json") continue;
        auto golden = std::filesystem::path(HYPERBOX_DATA_DIR) / "golden" /
                      (entry.path().stem().string() + ".dot");
        REQUIRE(std::filesystem::exists(golden));
        auto r = run_cli("dot " + entry.path().string());
        REQUIRE(r.exit_code == 0);
        CHECK(r.out == slurp(golden));
    }
}

TEST_CASE("orientation flags reorient the matrices") {
    auto r = run_cli("matrix --which H --format text --orientation all-minus " +
                     data("unit_i_r.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "[ -1 ]\n");
    // an orientation can also come from a sibling document of the same object
    auto rf = run_cli("matrix --which H --format text --orientation " + data("doubled_r.json") +
                      " " + data("doubled_r.json"));
    REQUIRE(rf.exit_code == 0);
    CHECK(rf.out == "[ 1 2 ]\n[ 1 1 ]\n[ 1 0 ]\n");
    auto mismatch = run_cli("matrix --which H --orientation " + data("doubled_r.json") + " " +
                            data("diamond_r.json"));
    CHECK(mismatch.exit_code == 2);
}

TEST_CASE("homs works across categories") {
    auto rq = run_cli("homs --count " + data("p1_q.json") + " " + data("c2_q.json"));
    REQUIRE(rq.exit_code == 0);
    CHECK(rq.out.find("\"count\": 2") != std::string::npos);
    auto rh = run_cli("homs --count " + data("p1_h.json") + " " + data("c2_h.json"));
    REQUIRE(rh.exit_code == 0);
    CHECK(rh.out.find("\"count\": 4") != std::string::npos);
    auto cross = run_cli("homs --count " + data("p1_q.json") + " " + data("c2_h.json"));
    CHECK(cross.exit_code == 2);
}

TEST_CASE("size guard environment variable caps exponentials") {
    auto r = run_cli("exp --kind box-h " + data("p1_h.json") + " " + data("c2_h.json"));
    CHECK(r.exit_code == 0);
    static int counter = 9000;
    auto dir = std::filesystem::temp_directory_path();
    auto out = dir / ("hyperbox_guard_" + std::to_string(counter++) + ".txt");
    std::string cmd = "HYPERBOX_SIZE_GUARD=2 " + std::string(HYPERBOX_CLI_PATH) +
                      " exp --kind box-h " + data("p1_h.json") + " " + data("c2_h.json") +
                      " > /dev/null 2> " + out.string();
    int rc = std::system(cmd.c_str());
    CHECK(WEXITSTATUS(rc) == 2);
    CHECK(slurp(out).find("size guard") != std::string::npos);
    std::filesystem::remove(out);
}

TEST_CASE("input errors exit with code 2") {
    auto missing = run_cli("dual /nonexistent/object.json");
    CHECK(missing.exit_code == 2);

    auto dir = std::filesystem::temp_directory_path();
    auto bad = dir / "hyperbox_bad_doc.json";
    std::ofstream(bad) << "{\"format\": \"hyperbox/1\", \"category\": \"incidence\", "
                          "\"vertices\": [], \"edges\": [], \"incidences\": [\"i0\"], "
                          "\"port\": [[\"i0\", \"ghost\"]], \"attachment\": [[\"i0\", \"e9\"]]}";
    auto r = run_cli("dual " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("ghost") != std::string::npos);

    auto malformed = dir / "hyperbox_malformed.json";
    std::ofstream(malformed) << "{not json";
    CHECK(run_cli("dual " + malformed.string()).exit_code == 2);

    auto wrong_cat = run_cli("dual " + data("p1_q.json"));
    CHECK(wrong_cat.exit_code == 2);

    std::filesystem::remove(bad);
    std::filesystem::remove(malformed);
}
