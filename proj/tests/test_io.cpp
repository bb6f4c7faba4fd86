#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "dnormal/io.hpp"
#include "test_helpers.hpp"

using namespace dnormal;
using test_helpers::random_point_set;

namespace {

std::filesystem::path temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "dnormal_io_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("point set JSON round trip") {
    auto rng = make_engine(51, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t dim = 1 + next_index(rng, 6);
        const std::size_t n = 2 + next_index(rng, 8);
        const PointSet ps = random_point_set(rng, dim, n);
        const nlohmann::json j = nlohmann::json::parse(point_set_to_json(ps).dump());
        const PointSet back = point_set_from_json(j);
        REQUIRE(back.dim() == ps.dim());
        REQUIRE(back.size() == ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i)
            CHECK(back[i] == ps[i]);  // serialization round-trips exactly
    }
}

TEST_CASE("point set JSON rejects malformed input") {
    CHECK_THROWS_AS(point_set_from_json(nlohmann::json::parse("{}")), IoError);
    CHECK_THROWS_AS(
        point_set_from_json(nlohmann::json::parse(R"({"dim":2,"points":[[1]]})")),
        IoError);
    CHECK_THROWS_AS(
        point_set_from_json(nlohmann::json::parse(R"({"dim":0,"points":[]})")),
        IoError);
    CHECK_THROWS_AS(
        point_set_from_json(
            nlohmann::json::parse(R"({"dim":1,"points":[["x"]]})")),
        IoError);
    // duplicates rejected through the PointSet invariant
    CHECK_THROWS_AS(
        point_set_from_json(
            nlohmann::json::parse(R"({"dim":1,"points":[[0.5],[0.5]]})")),
        IoError);
}

TEST_CASE("CSV reader") {
    std::istringstream good("0,0\n1,0\n0.5,0.866\n");
    const PointSet ps = point_set_from_csv(good);
    CHECK(ps.dim() == 2);
    CHECK(ps.size() == 3);
    CHECK(ps[2][1] == doctest::Approx(0.866));

    std::istringstream ragged("0,0\n1\n");
    CHECK_THROWS_AS(point_set_from_csv(ragged), IoError);
    std::istringstream junk("0,zebra\n");
    CHECK_THROWS_AS(point_set_from_csv(junk), IoError);
    std::istringstream empty("");
    CHECK_THROWS_AS(point_set_from_csv(empty), IoError);
}

TEST_CASE("read_point_set_with_parts surfaces labels") {
    const auto dir = temp_dir();
    const auto path = (dir / "parted.json").string();
    write_text_atomic(path,
                      R"({"dim":1,"points":[[0.0],[1.0],[2.0]],"parts":[1,1,2]})");
    const auto [ps, parts] = read_point_set_with_parts(path);
    CHECK(ps.size() == 3);
    CHECK(parts == std::vector<std::size_t>{1, 1, 2});

    const auto plain = (dir / "plain.json").string();
    write_text_atomic(plain, R"({"dim":1,"points":[[0.0],[1.0]]})");
    CHECK(read_point_set_with_parts(plain).second.empty());
}

TEST_CASE("read_point_set dispatches on extension") {
    const auto dir = temp_dir();
    const auto json_path = (dir / "ps.json").string();
    const auto csv_path = (dir / "ps.csv").string();
    write_text_atomic(json_path, R"({"dim":1,"points":[[0.0],[1.0]]})");
    write_text_atomic(csv_path, "0\n1\n");
    CHECK(read_point_set(json_path).size() == 2);
    CHECK(read_point_set(csv_path).size() == 2);
    CHECK_THROWS_AS(read_point_set((dir / "missing.json").string()), IoError);

    write_text_atomic(json_path, R"({"dim":1,"points":[[0.0)");
    CHECK_THROWS_AS(read_point_set(json_path), IoError);
}

TEST_CASE("graph and certificate JSON shapes") {
    DnGraph g(3, PairMode::almost(0.25), Tolerance{});
    g.set_edge(0, 2, true);
    const nlohmann::json j = graph_to_json(g);
    CHECK(j["n"] == 3);
    CHECK(j["mode"] == "almost");
    CHECK(j["delta"] == doctest::Approx(0.25));
    REQUIRE(j["edges"].size() == 1);
    CHECK(j["edges"][0][0] == 0);
    CHECK(j["edges"][0][1] == 2);

    Certificate cert;
    cert.pass = false;
    cert.violations.push_back({1, 2});
    const nlohmann::json cj = certificate_to_json(cert);
    CHECK(cj["pass"] == false);
    CHECK(cj["violations"][0][1] == 2);
}

TEST_CASE("results file append and reload") {
    const auto dir = temp_dir();
    const auto path = (dir / "results.jsonl").string();
    std::filesystem::remove(path);

    CHECK(read_result_records(path).empty());

    ResultRecord rec;
    rec.dim = 2;
    rec.size = 3;
    rec.margin = 0.5;
    rec.seed = 9;
    const PointSet tri(2, {{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.9}});
    rec.points = tri.points();
    append_result_record(path, rec);
    append_result_record(path, rec);

    const auto records = read_result_records(path);
    REQUIRE(records.size() == 2);
    CHECK(records[0].dim == 2);
    CHECK(records[0].size == 3);
    CHECK(records[0].margin == doctest::Approx(0.5));
    CHECK(records[0].seed == 9);
    CHECK(records[0].points == tri.points());

    // acute triangle counts as evidence; a right triple does not
    ResultRecord bad = rec;
    bad.points = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
    append_result_record(path, bad);
    const auto evidence = acute_evidence_from_records(read_result_records(path));
    CHECK(evidence.size() == 2);
    for (const AcuteEvidence& e : evidence) {
        CHECK(e.size == 3);
        CHECK(e.dim == 2);
    }
}

TEST_CASE("results reader skips torn and wrong-typed lines") {
    const auto dir = temp_dir();
    const auto path = (dir / "torn.jsonl").string();
    std::ofstream out(path, std::ios::trunc);
    out << R"({"dim":1,"size":0,"margin":0,"seed":0,"points":[]})" << "\n";
    out << R"({"dim":1,"size)" << "\n";                      // torn tail
    out << R"({"dim":"three","points":[[0.1]]})" << "\n";    // wrong types
    out.close();
    CHECK(read_result_records(path).size() == 1);
}

TEST_CASE("atomic write replaces content completely") {
    const auto dir = temp_dir();
    const auto path = (dir / "atomic.txt").string();
    write_text_atomic(path, "first version");
    write_text_atomic(path, "second");
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "second");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
}

TEST_CASE("fnv1a64 digests") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") != fnv1a64("b"));
    CHECK(hex64(0x1234abcd).size() == 16);
    CHECK(hex64(0) == "0000000000000000");
    const auto dir = temp_dir();
    const auto path = (dir / "digest.txt").string();
    write_text_atomic(path, "stable bytes");
    CHECK(fnv1a64_file(path) == fnv1a64("stable bytes"));
}
