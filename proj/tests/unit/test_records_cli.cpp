#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "richardson/cli.hpp"
#include "richardson/exceptional.hpp"
#include "richardson/records.hpp"

using namespace richardson;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) v.push_back(l);
  return v;
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> v;
  for (const auto& l : lines(s)) v.push_back(nlohmann::json::parse(l));
  return v;
}

}  // namespace

TEST_SUITE("records_cli") {
  TEST_CASE("json and csv round trip every record of small kinds") {
    std::vector<LieKind> kinds = {LieKind(Family::A, 4), LieKind(Family::B, 4),
                                  LieKind(Family::C, 4), LieKind(Family::D, 5),
                                  LieKind(Family::G2, 2), LieKind(Family::F4, 4)};
    for (const auto& kind : kinds)
      for (const auto& c : all_colorings(kind)) {
        const OutputRecord rec = to_record(classify(c));
        INFO(kind.name(), " ", c.to_string());
        const nlohmann::ordered_json j = to_json(rec);
        REQUIRE(record_from_json(nlohmann::json::parse(j.dump())) == rec);
        REQUIRE(record_from_csv_row(to_csv_row(rec)) == rec);
      }
  }

  TEST_CASE("json keys come in a fixed order") {
    const OutputRecord rec = to_record(classify(BlockVector(LieKind(Family::C, 3), {2}, 2)));
    const nlohmann::ordered_json j = to_json(rec);
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    CHECK(keys == std::vector<std::string>{"kind", "coloring", "blocks", "central", "nice",
                                           "birational", "sl2", "normal", "partition",
                                           "orbit_dim", "covering_degree", "label"});
    CHECK(j["partition"] == nlohmann::json::array({3, 3}));
    CHECK(csv_header() ==
          "kind,coloring,blocks,central,nice,birational,sl2,normal,partition,orbit_dim,"
          "covering_degree,label");
  }

  TEST_CASE("malformed records are rejected") {
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(R"({"kind":"C3"})")), Error);
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse("[1,2]")), Error);
    CHECK_THROWS_AS(record_from_csv_row("C3,(0;1;0)"), Error);
    CHECK_THROWS_AS(record_from_csv_row("C3,(0;1;0),(2),2,maybe,true,true,normal,(3;3),14,1,"),
                    Error);
  }

  TEST_CASE("classify examples") {
    const Run c3 = run({"classify", "--kind", "C3", "--blocks", "2", "--central", "2",
                        "--format", "json"});
    REQUIRE(c3.code == kExitOk);
    const auto j = nlohmann::json::parse(c3.out);
    CHECK(j["nice"] == true);
    CHECK(j["birational"] == true);
    CHECK(j["sl2"] == true);
    CHECK(j["partition"] == nlohmann::json::array({3, 3}));

    const Run e7 = run({"classify", "--kind", "E7", "--coloring", "1,1,0,0,0,0,1",
                        "--format", "json"});
    REQUIRE(e7.code == kExitOk);
    const auto k = nlohmann::json::parse(e7.out);
    CHECK(k["nice"] == true);
    CHECK(k["birational"] == false);
    CHECK(k["orbit_dim"] == 106);
    CHECK(k["label"] == "D_5(a_1)");

    const Run a4 = run({"classify", "--kind", "A4", "--blocks", "2,1,2", "--format", "json"});
    REQUIRE(a4.code == kExitOk);
    CHECK(nlohmann::json::parse(a4.out)["nice"] == false);

    const Run table = run({"classify", "--kind", "D5", "--blocks", "1,4"});
    REQUIRE(table.code == kExitOk);
    CHECK(table.out.find("(3,3,2,2)") != std::string::npos);
  }

  TEST_CASE("classify reports reordered blocks") {
    const Run r = run({"classify", "--kind", "B4", "--blocks", "2,1", "--central", "3"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out.find("not ascending") != std::string::npos);
  }

  TEST_CASE("classify input errors exit 2 with a reason") {
    const Run mismatch = run({"classify", "--kind", "A3", "--blocks", "2,1,2"});
    CHECK(mismatch.code == kExitUsage);
    CHECK_FALSE(mismatch.err.empty());
    const Run palindrome = run({"classify", "--kind", "C4", "--blocks", "2,2,2,2"});
    CHECK(palindrome.code == kExitUsage);
    CHECK(palindrome.err.find("palindrom") != std::string::npos);
    CHECK(run({"classify", "--kind", "X9", "--coloring", "1"}).code == kExitUsage);
    CHECK(run({"classify", "--kind", "C3", "--coloring", "1,0"}).code == kExitUsage);
    CHECK(run({"classify", "--kind", "C3"}).code == kExitUsage);
    CHECK(run({"classify", "--kind", "C3", "--coloring", "1,0,1", "--blocks", "1"}).code ==
          kExitUsage);
    CHECK(run({"classify", "--kind", "C3", "--coloring", "1,0,1", "--format", "xml"}).code ==
          kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({}).code == kExitUsage);
  }

  TEST_CASE("help exits 0") {
    const Run h = run({"--help"});
    CHECK(h.code == kExitOk);
    CHECK(h.out.find("classify") != std::string::npos);
  }

  TEST_CASE("enumerate counts") {
    CHECK(json_lines(run({"enumerate", "--kind", "G2", "--birational", "--format", "json"}).out)
              .size() == 3);
    CHECK(json_lines(run({"enumerate", "--kind", "E7", "--nice", "--format", "json"}).out)
              .size() == 29);
    for (int n = 1; n <= 5; ++n) {
      const Run r =
          run({"enumerate", "--kind", "A", "--rank", std::to_string(n), "--format", "json"});
      REQUIRE(r.code == kExitOk);
      CHECK(json_lines(r.out).size() == (std::size_t{1} << n));
    }
    const Run all = run({"enumerate", "--kind", "exceptional", "--format", "csv"});
    CHECK(lines(all.out).size() == 1 + 4 + 16 + 64 + 128 + 256);
  }

  TEST_CASE("enumerate is ordered by coloring and filters combine") {
    const auto recs =
        json_lines(run({"enumerate", "--kind", "C3", "--by-blocks", "--format", "json"}).out);
    REQUIRE(recs.size() == 8);
    for (std::size_t i = 1; i < recs.size(); ++i)
      CHECK(recs[i - 1]["coloring"].get<std::vector<int>>() <
            recs[i]["coloring"].get<std::vector<int>>());
    const auto both = json_lines(
        run({"enumerate", "--kind", "D", "--max-rank", "6", "--nice", "--birational",
             "--format", "json"})
            .out);
    for (const auto& r : both) {
      CHECK(r["nice"] == true);
      CHECK(r["birational"] == true);
    }
    const auto sl2 = json_lines(
        run({"enumerate", "--kind", "B4", "--sl2", "--format", "json"}).out);
    for (const auto& r : sl2) CHECK(r["sl2"] == true);
    const Run csv = run({"enumerate", "--kind", "C", "--rank", "2", "--by-blocks",
                         "--format", "csv"});
    const auto rows = lines(csv.out);
    REQUIRE(rows.size() == 5);
    CHECK(rows.front() == csv_header());
    for (const auto& row : rows)
      CHECK(std::count(row.begin(), row.end(), ',') == 11);
  }

  TEST_CASE("enumerate usage errors") {
    CHECK(run({"enumerate", "--kind", "C"}).code == kExitUsage);
    CHECK(run({"enumerate", "--kind", "C", "--rank", "2", "--max-rank", "3"}).code ==
          kExitUsage);
    CHECK(run({"enumerate", "--kind", "exceptional", "--by-blocks"}).code == kExitUsage);
    CHECK(run({"enumerate", "--kind", "C", "--rank", "40"}).code == kExitUsage);
  }

  TEST_CASE("verify exits 0 on small sweeps and prints a summary") {
    const Run c = run({"verify", "--kind", "C", "--max-N", "8"});
    CHECK(c.code == kExitOk);
    CHECK(c.out.find("0 discrepancies") != std::string::npos);
    const Run b1 = run({"verify", "--kind", "B", "--max-N", "7", "--trials", "1", "--seed", "7"});
    const Run b2 = run({"verify", "--kind", "B", "--max-N", "7", "--trials", "1", "--seed", "7"});
    CHECK(b1.code == kExitOk);
    CHECK(b1.out == b2.out);
    CHECK(run({"verify", "--kind", "E7"}).code == kExitUsage);
  }

  TEST_CASE("export row counts") {
    CHECK(json_lines(run({"export", "--kind", "F4"}).out).size() == 8);
    CHECK(json_lines(run({"export", "--kind", "E6"}).out).size() == 30);
    const auto e8 = json_lines(run({"export", "--kind", "E8"}).out);
    REQUIRE(e8.size() == 28);
    bool found = false;
    for (const auto& r : e8)
      if (r["row"] == "18") {
        found = true;
        CHECK(r["label"] == "D_6");
        CHECK(r["orbit_dim"] == 216);
      }
    CHECK(found);
    const auto non_sl2 = json_lines(run({"export", "--table", "non-sl2"}).out);
    REQUIRE(non_sl2.size() == 6);
    for (const auto& r : non_sl2) CHECK(r["orbit_dim_mismatch"] == false);
    const auto csv = lines(run({"export", "--kind", "E7", "--format", "csv"}).out);
    CHECK(csv.size() == 1 + 26);
  }

  TEST_CASE("export writes files and reports bad paths") {
    const auto path = std::filesystem::temp_directory_path() / "richardson_export_test.json";
    const Run ok = run({"export", "--kind", "G2", "--out", path.string()});
    REQUIRE(ok.code == kExitOk);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(json_lines(buf.str()).size() == 3);
    std::filesystem::remove(path);

    const Run bad = run({"export", "--kind", "G2", "--out", "/nonexistent/dir/x.json"});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("/nonexistent/dir/x.json") != std::string::npos);
  }
}
