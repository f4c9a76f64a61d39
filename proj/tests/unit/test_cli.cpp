#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uiseq_cli/commands.hpp"
#include "uiseq_cli/manifest.hpp"
#include "uiseq_cli/schemes.hpp"
#include "uiseq_cli/sequence_io.hpp"

using namespace uiseq;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(UISEQ_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("generate prints the M = 6 family") {
  const auto r = invoke({"generate", "--construction", "crtm", "--m", "6"});
  REQUIRE(r.code == cli::exit_ok);
  const auto doc = json::parse(r.out);
  CHECK(doc["M"] == 6);
  CHECK(doc["p"] == 7);
  CHECK(doc["q"] == 11);
  CHECK(doc["L"] == 77);
  CHECK(doc["weight"] == 7);
  REQUIRE(doc["sequences"].size() == 8);
  CHECK(doc["sequences"][0] == "77:{0,14,28,35,49,56,70}");
  CHECK(doc["sequences"][5] == "77:{0,12,24,36,48,60,72}");

  const auto text = invoke({"generate", "--construction", "crtm", "--m", "6", "--format", "text"});
  CHECK(cli::parse_sequence_set(text.out) == cli::parse_sequence_set(cli::read_file(data("example2_crtm6.txt"))));

  const auto crt = json::parse(invoke({"generate", "--construction", "crt", "--m", "6", "--users", "5,7"}).out);
  CHECK(crt["weight"] == 6);
  CHECK(crt["sequences"] == json::array({"77:{0,12,24,36,48,60}", "77:{0,11,22,33,44,66}"}));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({"generate", "--construction", "crtm", "--m", "3"}).code == cli::exit_usage);
  CHECK(invoke({"generate", "--construction", "eps", "--m", "6"}).code == cli::exit_usage);
  CHECK(invoke({"generate", "--construction", "crtm", "--m", "6", "--users", "0,0"}).code == cli::exit_usage);
  CHECK(invoke({}).code == cli::exit_usage);
  CHECK(invoke({"frobnicate"}).code == cli::exit_usage);
  CHECK(invoke({"simulate", "--scheme", "random", "--m", "10", "--pa", "0.05"}).code == cli::exit_usage);
  CHECK(invoke({"bounds", "--m-range", "9..4"}).code == cli::exit_usage);
  CHECK(invoke({"--help"}).code == cli::exit_ok);
}

TEST_CASE("analyze reports the worked-example tables") {
  const auto r = invoke({"analyze", "--input", data("example1.txt")});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["lambda_c"] == 2);
  CHECK(doc["H"][1][3] == 2);
  CHECK(doc["H"][0][1] == 1);
  CHECK(doc["best_interferers"][0] == json::array({1, 2, 3}));
  CHECK(doc["maximizing_shifts"][2][3] == json::array({0, 8}));
  CHECK(doc["sequences"][0]["exceptional"] == true);
  CHECK(doc["sequences"][0]["generator"] == 15);
  CHECK(doc["sequences"][2]["progression"]["step"] == 8);

  const auto ex3 = json::parse(invoke({"analyze", "--input", data("example3.json")}).out);
  CHECK(ex3["lambda_c"] == 2);
}

TEST_CASE("verify exit codes") {
  const auto ui = invoke({"verify", "--input", data("example1.txt")});
  CHECK(ui.code == cli::exit_ok);
  CHECK(json::parse(ui.out)["method"] == "exhaustive");

  const auto lemma = invoke({"verify", "--input", data("example1.txt"), "--method", "lemma2"});
  CHECK(lemma.code == cli::exit_ok);
  CHECK(json::parse(lemma.out)["difference_form_is_ui"] == true);

  const auto bad = invoke({"verify", "--input", data("not_ui.txt")});
  CHECK(bad.code == cli::exit_not_ui);
  CHECK(json::parse(bad.out)["witness"]["kind"] == "cover");

  const auto budget = invoke({"verify", "--input", data("example1.txt"), "--method", "exhaustive", "--budget", "10"});
  CHECK(budget.code == cli::exit_exhausted);

  const auto ex2 = invoke({"verify", "--input", data("example2_crtm6.txt"), "--budget", "1000"});
  // Eight members of weight 7: not M + 1, so auto falls back to cover search.
  CHECK(json::parse(ex2.out)["method"] == "cover_search");
}

TEST_CASE("bounds CSV") {
  const auto r = invoke({"bounds", "--m-range", "6..6"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "M,p_M,L,lb_general,lb_equi_difference,ratio\n6,7,77,32,29,1.06944\n");
  CHECK(invoke({"bounds", "--m-range", "4..10", "--pi-mode", "packing"}).code == 0);
}

TEST_CASE("simulate and table") {
  const auto r = invoke({"simulate", "--scheme", "crtm", "--m", "6", "--samples", "2000", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("scheme,M,p_a,p_s,individual,group\ncrtm,6,1,,", 0) == 0);

  const auto j = json::parse(invoke({"simulate", "--scheme", "random", "--m", "10", "--ps", "matched", "--samples", "1000"}).out);
  CHECK(j["config"]["p_s"].get<double>() == doctest::Approx(11.0 / 209.0));
  CHECK(j["stats"]["samples_used"] == 1000);

  const auto a = invoke({"simulate", "--scheme", "random", "--m", "8", "--pa", "0.5", "--samples", "5000", "--seed", "4"});
  const auto b = invoke({"simulate", "--scheme", "random", "--m", "8", "--pa", "0.5", "--samples", "5000", "--seed", "4",
                      "--threads", "3"});
  CHECK(a.out == b.out);

  const auto exhausted = invoke({"simulate", "--scheme", "random", "--m", "10", "--ps", "0.0001", "--samples", "20",
                              "--horizon", "5"});
  CHECK(exhausted.code == cli::exit_exhausted);

  const auto t = invoke({"table", "--paper-table", "3", "--pa", "1,0.5", "--samples", "2000"});
  REQUIRE(t.code == 0);
  std::istringstream lines(t.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "metric,scheme,1,0.5");
  CHECK(rows[1].rfind("individual,random_optimal,", 0) == 0);
  CHECK(rows[6].rfind("group,crtm,", 0) == 0);
  CHECK(invoke({"table", "--paper-table", "2", "--m", "8", "--samples", "500"}).code == 0);
  CHECK(invoke({"table", "--paper-table", "5"}).code == cli::exit_usage);
}

TEST_CASE("manifests record digests and replay bit-exactly") {
  const auto dir = std::filesystem::temp_directory_path() / "uiseq_cli_test";
  std::filesystem::create_directories(dir);
  const auto base = (dir / "sim").string();
  const auto r = invoke({"simulate", "--scheme", "crt", "--m", "8", "--pa", "0.7", "--samples", "3000", "--seed", "12",
                      "--output", base});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const auto manifest = json::parse(cli::read_file(base + ".manifest.json"));
  CHECK(manifest["seed"] == 12);
  CHECK(manifest["version"] == std::string(cli::artifact_version()));
  CHECK(manifest["rng"].get<std::string>().find("xoshiro256") != std::string::npos);
  REQUIRE(manifest["outputs"].size() == 2);
  CHECK(manifest["outputs"][0]["sha256"] == cli::sha256_file(base + ".json"));
  CHECK_FALSE(manifest.contains("timestamp"));

  const auto replay = invoke({"replay", base + ".manifest.json"});
  CHECK(replay.code == 0);
  CHECK(json::parse(replay.out)["reproduced"] == true);

  // Tampering with an output is detected.
  { std::ofstream(base + ".csv") << "tampered\n"; }
  const auto again = json::parse(cli::read_file(base + ".manifest.json"));
  CHECK(again["outputs"][1]["sha256"] != cli::sha256_file(base + ".csv"));

  const auto in_manifest = (dir / "verify.manifest.json").string();
  CHECK(invoke({"verify", "--input", data("example1.txt"), "--manifest", in_manifest}).code == 0);
  const auto vm = json::parse(cli::read_file(in_manifest));
  CHECK(vm["inputs"][0]["sha256"] == cli::sha256_file(data("example1.txt")));
  CHECK(vm.contains("stdout_sha256"));
  CHECK(json::parse(invoke({"replay", in_manifest}).out)["reproduced"] == true);
  std::filesystem::remove_all(dir);
}

TEST_CASE("sha256 known answer") {
  CHECK(cli::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("sequence input formats") {
  CHECK(cli::parse_sequence_set("[\"5:{0,1}\", {\"period\": 5, \"elements\": [2]}]").size() == 2);
  CHECK_THROWS_AS(cli::parse_sequence_set("{\"nope\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sequence_set("# only a comment\n"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_sequence_set("5:{0,1}\n6:{0}\n"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(cli::parse_sequence_set("5:{0,1}\n5:{0,9}\n"), doctest::Contains("line 2"), std::invalid_argument);
}

TEST_CASE("p_s resolution") {
  CHECK(cli::resolve_ps("optimal", 10, 0.5) == doctest::Approx(0.2));
  CHECK(cli::resolve_ps("matched", 8, 1.0) == doctest::Approx(9.0 / 165.0));
  CHECK(cli::resolve_ps("0.25", 8, 1.0) == 0.25);
  CHECK_THROWS_AS(cli::resolve_ps("abc", 8, 1.0), std::invalid_argument);
}
