#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tubix/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = tubix::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string family(const std::string& kind, int n) {
  auto r = run({"family", kind, std::to_string(n)});
  REQUIRE(r.code == 0);
  return r.out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "tubix-cli-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("family output parses back byte for byte") {
  for (const char* kind : {"path", "cycle", "complete", "star", "empty"}) {
    std::string g = family(kind, 5);
    auto p = scratch(std::string(kind) + ".json");
    write(p, g);
    // the tubes command accepts both a file and standard input
    CHECK(run({"tubes", p.string()}).out == run({"tubes", "--stdin"}, g).out);
  }
  CHECK(run({"family", "wheel", "4"}).code == tubix::cli::kExitUsage);
}

TEST_CASE("realize pipeline") {
  auto r = run({"realize", "--stdin"}, family("path", 3));
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["scheme"] == "power3");
  REQUIRE(j["vertices"].size() == 5);
  std::set<std::vector<std::string>> points;
  for (const auto& v : j["vertices"]) points.insert(v["point"].get<std::vector<std::string>>());
  CHECK(points == std::set<std::vector<std::string>>{
                      {"0", "3", "0"}, {"0", "1", "2"}, {"1", "0", "2"}, {"2", "0", "1"}, {"2", "1", "0"}});
  CHECK(run({"count"}, r.out).out == "5\n");

  auto csv = run({"realize", "--stdin", "--output", "csv"}, family("complete", 3));
  CHECK(lines(csv.out) == 7);
  CHECK(csv.out.rfind("tubing,x0,x1,x2\n", 0) == 0);

  auto text = run({"realize", "--stdin", "--output", "text", "--scheme", "loday"}, family("path", 3));
  CHECK(text.out.find("(1,4,1)") != std::string::npos);
}

TEST_CASE("tubings and fvector") {
  CHECK(run({"count"}, run({"tubings", "--stdin", "--max-only"}, family("complete", 3)).out).out == "6\n");
  CHECK(run({"count"}, run({"tubings", "--stdin", "--max-only"}, family("cycle", 4)).out).out == "20\n");
  CHECK(run({"count"}, run({"tubings", "--stdin", "-k", "1"}, family("path", 4)).out).out == "9\n");
  CHECK(run({"fvector", "--stdin"}, family("complete", 4)).out == "[14,36,24]\n");
  CHECK(run({"fvector", "--stdin", "--output", "text"}, family("path", 4)).out == "9 21 14\n");
  CHECK(run({"tubings", "--stdin", "-k", "1", "--max-only"}, family("path", 3)).code == tubix::cli::kExitUsage);
}

TEST_CASE("hrep") {
  auto r = run({"hrep", "--stdin", "--output", "text"}, family("path", 3));
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("x0 + x1 + x2 = 3\n", 0) == 0);
  CHECK(r.out.find("x0 + x1 >= 1\n") != std::string::npos);
  CHECK(lines(r.out) == 6);
}

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "--stdin"}, family("cycle", 4));
  CHECK(ok.code == tubix::cli::kExitOk);
  CHECK(nlohmann::json::parse(ok.out)["verdict"] == "pass");

  auto bad = run({"verify", "--stdin", "--scheme", "loday"}, family("cycle", 4));
  CHECK(bad.code == tubix::cli::kExitVerifyFailed);
  CHECK(nlohmann::json::parse(bad.out)["verdict"] == "fail");

  auto skipped = run({"verify", "--stdin", "--oracle-cap", "0", "--output", "text"}, family("path", 4));
  CHECK(skipped.code == tubix::cli::kExitIncomplete);
  CHECK(skipped.out.find("oracle: skipped") != std::string::npos);

  CHECK(run({"verify", "--stdin", "--scheme", "bogus"}, family("path", 3)).code == tubix::cli::kExitUsage);
  CHECK(run({"verify", "--stdin", "--oracle-cap", "lots"}, family("path", 3)).code == tubix::cli::kExitUsage);
  CHECK(run({"nonsense"}).code == tubix::cli::kExitUsage);
  CHECK(run({}).code == tubix::cli::kExitUsage);
  CHECK(run({"verify", "--stdin", "--max-n", "3"}, family("path", 4)).code == tubix::cli::kExitUsage);
}

TEST_CASE("data and I/O errors") {
  auto bad = run({"tubes", "--stdin"}, R"({"n": 3, "edges": [[0, 0]]})");
  CHECK(bad.code == tubix::cli::kExitDataError);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"tubes", "--stdin"}, "not json").code == tubix::cli::kExitDataError);
  CHECK(run({"tubes", "/nonexistent/graph.json"}).code == tubix::cli::kExitIoError);
  CHECK(run({"realize", "--stdin", "-o", "/nonexistent/dir/out.json"}, family("path", 3)).code ==
        tubix::cli::kExitIoError);
}

TEST_CASE("-o writes the same bytes as standard output") {
  auto p = scratch("vertices.json");
  auto to_file = run({"realize", "--stdin", "-o", p.string()}, family("star", 4));
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(p) == run({"realize", "--stdin"}, family("star", 4)).out);
}

TEST_CASE("custom scheme file") {
  auto p = scratch("weights.json");
  write(p, R"(["0", "1", "3"])");
  auto r = run({"realize", "--stdin", "--scheme", "custom:" + p.string(), "--output", "text"}, family("path", 3));
  CHECK(r.code == 0);
  CHECK(r.out == run({"realize", "--stdin", "--output", "text"}, family("path", 3)).out);
  write(p, R"(["0", "1"])");
  CHECK(run({"realize", "--stdin", "--scheme", "custom:" + p.string()}, family("path", 3)).code ==
        tubix::cli::kExitDataError);
}

TEST_CASE("survey") {
  auto all = run({"survey", "--n", "3"});
  CHECK(all.code == 0);
  CHECK(lines(all.out) == 8);
  for (std::istringstream in(all.out); !in.eof();) {
    std::string line;
    if (!std::getline(in, line) || line.empty()) continue;
    CHECK(nlohmann::json::parse(line)["verdict"] == "pass");
  }
  CHECK(lines(run({"survey", "--n", "3", "--connected-only"}).out) == 4);
  CHECK(run({"survey", "--n", "3", "--jobs", "2"}).out == all.out);
  auto csv = run({"survey", "--n", "3", "--output", "csv"});
  CHECK(lines(csv.out) == 9);

  auto loday = run({"survey", "--n", "4", "--connected-only", "--scheme", "loday", "--stop-on-fail"});
  CHECK(loday.code == tubix::cli::kExitVerifyFailed);
  std::string last = loday.out.substr(loday.out.rfind('\n', loday.out.size() - 2) + 1);
  auto j = nlohmann::json::parse(last);
  CHECK(j["verdict"] == "fail");
  CHECK(j.contains("failed_check"));
  CHECK(j.contains("witness"));

  CHECK(run({"survey", "--n", "1"}).code == tubix::cli::kExitUsage);
}

TEST_CASE("weight-check") {
  auto p3 = run({"weight-check", "--n", "10"});
  CHECK(p3.code == 0);
  CHECK(nlohmann::json::parse(p3.out)["pass"] == true);
  auto loday = nlohmann::json::parse(run({"weight-check", "--n", "10", "--scheme", "loday"}).out);
  CHECK(loday["pass"] == false);
  CHECK(loday["first_failure"] == 3);
}

TEST_CASE("export-off") {
  auto r = run({"export-off", "--stdin"}, family("path", 4));
  CHECK(r.code == 0);
  CHECK(r.out.rfind("OFF\n14 9 21\n", 0) == 0);
  CHECK(run({"export-off", "--stdin"}, family("path", 3)).code == tubix::cli::kExitUsage);
  CHECK(run({"export-off", "--stdin", "--scheme", "loday"}, family("cycle", 4)).code == tubix::cli::kExitVerifyFailed);
}
