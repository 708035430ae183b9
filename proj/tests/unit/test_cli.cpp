#include "doctest.h"

#include "tbundle/cli/cli.hpp"
#include "tbundle/cli/report.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

using namespace tbundle;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "tbundle");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempFile {
public:
  explicit TempFile(const std::string& content) {
    path_ = std::filesystem::temp_directory_path() /
            ("tbundle_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++) + ".json");
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

const char* kPrincipal11 =
    R"({"genus":2,"monodromy":[[[1,0],[0,1]],[[1,0],[0,1]],[[1,0],[0,1]],[[1,0],[0,1]]],"euler":[1,1]})";
const char* kRotation =
    R"({"genus":2,"monodromy":[[[0,-1],[1,0]],[[1,0],[0,1]],[[1,0],[0,1]],[[1,0],[0,1]]],"euler":[5,7]})";

}  // namespace

TEST_CASE("sw0 prints both routes") {
  const auto r = invoke({"sw0", "--genus", "2", "--m", "3", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coset: -2") != std::string::npos);
  CHECK(r.out.find("routes agree: yes") != std::string::npos);
}

TEST_CASE("sw0 json mode") {
  const auto r = invoke({"--format", "json", "sw0", "--genus", "2", "--m", "3", "--n", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["coset"] == -2);
  CHECK(j["closed"] == -2);
  CHECK(j["agree"] == true);
}

TEST_CASE("sw0 outside the closed-form domain") {
  const auto r = invoke({"--format", "json", "sw0", "--genus", "2", "--m", "1", "--n", "4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["closed"].is_null());
  CHECK(j["agree"] == true);
}

TEST_CASE("swpoly") {
  auto r = invoke({"swpoly", "--genus", "2", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-2 + 1*t^1 + 1*t^4") != std::string::npos);
  r = invoke({"swpoly", "--genus", "2", "--n", "-5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 - 1*t^1 - 1*t^4") != std::string::npos);
}

TEST_CASE("big coefficients are strings in json") {
  const auto r = invoke({"--format", "json", "swpoly", "--genus", "40", "--n", "7"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool saw_string = false;
  for (const auto& c : j["coefficients"]) saw_string = saw_string || c.is_string();
  CHECK(saw_string);
}

TEST_CASE("classify principal bundle") {
  TempFile f(kPrincipal11);
  const auto r = invoke({"classify", f.path()});
  CHECK(r.code == 0);
  CHECK(r.out.find("symplectic: no (principal, mn != 0)") != std::string::npos);
  CHECK(r.out.find("H1: Z^5") != std::string::npos);
}

TEST_CASE("classify json") {
  TempFile f(kRotation);
  const auto r = invoke({"--format", "json", "classify", f.path()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["symplectic"] == true);
  CHECK(j["b1"] == 4);
  CHECK(j["cross_checks"]["spectral"] == true);
}

TEST_CASE("homology and spectral subcommands") {
  TempFile f(kRotation);
  auto r = invoke({"homology", f.path()});
  CHECK(r.code == 0);
  CHECK(r.out.find("Z^4") != std::string::npos);
  r = invoke({"--format", "json", "spectral", f.path()});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["e2"]["e11"] == 4);
  CHECK(j["e2"]["e01"] == 0);
  CHECK(j["b2"] == 6);
  CHECK(j["fiber_class_nonzero"] == true);
}

TEST_CASE("verify-parity small grid") {
  const auto r = invoke({"verify-parity", "--g", "2..4", "--mn", "-5..5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cases: 300") != std::string::npos);
  CHECK(r.out.find("all even: yes") != std::string::npos);
  CHECK(r.out.find("counterexamples: 0") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  TempFile f(kRotation);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "verify-parity", "--g", "2..5", "--mn", "-6..6"},
           {"classify", f.path()},
           {"--format", "json", "classify", f.path()}}) {
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("input errors exit 1 with a message naming the defect") {
  CHECK(invoke({}).code == 1);
  CHECK(invoke({"frobnicate"}).code == 1);
  CHECK(invoke({"sw0", "--genus", "2", "--m", "1"}).code == 1);
  CHECK(invoke({"sw0", "--genus", "2", "--m", "1", "--n", "0"}).code == 1);
  CHECK(invoke({"sw0", "--genus", "1", "--m", "1", "--n", "3"}).code == 1);
  CHECK(invoke({"swpoly", "--genus", "2", "--n", "x"}).code == 1);
  CHECK(invoke({"verify-parity", "--g", "5..2"}).code == 1);
  CHECK(invoke({"--format", "yaml", "sw0", "--genus", "2", "--m", "1", "--n", "3"}).code == 1);
  CHECK(invoke({"classify", "/nonexistent/file.json"}).code == 1);

  TempFile bad_det(R"({"genus":2,"monodromy":[[[1,1],[1,1]],[[1,0],[0,1]],[[1,0],[0,1]],[[1,0],[0,1]]],"euler":[0,0]})");
  auto r = invoke({"classify", bad_det.path()});
  CHECK(r.code == 1);
  CHECK(r.err.find("monodromy[0]") != std::string::npos);

  TempFile bad_genus(R"({"genus":1,"monodromy":[[[1,0],[0,1]],[[1,0],[0,1]]],"euler":[0,0]})");
  r = invoke({"homology", bad_genus.path()});
  CHECK(r.code == 1);
  CHECK(r.err.find("genus") != std::string::npos);

  TempFile syntax("{\"genus\": 2,");
  r = invoke({"spectral", syntax.path()});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits 0") { CHECK(invoke({"--help"}).code == 0); }

TEST_CASE("sweep report lists counterexamples") {
  sw::SweepReport rep;
  rep.cases = 1;
  rep.all_even = false;
  sw::SweepCell cell{2, 3, 3, BigInt(-3), BigInt(-2), BigInt(-2)};
  rep.counterexamples.push_back({cell, "odd value"});
  const auto text = cli::sweep_text({2, 2}, {3, 3}, rep);
  CHECK(text.find("all even: no") != std::string::npos);
  CHECK(text.find("odd value") != std::string::npos);
  const auto j = cli::sweep_json({2, 2}, {3, 3}, rep);
  CHECK(j["counterexamples"].size() == 1);
}
