#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace idensity;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "idensity");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(IDENSITY_DATA_DIR) + "/" + name; }

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("worked example") {
    Result r = run({"paper-example"});
    CHECK(r.code == 0);
    CHECK(r.out.find("golden: all values match") != std::string::npos);
    Result j = run({"--json", "paper-example"});
    CHECK(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema_version"] == 1);
  }

  TEST_CASE("sequence commands") {
    CHECK(starts_with(run({"--ideal", "fin", "sequence", "limsup", "--file", data("example_x.seq")}).out, "1/1"));
    CHECK(starts_with(run({"--ideal", "fin", "sequence", "liminf", "--file", data("example_x.seq")}).out, "0/1"));
    CHECK(starts_with(run({"sequence", "liminf", "--file", data("example_x.seq")}).out, "1/1"));
    CHECK(starts_with(run({"sequence", "eval", "--file", data("example_x.seq"), "--n", "9"}).out, "1/9"));
    Result c = run({"--json", "sequence", "convergent", "--file", data("example_x.seq")});
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out)["schema_version"] == 1);
  }

  TEST_CASE("density and theta commands") {
    Result c = run({"density", "classify", "--set", "[0,1]", "--point", "0"});
    CHECK(c.code == 0);
    CHECK(c.out.find("NotExist lower 0/1 upper 1/1") != std::string::npos);
    CHECK(starts_with(run({"theta", "--set", "[0,1]|[1,2]"}).out, "(0,2)"));
    CHECK(run({"density", "along", "--set", "(-1,1)", "--gen", data("example_k.gen")}).code == 0);
    Result j = run({"--json", "density", "classify", "--set", "(-1,1)", "--point", "0"});
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc.dump().find("One") != std::string::npos);
  }

  TEST_CASE("topology commands") {
    Result b = run({"topology", "borel", "--set", "(0,1)|{5}"});
    CHECK(b.code == 0);
    CHECK(b.out.find("(0,1)") != std::string::npos);
    Result o = run({"topology", "open", "--set", "[0,1]"});
    CHECK(o.code == 0);
    CHECK(o.out.find("false") != std::string::npos);
    Result f = run({"topology", "check", "--sets", data("family.sets")});
    CHECK(f.code == 0);
    CHECK(f.out.find("fail 0") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"theta", "--set", "[0,1"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--ideal", "fin", "density", "along", "--set", "(-1,1)", "--gen", data("example_k.gen")}).code == 3);
    CHECK(cli::exit_code(ErrorCode::GoldenMismatch) == 4);
    CHECK(cli::exit_code(ErrorCode::InvariantBreach) == 1);
    Result j = run({"--json", "theta", "--set", "[0,1"});
    CHECK(j.code == 2);
    auto doc = nlohmann::json::parse(j.out.empty() ? j.err : j.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["error"]["code"] == "ParseError");
  }

  TEST_CASE("random property runs are deterministic") {
    Result a = run({"topology", "check", "--random", "5", "--seed", "7", "--json"});
    Result b = run({"topology", "check", "--random", "5", "--seed", "7", "--json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["schema_version"] == 1);
  }
}
