#include "rrcf/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using rrcf::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval") {
  const Result r = call({"eval", "lambda-star", "1/1", "--digits", "80", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["fn"] == "lambda-star");
  CHECK(j["digits"] == 30);
  CHECK(j["value"] == "0.707106781186547524400844362105");
  CHECK(nlohmann::json::parse(j.dump()) == j);

  const Result g = call({"eval", "R", "4", "--digits", "70"});
  CHECK(g.out == "R(4/1) = 0.28407904384041229603\n");
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == rrcf::cli::kUsage);
  CHECK(call({"eval", "nope", "1"}).code == rrcf::cli::kUsage);
  CHECK(call({"eval", "R", "1", "--digits", "10"}).code == rrcf::cli::kUsage);
  CHECK(call({"eval", "R", "0/1"}).code == rrcf::cli::kDomain);
  CHECK(call({"recognize", "--literal", "1.0", "--yi", "13/2"}).code == rrcf::cli::kUsage);
  CHECK(call({"reproduce", "thm9"}).code == rrcf::cli::kUsage);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("recognize") {
  const Result r = call({"recognize", "--literal", "1.0", "--degree", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("x-1 ", 0) == 0);

  const Result none = call({"recognize", "--literal", "0.1234567890123", "--degree", "2", "--height", "3", "--json"});
  CHECK(none.code == 0);
  CHECK(nlohmann::json::parse(none.out)["verdict"] == "none");

  const Result field = call({"recognize", "--literal", "1.5", "--basis", "1,2", "--json"});
  CHECK(nlohmann::json::parse(field.out)["field_element"]["text"] == "3/2");
}

TEST_CASE("verify and perturbation") {
  CHECK(call({"verify", "identities", "--q", "0.3", "--digits", "100"}).code == 0);
  CHECK(call({"verify", "order25", "130", "--digits", "120", "--perturb", "1e-15"}).code == rrcf::cli::kRefuted);
}

TEST_CASE("search is resumable") {
  const std::string path = "cli_search_test.jsonl";
  std::remove(path.c_str());
  const Result first = call({"search", "--num", "25:26", "--den", "5", "--out", path});
  CHECK(first.code == 0);
  const Result again = call({"search", "--num", "25:26", "--den", "5", "--out", path});
  CHECK(again.out.find("0 evaluated, 2 already present") != std::string::npos);
  std::ifstream f(path);
  std::string line;
  int lines = 0;
  while (std::getline(f, line)) {
    const auto j = nlohmann::json::parse(line);
    if (j["key"] == "26/5") {
      CHECK(j["status"] == "established");
      CHECK(j["a_field"] == "208818-93240*sqrt(5)-57825*sqrt(13)+25900*sqrt(65)");
    }
    ++lines;
  }
  CHECK(lines == 2);
  std::remove(path.c_str());
}

TEST_CASE("catalog check") {
  CHECK(call({"catalog", "--check", "--digits", "120"}).code == 0);
  const auto j = nlohmann::json::parse(call({"catalog", "--json"}).out);
  CHECK(j["version"] == 1);
}
