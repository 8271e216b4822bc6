#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "exactlab/cli.hpp"

using exactlab::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string kGolden = EXACTLAB_GOLDEN_DIR;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("worked examples") {
    CHECK(invoke({"radix", "to-frac", "0.13(42)_10"}).out == "443/3300\n");
    CHECK(invoke({"series", "e", "--digits", "7"}).out == "2.7182818\n");
    CHECK(invoke({"num", "binom", "49", "6"}).out == "13983816\n");
    CHECK(invoke({"num", "sum", "christmas", "12"}).out == "364\n");
    CHECK(invoke({"radix", "expand", "1/3", "--base", "8"}).out == "0.(25)_8\n");
    CHECK(invoke({"--base", "16", "radix", "expand", "2/3"}).out == "0.(A)_16\n");
    const auto t = invoke({"logic", "table", "p -> q"});
    CHECK(t.code == 0);
    CHECK(t.out == "p | q | p -> q\n--+---+-------\nT | T | T\nT | F | F\nF | T | T\nF | F | T\n");
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({}).code == 1);
    const auto unknown = invoke({"frobnicate"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("Usage") != std::string::npos);
    CHECK(invoke({"logic"}).code == 1);
    CHECK(invoke({"num", "binom", "5"}).code == 1);
    CHECK(invoke({"--format", "xml", "num", "fact", "3"}).code == 1);
    CHECK(invoke({"logic", "table", "p &"}).code == 1);
    CHECK(invoke({"--tol", "0", "series", "exp", "1"}).code == 2);
    CHECK(invoke({"num", "arith", "1", "/", "0"}).code == 2);
    CHECK(invoke({"series", "trig", "sin", "3"}).code == 2);
    CHECK(invoke({"root", "sqrt", "-2"}).code == 2);
    CHECK(invoke({"num", "zmod", "6", "1", "/", "2"}).code == 2);
    CHECK(invoke({"logic", "transform", "p & q"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
  }

  TEST_CASE("golden files") {
    const json cases = json::parse(slurp(kGolden + "/cases.json"));
    const bool update = std::getenv("EXACTLAB_UPDATE_GOLDEN") != nullptr;
    REQUIRE(cases.size() > 20);
    for (const auto& c : cases) {
      const std::string name = c.at("name").get<std::string>();
      CAPTURE(name);
      const auto r = invoke(c.at("args").get<std::vector<std::string>>());
      CHECK(r.code == c.value("exit", 0));
      const std::string path = kGolden + "/" + name + ".out";
      if (update) std::ofstream(path, std::ios::binary) << r.out;
      CHECK(r.out == slurp(path));
      // Byte-stable across runs.
      CHECK(invoke(c.at("args").get<std::vector<std::string>>()).out == r.out);
    }
  }

  TEST_CASE("json output round-trips") {
    const json cases = json::parse(slurp(kGolden + "/cases.json"));
    int seen = 0;
    for (const auto& c : cases) {
      auto args = c.at("args").get<std::vector<std::string>>();
      if (c.value("exit", 0) != 0 || std::find(args.begin(), args.end(), "--help") != args.end()) continue;
      args.insert(args.begin(), {"--format", "json"});
      CAPTURE(c.at("name").get<std::string>());
      const auto r = invoke(args);
      REQUIRE(r.code == 0);
      const json j = json::parse(r.out);
      CHECK(j.dump(2) + "\n" == r.out);
      CHECK(json::parse(j.dump()) == j);
      ++seen;
    }
    CHECK(seen > 20);
  }

  TEST_CASE("csv output") {
    CHECK(invoke({"--format", "csv", "logic", "table", "p -> q"}).out == "p,q,p -> q\nT,T,T\nT,F,F\nF,T,T\nF,F,T\n");
    CHECK(invoke({"--format", "csv", "series", "fib", "3"}).out == "n,fib,binet\n0,0,0\n1,1,1\n2,1,1\n3,2,2\n");
  }
}
