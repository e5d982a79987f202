#include "immanants/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using immanants::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("range parsing") {
  using immanants::cli::parse_range;
  CHECK(parse_range("5") == std::pair<long, long>{5, 5});
  CHECK(parse_range("6..10") == std::pair<long, long>{6, 10});
  CHECK_THROWS_AS(parse_range("10..6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("a..6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("3.."), std::invalid_argument);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"verify", "--prop", "9"}).code == 2);
  CHECK(call({"verify", "--prop", "2", "--n", "3"}).code == 2);
  CHECK(call({"verify", "--prop", "1", "--N", "x"}).code == 2);
  CHECK(call({"conjecture", "--n", "7"}).code == 2);
  CHECK(call({"mc", "--ensemble", "gue", "--gamma", "2", "--N", "4"}).code == 2);
  CHECK(call({"mc", "--ensemble", "coe", "--gamma", "2", "--N", "4", "--power", "4"}).code == 2);
  CHECK(call({"table", "--formula", "nope", "--N", "3"}).code == 2);
  CHECK(call({"table", "--formula", "coe", "--gamma", "1", "--format", "xml", "--N", "3"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const auto r = call({"verify", "--prop", "1", "--n", "3", "--N", "6..10", "--format", "json"});
  CHECK(r.code == 0);
  const auto records = nlohmann::json::parse(r.out);
  CHECK(records.size() == 15);
  for (const auto& rec : records) {
    CHECK(rec["command"] == "verify");
    CHECK(rec["equal"] == true);
    CHECK(rec.contains("inputs"));
    CHECK(rec["exact"].get<std::string>().find('/') != std::string::npos);
  }
  const auto p2 = call({"verify", "--prop", "2", "--n", "2", "--N", "5", "--format", "json"});
  CHECK(p2.code == 0);
  CHECK(nlohmann::json::parse(p2.out)[0]["exact"] == "3/350");
  for (const char* prop : {"3", "4", "5"}) {
    CAPTURE(prop);
    CHECK(call({"verify", "--prop", prop, "--n", "2"}).code == 0);
  }
  const auto poles = call({"verify", "--prop", "4", "--gamma", "2", "--N", "1..3"});
  CHECK(poles.code == 0);
  CHECK(poles.err.find("notice: skipping") != std::string::npos);
}

TEST_CASE("conjecture") {
  const auto r = call({"conjecture", "--n", "2", "--format", "json"});
  CHECK(r.code == 0);
  const auto records = nlohmann::json::parse(r.out);
  CHECK(records.size() == 2);
  for (const auto& rec : records) {
    CHECK(rec["verified"] == true);
    CHECK(rec["certified"] == true);
  }
  const auto six = call({"conjecture", "--n", "6", "--format", "json"});
  CHECK(six.code == 0);
  CHECK(nlohmann::json::parse(six.out).size() == 11);
  const auto forced = call({"conjecture", "--n", "7", "--force", "--N", "15..20"});
  CHECK(forced.code == 0);
  CHECK(forced.err.find("warning") != std::string::npos);
}

TEST_CASE("mc") {
  const std::vector<std::string> args{"mc",        "--ensemble", "unitary", "--gamma", "2",      "--N",
                                      "4",         "--samples",  "100000",  "--seed",  "42",     "--format",
                                      "json"};
  const auto a = call(args);
  CHECK(a.code == 0);
  const auto rec = nlohmann::json::parse(a.out)[0];
  CHECK(rec["exact"] == "1/10");
  for (const char* key : {"command", "inputs", "exact", "mean", "stderr", "z", "samples", "seed"}) CHECK(rec.contains(key));
  CHECK(std::abs(rec["z"].get<double>()) <= 4.0);
  CHECK(call(args).out == a.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(call(threaded).out == a.out);

  const auto coe = call({"mc", "--ensemble", "coe", "--gamma", "1,1", "--N", "5", "--samples", "100000", "--seed", "7",
                         "--format", "json"});
  CHECK(coe.code == 0);
  CHECK(nlohmann::json::parse(coe.out)[0]["exact"] == "1/5");
}

TEST_CASE("table") {
  const auto csv = call({"table", "--formula", "coe", "--gamma-all", "--n", "3", "--N", "8", "--format", "csv"});
  CHECK(csv.code == 0);
  std::istringstream lines(csv.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "command,formula,gamma,N,exact");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 3);

  const auto orth = call({"table", "--formula", "orth", "--gamma", "1", "--N", "5"});
  CHECK(orth.out.find("exact=1/5") != std::string::npos);

  const auto prop2 = call({"table", "--formula", "prop2", "--n", "1..4", "--N", "10..20", "--format", "json"});
  CHECK(prop2.code == 0);
  CHECK(nlohmann::json::parse(prop2.out).size() == 44);

  const auto sym = call({"table", "--formula", "orth", "--gamma", "2", "--symbolic", "--format", "json"});
  CHECK(nlohmann::json::parse(sym.out)[0]["symbolic"] == "2 / ((N - 1) (N + 2))");

  const auto wg = call({"table", "--formula", "wg-unitary", "--gamma", "2", "--N", "3"});
  CHECK(wg.out.find("exact=-1/24") != std::string::npos);
}

TEST_CASE("output file") {
  const std::string path = "cli_test_output.json";
  const auto r = call({"table", "--formula", "orth", "--gamma", "1", "--N", "5", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream file(path);
  const auto records = nlohmann::json::parse(file);
  CHECK(records[0]["exact"] == "1/5");
  std::remove(path.c_str());
}
