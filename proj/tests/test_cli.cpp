#include <doctest.h>

#include "gon/io.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>

using namespace gon;

namespace {

struct Run {
  int code;
  std::string out;
  Json doc;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::vector<std::string>& args) {
  std::string cmd = GON_CLI_PATH;
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) out.append(buf.data(), n);
  const int status = pclose(p);
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, Json()};
  r.doc = Json::parse(out);
  CHECK_MESSAGE(validate_output(r.doc).empty(), out);
  return r;
}

}  // namespace

TEST_CASE("documented examples") {
  const auto m = run({"minima", "--body", R"({"type":"cube","n":2})", "--lattice", R"({"basis":[["2","0"],["1","3"]]})",
                      "--count", "2"});
  CHECK(m.code == 0);
  CHECK(m.doc["minima"] == Json::parse(R"(["2","3"])"));

  const auto s = run({"sigma", "--n", "4"});
  CHECK(s.code == 0);
  CHECK(s.doc["sigma"] == "2/3");

  const auto scan = run({"scan", "--n", "3", "--max", "20"});
  CHECK(scan.code == 0);
  CHECK(parse_rat(scan.doc["empirical_s"].get<std::string>()) <= Rat(4, 3));
  CHECK(scan.doc["c_le_s_everywhere"] == true);

  CHECK(run({"whitworth", "--beta", "1"}).doc["delta"] == "19/27");
  CHECK(run({"count", "--body", R"({"type":"cube","n":2})", "--dilate", "2"}).doc["count"] == "25");
  CHECK(run({"ehrhart", "--body", R"({"type":"cube","n":2})"}).doc["coefficients"] == Json::parse(R"(["1","4","4"])"));
  CHECK(run({"polar", "--body", R"({"type":"cube","n":3})"}).doc["volume_product"] == "32/3");
  const auto w = run({"width", "--body", R"({"type":"cube","n":2})"});
  CHECK(w.doc["width"] == "2");
  CHECK(w.doc["direction"].size() == 2);
  const auto sg = run({"siegel", "--matrix", R"({"rows":1,"cols":3,"data":[[1,2,3]]})"});
  CHECK(sg.code == 0);
  CHECK(sg.doc["product_norm"] == "2");
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--body", R"({"type":"cube","n":2})", "--checks", "minkowski_upper,bhw_upper"}).code == 0);
  // The printed Tointon bound fails on the square.
  CHECK(run({"verify", "--body", R"({"type":"cube","n":2})", "--checks", "tointon_bound"}).code == 2);

  const auto unknown = run({"minima", "--body", R"({"type":"cube","n":2})", "--frobnicate"});
  CHECK(unknown.code == 1);
  CHECK(unknown.doc["error"]["code"] == "usage");
  CHECK(run({}).code == 1);
  CHECK(run({"verify", "--body", R"({"type":"cube","n":2})", "--checks", "nope"}).code == 1);

  const auto malformed = run({"minima", "--body", "{not json"});
  CHECK(malformed.code == 1);
  CHECK(malformed.doc["error"]["code"] == "input");
  const auto schema = run({"minima", "--body", R"({"type":"box","a":["1","x"]})"});
  CHECK(schema.code == 1);
  CHECK(schema.doc["error"]["path"] == "body:/a/1");
  CHECK(run({"minima", "--body", "/nonexistent/body.json"}).code == 1);
  CHECK(run({"minima", "--body", R"({"type":"cube","n":2})", "--lattice", R"({"integer":3})"}).code == 1);

  const auto guard = run({"scan", "--n", "6", "--max", "100"});
  CHECK(guard.code == 1);
  CHECK(guard.doc["error"]["code"] == "guard");
}

TEST_CASE("output does not depend on --jobs") {
  const std::vector<std::string> corpus = {"corpus", "--seed", "9", "--instances", "6", "--sections", "3", "--max-dim", "3"};
  auto one = corpus, three = corpus;
  one.insert(one.begin(), {"--jobs", "1"});
  three.insert(three.begin(), {"--jobs", "3"});
  const auto a = run(one), b = run(three);
  CHECK(a.out == b.out);
  CHECK(a.doc["seed"] == 9);
  CHECK(a.code == (a.doc["violations"].get<int>() + a.doc["candidates"].get<int>() > 0 ? 2 : 0));

  const auto s1 = run({"--jobs", "1", "scan", "--n", "3", "--max", "9", "--records"});
  const auto s3 = run({"scan", "--n", "3", "--max", "9", "--records", "--jobs", "3"});
  CHECK(s1.out == s3.out);
}
