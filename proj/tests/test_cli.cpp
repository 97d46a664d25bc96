#include <doctest.h>

#include <regex>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "youngrep/perm.hpp"

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = youngrep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<long> integers(const std::string &text) {
  std::vector<long> out;
  static const std::regex number("-?[0-9]+");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number);
       it != std::sregex_iterator(); ++it)
    out.push_back(std::stol(it->str()));
  return out;
}

std::string after(const std::string &text, const std::string &marker) {
  const auto pos = text.find(marker);
  REQUIRE(pos != std::string::npos);
  return text.substr(pos + marker.size());
}

std::string first_line(const std::string &text) { return text.substr(0, text.find('\n')); }

} // namespace

TEST_CASE("matrix, text") {
  const auto r = run({"matrix", "--shape", "2,1,1", "--perm", "(3 4)", "--order", "paper"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("t1 = 1,2/3/4") != std::string::npos);
  CHECK(integers(after(r.out, "matrix:")) == std::vector<long>{-1, 0, 0, 0, 0, 1, 0, 1, 0});

  const auto one = run({"matrix", "--shape", "4", "--perm", "e"});
  REQUIRE(one.code == 0);
  CHECK(integers(after(one.out, "matrix:")) == std::vector<long>{1});
}

TEST_CASE("matrix, json") {
  const auto r = run({"matrix", "--shape", "3,1", "--perm", "(1 2 3 4)", "--order", "paper",
                      "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["shape"] == json::array({3, 1}));
  CHECK(doc["perm"] == "(1 2 3 4)");
  CHECK(doc["order"] == "paper");
  CHECK(doc["basis"] == json::array({"1,3,4/2", "1,2,4/3", "1,2,3/4"}));
  const auto m = doc["matrix"].get<std::vector<std::vector<long>>>();
  REQUIRE(m.size() == 3);
  CHECK(m[0][0] + m[1][1] + m[2][2] == -1);
}

TEST_CASE("matrix json re-renders byte-identically") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"1", "[1]"}, {"2,1,1", "(1 4 2)"}, {"3,2", "(1 4)(2 5 3)"}};
  for (const auto &[shape, perm] : cases) {
    const auto r = run({"matrix", "--shape", shape, "--perm", perm, "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(ordered_json::parse(r.out).dump() + "\n" == r.out);
  }
}

TEST_CASE("text and latex show the same entries") {
  for (const auto &perm : {"(1 2 3 4 5)", "(1 3)(2 5)", "e"}) {
    const auto text = run({"matrix", "--shape", "3,1,1", "--perm", perm});
    const auto latex = run({"matrix", "--shape", "3,1,1", "--perm", perm, "--format", "latex"});
    REQUIRE(text.code == 0);
    REQUIRE(latex.code == 0);
    CHECK(latex.out.find("\\begin{bmatrix}") != std::string::npos);
    CHECK(integers(after(text.out, "matrix:")) == integers(after(latex.out, "\\begin{bmatrix}")));
  }
}

TEST_CASE("matrix exit codes") {
  CHECK(run({"matrix", "--shape", "3,2", "--order", "paper"}).code == 3);
  CHECK(run({"matrix", "--shape", "1,3"}).code == 2);
  CHECK(run({"matrix", "--shape", "3,1", "--perm", "(1 5)"}).code == 2);
  CHECK(run({"matrix", "--shape", "3,1", "--format", "yaml"}).code == 2);
  CHECK(run({"matrix", "--shape", "3,1", "--order", "lex"}).code == 2);
  CHECK(run({"matrix", "--shape", "3,1", "--n", "5"}).code == 2);
  CHECK(run({"matrix"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("straighten") {
  const auto a = run({"straighten", "--shape", "2,1,1", "--tableau", "2,1/3/4", "--order", "paper"});
  REQUIRE(a.code == 0);
  CHECK(a.out.find("expansion: +t1 -t2 +t3") != std::string::npos);
  CHECK(a.out.find("A={2,3,4} B={1}") != std::string::npos);

  const auto b = run({"straighten", "--shape", "2,2", "--tableau", "1,2/3,4", "--order", "paper"});
  REQUIRE(b.code == 0);
  CHECK(b.out.find("expansion: +t1\n") != std::string::npos);

  const auto c = run({"straighten", "--shape", "3,1", "--tableau", "2,1,3/4", "--order", "paper"});
  REQUIRE(c.code == 0);
  CHECK(c.out.find("expansion: +t3 -t1") != std::string::npos);
  CHECK(c.out.find("1,4,3/2") != std::string::npos);

  const auto j = run({"straighten", "--tableau", "213/4", "--order", "paper", "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out)["coefficients"] == json::array({-1, 0, 1}));

  const auto l = run({"straighten", "--tableau", "213/4", "--order", "paper", "--format", "latex"});
  REQUIRE(l.code == 0);
  CHECK(l.out.find("= e_{t_{3}} - e_{t_{1}}") != std::string::npos);
}

TEST_CASE("straighten exit codes") {
  CHECK(run({"straighten", "--tableau", "2,1/3/x"}).code == 2);
  CHECK(run({"straighten", "--tableau", "1,1/3/4"}).code == 2);
  CHECK(run({"straighten", "--shape", "2,2", "--tableau", "2,1/3/4"}).code == 2);
  CHECK(run({"straighten", "--tableau", "21/3", "--order", "paper"}).code == 3);
}

TEST_CASE("chartable") {
  const auto text = run({"chartable", "--n", "4"});
  REQUIRE(text.code == 0);
  CHECK(integers(first_line(after(text.out, "size"))) == std::vector<long>{1, 6, 3, 8, 6});
  CHECK(integers(first_line(after(after(text.out, "\n3,1 "), "|"))) ==
        std::vector<long>{3, 1, -1, 0, -1});
  CHECK(integers(first_line(after(after(text.out, "\n2,1,1 "), "|"))) ==
        std::vector<long>{3, -1, -1, 0, 1});

  const auto r = run({"chartable", "--n", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["class_sizes"] == json::array({1, 6, 3, 8, 6}));
  CHECK(doc["table"] == json::parse("[[1,-1,1,1,-1],[3,-1,-1,0,1],[2,0,2,-1,0],"
                                    "[3,1,-1,0,-1],[1,1,1,1,1]]"));

  const auto one = run({"chartable", "--n", "1", "--format", "json"});
  CHECK(json::parse(one.out)["table"] == json::parse("[[1]]"));

  const auto latex = run({"chartable", "--n", "3", "--format", "latex"});
  REQUIRE(latex.code == 0);
  CHECK(latex.out.find("\\begin{tabular}") != std::string::npos);

  CHECK(run({"chartable", "--n", "11"}).code == 3);
  CHECK(run({"chartable", "--n", "0"}).code == 2);
}

TEST_CASE("decompose") {
  const auto a = run({"decompose", "--perm", "(2 4)"});
  REQUIRE(a.code == 0);
  CHECK(a.out.find("word: (2 3)(3 4)(2 3)\n") != std::string::npos);
  CHECK(a.out.find("length: 3\n") != std::string::npos);
  CHECK(a.out.find("sign: -1\n") != std::string::npos);

  const auto e = run({"decompose", "--perm", "e", "--n", "4"});
  REQUIRE(e.code == 0);
  CHECK(e.out.find("word: \n") != std::string::npos);
  CHECK(e.out.find("length: 0\n") != std::string::npos);

  const auto c = run({"decompose", "--perm", "(1 3 4 2)", "--format", "json"});
  REQUIRE(c.code == 0);
  const auto doc = json::parse(c.out);
  CHECK(doc["length"] == 3);
  CHECK(youngrep::parse_cycles(doc["word"].get<std::string>(), 4) ==
        youngrep::parse_cycles("(1 3 4 2)", 4));

  CHECK(run({"decompose", "--perm", "(1 2"}).code == 2);
  CHECK(run({"decompose", "--perm", "(1 5)", "--n", "4"}).code == 2);
}

TEST_CASE("verify") {
  const auto four = run({"verify", "--n", "4", "--oracle"});
  CHECK(four.code == 0);
  CHECK(four.out.find("FAIL") == std::string::npos);
  CHECK(four.out.find("golden generator matrices") != std::string::npos);
  CHECK(four.out.find("tabloid oracle") != std::string::npos);

  const auto one = run({"verify", "--n", "1"});
  CHECK(one.code == 0);

  const auto j = run({"verify", "--n", "3", "--format", "json"});
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out)["passed"] == true);

  CHECK(run({"verify", "--n", "9"}).code == 3);
}
