#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  std::string out;
  std::string err;
  int code = -1;
};

std::string quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(const std::vector<std::string>& args) {
  const std::string err_path = std::string(SCRATCH_DIR) + "/cli_stderr.txt";
  std::string cmd = quote(PREHOM_CLI);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>" + quote(err_path);
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(err_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.err = ss.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string scratch(const std::string& name) { return std::string(SCRATCH_DIR) + "/" + name; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("table") {
    auto show = run({"table", "show", "20"});
    CHECK(show.code == 0);
    CHECK(contains(show.out, "presentation: K[x1,x2]/(x1x2, x1^3-x2^3)"));
    CHECK(contains(show.out, "dim: 6\n"));

    auto list = run({"table", "list"});
    CHECK(list.code == 0);
    CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 42);

    auto bad = run({"table", "show", "43"});
    CHECK(bad.code == 2);
    CHECK(contains(bad.err, "error"));

    auto json = nlohmann::json::parse(run({"--format", "json", "table", "list"}).out);
    CHECK(json.size() == 42);
    CHECK(json[19]["dim"] == 6);
  }

  TEST_CASE("algebra info") {
    auto cube = run({"algebra", "info", "K[x1]/(x1^3)"});
    CHECK(cube.code == 0);
    CHECK(contains(cube.out, "dim: 3\n"));
    CHECK(contains(cube.out, "local: yes"));
    CHECK(contains(cube.out, "chain: yes"));
    CHECK(contains(cube.out, "orbits: 4\n"));

    auto inf = run({"algebra", "info", "K[x1]"});
    CHECK(inf.code == 2);
    CHECK(contains(inf.err, "groebner"));
    CHECK(contains(inf.err, "infinite"));

    auto split = run({"algebra", "info", "K[x1]/(x1^2-1)"});
    CHECK(split.code == 0);
    CHECK(contains(split.out, "summands: 2"));

    auto syntax = run({"algebra", "info", "K[x1]/(x1^"});
    CHECK(syntax.code == 2);
    CHECK(contains(syntax.err, "parse"));

    write_file(scratch("cube.txt"), "K[x1]/(x1^3)\n");
    CHECK(run({"algebra", "info", scratch("cube.txt")}).out == cube.out);
  }

  TEST_CASE("rep matrix") {
    auto latex = run({"rep", "matrix", "20", "--basis", "1,x1,x2,x1^2,x2^2,x1^3", "--format", "latex"});
    CHECK(latex.code == 0);
    CHECK(contains(latex.out, "\\begin{pmatrix}"));
    CHECK(contains(latex.out, "\\frac{\\alpha_1^3+\\alpha_2^3}{6}"));

    auto eval = run({"rep", "matrix", "2", "--eval", "l1=2,a1=3"});
    CHECK(eval.code == 0);
    CHECK(eval.out == "2  0\n6  2\n");

    auto one = run({"rep", "matrix", "1"});
    CHECK(one.code == 0);
    CHECK(contains(one.out, "\nl1\n"));

    CHECK(run({"rep", "matrix", "2", "--eval", "l1=0,a1=3"}).code == 2);
    CHECK(run({"rep", "matrix", "20", "--basis", "1,x1,x2,x1^2,x2^2,x2^2"}).code == 2);
    CHECK(run({"--format", "latex", "table", "show", "2"}).code == 2);
  }

  TEST_CASE("compare") {
    auto sep = run({"compare", "3", "4"});
    CHECK(sep.code == 0);
    CHECK(contains(sep.out, "hilbert"));
    auto json = nlohmann::json::parse(run({"--format", "json", "compare", "3", "4"}).out);
    CHECK(json["separated"] == true);
    CHECK(json["separation"]["invariant"] == "hilbert");
    CHECK(run({"compare", "5", "5"}).code == 1);
    CHECK(run({"compare", "5", "99"}).code == 2);
  }

  TEST_CASE("reconstruct") {
    const std::string path = scratch("rep2.json");
    CHECK(run({"--format", "json", "--output", path, "rep", "matrix", "2"}).code == 0);
    auto ok = run({"--format", "json", "reconstruct", "--matrices", path, "--vector", "1,0"});
    CHECK(ok.code == 0);
    auto doc = nlohmann::json::parse(ok.out);
    CHECK(doc["algebra"]["structure"] ==
          nlohmann::json::parse(R"([[["1","0"],["0","1"]],[["0","1"],["0","0"]]])"));
    CHECK(run({"reconstruct", "--matrices", path, "--vector", "0,1"}).code == 1);
    CHECK(run({"reconstruct", "--matrices", path, "--vector", "1"}).code == 2);
    CHECK(run({"reconstruct", "--matrices", scratch("missing.json"), "--vector", "1,0"}).code == 2);
    write_file(scratch("garbage.json"), "{ not json");
    CHECK(run({"reconstruct", "--matrices", scratch("garbage.json"), "--vector", "1,0"}).code == 2);
    write_file(scratch("noncomm.json"),
               R"({"n": 2, "lie_basis": [[["1","2"],["3","4"]], [["0","1"],["1","0"]]]})");
    CHECK(run({"reconstruct", "--matrices", scratch("noncomm.json"), "--vector", "1,0"}).code == 1);
  }

  TEST_CASE("action check") {
    auto h = run({"action", "check", "hirzebruch", "--param", "d=1"});
    CHECK(h.code == 0);
    CHECK(contains(h.out, "axioms: ok"));
    CHECK(contains(h.out, "linear: no"));
    auto h0 = nlohmann::json::parse(run({"--format", "json", "action", "check", "hirzebruch", "--param", "d=0"}).out);
    CHECK(h0["linear"] == true);
    CHECK(h0["has_fixed_point"] == "yes");

    CHECK(run({"action", "check", "translations", "--require-fixed-point"}).code == 1);
    CHECK(run({"action", "check", "polex", "--require-fixed-point"}).code == 0);
    CHECK(run({"action", "check", "nosuch"}).code == 2);
    CHECK(run({"action", "check", "polex", "--param", "n=0"}).code == 2);

    write_file(scratch("broken.json"), R"({"r": 0, "s": 1, "n": 1, "components": ["x1+a1^2"]})");
    auto broken = run({"action", "check", "--file", scratch("broken.json")});
    CHECK(broken.code == 1);
    CHECK(contains(broken.out, "axioms: violated"));
  }

  TEST_CASE("determinism") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"--seed", "7", "algebra", "info", "K[x1,x2]/(x1^2-1, x2^2)"},
          std::vector<std::string>{"--seed", "7", "action", "check", "polex", "--param", "n=3"},
          std::vector<std::string>{"--format", "json", "table", "show", "33"}}) {
      CHECK(run(args).out == run(args).out);
    }
  }
}
