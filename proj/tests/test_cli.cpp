#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs BIN <args> through the shell, capturing stdout; stderr is dropped.
RunResult run(const std::string& args) {
  std::string cmd = std::string(NTLC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  RunResult r = run(args);
  REQUIRE(r.exit_code == expect_code);
  return json::parse(r.out);
}

} // namespace

TEST_CASE("normalize and minuscule") {
  CHECK(run_json("normalize --n 2 --word 2,0")["word"] == json::parse("[0,2]"));
  CHECK(run_json("normalize --n 2 --word 2,0,1,0")["word"] == json::parse("[0,2,1,0]"));
  CHECK(run_json("normalize --n 2 --word 0,1,2,0")["word"] == json::parse("[0,1,0,2]"));
  json m = run_json("minuscule --n 2 --word 1,0,1");
  CHECK(m["minuscule"] == false);
  CHECK(run_json("minuscule --n 2 --word 0,2,1,0,2")["minuscule"] == true);
}

TEST_CASE("multiplication") {
  CHECK(run_json("mul --n 2 --a 1 --b 0,1") == json::parse(R"({"zero":true})"));
  json p = run_json("mul --n 2 --a 0 --b 1 --c 0");
  REQUIRE(p.is_array());
  REQUIRE(p.size() == 1);
  CHECK(p[0]["word"] == json::parse("[0,1,0]"));
  CHECK(p[0]["num"] == 1);
  CHECK(p[0]["den"] == 1);
}

TEST_CASE("central element, factoring, valuation") {
  json q = run_json("q-element --n 2");
  REQUIRE(q.is_array());
  CHECK(q.size() == 4);

  json f = run_json("cform --n 2 --word 1,0,2,1");
  CHECK(f["lambda"] == "+-");
  CHECK(f["mu"] == "-+");
  CHECK(f["r"] == 1);

  CHECK(run_json("valuation --n 2 --word 1,0,2,1")["valuation"] == 1);
  CHECK(run_json("valuation --n 2 --word 0,2,1,0")["valuation"] == 0);
}

TEST_CASE("weight calculus") {
  CHECK(run_json("coxeter --n 2 --weight ++")["word"] == json::parse("[2,1,0]"));
  CHECK(run_json("coxeter --n 2 --weight=--")["word"] == json::parse("[0,1,2]"));

  json w = run_json("weights --n 6 --word 6,1,3,5,0,2,4,6,3");
  CHECK(w["lower"] == "+--++-");
  CHECK(w["upper"] == "+-+-++");

  CHECK(run_json("construct-c --n 2 --lambda=-- --mu=++ --r 3")["word"] ==
        json::parse("[0,1,0,2,1,0]"));
  CHECK(run_json("construct-c --n 2 --lambda=-+ --mu=++ --r 2")["word"] ==
        json::parse("[0,2,1,0]"));
  CHECK(run_json("construct-c --n 2 --lambda=-- --mu=++ --r 1", 1) ==
        json::parse(R"({"exists":false})"));
}

TEST_CASE("heap drawings") {
  RunResult dot = run("heap --n 2 --word 0,1,0");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph heap {", 0) == 0);
  CHECK(dot.out.find("\"(1,1)\" -> \"(0,0)\";") != std::string::npos);

  RunResult tikz = run("heap --n 2 --word 0,1,0 --tikz");
  CHECK(tikz.exit_code == 0);
  CHECK(tikz.out.find("tikzpicture") != std::string::npos);

  json j = run_json("heap --n 2 --word 0,1,0 --format json");
  CHECK(j["cells"].size() == 3);
  CHECK(j["covers"].size() == 2);
}

TEST_CASE("matrix export") {
  RunResult csv = run("matrix --n 2 --element Q --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "row,col,exponent\n++,++,1\n+-,+-,1\n-+,-+,1\n--,--,1\n");

  json m = run_json("matrix --n 2 --word 0");
  CHECK(m["n"] == 2);
  CHECK(m["entries"].size() == 2);
}

TEST_CASE("modules and enumeration") {
  json mod = run_json("module --n 2 --c 5/2 --m 2");
  CHECK(mod["dimension"] == 8);
  CHECK(mod["c"] == "5/2");
  CHECK(run("module --n 2 --c 0").exit_code == 1);
  CHECK(run_json("module --n 2 --trivial")["dimension"] == 1);

  json en = run_json("enumerate --n 2 --max-len 4");
  CHECK(en["counts"] == json::parse("[1,3,5,6,5]"));
  json enw = run_json("enumerate --n 2 --max-len 2 --words");
  CHECK(enw["words"][2].size() == 5);
}

TEST_CASE("verification suite exit codes") {
  CHECK(run("verify --n 2 --level quick --format text").exit_code == 0);
  CHECK(run("verify --n 2 --level quick --inject-fault arrow --format text").exit_code == 3);
  CHECK(run("verify --n 5 --level quick").exit_code == 1);
}

TEST_CASE("piped json round trips") {
  std::string bin = NTLC_CLI_PATH;
  RunResult r = run("q-element --n 2 | " + bin + " valuation --n 2 --from-json -");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["valuation"] == 1);

  RunResult m = run("mul --n 2 --a 2,1,0 --b 2,1,0 | " + bin +
                    " matrix --n 2 --from-json - --format csv");
  CHECK(m.exit_code == 0);
  CHECK(m.out == "row,col,exponent\n++,++,2\n");
}

TEST_CASE("error exit codes") {
  CHECK(run("normalize --n 2 --word 9,0").exit_code == 1);
  CHECK(run("normalize --n 1 --word 0").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("mul --n 2 --a 0").exit_code == 2);
  CHECK(run("coxeter --n 2 --weight +*").exit_code == 1);
  CHECK(run("construct-c --n 2 --lambda=++ --mu=++ --r 0").exit_code == 1);
}
