// Command-line front end: golden outputs, exit codes, determinism and JSON
// round trips.
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "mvt/cli.hpp"
#include "mvt/json_io.hpp"
#include "mvt/matroid.hpp"

using namespace mvt;

namespace {

cli::Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mvt");
  return cli::run(args);
}

bool has_line(const std::string& out, const std::string& line) {
  return ("\n" + out).find("\n" + line + "\n") != std::string::npos;
}

// Every object that looks like a matroid, anywhere in the document.
void collect_matroids(const json& j, std::vector<json>& out) {
  if (j.is_object()) {
    if (j.contains("ground_size") && j.contains("lines") && j.contains("rank_cap")) out.push_back(j);
    for (const auto& [k, v] : j.items()) collect_matroids(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_matroids(v, out);
  }
}

// Runs the installed executable and captures stdout and the exit status.
std::pair<int, std::string> run_binary(const std::string& args) {
  std::string cmd = std::string(MVT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) throw std::runtime_error("cannot start " + cmd);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, f)) > 0;) out.append(buf, n);
  int status = pclose(f);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("generator counts") {
    auto p = run({"count-gens", "--config", "pascal"});
    CHECK(p.code == 0);
    CHECK(has_line(p.out, "circuit: 7"));
    CHECK(has_line(p.out, "gc: 7"));
    CHECK(has_line(p.out, "lifting: 708588"));
    auto q = run({"count-gens", "--config", "pappus"});
    CHECK(q.code == 0);
    CHECK(has_line(q.out, "circuit: 9"));
    CHECK(has_line(q.out, "gc: 9"));
    CHECK(has_line(q.out, "lifting: 2361960"));
  }

  TEST_CASE("Fano is infeasible") {
    auto r = run({"realize", "--config", "fano", "--seed", "1"});
    CHECK(r.code == 1);
    CHECK(has_line(r.out, "outcome: infeasible"));
    CHECK(has_line(r.out, "determinant: -2"));
    auto j = json::parse(run({"realize", "--config", "fano", "--seed", "1", "--format", "json"}).out);
    CHECK(j["determinant"] == "-2");
  }

  TEST_CASE("realizable fixtures exit zero") {
    for (const char* n : {"qs", "pascal", "pappus", "grid3", "cactus-fig"}) {
      auto r = run({"realize", "--config", n, "--seed", "3"});
      CHECK_MESSAGE(r.code == 0, n);
    }
  }

  TEST_CASE("info on the quadrilateral set") {
    auto r = run({"info", "--config", "qs"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "d: 6"));
    CHECK(has_line(r.out, "lines: 4"));
    CHECK(has_line(r.out, "nilpotent: false"));
    CHECK(has_line(r.out, "solvable: true"));
    CHECK(has_line(r.out, "cactus: false"));
    CHECK(has_line(r.out, "forest: false"));
    auto j = json::parse(run({"info", "--config", "qs", "--format", "json"}).out);
    CHECK(j["ground_size"] == 6);
    CHECK(j["lines"] == 4);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"info", "--config", "qs", "--bogus"}).code == 2);
    CHECK(run({"info", "--config", "qs", "--format", "xml"}).code == 2);
    CHECK(run({"info", "--config", "no-such-config"}).code == 2);
    CHECK(run({"info"}).code == 2);
    auto r = run({"frobnicate"});
    CHECK(!(r.out + r.err).empty());
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("fixture files load by name and path") {
    auto by_name = run({"info", "--config", "cactus-fig"});
    CHECK(by_name.code == 0);
    auto by_path = run({"info", "--config", MVT_FIXTURE_DIR "/cactus-fig.json"});
    CHECK(by_path.code == 0);
    CHECK(has_line(by_name.out, "cactus: true"));
    CHECK(has_line(by_path.out, "cactus: true"));
  }

  TEST_CASE("identical arguments give identical output") {
    const std::vector<std::vector<std::string>> cmds = {
        {"realize", "--config", "pappus", "--seed", "7"},
        {"gc-gens", "--config", "pascal", "--seed", "2"},
        {"lift-dim", "--config", "pascal", "--delete", "7", "--seed", "5"},
        {"min-matroids", "--config", "third93", "--format", "json"},
        {"registry", "--config", "pascal"},
        {"family", "--config", "pappus-a1"},
    };
    for (const auto& c : cmds) {
      auto a = run(c), b = run(c);
      CHECK_MESSAGE(a.out == b.out, c[0]);
      CHECK(a.code == b.code);
    }
  }

  TEST_CASE("emitted matroids re-parse to the same canonical form") {
    const std::vector<std::vector<std::string>> cmds = {
        {"info", "--config", "pascal"},
        {"glue", "--config", "three-lines", "--with", "qs", "--at", "3,3"},
        {"components", "--config", "cactus-fig"},
        {"min-matroids", "--config", "third93"},
        {"registry", "--config", "third93"},
    };
    int seen = 0;
    for (auto c : cmds) {
      c.insert(c.end(), {"--format", "json"});
      auto r = run(c);
      REQUIRE_MESSAGE(r.code == 0, c[0]);
      std::vector<json> ms;
      collect_matroids(json::parse(r.out), ms);
      CHECK_MESSAGE(!ms.empty(), c[0]);
      for (const auto& j : ms) {
        Matroid m = matroid_from_json(j);
        CHECK(matroid_to_json(m) == j);
        CHECK(canonical_form(matroid_from_json(matroid_to_json(m))) == canonical_form(m));
        ++seen;
      }
    }
    CHECK(seen > 40);
    // The canonical field of each minimal matroid matches its matroid.
    auto j = json::parse(run({"min-matroids", "--config", "third93", "--format", "json"}).out);
    CHECK(j["count"] == 19);
    std::set<std::string> classes;
    for (const auto& item : j["matroids"]) {
      CHECK(item["canonical"] == canonical_form(matroid_from_json(item["matroid"])));
      if (!item["class"].is_null()) classes.insert(item["class"].get<std::string>());
    }
    CHECK(classes.size() == 19);
  }

  TEST_CASE("witness command") {
    auto r = run({"witness", "--config", "pascal", "--loop", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(-1,-4,0)") != std::string::npos);
    CHECK(r.out.find("(-12,-3,0)") != std::string::npos);
    CHECK(has_line(r.out, "verdict: verified"));
    CHECK(run({"witness", "--config", "pascal", "--loop", "1"}).code == 2);
  }

  TEST_CASE("liftability matrix output") {
    auto r = run({"lift-matrix", "--config", "qs"});
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
    CHECK(run({"lift-matrix", "--config", "qs", "--mode", "diagonal"}).code == 2);
  }

  TEST_CASE("the executable matches the library entry point") {
    for (const std::string args : {"count-gens --config pascal", "realize --config fano --seed 1", "bogus"}) {
      auto [code, out] = run_binary(args);
      std::vector<std::string> argv{"mvt"};
      std::istringstream in(args);
      for (std::string w; in >> w;) argv.push_back(w);
      auto r = cli::run(argv);
      CHECK_MESSAGE(code == r.code, args);
      CHECK(out == r.out);
    }
  }
}
