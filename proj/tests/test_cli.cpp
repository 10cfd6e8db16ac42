#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "mcc/json_io.hpp"
#include "mcc/solve.hpp"
#include "oracle.hpp"

using namespace mcc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;  // stdout and stderr together
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MCC_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("mcc_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen") {
  TempDir tmp;
  auto r = run("gen line --n 12 --m 6 -o " + tmp / "line.json");
  CHECK(r.code == 0);
  const auto line = election_from_json(read_json_file(tmp / "line.json"));
  CHECK(line.num_voters() == 12);
  CHECK(line.num_candidates() == 6);
  CHECK(r.out.find("n=12 m=6 dim=1") != std::string::npos);

  for (const char* name : {"a.json", "b.json"}) {
    CHECK(run(std::string("gen random --dim 2 --n 30 --m 30 --coincident --seed 7 -o ") + tmp / name)
              .code == 0);
  }
  CHECK(slurp(tmp / "a.json") == slurp(tmp / "b.json"));

  r = run("gen pm3sat --formula " MCC_DATA_DIR "/pm3sat/single_pos.json -o " + tmp / "red.json");
  CHECK(r.code == 0);
  // N = 10 pieces, 3 variables, 1 clause
  CHECK(r.out.find("k=10") != std::string::npos);
  CHECK(r.out.find("n=41 m=41") != std::string::npos);

  CHECK(run("gen line --n 10 --m 3 -o " + tmp / "x.json").code == 3);
  CHECK(run("gen random --n 5").code == 3);
  CHECK(run("gen pm3sat --formula /nonexistent.json").code == 3);
}

TEST_CASE("solve and verify") {
  TempDir tmp;
  REQUIRE(run("gen random --dim 2 --n 14 --m 10 --seed 3 -o " + tmp / "e.json").code == 0);
  const auto e = election_from_json(read_json_file(tmp / "e.json"));
  const auto naive = oracle::ranks(e);

  SUBCASE("exact") {
    REQUIRE(run("solve --instance " + tmp / "e.json" + " --k 3 --alg exact -o " + tmp / "r.json")
                .code == 0);
    const auto rep = report_from_json(read_json_file(tmp / "r.json"));
    CHECK(rep.score == oracle::opt(e, 3));
    CHECK(oracle::score(naive, rep.committee.members) == rep.score);
    CHECK(run("verify --instance " + tmp / "e.json" + " --report " + tmp / "r.json").code == 0);
  }
  SUBCASE("delta3") {
    REQUIRE(run("solve --instance " + tmp / "e.json" + " --k 3 --alg delta3 -o " + tmp / "r.json")
                .code == 0);
    const auto rep = report_from_json(read_json_file(tmp / "r.json"));
    CHECK(rep.voter_ratios.size() == 14);
    for (double x : rep.voter_ratios) CHECK(x <= 3.0);
  }
  SUBCASE("rborda") {
    REQUIRE(run("solve --instance " + tmp / "e.json" + " --k 4 --r 2 --alg rborda -o " +
                tmp / "r.json")
                .code == 0);
    const auto rep = report_from_json(read_json_file(tmp / "r.json"));
    CHECK(rep.score == oracle::r_score(naive, rep.committee.members, 2));
  }
  SUBCASE("every algorithm verifies") {
    for (const std::string alg : {"epsnet", "rborda", "bicriterion", "delta3", "exact"}) {
      CAPTURE(alg);
      REQUIRE(run("solve --instance " + tmp / "e.json" + " --k 3 --r 2 --alg " + alg + " -o " +
                  tmp / "r.json")
                  .code == 0);
      const auto v = run("verify --instance " + tmp / "e.json" + " --report " + tmp / "r.json");
      CHECK(v.code == 0);
      CHECK(v.out.find("FAIL") == std::string::npos);
    }
    REQUIRE(run("solve --instance " + tmp / "e.json" +
                " --k 3 --alg bicriterion --mode local_search_2d --cap 5 -o " + tmp / "r.json")
                .code == 0);
    CHECK(run("verify --instance " + tmp / "e.json" + " --report " + tmp / "r.json").code == 0);
  }
  SUBCASE("corrupted report") {
    REQUIRE(run("solve --instance " + tmp / "e.json" + " --k 3 --alg epsnet -o " + tmp / "r.json")
                .code == 0);
    auto j = read_json_file(tmp / "r.json");
    const auto rep = report_from_json(j);
    // swap in the non-member that changes the score
    for (int c = 0; c < 10; ++c) {
      if (rep.committee.contains(c)) continue;
      auto members = rep.committee.members;
      members[0] = c;
      if (oracle::score(naive, members) != rep.score) {
        j["committee"]["members"] = members;
        break;
      }
    }
    write_text_file(tmp / "bad.json", dump(j));
    const auto v = run("verify --instance " + tmp / "e.json" + " --report " + tmp / "bad.json");
    CHECK(v.code == 2);
    CHECK(v.out.find("score mismatch") != std::string::npos);
  }
  SUBCASE("errors") {
    CHECK(run("solve --instance " + tmp / "e.json" + " --k 3 --alg exact1d").code == 3);
    CHECK(run("solve --instance " + tmp / "e.json" + " --k 30 --alg epsnet").code == 3);
    CHECK(run("solve --instance " + tmp / "e.json" + " --k 5 --alg exact --budget 10").code == 4);
    CHECK(run("solve --instance " + tmp / "missing.json" + " --k 3 --alg exact").code == 3);
  }
}

TEST_CASE("lemma1 reports on the reduction corpus") {
  TempDir tmp;
  for (const auto& entry : fs::directory_iterator(MCC_DATA_DIR "/pm3sat")) {
    CAPTURE(entry.path());
    const auto bits = read_json_file(entry.path()).at("assignment").get<std::string>();
    REQUIRE(run("gen pm3sat --formula " + entry.path().string() + " -o " + tmp / "red.json").code ==
            0);
    REQUIRE(run("solve --instance " + tmp / "red.json" + " --alg lemma1 --assignment " + bits +
                " -o " + tmp / "r.json")
                .code == 0);
    CHECK(report_from_json(read_json_file(tmp / "r.json")).score <= 4);
    CHECK(run("verify --instance " + tmp / "red.json" + " --report " + tmp / "r.json").code == 0);
  }
}

TEST_CASE("experiment") {
  TempDir tmp;
  write_text_file(tmp / "empty.json", "{}\n");
  REQUIRE(run("experiment --config " + tmp / "empty.json" + " -o " + tmp / "empty.csv").code == 0);
  CHECK(slurp(tmp / "empty.csv") ==
        "instance_id,dim,n,m,k,algorithm,score,certified_bound,lower_bound,oracle_score,"
        "score_over_m_div_k,wall_ms,seed,status\n");

  REQUIRE(run("experiment --config " MCC_DATA_DIR "/experiments/coincident_sweep.json -o " +
              tmp / "a.csv")
              .code == 0);
  REQUIRE(run("experiment --config " MCC_DATA_DIR "/experiments/coincident_sweep.json -o " +
              tmp / "b.csv")
              .code == 0);
  const auto csv = slurp(tmp / "a.csv");
  CHECK(csv == slurp(tmp / "b.csv"));
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    REQUIRE(cells.size() >= 14);
    CHECK(cells[13] == "ok");
    CHECK(std::stod(cells[10]) <= 12.0);
  }
  CHECK(rows > 0);
}
