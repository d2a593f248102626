#include "milnor/cli.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace milnor;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/milnor_cli_test_" + name + ".json";
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("decompose") {
  const auto r = run({"decompose", "@a11"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "q=2 blocks=[0..3][4..9] d=(4,6) d0=2 trivial=false"));
  CHECK(contains(r.out, "chi(M)=0 stv_reducible=true"));
  const auto b = run({"decompose", "@boolean:3"});
  CHECK(contains(b.out, "d=(1,1,1) d0=1 trivial=true"));
}

TEST_CASE("decompose a file") {
  const auto path = write_temp("g2xg4", R"({"name":"g2xg4","hyperplanes":[
    ["1","0","0","0","0","0","0","0"],["0","1","0","0","0","0","0","0"],["0","0","1","0","0","0","0","0"],
    ["1","1","1","0","0","0","0","0"],["0","0","0","1","0","0","0","0"],["0","0","0","0","1","0","0","0"],
    ["0","0","0","0","0","1","0","0"],["0","0","0","0","0","0","1","0"],["0","0","0","0","0","0","0","1"],
    ["0","0","0","1","1","1","1","1"]]})");
  const auto r = run({"decompose", path});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "q=2 blocks=[0..3][4..9] d=(4,6) d0=2 trivial=false"));
  std::remove(path.c_str());
}

TEST_CASE("monodromy and charpoly") {
  const auto m = run({"monodromy", "@g4"});
  CHECK(contains(m.out, "order=6 trivial=false"));
  const auto c = run({"charpoly", "@g2"});
  CHECK(contains(c.out, "P_M(t): +3 -3t +t^2"));
  CHECK(contains(c.out, "chi(M): 1"));
  const auto c4 = run({"charpoly", "@g4"});
  CHECK(contains(c4.out, "P_M(t): +5 -10t +10t^2 -5t^3 +t^4"));
}

TEST_CASE("spectrum of the near pencil") {
  const auto path = write_temp("nearpencil4", R"({"hyperplanes":[["1","0","0"],["0","1","0"],["1","1","0"],["0","0","1"]]})");
  const auto r = run({"spectrum", path});
  CHECK(r.code == cli::kOk);
  CHECK(r.out ==
        "1/4 0\n2/4 0\n3/4 0\n"
        "T1 hodge_trivial=true reducible=true trivial_monodromy=true spectrum_vanishes=true agree=true\n");
  std::remove(path.c_str());
  CHECK(run({"spectrum", "@g4"}).code == cli::kPrecondition);
}

TEST_CASE("hodge") {
  const auto r = run({"hodge", "@a11"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "tate=true"));
  CHECK(contains(r.out, "HD(t): -15 +60t -110t^2 +119t^3 -82t^4 +36t^5 -9t^6 +t^7"));
  CHECK(contains(r.out, "zeta_check=true"));
  const auto g2 = run({"hodge", "@g2"});
  CHECK(contains(g2.out, "tate=false"));
  CHECK(contains(g2.out, "HD(t): undefined"));
}

TEST_CASE("count") {
  const auto r = run({"count", "@a11", "--prime", "5"});
  CHECK(r.out == "p=5 method=fast count=11160\n");
  const auto b = run({"count", "@a11", "--prime", "5", "--method", "brute"});
  CHECK(b.out == "p=5 method=brute count=11160\n");
  const auto many = run({"count", "@boolean:3", "--primes", "3..7"});
  CHECK(many.out == "p=3 method=fast count=4\np=5 method=fast count=16\np=7 method=fast count=36\n");
}

TEST_CASE("count skips bad primes") {
  const auto path = write_temp("xy2", R"({"hyperplanes":[["1","0"],["0","1"],["1","2"]]})");
  const auto r = run({"count", path, "--primes", "2,3"});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.err, "skipping p=2"));
  CHECK(contains(r.out, "p=3 "));
  std::remove(path.c_str());
}

TEST_CASE("budget errors exit with status 3") {
  const auto r = run({"count", "@a11", "--prime", "5", "--method", "brute", "--budget", "1000"});
  CHECK(r.code == cli::kPrecondition);
  CHECK(contains(r.err, "error:"));
}

TEST_CASE("katz") {
  const auto ok = run({"katz", "@a11", "--primes", "5,13,17", "--expect-polynomial-count"});
  CHECK(ok.code == cli::kOk);
  CHECK(contains(ok.out, "p count predicted match count_mod8 predicted_mod8"));
  CHECK(contains(ok.out, "conclusion: consistent-so-far"));

  const auto bad = run({"katz", "@a11", "--primes", "11", "--expect-polynomial-count"});
  CHECK(bad.code == cli::kFalsified);
  CHECK(contains(bad.out, "11 8259500 "));
  CHECK(contains(bad.out, "conclusion: falsified at {11}"));
  // Without the assertion flag a falsification is only reported.
  CHECK(run({"katz", "@a11", "--primes", "11"}).code == cli::kOk);
}

TEST_CASE("reproduce") {
  const auto r = run({"reproduce", "rk2", "--primes", "5,13"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out ==
        "p count predicted match count_mod8 predicted_mod8\n"
        "5 11160 11160 true 0 0\n"
        "13 30575400 30575400 true 0 0\n");
  CHECK(run({"reproduce", "rk3"}).code == cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"decompose", "@g2", "--bogus"}).code == cli::kUsage);
  CHECK(run({"decompose"}).code == cli::kUsage);
  CHECK(run({"count", "@g2", "--method", "slow", "--prime", "5"}).code == cli::kUsage);
  CHECK(run({"decompose", "@g2", "charpoly", "@g2"}).code == cli::kUsage);
  CHECK(run({"decompose", "/nonexistent.json"}).code == cli::kPrecondition);
  CHECK(run({"count", "@g2", "--prime", "15"}).code == cli::kPrecondition);
}

TEST_CASE("every subcommand has help") {
  for (const char* cmd : {"decompose", "monodromy", "charpoly", "spectrum", "hodge", "count", "katz", "reproduce"}) {
    const auto r = run({cmd, "--help"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "--help"));
  }
}

TEST_CASE("output is deterministic") {
  CHECK(run({"hodge", "@a11"}).out == run({"hodge", "@a11"}).out);
  CHECK(run({"count", "@a11", "--primes", "5..13"}).out == run({"count", "@a11", "--primes", "5..13"}).out);
}

TEST_CASE("prime lists") {
  CHECK(cli::parse_prime_list("5,13") == std::vector<unsigned>{5, 13});
  CHECK(cli::parse_prime_list("13,5,5") == std::vector<unsigned>{5, 13});
  CHECK(cli::parse_prime_list("10..20") == std::vector<unsigned>{11, 13, 17, 19});
  CHECK_THROWS(cli::parse_prime_list("4"));
  CHECK_THROWS(cli::parse_prime_list("a"));
  CHECK_THROWS(cli::parse_prime_list("24..28"));
}
