#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

#include "demdesc/char_io.hpp"
#include "demdesc/descent.hpp"

using namespace demdesc;
using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
  std::string err;
};

// Runs the installed binary through the shell, capturing stdout directly
// and stderr via a scratch file.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string err_path = "cli_stderr_" + std::to_string(counter++) + ".txt";
  const std::string cmd =
      env_prefix + std::string(DEMDESC_CLI_PATH) + " " + args + " 2>" + err_path;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.err = read_file(err_path);
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("info reports type data as JSON") {
  const RunResult r = run_cli("info --type A2");
  REQUIRE(r.status == 0);
  const json out = json::parse(r.out);
  CHECK(out["type"] == "A2");
  CHECK(out["rank"] == 2);
  CHECK(out["cartan"] == json::parse("[[2,-1],[-1,2]]"));
  CHECK(out["positive_roots"] == 3);
  CHECK(out["weyl_order"] == 6);
  CHECK(out["longest_length"] == 3);

  const RunResult g2 = run_cli("info --type g2");
  REQUIRE(g2.status == 0);
  const json out2 = json::parse(g2.out);
  CHECK(out2["type"] == "G2");
  CHECK(out2["cartan"] == json::parse("[[2,-1],[-3,2]]"));
  CHECK(out2["weyl_order"] == 12);
  CHECK(out2["longest_length"] == 6);
}

TEST_CASE("info rejects unknown types with a JSON error") {
  const RunResult r = run_cli("info --type H3");
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  const json err = json::parse(r.err);
  CHECK(err["error"] == "InvalidType");
  CHECK(err.contains("detail"));
}

TEST_CASE("bruhat comparisons") {
  CHECK(run_cli("bruhat --type A3 --w 1,2,3 --v 1,3").out == "true\n");
  CHECK(run_cli("bruhat --type A3 --w 1,2,3 --v 2,1").out == "false\n");
  CHECK(run_cli("bruhat --type A3 --w 1,2,3 --v e").out == "true\n");
  CHECK(run_cli("bruhat --type A3 --w e --v 1").out == "false\n");
  // Words need not be reduced; only the group elements matter.
  CHECK(run_cli("bruhat --type A3 --w 1,1,2 --v 2").out == "true\n");
}

TEST_CASE("demazure apply writes the transformed character") {
  auto a1 = RootDatum::create(Series::A, 1);
  write_file("cli_in.json", character_to_json(Character::monomial(a1, Weight{1})));
  const RunResult r =
      run_cli("demazure apply --type A1 --word 1 --in cli_in.json --out cli_out.json");
  REQUIRE(r.status == 0);
  Character expect(a1);
  expect.add_term(Weight{1}, 1);
  expect.add_term(Weight{-1}, 1);
  CHECK(character_from_json(read_file("cli_out.json")) == expect);

  // The empty word is the identity operator.
  const RunResult id =
      run_cli("demazure apply --type A1 --word e --in cli_in.json --out cli_out2.json");
  REQUIRE(id.status == 0);
  CHECK(character_from_json(read_file("cli_out2.json")) ==
        Character::monomial(a1, Weight{1}));

  // Type mismatch between flag and file is an error.
  const RunResult bad =
      run_cli("demazure apply --type A2 --word 1 --in cli_in.json --out cli_out3.json");
  CHECK(bad.status == 1);
  CHECK(json::parse(bad.err)["error"] == "RankMismatch");

  std::remove("cli_in.json");
  std::remove("cli_out.json");
  std::remove("cli_out2.json");
}

TEST_CASE("descent check reports the three equivalences") {
  auto a1 = RootDatum::create(Series::A, 1);
  Character sym(a1);
  sym.add_term(Weight{1}, 1);
  sym.add_term(Weight{-1}, 1);
  write_file("cli_sym.json", character_to_json(sym));
  const RunResult good = run_cli("descent check --type A1 --in cli_sym.json");
  REQUIRE(good.status == 0);
  const json out = json::parse(good.out);
  CHECK(out["descent"] == true);
  CHECK(out["full"] == true);
  CHECK(out["invariant"] == true);
  CHECK_FALSE(out.contains("failing_index"));

  write_file("cli_asym.json", character_to_json(Character::monomial(a1, Weight{1})));
  const RunResult bad = run_cli("descent check --type A1 --in cli_asym.json");
  REQUIRE(bad.status == 0);  // the check itself succeeded; the answer is no
  const json out2 = json::parse(bad.out);
  CHECK(out2["descent"] == false);
  CHECK(out2["full"] == false);
  CHECK(out2["invariant"] == false);
  CHECK(out2["failing_index"] == 1);
  CHECK(out2["defect"]["terms"][0]["weight"] == json::parse("[-1]"));

  std::remove("cli_sym.json");
  std::remove("cli_asym.json");
}

TEST_CASE("decompose writes and prints the decomposition") {
  auto a2 = RootDatum::create(Series::A, 2);
  const Character f =
      weyl_character(a2, Weight{1, 0}) * weyl_character(a2, Weight{0, 1});
  write_file("cli_dec_in.json", character_to_json(f));
  const RunResult r = run_cli("decompose --type A2 --in cli_dec_in.json --out cli_dec_out.json");
  REQUIRE(r.status == 0);
  CHECK(r.out == read_file("cli_dec_out.json"));
  const GDecomposition d = decomposition_from_json(r.out);
  CHECK(d.entries().at(Weight{1, 1}) == 1);
  CHECK(d.entries().at(Weight{0, 0}) == 1);
  std::remove("cli_dec_in.json");
  std::remove("cli_dec_out.json");
}

TEST_CASE("decompose rejects non-descent input with a witness payload") {
  auto a2 = RootDatum::create(Series::A, 2);
  write_file("cli_bad.json", character_to_json(Character::monomial(a2, Weight{1, 0})));
  const RunResult r = run_cli("decompose --type A2 --in cli_bad.json --out cli_bad_out.json");
  CHECK(r.status == 1);
  const json err = json::parse(r.err);
  CHECK(err["error"] == "NotInDescentCategory");
  CHECK(err["failing_index"] == 1);
  CHECK(err["defect"]["root_datum"] == "A2");
  CHECK(err["defect"]["terms"].size() == 1);
  std::remove("cli_bad.json");
}

TEST_CASE("braid normal forms") {
  CHECK(run_cli("braid nf --type A2 --word 1,2,1").out == "1,2,1\n");
  CHECK(run_cli("braid nf --type A2 --word 2,1,2").out == "1,2,1\n");
  CHECK(run_cli("braid nf --type A2 --word 1,1").out == "1 | 1\n");
  CHECK(run_cli("braid nf --type A2 --word e").out == "e\n");
  CHECK(run_cli("braid nf --type B2 --word 2,1,2,1").out == "1,2,1,2\n");
}

TEST_CASE("verify runs the relation suite") {
  const RunResult r = run_cli("verify --type A2 --seed 1 --samples 20");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("verify A2 seed=1 samples=20") == 0);
  CHECK(r.out.find("[PASS]") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("all statements hold") != std::string::npos);
}

TEST_CASE("outputs are deterministic") {
  CHECK(run_cli("info --type B3").out == run_cli("info --type B3").out);
  CHECK(run_cli("verify --type B2 --seed 7 --samples 10").out ==
        run_cli("verify --type B2 --seed 7 --samples 10").out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("").status == 2);
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("info").status == 2);                    // missing --type
  CHECK(run_cli("demazure").status == 2);                // missing child command
  CHECK(run_cli("verify --type A2 --samples 0").status == 2);
  CHECK(run_cli("--help").status == 0);
}

TEST_CASE("domain errors exit with 1") {
  const RunResult word = run_cli("bruhat --type A2 --w 1,x --v e");
  CHECK(word.status == 1);
  CHECK(json::parse(word.err)["error"] == "ParseError");

  const RunResult index = run_cli("bruhat --type A2 --w 5 --v e");
  CHECK(index.status == 1);
  CHECK(json::parse(index.err)["error"] == "IndexOutOfRange");

  const RunResult missing = run_cli("descent check --type A2 --in no_such_file.json");
  CHECK(missing.status == 1);
  CHECK(json::parse(missing.err)["error"] == "IoError");
}

TEST_CASE("enumeration cap is read from the environment") {
  const RunResult capped = run_cli("info --type A2", "DEMAZURE_ENUM_CAP=5 ");
  CHECK(capped.status == 1);
  CHECK(json::parse(capped.err)["error"] == "GroupTooLarge");
  const RunResult fine = run_cli("info --type A2", "DEMAZURE_ENUM_CAP=6 ");
  CHECK(fine.status == 0);
}

}  // TEST_SUITE
