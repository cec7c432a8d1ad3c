#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "thinloop/json_io.hpp"

using namespace thinloop;

namespace {

struct Output {
  int status = -1;
  std::string text;
};

// Runs the CLI with stderr folded into stdout.
Output cli(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(THINLOOP_CLI_PATH) + " " + args + " 2>&1";
  Output out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out.text += buf.data();
  const int st = pclose(pipe);
  out.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "thinloop_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

json read_json(const std::filesystem::path& p) {
  std::ifstream f(p);
  return json::parse(f);
}

}  // namespace

TEST_CASE("field and element JSON") {
  auto f9 = Field::create(3, 2);
  const json j = to_json(*f9);
  CHECK(j.dump() == R"({"p":3,"k":2,"modulus":[1,0,1]})");
  CHECK(*field_from_json(j) == *f9);
  CHECK(to_json(*Field::create(5)).dump() == R"({"p":5,"k":1})");
  const auto a = parse_element(*f9, "2,1");
  CHECK(to_json(a).dump() == "[2,1]");
  CHECK(element_from_json(*f9, to_json(a)) == a);
  CHECK_THROWS_AS(element_from_json(*f9, json::array({3, 0})), Error);
}

TEST_CASE("structure table round trip") {
  auto f9 = Field::create(3, 2);
  std::vector<StructureTable> tables = {build_W1n(3, 2), build_H2_phi1(3, 1, 1, f9), build_H2_phi_tau_derived(2, 1, 2),
                                        zassenhaus_group_basis(3, 2, f9).table};
  for (const auto& t : tables) {
    const json j = to_json(t);
    const StructureTable back = table_from_json(json::parse(j.dump()));
    CHECK(back.labels() == t.labels());
    CHECK(back.field() == t.field());
    CHECK(back.same_constants(t));
  }
  const json bad = json::parse(R"({"field":{"p":3},"labels":["a","b"],"brackets":[[1,0,[]]]})");
  CHECK_THROWS_AS(table_from_json(bad), Error);
}

TEST_CASE("grading JSON") {
  const auto d = grade_mixed({3, 1, 1});
  const auto back = degmap_from_json(json::parse(to_json(d).dump()));
  CHECK(back.modulus == d.modulus);
  CHECK(back.degrees == d.degrees);
}

TEST_CASE("report JSON") {
  RunConfig c;
  const RunResult r = run(c);
  const json j = to_json(r);
  for (const char* key : {"dims", "diamonds", "k", "covering", "chains", "generators", "coincidence"})
    CHECK(j.contains(key));
  CHECK(j["covering"] == "PASS");
  CHECK(j["k"] == 5);
  CHECK(j["diamonds"][1]["degree"] == 3);
  CHECK(j["diamonds"][1]["type"] == "2");
  CHECK(j["diamonds"][1]["kind"] == "genuine");
  CHECK(j["verdict"] == "PASS");
}

TEST_CASE("cli construct") {
  const auto path = scratch("w32.json");
  auto out = cli("construct --algebra W --p 3 --n 2 --out " + path.string());
  CHECK(out.status == 0);
  CHECK(out.text.find("dim 9") != std::string::npos);
  CHECK(out.text.find("Jacobi: PASS") != std::string::npos);
  const StructureTable t = table_from_json(read_json(path));
  CHECK(t.same_constants(build_W1n(3, 2)));

  out = cli("construct --algebra Hphi1 --p 3 --n1 1 --n2 1 --eps 1");
  CHECK(out.status == 0);
  CHECK(out.text.find("dim 9") != std::string::npos);

  out = cli("construct --algebra W --p 4 --n 1");
  CHECK(out.status == 2);
  CHECK(out.text.find("characteristic must be prime") != std::string::npos);

  out = cli("construct --algebra Q --p 3");
  CHECK(out.status == 2);
}

TEST_CASE("cli grade") {
  const auto path = scratch("grade.json");
  const auto out = cli("grade --grading finite --p 3 --q 3 --mu3 0,1 --out " + path.string());
  CHECK(out.status == 0);
  CHECK(out.text.find("grading: PASS") != std::string::npos);
  const json j = read_json(path);
  const StructureTable t = table_from_json(j["table"]);
  CHECK(validate_grading(t, degmap_from_json(j["grading"])));
}

TEST_CASE("cli verify") {
  const auto path = scratch("mixed.json");
  auto out = cli("verify --grading mixed --p 3 --n1 1 --n2 1 --depth 18 --out " + path.string());
  CHECK(out.status == 0);
  const json j = read_json(path);
  CHECK(j["verdict"] == "PASS");
  CHECK(j["depth"] == 18);
  for (const auto& d : j["diamonds"]) {
    const int deg = d["degree"];
    CHECK(deg % 2 == 1);
    if (deg == 1) continue;
    CHECK(d["type"] == (deg % 6 == 3 ? "2" : "inf"));
  }

  out = cli("verify --grading finite --p 3 --q 3 --mu3 0,1 --depth 18");
  CHECK(out.status == 0);
  CHECK(out.text.find("PASS") != std::string::npos);

  out = cli("verify --grading eps-zero --p 5 --q 5 --ratio 2 --depth 40");
  CHECK(out.status == 0);

  out = cli("verify --grading mixed --p 3", "THINLOOP_DEPTH=9");
  CHECK(out.status == 0);
  CHECK(out.text.find("depth 9") != std::string::npos);

  // a depth too shallow for the certificate is a verification failure
  out = cli("verify --grading mixed --p 3 --depth 3");
  CHECK(out.status == 1);
  CHECK(out.text.find("first failure") != std::string::npos);

  out = cli("verify --grading finite --p 3 --q 3 --mu3 1");
  CHECK(out.status == 2);
  out = cli("verify --grading cyclic --p 3");
  CHECK(out.status == 2);
  out = cli("verify --p 3 --bogus");
  CHECK(out.status == 2);
}

TEST_CASE("cli suite") {
  const auto path = scratch("suite.json");
  auto out = cli("suite --only char2 --out " + path.string());
  CHECK(out.status == 0);
  const json j = read_json(path);
  REQUIRE(j.is_array());
  CHECK_FALSE(j.empty());
  for (const auto& row : j) CHECK(row["pass"] == true);
  CHECK(out.text.find("char2-isomorphism") != std::string::npos);
  CHECK(out.text.find("mixed-3-1-1") == std::string::npos);

  out = cli("suite --only nonsense");
  CHECK(out.status == 2);
  CHECK(out.text.find("valid rows") != std::string::npos);
}
