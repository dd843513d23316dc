#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "magic/json_io.hpp"

using namespace magic;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MAGICSQ_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(TEST_DATA_DIR) + "/" + name; }

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("magicsq-cli-" + std::to_string(getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() { fs::remove_all(dir); }
  std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

Json load(const std::string& path) {
  std::ifstream in(path);
  return Json::parse(in);
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify fixtures") {
  auto r = run("verify " + data("loh_shu.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "PMS, order 3, constant 15\n");

  r = run("verify " + data("neg5.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "PMS, order 4, constant -20\n");

  r = run("verify " + data("nonmagic.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("row 1") != std::string::npos);

  r = run("verify --json " + data("nonmagic.json"));
  CHECK(r.code == 1);
  CHECK(Json::parse(r.out)["magic"] == false);
}

TEST_CASE("verify over other carriers") {
  auto r = run("verify --modulus 5 " + data("loh_shu.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "GMS over Z_5, order 3, constant 0\n");

  r = run("verify --ring " + data("loh_shu.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("multiplicatively") != std::string::npos);

  Scratch tmp;
  write(tmp("c.json"), R"({"order": 3, "modulus": null, "entries": [[1,2,3],[3,1,2],[2,3,1]]})");
  r = run("verify --ring --json " + tmp("c.json"));
  CHECK(r.code == 0);
  const auto doc = Json::parse(r.out);
  CHECK(doc["additive_constant"] == "6");
  CHECK(doc["multiplicative_constant"] == "6");
}

TEST_CASE("usage and parse errors exit with 2") {
  Scratch tmp;
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify").code == 2);
  CHECK(run("verify " + tmp("missing.json")).code == 2);
  write(tmp("bad.json"), "{not json");
  CHECK(run("verify " + tmp("bad.json")).code == 2);
  write(tmp("ragged.json"), R"({"entries": [[1,2],[3]]})");
  CHECK(run("verify " + tmp("ragged.json")).code == 2);
  CHECK(run("verify --modulus x " + data("loh_shu.json")).code == 2);
  CHECK(run("combine scale " + data("loh_shu.json")).code == 2);
  CHECK(run("combine nope " + data("loh_shu.json")).code == 2);
  CHECK(run("enumerate -n 2 --lo 3 --hi 1").code == 2);
  CHECK(run("check-theorems --max-order 0").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("combine writes verifiable squares") {
  Scratch tmp;
  const auto l = data("loh_shu.json");
  auto r = run("combine direct-sum " + l + " " + l + " -o " + tmp("ds.json"));
  CHECK(r.code == 0);
  CHECK(r.out == "PMS, order 6, constant 30\n");
  CHECK(run("verify " + tmp("ds.json")).out == "PMS, order 6, constant 30\n");
  CHECK(load(tmp("ds.json"))["order"] == 6);

  r = run("combine scale " + l + " -k 0 -o " + tmp("z.json"));
  CHECK(r.code == 0);
  for (const auto& row : load(tmp("z.json"))["entries"])
    for (const auto& v : row) CHECK(v == 0);

  r = run("combine kron " + l + " " + l + " -o " + tmp("k.json"));
  CHECK(r.out == "PMS, order 9, constant 225\n");
  CHECK(run("verify " + tmp("k.json")).code == 0);

  r = run("combine shift " + l + " -k 1");
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["entries"][0][0] == 5);

  CHECK(run("combine add " + l + " " + data("neg5.json")).code == 1);
  CHECK(run("combine add " + l + " " + data("nonmagic.json")).code == 1);
}

TEST_CASE("ring operations report closure violations") {
  Scratch tmp;
  write(tmp("a.json"), R"({"modulus": 2, "entries": [[0,0,0],[0,1,1],[0,1,1]]})");
  write(tmp("b.json"), R"({"modulus": 2, "entries": [[0,0,1],[0,1,0],[1,0,0]]})");
  CHECK(run("combine add --ring " + tmp("a.json") + " " + tmp("b.json")).code == 1);
  // As a plain group the same sum is fine.
  CHECK(run("combine add " + tmp("a.json") + " " + tmp("b.json")).code == 0);

  write(tmp("c.json"), R"({"entries": [[1,2,3],[3,1,2],[2,3,1]]})");
  auto r = run("combine mul " + tmp("c.json") + " " + tmp("c.json") + " -o " + tmp("cc.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("additive constant 14, multiplicative constant 36") != std::string::npos);
  r = run("combine scalar-act " + tmp("c.json") + " -k 2 -o " + tmp("c2.json"));
  CHECK(r.out.find("additive constant 12, multiplicative constant 48") != std::string::npos);
  CHECK(run("verify --ring " + tmp("c2.json")).code == 0);
}

TEST_CASE("make") {
  Scratch tmp;
  CHECK(run("make loh-shu -o " + tmp("l.json")).out == "PMS, order 3, constant 15\n");
  CHECK(run("verify " + tmp("l.json")).out == "PMS, order 3, constant 15\n");
  auto r = run("make ones -n 4 --modulus 3 -o " + tmp("o.json"));
  CHECK(r.out == "ring GMS over Z_3, order 4, additive constant 1, multiplicative constant 1\n");
  CHECK(run("verify --ring " + tmp("o.json")).code == 0);
  CHECK(run("make zero -n 0").code == 2);
}

TEST_CASE("enumerate and basis") {
  auto r = run("enumerate -n 2 --lo 0 --hi 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("4 squares") != std::string::npos);
  r = run("enumerate -n 2 --lo 0 --hi 1 --classes --json");
  const auto doc = Json::parse(r.out);
  CHECK(doc["squares"] == 4);
  CHECK(doc["classes"] == 3);
  CHECK(run("enumerate -n 3 --lo 0 --hi 9 --constant 40").code == 1);

  r = run("basis -n 3 --json");
  CHECK(r.code == 0);
  const auto basis = Json::parse(r.out);
  CHECK(basis["rank"] == 5);
  for (const auto& b : basis["basis"]) CHECK_NOTHROW(verify(integer_entries(parse_matrix(b))));
}

TEST_CASE("matroid") {
  Scratch tmp;
  write(tmp("u23.json"),
        R"({"labels": ["a","b","c"], "independent": [[],[0],[1],[2],[0,1],[1,2],[0,2]]})");
  auto r = run("matroid " + tmp("u23.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("rank 2") != std::string::npos);
  write(tmp("bad.json"), R"({"labels": ["a","b"], "independent": [[],[0,1]]})");
  r = run("matroid " + tmp("bad.json"));
  CHECK(r.code == 1);
  CHECK(r.out.find("I.2") != std::string::npos);
  CHECK(run("matroid --basis 3").out == "matroid: ground 5, 32 independent sets, rank 5\n");
  CHECK(run("matroid --squares " + data("loh_shu.json") + " " + data("neg5.json")).code == 1);
  CHECK(run("matroid").code == 2);
}

TEST_CASE("check-theorems") {
  auto r = run("check-theorems --max-order 1 --trials 20");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("COUNTEREXAMPLE") == std::string::npos);
  CHECK(r.out.rfind("check-theorems seed=1 trials=20", 0) == 0);

  const auto a = run("check-theorems --seed 5 --trials 30 --workers 1");
  const auto b = run("check-theorems --seed 5 --trials 30 --workers 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("== ring-gms: COUNTEREXAMPLE") != std::string::npos);

  const auto j = Json::parse(run("check-theorems --max-order 2 --trials 10 --json").out);
  CHECK(j["completed"] == true);
  CHECK(j["sections"].size() == 5);
}

}
