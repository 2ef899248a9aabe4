#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(NICHOLS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string datum_file(const char* name) { return std::string(NICHOLS_DATA_DIR) + "/datums/" + name; }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("rack check").code == 0);
  CHECK(run("rack check --corrupt").code == 1);
  CHECK(run("rack check --rack o9_9").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("rack").code == 2);
  CHECK(run("rack check --format xml").code == 2);
  CHECK(run("appendix verify --params nokey").code == 2);
  CHECK(run("appendix verify --file /nonexistent.json").code == 2);
  CHECK(run("comodule build").code == 2);
  CHECK(run("comodule build --datum '{\"Y\": [\"(9 9)\"]}'").code == 2);
}

TEST_CASE("tables") {
  Run t = run("coideal table --rack o2_3 --format tsv");
  CHECK(t.code == 0);
  CHECK(t.out == "Y\tdim\tstabilizer\n[\"(1 2)\"]\t2\tZ2\n[\"(1 2)\",\"(1 3)\"]\t6\tZ2\n");

  Run t4 = run("coideal table --rack o2_4 --format tsv");
  std::istringstream in(t4.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "Y\tdim\tstabilizer");
  std::multiset<long> dims;
  while (std::getline(in, line)) {
    auto a = line.find('\t'), b = line.find('\t', a + 1);
    dims.insert(std::stol(line.substr(a + 1, b - a - 1)));
  }
  CHECK(dims == std::multiset<long>{2, 4, 6, 12, 24, 48, 96, 144, 288});

  Run j = run("coideal table --rack o2_4");
  auto js = nlohmann::json::parse(j.out);
  CHECK(js["rows"].size() == 9);
  CHECK(js["total"] == 576);
  CHECK(js.contains("catalog"));

  Run cl = run("rack classes --format tsv");
  CHECK(cl.code == 0);
  CHECK(cl.out.rfind("class\tsize\tin_R_prime\n", 0) == 0);
}

TEST_CASE("reports") {
  Run n = run("nichols dim --rack o2_3");
  CHECK(n.code == 0);
  auto j = nlohmann::json::parse(n.out);
  CHECK(j["dimension"] == 12);
  CHECK(j["hilbert"] == std::vector<int>{1, 3, 4, 3, 1});

  Run h = run("nichols dim --ql q3m --params beta=1");
  CHECK(h.code == 0);
  CHECK(nlohmann::json::parse(h.out)["dimension"] == 72);
  CHECK(run("nichols dim --ql q9").code == 2);

  CHECK(run("appendix verify").code == 0);
  Run bad = run("appendix verify --corrupt");
  CHECK(bad.code == 1);
  CHECK_FALSE(nlohmann::json::parse(bad.out)["violations"].empty());

  CHECK(run("classify duality --rack o2_4").code == 0);
  CHECK(run("hopf cocycle --group s3").code == 0);
  CHECK(run("hopf cocycle --group s3 --corrupt").code == 1);
  CHECK(run("comodule bigalois --ql q3m --params beta=1").code == 0);
  CHECK(run("comodule bigalois --ql q3m --params beta=1 --corrupt").code == 1);
}

TEST_CASE("comodule algebras from datum files") {
  std::string nine = datum_file("s3_item9.json"), five = datum_file("s3_item5.json");
  Run b = run("comodule build --datum " + nine);
  CHECK(b.code == 0);
  CHECK(nlohmann::json::parse(b.out)["dimension"]["data"]["dimension"] == 72);
  CHECK(run("comodule build --datum " + nine + " --corrupt").code == 1);
  CHECK(run("comodule coaction --datum " + nine).code == 0);
  CHECK(run("comodule coaction --datum " + nine + " --corrupt").code == 1);

  Run g = run("comodule galois --datum " + nine + " --prime 32003");
  CHECK(g.code == 0);
  CHECK(nlohmann::json::parse(g.out)["canonical_rank"]["data"]["rank"] == 5184);
  CHECK(run("comodule galois --datum " + five).code == 1);

  Run l = run("comodule loewy --datum " + five);
  CHECK(l.code == 0);
  CHECK(nlohmann::json::parse(l.out)["loewy"]["data"]["expected"] == std::vector<int>{2, 4, 4, 2});

  Run inl = run("comodule build --datum '{\"Y\": [\"(1 2)\"], \"F\": [\"(1 2)\"], "
                "\"xi\": [{\"pair\": [\"(1 2)\", \"(1 2)\"], \"value\": \"t\"}]}'");
  CHECK(inl.code == 0);
  CHECK(nlohmann::json::parse(inl.out)["dimension"]["data"]["dimension"] == 4);
}

TEST_CASE("identical runs give identical bytes") {
  for (const char* args : {"classify run --group s3", "coideal table --rack o2_4 --format tsv",
                           "comodule galois --datum " NICHOLS_DATA_DIR "/datums/s3_item9.json --seed 7"}) {
    Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}
