#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded unless merged.
Run run(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string(BH_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::size_t count_substr(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("transpose") {
  Run r = run("transpose 'x^6*y + y^3 + z^2'");
  CHECK(r.status == 0);
  CHECK(r.out == "x^6 + x*y^3 + z^2\n");
  CHECK(run("transpose 'x^2 +'").status == 2);
  CHECK(run("transpose 'x^2 + x^2'").status == 2);
}

TEST_CASE("weights") {
  Run r = run("weights 'x^{11}+y^3+z^2'");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["canonical"] == nlohmann::json::array({6, 22, 33, 66}));
  CHECK(j["c_f"] == 1);
  CHECK(j["a"] == 5);
  auto k = nlohmann::json::parse(run("weights 'x^6+x*y^3+z^2'").out);
  CHECK(k["reduced"] == nlohmann::json::array({3, 5, 9, 18}));
  CHECK(k["c_f"] == 2);
}

TEST_CASE("diagrams") {
  Run curves = run("diagram --name E_20 --source curves --format json");
  REQUIRE(curves.status == 0);
  CHECK(nlohmann::json::parse(curves.out).size() == 19);
  for (const std::string src : {"rules", "ktheory"}) {
    CAPTURE(src);
    Run r = run("diagram --name E20 --source " + src + " --format json");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 20);
    for (std::size_t i = 0; i < 20; ++i) {
      CHECK(j[i].size() == 20);
      CHECK(j[i][i] == -2);
    }
  }
  Run dot = run("diagram --name S16 --source rules --format dot");
  REQUIRE(dot.status == 0);
  CHECK(dot.out.rfind("graph", 0) == 0);
  CHECK(count_substr(dot.out, "[label=") == 16);
  Run bad = run("diagram --name Z99", true);
  CHECK(bad.status == 3);
  CHECK(bad.out.find("valid names:") != std::string::npos);
  CHECK(run("diagram --name S16 --source nowhere").status == 2);
}

TEST_CASE("coxeter") {
  Run r = run("coxeter --name E_20");
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 20);
  CHECK(j["order"] == 66);
  CHECK(j["factorization"] == "Φ66");
  CHECK(j["matches_monodromy"] == true);
  auto rules = nlohmann::json::parse(run("coxeter --name E_20 --source rules").out);
  CHECK(rules["char_poly"] == j["char_poly"]);
}

TEST_CASE("lemma") {
  Run r = run("lemma c2 --m 3 --k 5");
  CHECK(r.status == 0);
  CHECK(r.out.find("E_2") != std::string::npos);
  Run d = run("lemma c2-double --k 8");
  CHECK(d.status == 0);
  CHECK(d.out.find("E_7 (2 branches") != std::string::npos);
  CHECK(run("lemma c2 --m 5 --k 5").status == 2);
  CHECK(run("lemma c2 --m 2 --k 7 --symbolic").out.find("meets:") != std::string::npos);
}

TEST_CASE("verify") {
  Run one = run("verify --name S16");
  CHECK(one.status == 0);
  auto j = nlohmann::json::parse(one.out);
  CHECK(j["rows"].size() == 1);
  CHECK(j["rows"][0]["passed"] == true);
  CHECK(run("verify").status == 2);
  CHECK(run("verify --name nope").status == 3);
  Run all = run("verify --all");
  auto ja = nlohmann::json::parse(all.out);
  CHECK(ja["rows"].size() == 20);
  bool passed = true;
  for (const auto& row : ja["rows"])
    passed = passed && row["passed"].get<bool>();
  CHECK(all.status == (passed ? 0 : 1));
}

TEST_CASE("tables and usage") {
  Run t = run("tables --format json");
  REQUIRE(t.status == 0);
  auto j = nlohmann::json::parse(t.out);
  CHECK(j["rows"].size() == 20);
  CHECK(nlohmann::json::parse(run("tables --conventions").out).size() == 4);
  CHECK(run("tables").out.find("E_20") != std::string::npos);
  CHECK(run("").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("--help").status == 0);
}
