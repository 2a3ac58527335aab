#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int rc;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + QSCHUR_BIN + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf{};
  size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::filesystem::path& f) {
  std::ifstream in(f);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::filesystem::path tmp = std::filesystem::temp_directory_path();

}  // namespace

TEST_CASE("gamma table") {
  const auto f = tmp / "qschur_gamma.csv";
  auto r = run("gamma-table --a-max 10 --r-max 10 --out " + f.string());
  REQUIRE(r.rc == 0);
  std::istringstream in(slurp(f));
  std::string line;
  std::getline(in, line);
  CHECK(line == "a,i,gamma");
  int rows = 0, ones = 0;
  while (std::getline(in, line)) {
    ++rows;
    int a, i;
    char c1, c2;
    std::istringstream ls(line);
    ls >> a >> c1 >> i >> c2;
    std::string g;
    std::getline(ls, g);
    if (i == 1) {
      ++ones;
      CHECK(g == "v^" + std::to_string(-a - 1));
    }
  }
  CHECK(rows == 121);
  CHECK(ones == 11);
}

TEST_CASE("negative canonical structure constants from mul") {
  auto r = run("mul --context limitA:2 --left \"[[0,1],[1,-3]]\" --right \"[[0,1],[1,-3]]\" --basis canonical");
  REQUIRE(r.rc == 0);
  CHECK(r.out ==
        "(v^2 + 2 + v^-2)*{[[-1,2],[2,-4]]} + (-2*v^2 - 1 - 2*v^-2)*{[[0,1],[1,-3]]} + "
        "(-v^4 - v^2 - 2 - v^-2 - v^-4)*{[[1,0],[0,-2]]}\n");
  auto j = run("cbstruct --context limitA:2 --left \"[[0,1],[1,-3]]\" --right \"[[0,1],[1,-3]]\" --format json");
  CHECK(j.rc == 0);
  CHECK(j.out.find("\"positive\": false") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("").rc == 2);
  CHECK(run("mul --context limitA:2").rc == 2);
  CHECK(run("bar --context limitQ:2 --cell \"[[1]]\"").rc == 2);
  CHECK(run("bar --context schurA:2:3 --cell \"[[1,1],[0,2]]\"").rc == 2);
  CHECK(run("verify no-such-suite").rc == 2);
  // needs shift 1
  CHECK(run("stabilize --context limitA:2 --cell \"[[0,1],[1,-3]]\" --shift-budget 0").rc == 1);
  CHECK(run("stabilize --context limitA:2 --cell \"[[0,1],[1,-3]]\"").rc == 0);
}

TEST_CASE("verify report is stable") {
  const auto f1 = tmp / "qschur_rep1.json", f2 = tmp / "qschur_rep2.json";
  auto a = run("verify q-comb negBLM rank-one --report " + f1.string());
  auto b = run("verify q-comb negBLM rank-one --report " + f2.string());
  CHECK(a.rc == 0);
  CHECK(b.rc == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(f1) == slurp(f2));
  CHECK(slurp(f1).find("\"suite\": \"negBLM\"") != std::string::npos);
  CHECK(slurp(f1).find("seconds") == std::string::npos);
}

TEST_CASE("flag engine and the cache") {
  const auto dir = tmp / "qschur_cli_cache";
  std::filesystem::remove_all(dir);
  const std::string env = "QSCHUR_CACHE=" + dir.string() + " ";
  const std::string args = "--context schurA:2:3 --left \"[[1,1],[0,1]]\" --right \"[[1,0],[1,1]]\"";
  auto f = run("mul " + args + " --engine flag", env);
  auto g = run("mul " + args);
  CHECK(f.rc == 0);
  CHECK(f.out == g.out);
  auto l = run("cache list", env);
  CHECK(l.out.find("[[1,1],[0,1]] [[1,0],[1,1]]") != std::string::npos);
  auto v = run("cache verify", env);
  CHECK(v.rc == 0);
  CHECK(v.out.rfind("ok ", 0) == 0);
  std::filesystem::remove_all(dir);
}
