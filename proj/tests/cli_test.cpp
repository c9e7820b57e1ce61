#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + ORBIDEG_CLI + std::string(" ") + args +
                          " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("degree of the generator families") {
  const auto f = run("degree --q 1,1 --r 1,3 --e 1,3");
  CHECK(f.status == 0);
  CHECK(json_of(f)["degree"] == 3);
  const auto g = run("degree --q 1,2,3 --r 1,1,1 --e 6,3,2");
  CHECK(g.status == 0);
  CHECK(json_of(g)["degree"] == 6);
  const auto id = run("degree --q 1,1 --r 1,1 --e 1,1");
  CHECK(json_of(id)["degree"] == 1);
  const auto m = run(R"(degree --map '{"q":[1,1],"r":[1,3],"e":[1,3]}' --value 0,0/1)");
  CHECK(m.status == 0);
  CHECK(json_of(m)["weighted_count"] == 3);
  CHECK(json_of(m)["preimages"].size() == 1);
}

TEST_CASE("golden outputs") {
  CHECK(run("degree --q 1,1 --r 1,3 --e 1,3").out == golden("degree_f13.json"));
  CHECK(run("preimages --q 1,1,1 --r 1,1,3 --e 1,1,3 --value 0,0,0/1").out ==
        golden("preimages_f113_vertex.json"));
  CHECK(run("strata --wps 1,3").out == golden("strata_13.json"));
  CHECK(run("strata --circle reflection").out == golden("strata_reflection.json"));
  CHECK(run("circle-degree --map half-fold --y 1.5707963267948966").out ==
        golden("circle_half_fold_up.json"));
  CHECK(run("arc --samples 5").out == golden("arc_f13.csv"));
}

TEST_CASE("identical invocations are byte-identical") {
  CHECK(run("verify multiplicativity --seed 7").out == run("verify multiplicativity --seed 7").out);
  CHECK(run("degree --q 7,8,9 --r 1,1,1 --e 72,63,56").out ==
        run("degree --q 7,8,9 --r 1,1,1 --e 72,63,56").out);
}

TEST_CASE("strata reports") {
  const auto a = json_of(run("strata --wps 1,3"));
  CHECK(a["codim1_empty"] == true);
  CHECK(a["singular_points"] == 1);
  const auto b = json_of(run("strata --circle reflection"));
  CHECK(b["codim1_empty"] == false);
  CHECK(b["singular_points"] == 2);
  CHECK(json_of(run("strata --wps 1,1"))["singular_points"] == 0);
  CHECK(json_of(run("strata --circle rotation:4"))["singular_points"] == 0);
}

TEST_CASE("verify suites") {
  const auto all = run("verify all");
  CHECK(all.status == 0);
  for (const auto& r : json_of(all)) CHECK(r["passed"] == true);
  CHECK(run("verify counterexample").status == 0);
  CHECK(run("verify multiplicativity --seed 7").status == 0);
  CHECK(run("--format text verify covering").out.find("PASS") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("strata --wps 2,4").status == 2);
  CHECK(run("strata --wps 1,x").status == 2);
  CHECK(run("strata").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("degree --q 1,1 --r 1,3 --e 1,3 --value 1/3,0").status == 3);
  CHECK(run("degree --q 1,1 --r 1,3 --e 1,3 --value 1,1").status == 2);
  CHECK(run("degree --q 1,1 --r 1,3 --e 1,2").status == 4);
  CHECK(run("--cap 2 degree --q 1,1 --r 1,3 --e 1,3").status == 5);
  CHECK(run("degree --q 1,1 --r 1,3 --e 1,3", "ORBIDEG_ENUM_CAP=2").status == 5);
  CHECK(run("degree --q 1,1 --r 1,3 --e 1,3 --cap 3", "ORBIDEG_ENUM_CAP=2").status == 0);
  CHECK(run("verify nope").status == 2);
  CHECK(run("circle-degree --map half-fold --y 0").status == 3);
  CHECK(run("circle-degree --map power:1,2,1 --y 1").status == 2);
  CHECK(run("--config /nonexistent degree --q 1,1 --r 1,1 --e 1,1").status == 2);
}

TEST_CASE("config files") {
  const std::string path = "cli_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"format": "text", "cap": 2})";
  }
  CHECK(run("--config " + path + " degree --q 1,1 --r 1,3 --e 1,3").status == 5);
  const auto text = run("--config " + path + " degree --q 1,1 --r 1,1 --e 1,1");
  CHECK(text.status == 0);
  CHECK(text.out.rfind("degree 1", 0) == 0);
  std::remove(path.c_str());
}

TEST_CASE("lift diagnostics") {
  const auto l = run("lift --q 1,1 --r 1,3 --e 1,3 --direction 1 --step 1e-3");
  CHECK(l.status == 0);
  const auto j = json_of(l);
  CHECK(std::abs(j["residual"].get<double>()) < 1e-9);
  CHECK(std::abs(j["phase"].get<double>()) < 1e-2);
}
