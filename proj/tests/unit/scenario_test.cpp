#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bicanon/tools/scenario.hpp"

using namespace bicanon::tools;
namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kBuiltins{"inoue7", "beauville8", "inoue-z24", "fermat-z52", "proofcheck-all"};

struct Proc {
  int code;
  std::string out;
};

// Runs the real binary; stderr is folded into out.
Proc cli(const std::string& args) {
  const std::string cmd = std::string(BICANON_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string last_line(const std::string& text) {
  auto end = text.find_last_not_of('\n');
  auto start = text.rfind('\n', end);
  return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto dir = fs::temp_directory_path() / "bicanon_scenario_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

Json builtin_json(const std::string& name) { return Json::parse(*builtin_text(name)); }

std::vector<fs::path> example_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(BICANON_SCENARIO_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Builtins, ExactlyTheFiveBundledScenarios) {
  EXPECT_EQ(builtin_names(), kBuiltins);
  const auto p = cli("list-builtin");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "inoue7\nbeauville8\ninoue-z24\nfermat-z52\nproofcheck-all\n");
}

TEST(Builtins, EachResolvesAndMatchesItsFile) {
  for (const auto& name : kBuiltins) {
    const auto o = execute(name, false, false);
    EXPECT_EQ(o.exit_code, 0) << name << ": " << o.err;
    // the embedded copy is the file in scenarios/
    EXPECT_EQ(builtin_json(name), Json::parse(std::ifstream(fs::path(BICANON_SCENARIO_DIR) / (name + ".json"))));
  }
  EXPECT_FALSE(builtin_text("inoue8").has_value());
}

TEST(Run, Inoue7Conclusion) {
  const auto p = cli("run inoue7");
  ASSERT_EQ(p.code, 0) << p.out;
  EXPECT_EQ(last_line(p.out), "K²=7, p_g=0, p₂=8, eigentable (7,1,0,0), bicanonical composed with γ₁, degree 2");
}

TEST(Run, Beauville8Kernel) {
  const auto p = cli("run " + (fs::path(BICANON_SCENARIO_DIR) / "beauville8.json").string());
  ASSERT_EQ(p.code, 0) << p.out;
  EXPECT_NE(p.out.find("kernel {0, γ₃}, degree 2"), std::string::npos) << p.out;
}

TEST(Run, InoueZ24Birational) {
  const auto r = run_scenario(builtin_json("inoue-z24"));
  EXPECT_EQ(r.body["genera"], Json::array({5, 5}));
  EXPECT_EQ(r.body["bidegree"], Json::array({1, 1}));
  EXPECT_EQ(r.body["kernel"], Json::array({"0"}));
  EXPECT_EQ(r.body["verdict"], "birational");
}

TEST(Run, FermatJson) {
  const auto p = cli("run --json fermat-z52");
  ASSERT_EQ(p.code, 0) << p.out;
  const auto j = Json::parse(p.out);
  EXPECT_EQ(j["result"]["invariant_monomials"].size(), 9u);
  EXPECT_EQ(j["result"]["invariant_monomial_count"], 9);
  EXPECT_EQ(j["result"]["verdict"], "birational");
}

TEST(Run, ProofcheckAll) {
  const auto r = run_scenario(builtin_json("proofcheck-all"));
  ASSERT_EQ(r.body["case_table"].size(), 4u);
  for (const auto& row : r.body["case_table"]) EXPECT_EQ(row["K2_at_least_16(q-1)"], false);
  EXPECT_EQ(r.body["reider"]["multiples"], Json::array({1}));
  EXPECT_EQ(r.body["lattice_exclusion"]["excluded"], true);
}

TEST(Run, OtherKinds) {
  const auto dir = fs::path(BICANON_SCENARIO_DIR) / "more";
  auto load = [&](const std::string& f) { return Json::parse(std::ifstream(dir / f)); };

  const auto dc = run_scenario(load("double-cover.json"));
  const std::vector<std::array<int, 4>> expected{{16, 2, 4, 3}, {14, 2, 3, 2}, {16, 2, 4, 3}, {24, 3, 5, 3}};
  ASSERT_EQ(dc.body["covers"].size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& row = dc.body["covers"][i];
    EXPECT_EQ((std::array<int, 4>{row["K2"], row["chi"], row["pg"], row["q"]}), expected[i]);
  }

  const auto ls = run_scenario(load("linsys.json"));
  std::vector<int> h0;
  for (const auto& row : ls.body["systems"]) h0.push_back(row["h0"]);
  EXPECT_EQ(h0, (std::vector<int>{7, 1, 1, 1}));

  const auto lat = run_scenario(load("lattice.json"));
  EXPECT_EQ(lat.body["negative_definite"], true);
  EXPECT_EQ(lat.body["leading_minors"], Json::array({-2, 4, -8, 16}));
}

TEST(Output, DeterministicAcrossRuns) {
  for (const auto& name : kBuiltins) {
    for (const char* flags : {"", "--json ", "--verbose ", "--json --verbose "}) {
      const auto a = cli(std::string("run ") + flags + name);
      const auto b = cli(std::string("run ") + flags + name);
      ASSERT_EQ(a.code, 0) << name;
      EXPECT_EQ(a.out, b.out) << name << " " << flags;
    }
  }
}

TEST(Output, JsonRoundTrips) {
  std::vector<std::string> targets = kBuiltins;
  for (const auto& p : example_files()) targets.push_back(p.string());
  for (const auto& t : targets) {
    for (bool verbose : {false, true}) {
      const auto o = execute(t, true, verbose);
      ASSERT_EQ(o.exit_code, 0) << t << ": " << o.err;
      EXPECT_EQ(Json::parse(o.out).dump(2) + "\n", o.out) << t;
    }
  }
}

TEST(Output, TextAndJsonShareOneResult) {
  for (const auto& name : kBuiltins) {
    const auto text = execute(name, false, false).out;
    const auto json = Json::parse(execute(name, true, false).out);
    EXPECT_EQ(last_line(text), json["summary"].get<std::string>()) << name;
    EXPECT_EQ(text.substr(0, text.find('\n')), name + " [" + json["kind"].get<std::string>() + "]");
    for (auto it = json["result"].begin(); it != json["result"].end(); ++it)
      EXPECT_NE(text.find("  " + it.key() + ":"), std::string::npos) << name << " lacks " << it.key();
  }
}

TEST(ExitCodes, MalformedFileReportsLocation) {
  const auto p = write_temp("syntax.json", "{\n  \"kind\": \"fermat\",\n  \"name\": oops\n}\n");
  const auto r = cli("run " + p.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("syntax.json:3:11"), std::string::npos) << r.out;
}

TEST(ExitCodes, SchemaErrorsPointAtTheField) {
  auto doc = builtin_json("beauville8");
  doc["curve1"]["branch"][1]["element"] = Json::array({0, 1});
  const auto r = cli("run " + write_temp("schema.json", doc.dump()).string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("/curve1/branch/1/element"), std::string::npos) << r.out;

  for (const auto& [key, value] : std::vector<std::pair<std::string, Json>>{
           {"kind", "nope"}, {"psi", Json::array({Json::array({1, 0, 0}), Json::array({1, 0, 0}), Json::array({0, 0, 1})})},
           {"extra", 1}, {"group", Json::array({2, 2, 1})}}) {
    auto bad = builtin_json("beauville8");
    bad[key] = value;
    try {
      run_scenario(bad);
      ADD_FAILURE() << "accepted " << key;
    } catch (const ScenarioError& e) {
      EXPECT_EQ(e.location().substr(0, key.size() + 1), "/" + key) << e.what();
    }
  }
  EXPECT_THROW(run_scenario(Json::array()), ScenarioError);
  EXPECT_THROW(run_scenario(Json{{"name", "x"}}), ScenarioError);
}

TEST(ExitCodes, ValidationFailuresExitOne) {
  // perturbed line bundle degree
  auto beauville8 = builtin_json("beauville8");
  beauville8["curve2"]["line_bundles"][0]["degree"] = 2;
  EXPECT_EQ(cli("run " + write_temp("beauville8_bad.json", beauville8.dump()).string()).code, 1);

  // perturbed surface line bundle
  auto inoue7 = builtin_json("inoue7");
  inoue7["line_bundles"][0]["class"]["l"] = 6;
  const auto r = cli("run " + write_temp("inoue7_bad.json", inoue7.dump()).string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invalid building data"), std::string::npos) << r.out;

  // identity psi: gamma_3 has fixed points on both curves
  auto nf = builtin_json("beauville8");
  nf["psi"] = Json::array({Json::array({1, 0, 0}), Json::array({0, 1, 0}), Json::array({0, 0, 1})});
  const auto f = cli("run " + write_temp("not_free.json", nf.dump()).string());
  EXPECT_EQ(f.code, 1);
  EXPECT_NE(f.out.find("freely"), std::string::npos) << f.out;

  EXPECT_EQ(cli("run no-such-scenario").code, 1);
  EXPECT_EQ(cli("").code, 1);
  EXPECT_EQ(cli("run --bogus inoue7").code, 1);
}

TEST(ExitCodes, InconsistencyExitsTwo) {
  // an unramified Z2^2 cover is disconnected: q would be negative
  auto inoue7 = builtin_json("inoue7");
  inoue7["branch"] = Json::array();
  inoue7["line_bundles"] = Json::array();
  const auto r = cli("run " + write_temp("unramified.json", inoue7.dump()).string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("disconnected"), std::string::npos) << r.out;
}

TEST(Schema, CustomConfigurationAndSums) {
  // P1..P4 in general position plus nothing else: conics through all four form a pencil
  const Json doc = {{"kind", "linsys"},
                    {"configuration", {{"points", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}},
                                       {"noncollinear", {{0, 1, 2}, {0, 1, 3}}}}},
                    {"classes", {{{"class", {{"l", 2}, {"e1", -1}, {"e2", -1}, {"e3", -1}, {"e4", -1}}}},
                                 {{"name", "cubic"}, {"degree", 3}, {"multiplicities", {2, 1, 1, 1}}}}}};
  const auto r = run_scenario(doc);
  EXPECT_EQ(r.body["configuration"], "4 points");
  EXPECT_EQ(r.body["systems"][0]["h0"], 2);
  EXPECT_EQ(r.body["systems"][1]["h0"], 10 - 3 - 3);

  Json bad = doc;
  bad["configuration"]["collinear"] = {{0, 1, 2}};
  EXPECT_THROW(run_scenario(bad), ScenarioError);
}
