#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

#ifndef SURROUND_CLI_PATH
#define SURROUND_CLI_PATH "surround"
#endif

namespace {

struct CliResult {
  int code = -1;
  std::string out, err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("surround-cli-" + std::to_string(::getpid()) + "-" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  CliResult run(const std::string& args, const std::string& input = "") {
    std::string in = path("stdin.txt"), out = path("stdout.txt"), err = path("stderr.txt");
    std::ofstream(in) << input;
    std::string cmd = std::string("'") + SURROUND_CLI_PATH + "' " + args + " <'" + in + "' >'" + out + "' 2>'" + err + "'";
    int st = std::system(cmd.c_str());
    CliResult r;
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  std::string gen(const std::string& family, const std::string& file) {
    auto r = run("--quiet --out '" + path(file) + "' gen " + family);
    EXPECT_EQ(r.code, 0) << r.err;
    return path(file);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenWritesAnnotatedGraphs) {
  auto r = run("gen k-bipartite 3 3");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["n"], 6);
  EXPECT_EQ(j["edges"].size(), 9u);

  auto m = json::parse(slurp(gen("mols-graph 3", "g3.json")));
  EXPECT_EQ(m["n"], 18);
  auto h = run("--out '" + path("h.json") + "' gen hslm 1 13 3");
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(json::parse(h.out)["results"]["n"], 472);

  EXPECT_EQ(run("gen no-such-family 3").code, 1);
  EXPECT_EQ(run("gen k-bipartite 3").code, 1);
  EXPECT_EQ(run("gen mols-graph 6").code, 1);
}

TEST_F(Cli, SolveReportsVerdictsAndCertificates) {
  auto g = gen("k-bipartite 3 3", "k33.json");
  auto r = run("solve --graph '" + g + "' --variant vertex-r");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["command"], "solve");
  EXPECT_EQ(j["version"], "0.1.0");
  EXPECT_FALSE(j["config_hash"].get<std::string>().empty());
  EXPECT_EQ(j["results"]["k_star"], 3);
  EXPECT_EQ(j["results"]["verdicts"].back()["verdict"], "cop-win");

  auto f = run("solve --graph '" + g + "' --variant classical --k 1");
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(json::parse(f.out)["results"]["verdict"], "robber-win");

  auto b = run("--budget 10 solve --graph '" + g + "' --variant edge --k 3");
  EXPECT_EQ(b.code, 2);
  EXPECT_EQ(json::parse(b.out)["results"]["verdict"], "budget");

  EXPECT_EQ(run("solve --graph '" + path("missing.json") + "' --variant edge").code, 1);
  EXPECT_EQ(run("solve --graph '" + g + "' --variant sideways").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
}

TEST_F(Cli, WorkerCountDoesNotChangeResults) {
  auto g = gen("leafy 2 k-bipartite 1 1", "leafy.json");
  auto a = run("--workers 1 solve --graph '" + g + "' --variant vertex");
  auto b = run("--workers 3 solve --graph '" + g + "' --variant vertex");
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  auto ja = json::parse(a.out)["results"], jb = json::parse(b.out)["results"];
  EXPECT_EQ(ja["k_star"], 4);
  EXPECT_EQ(ja["k_star"], jb["k_star"]);
  ASSERT_EQ(ja["verdicts"].size(), jb["verdicts"].size());
  for (std::size_t i = 0; i < ja["verdicts"].size(); ++i) {
    EXPECT_EQ(ja["verdicts"][i]["verdict"], jb["verdicts"][i]["verdict"]);
    EXPECT_EQ(ja["verdicts"][i]["states"], jb["verdicts"][i]["states"]);
    EXPECT_EQ(ja["verdicts"][i]["placement"], jb["verdicts"][i]["placement"]);
  }
}

TEST_F(Cli, ConfigFileIsOverriddenByFlags) {
  auto g = gen("k-bipartite 3 3", "k33.json");
  std::ofstream(path("run.toml")) << "budget = 10\n";
  auto tight = run("--config '" + path("run.toml") + "' solve --graph '" + g + "' --variant edge --k 3");
  EXPECT_EQ(tight.code, 2);
  auto loose = run("--config '" + path("run.toml") + "' --budget 100000000 solve --graph '" + g + "' --variant edge --k 3");
  ASSERT_EQ(loose.code, 0) << loose.err;
  auto j = json::parse(loose.out);
  EXPECT_NE(j["config"].get<std::string>().find("100000000"), std::string::npos);
}

TEST_F(Cli, TableBatteries) {
  auto r = run("--out '" + path("t.json") + "' --quiet table prop1 --max-size 3");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(slurp(path("t.json")));
  EXPECT_EQ(j["results"]["fail"], 0);
  EXPECT_EQ(j["results"]["pass"], 30);
  for (const auto& row : j["results"]["tables"]["prop1"]) EXPECT_EQ(row["status"], "PASS") << row.dump();

  auto le = run("--quiet --out '" + path("le.json") + "' table leafy-edge --delta 3");
  ASSERT_EQ(le.code, 0) << le.err;
  EXPECT_EQ(json::parse(slurp(path("le.json")))["results"]["pass"], 4);
  EXPECT_EQ(run("table nothing").code, 1);
}

TEST_F(Cli, VerifyBounds) {
  auto r = run("verify-bounds --all-connected --max-n 4");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out)["results"];
  EXPECT_EQ(j["checked"], 9);
  EXPECT_EQ(j["violations"], 0);

  std::ofstream(path("split.json")) << R"({"n": 4, "edges": [[0, 1], [2, 3]]})";
  auto bad = run("verify-bounds --graph '" + path("split.json") + "'");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("not connected"), std::string::npos);
  EXPECT_EQ(run("verify-bounds").code, 1);
}

TEST_F(Cli, SimulateWritesTranscripts) {
  auto g = gen("leafy 2 k-bipartite 2 2", "leafy.json");
  auto r = run("--quiet --out '" + path("r.json") + "' simulate --graph '" + g +
               "' --cops scripted:leafy-two-phase-vr --robber adversary:greedy --seeds 0..3 --transcripts '" +
               path("tr") + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(slurp(path("r.json")))["results"];
  EXPECT_EQ(j["k"], 3);
  EXPECT_EQ(j["cop_wins"], 4);
  EXPECT_EQ(j["replay_failures"], 0);
  std::ifstream lines(path("tr") + "/transcripts.jsonl");
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    auto t = json::parse(line);
    EXPECT_EQ(t["outcome"], "cop-win");
    ++count;
  }
  EXPECT_EQ(count, 4u);
  EXPECT_TRUE(fs::exists(path("tr") + "/report.json"));

  auto c4 = gen("cycle 4", "c4.json");
  auto s = run("simulate --graph '" + c4 + "' --variant classical --k 1 --cops adversary:greedy --robber solver --steps 50");
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(json::parse(s.out)["results"]["step_limits"], 1);
  EXPECT_EQ(run("simulate --graph '" + c4 + "' --variant classical --k 1 --cops adversary:teleport --robber solver").code,
            1);
}

TEST_F(Cli, ExportDot) {
  auto g = gen("cycle 5", "c5.json");
  auto r = run("export-dot --graph '" + g + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("graph"), std::string::npos);
  EXPECT_NE(r.out.find("--"), std::string::npos);
}

TEST_F(Cli, PlayAsRobberGetsSurrounded) {
  auto g = gen("star 3", "star.json");
  std::string input;
  for (int i = 0; i < 50; ++i) input += "oops\n99\n0\n1\n2\n3\n";
  auto r = run("play --graph '" + g + "' --variant vertex --k 3 --as robber --opponent solver --transcript '" +
                   path("p.json") + "'",
               input);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("not a list of numbers"), std::string::npos);
  EXPECT_NE(r.out.find("pick one of"), std::string::npos);
  EXPECT_NE(r.out.find("The cops win"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("surrounded"), std::string::npos);
  EXPECT_EQ(json::parse(slurp(path("p.json")))["outcome"], "cop-win");
}

TEST_F(Cli, PlayAsCopOnCycleHitsStepLimit) {
  auto g = gen("cycle 4", "c4.json");
  // Place on 0, then try the opposite vertex first.
  std::string input = "0\n2\n";
  for (int i = 0; i < 200; ++i) input += "0\n1\n2\n3\n";
  auto r = run("play --graph '" + g + "' --variant classical --k 1 --as cop --opponent solver --steps 20", input);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("Step limit reached"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("not a legal joint move"), std::string::npos);
}
