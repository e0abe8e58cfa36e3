#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(LOCALELAB_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return (fs::path(LOCALELAB_TEST_DATA) / name).string(); }

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("localelab_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Cli, GenThenVerify) {
  const fs::path dir = scratch("gen");
  ASSERT_EQ(run("gen --max-poset-size 3 --out " + dir.string()).code, 0);
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  EXPECT_TRUE(fs::exists(dir / "frames" / "p3-000.json"));
  const CliResult v = run("verify " + (dir / "manifest.json").string() + " --homs 50");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("disagreements: 0"), std::string::npos);
  EXPECT_NE(v.out.find("frames: 9"), std::string::npos);
}

TEST(Cli, CorruptedCorpusIsAHardError) {
  const fs::path dir = scratch("corrupt");
  ASSERT_EQ(run("gen --max-poset-size 2 --out " + dir.string()).code, 0);
  const fs::path victim = dir / "frames" / "p2-001.json";
  auto j = nlohmann::json::parse(slurp(victim));
  j["leq"][0][0] = false;
  std::ofstream(victim) << j.dump();
  EXPECT_EQ(run("verify " + (dir / "manifest.json").string()).code, 2);

  // A valid but different frame under the same id is caught by the hash.
  ASSERT_EQ(run("gen --max-poset-size 2 --out " + dir.string()).code, 0);
  fs::copy_file(dir / "frames" / "p2-000.json", victim, fs::copy_options::overwrite_existing);
  EXPECT_EQ(run("verify " + (dir / "manifest.json").string()).code, 2);

  fs::remove(victim);
  EXPECT_EQ(run("verify " + (dir / "manifest.json").string()).code, 2);
}

TEST(Cli, VerifyReportsFiniteCollapse) {
  const CliResult v = run("verify --max-poset-size 3 --props ed,ied,idm,boolean");
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("finite collapse: #ed = 8, #ied = 8, #idm = 8"), std::string::npos) << v.out;
}

TEST(Cli, VerifyIsDeterministic) {
  const fs::path a = scratch("det_a.csv");
  const fs::path b = scratch("det_b.csv");
  ASSERT_EQ(run("verify --max-poset-size 3 --homs 30 --seed 9 --format csv --out " + a.string()).code, 0);
  ASSERT_EQ(run("verify --max-poset-size 3 --homs 30 --seed 9 --format csv --out " + b.string()).code, 0);
  EXPECT_EQ(std::hash<std::string>{}(slurp(a)), std::hash<std::string>{}(slurp(b)));
  EXPECT_EQ(count(slurp(a), "\n"), 10U);
}

TEST(Cli, CheckFrame) {
  const CliResult r = run("check " + data("l5.json"));
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["frame-id"], "l5");
  EXPECT_FALSE(j["properties"]["ed"]["holds"].get<bool>());
  EXPECT_TRUE(j["consistent"].get<bool>());

  const CliResult csv = run("check " + data("chain3.json") + " --format csv --props ed,boolean");
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "frame-id,size,ed,boolean\nchain3,3,1,0\n");
}

TEST(Cli, CheckSymbolic) {
  const CliResult r = run("check --symbolic omega-chain");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["properties"]["idm"]["holds"].get<bool>());
  EXPECT_FALSE(j["properties"]["boolean"]["holds"].get<bool>());
  EXPECT_EQ(run("check --symbolic reals").code, 2);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("check " + data("m3.json")).code, 2);
  EXPECT_EQ(run("check " + data("truncated.json")).code, 2);
  EXPECT_EQ(run("check " + data("does_not_exist.json")).code, 2);
  EXPECT_EQ(run("check " + data("l5.json") + " --format yaml").code, 2);
  EXPECT_EQ(run("check " + data("l5.json") + " --props ed,regular").code, 2);
  EXPECT_EQ(run("gen --max-poset-size 9").code, 2);
  EXPECT_EQ(run("witness boolean idm").code, 2);
}

TEST(Cli, Witnesses) {
  const auto idm = nlohmann::json::parse(run("witness idm boolean --max-poset-size 2").out);
  EXPECT_EQ(idm["symbolic"]["frame"], "omega-chain");
  EXPECT_FALSE(idm["finite"].empty());

  const auto ied = nlohmann::json::parse(run("witness ied idm").out);
  EXPECT_EQ(ied["symbolic"]["frame"], "cofinite");
  EXPECT_TRUE(ied["finite"].empty());

  const auto ed = nlohmann::json::parse(run("witness ed ied --max-poset-size 3").out);
  EXPECT_TRUE(ed["finite"].empty());
  EXPECT_NE(ed["finite-note"].get<std::string>().find("no finite witness"), std::string::npos);
  EXPECT_TRUE(ed["symbolic"]["frame"].is_null());
  EXPECT_NE(ed["symbolic"]["note"].get<std::string>().find("out of scope"), std::string::npos);
}

TEST(Cli, ExportDot) {
  const CliResult c3 = run("export " + data("chain3.json"));
  EXPECT_EQ(c3.code, 0);
  EXPECT_EQ(count(c3.out, "[label="), 3U);
  EXPECT_EQ(count(c3.out, "->"), 2U);

  const CliResult l5 = run("export " + data("l5.json"));
  EXPECT_EQ(count(l5.out, "[label="), 5U);
  EXPECT_EQ(count(l5.out, "->"), 5U);

  const CliResult s = run("export " + data("chain3.json") + " --sublocales");
  EXPECT_EQ(count(s.out, "[label="), 4U);
  EXPECT_EQ(count(s.out, "->"), 4U);

  const fs::path out = scratch("export.json");
  EXPECT_EQ(run("export " + data("l5.json") + " --format json --out " + out.string()).code, 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(out))["n"], 5);
}
