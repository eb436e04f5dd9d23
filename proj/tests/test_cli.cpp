#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

struct Invocation {
  std::string out;
  int status = -1;
};

Invocation run(const std::string& arguments, const std::string& environment = "") {
  const std::string command = environment + " " FLAGBOUND_CLI_PATH " " + arguments + " 2>/dev/null";
  Invocation result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
    result.out += buffer.data();
  }
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string data(const std::string& name) { return std::string(FLAGBOUND_TEST_DATA) + "/" + name; }

TEST(Cli, CastelnuovoTableIsBareValue) {
  const Invocation r = run("castelnuovo 3 6");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, CastelnuovoJson) {
  EXPECT_EQ(run("castelnuovo 5 1000 --format json").out, "{\"genus\":\"124251\"}\n");
}

TEST(Cli, FlagJsonHasExactlyThreeKeys) {
  const Invocation r = run("flag 5 1000 10 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "{\"lo\":\"149900/3\",\"hi\":\"151900/3\",\"hypothesesVerified\":false}\n");
}

TEST(Cli, FlagLengthOneIsCastelnuovoPoint) {
  EXPECT_EQ(run("flag 4 10 --format json").out, "{\"lo\":\"9\",\"hi\":\"9\",\"hypothesesVerified\":true}\n");
}

TEST(Cli, FlagReportListsChecks) {
  const Invocation r = run("flag 6 1000000 1000 10 --report");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("radical separation"), std::string::npos);
  EXPECT_NE(r.out.find("hypotheses.overall  fail"), std::string::npos);
}

TEST(Cli, CorollaryCsv) {
  const Invocation r = run("corollary 4 1000000 3 1 --format csv");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "bound,alternativeBound,alternativeBelow,regime,hypotheses\n"
            "999997000081/6,124999500032,true,onSmallSurface,pass\n");
}

TEST(Cli, TableAndJsonCarryTheSameValues) {
  const Invocation table = run("lemma --input " + data("worked_tail.json"));
  const Invocation json = run("lemma --input " + data("worked_tail.json") + " --format json");
  std::string rebuilt = "{";
  std::size_t start = 0;
  while (start < table.out.size()) {
    const std::size_t end = table.out.find('\n', start);
    const std::string line = table.out.substr(start, end - start);
    const std::size_t gap = line.find("  ");
    const std::string key = line.substr(0, gap);
    const std::string value = line.substr(line.find_first_not_of(' ', gap));
    const bool quoted = value != "true" && value != "false";
    rebuilt += (rebuilt.size() > 1 ? "," : "") + ("\"" + key + "\":") + (quoted ? "\"" + value + "\"" : value);
    start = end + 1;
  }
  EXPECT_EQ(rebuilt + "}\n", json.out);
}

TEST(Cli, Speciality) { EXPECT_EQ(run("speciality 1000 10 9").out, "503/5\n"); }

TEST(Cli, LemmaFromFile) {
  const Invocation r = run("lemma --input " + data("worked.json") + " --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"genus\":\"168\""), std::string::npos);
  EXPECT_NE(r.out.find("\"R\":\"1/7\""), std::string::npos);
  EXPECT_NE(r.out.find("\"identityHolds\":true"), std::string::npos);
}

TEST(Cli, LemmaTailAddsToGenus) {
  const Invocation r = run("lemma --input " + data("worked_tail.json") + " --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"genus\":\"173\""), std::string::npos);
}

TEST(Cli, LemmaRejectsInvalidInput) {
  EXPECT_EQ(run("lemma --input " + data("bad_profile.json")).status, 1);
  EXPECT_EQ(run("lemma --input " + data("small_degree.json")).status, 1);
  EXPECT_EQ(run("lemma --input " + data("missing.json")).status, 1);
}

TEST(Cli, ValidationErrorsExitOne) {
  EXPECT_EQ(run("castelnuovo 1 6").status, 1);
  EXPECT_EQ(run("castelnuovo 3 x").status, 1);
  EXPECT_EQ(run("flag 5 10 1000").status, 1);
  EXPECT_EQ(run("castelnuovo 3").status, 1);
  EXPECT_EQ(run("castelnuovo 3 6 --format xml").status, 1);
}

TEST(Cli, HypothesesEqualityIsDecidedExactly) {
  const Invocation r = run("hypotheses corollary 4 1296 5 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("\"overall\":\"fail\""), std::string::npos);
}

TEST(Cli, DigitBudgetEnvironmentOverridesFlag) {
  const Invocation fallback = run("hypotheses corollary 4 1296 5 --digit-budget 1000000", "FLAGBOUND_DIGIT_BUDGET=1");
  EXPECT_EQ(fallback.status, 3);
  const Invocation decided = run("hypotheses corollary 4 1297 5 --format json", "FLAGBOUND_DIGIT_BUDGET=1");
  EXPECT_EQ(decided.status, 0);
  EXPECT_NE(decided.out.find("\"exact\":false"), std::string::npos);
  EXPECT_EQ(run("castelnuovo 3 6", "FLAGBOUND_DIGIT_BUDGET=abc").status, 1);
}

TEST(Cli, VerifyPasses) {
  const Invocation r = run("verify --grid 6,100 --seeds 100");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("passed  true"), std::string::npos);
}

TEST(Cli, BatchPreservesOrderAndReportsWorstStatus) {
  const Invocation r = run("batch --jobs 4 --input " + data("batch.ndjson"));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.out,
            "{\"genus\":\"4\"}\n"
            "{\"lo\":\"149900/3\",\"hi\":\"151900/3\",\"hypothesesVerified\":false}\n"
            "{\"bound\":\"503/5\"}\n"
            "{\"error\":\"ambient dimension must be >= 2, got 1\",\"input\":{\"op\":\"castelnuovo\",\"N\":1,\"deg\":6}}\n"
            "{\"bound\":\"999997000081/6\",\"alternativeBound\":\"124999500032\",\"alternativeBelow\":true,"
            "\"regime\":\"onSmallSurface\",\"hypotheses\":\"pass\"}\n");
}

TEST(Cli, BatchFromStdin) {
  const Invocation r = run("batch < " + data("batch.ndjson") + " | head -1");
  EXPECT_EQ(r.out, "{\"genus\":\"4\"}\n");
}

}  // namespace
