#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "torusfill/cli.hpp"

using namespace torusfill;
using namespace torusfill::cli;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ParseExamples) {
  const Request a = parse_request({"verdict", "--structure", "xi", "--n", "-5"});
  EXPECT_EQ(a.command, Command::Verdict);
  EXPECT_EQ(std::get<ContactDescriptor>(a.payload), ContactDescriptor(XiA{-pow(mat2::T, -5), 1}));

  const Request b = parse_request({"rho", "--seq", "5,2,2,3"});
  EXPECT_EQ(b.command, Command::Rho);
  EXPECT_EQ(std::get<DSeq>(b.payload), (DSeq{5, 2, 2, 3}));
  EXPECT_EQ(b.format, Format::Text);

  try {
    (void)parse_request({"verdict", "--structure", "xi", "--m", "2", "--n", "-1"});
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("odd"), std::string::npos);
    EXPECT_FALSE(e.help().empty());
  }
}

TEST(Cli, ParseVariants) {
  EXPECT_EQ(std::get<Mat2>(parse_request({"classify", "--matrix", "0,1;-1,0"}).payload), mat2::S);
  EXPECT_EQ(std::get<Mat2>(parse_request({"h1", "--seq", "3"}).payload), -eval_a(DSeq{3}));
  EXPECT_EQ(parse_request({"--json", "h1", "--n", "3"}).format, Format::Json);
  EXPECT_EQ(parse_request({"h1", "--n", "3", "--json"}).format, Format::Json);
  EXPECT_EQ(parse_request({"verdict", "--seq", "3", "--budget", "12"}).options.budget.seq_sum, 12);
  EXPECT_EQ(std::get<ContactDescriptor>(parse_request({"verdict", "--structure", "eta", "--n", "-2"}).payload),
            ContactDescriptor(Eta{-2}));
  EXPECT_EQ(std::get<ContactDescriptor>(parse_request({"verdict", "--structure", "xi-prime", "--n", "-3"}).payload),
            ContactDescriptor(XiPrime{-3}));
  EXPECT_EQ(std::get<ContactDescriptor>(parse_request({"verdict", "--seq", "4", "--m", "3"}).payload),
            ContactDescriptor(XiA{-eval_a(DSeq{4}), 3}));
  EXPECT_EQ(std::get<ParabolicLedgerInput>(parse_request({"ledger", "--n", "-7"}).payload).n, -7);
  EXPECT_EQ(std::get<HyperbolicLedgerInput>(parse_request({"ledger", "--seq", "4"}).payload).monodromy,
            -eval_a(DSeq{4}));
  EXPECT_EQ(std::get<DivisorInput>(parse_request({"divisor", "--e", "0,-2,1"}).payload).e,
            (std::vector<Int>{0, -2, 1}));
  EXPECT_TRUE(std::get<McgInput>(parse_request({"mcg-verify", "--word", "a1 e"}).payload).word);
}

TEST(Cli, UsageErrors) {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"classify"},
           {"classify", "--n", "1", "--seq", "3"},
           {"classify", "--matrix", "1,2;3,4"},
           {"rho", "--seq", "2,2"},
           {"rho"},
           {"verdict", "--structure", "zeta", "--n", "1"},
           {"verdict", "--structure", "eta", "--seq", "3"},
           {"verdict", "--n", "-1", "--m", "0"},
           {"h1", "--n", "1", "--m", "3"},
           {"divisor", "--e", "1,x"},
           {"mcg-verify"},
           {"mcg-verify", "--word", "a9"},
           {"verdict", "--n", "-1", "--budget", "0"},
       }) {
    const CliRun r = run_cli(args);
    EXPECT_EQ(r.code, kExitUsage) << (args.empty() ? "" : args[0]);
    EXPECT_NE(r.err.find("usage error"), std::string::npos);
  }
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST(Cli, RunExamples) {
  const CliRun a = run_cli({"verdict", "--structure", "xi", "--n", "-5"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_NE(a.out.find("strong: No"), std::string::npos);
  EXPECT_NE(a.out.find("Theorem 1.1"), std::string::npos);

  const CliRun b = run_cli({"h1", "--n", "3"});
  EXPECT_NE(b.out.find("Z ⊕ Z_4"), std::string::npos);

  const CliRun c = run_cli({"rho", "--seq", "5,2,2,3"});
  EXPECT_NE(c.out.find("(3,5,2,2)"), std::string::npos);
}

TEST(Cli, UnknownVerdictExitCode) {
  // Open region: s >= 2 passing the necessary condition without a witness.
  const CliRun a = run_cli({"verdict", "--seq", "7,7"});
  if (a.out.find("strong: Unknown") != std::string::npos) {
    EXPECT_EQ(a.code, kExitUnknown);
  } else {
    EXPECT_EQ(a.code, kExitOk);
  }
  const CliRun b = run_cli({"verdict", "--seq", "5,2,2,3", "--budget", "5"});
  EXPECT_EQ(b.code, kExitUnknown);
  EXPECT_EQ(run_cli({"normal-form", "--seq", "5,2,2,3", "--budget", "5"}).code, kExitUnknown);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run_cli({"verdict", "--matrix", "0,1;-1,0"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"verdict", "--structure", "xi-prime", "--n", "2"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"divisor", "--e", "-2,-2"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"ledger", "--n", "-4"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"ledger", "--seq", "3"}).code, kExitDomain);
  EXPECT_EQ(run_cli({"mcg-verify", "--script", "/nonexistent/file"}).code, kExitDomain);
  const CliRun j = run_cli({"divisor", "--e", "-2,-2", "--json"});
  const Json parsed = Json::parse(j.out);
  EXPECT_EQ(parsed["error"]["kind"], "HypothesisFailed");
}

TEST(Cli, JsonRoundTripAndDeterminism) {
  const std::vector<std::vector<std::string>> cases{
      {"classify", "--seq", "3,2"},
      {"h1", "--n", "-6"},
      {"normal-form", "--matrix", "1,0;-1,1"},
      {"normal-form", "--seq", "5,2,2,3"},
      {"rho", "--seq", "4,2,5"},
      {"reduce", "--seq", "5,2,2,3"},
      {"ledger", "--n", "-9"},
      {"ledger", "--seq", "4"},
      {"verdict", "--seq", "7,2"},
      {"verdict", "--n", "-6"},
      {"embed-search", "--seq", "7,2"},
      {"divisor", "--e", "0,0"},
      {"mcg-verify", "--word", "a1^-2 e a1^2 a2"},
      {"mcg-verify", "--script", TORUSFILL_DATA_DIR "/psi_minus4.derivation"},
  };
  for (auto args : cases) {
    args.push_back("--json");
    const CliRun r1 = run_cli(args);
    const CliRun r2 = run_cli(args);
    EXPECT_EQ(r1.out, r2.out) << args[0];
    EXPECT_EQ(r1.code, r2.code);
    const Json j = Json::parse(r1.out);
    EXPECT_EQ(Json::parse(j.dump()), j);
    EXPECT_EQ(j.dump(2) + "\n", r1.out);
    const std::vector<std::string> keys{"command", "result", "citations", "warnings"};
    std::vector<std::string> got;
    for (auto it = j.begin(); it != j.end(); ++it) got.push_back(it.key());
    EXPECT_EQ(got, keys);
  }
}

TEST(Cli, YesNoClaimsCarryCitations) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verdict", "--n", "-6", "--json"},
           {"verdict", "--n", "-2", "--json"},
           {"verdict", "--seq", "8", "--json"},
           {"verdict", "--structure", "eta", "--n", "4", "--json"},
           {"verdict", "--structure", "xi-prime", "--n", "-4", "--json"},
       }) {
    const Json j = Json::parse(run_cli(args).out);
    EXPECT_FALSE(j["citations"].empty());
    EXPECT_EQ(j["citations"], j["result"]["verdict"]["citations"]);
  }
}

TEST(Cli, FixtureCorpus) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(TORUSFILL_FIXTURE_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  ASSERT_GE(files.size(), 10u);
  for (const fs::path& f : files) {
    std::ifstream in(f);
    const Json fixture = Json::parse(in);
    std::vector<std::string> args = fixture["args"].get<std::vector<std::string>>();
    for (auto& a : args)
      if (a.rfind("data/", 0) == 0) a = std::string(TORUSFILL_DATA_DIR) + a.substr(4);
    const CliRun r = run_cli(args);
    EXPECT_EQ(r.code, fixture["exit"].get<int>()) << f.filename();
    const Json got = Json::parse(r.out);
    EXPECT_EQ(got, fixture["report"]) << f.filename() << "\n" << got.dump(2);
  }
}
