#include "ffcalc/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace ffcalc;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FFCALC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    out.push_back(line);
  }
  return out;
}

}  // namespace

TEST(CliGolden, ExtendedTableCsv) {
  const auto r = invoke({"table", "stirling1", "--paper-table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("stirling1_extended.csv"));
}

TEST(CliGolden, ExtendedTableJson) {
  const auto r = invoke({"table", "stirling1", "--paper-table", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, golden("stirling1_extended.json"));
}

TEST(CliGolden, EnumFiveThree) {
  EXPECT_EQ(invoke({"enum", "--n", "5", "--l", "3"}).out, golden("enum_5_3.txt"));
  EXPECT_EQ(invoke({"enum", "--n", "5", "--l", "3", "--format", "csv"}).out, golden("enum_5_3.csv"));
  EXPECT_EQ(invoke({"enum", "--n", "5", "--l", "3", "--format", "json"}).out, golden("enum_5_3.json"));
}

TEST(Cli, ExtendedTableShapeAndNotes) {
  const auto text = invoke({"table", "stirling1", "--paper-table"}).out;
  const auto rows = lines(text);
  ASSERT_EQ(rows.size(), 1u + 66u + 3u);
  EXPECT_EQ(rows[0], "n,k,exact,decimal");
  EXPECT_NE(text.find("5,3,35,35\n"), std::string::npos);
  EXPECT_NE(text.find("-2,1,-3/4,-0.750\n"), std::string::npos);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_TRUE(rows[67].starts_with("# note: "));
  EXPECT_TRUE(rows[68].starts_with("# note: "));
  EXPECT_TRUE(rows[69].starts_with("# note: "));
}

TEST(Cli, JsonRecordsRoundTrip) {
  const auto doc = nlohmann::json::parse(invoke({"table", "stirling1", "--nmin", "-4", "--nmax", "4", "--kmax", "6",
                                                 "--decimal", "--format", "json"})
                                             .out);
  EXPECT_EQ(doc["table"], "stirling1");
  ASSERT_EQ(doc["records"].size(), 9u * 7u);
  for (const auto& rec : doc["records"]) {
    const int n = std::stoi(rec["labels"][0].get<std::string>());
    const int k = std::stoi(rec["labels"][1].get<std::string>());
    EXPECT_EQ(parse_rational(rec["exact"].get<std::string>()), stirling1(n, k));
    EXPECT_TRUE(rec.contains("decimal"));
  }
}

TEST(Cli, OtherTables) {
  auto r = invoke({"table", "stirling2", "--nmax", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\n5,3,25\n"), std::string::npos);
  r = invoke({"table", "acoeff", "--nmax", "3", "--kmax", "2"});
  EXPECT_NE(r.out.find("\n2,1,3/2\n"), std::string::npos);
  r = invoke({"table", "rstirling", "--nmax", "3", "--r", "2"});
  EXPECT_NE(r.out.find("\n3,1,2,5\n"), std::string::npos);
  r = invoke({"table", "esh", "--nmax", "3", "--r", "0"});
  EXPECT_EQ(r.out.substr(0, 14), "n,l,r,v,exact\n");
  EXPECT_NE(r.out.find("\n3,1,0,1,11/6\n"), std::string::npos);
}

TEST(Cli, EvalDerivAllRoutes) {
  const auto r = invoke({"eval", "deriv", "--n", "3", "--l", "2", "--m", "3", "--all-routes"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n,l,m,route,exact\n3,2,3,oracle,12\n3,2,3,symbolic,12\n3,2,3,harmonic,12\n3,2,3,stirling,12\n"
            "# note: verdict MATCH\n");
}

TEST(Cli, EvalSingleValues) {
  EXPECT_EQ(invoke({"eval", "deriv", "--n", "3", "--l", "1", "--m", "1", "--route", "harmonic"}).out,
            "n,l,m,route,exact\n3,1,1,harmonic,-1\n");
  EXPECT_EQ(invoke({"eval", "deriv-poly", "--n", "3", "--l", "2"}).out, "n,l,j,exact\n3,2,0,-6\n3,2,1,6\n");
  EXPECT_EQ(invoke({"eval", "deriv-poly", "--n", "3", "--l", "1", "--at", "1/2"}).out, "n,l,x,exact\n3,1,1/2,-1/4\n");
  EXPECT_EQ(invoke({"eval", "theta", "--n", "3", "--missing", "1", "--at", "4"}).out,
            "n,missing,x,exact\n3,<1>,4,8\n");
  EXPECT_EQ(invoke({"eval", "esh", "--n", "5", "--l", "2", "--r", "3"}).out, "n,l,r,v,exact\n5,2,3,1,1/20\n");
}

TEST(Cli, Verify) {
  auto r = invoke({"verify", "--max-n", "4", "--only", "EQ72,EQ101"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("EQ72 PASS"), std::string::npos);
  EXPECT_NE(r.out.find("2 identities, 0 failing"), std::string::npos);
  r = invoke({"verify", "--max-n", "3", "--only", "EQ89", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["failures"], 0);
  EXPECT_EQ(doc["reports"][0]["id"], "EQ89");
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{},
                                             {"bogus"},
                                             {"table", "nothing"},
                                             {"enum", "--n", "5"},
                                             {"enum", "--n", "x", "--l", "2"},
                                             {"verify", "--only", "EQ999"},
                                             {"eval", "theta", "--n", "3", "--missing", "7"},
                                             {"eval", "deriv-poly", "--n", "3", "--at", "1/0"},
                                             {"table", "stirling2", "--paper-table"}}) {
    const auto r = invoke(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args[0]);
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
  }
}

TEST(Cli, HelpGoesToStdout) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
