#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "gridsets/report.hpp"

namespace gridsets {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<OutputRecord> parse_csv_text(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

TEST(Routing, ValidMatrix) {
  EXPECT_NO_THROW(check_routing(Family::CompleteColumn, Method::Transfer, 5));
  EXPECT_NO_THROW(check_routing(Family::PathColumn, Method::Recurrence, 4));
  EXPECT_NO_THROW(check_routing(Family::PathColumn, Method::Bound, 7));
  EXPECT_THROW(check_routing(Family::PathColumn, Method::Transfer, 3), UsageError);
  EXPECT_THROW(check_routing(Family::CompleteColumn, Method::Recurrence, 3), UsageError);
  EXPECT_THROW(check_routing(Family::PathColumn, Method::Recurrence, 5), UsageError);
  EXPECT_THROW(check_routing(Family::CompleteColumn, Method::Bound, 3), UsageError);
}

TEST(Routing, MethodsAgreeOnEveryCell) {
  for (Family family : {Family::CompleteColumn, Family::PathColumn})
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n)
        for (bool spanning : {false, true}) {
          std::set<std::string> values;
          for (Method method : {Method::Oracle, Method::Profile, Method::Transfer, Method::Recurrence, Method::Bound}) {
            CountRequest req{family, method, m, n, spanning};
            try {
              check_routing(family, method, m);
            } catch (const UsageError&) {
              continue;
            }
            const OutputRecord r = compute_record(req);
            EXPECT_TRUE(r.exact);
            values.insert(r.value);
          }
          EXPECT_EQ(values.size(), 1u) << family_name(family) << " " << m << "x" << n;
        }
}

TEST(Records, BoundFlagsInexactScheme) {
  const OutputRecord r = compute_record({Family::PathColumn, Method::Bound, 5, 3});
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.method, Method::Bound);
}

TEST(Records, CsvAndJsonRoundTrip) {
  std::mt19937 rng(23);
  std::vector<OutputRecord> records;
  for (int i = 0; i < 200; ++i) {
    OutputRecord r;
    r.m = 1 + static_cast<int>(rng() % 12);
    r.n = 1 + static_cast<int>(rng() % 40);
    r.family = rng() % 2 ? Family::CompleteColumn : Family::PathColumn;
    r.method = static_cast<Method>(rng() % 5);
    BigCount v = rng();
    for (int k = 0; k < static_cast<int>(rng() % 6); ++k) v = v * rng() + rng();
    r.value = to_decimal(v);
    r.exact = rng() % 2;
    r.elapsed_ms = static_cast<double>(rng() % 10'000'000) / 1000.0;
    records.push_back(r);
  }
  std::ostringstream csv, json;
  write_records(csv, records, Format::Csv);
  write_records(json, records, Format::Json);
  EXPECT_EQ(parse_csv_text(csv.str()), records);
  std::istringstream json_in(json.str());
  EXPECT_EQ(parse_json(json_in), records);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')), "m,n,family,method,value,exact,elapsed_ms");
}

TEST(Records, CsvParserRejectsGarbage) {
  EXPECT_THROW(parse_csv_text("m,n\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv_text(std::string(kCsvHeader) + "\n1,2,grid\n"), std::invalid_argument);
  EXPECT_THROW(parse_csv_text(std::string(kCsvHeader) + "\nx,2,grid,oracle,1,true,0\n"), std::invalid_argument);
}

TEST(Cli, CountTransfer) {
  const auto r = run_cli({"count", "--family", "k", "--m", "3", "--n", "3", "--method", "transfer", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = parse_csv_text(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].value, "300");
  EXPECT_EQ(recs[0].value, to_decimal(brute_count({3, 3, Family::CompleteColumn})));
}

TEST(Cli, CountRecurrenceAndOracle) {
  auto r = run_cli({"count", "--family", "grid", "--m", "4", "--n", "2", "--method", "recurrence", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_csv_text(r.out)[0].value, "108");
  r = run_cli({"count", "--family", "grid", "--m", "1", "--n", "6", "--method", "oracle", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_csv_text(r.out)[0].value, "21");
}

TEST(Cli, TableSpanningColumns) {
  auto r = run_cli({"table", "--family", "grid", "--m", "3", "--n-max", "4", "--method", "recurrence", "--spanning",
                    "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  auto recs = parse_csv_text(r.out);
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[0].value, "6");
  EXPECT_EQ(recs[1].value, "28");
  EXPECT_EQ(recs[2].value, "144");
  EXPECT_EQ(recs[3].value, "730");
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(recs[static_cast<std::size_t>(n - 1)].n, n);

  r = run_cli({"table", "--family", "k", "--m", "4", "--n-max", "4", "--method", "transfer", "--spanning", "--format",
               "json"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  recs = parse_json(in);
  std::vector<std::string> values;
  for (const auto& rec : recs) values.push_back(rec.value);
  EXPECT_EQ(values, (std::vector<std::string>{"15", "175", "2129", "25793"}));

  r = run_cli({"table", "--family", "grid", "--m", "2", "--n-max", "3", "--method", "bound", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  for (const auto& rec : parse_csv_text(r.out)) EXPECT_TRUE(rec.exact);
}

TEST(Cli, PlainFormat) {
  const auto r = run_cli({"count", "--family", "grid", "--m", "3", "--n", "4", "--method", "profile"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("value=1126 "), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({"count", "--family", "k", "--m", "3", "--n", "3", "--method", "recurrence"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--family", "grid", "--m", "5", "--n", "3", "--method", "recurrence"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--family", "grid", "--m", "3", "--n", "3", "--method", "transfer"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--family", "torus", "--m", "3", "--n", "3"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--m", "3"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  const auto r = run_cli({"count", "--family", "k", "--m", "3", "--n", "3", "--method", "bound"});
  EXPECT_NE(r.err.find("valid (family, method)"), std::string::npos);
}

TEST(Cli, BudgetFromEnvironment) {
  ::setenv("GRIDSETS_BUDGET", "8", 1);
  EXPECT_EQ(run_cli({"count", "--family", "grid", "--m", "3", "--n", "3", "--method", "oracle"}).code, 2);
  EXPECT_EQ(run_cli({"count", "--family", "grid", "--m", "2", "--n", "4", "--method", "oracle"}).code, 0);
  ::setenv("GRIDSETS_BUDGET", "lots", 1);
  EXPECT_EQ(run_cli({"count", "--family", "grid", "--m", "2", "--n", "2", "--method", "oracle"}).code, 2);
  ::unsetenv("GRIDSETS_BUDGET");
}

TEST(Cli, VerifyDefault) {
  const auto r = run_cli({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  for (const char* v : {"known |C'|(3,2): 9 == 9", "known |C'|(3,4): 399 == 399", "known |C'|(4,4): 16431 == 16431",
                        "known N*(4,4): 9362 == 9362", "known N*(3,4): 730 == 730"})
    EXPECT_NE(r.out.find(v), std::string::npos) << v;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyFiveRowsRecordsBound) {
  const auto r = run_cli({"verify", "--m-max", "5", "--n-max", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS  bound upper >= oracle grid count(5,3)"), std::string::npos);
}

TEST(Cli, VerifyTwoRowsHasNoExcess) {
  const auto r = run_cli({"verify", "--m-max", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS  excess vanishes for m<=2(2,4): 0 == 0"), std::string::npos);
  EXPECT_EQ(r.out.find("known"), std::string::npos);
}

TEST(Cli, VerifyReportsSkipsNotFailures) {
  ::setenv("GRIDSETS_BUDGET", "6", 1);
  const auto r = run_cli({"verify", "--m-max", "3", "--n-max", "3"});
  ::unsetenv("GRIDSETS_BUDGET");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIP"), std::string::npos);
}

TEST(Cli, VerifyFailureGivesExitOne) {
  VerifyReport report;
  report.checks.push_back({"x", "1", "==", "2", CheckStatus::Fail});
  EXPECT_FALSE(report.ok());
}

}  // namespace
}  // namespace gridsets
