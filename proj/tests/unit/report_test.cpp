#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cliquemax/report.hpp"
#include "cliquemax/verify.hpp"

using namespace cliquemax;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cliquemax-report-test";
  fs::create_directories(dir);
  return dir / name;
}

VerificationReport sample() {
  VerificationReport r;
  r.mode = "open";
  r.parameters.n = 10;
  r.parameters.a = 2;
  r.parameters.max_degree = 3;
  r.parameters.b = 2;
  r.parameters.t = 3;
  r.predicted_value = BigInt("1000000000000000000000000000000");
  r.observed_max = BigInt("1000000000000000000000000000001");
  r.witnesses = {"I?????????", "I??????A?"};
  r.witness_count = 18446744073709551615ULL;
  r.prediction_holds = false;
  r.uniqueness_class = UniquenessClass::violated;
  r.family_check = FamilyCheck::not_applicable;
  r.scope_warning = "note";
  r.graphs_examined = 3547;
  r.elapsed_seconds = 0.1 + 0.2;
  return r;
}

}  // namespace

TEST(Report, RoundTripIsLossless) {
  const fs::path path = scratch("round.json");
  const VerificationReport r = sample();
  RunManifest m = RunManifest::create("search-open", {{"a", "2"}, {"delta", "3"}});
  m.started_at = timestamp_now();
  m.finished_at = m.started_at;
  m.artifacts = {"x.g6"};
  write_report(path, r, m);
  const VerificationReport back = read_report(path);
  EXPECT_TRUE(back.same_outcome(r));
  EXPECT_EQ(back.elapsed_seconds, r.elapsed_seconds);
  EXPECT_EQ(read_document(path).manifest, m);

  VerificationReport plain = verify_prop_cmp(3, 2, 3);
  write_report(path, plain, m);
  EXPECT_TRUE(read_report(path).same_outcome(plain));
}

TEST(Report, BigIntegersAreDecimalStrings) {
  const fs::path path = scratch("big.json");
  write_report(path, sample(), RunManifest::create("x", {}));
  std::ifstream in(path);
  const Json doc = Json::parse(in);
  EXPECT_EQ(doc["schema_version"], kSchemaVersion);
  EXPECT_EQ(doc["body"]["predicted_value"], "1000000000000000000000000000000");
  EXPECT_EQ(doc["body"]["witness_count"], "18446744073709551615");
  EXPECT_EQ(doc.begin().key(), "schema_version");
}

TEST(Report, SeveralReportsInOneDocument) {
  const fs::path path = scratch("many.json");
  const auto reports = verify_theorem_range(6, 2, 3, 5);
  write_reports(path, reports, RunManifest::create("verify-theorem", {}));
  const auto back = read_reports(path);
  ASSERT_EQ(back.size(), reports.size());
  for (std::size_t i = 0; i < back.size(); ++i) EXPECT_TRUE(back[i].same_outcome(reports[i]));
  EXPECT_THROW(read_report(path), ReportIoError);
}

TEST(Report, SchemaMismatchIsDistinct) {
  const fs::path path = scratch("schema.json");
  write_report(path, sample(), RunManifest::create("x", {}));
  std::ifstream in(path);
  Json doc = Json::parse(in);
  in.close();
  doc["schema_version"] = kSchemaVersion + 1;
  std::ofstream(path) << doc.dump();
  EXPECT_THROW(read_report(path), SchemaMismatch);
  doc.erase("schema_version");
  std::ofstream(path) << doc.dump();
  EXPECT_THROW(read_report(path), SchemaMismatch);
}

TEST(Report, IoAndFormatErrors) {
  EXPECT_THROW(read_report(scratch("missing.json")), ReportIoError);
  const fs::path path = scratch("broken.json");
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(read_report(path), ReportIoError);
  std::ofstream(path) << R"({"schema_version": 1, "manifest": {}, "body": {}})";
  EXPECT_THROW(read_report(path), ReportIoError);
  EXPECT_THROW(write_report(scratch("no-such-dir") / "r.json", sample(), RunManifest::create("x", {})),
               ReportIoError);
}

TEST(Report, ConfigHashDependsOnlyOnSubcommandAndParameters) {
  const RunManifest a = RunManifest::create("verify-prop", {{"delta", "3"}, {"b", "2"}});
  RunManifest b = RunManifest::create("verify-prop", {{"delta", "3"}, {"b", "2"}});
  b.started_at = "later";
  EXPECT_EQ(a.config_hash, b.config_hash);
  EXPECT_NE(a.config_hash, RunManifest::create("verify-prop", {{"delta", "3"}, {"b", "1"}}).config_hash);
  EXPECT_NE(a.config_hash, RunManifest::create("verify-theorem", {{"delta", "3"}, {"b", "2"}}).config_hash);
}

TEST(Report, QuadraticNumbersKeepExactFields) {
  const QuadraticNumber q(BigRational(-7, 4), BigRational(7, 12), 29);
  const Json j = to_json(q);
  EXPECT_EQ(j["a"], "-7/4");
  EXPECT_EQ(j["d"], "29");
  EXPECT_EQ(quadratic_from_json(j), q);
}
