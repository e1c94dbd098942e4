#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliquemax/algebra.hpp"
#include "cliquemax/verify.hpp"

namespace cliquemax {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolkitVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Where a run came from. config_hash depends only on the subcommand and
/// the parameters, in order.
struct RunManifest {
  std::string subcommand;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string config_hash;
  std::string started_at;
  std::string finished_at;
  std::vector<std::string> artifacts;
  std::string version = kToolkitVersion;

  static RunManifest create(std::string subcommand, std::vector<std::pair<std::string, std::string>> parameters);
  bool operator==(const RunManifest&) const = default;
};

/// UTC, ISO 8601 to the second.
std::string timestamp_now();

class ReportIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The file parses but carries another schema version (or none).
class SchemaMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const BigRational& r);
Json to_json(const QuadraticNumber& q);
Json to_json(const RunManifest& m);
Json to_json(const VerificationReport& r);
BigRational rational_from_json(const Json& j);
QuadraticNumber quadratic_from_json(const Json& j);
RunManifest manifest_from_json(const Json& j);
VerificationReport report_from_json(const Json& j);

/// A report file: schema version, manifest, then a subcommand-specific body.
struct Document {
  RunManifest manifest;
  Json body;
};

/// The whole document as written to disk.
Json document_json(const RunManifest& manifest, const Json& body);

/// Pretty-printed with stable key order; written to a temporary file first
/// and renamed into place.
void write_document(const std::filesystem::path& path, const RunManifest& manifest, const Json& body);
Document read_document(const std::filesystem::path& path);

void write_report(const std::filesystem::path& path, const VerificationReport& report, const RunManifest& manifest);
VerificationReport read_report(const std::filesystem::path& path);
/// Several reports from one run (a range of t) as an array body.
void write_reports(const std::filesystem::path& path, const std::vector<VerificationReport>& reports,
                   const RunManifest& manifest);
/// Accepts single-report and array bodies.
std::vector<VerificationReport> read_reports(const std::filesystem::path& path);

}  // namespace cliquemax
