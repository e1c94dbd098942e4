#include "cliquemax/report.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>

namespace cliquemax {

namespace {

std::string double_to_string(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

double double_from_string(const std::string& text) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("not a number: " + text);
  }
  return value;
}

std::uint64_t u64_from_string(const std::string& text) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw std::invalid_argument("not a count: " + text);
  }
  return value;
}

BigInt bigint_from_json(const Json& j) {
  const auto text = j.get<std::string>();
  if (text.empty() || text.find_first_not_of("-0123456789") != std::string::npos) {
    throw std::invalid_argument("not an integer: " + text);
  }
  return BigInt(text);
}

void put_optional(Json& j, const char* key, const std::optional<int>& value) {
  if (value) j[key] = std::to_string(*value);
}

std::optional<int> get_optional(const Json& j, const char* key) {
  if (!j.contains(key)) return std::nullopt;
  return std::stoi(j.at(key).get<std::string>());
}

}  // namespace

RunManifest RunManifest::create(std::string subcommand, std::vector<std::pair<std::string, std::string>> parameters) {
  RunManifest m;
  m.subcommand = std::move(subcommand);
  m.parameters = std::move(parameters);
  std::string description = m.subcommand;
  for (const auto& [key, value] : m.parameters) description += ';' + key + '=' + value;
  m.config_hash = cliquemax::config_hash(description);
  return m;
}

std::string timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

Json to_json(const BigRational& r) { return to_string(r); }

BigRational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

Json to_json(const QuadraticNumber& q) {
  Json j;
  j["a"] = to_string(q.rational_part());
  j["b"] = to_string(q.surd_coefficient());
  j["d"] = q.radicand().str();
  j["approx"] = q.to_double();
  return j;
}

QuadraticNumber quadratic_from_json(const Json& j) {
  return QuadraticNumber(rational_from_json(j.at("a")), rational_from_json(j.at("b")), bigint_from_json(j.at("d")));
}

Json to_json(const RunManifest& m) {
  Json j;
  j["subcommand"] = m.subcommand;
  Json params = Json::object();
  for (const auto& [key, value] : m.parameters) params[key] = value;
  j["parameters"] = params;
  j["config_hash"] = m.config_hash;
  j["started_at"] = m.started_at;
  j["finished_at"] = m.finished_at;
  j["artifacts"] = m.artifacts;
  j["version"] = m.version;
  return j;
}

RunManifest manifest_from_json(const Json& j) {
  RunManifest m;
  m.subcommand = j.at("subcommand").get<std::string>();
  for (const auto& [key, value] : j.at("parameters").items()) m.parameters.emplace_back(key, value.get<std::string>());
  m.config_hash = j.at("config_hash").get<std::string>();
  m.started_at = j.at("started_at").get<std::string>();
  m.finished_at = j.at("finished_at").get<std::string>();
  m.artifacts = j.at("artifacts").get<std::vector<std::string>>();
  m.version = j.at("version").get<std::string>();
  return m;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["mode"] = r.mode;
  Json params = Json::object();
  put_optional(params, "n", r.parameters.n);
  put_optional(params, "a", r.parameters.a);
  put_optional(params, "min_degree", r.parameters.min_degree);
  put_optional(params, "max_degree", r.parameters.max_degree);
  put_optional(params, "b", r.parameters.b);
  params["t"] = std::to_string(r.parameters.t);
  j["parameters"] = params;
  j["predicted_value"] = r.predicted_value.str();
  j["observed_max"] = r.observed_max.str();
  j["prediction_holds"] = r.prediction_holds;
  j["uniqueness_class"] = to_string(r.uniqueness_class);
  j["family_check"] = to_string(r.family_check);
  j["scope_warning"] = r.scope_warning ? Json(*r.scope_warning) : Json(nullptr);
  j["graphs_examined"] = std::to_string(r.graphs_examined);
  j["witness_count"] = std::to_string(r.witness_count);
  j["elapsed_seconds"] = double_to_string(r.elapsed_seconds);
  j["witnesses"] = r.witnesses;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.mode = j.at("mode").get<std::string>();
  const Json& params = j.at("parameters");
  r.parameters.n = get_optional(params, "n");
  r.parameters.a = get_optional(params, "a");
  r.parameters.min_degree = get_optional(params, "min_degree");
  r.parameters.max_degree = get_optional(params, "max_degree");
  r.parameters.b = get_optional(params, "b");
  r.parameters.t = std::stoi(params.at("t").get<std::string>());
  r.predicted_value = bigint_from_json(j.at("predicted_value"));
  r.observed_max = bigint_from_json(j.at("observed_max"));
  r.prediction_holds = j.at("prediction_holds").get<bool>();
  r.uniqueness_class = uniqueness_class_from_string(j.at("uniqueness_class").get<std::string>());
  r.family_check = family_check_from_string(j.at("family_check").get<std::string>());
  if (!j.at("scope_warning").is_null()) r.scope_warning = j.at("scope_warning").get<std::string>();
  r.graphs_examined = u64_from_string(j.at("graphs_examined").get<std::string>());
  r.witness_count = u64_from_string(j.at("witness_count").get<std::string>());
  r.elapsed_seconds = double_from_string(j.at("elapsed_seconds").get<std::string>());
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  return r;
}

Json document_json(const RunManifest& manifest, const Json& body) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["manifest"] = to_json(manifest);
  doc["body"] = body;
  return doc;
}

void write_document(const std::filesystem::path& path, const RunManifest& manifest, const Json& body) {
  const Json doc = document_json(manifest, body);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ReportIoError("cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
    if (!out) throw ReportIoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw ReportIoError("cannot move report into place at " + path.string() + ": " + ec.message());
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ReportIoError("cannot read " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ReportIoError("malformed report " + path.string() + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
    throw SchemaMismatch("report " + path.string() + " has no schema version");
  }
  const int version = doc["schema_version"].get<int>();
  if (version != kSchemaVersion) {
    throw SchemaMismatch("report " + path.string() + " has schema version " + std::to_string(version) +
                         ", expected " + std::to_string(kSchemaVersion));
  }
  try {
    return Document{manifest_from_json(doc.at("manifest")), doc.at("body")};
  } catch (const Json::exception& e) {
    throw ReportIoError("malformed report " + path.string() + ": " + e.what());
  }
}

void write_report(const std::filesystem::path& path, const VerificationReport& report, const RunManifest& manifest) {
  write_document(path, manifest, to_json(report));
}

VerificationReport read_report(const std::filesystem::path& path) {
  const Document doc = read_document(path);
  try {
    return report_from_json(doc.body);
  } catch (const std::exception& e) {
    throw ReportIoError("malformed report body in " + path.string() + ": " + e.what());
  }
}

void write_reports(const std::filesystem::path& path, const std::vector<VerificationReport>& reports,
                   const RunManifest& manifest) {
  Json body = Json::array();
  for (const auto& r : reports) body.push_back(to_json(r));
  write_document(path, manifest, body);
}

std::vector<VerificationReport> read_reports(const std::filesystem::path& path) {
  const Document doc = read_document(path);
  try {
    std::vector<VerificationReport> out;
    if (doc.body.is_array()) {
      for (const Json& item : doc.body) out.push_back(report_from_json(item));
    } else {
      out.push_back(report_from_json(doc.body));
    }
    return out;
  } catch (const std::exception& e) {
    throw ReportIoError("malformed report body in " + path.string() + ": " + e.what());
  }
}

}  // namespace cliquemax
