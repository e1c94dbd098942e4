#include "cliquemax/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cliquemax/canonical.hpp"
#include "cliquemax/counting.hpp"

namespace cliquemax {

namespace {

constexpr const char* kHeader = "# cliquemax k_t cache v1";

bool valid_certificate(const std::string& cert) {
  if (cert.empty()) return false;
  for (char c : cert) {
    if (c < 63 || c > 126) return false;
  }
  return true;
}

}  // namespace

CliqueCache::CliqueCache(std::filesystem::path directory, std::ostream& warnings)
    : directory_(std::move(directory)), warnings_(warnings) {
  load();
}

CliqueCache::~CliqueCache() {
  try {
    flush();
  } catch (const std::exception& e) {
    warnings_ << "warning: could not save clique cache: " << e.what() << '\n';
  }
}

std::filesystem::path CliqueCache::default_directory() {
  if (const char* dir = std::getenv(kCacheDirEnv); dir && *dir) return dir;
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "cliquemax";
  return ".cliquemax-cache";
}

void CliqueCache::load() {
  std::ifstream in(file());
  if (!in) return;
  std::string line;
  std::size_t line_number = 0;
  bool corrupt = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (line_number == 1) {
      corrupt = line != kHeader;
      if (corrupt) break;
      continue;
    }
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string cert, t_text, value_text, extra;
    if (!std::getline(fields, cert, '\t') || !std::getline(fields, t_text, '\t') ||
        !std::getline(fields, value_text, '\t') || std::getline(fields, extra, '\t')) {
      corrupt = true;
      break;
    }
    if (!valid_certificate(cert) || t_text.empty() || t_text.find_first_not_of("0123456789") != std::string::npos ||
        t_text.size() > 4 || value_text.empty() || value_text.find_first_not_of("0123456789") != std::string::npos) {
      corrupt = true;
      break;
    }
    entries_[{cert, std::stoi(t_text)}] = BigInt(value_text);
  }
  if (line_number == 0) corrupt = true;
  if (corrupt) {
    warnings_ << "warning: clique cache " << file().string() << " is corrupt; rebuilding it\n";
    entries_.clear();
    rebuilt_ = true;
    dirty_ = true;
  }
}

std::optional<BigInt> CliqueCache::get(const std::string& certificate, int t) {
  const auto it = entries_.find({certificate, t});
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void CliqueCache::put(const std::string& certificate, int t, const BigInt& value) {
  if (!valid_certificate(certificate)) throw std::invalid_argument("cache key is not a graph6 certificate");
  if (t < 0) throw std::invalid_argument("negative clique order");
  const auto [it, inserted] = entries_.try_emplace({certificate, t}, value);
  if (inserted || it->second != value) dirty_ = true;
  it->second = value;
}

BigInt CliqueCache::count(const Graph& g, int t) {
  if (g.order() == 0 || g.order() > kMaxCanonicalOrder) return count_cliques(g, t);
  const std::string cert = canonical_form(g).certificate;
  if (auto hit = get(cert, t)) return *hit;
  BigInt value = count_cliques(g, t);
  put(cert, t, value);
  return value;
}

void CliqueCache::flush() {
  if (!dirty_) return;
  std::filesystem::create_directories(directory_);
  std::filesystem::path tmp = file();
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << kHeader << '\n';
    for (const auto& [key, value] : entries_) out << key.first << '\t' << key.second << '\t' << value << '\n';
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file());
  dirty_ = false;
}

}  // namespace cliquemax
