#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cliquemax/algebra.hpp"
#include "cliquemax/graph.hpp"

namespace cliquemax {

/// Environment variable naming the cache directory.
inline constexpr const char* kCacheDirEnv = "CLIQUEMAX_CACHE_DIR";

/// k_t values keyed by (canonical certificate, t), persisted as a
/// tab-separated file. A file that fails to parse is discarded with a
/// warning and rebuilt on the next flush.
class CliqueCache {
 public:
  explicit CliqueCache(std::filesystem::path directory, std::ostream& warnings = std::cerr);
  ~CliqueCache();
  CliqueCache(const CliqueCache&) = delete;
  CliqueCache& operator=(const CliqueCache&) = delete;

  /// $CLIQUEMAX_CACHE_DIR, else $HOME/.cache/cliquemax, else ./.cliquemax-cache.
  static std::filesystem::path default_directory();

  std::optional<BigInt> get(const std::string& certificate, int t);
  void put(const std::string& certificate, int t, const BigInt& value);
  /// k_t(g) through the cache; graphs too large to canonize bypass it.
  BigInt count(const Graph& g, int t);

  /// Writes all entries; a no-op when nothing changed.
  void flush();

  std::filesystem::path file() const { return directory_ / "kt_cache.tsv"; }
  std::size_t size() const { return entries_.size(); }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }
  /// The file on disk was corrupt and is being rebuilt.
  bool rebuilt() const { return rebuilt_; }

 private:
  void load();

  std::filesystem::path directory_;
  std::ostream& warnings_;
  std::map<std::pair<std::string, int>, BigInt> entries_;
  std::uint64_t hits_ = 0;
  std::uint64_t misses_ = 0;
  bool dirty_ = false;
  bool rebuilt_ = false;
};

}  // namespace cliquemax
