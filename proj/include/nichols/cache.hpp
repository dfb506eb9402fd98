#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "nichols/io.hpp"

namespace nichols {

inline constexpr const char* kEngineVersion = "1.0.0";

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& data);

/// Results keyed by a hash of the canonical input, the options and the engine version.
/// Entries carry their own checksum; unreadable or mismatched entries are deleted and reported as misses.
class ResultCache {
public:
  explicit ResultCache(std::filesystem::path dir, std::string engine_version = kEngineVersion);

  /// NICHOLS_CACHE_DIR, or nullopt when unset or empty.
  static std::optional<ResultCache> from_environment();

  std::string key(const std::string& command, const Json& input, const Json& options) const;
  std::optional<Json> get(const std::string& key);
  void put(const std::string& key, const Json& value);
  std::filesystem::path entry_path(const std::string& key) const;

  const std::filesystem::path& dir() const { return dir_; }
  /// Entries dropped as corrupt or stale since construction.
  std::size_t discarded() const { return discarded_; }

private:
  std::filesystem::path dir_;
  std::string version_;
  std::size_t discarded_ = 0;
  void discard(const std::filesystem::path& p);
};

}  // namespace nichols
