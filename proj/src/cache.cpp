#include "nichols/cache.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace nichols {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string out;
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", md[k]);
    out += buf;
  }
  return out;
}

ResultCache::ResultCache(std::filesystem::path dir, std::string engine_version)
    : dir_(std::move(dir)), version_(std::move(engine_version)) {}

std::optional<ResultCache> ResultCache::from_environment() {
  const char* d = std::getenv("NICHOLS_CACHE_DIR");
  if (d == nullptr || *d == '\0') return std::nullopt;
  return ResultCache(d);
}

std::string ResultCache::key(const std::string& command, const Json& input, const Json& options) const {
  const Json k{{"command", command}, {"input", input}, {"options", options}, {"engine_version", version_}};
  return sha256_hex(k.dump());
}

std::filesystem::path ResultCache::entry_path(const std::string& key) const { return dir_ / (key + ".json"); }

void ResultCache::discard(const std::filesystem::path& p) {
  std::error_code ec;
  std::filesystem::remove(p, ec);
  ++discarded_;
}

std::optional<Json> ResultCache::get(const std::string& key) {
  const auto p = entry_path(key);
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  in.close();
  Json entry = Json::parse(ss.str(), nullptr, false);
  if (entry.is_discarded() || !entry.is_object() || !entry.contains("result") || !entry.contains("sha256") ||
      !entry["sha256"].is_string() || entry.value("key", "") != key || entry.value("engine_version", "") != version_) {
    discard(p);
    return std::nullopt;
  }
  Json result = entry["result"];
  if (sha256_hex(result.dump()) != entry["sha256"].get<std::string>()) {
    discard(p);
    return std::nullopt;
  }
  return result;
}

void ResultCache::put(const std::string& key, const Json& value) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  const Json entry{{"key", key}, {"engine_version", version_}, {"sha256", sha256_hex(value.dump())}, {"result", value}};
  const auto p = entry_path(key);
  auto tmp = p;
  tmp += "." + std::to_string(::getpid()) + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << entry.dump();
    if (!out) return;
  }
  std::filesystem::rename(tmp, p, ec);
}

}  // namespace nichols
