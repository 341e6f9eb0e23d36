#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace dualart {

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

struct CacheEntry {
  std::string payload;
  int exit_code = 0;
};

/// Content-addressed store of command outputs, one JSON file per key.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_of(const std::string& key) const;

  /// nullopt on a miss. Throws CorruptCacheEntry when the file does not
  /// parse or its hash does not match the payload.
  std::optional<CacheEntry> get(const std::string& key) const;
  /// Written to a temporary file first, then renamed into place.
  void put(const std::string& key, const CacheEntry& entry) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace dualart
