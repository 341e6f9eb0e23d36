#include "dualart/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include "dualart/error.hpp"
#include "json.hpp"

namespace dualart {

namespace {
constexpr const char* kSchema = "dualart.cache/1";
}

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path Cache::path_of(const std::string& key) const { return dir_ / (key + ".json"); }

std::optional<CacheEntry> Cache::get(const std::string& key) const {
  const auto path = path_of(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(ss.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw CorruptCacheEntry(path.string() + " is not valid JSON");
  try {
    if (j.at("schema") != kSchema || j.at("key") != key)
      throw CorruptCacheEntry(path.string() + " has the wrong schema or key");
    CacheEntry e{j.at("payload").get<std::string>(), j.at("exit_code").get<int>()};
    if (j.at("sha256") != sha256_hex(e.payload))
      throw CorruptCacheEntry(path.string() + " fails its hash check");
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw CorruptCacheEntry(path.string() + ": " + ex.what());
  }
}

void Cache::put(const std::string& key, const CacheEntry& entry) const {
  const nlohmann::json j{{"schema", kSchema},
                         {"key", key},
                         {"sha256", sha256_hex(entry.payload)},
                         {"payload", entry.payload},
                         {"exit_code", entry.exit_code}};
  const auto path = path_of(key);
  auto tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace dualart
