#include "hurwitz/result_cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace hurwitz {
namespace {

std::string fnv1a_hex(const std::string& data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace

std::optional<Rational> ResultCache::lookup(const std::string& key) const {
  std::ifstream in(path_);
  if (!in) return std::nullopt;
  std::optional<Rational> found;
  std::string line;
  while (std::getline(in, line)) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key") || !j.contains("num") ||
        !j.contains("den") || !j.contains("hash"))
      continue;
    if (j["key"] != key) continue;
    std::string num = j["num"], den = j["den"];
    if (j["hash"] != fnv1a_hex(key + "|" + num + "|" + den)) continue;
    const BigInt n(num), d(den);
    Rational v(n, d);
    v.canonicalize();
    found = v;
  }
  return found;
}

void ResultCache::store(const std::string& key, const Rational& value) const {
  Rational v = value;
  v.canonicalize();
  const std::string num = v.get_num().get_str();
  const std::string den = v.get_den().get_str();
  nlohmann::json j{{"key", key},
                   {"num", num},
                   {"den", den},
                   {"hash", fnv1a_hex(key + "|" + num + "|" + den)}};
  std::ofstream out(path_, std::ios::app);
  out << j.dump() << "\n";
}

std::string cache_key(const std::string& command, int g, const std::string& lambda,
                      const std::string& nu, const std::string& signs) {
  std::string key = command + ";g=" + std::to_string(g) + ";l=" + lambda + ";n=" + nu;
  if (!signs.empty()) key += ";s=" + signs;
  return key;
}

}  // namespace hurwitz
