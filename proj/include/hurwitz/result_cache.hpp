#pragma once

#include <optional>
#include <string>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Append-only single-file store of computed values, one JSON object per
/// line with a content hash; corrupt or foreign lines are skipped on read.
class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  std::optional<Rational> lookup(const std::string& key) const;
  void store(const std::string& key, const Rational& value) const;

  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Canonical cache key for a computation.
std::string cache_key(const std::string& command, int g, const std::string& lambda,
                      const std::string& nu, const std::string& signs);

}  // namespace hurwitz
