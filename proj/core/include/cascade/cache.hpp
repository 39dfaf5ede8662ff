// Persistent genus cache: canonical code -> Euler genus, stored as
// append-only TSV. Safe for concurrent idempotent insertion.
#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "cascade/canonical.hpp"

namespace cascade {

class GenusCache {
 public:
  GenusCache() = default;

  // Binds the cache to a file and loads existing entries. Later insertions
  // are appended to the file as they happen.
  void open(const std::string& path);

  std::optional<int> lookup(const CanonicalForm& key) const;
  void insert(const CanonicalForm& key, int genus);

  size_t size() const;
  size_t hits() const { return hits_; }
  size_t misses() const { return misses_; }

 private:
  mutable std::mutex mu_;
  std::map<std::string, int> entries_;
  std::string path_;
  mutable size_t hits_ = 0, misses_ = 0;
};

}  // namespace cascade
