#include "cascade/cache.hpp"

#include <fstream>
#include <stdexcept>

namespace cascade {

void GenusCache::open(const std::string& path) {
  std::lock_guard lock(mu_);
  path_ = path;
  std::ifstream in(path);
  std::string code;
  int genus;
  while (in >> code >> genus) entries_[code] = genus;
}

std::optional<int> GenusCache::lookup(const CanonicalForm& key) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(code_hex(key));
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void GenusCache::insert(const CanonicalForm& key, int genus) {
  std::lock_guard lock(mu_);
  std::string hex = code_hex(key);
  auto [it, fresh] = entries_.emplace(hex, genus);
  if (!fresh) {
    if (it->second != genus)
      throw std::logic_error("genus cache: conflicting value for " + hex);
    return;
  }
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    out << hex << '\t' << genus << '\n';
  }
}

size_t GenusCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace cascade
