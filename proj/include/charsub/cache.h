#ifndef CHARSUB_CACHE_H_
#define CHARSUB_CACHE_H_

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "charsub/classify.h"
#include "charsub/harness.h"

namespace charsub {

inline constexpr int kCacheVersion = 1;

struct CachedSubgroup {
  std::vector<std::vector<std::uint64_t>> generators;
  bool characteristic = false;
  bool fully_invariant = false;
  std::vector<int> iso_type;
  friend bool operator==(const CachedSubgroup&,
                         const CachedSubgroup&) = default;
};

// Key is the canonical shape string; subgroups are the characteristic
// family in enumeration order, flagged.
struct CacheEntry {
  std::string key;
  int version = kCacheVersion;
  std::vector<CachedSubgroup> subgroups;
  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

CacheEntry make_entry(const Shape& shape, const InvariantFamilies& fam);
// Rebuilds the families; nullopt if the entry does not describe a
// consistent pair of families for the shape.
std::optional<InvariantFamilies> families_from_entry(const Shape& shape,
                                                     const CacheEntry& e);

std::string serialize(const CacheEntry& e);
// nullopt on malformed input.
std::optional<CacheEntry> deserialize(const std::string& text);

// One JSON file per shape, named by a hash of version and key. Corrupt or
// foreign-version files read as absent. The first I/O error prints a
// warning to `warn` and turns the cache off for the rest of the run.
class LatticeCache : public FamilyStore {
 public:
  explicit LatticeCache(std::filesystem::path dir, int version = kCacheVersion,
                        std::ostream* warn = nullptr);

  std::optional<CacheEntry> get(const std::string& key);
  void put(const CacheEntry& entry);

  std::optional<InvariantFamilies> load(const Shape& shape) override;
  void save(const Shape& shape, const InvariantFamilies& fam) override;

  std::filesystem::path path_for(const std::string& key) const;
  bool enabled() const { return enabled_; }
  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }

 private:
  void disable(const std::string& why);

  std::filesystem::path dir_;
  int version_;
  std::ostream* warn_;
  std::atomic<bool> enabled_{true};
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
  std::atomic<std::uint64_t> tmp_counter_{0};
  std::mutex warn_mu_;
};

}  // namespace charsub

#endif  // CHARSUB_CACHE_H_
