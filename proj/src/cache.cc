#include "charsub/cache.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include <json.hpp>

namespace charsub {
namespace {

using Json = nlohmann::json;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

CachedSubgroup cached(const Subgroup& h, bool fi) {
  CachedSubgroup c;
  for (ElemId g : h.canonical_generators()) {
    std::vector<std::uint64_t> coords;
    for (int i = 0; i < h.shape().rank(); ++i) {
      coords.push_back(h.shape().coord(g, i));
    }
    c.generators.push_back(std::move(coords));
  }
  c.characteristic = true;
  c.fully_invariant = fi;
  c.iso_type = iso_type(h).exponents;
  return c;
}

}  // namespace

CacheEntry make_entry(const Shape& shape, const InvariantFamilies& fam) {
  CacheEntry e;
  e.key = shape.to_string();
  std::size_t j = 0;
  for (const Subgroup& h : fam.characteristic) {
    // Both families share the enumeration order, so one pass suffices.
    bool fi = false;
    if (j < fam.fully_invariant.size() && fam.fully_invariant[j] == h) {
      fi = true;
      ++j;
    }
    e.subgroups.push_back(cached(h, fi));
  }
  return e;
}

std::optional<InvariantFamilies> families_from_entry(const Shape& shape,
                                                     const CacheEntry& e) {
  if (e.key != shape.to_string()) return std::nullopt;
  auto sp = std::make_shared<const Shape>(shape);
  InvariantFamilies fam;
  for (const CachedSubgroup& c : e.subgroups) {
    if (!c.characteristic) return std::nullopt;
    std::vector<ElemId> ids;
    for (const auto& coords : c.generators) {
      if (static_cast<int>(coords.size()) != shape.rank()) return std::nullopt;
      std::vector<std::int64_t> signed_coords;
      for (int i = 0; i < shape.rank(); ++i) {
        if (coords[i] >= shape.modulus(i)) return std::nullopt;
        signed_coords.push_back(static_cast<std::int64_t>(coords[i]));
      }
      ids.push_back(shape.encode(shape.element(signed_coords)));
    }
    Subgroup h = span_ids(sp, ids);
    if (iso_type(h).exponents != c.iso_type) return std::nullopt;
    fam.characteristic.push_back(h);
    if (c.fully_invariant) fam.fully_invariant.push_back(h);
  }
  // Anything out of order or duplicated means the file was not ours.
  for (std::size_t i = 1; i < fam.characteristic.size(); ++i) {
    if (!enumeration_less(fam.characteristic[i - 1], fam.characteristic[i])) {
      return std::nullopt;
    }
  }
  return fam;
}

std::string serialize(const CacheEntry& e) {
  Json subs = Json::array();
  for (const CachedSubgroup& c : e.subgroups) {
    subs.push_back(Json{{"generators", c.generators},
                        {"characteristic", c.characteristic},
                        {"fully_invariant", c.fully_invariant},
                        {"iso_type", c.iso_type}});
  }
  return Json{{"key", e.key}, {"version", e.version}, {"subgroups", subs}}
             .dump() +
         "\n";
}

std::optional<CacheEntry> deserialize(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    CacheEntry e;
    e.key = j.at("key").get<std::string>();
    e.version = j.at("version").get<int>();
    for (const Json& s : j.at("subgroups")) {
      CachedSubgroup c;
      c.generators =
          s.at("generators").get<std::vector<std::vector<std::uint64_t>>>();
      c.characteristic = s.at("characteristic").get<bool>();
      c.fully_invariant = s.at("fully_invariant").get<bool>();
      c.iso_type = s.at("iso_type").get<std::vector<int>>();
      e.subgroups.push_back(std::move(c));
    }
    return e;
  } catch (const Json::exception&) {
    return std::nullopt;
  }
}

LatticeCache::LatticeCache(std::filesystem::path dir, int version,
                           std::ostream* warn)
    : dir_(std::move(dir)), version_(version), warn_(warn) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) disable("cannot create " + dir_.string() + ": " + ec.message());
}

std::filesystem::path LatticeCache::path_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json",
                static_cast<unsigned long long>(fnv1a(
                    "v" + std::to_string(version_) + "\n" + key)));
  return dir_ / name;
}

void LatticeCache::disable(const std::string& why) {
  std::lock_guard<std::mutex> lock(warn_mu_);
  if (!enabled_) return;
  enabled_ = false;
  (warn_ ? *warn_ : std::cerr)
      << "warning: lattice cache disabled: " << why << "\n";
}

std::optional<CacheEntry> LatticeCache::get(const std::string& key) {
  if (!enabled_) return std::nullopt;
  const auto path = path_for(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  auto e = deserialize(buf.str());
  if (!e || e->key != key || e->version != version_) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return e;
}

void LatticeCache::put(const CacheEntry& entry) {
  if (!enabled_) return;
  CacheEntry e = entry;
  e.version = version_;
  const auto path = path_for(e.key);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(tmp_counter_++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize(e);
    out.close();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      disable("cannot write " + tmp.string());
      return;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    disable("cannot rename into " + path.string() + ": " + ec.message());
  }
}

std::optional<InvariantFamilies> LatticeCache::load(const Shape& shape) {
  auto e = get(shape.to_string());
  if (!e) return std::nullopt;
  auto fam = families_from_entry(shape, *e);
  if (!fam) {
    --hits_;
    ++misses_;
  }
  return fam;
}

void LatticeCache::save(const Shape& shape, const InvariantFamilies& fam) {
  put(make_entry(shape, fam));
}

}  // namespace charsub
