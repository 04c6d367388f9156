#pragma once

// On-disk persistence for MultiplicityCache. The cache directory comes from
// HYBRIDWEYL_CACHE_DIR; the file is <dir>/multiplicities.json:
//
//   {"schema_version": 1,
//    "entries": [{"algebra": "A2", "lambda": [2,4],
//                 "table": [{"mu": [2,4], "m": 1}, ...]}, ...]}
//
// A version mismatch or any malformed entry discards the whole file.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "multiplicity.hpp"

namespace hybridweyl {

inline constexpr int kCacheSchemaVersion = 1;
inline constexpr const char* kCacheEnvVar = "HYBRIDWEYL_CACHE_DIR";

inline std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* dir = std::getenv(kCacheEnvVar);
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir);
}

inline std::filesystem::path cache_file(const std::filesystem::path& dir) { return dir / "multiplicities.json"; }

namespace detail {

inline std::vector<MultiplicityTable> read_cache_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return {};
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("schema_version").get<int>() != kCacheSchemaVersion) return {};
    std::vector<MultiplicityTable> tables;
    for (const auto& e : j.at("entries")) {
      const AlgebraLabel label = AlgebraLabel::parse(e.at("algebra").get<std::string>());
      Weight highest(e.at("lambda").get<std::vector<int>>());
      if (highest.rank() != label.rank() || !highest.is_dominant()) return {};
      MultiplicityTable t{label, highest, {}};
      for (const auto& row : e.at("table")) {
        Weight mu(row.at("mu").get<std::vector<int>>());
        if (mu.rank() != label.rank()) return {};
        t.entries.emplace(std::move(mu), row.at("m").get<std::int64_t>());
      }
      if (t.multiplicity(highest) != 1) return {};
      tables.push_back(std::move(t));
    }
    return tables;
  } catch (const std::exception&) {
    return {};
  }
}

}  // namespace detail

inline void load_cache(const std::filesystem::path& dir, MultiplicityCache& cache) {
  for (auto& t : detail::read_cache_file(cache_file(dir))) cache.insert(std::move(t));
}

// Merges with whatever is on disk and replaces the file by rename, so
// concurrent writers never expose a partial file.
inline void save_cache(const std::filesystem::path& dir, const MultiplicityCache& cache) {
  std::filesystem::create_directories(dir);
  MultiplicityCache merged;
  for (auto& t : detail::read_cache_file(cache_file(dir))) merged.insert(std::move(t));
  for (const auto& t : cache.snapshot()) merged.insert(*t);

  nlohmann::json j;
  j["schema_version"] = kCacheSchemaVersion;
  j["entries"] = nlohmann::json::array();
  for (const auto& t : merged.snapshot()) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [mu, m] : t->entries) rows.push_back({{"mu", mu.coords()}, {"m", m}});
    j["entries"].push_back({{"algebra", t->algebra.name()}, {"lambda", t->highest.coords()}, {"table", rows}});
  }
  const auto tmp = dir / ("multiplicities.json.tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump();
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, cache_file(dir));
}

}  // namespace hybridweyl
