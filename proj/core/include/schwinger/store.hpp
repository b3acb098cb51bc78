// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "schwinger/eigensolver.hpp"
#include "schwinger/ground_state_chain.hpp"

namespace schwinger {

inline constexpr const char* kCodeVersion = "0.1.0";
inline constexpr const char* kPhaseConvention = "largest-abs-positive/lowest-index";
inline constexpr const char* kCacheEnvVar = "SCHWINGER_CACHE_DIR";

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CacheMiss : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CacheKey {
  int n_sites = 0;
  int n_up = 0;
  double x = 0, mu = 0, epsilon0 = 0, tol = 0;

  // Every real printed with 17 significant digits, so distinct doubles never collide.
  std::string canonical() const;
  // 16 hex digits of FNV-1a over canonical(); also the file stem.
  std::string hash() const;
};

// Ground states on disk: <root>/<hash>.bin holds little-endian float64 amplitudes
// in basis order, <root>/<hash>.json the manifest. Writes go through a temporary
// file and a rename; existing entries are never rewritten.
class ResultStore {
 public:
  explicit ResultStore(std::filesystem::path root);
  // $SCHWINGER_CACHE_DIR if set, otherwise ./.schwinger-cache
  static std::filesystem::path default_root();

  const std::filesystem::path& root() const { return root_; }
  bool contains(const CacheKey& key) const;
  // nullopt if absent; CacheError if present but failing verification.
  std::optional<GroundStateResult> load(const CacheKey& key) const;
  void save(const CacheKey& key, const GroundStateResult& result) const;

  std::filesystem::path payload_path(const CacheKey& key) const;
  std::filesystem::path manifest_path(const CacheKey& key) const;

 private:
  std::filesystem::path root_;
};

// Canonical-sector ground states by size, memoised and optionally backed by a store.
class GroundStateProvider {
 public:
  GroundStateProvider(ModelParams params, LanczosOptions options = {}, std::optional<ResultStore> store = std::nullopt);

  const ModelParams& params() const { return params_; }
  // Do not solve anything; a missing cache entry raises CacheMiss.
  void set_cache_only(bool v) { cache_only_ = v; }
  // Use the dense solver for sectors up to this dimension (0 = never).
  void set_dense_limit(std::size_t dim) { dense_limit_ = dim; }

  CacheKey key(int n) const;
  const GroundStateResult& get(int n);
  // Sizes 0..n_max; refuses degenerate ground states.
  SeedStates seeds(int n_max);
  // Which sizes 0..n_max are neither memoised nor on disk.
  std::vector<int> missing(int n_max) const;

 private:
  ModelParams params_;
  LanczosOptions options_;
  std::optional<ResultStore> store_;
  bool cache_only_ = false;
  std::size_t dense_limit_ = 0;
  std::map<int, GroundStateResult> memo_;
};

}  // namespace schwinger
