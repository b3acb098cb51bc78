// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/store.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <random>
#include <vector>

#include <json.hpp>

namespace schwinger {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<unsigned char> encode_le(const Eigen::VectorXd& v) {
  std::vector<unsigned char> out(static_cast<std::size_t>(v.size()) * 8);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const auto bits = std::bit_cast<std::uint64_t>(v[i]);
    for (int b = 0; b < 8; ++b) out[static_cast<std::size_t>(i) * 8 + b] = static_cast<unsigned char>(bits >> (8 * b));
  }
  return out;
}

Eigen::VectorXd decode_le(const std::vector<unsigned char>& bytes) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(bytes.size() / 8));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= std::uint64_t{bytes[static_cast<std::size_t>(i) * 8 + b]} << (8 * b);
    v[i] = std::bit_cast<double>(bits);
  }
  return v;
}

void write_atomic(const fs::path& target, const void* data, std::size_t n) {
  std::random_device rd;
  const fs::path tmp = target.string() + ".tmp." + hex64((std::uint64_t{rd()} << 32) | rd());
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(n));
    if (!out) throw CacheError("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace

std::string CacheKey::canonical() const {
  return "n_sites=" + std::to_string(n_sites) + ";n_up=" + std::to_string(n_up) + ";x=" + g17(x) + ";mu=" + g17(mu) +
         ";epsilon0=" + g17(epsilon0) + ";tol=" + g17(tol);
}

std::string CacheKey::hash() const {
  const std::string c = canonical();
  return hex64(fnv1a(c.data(), c.size()));
}

ResultStore::ResultStore(fs::path root) : root_(std::move(root)) {}

fs::path ResultStore::default_root() {
  if (const char* env = std::getenv(kCacheEnvVar); env && *env) return fs::path(env);
  return fs::path(".schwinger-cache");
}

fs::path ResultStore::payload_path(const CacheKey& key) const { return root_ / (key.hash() + ".bin"); }
fs::path ResultStore::manifest_path(const CacheKey& key) const { return root_ / (key.hash() + ".json"); }

bool ResultStore::contains(const CacheKey& key) const {
  return fs::exists(manifest_path(key)) && fs::exists(payload_path(key));
}

void ResultStore::save(const CacheKey& key, const GroundStateResult& r) const {
  if (contains(key)) return;
  fs::create_directories(root_);
  const auto bytes = encode_le(r.state.amplitudes);
  nlohmann::json m = {
      {"key",
       {{"n_sites", key.n_sites}, {"n_up", key.n_up}, {"x", key.x}, {"mu", key.mu}, {"epsilon0", key.epsilon0},
        {"tol", key.tol}}},
      {"key_string", key.canonical()},
      {"hash", key.hash()},
      {"energy", r.energy},
      {"energy_bits", hex64(std::bit_cast<std::uint64_t>(r.energy))},
      {"residual", r.residual},
      {"n_iterations", r.n_iterations},
      {"degenerate", r.degenerate},
      {"gap_estimate", std::isfinite(r.gap_estimate) ? r.gap_estimate : -1.0},
      {"sector_size", r.state.size()},
      {"norm", r.state.amplitudes.norm()},
      {"payload_fnv1a", hex64(fnv1a(bytes.data(), bytes.size()))},
      {"phase_convention", kPhaseConvention},
      {"code_version", kCodeVersion},
  };
  // Payload first: a manifest never points at a missing payload.
  write_atomic(payload_path(key), bytes.data(), bytes.size());
  const std::string text = m.dump(2) + "\n";
  write_atomic(manifest_path(key), text.data(), text.size());
}

std::optional<GroundStateResult> ResultStore::load(const CacheKey& key) const {
  if (!contains(key)) return std::nullopt;
  const fs::path mp = manifest_path(key);
  nlohmann::json m;
  try {
    std::ifstream in(mp);
    in >> m;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("corrupt manifest " + mp.string() + ": " + e.what());
  }
  try {
    const std::string key_string = m.at("key_string").get<std::string>();
    if (key_string != key.canonical()) throw CacheError("manifest " + mp.string() + " belongs to a different key");
    if (hex64(fnv1a(key_string.data(), key_string.size())) != mp.stem().string() ||
        m.at("hash").get<std::string>() != mp.stem().string())
      throw CacheError("manifest hash does not match its file name: " + mp.string());

    std::ifstream pin(payload_path(key), std::ios::binary);
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(pin)), std::istreambuf_iterator<char>());
    auto basis = build_sector(key.n_sites, key.n_up);
    if (bytes.size() != basis->size() * 8 || m.at("sector_size").get<std::size_t>() != basis->size())
      throw CacheError("payload length does not match the sector size for " + mp.string());
    if (hex64(fnv1a(bytes.data(), bytes.size())) != m.at("payload_fnv1a").get<std::string>())
      throw CacheError("payload checksum mismatch for " + mp.string());
    GroundStateResult r;
    r.state = SectorState{basis, decode_le(bytes)};
    if (std::abs(r.state.amplitudes.norm() - 1.0) > 1e-12) throw CacheError("cached state is not normalised: " + mp.string());
    const auto ebits = std::stoull(m.at("energy_bits").get<std::string>(), nullptr, 16);
    r.energy = std::bit_cast<double>(static_cast<std::uint64_t>(ebits));
    r.residual = m.at("residual").get<double>();
    r.n_iterations = m.at("n_iterations").get<int>();
    r.degenerate = m.at("degenerate").get<bool>();
    const double gap = m.at("gap_estimate").get<double>();
    r.gap_estimate = gap < 0 ? std::numeric_limits<double>::infinity() : gap;
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError("incomplete manifest " + mp.string() + ": " + e.what());
  }
}

GroundStateProvider::GroundStateProvider(ModelParams params, LanczosOptions options, std::optional<ResultStore> store)
    : params_(params), options_(options), store_(std::move(store)) {
  params_.validate();
}

CacheKey GroundStateProvider::key(int n) const {
  return CacheKey{n, canonical_sector_for(n), params_.x, params_.mu, params_.epsilon0, options_.tol};
}

const GroundStateResult& GroundStateProvider::get(int n) {
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  const CacheKey k = key(n);
  if (store_) {
    if (auto hit = store_->load(k)) return memo_.emplace(n, std::move(*hit)).first->second;
  }
  if (cache_only_) throw CacheMiss("no cached ground state for " + k.canonical());
  const SectorOperator op(canonical_sector(n), params_);
  GroundStateResult r = op.dim() <= dense_limit_ ? dense_ground_state(op) : ground_state(op, options_);
  if (store_) store_->save(k, r);
  return memo_.emplace(n, std::move(r)).first->second;
}

SeedStates GroundStateProvider::seeds(int n_max) {
  SeedStates s;
  for (int n = 0; n <= n_max; ++n) {
    const GroundStateResult& r = get(n);
    if (r.degenerate)
      throw NumericalError("ground state at N=" + std::to_string(n) +
                               " is (near) degenerate; weights would not be well defined",
                           r.residual);
    s.states.emplace(n, r.state);
    s.energies.emplace(n, r.energy);
  }
  return s;
}

std::vector<int> GroundStateProvider::missing(int n_max) const {
  std::vector<int> out;
  for (int n = 0; n <= n_max; ++n)
    if (!memo_.count(n) && !(store_ && store_->contains(key(n)))) out.push_back(n);
  return out;
}

}  // namespace schwinger
