// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "schwinger/schwinger.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace schwinger;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitMissingCache = 4;

struct Common {
  double x = 1.0;
  double mu = 0.1;
  double tol = 1e-10;
  std::uint64_t seed = 12345;
  std::string cache_dir;
  std::string out;
  bool no_cache = false;

  ModelParams params() const {
    ModelParams p{x, mu, 0.0};
    p.validate();
    return p;
  }

  LanczosOptions lanczos() const {
    LanczosOptions o;
    o.tol = tol;
    o.seed = seed;
    return o;
  }

  GroundStateProvider provider() const {
    std::optional<ResultStore> store;
    if (!no_cache) store.emplace(cache_dir.empty() ? ResultStore::default_root() : fs::path(cache_dir));
    return GroundStateProvider(params(), lanczos(), std::move(store));
  }

  json to_json() const {
    return {{"x", x}, {"mu", mu}, {"epsilon0", 0.0}, {"tol", tol}, {"seed", seed},
            {"cache_dir", no_cache ? "" : (cache_dir.empty() ? ResultStore::default_root().string() : cache_dir)}};
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_model = true) {
  if (with_model) {
    cmd->add_option("--x", c.x, "hopping parameter x = 1/(g a)^2")->capture_default_str();
    cmd->add_option("--mu", c.mu, "mass parameter 2m/(g^2 a)")->capture_default_str();
    cmd->add_option("--tol", c.tol, "Lanczos residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--seed", c.seed, "Lanczos start-vector seed")->capture_default_str();
    cmd->add_option("--cache-dir", c.cache_dir, std::string("cache root (default $") + kCacheEnvVar + " or ./.schwinger-cache)");
    cmd->add_flag("--no-cache", c.no_cache, "do not read or write the result cache");
  }
  cmd->add_option("--out", c.out, "output file (default stdout)");
}

const std::vector<std::string> kSpecNames = {"4", "6", "9", "11", "4-term", "6-term", "9-term", "11-term"};

// Writes `<out>.run.json`; nothing when writing to stdout.
void write_run_config(const std::string& out, const std::string& command, json config) {
  if (out.empty()) return;
  json doc = {{"command", command}, {"code_version", kCodeVersion}};
  doc.update(config);
  std::ofstream f(out + ".run.json");
  f << doc.dump(2) << '\n';
  if (!f) throw std::runtime_error("cannot write " + out + ".run.json");
}

void ensure_parent(const std::string& path) {
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
}

template <class F>
void with_output(const std::string& out, F&& body) {
  if (out.empty()) {
    body(std::cout);
    return;
  }
  ensure_parent(out);
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open " + out);
  body(f);
  if (!f) throw std::runtime_error("write failed: " + out);
}

void require_seeds(GroundStateProvider& prov, int n_max) {
  const std::vector<int> miss = prov.missing(n_max);
  if (miss.empty()) return;
  std::string list;
  for (int n : miss) list += (list.empty() ? "" : ",") + std::to_string(n);
  throw CacheMiss("missing cached ground states for N = " + list + " (run `schwinger ed` or pass --compute)");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground states of the spin-formulated lattice Schwinger model and their fractal structure"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kCodeVersion);

  Common common;

  // ed
  int ed_n = 0;
  bool ed_dense = false;
  auto* ed = app.add_subcommand("ed", "exact ground state of one chain length (cached)");
  add_common(ed, common);
  ed->add_option("--n", ed_n, "number of sites")->required()->check(CLI::Range(1, 30));
  ed->add_flag("--dense", ed_dense, "full diagonalization instead of Lanczos (a cached result is reused as is)");

  // weights
  std::string spec_name = "4";
  int n_min = 2, n_max = 12;
  auto* weights = app.add_subcommand("weights", "self-similarity weights from exact ground states");
  add_common(weights, common);
  weights->add_option("--spec", spec_name, "ansatz {4,6,9,11}")->check(CLI::IsMember(kSpecNames))->capture_default_str();
  weights->add_option("--n-min", n_min, "smallest chain length")->capture_default_str()->check(CLI::Range(1, 30));
  weights->add_option("--n,--n-max", n_max, "largest chain length")->capture_default_str()->check(CLI::Range(1, 30));

  // predict
  std::string method;
  int n_seed = 12, n_target = 20, n_weights = -1;
  bool compute = false;
  auto* predict = app.add_subcommand("predict", "recursive energy prediction (ad: diagonalize the reduced matrix, afw: fixed weights)");
  add_common(predict, common);
  predict->add_option("method", method, "ad or afw")->required()->check(CLI::IsMember({"ad", "afw"}));
  predict->add_option("--spec", spec_name, "ansatz {4,6,9,11}")->check(CLI::IsMember(kSpecNames))->capture_default_str();
  predict->add_option("--n-seed", n_seed, "largest exactly solved size")->capture_default_str()->check(CLI::Range(1, 30));
  predict->add_option("--n", n_target, "target size")->capture_default_str()->check(CLI::Range(1, 10000));
  predict->add_option("--weights-at", n_weights, "afw: size whose weights are frozen (default --n-seed)");
  predict->add_flag("--compute", compute, "solve missing seed sizes instead of failing");

  // reconstruct
  bool compare = false;
  std::string images_dir;
  auto* reconstruct = app.add_subcommand("reconstruct", "build ground-state vectors recursively from the seeds");
  add_common(reconstruct, common);
  reconstruct->add_option("--spec", spec_name, "ansatz {4,6,9,11}")->check(CLI::IsMember(kSpecNames))->capture_default_str();
  reconstruct->add_option("--n-seed", n_seed, "largest exactly solved size")->capture_default_str()->check(CLI::Range(1, 30));
  reconstruct->add_option("--n", n_target, "target size")->capture_default_str()->check(CLI::Range(1, 30));
  reconstruct->add_flag("--compute", compute, "solve missing seed sizes instead of failing");
  reconstruct->add_flag("--compare", compare, "also solve each size exactly and report the fidelity");
  reconstruct->add_option("--images", images_dir, "directory for qubism PGMs of the reconstructed even-N states");

  // qubism
  int q_n = 12;
  auto* qubism = app.add_subcommand("qubism", "qubism image of an exact ground state as 16-bit PGM");
  add_common(qubism, common);
  qubism->add_option("--n", q_n, "number of sites (even)")->capture_default_str()->check(CLI::Range(2, 30));

  // codec
  auto* codec = app.add_subcommand("codec", "fractal (PIFS) compression of qubism images");
  codec->require_subcommand(1);
  CodecOptions copt;
  std::string in_path;
  int out_side = 0;
  auto* compress_cmd = codec->add_subcommand("compress", "PGM -> PIFS code (JSON)");
  add_common(compress_cmd, common, false);
  compress_cmd->add_option("--in", in_path, "input PGM")->required()->check(CLI::ExistingFile);
  compress_cmd->add_option("--range", copt.range_size, "range block size")->capture_default_str();
  compress_cmd->add_option("--stride", copt.domain_stride, "domain search stride")->capture_default_str();
  compress_cmd->add_option("--s-max", copt.s_max, "contrast clamp, < 1")->capture_default_str();
  auto* decompress_cmd = codec->add_subcommand("decompress", "PIFS code -> PGM at any power-of-two multiple of the source side");
  add_common(decompress_cmd, common, false);
  decompress_cmd->add_option("--in", in_path, "input code JSON")->required()->check(CLI::ExistingFile);
  decompress_cmd->add_option("--side", out_side, "output side (default: the encoded side)");
  decompress_cmd->add_option("--iterations", copt.iterations, "fixed-point iterations")->capture_default_str();
  auto* fidelity_cmd = codec->add_subcommand("fidelity", "classical fidelity of decoded seed images against exact larger states");
  add_common(fidelity_cmd, common);
  fidelity_cmd->add_option("--n-seed", n_seed, "size of the encoded state")->capture_default_str()->check(CLI::Range(2, 30));
  fidelity_cmd->add_option("--n", n_target, "largest target size")->capture_default_str()->check(CLI::Range(2, 30));
  fidelity_cmd->add_option("--range", copt.range_size, "range block size")->capture_default_str();
  fidelity_cmd->add_option("--stride", copt.domain_stride, "domain search stride")->capture_default_str();
  fidelity_cmd->add_option("--s-max", copt.s_max, "contrast clamp, < 1")->capture_default_str();
  fidelity_cmd->add_option("--iterations", copt.iterations, "fixed-point iterations")->capture_default_str();

  // phase-scan
  double mu_start = -1.5, mu_stop = 0.5, mu_step = 0.05;
  int scan_n = 12;
  bool sector_m = false;
  auto* scan = app.add_subcommand("phase-scan", "second Renyi entropy and dominant configuration along a mass scan");
  add_common(scan, common);
  scan->add_option("--n", scan_n, "number of sites (even)")->capture_default_str()->check(CLI::Range(2, 30));
  scan->add_option("--mu-start", mu_start)->capture_default_str();
  scan->add_option("--mu-stop", mu_stop)->capture_default_str();
  scan->add_option("--mu-step", mu_step)->capture_default_str()->check(CLI::PositiveNumber);
  scan->add_flag("--sector-m", sector_m, "normalize S2 by the sector dimension instead of 2^N");
  scan->add_option("--images", images_dir, "directory for one qubism PGM per scan point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*ed) {
      GroundStateProvider prov = common.provider();
      if (ed_dense) prov.set_dense_limit(std::numeric_limits<std::size_t>::max());
      const GroundStateResult& r = prov.get(ed_n);
      with_output(common.out, [&](std::ostream& o) {
        o << "N,energy,residual,iterations,sector_size\n"
          << ed_n << ',' << format_g17(r.energy) << ',' << format_g17(r.residual) << ',' << r.n_iterations << ','
          << r.state.basis->size() << '\n';
      });
      if (r.degenerate) std::cerr << "warning: near-degenerate ground state (gap " << r.gap_estimate << ")\n";
      json cfg = common.to_json();
      cfg.update({{"n", ed_n}, {"dense", ed_dense}, {"cache_key", prov.key(ed_n).canonical()}});
      write_run_config(common.out, "ed", cfg);
    } else if (*weights) {
      if (n_min > n_max) throw CLI::ValidationError("--n-min", "must not exceed --n");
      const AnsatzSpec& spec = ansatz_spec(spec_name);
      GroundStateProvider prov = common.provider();
      const OverlapChain chain = direct_chain(prov.seeds(n_max), n_max);
      const WeightTable t = weight_table(spec, chain, n_min, n_max);
      with_output(common.out, [&](std::ostream& o) { write_weight_csv(t, o); });
      if (!common.out.empty()) {
        std::ofstream(common.out + ".json") << weight_table_json(t) << '\n';
      }
      json cfg = common.to_json();
      cfg.update({{"spec", spec.name}, {"n_min", n_min}, {"n_max", n_max}});
      write_run_config(common.out, "weights", cfg);
    } else if (*predict) {
      const AnsatzSpec& spec = ansatz_spec(spec_name);
      if (n_target < n_seed) throw CLI::ValidationError("--n", "target must be >= --n-seed");
      GroundStateProvider prov = common.provider();
      if (!compute) require_seeds(prov, n_seed);
      const OverlapChain seed_chain = direct_chain(prov.seeds(n_seed), n_seed);
      RecursionResult res;
      if (method == "ad") {
        res = ad_recursion(spec, common.params(), seed_chain, n_seed, n_target);
      } else {
        if (n_weights < 0) n_weights = n_seed;
        if (n_weights > n_seed || n_weights < 2)
          throw CLI::ValidationError("--weights-at", "must lie in [2, --n-seed]");
        if (n_weights < 4) std::cerr << "warning: cannot judge weight convergence below N=4\n";
        const WeightTable t = weight_table(spec, seed_chain, std::max(n_weights - 4, 0), n_weights);
        if (n_weights < 4 || !weights_converged(t, n_weights))
          std::cerr << "warning: weights at N=" << n_weights << " have not converged (max change "
                    << (n_weights >= 4 ? max_weight_change(t, n_weights) : 1.0) << "); AFW predictions may be poor\n";
        res = afw_recursion(spec, common.params(), t.rows.at(n_weights).w, seed_chain, n_seed, n_target);
      }
      for (const auto& w : res.warnings) std::cerr << "warning: " << w << '\n';
      std::map<int, double> energies;
      energies[n_seed] = seed_chain.energy(n_seed);
      for (const auto& [n, step] : res.steps) energies[n] = step.energy;
      with_output(common.out, [&](std::ostream& o) { write_energy_csv(energies, o); });
      json cfg = common.to_json();
      cfg.update({{"method", method}, {"spec", spec.name}, {"n_seed", n_seed}, {"n_target", n_target}});
      if (method == "afw") cfg["weights_at"] = n_weights;
      write_run_config(common.out, "predict", cfg);
    } else if (*reconstruct) {
      const AnsatzSpec& spec = ansatz_spec(spec_name);
      if (n_target < n_seed) throw CLI::ValidationError("--n", "target must be >= --n-seed");
      GroundStateProvider prov = common.provider();
      if (!compute) require_seeds(prov, n_seed);
      const SeedStates seeds = prov.seeds(n_seed);
      const RecursionResult res = ad_recursion(spec, common.params(), direct_chain(seeds, n_seed), n_seed, n_target);
      std::map<int, std::vector<double>> w;
      for (const auto& [n, step] : res.steps) w[n] = step.weights;
      const auto states = reconstruct_states(spec, seeds, n_seed, w, n_target);
      if (!images_dir.empty()) fs::create_directories(images_dir);
      with_output(common.out, [&](std::ostream& o) {
        o << "N,energy,predicted_energy" << (compare ? ",exact_energy,fidelity" : "") << '\n';
        for (int n = n_seed + 1; n <= n_target; ++n) {
          const SectorState& s = states.at(n);
          const SectorOperator op(s.basis, common.params());
          o << n << ',' << format_g17(op.expectation(s.amplitudes)) << ',' << format_g17(res.steps.at(n).energy);
          if (compare) {
            const GroundStateResult& ex = prov.get(n);
            o << ',' << format_g17(ex.energy) << ',' << format_g17(fidelity(s, ex.state));
          }
          o << '\n';
          if (!images_dir.empty() && n % 2 == 0)
            export_pgm(state_to_qubism(s, common.x, common.mu),
                       fs::path(images_dir) / ("reconstructed_" + spec.name + "_N" + std::to_string(n) + ".pgm"));
        }
      });
      json cfg = common.to_json();
      cfg.update({{"spec", spec.name}, {"n_seed", n_seed}, {"n_target", n_target}, {"compare", compare},
                  {"images", images_dir}});
      write_run_config(common.out, "reconstruct", cfg);
    } else if (*qubism) {
      if (q_n % 2) throw CLI::ValidationError("--n", "qubism needs an even number of sites");
      if (common.out.empty()) throw CLI::ValidationError("--out", "a PGM path is required");
      GroundStateProvider prov = common.provider();
      ensure_parent(common.out);
      export_pgm(state_to_qubism(prov.get(q_n).state, common.x, common.mu), common.out);
      json cfg = common.to_json();
      cfg["n"] = q_n;
      write_run_config(common.out, "qubism", cfg);
    } else if (*compress_cmd) {
      const QubismImage img = import_pgm(in_path);
      const PifsCode code = compress(img.intensity, copt);
      with_output(common.out, [&](std::ostream& o) { o << to_json(code) << '\n'; });
      write_run_config(common.out, "codec compress",
                       {{"in", in_path}, {"range", copt.range_size}, {"stride", copt.domain_stride}, {"s_max", copt.s_max}});
    } else if (*decompress_cmd) {
      if (common.out.empty()) throw CLI::ValidationError("--out", "a PGM path is required");
      const PifsCode code = pifs_from_json(read_file(in_path));
      const int side = out_side > 0 ? out_side : code.side;
      QubismImage img;
      img.intensity = decompress(code, side, copt.iterations);
      int n = 0;
      while ((1 << n) < side) ++n;
      img.n_sites = 2 * n;
      ensure_parent(common.out);
      export_pgm(img, common.out);
      write_run_config(common.out, "codec decompress", {{"in", in_path}, {"side", side}, {"iterations", copt.iterations}});
    } else if (*fidelity_cmd) {
      if (n_seed % 2 || n_target % 2) throw CLI::ValidationError("--n", "codec fidelity needs even sizes");
      GroundStateProvider prov = common.provider();
      std::map<int, SectorState> exact;
      for (int n = n_seed; n <= n_target; n += 2) exact.emplace(n, prov.get(n).state);
      const auto series = codec_fidelity_series(prov.get(n_seed).state, exact, copt);
      with_output(common.out, [&](std::ostream& o) {
        o << "N,fidelity\n";
        for (const auto& [n, f] : series) o << n << ',' << format_g17(f) << '\n';
      });
      json cfg = common.to_json();
      cfg.update({{"n_seed", n_seed}, {"n_target", n_target}, {"range", copt.range_size}, {"stride", copt.domain_stride},
                  {"s_max", copt.s_max}, {"iterations", copt.iterations}});
      write_run_config(common.out, "codec fidelity", cfg);
    } else if (*scan) {
      if (scan_n % 2) throw CLI::ValidationError("--n", "phase scan needs an even number of sites");
      if (!images_dir.empty()) fs::create_directories(images_dir);
      const std::vector<double> mus = mu_grid(mu_start, mu_stop, mu_step);
      auto solve = [&](double mu, double* energy) {
        Common c = common;
        c.mu = mu;
        GroundStateProvider prov = c.provider();
        const GroundStateResult& r = prov.get(scan_n);
        *energy = r.energy;
        return r.state;
      };
      auto on_point = [&](const ScanPoint& pt, const SectorState& s) {
        if (images_dir.empty()) return;
        char name[64];
        std::snprintf(name, sizeof name, "qubism_N%d_mu%+.4f.pgm", scan_n, pt.mu);
        export_pgm(state_to_qubism(s, common.x, pt.mu), fs::path(images_dir) / name);
      };
      const EntropyScan res = phase_scan(common.x, mus, scan_n, solve, sector_m, on_point);
      with_output(common.out, [&](std::ostream& o) {
        o << "mu,energy,s2,dominant,dominant_probability\n";
        for (const auto& p : res.points)
          o << format_g17(p.mu) << ',' << format_g17(p.energy) << ',' << format_g17(p.s2) << ',' << p.dominant.str()
            << ',' << format_g17(p.dominant_probability) << '\n';
      });
      std::cerr << "steepest S2 drop near mu = " << res.steepest_mu() << ", dominant-configuration switches: "
                << res.dominant_switches() << '\n';
      json cfg = common.to_json();
      cfg.erase("mu");
      cfg.update({{"n", scan_n}, {"mu_start", mu_start}, {"mu_stop", mu_stop}, {"mu_step", mu_step},
                  {"m", res.m}, {"images", images_dir}});
      write_run_config(common.out, "phase-scan", cfg);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const CacheMiss& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMissingCache;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
