// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Prints one PASS/FAIL line per criterion followed by the
// numbers it was judged on; exits nonzero if any criterion fails.
//
//   schwinger_acceptance [cache-dir] [--only=3,7]
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "schwinger/schwinger.hpp"

namespace fs = std::filesystem;
using namespace schwinger;

namespace {

fs::path g_cache;

GroundStateProvider provider(const ModelParams& p) { return GroundStateProvider(p, {}, ResultStore(g_cache)); }

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// 1. Lanczos against dense diagonalization.
Verdict ed_correctness() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_de = 0, worst_inf = 0;
  std::string where;
  for (ModelParams p : {ModelParams{1, 0.1, 0}, ModelParams{10, 0.1, 0}, ModelParams{1, -0.7, 0}}) {
    for (int n = 1; n <= 14; ++n) {
      const SectorOperator op(canonical_sector(n), p);
      const GroundStateResult lz = ground_state(op);
      const GroundStateResult de = dense_ground_state(op);
      const double d = std::abs(lz.energy - de.energy);
      const double inf = 1 - fidelity(lz.state, de.state);
      if (d > worst_de || inf > worst_inf)
        where = "N=" + std::to_string(n) + " x=" + fmt("%g", p.x) + " mu=" + fmt("%g", p.mu);
      worst_de = std::max(worst_de, d);
      worst_inf = std::max(worst_inf, inf);
    }
  }
  const double t = seconds_since(t0);
  return {worst_de <= 1e-10 && worst_inf <= 1e-10 && t < 60,
          "max|dE|=" + fmt("%.2e", worst_de) + " max(1-F)=" + fmt("%.2e", worst_inf) + " (worst at " + where +
              ") runtime=" + fmt("%.1f", t) + "s"};
}

// 2. Diagonal energies of the two Neel configurations.
Verdict closed_forms() {
  bool ok = true;
  int checked = 0;
  for (double mu : {0.1, -0.7, 10.0, 0.0, 1.0 / 3.0}) {
    const ModelParams p{1, mu, 0};
    for (int n = 2; n <= 16; ++n) {
      std::string vac, filled;
      for (int i = 0; i < n; ++i) vac += (i % 2 ? '1' : '0');
      ok &= diagonal_energy(Bits::parse(vac), p) == 0.0;
      ++checked;
      if (n % 2) continue;
      for (int i = 0; i < n; ++i) filled += (i % 2 ? '0' : '1');
      const double expected = n * mu + n / 2;  // ceil((n-1)/2) = n/2 for even n
      ok &= std::abs(diagonal_energy(Bits::parse(filled), p) - expected) <= 1e-12 * std::max(1.0, std::abs(expected));
      ++checked;
    }
  }
  return {ok, std::to_string(checked) + " configurations at mu in {0.1,-0.7,10,0,1/3}, N=2..16"};
}

// 3. Weight convergence of the 4-term basis.
Verdict weight_convergence() {
  const auto t0 = std::chrono::steady_clock::now();
  GroundStateProvider prov = provider({1, 0.1, 0});
  const OverlapChain chain = direct_chain(prov.seeds(20), 20);
  const WeightTable t = weight_table(ansatz_spec(SpecKind::k4), chain, 10, 20);
  const double c14 = max_weight_change(t, 14), c20 = max_weight_change(t, 20);
  const double secs = seconds_since(t0);
  return {c20 < c14 && c20 < 1e-2 && secs < 600,
          "max|dW| N=14: " + fmt("%.3e", c14) + "  N=20: " + fmt("%.3e", c20) + " runtime=" + fmt("%.1f", secs) + "s"};
}

// 4. Reduced Hamiltonian against explicit matrix elements.
Verdict reduced_hamiltonian_oracle_check() {
  const ModelParams p{1, 0.1, 0};
  GroundStateProvider prov = provider(p);
  const SeedStates seeds = prov.seeds(16);
  const OverlapChain chain = direct_chain(seeds, 16);
  double worst = 0;
  bool literal_accounted = true;
  std::ostringstream log;
  for (SpecKind k : {SpecKind::k4, SpecKind::k6, SpecKind::k11}) {
    const AnsatzSpec& spec = ansatz_spec(k);
    std::set<std::pair<Label, Label>> documented;
    for (const auto& d : documented_discrepancies(k, p)) {
      documented.insert({d.row, d.col});
      documented.insert({d.col, d.row});
    }
    std::set<std::pair<Label, Label>> seen;
    for (int n = spec.max_offset(); n <= 16; ++n) {
      const Eigen::MatrixXd oracle = reduced_hamiltonian_oracle(spec, n, p, seeds);
      worst = std::max(worst, (reduced_hamiltonian(spec, n, p, chain) - oracle).cwiseAbs().maxCoeff());
      const Eigen::MatrixXd lit = reduced_hamiltonian(spec, n, p, chain, Transcription::Literal);
      for (Eigen::Index i = 0; i < lit.rows(); ++i)
        for (Eigen::Index j = i; j < lit.cols(); ++j)
          if (std::abs(lit(i, j) - oracle(i, j)) > 1e-10) {
            const auto key = std::pair{spec.terms[static_cast<std::size_t>(i)], spec.terms[static_cast<std::size_t>(j)]};
            if (!documented.count(key)) literal_accounted = false;
            if (seen.insert(key).second)
              log << "\n      " << spec.name << " (" << term(key.first).label << "," << term(key.second).label
                  << ") literal entry differs from the explicit element at N=" << n;
          }
    }
  }
  return {worst <= 1e-10 && literal_accounted,
          "implemented form vs explicit: max|d|=" + fmt("%.2e", worst) +
              (literal_accounted ? "; every literal-form mismatch is a logged discrepancy:" : "; UNLOGGED literal-form mismatch:") +
              log.str()};
}

// 5. Variational bound of AD and AFW.
Verdict variational_bound() {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  double worst = -1e300;
  std::string where;
  int predictions = 0;
  for (ModelParams p : {ModelParams{1, 0.1, 0}, ModelParams{1, 10, 0}}) {
    GroundStateProvider prov = provider(p);
    const SeedStates seeds = prov.seeds(24);
    const OverlapChain chain = direct_chain(seeds, 24);
    auto check = [&](const RecursionResult& r, const std::string& label) {
      for (const auto& [n, step] : r.steps) {
        const double violation = seeds.energy(n) - step.energy;  // > 0 means below the exact energy
        ++predictions;
        if (violation > worst) {
          worst = violation;
          where = label + " N=" + std::to_string(n) + " mu=" + fmt("%g", p.mu);
        }
        if (violation > 1e-9) ok = false;
      }
    };
    for (SpecKind k : all_specs()) {
      const AnsatzSpec& spec = ansatz_spec(k);
      check(ad_recursion(spec, p, chain, 12, 24), "AD " + spec.name);
      for (int n_seed : {12, 20}) {
        const WeightTable t = weight_table(spec, chain, n_seed, n_seed);
        check(afw_recursion(spec, p, t.rows.at(n_seed).w, chain, n_seed, 24),
              "AFW(seed " + std::to_string(n_seed) + ") " + spec.name);
      }
    }
  }
  return {ok, std::to_string(predictions) + " predictions; max(E_ED - E_pred)=" + fmt("%.2e", worst) + " at " + where +
                  " runtime=" + fmt("%.0f", seconds_since(t0)) + "s"};
}

std::map<int, double> reconstruction_fidelities(const AnsatzSpec& spec, const ModelParams& p, const SeedStates& seeds,
                                                GroundStateProvider& prov) {
  const int n_seed = 12, n_max = 22;
  SeedStates small;
  for (int m = 0; m <= n_seed; ++m) {
    small.states.emplace(m, seeds.state(m));
    small.energies.emplace(m, seeds.energy(m));
  }
  const RecursionResult ad = ad_recursion(spec, p, direct_chain(small, n_seed), n_seed, n_max);
  std::map<int, std::vector<double>> w;
  for (const auto& [n, st] : ad.steps) w[n] = st.weights;
  const auto states = reconstruct_states(spec, small, n_seed, w, n_max);
  std::map<int, double> out;
  for (int n = 14; n <= n_max; n += 2) out[n] = fidelity(states.at(n), prov.get(n).state);
  return out;
}

// 6. Reconstruction fidelity ordering.
Verdict fidelity_ordering() {
  const ModelParams p{1, 0.1, 0};
  GroundStateProvider prov = provider(p);
  const SeedStates seeds = prov.seeds(12);
  std::map<SpecKind, std::map<int, double>> f;
  for (SpecKind k : {SpecKind::k6, SpecKind::k9, SpecKind::k11})
    f[k] = reconstruction_fidelities(ansatz_spec(k), p, seeds, prov);
  bool ordered = true, monotone = true;
  std::ostringstream d;
  d << "\n      N   F6            F9            F11";
  for (int n = 14; n <= 22; n += 2) {
    const double f6 = f[SpecKind::k6][n], f9 = f[SpecKind::k9][n], f11 = f[SpecKind::k11][n];
    const bool row_ok = f11 >= f9 - 1e-6 && f9 >= f6 - 1e-6;
    ordered &= row_ok;
    d << "\n      " << n << "  " << fmt("%.10f", f6) << "  " << fmt("%.10f", f9) << "  " << fmt("%.10f", f11)
      << (row_ok ? "" : "  <- order violated");
  }
  for (auto& [k, series] : f)
    for (int n = 16; n <= 22; n += 2)
      if (series[n] > series[n - 2] + 1e-12) {
        monotone = false;
        d << "\n      " << ansatz_spec(k).name << " fidelity increases from N=" << n - 2 << " to N=" << n;
      }
  return {ordered && monotone, std::string("ordering ") + (ordered ? "holds" : "violated") + ", monotonicity " +
                                   (monotone ? "holds" : "violated") + d.str()};
}

// 7. AD energy ordering with the number of terms.
Verdict energy_ordering() {
  const ModelParams p{1, 0.1, 0};
  GroundStateProvider prov = provider(p);
  const OverlapChain chain = direct_chain(prov.seeds(12), 12);
  std::map<SpecKind, RecursionResult> r;
  for (SpecKind k : {SpecKind::k6, SpecKind::k9, SpecKind::k11}) r[k] = ad_recursion(ansatz_spec(k), p, chain, 12, 24);
  bool ok = true;
  std::ostringstream d;
  d << "\n      N   E6                E9                E11";
  for (int n = 16; n <= 24; ++n) {
    const double e6 = r[SpecKind::k6].steps.at(n).energy, e9 = r[SpecKind::k9].steps.at(n).energy,
                 e11 = r[SpecKind::k11].steps.at(n).energy;
    const bool row = e11 <= e9 + 1e-9 && e9 <= e6 + 1e-9;
    ok &= row;
    d << "\n      " << n << "  " << fmt("%.12f", e6) << "  " << fmt("%.12f", e9) << "  " << fmt("%.12f", e11)
      << (row ? "" : "  <- order violated");
  }
  return {ok, "AD from seeds N<=12" + d.str()};
}

// 8. Entropy scan across the critical mass.
Verdict phase_transition() {
  const auto t0 = std::chrono::steady_clock::now();
  const int n = 12;
  auto solve = [&](double mu, double* e) {
    GroundStateProvider prov = provider({1, mu, 0});
    const GroundStateResult& r = prov.get(n);
    *e = r.energy;
    return r.state;
  };
  const EntropyScan scan = phase_scan(1.0, mu_grid(-1.5, 0.5, 0.05), n, solve);
  const double mu_c = scan.steepest_mu();
  const std::string first = scan.points.front().dominant.str(), last = scan.points.back().dominant.str();
  const bool ok = mu_c >= -0.9 - 1e-12 && mu_c <= -0.5 + 1e-12 && first == "101010101010" && last == "010101010101" &&
                  scan.dominant_switches() == 1 && seconds_since(t0) < 300;
  return {ok, "steepest |dS2/dmu| at mu=" + fmt("%.3f", mu_c) + ", dominant " + first + " -> " + last + " with " +
                  std::to_string(scan.dominant_switches()) + " switch(es), runtime=" + fmt("%.1f", seconds_since(t0)) + "s"};
}

// 9. Qubism normalization and sector mask.
Verdict qubism_conservation() {
  const fs::path dir = g_cache / "acceptance-images";
  fs::create_directories(dir);
  double worst = 0;
  bool masked = true;
  int images = 0;
  for (ModelParams p : {ModelParams{1, 0.1, 0}, ModelParams{10, 0.1, 0}, ModelParams{1, -0.7, 0}}) {
    GroundStateProvider prov = provider(p);
    for (int n = 2; n <= 12; n += 2) {
      const QubismImage img = state_to_qubism(prov.get(n).state, p.x, p.mu);
      export_pgm(img, dir / ("gs_N" + std::to_string(n) + "_x" + fmt("%g", p.x) + "_mu" + fmt("%g", p.mu) + ".pgm"));
      ++images;
      worst = std::max(worst, std::abs(img.total_probability() - 1));
      for (std::uint32_t r = 0; r < static_cast<std::uint32_t>(img.side()); ++r)
        for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(img.side()); ++c)
          if (std::popcount(qubism_state(r, c, n)) != n / 2 && img.intensity(r, c) != 0) masked = false;
    }
  }
  return {worst <= 1e-9 && masked, std::to_string(images) + " images, max|sum p - 1|=" + fmt("%.2e", worst) +
                                       ", off-sector pixels " + (masked ? "all zero" : "NONZERO")};
}

// 10. Codec contraction, mask idempotence and fidelity decline.
Verdict codec_contraction() {
  const ModelParams p{1, 0.1, 0};
  GroundStateProvider prov = provider(p);
  const CodecOptions opt;
  double worst_ratio = 0, worst_idem = 0;
  int images = 0;
  for (ModelParams q : {p, ModelParams{1, -0.7, 0}, ModelParams{10, 0.1, 0}}) {
    GroundStateProvider pq = provider(q);
    for (int n = 8; n <= 14; n += 2) {
      const QubismImage img = state_to_qubism(pq.get(n).state, q.x, q.mu);
      const PifsCode code = compress(img.intensity, opt);
      ++images;
      for (int side : {img.side(), 2 * img.side(), 4 * img.side()}) {
        std::vector<double> diffs;
        const Eigen::MatrixXd dec = decompress(code, side, opt.iterations, &diffs);
        for (std::size_t k = 1; k < diffs.size(); ++k)
          if (diffs[k - 1] > 1e-300) worst_ratio = std::max(worst_ratio, diffs[k] / diffs[k - 1]);
        if (side == img.side()) {
          const QubismImage decoded{n, q.x, q.mu, dec.cwiseMax(0.0)};
          const Eigen::VectorXd once = mask_and_renormalize(decoded, n);
          const Eigen::VectorXd twice = mask_and_renormalize(sector_probabilities_to_qubism(once, n), n);
          worst_idem = std::max(worst_idem, (once - twice).cwiseAbs().maxCoeff());
        }
      }
    }
  }
  std::map<int, SectorState> exact;
  for (int n = 8; n <= 16; n += 2) exact.emplace(n, prov.get(n).state);
  bool series_ok = true;
  std::string series_text;
  for (int seed : {8, 10}) {
    std::map<int, SectorState> targets;
    for (const auto& [n, s] : exact)
      if (n >= seed) targets.emplace(n, s);
    const auto series = codec_fidelity_series(prov.get(seed).state, targets, opt);
    double prev = 2;
    series_text += "\n      seed N=" + std::to_string(seed) + ":";
    for (const auto& [n, f] : series) {
      series_text += " " + std::to_string(n) + ":" + fmt("%.4f", f);
      if (f > prev + 1e-12) series_ok = false;
      prev = f;
    }
  }
  return {worst_ratio <= opt.s_max + 1e-12 && worst_idem <= 1e-12 && series_ok,
          std::to_string(images) + " images, max iterate ratio=" + fmt("%.4f", worst_ratio) + " (s_max " +
              fmt("%.2f", opt.s_max) + "), mask idempotence " + fmt("%.1e", worst_idem) + ", fidelity series " +
              (series_ok ? "nonincreasing" : "NOT nonincreasing") + series_text};
}

// 11. Overlap recurrences against direct inner products.
Verdict recurrence_equivalence() {
  const ModelParams p{1, 0.1, 0};
  GroundStateProvider prov = provider(p);
  const SeedStates seeds = prov.seeds(20);
  const OverlapChain chain = direct_chain(seeds, 20);
  double worst_ratio = 0;
  std::string where;
  for (SpecKind k : all_specs()) {
    const AnsatzSpec& spec = ansatz_spec(k);
    for (int n = spec.max_offset(); n <= 20; ++n) {
      const AuxValues a = recurse_aux(spec, n, chain.at(n).w, chain, p);
      const double tol = 5 * coverage_deficit(weight_table(spec, chain, n, n).rows.at(n).w);
      std::vector<std::pair<const char*, double>> errs = {{"f", std::abs(a.f - chain.f(n))}};
      // g and p have their own recurrences only in the bases that split the 10 region.
      if (spec.splits_10()) {
        errs.push_back({"g", std::abs(a.g - chain.g(n))});
        errs.push_back({"p", std::abs(a.p - chain.p(n))});
      }
      for (auto [name, e] : errs)
        if (e / tol > worst_ratio) {
          worst_ratio = e / tol;
          where = spec.name + " " + name + " N=" + std::to_string(n);
        }
    }
  }

  double worst_synth = 0;
  for (SpecKind k : all_specs()) {
    const AnsatzSpec& spec = ansatz_spec(k);
    const int n_seed = 10, n_max = 20;
    SeedStates synth;
    for (int m = 0; m <= n_seed; ++m) {
      synth.states.emplace(m, seeds.state(m));
      synth.energies.emplace(m, seeds.energy(m));
    }
    std::map<int, std::vector<double>> weights;
    for (int n = n_seed + 1; n <= n_max; ++n) {
      std::vector<double> w(spec.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::sin(0.7 * n + 1.3 * static_cast<double>(i) + 0.2);
      weights[n] = w;
    }
    const auto states = reconstruct_states(spec, synth, n_seed, weights, n_max);
    for (int n = n_seed + 1; n <= n_max; ++n) {
      synth.states.insert_or_assign(n, states.at(n));
      synth.energies[n] = 0;
    }
    const OverlapChain sc = direct_chain(synth, n_max);
    for (int n = n_seed + 1; n <= n_max; ++n) {
      const AuxValues a = recurse_aux(spec, n, sc.at(n).w, sc, p);
      worst_synth = std::max({worst_synth, std::abs(a.f - sc.f(n)), std::abs(a.q - sc.q(n))});
      if (spec.splits_10()) worst_synth = std::max({worst_synth, std::abs(a.g - sc.g(n)), std::abs(a.p - sc.p(n))});
    }
  }
  return {worst_ratio <= 1 && worst_synth <= 1e-12,
          "ED states: max |err| / (5 deficit)=" + fmt("%.3f", worst_ratio) + " (" + where +
              "); synthetic self-similar states: max |err|=" + fmt("%.1e", worst_synth)};
}

}  // namespace

int main(int argc, char** argv) {
  g_cache = fs::path(".schwinger-acceptance-cache");
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a.rfind("--only=", 0) == 0) {
      std::stringstream ss(a.substr(7));
      for (std::string tok; std::getline(ss, tok, ',');) only.insert(std::stoi(tok));
    } else {
      g_cache = a;
    }
  }
  fs::create_directories(g_cache);

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"ed_correctness", ed_correctness},
      {"closed_forms", closed_forms},
      {"weight_convergence", weight_convergence},
      {"reduced_hamiltonian_oracle", reduced_hamiltonian_oracle_check},
      {"variational_bound", variational_bound},
      {"fidelity_ordering", fidelity_ordering},
      {"energy_term_ordering", energy_ordering},
      {"phase_transition", phase_transition},
      {"qubism_conservation", qubism_conservation},
      {"codec_contraction", codec_contraction},
      {"recurrence_equivalence", recurrence_equivalence},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << id << "] " << criteria[i].first << ": " << v.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
