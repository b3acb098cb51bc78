// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/reduced_hamiltonian.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace schwinger {

namespace {

using L = Label;

struct Entry {
  Label a;
  Label b;
  std::function<double(int, const OverlapChain&)> value;  // before the factor x
  bool times_x = true;
};

const std::vector<Entry>& corrected_entries() {
  static const std::vector<Entry> entries = {
      {L::k001011, L::k0011, [](int n, const OverlapChain& c) { return c.w(L::k01, n - 4); }},
      {L::k001011, L::k01, [](int n, const OverlapChain& c) { return c.w(L::k0011, n - 2); }},
      {L::k0011, L::k01, [](int n, const OverlapChain& c) { return c.w(L::k01, n - 2); }},
      {L::k01, L::k10, [](int, const OverlapChain&) { return 1.0; }},
      {L::k10, L::k110, [](int n, const OverlapChain& c) { return c.f(n - 2); }},
      {L::k110, L::k11100, [](int n, const OverlapChain& c) { return c.w(L::k01, n - 3); }},
      {L::k01, L::k10001011, [](int n, const OverlapChain& c) { return c.w(L::k001011, n - 2); }},
      {L::k01, L::k100011, [](int n, const OverlapChain& c) { return c.w(L::k0011, n - 2); }},
      {L::k01, L::k1001, [](int n, const OverlapChain& c) { return c.w(L::k01, n - 2); }},
      {L::k01, L::k1010, [](int n, const OverlapChain& c) { return c.g(n - 2); }},
      {L::k01, L::k10110, [](int n, const OverlapChain& c) { return c.w(L::k110, n - 2); }},
      {L::k01, L::k1011100, [](int n, const OverlapChain& c) { return c.w(L::k11100, n - 2); }},
      {L::k1010, L::k110, [](int n, const OverlapChain& c) { return c.f(n - 3); }},
      {L::k10110, L::k110, [](int n, const OverlapChain& c) { return c.w(L::k01, n - 3); }},
      {L::k1011100, L::k110, [](int n, const OverlapChain& c) { return c.w(L::k0011, n - 3); }},
      {L::k10001011, L::k100011, [](int n, const OverlapChain& c) { return c.w(L::k01, n - 6); }},
      {L::k10001011, L::k1001, [](int n, const OverlapChain& c) { return c.w(L::k0011, n - 4); }},
      {L::k10110, L::k1011100, [](int n, const OverlapChain& c) { return c.w(L::k01, n - 5); }},
      {L::k100011, L::k1001, [](int n, const OverlapChain& c) { return c.w(L::k01, n - 4); }},
      {L::k1001, L::k1010, [](int, const OverlapChain&) { return 1.0; }},
      {L::k1010, L::k10110, [](int n, const OverlapChain& c) { return c.f(n - 4); }},
  };
  return entries;
}

std::vector<Entry> literal_entries(SpecKind kind) {
  auto w = [](Label id, int shift) {
    return [id, shift](int n, const OverlapChain& c) { return c.w(id, n - shift); };
  };
  std::vector<Entry> e;
  if (kind == SpecKind::k4) {
    e.push_back({L::k0011, L::k01, w(L::k01, 2)});
    e.push_back({L::k01, L::k10, [](int, const OverlapChain&) { return 1.0; }});
    e.push_back({L::k10, L::k110, [](int n, const OverlapChain& c) { return c.f(n - 2); }});
    return e;
  }
  e.push_back({L::k001011, L::k0011, w(L::k01, 4)});
  e.push_back({L::k001011, L::k01, w(L::k0011, 2)});
  e.push_back({L::k0011, L::k01, w(L::k0011, 2)});
  e.push_back({L::k110, L::k11100, w(L::k01, 3)});
  if (kind == SpecKind::k6) {
    e.push_back({L::k01, L::k10, [](int, const OverlapChain&) { return 1.0; }});
    e.push_back({L::k10, L::k110, [](int n, const OverlapChain& c) { return c.f(n - 2); }});
    return e;
  }
  e.push_back({L::k01, L::k10001011, w(L::k001011, 2)});
  e.push_back({L::k01, L::k100011, w(L::k0011, 2)});
  e.push_back({L::k01, L::k1001, w(L::k01, 2)});
  e.push_back({L::k01, L::k1010, [](int n, const OverlapChain& c) { return c.g(n - 2); }});
  e.push_back({L::k01, L::k10110, w(L::k110, 2)});
  e.push_back({L::k01, L::k1011100, w(L::k11100, 2)});
  e.push_back({L::k1010, L::k110, [](int n, const OverlapChain& c) { return c.f(n - 3); }, false});
  e.push_back({L::k10110, L::k110, w(L::k01, 2)});
  e.push_back({L::k1011100, L::k110, w(L::k0011, 3)});
  e.push_back({L::k10001011, L::k100011, w(L::k01, 6)});
  e.push_back({L::k10001011, L::k1001, w(L::k0011, 4)});
  e.push_back({L::k10110, L::k1011100, w(L::k01, 5)});
  return e;
}

// Literal diagonal constants (c0 + cmu * mu); only 10110 differs from prefix_constant.
double literal_constant(Label id, const ModelParams& p) {
  switch (id) {
    case L::k001011: case L::k10001011: return 5 + 2 * p.mu;
    case L::k0011: case L::k100011: case L::k11100: case L::k1011100: return 3 + 2 * p.mu;
    case L::k01: case L::k1001: case L::k110: return 1 + 2 * p.mu;
    case L::k10: case L::k1010: return 0;
    case L::k10110: return 1 + 2;
  }
  return 0;
}

}  // namespace

Eigen::MatrixXd reduced_hamiltonian(const AnsatzSpec& spec, int n, const ModelParams& params,
                                    const OverlapChain& chain, Transcription mode) {
  if (n < spec.max_offset())
    throw std::invalid_argument(spec.name + " reduced Hamiltonian needs N >= " + std::to_string(spec.max_offset()));
  if (params.epsilon0 != 0.0) throw std::invalid_argument("the fractal recursions assume epsilon0 = 0");
  const auto k = static_cast<Eigen::Index>(spec.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Label id = spec.terms[static_cast<std::size_t>(i)];
    const double c = mode == Transcription::Literal ? literal_constant(id, params) : prefix_constant(id, params);
    h(i, i) = chain.energy(n - term(id).offset()) + c;
  }
  const std::vector<Entry> literal = mode == Transcription::Literal ? literal_entries(spec.kind) : std::vector<Entry>{};
  const std::vector<Entry>& entries = mode == Transcription::Literal ? literal : corrected_entries();
  for (const Entry& e : entries) {
    const int i = spec.position(e.a);
    const int j = spec.position(e.b);
    if (i < 0 || j < 0) continue;
    const double v = (e.times_x ? params.x : 1.0) * e.value(n, chain);
    h(i, j) = v;
    h(j, i) = v;
  }
  return h;
}

std::vector<Discrepancy> documented_discrepancies(SpecKind kind, const ModelParams& params) {
  std::vector<Discrepancy> out;
  if (kind == SpecKind::k4) return out;
  out.push_back({L::k0011, L::k01, "x W_0011^{N-2}", "x W_01^{N-2}"});
  if (kind == SpecKind::k6) return out;
  out.push_back({L::k100011, L::k1001, "0 (not listed)", "x W_01^{N-4}"});
  out.push_back({L::k1001, L::k1010, "0 (not listed)", "x"});
  out.push_back({L::k1010, L::k10110, "0 (not listed)", "x f_{N-4}"});
  if (params.x != 1.0) out.push_back({L::k1010, L::k110, "f_{N-3}", "x f_{N-3}"});
  if (params.mu != 1.0) out.push_back({L::k10110, L::k10110, "E_{N-5} + 1 + 2", "E_{N-5} + 1 + 2 mu"});
  out.push_back({L::k10110, L::k110, "x W_01^{N-2}", "x W_01^{N-3}"});
  return out;
}

std::array<double, kNumLabels> restrict_to_spec(const AnsatzSpec& spec, const std::array<double, kNumLabels>& w) {
  std::array<double, kNumLabels> out{};
  for (Label id : spec.terms) out[static_cast<std::size_t>(id)] = w[static_cast<std::size_t>(id)];
  return out;
}

AuxValues recurse_aux(const AnsatzSpec& spec, int m, const std::array<double, kNumLabels>& weights,
                      const OverlapChain& c, const ModelParams& params, Transcription mode) {
  const auto w = restrict_to_spec(spec, weights);
  auto W = [&](Label id) { return w[static_cast<std::size_t>(id)]; };
  AuxValues a;
  if (!spec.splits_10()) {
    if (mode == Transcription::Literal && spec.kind == SpecKind::k6) {
      // Literal form, with the overall x and the W_110^M W_11100^{M-2} cross term.
      a.f = params.x * (W(L::k10) * (c.w(L::k10, m - 1) * c.f(m - 2) + c.w(L::k110, m - 1) * c.w(L::k01, m - 2) +
                                     W(L::k110) * c.w(L::k11100, m - 2)) +
                        W(L::k11100) * c.w(L::k0011, m - 1));
    } else {
      a.f = W(L::k10) * c.f(m - 1) + W(L::k110) * c.w(L::k01, m - 1) + W(L::k11100) * c.w(L::k0011, m - 1);
    }
    a.g = W(L::k10);
    a.p = W(L::k10) * c.f(m - 2);
    a.q = 0;
    return a;
  }
  const bool literal = mode == Transcription::Literal;
  a.f = (literal ? 0.0 : W(L::k10001011) * c.q(m - 1)) + W(L::k100011) * c.w(L::k11100, m - 1) +
        W(L::k1001) * c.w(L::k110, m - 1) + W(L::k1010) * c.p(m - 1) + W(L::k10110) * c.w(L::k1001, m - 1) +
        W(L::k1011100) * c.w(L::k100011, m - 1) + W(L::k110) * c.w(L::k01, m - 1) +
        W(L::k11100) * c.w(L::k0011, m - 1);
  a.g = W(L::k10001011) * c.w(L::k001011, m - 2) + W(L::k100011) * c.w(L::k0011, m - 2) +
        W(L::k1001) * c.w(L::k01, m - 2) + W(L::k1010) * c.g(m - 2) + W(L::k10110) * c.w(L::k110, m - 2) +
        W(L::k1011100) * (literal ? W(L::k11100) : c.w(L::k11100, m - 2));
  a.p = W(L::k1010) * c.f(m - 3) + W(L::k10110) * c.w(L::k01, m - 3) + W(L::k1011100) * c.w(L::k0011, m - 3);
  a.q = 0;
  return a;
}

SizeData implicit_size_data(const AnsatzSpec& spec, int m, double energy, const std::vector<double>& weights,
                            const OverlapChain& chain, const ModelParams& params) {
  if (weights.size() != spec.size()) throw std::invalid_argument("weight vector does not match the ansatz size");
  SizeData d;
  d.n = m;
  d.energy = energy;
  d.explicit_state = false;
  for (std::size_t i = 0; i < spec.size(); ++i) d.w[static_cast<std::size_t>(spec.terms[i])] = weights[i];
  const AuxValues a = recurse_aux(spec, m, d.w, chain, params);
  d.f = a.f;
  d.g = a.g;
  d.p = a.p;
  d.q = a.q;
  if (spec.splits_10()) d.w[static_cast<std::size_t>(Label::k10)] = a.g;
  return d;
}

}  // namespace schwinger
