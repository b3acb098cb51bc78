// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/ansatz.hpp"

#include <algorithm>
#include <stdexcept>

namespace schwinger {

namespace {

AnsatzTerm make(Label id, std::string label, bool flipped) {
  const Bits prefix = Bits::parse(label).complement();
  return AnsatzTerm{id, std::move(label), prefix, flipped};
}

const std::array<AnsatzTerm, kNumLabels>& catalog() {
  static const std::array<AnsatzTerm, kNumLabels> terms = {
      make(Label::k001011, "001011", false),  make(Label::k0011, "0011", false),
      make(Label::k01, "01", false),          make(Label::k10, "10", false),
      make(Label::k110, "110", true),         make(Label::k11100, "11100", true),
      make(Label::k10001011, "10001011", false), make(Label::k100011, "100011", false),
      make(Label::k1001, "1001", false),      make(Label::k1010, "1010", false),
      make(Label::k10110, "10110", true),     make(Label::k1011100, "1011100", true),
  };
  return terms;
}

AnsatzSpec make_spec(SpecKind kind, std::vector<Label> terms) {
  return AnsatzSpec{kind, std::to_string(static_cast<int>(kind)) + "-term", std::move(terms)};
}

}  // namespace

const AnsatzTerm& term(Label id) { return catalog()[static_cast<std::size_t>(id)]; }
const std::array<AnsatzTerm, kNumLabels>& term_catalog() { return catalog(); }

Label label_from_string(std::string_view label) {
  for (const auto& t : catalog())
    if (t.label == label) return t.id;
  throw std::invalid_argument("unknown ansatz label '" + std::string(label) + "'");
}

bool AnsatzSpec::has(Label id) const { return position(id) >= 0; }

int AnsatzSpec::position(Label id) const {
  auto it = std::find(terms.begin(), terms.end(), id);
  return it == terms.end() ? -1 : static_cast<int>(it - terms.begin());
}

int AnsatzSpec::max_offset() const {
  int m = 0;
  for (Label id : terms) m = std::max(m, term(id).offset());
  return m;
}

const AnsatzSpec& ansatz_spec(SpecKind kind) {
  using L = Label;
  static const AnsatzSpec s4 = make_spec(SpecKind::k4, {L::k0011, L::k01, L::k10, L::k110});
  static const AnsatzSpec s6 =
      make_spec(SpecKind::k6, {L::k001011, L::k0011, L::k01, L::k10, L::k110, L::k11100});
  static const AnsatzSpec s9 = make_spec(
      SpecKind::k9, {L::k001011, L::k0011, L::k01, L::k100011, L::k1001, L::k1010, L::k10110, L::k110, L::k11100});
  static const AnsatzSpec s11 =
      make_spec(SpecKind::k11, {L::k001011, L::k0011, L::k01, L::k10001011, L::k100011, L::k1001, L::k1010,
                                L::k10110, L::k1011100, L::k110, L::k11100});
  switch (kind) {
    case SpecKind::k4: return s4;
    case SpecKind::k6: return s6;
    case SpecKind::k9: return s9;
    case SpecKind::k11: return s11;
  }
  throw std::invalid_argument("unknown ansatz kind");
}

const AnsatzSpec& ansatz_spec(std::string_view name) {
  std::string n(name);
  if (n.ends_with("-term")) n.resize(n.size() - 5);
  if (n == "4") return ansatz_spec(SpecKind::k4);
  if (n == "6") return ansatz_spec(SpecKind::k6);
  if (n == "9") return ansatz_spec(SpecKind::k9);
  if (n == "11") return ansatz_spec(SpecKind::k11);
  throw std::invalid_argument("unknown ansatz '" + std::string(name) + "' (expected 4, 6, 9 or 11)");
}

const std::array<SpecKind, 4>& all_specs() {
  static const std::array<SpecKind, 4> kinds = {SpecKind::k4, SpecKind::k6, SpecKind::k9, SpecKind::k11};
  return kinds;
}

double prefix_constant(Label id, const ModelParams& params) { return prefix_energy(term(id).prefix, params); }

bool prefixes_incompatible(Bits a, Bits b) {
  const int common = std::min(a.length, b.length);
  if (common == 0) return false;
  return (a.value >> (a.length - common)) != (b.value >> (b.length - common));
}

}  // namespace schwinger
