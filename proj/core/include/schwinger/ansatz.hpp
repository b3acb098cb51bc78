// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "schwinger/bits.hpp"
#include "schwinger/hamiltonian.hpp"

namespace schwinger {

// The twelve fractal terms used by the 4/6/9/11-term ansatzes. A term reads
// |prefix> (x) (T)|Psi_{N-len}>.
//
// Labels are written in the qubit convention |0> = spin up, which is how the
// ansatz tables are usually quoted. The configuration actually prepended in
// this code's convention (1 = spin up) is the complement of the label; e.g.
// label "01" prepends 10 and label "110" prepends 001. Only in that frame are
// the prefixes charge neutral and the usual diagonal constants (3 + 2mu for
// 0011, 1 + 2mu for 01, 0 for 10, ...) reproduced.
enum class Label : int {
  k001011,
  k0011,
  k01,
  k10,
  k110,
  k11100,
  k10001011,
  k100011,
  k1001,
  k1010,
  k10110,
  k1011100,
};
inline constexpr int kNumLabels = 12;

struct AnsatzTerm {
  Label id;
  std::string label;  // qubit-convention label
  Bits prefix;        // configuration prepended, 1 = spin up
  bool flipped;       // apply T to the smaller ground state
  int offset() const { return prefix.length; }
};

const AnsatzTerm& term(Label id);
const std::array<AnsatzTerm, kNumLabels>& term_catalog();
Label label_from_string(std::string_view label);
inline int index(Label id) { return static_cast<int>(id); }

enum class SpecKind { k4 = 4, k6 = 6, k9 = 9, k11 = 11 };

struct AnsatzSpec {
  SpecKind kind;
  std::string name;          // "4-term", ...
  std::vector<Label> terms;  // table order

  std::size_t size() const { return terms.size(); }
  bool has(Label id) const;
  // Position of id in terms, or -1.
  int position(Label id) const;
  int max_offset() const;
  // The 9- and 11-term bases split the "10" region into finer terms.
  bool splits_10() const { return kind == SpecKind::k9 || kind == SpecKind::k11; }
};

const AnsatzSpec& ansatz_spec(SpecKind kind);
// Accepts "4", "4-term", "6", ..., throws std::invalid_argument otherwise.
const AnsatzSpec& ansatz_spec(std::string_view name);
const std::array<SpecKind, 4>& all_specs();

// Mass + electric energy contributed by the prefix (the diagonal constant in
// the reduced Hamiltonian on top of E_{N-len}).
double prefix_constant(Label id, const ModelParams& params);

// Two bitstrings are incompatible when they differ somewhere in their common length.
bool prefixes_incompatible(Bits a, Bits b);

}  // namespace schwinger
