// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "schwinger/ansatz.hpp"
#include "schwinger/sector_state.hpp"

namespace schwinger {

// <prefix (x) (T)small | big>, the signed overlap of big's prefix block with the
// (optionally bit-flipped) smaller state. small must have big.n_sites - prefix.length sites.
double prefixed_overlap(const SectorState& big, Bits prefix, const SectorState& small, bool flip);

// Weight W_s^N = <term_s at N | psi_N>.
double extract_weight(const SectorState& psi_n, const SectorState& psi_small, const AnsatzTerm& t);

// ||P_prefix psi||; an empty prefix gives the full norm.
double projector_norm(const SectorState& psi, Bits prefix);

// Auxiliary overlaps that close the reduced-Hamiltonian recurrences. Written as
// (qubit-convention label, flip, size offset):
//   f_M = <1 T Psi_{M-1} | Psi_M>,   g_M = <10 Psi_{M-2} | Psi_M>,
//   p_M = <101 T Psi_{M-3} | Psi_M>, q_M = <1110100 T Psi_{M-7} | Psi_M>.
enum class Aux { f, g, p, q };
struct AuxDef {
  Bits prefix;  // 1 = spin up
  bool flipped;
};
AuxDef aux_definition(Aux which);

}  // namespace schwinger
