// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "schwinger/ansatz.hpp"
#include "schwinger/ground_state_chain.hpp"
#include "schwinger/hamiltonian.hpp"

namespace schwinger {

// Corrected: matrix elements that agree with <phi_i|H|phi_j> on explicit vectors.
// Literal: the element list as commonly written for the 6- and 11-term bases
// (the 9-term matrix deletes the 10001011 and 1011100 rows/columns of the
// 11-term one). The literal form has known slips, listed by
// documented_discrepancies(); it is kept so those can be checked rather than
// silently patched.
enum class Transcription { Corrected, Literal };

// k x k matrix in spec term order. Requires N >= spec.max_offset(), epsilon0 == 0
// and chain data for every N - offset that is referenced.
Eigen::MatrixXd reduced_hamiltonian(const AnsatzSpec& spec, int n, const ModelParams& params,
                                    const OverlapChain& chain, Transcription mode = Transcription::Corrected);

struct Discrepancy {
  Label row;
  Label col;
  std::string literal;
  std::string corrected;
};

// Literal entries that differ from the corrected ones at these parameters.
// Entries whose difference vanishes at the given (x, mu) (a missing factor x at
// x = 1, a missing mu at mu = 1) are left out.
std::vector<Discrepancy> documented_discrepancies(SpecKind kind, const ModelParams& params);

struct AuxValues {
  double f = 0, g = 0, p = 0, q = 0;
};

// f, g, p, q at size m for a state that is exactly sum_s w_s |term_s>,
// where w holds the spec-label weights at m (other labels ignored) and the
// chain supplies everything at smaller sizes.
AuxValues recurse_aux(const AnsatzSpec& spec, int m, const std::array<double, kNumLabels>& w,
                      const OverlapChain& chain, const ModelParams& params,
                      Transcription mode = Transcription::Corrected);

// Keep only the labels that belong to spec.
std::array<double, kNumLabels> restrict_to_spec(const AnsatzSpec& spec, const std::array<double, kNumLabels>& w);

// Size data for the implicit state sum_s w_s |term_s> at size m.
SizeData implicit_size_data(const AnsatzSpec& spec, int m, double energy, const std::vector<double>& weights,
                            const OverlapChain& chain, const ModelParams& params);

}  // namespace schwinger
