// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/ground_state_chain.hpp"

namespace schwinger {

double SizeData::aux(Aux which) const {
  switch (which) {
    case Aux::f: return f;
    case Aux::g: return g;
    case Aux::p: return p;
    case Aux::q: return q;
  }
  return 0;
}

const SizeData& OverlapChain::at(int m) const {
  auto it = sizes_.find(m);
  if (it == sizes_.end()) throw MissingData("no ground-state data for N=" + std::to_string(m));
  return it->second;
}

const SectorState& SeedStates::state(int n) const {
  auto it = states.find(n);
  if (it == states.end()) throw MissingData("no explicit ground state for N=" + std::to_string(n));
  return it->second;
}

double SeedStates::energy(int n) const {
  auto it = energies.find(n);
  if (it == energies.end()) throw MissingData("no ground-state energy for N=" + std::to_string(n));
  return it->second;
}

SizeData direct_size_data(const SeedStates& seeds, int m) {
  SizeData d;
  d.n = m;
  d.energy = seeds.energy(m);
  d.explicit_state = true;
  const SectorState& psi = seeds.state(m);
  for (const AnsatzTerm& t : term_catalog()) {
    if (t.offset() > m) continue;
    d.w[static_cast<std::size_t>(t.id)] = extract_weight(psi, seeds.state(m - t.offset()), t);
  }
  auto aux = [&](Aux which) {
    const AuxDef def = aux_definition(which);
    if (def.prefix.length > m) return 0.0;
    return prefixed_overlap(psi, def.prefix, seeds.state(m - def.prefix.length), def.flipped);
  };
  d.f = aux(Aux::f);
  d.g = aux(Aux::g);
  d.p = aux(Aux::p);
  d.q = aux(Aux::q);
  return d;
}

OverlapChain direct_chain(const SeedStates& seeds, int n_max) {
  OverlapChain chain;
  for (int m = 0; m <= n_max; ++m) chain.put(direct_size_data(seeds, m));
  return chain;
}

}  // namespace schwinger
