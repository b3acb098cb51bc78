// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace schwinger {

double WeightRow::sum_sq() const {
  double s = 0;
  for (double v : w) s += v * v;
  return s;
}

double WeightTable::weight(int n, Label id) const {
  const auto& spec_ = ansatz_spec(spec);
  const int pos = spec_.position(id);
  if (pos < 0) throw std::invalid_argument("label " + term(id).label + " is not part of the " + spec_.name + " ansatz");
  auto it = rows.find(n);
  if (it == rows.end()) throw MissingData("no weights for N=" + std::to_string(n));
  return it->second.w[static_cast<std::size_t>(pos)];
}

WeightTable weight_table(const AnsatzSpec& spec, const OverlapChain& chain, int n_min, int n_max) {
  WeightTable t;
  t.spec = spec.kind;
  for (int n = n_min; n <= n_max; ++n) {
    const SizeData& d = chain.at(n);
    WeightRow row;
    row.n = n;
    for (Label id : spec.terms) row.w.push_back(d.weight(id));
    row.f = d.f;
    row.g = d.g;
    row.p = d.p;
    t.rows[n] = std::move(row);
  }
  return t;
}

double coverage_deficit(const std::vector<double>& w) {
  double s = 0;
  for (double v : w) s += v * v;
  return 1.0 - s;
}

double max_weight_change(const WeightTable& t, int n) {
  auto a = t.rows.find(n);
  auto b = t.rows.find(n - 2);
  if (a == t.rows.end() || b == t.rows.end())
    throw MissingData("weight change at N=" + std::to_string(n) + " needs rows N and N-2");
  double m = 0;
  for (std::size_t i = 0; i < a->second.w.size(); ++i) m = std::max(m, std::abs(a->second.w[i] - b->second.w[i]));
  return m;
}

bool weights_converged(const WeightTable& t, int n, double tol) {
  return max_weight_change(t, n) < tol && max_weight_change(t, n - 2) < tol;
}

}  // namespace schwinger
