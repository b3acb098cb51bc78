// Copyright 2026 The schwinger-fractal Authors
// SPDX-License-Identifier: Apache-2.0
#include "schwinger/table_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace schwinger {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_weight_csv(const WeightTable& t, std::ostream& out) {
  const AnsatzSpec& spec = ansatz_spec(t.spec);
  out << "N,label,value\n";
  for (const auto& [n, row] : t.rows) {
    for (std::size_t i = 0; i < spec.size(); ++i)
      out << n << ',' << term(spec.terms[i]).label << ',' << format_g17(row.w[i]) << '\n';
    out << n << ",f," << format_g17(row.f) << '\n';
    out << n << ",g," << format_g17(row.g) << '\n';
    out << n << ",p," << format_g17(row.p) << '\n';
    out << n << ",deficit," << format_g17(coverage_deficit(row.w)) << '\n';
  }
}

std::string weight_table_json(const WeightTable& t) {
  const AnsatzSpec& spec = ansatz_spec(t.spec);
  nlohmann::json j;
  j["spec"] = spec.name;
  auto& labels = j["labels"] = nlohmann::json::array();
  for (Label id : spec.terms) labels.push_back(term(id).label);
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& [n, row] : t.rows)
    rows.push_back({{"N", n}, {"weights", row.w}, {"f", row.f}, {"g", row.g}, {"p", row.p},
                    {"deficit", coverage_deficit(row.w)}});
  return j.dump(2);
}

void write_energy_csv(const std::map<int, double>& energies, std::ostream& out) {
  out << "N,energy\n";
  for (const auto& [n, e] : energies) out << n << ',' << format_g17(e) << '\n';
}

}  // namespace schwinger
