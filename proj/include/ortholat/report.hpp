// Copyright 2026 The ortholat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef ORTHOLAT_REPORT_HPP_
#define ORTHOLAT_REPORT_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace ortholat {

/// Outcome of a predicate or of a verification suite.
///
/// Each detail is a named, normalized residual together with the tolerance
/// it was judged against. `max_violation` is the worst residual rescaled to
/// the governing `tolerance`, so `holds == (max_violation <= tolerance)`
/// always. Details with the same name are merged, keeping the worst.
struct OrthReport {
  std::string relation;
  bool holds = true;
  double max_violation = 0.0;
  double tolerance = 1e-9;
  std::vector<std::pair<std::string, double>> details;
  std::vector<double> detail_tolerances;  // parallel to details

  OrthReport() = default;
  OrthReport(std::string rel, double governing) : relation(std::move(rel)), tolerance(governing) {}

  /// Records `residual`, which passes iff it is at most `check_tol`.
  void add(const std::string& name, double residual, double check_tol) {
    if (std::isnan(residual)) residual = std::numeric_limits<double>::infinity();
    auto it = std::find_if(details.begin(), details.end(), [&](const auto& d) { return d.first == name; });
    if (it == details.end()) {
      details.emplace_back(name, residual);
      detail_tolerances.push_back(check_tol);
    } else {
      it->second = std::max(it->second, residual);
    }
    max_violation = std::max(max_violation, residual * (tolerance / check_tol));
    holds = max_violation <= tolerance;
  }

  void add(const std::string& name, double residual) { add(name, residual, tolerance); }

  /// Pass/fail check without a natural residual: 0 on success, 1 on failure.
  void add_flag(const std::string& name, bool ok) { add(name, ok ? 0.0 : 1.0, tolerance); }

  /// Folds another report in, prefixing its detail names.
  void merge(const OrthReport& other, const std::string& prefix = {}) {
    for (std::size_t i = 0; i < other.details.size(); ++i) {
      add(prefix + other.details[i].first, other.details[i].second, other.detail_tolerances[i]);
    }
    if (!other.holds && other.details.empty()) add_flag(prefix + other.relation, false);
  }

  double residual(const std::string& name) const {
    for (const auto& [n, r] : details) {
      if (n == name) return r;
    }
    return 0.0;
  }
};

}  // namespace ortholat

#endif  // ORTHOLAT_REPORT_HPP_
