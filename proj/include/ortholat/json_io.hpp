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
#ifndef ORTHOLAT_JSON_IO_HPP_
#define ORTHOLAT_JSON_IO_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "ortholat/axioms.hpp"
#include "ortholat/error.hpp"
#include "ortholat/lattice_model.hpp"
#include "ortholat/matrix.hpp"
#include "ortholat/ortholattice.hpp"
#include "ortholat/report.hpp"

namespace ortholat {

/// Insertion-ordered, so emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

/// Serializes with every float at 17 significant digits. Non-finite
/// numbers become null.
inline std::string dump_json(const Json& j, int indent = 2, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) return "null";
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      std::string s(buf);
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      return s;
    }
    case Json::value_t::array: {
      if (j.empty()) return "[]";
      // Arrays of scalars stay on one line.
      const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
      std::string out = "[";
      bool first = true;
      for (const Json& e : j) {
        if (!first) out += flat ? ", " : ",";
        if (!flat) out += nl + pad;
        out += dump_json(e, indent, depth + 1);
        first = false;
      }
      if (!flat) out += nl + close_pad;
      return out + "]";
    }
    case Json::value_t::object: {
      if (j.empty()) return "{}";
      std::string out = "{";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",";
        out += nl + pad + Json(it.key()).dump() + ": " + dump_json(it.value(), indent, depth + 1);
        first = false;
      }
      return out + nl + close_pad + "}";
    }
    default:
      return j.dump();
  }
}

inline Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return Json{{"n", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

/// Parses {"n": int, "re": [[...]], "im": [[...]]}; "im" may be omitted.
/// Throws InvalidInput on any shape or type problem.
template <class J>
ComplexMatrix matrix_from_json(const J& j) {
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("re")) {
      throw InvalidInput("matrix JSON needs \"n\" and \"re\"");
    }
    const auto n_signed = j.at("n").template get<long long>();
    if (n_signed < 1) throw InvalidInput("matrix JSON: n must be positive");
    const auto n = static_cast<std::size_t>(n_signed);
    auto read = [&](const char* key, std::vector<Complex>& out, bool imag) {
      const auto& rows = j.at(key);
      if (!rows.is_array() || rows.size() != n) throw InvalidInput(std::string("matrix JSON: \"") + key + "\" needs n rows");
      for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows.at(i);
        if (!row.is_array() || row.size() != n) {
          throw InvalidInput(std::string("matrix JSON: row of \"") + key + "\" needs n entries");
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (!row.at(k).is_number()) throw InvalidInput("matrix JSON: entries must be numbers");
          const double x = row.at(k).template get<double>();
          if (imag) {
            out[i * n + k].imag(x);
          } else {
            out[i * n + k].real(x);
          }
        }
      }
    };
    std::vector<Complex> entries(n * n);
    read("re", entries, false);
    if (j.contains("im")) read("im", entries, true);
    return ComplexMatrix(n, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("matrix JSON: ") + e.what());
  }
}

inline Json vector_to_json(const LatticeVector& v) {
  Json coords = Json::array();
  for (double x : v.coords()) coords.push_back(x);
  return Json{{"n", v.dim()}, {"coords", std::move(coords)}};
}

template <class J>
LatticeVector vector_from_json(const J& j) {
  try {
    const auto n = j.at("n").template get<std::size_t>();
    const auto& coords = j.at("coords");
    if (!coords.is_array() || coords.size() != n) throw InvalidInput("vector JSON: coords must have n entries");
    std::vector<double> c;
    for (const auto& x : coords) {
      if (!x.is_number()) throw InvalidInput("vector JSON: coords must be numbers");
      c.push_back(x.template get<double>());
    }
    return LatticeVector(std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("vector JSON: ") + e.what());
  }
}

inline Json descriptor_to_json(const ModelDescriptor& d) {
  return Json{{"carrier", to_string(d.carrier)}, {"n", d.n}};
}

template <class J>
ModelDescriptor descriptor_from_json(const J& j) {
  try {
    ModelDescriptor d;
    const auto carrier = j.at("carrier").template get<std::string>();
    if (carrier == "matrix-sa") {
      d.carrier = Carrier::kMatrixSa;
    } else if (carrier == "coordinate") {
      d.carrier = Carrier::kCoordinate;
    } else {
      throw InvalidInput("model JSON: unknown carrier \"" + carrier + "\"");
    }
    d.n = j.at("n").template get<std::size_t>();
    if (d.n < 1) throw InvalidInput("model JSON: n must be positive");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("model JSON: ") + e.what());
  }
}

inline Json report_to_json(const OrthReport& r) {
  Json details = Json::array();
  for (const auto& [name, residual] : r.details) details.push_back(Json::array({name, residual}));
  return Json{{"relation", r.relation},
              {"holds", r.holds},
              {"max_violation", r.max_violation},
              {"details", std::move(details)}};
}

template <class J>
OrthReport report_from_json(const J& j) {
  try {
    OrthReport r;
    r.relation = j.at("relation").template get<std::string>();
    r.holds = j.at("holds").template get<bool>();
    r.max_violation = j.at("max_violation").is_null() ? INFINITY : j.at("max_violation").template get<double>();
    for (const auto& d : j.at("details")) {
      r.details.emplace_back(d.at(0).template get<std::string>(),
                             d.at(1).is_null() ? INFINITY : d.at(1).template get<double>());
      r.detail_tolerances.push_back(r.tolerance);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("report JSON: ") + e.what());
  }
}

inline Json witness_to_json(const WitnessResult& w) {
  return Json{{"found", w.found},
              {"m", matrix_to_json(w.m)},
              {"margin", w.margin},
              {"checks", Json{{"le_S", w.le_s}, {"le_T", w.le_t}, {"not_le_c", w.margin}}}};
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

}  // namespace ortholat

#endif  // ORTHOLAT_JSON_IO_HPP_
