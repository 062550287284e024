// Copyright 2026 the equichan authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "equichan/json_io.hpp"

namespace equichan {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw SpecInvalid(std::string(what) + ": expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw SpecInvalid(std::string("missing or non-integer field '") + key +
                      "'");
  }
  return j[key].get<int>();
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re.push_back(m(i, j).real());
      im.push_back(m(i, j).imag());
    }
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const int rows = int_field(j, "rows");
  const int cols = int_field(j, "cols");
  if (rows <= 0 || cols <= 0) {
    throw SpecInvalid("matrix: rows and cols must be positive");
  }
  if (!j.contains("re") || !j.contains("im") || !j["re"].is_array() ||
      !j["im"].is_array()) {
    throw SpecInvalid("matrix: missing re/im arrays");
  }
  const auto& re = j["re"];
  const auto& im = j["im"];
  if (static_cast<int>(re.size()) != rows * cols ||
      static_cast<int>(im.size()) != rows * cols) {
    throw SpecInvalid("matrix: re/im length " + std::to_string(re.size()) +
                      "/" + std::to_string(im.size()) + " != rows*cols = " +
                      std::to_string(rows * cols));
  }
  ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      m(i, k) = Complex(re[i * cols + k].get<double>(),
                        im[i * cols + k].get<double>());
    }
  }
  return m;
}

json params_to_json(const ChannelParams& p) {
  if (const auto* u = std::get_if<UnitaryParams>(&p)) {
    return json{{"family", "U"},
                {"n", u->n},
                {"sigma", complex_to_json(u->sigma)},
                {"lambda", complex_to_json(u->lambda)}};
  }
  if (const auto* du = std::get_if<DiagonalParams>(&p)) {
    return json{{"family", "DU"},
                {"n", du->n},
                {"offdiag", matrix_to_json(du->offdiag)},
                {"mixing", matrix_to_json(du->mixing)}};
  }
  const auto& prod = std::get<ProductParams>(p);
  return json{{"family", "PROD"},
              {"n1", prod.n1},
              {"n2", prod.n2},
              {"lam", json::array({complex_to_json(prod.lam00),
                                   complex_to_json(prod.lam01),
                                   complex_to_json(prod.lam10),
                                   complex_to_json(prod.lam11)})}};
}

ChannelParams params_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw SpecInvalid("params: missing 'family' field");
  }
  const std::string family = j["family"].get<std::string>();
  if (family == "U") {
    return UnitaryParams(int_field(j, "n"),
                         complex_from_json(j.at("sigma"), "sigma"),
                         complex_from_json(j.at("lambda"), "lambda"));
  }
  if (family == "DU") {
    const int n = int_field(j, "n");
    return DiagonalParams(n, matrix_from_json(j.at("offdiag")),
                          matrix_from_json(j.at("mixing")));
  }
  if (family == "PROD") {
    const auto& lam = j.at("lam");
    if (!lam.is_array() || lam.size() != 4) {
      throw SpecInvalid("params: 'lam' must be four [re, im] pairs");
    }
    return ProductParams(int_field(j, "n1"), int_field(j, "n2"),
                         complex_from_json(lam[0], "lam00"),
                         complex_from_json(lam[1], "lam01"),
                         complex_from_json(lam[2], "lam10"),
                         complex_from_json(lam[3], "lam11"));
  }
  throw SpecInvalid("params: unknown family '" + family + "'");
}

json verdict_to_json(const RegionVerdict& v) {
  json j{{"member", v.member}, {"margin", v.margin}, {"binding", v.binding}};
  if (!v.notes.empty()) j["notes"] = v.notes;
  return j;
}

json flags_to_json(const StructuralFlags& f) {
  return json{{"unital", f.unital},
              {"hermiticity_preserving", f.hermiticity_preserving},
              {"details", f.details}};
}

json ppt2_report_to_json(const Ppt2Report& r) {
  json j{{"input", params_to_json(r.input)},
         {"ppt_of_phi", verdict_to_json(r.ppt_of_phi)},
         {"phi_squared", params_to_json(r.phi_squared)},
         {"eb_sufficient_of_phi_squared", verdict_to_json(r.eb_of_phi_squared)},
         {"conclusion", r.conclusion}};
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

json witness_to_json(const Witness& w) {
  return json{{"gap", w.gap},
              {"probe", w.probe},
              {"X", matrix_to_json(w.x)}};
}

ScanSpec scan_spec_from_json(const json& j) {
  ScanSpec spec;
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw SpecInvalid("scan spec: missing 'family'");
  }
  spec.family = j["family"].get<std::string>();
  if (j.contains("fixed")) {
    for (const auto& [key, value] : j["fixed"].items()) {
      if (!value.is_number()) {
        throw SpecInvalid("scan spec: fixed parameter '" + key +
                          "' must be a number");
      }
      spec.fixed[key] = value.get<double>();
    }
  }
  if (j.contains("axes")) {
    for (const auto& ax : j["axes"]) {
      ScanAxis axis;
      if (!ax.contains("name") || !ax["name"].is_string()) {
        throw SpecInvalid("scan spec: axis missing 'name'");
      }
      axis.name = ax["name"].get<std::string>();
      axis.lo = ax.at("lo").get<double>();
      axis.hi = ax.at("hi").get<double>();
      axis.step = ax.at("step").get<double>();
      spec.axes.push_back(axis);
    }
  }
  if (j.contains("predicates")) {
    for (const auto& p : j["predicates"]) {
      spec.predicates.push_back(p.get<std::string>());
    }
  }
  if (j.contains("seed")) spec.seed = j["seed"].get<uint64_t>();
  if (j.contains("oracle_budget")) {
    spec.oracle_budget = j["oracle_budget"].get<int>();
  }
  if (j.contains("threads")) spec.threads = j["threads"].get<int>();
  return spec;
}

}  // namespace equichan
