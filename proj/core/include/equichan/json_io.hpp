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

#ifndef EQUICHAN_JSON_IO_HPP
#define EQUICHAN_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "equichan/channels.hpp"
#include "equichan/classify.hpp"
#include "equichan/compose.hpp"
#include "equichan/oracle.hpp"

namespace equichan {

// Matrix wire format: {"rows": r, "cols": c, "re": [...], "im": [...]},
// entries row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);

// Parameter formats:
//   {"family":"U",   "n":2, "sigma":[re,im], "lambda":[re,im]}
//   {"family":"DU",  "n":2, "offdiag":<matrix>, "mixing":<matrix>}
//   {"family":"PROD","n1":2,"n2":2, "lam":[[re,im],[re,im],[re,im],[re,im]]}
nlohmann::json params_to_json(const ChannelParams& p);
ChannelParams params_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const RegionVerdict& v);
nlohmann::json flags_to_json(const StructuralFlags& f);
nlohmann::json ppt2_report_to_json(const Ppt2Report& r);
nlohmann::json witness_to_json(const Witness& w);

ScanSpec scan_spec_from_json(const nlohmann::json& j);

}  // namespace equichan

#endif  // EQUICHAN_JSON_IO_HPP
