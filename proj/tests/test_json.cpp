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

#include <doctest.h>

#include "equichan/json_io.hpp"
#include "test_support.hpp"

using namespace equichan;
using namespace equichan::testing;

TEST_CASE("matrix JSON round trip") {
  Rng rng(71);
  const ComplexMatrix m = random_matrix(rng, 3);
  const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK(max_abs_diff(m, back) == 0.0);

  auto j = matrix_to_json(m);
  j["re"].erase(0);
  CHECK_THROWS_AS(matrix_from_json(j), SpecInvalid);
}

TEST_CASE("params JSON round trip for every family") {
  Rng rng(72);
  const ChannelParams u(random_unitary_params(rng, 4));
  const ChannelParams du(random_du_params(rng, 3, true, true));
  const ChannelParams prod(random_product_params(rng, 2, 3));
  for (const ChannelParams& p : {u, du, prod}) {
    const ChannelParams back = params_from_json(params_to_json(p));
    CHECK(family_name(back) == family_name(p));
    CHECK(channel_dim(back) == channel_dim(p));
    Rng probe_rng(5);
    const ComplexMatrix x = random_matrix(probe_rng, channel_dim(p));
    CHECK(max_abs_diff(apply_channel(back, x), apply_channel(p, x)) == 0.0);
  }

  CHECK_THROWS_AS(params_from_json(nlohmann::json{{"family", "XX"}}),
                  SpecInvalid);
}

TEST_CASE("verdict and report serialization carry the documented fields") {
  const auto rep =
      ppt2_check(ChannelParams(UnitaryParams(3, {1, 0}, {0.25, 0})));
  const auto j = ppt2_report_to_json(rep);
  CHECK(j.contains("input"));
  CHECK(j.contains("ppt_of_phi"));
  CHECK(j.contains("phi_squared"));
  CHECK(j.contains("eb_sufficient_of_phi_squared"));
  CHECK(j["conclusion"] == "holds");
  CHECK(j["ppt_of_phi"]["member"].get<bool>());
}
