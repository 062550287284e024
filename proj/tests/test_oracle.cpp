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
#include "equichan/oracle.hpp"
#include "test_support.hpp"

using namespace equichan;
using namespace equichan::testing;

TEST_CASE("kadison_gap: examples") {
  Rng rng(61);
  const ChannelParams ident(UnitaryParams(2, {1, 0}, {1, 0}));
  for (int t = 0; t < 10; ++t) {
    CHECK(std::abs(kadison_gap(ident, random_matrix(rng, 2))) <= 1e-12);
  }

  // gap formula at the off-diagonal probe: (1 - lambda)(1/n + lambda)
  const double lambda = -0.51;
  const double expected = (1.0 - lambda) * (0.5 + lambda);
  CHECK(expected == doctest::Approx(-0.0151));
  const ChannelParams p(UnitaryParams(2, {1, 0}, {lambda, 0}));
  CHECK(kadison_gap(p, basis_matrix(2, 0, 1)) ==
        doctest::Approx(expected).epsilon(1e-12));

  const ChannelParams boundary(UnitaryParams(2, {1, 0}, {-0.5, 0}));
  CHECK(std::abs(kadison_gap(boundary, basis_matrix(2, 0, 1))) <= 1e-12);

  CHECK_THROWS_AS(
      kadison_gap(ChannelParams(UnitaryParams(2, {1, 0}, {0.5, 0.3})),
                  basis_matrix(2, 0, 1)),
      NotHermitianIntermediate);
  CHECK_THROWS_AS(kadison_gap(ident, basis_matrix(3, 0, 1)),
                  DimensionMismatch);
}

TEST_CASE("schwarz_falsify: U family") {
  const auto none =
      schwarz_falsify(ChannelParams(UnitaryParams(2, {1, 0}, {0.5, 0})), 500,
                      7);
  CHECK_FALSE(none.has_value());

  const auto witness =
      schwarz_falsify(ChannelParams(UnitaryParams(2, {1, 0}, {-0.6, 0})), 500,
                      7);
  REQUIRE(witness.has_value());
  CHECK(witness->gap == doctest::Approx(-0.16));
  CHECK(witness->probe == "E(1,2)");

  CHECK_THROWS_AS(
      schwarz_falsify(ChannelParams(UnitaryParams(2, {0.5, 0}, {0.5, 0})), 10,
                      7),
      StructurallyInvalid);
}

TEST_CASE("schwarz_falsify: DU families") {
  // violated diagonal bound: p < |lambda|^2
  const auto witness = schwarz_falsify(
      ChannelParams(DiagonalParams::symmetric_du3(0.2, {0.5, 0})), 200, 7);
  REQUIRE(witness.has_value());
  CHECK(witness->gap < -1e-9);

  // DU(2) boundary behaviour: just outside c_jj >= |lambda|^2 a basis probe
  // certifies the violation deterministically (zero random budget)
  ComplexMatrix off = ComplexMatrix::Zero(2, 2);
  off(0, 1) = std::sqrt(0.51);
  off(1, 0) = off(0, 1);
  ComplexMatrix mix(2, 2);
  mix << 0.5, 0.5, 0.5, 0.5;
  const auto w2 =
      schwarz_falsify(ChannelParams(DiagonalParams(2, off, mix)), 0, 7);
  REQUIRE(w2.has_value());
  CHECK(w2->gap == doctest::Approx(0.5 - 0.51));

  // (p, lambda) = (0.5, 0.6) satisfies every necessary condition
  // (0.5 >= 0.36, mixed determinant positive) and the falsifier finds
  // nothing - the closed-form reference region excludes the point, but no
  // Kadison violation exists there
  const ChannelParams sym(DiagonalParams::symmetric_du3(0.5, {0.6, 0}));
  CHECK(schwarz_necessary_du(std::get<DiagonalParams>(sym)).member);
  CHECK_FALSE(schwarz_falsify(sym, 2000, 7).has_value());
}

TEST_CASE("schwarz_falsify is deterministic given the seed") {
  const ChannelParams p(UnitaryParams(3, {1, 0}, {0.9, 0}));
  const auto a = schwarz_falsify(p, 50, 12345);
  const auto b = schwarz_falsify(p, 50, 12345);
  CHECK(a.has_value() == b.has_value());
}

TEST_CASE("block_positivity_falsify: examples") {
  // Choi of the identity channel is block positive
  ComplexMatrix ident_choi = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      ident_choi += kron(basis_matrix(2, i, j), basis_matrix(2, i, j));
    }
  }
  CHECK_FALSE(
      block_positivity_falsify(ident_choi, 2, 2, 500, 7).has_value());

  // lambda > 1 is not even positive
  const ComplexMatrix bad =
      choi_u_closed(UnitaryParams(2, {1, 0}, {1.5, 0})).matrix;
  const auto w = block_positivity_falsify(bad, 2, 2, 500, 7);
  REQUIRE(w.has_value());
  CHECK(w->value < -1e-9);
  // the witness value is reproducible
  const auto w2 = block_positivity_falsify(bad, 2, 2, 500, 7);
  CHECK(w->value == w2->value);

  CHECK_FALSE(block_positivity_falsify(0.5 * ComplexMatrix::Identity(4, 4), 2,
                                       2, 200, 7)
                  .has_value());
}

TEST_CASE("kadison gap is nonnegative for normal inputs to CP channels") {
  Rng rng(62);
  for (int t = 0; t < 40; ++t) {
    const double lambda = rng.uniform(-1.0 / 8.0, 1.0);
    const ChannelParams p(UnitaryParams(3, {1, 0}, {lambda, 0}));
    const ComplexMatrix x = random_normal_matrix(rng, 3);
    CHECK(kadison_gap(p, x) >= -1e-9);
  }
}

TEST_CASE("region_scan: U(2) lambda sweep") {
  ScanSpec spec;
  spec.family = "U";
  spec.fixed["n"] = 2;
  spec.axes = {{"lambda", -1.2, 1.2, 0.1}};
  spec.predicates = {"schwarz", "cp", "ppt_eb"};
  spec.seed = 99;
  spec.oracle_budget = 100;
  const ScanResult res = region_scan(spec);
  REQUIRE(res.rows.size() == 25);

  const auto member_at = [&](int pred, double lambda) {
    for (const auto& row : res.rows) {
      if (std::abs(row.coords[0] - lambda) < 1e-12) {
        return row.verdicts[pred].member;
      }
    }
    FAIL("lambda not on grid");
    return false;
  };
  // schwarz flips across -1/2 and +1
  CHECK_FALSE(member_at(0, -0.6));
  CHECK(member_at(0, -0.5));
  CHECK(member_at(0, 1.0));
  CHECK_FALSE(member_at(0, 1.1));
  // cp flips across -1/3
  CHECK_FALSE(member_at(1, -0.4));
  CHECK(member_at(1, -0.3));
  // ppt/eb flips across -1 and 1/3
  CHECK_FALSE(member_at(2, -1.1));
  CHECK(member_at(2, -1.0));
  CHECK(member_at(2, 0.3));
  CHECK_FALSE(member_at(2, 0.4));
  // oracle witnesses appear exactly off the Schwarz region on this grid
  for (const auto& row : res.rows) {
    CHECK(row.oracle_witness == !row.verdicts[0].member);
  }
}

TEST_CASE("region_scan: single point and determinism across threads") {
  ScanSpec spec;
  spec.family = "DU3SYM";
  spec.axes = {{"p", 0.4, 0.4, 0.1}, {"lambda", 0.2, 0.2, 0.1}};
  spec.predicates = {"schwarz", "cp"};
  spec.seed = 5;
  spec.oracle_budget = 50;
  const ScanResult single = region_scan(spec);
  REQUIRE(single.rows.size() == 1);
  CHECK(single.rows[0].verdicts[0].member);

  ScanSpec grid;
  grid.family = "DU3SYM";
  grid.axes = {{"p", 0.0, 1.0, 0.25}, {"lambda", 0.0, 0.6, 0.2}};
  grid.predicates = {"schwarz", "cp"};
  grid.seed = 17;
  grid.oracle_budget = 60;
  grid.threads = 1;
  const std::string csv1 = scan_to_csv(region_scan(grid));
  grid.threads = 4;
  const std::string csv4 = scan_to_csv(region_scan(grid));
  CHECK(csv1 == csv4);
  const std::string csv1b = scan_to_csv(region_scan(grid));
  CHECK(csv1 == csv1b);

  // header shape
  CHECK(csv1.rfind("p,lambda,schwarz_member,schwarz_margin,cp_member,"
                   "cp_margin,oracle_witness\n",
                   0) == 0);
}

TEST_CASE("region_scan: spec validation") {
  ScanSpec spec;
  spec.family = "U";
  spec.fixed["n"] = 2;
  spec.axes = {{"lambda", 0.0, 1.0, -0.1}};
  CHECK_THROWS_AS(region_scan(spec), SpecInvalid);

  spec.axes = {{"lambda", 0, 1, 0.5},
               {"x", 0, 1, 0.5},
               {"y", 0, 1, 0.5},
               {"z", 0, 1, 0.5}};
  CHECK_THROWS_AS(region_scan(spec), SpecInvalid);

  ScanSpec unknown;
  unknown.family = "NOPE";
  unknown.axes = {{"lambda", 0, 0, 1}};
  unknown.predicates = {"schwarz"};
  CHECK_THROWS_AS(region_scan(unknown), SpecInvalid);
}

TEST_CASE("scan spec JSON parsing") {
  const auto j = nlohmann::json::parse(R"({
    "family": "U",
    "fixed": {"n": 2},
    "axes": [{"name": "lambda", "lo": -1.2, "hi": 1.2, "step": 0.1}],
    "predicates": ["schwarz", "cp", "ppt_eb"],
    "seed": 31,
    "oracle_budget": 64
  })");
  const ScanSpec spec = scan_spec_from_json(j);
  CHECK(spec.family == "U");
  CHECK(spec.fixed.at("n") == 2);
  REQUIRE(spec.axes.size() == 1);
  CHECK(spec.axes[0].step == 0.1);
  CHECK(spec.predicates.size() == 3);
  CHECK(spec.seed == 31);
  CHECK(spec.oracle_budget == 64);
}
