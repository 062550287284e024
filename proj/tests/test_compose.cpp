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

#include "equichan/choi.hpp"
#include "equichan/compose.hpp"
#include "test_support.hpp"

using namespace equichan;
using namespace equichan::testing;

TEST_CASE("compose: identity law and hand-computed examples") {
  Rng rng(51);

  const UnitaryParams u = random_unitary_params(rng, 3);
  const UnitaryParams u_id(3, {1, 0}, {1, 0});
  const UnitaryParams uc = compose(u_id, u);
  CHECK(uc.sigma == u.sigma);
  CHECK(uc.lambda == u.lambda);

  // C = [[0.8, 0.3], [0.2, 0.7]] squares to [[0.70, 0.45], [0.30, 0.55]]
  ComplexMatrix mix(2, 2);
  mix << 0.8, 0.3, 0.2, 0.7;
  const DiagonalParams d(2, ComplexMatrix::Ones(2, 2), mix);
  const DiagonalParams d2 = compose(d, d);
  ComplexMatrix expected(2, 2);
  expected << 0.70, 0.45, 0.30, 0.55;
  CHECK(max_abs_diff(d2.mixing, expected) < 1e-15);

  ProductParams p = random_product_params(rng, 2, 2, true);
  p.lam11 = Complex(0.6, 0);
  CHECK(compose(p, p).lam11 == Complex(0.36, 0));

  CHECK_THROWS_AS(
      compose(ChannelParams(u), ChannelParams(DiagonalParams::identity(3))),
      FamilyMismatch);
  CHECK_THROWS_AS(compose(UnitaryParams(2, {1, 0}, {1, 0}),
                          UnitaryParams(3, {1, 0}, {1, 0})),
                  DimensionMismatch);
}

TEST_CASE("power: unit, cube and mixing-square examples") {
  Rng rng(52);
  const ChannelParams p(random_du_params(rng, 3, true, true));
  const ChannelParams p1 = power(p, 1);
  CHECK(max_abs_diff(std::get<DiagonalParams>(p1).mixing,
                     std::get<DiagonalParams>(p).mixing) == 0.0);

  const ChannelParams u3 =
      power(ChannelParams(UnitaryParams(2, {1, 0}, {0.5, 0})), 3);
  CHECK(std::get<UnitaryParams>(u3).lambda == Complex(0.125, 0));

  const ChannelParams sym =
      power(ChannelParams(DiagonalParams::symmetric_du3(0.4, {0.2, 0})), 2);
  CHECK(std::get<DiagonalParams>(sym).mixing(0, 0).real() ==
        doctest::Approx(0.34));  // p' = p^2 + (1-p)^2/2

  CHECK_THROWS_AS(power(p, 0), ParameterOutOfRange);
}

TEST_CASE("compose: functional consistency on random pairs") {
  Rng rng(53);
  for (int family = 0; family < 3; ++family) {
    for (int t = 0; t < 200; ++t) {
      ChannelParams a, b;
      switch (family) {
        case 0:
          a = random_unitary_params(rng, 3);
          b = random_unitary_params(rng, 3);
          break;
        case 1:
          a = random_du_params(rng, 3, false, false);
          b = random_du_params(rng, 3, false, false);
          break;
        default:
          a = random_product_params(rng, 2, 2);
          b = random_product_params(rng, 2, 2);
      }
      const ChannelParams ab = compose(a, b);
      const int n = channel_dim(a);
      const ComplexMatrix x = random_matrix(rng, n);
      CHECK(max_abs_diff(apply_channel(ab, x), apply_channel(a, apply_channel(b, x))) <= 1e-11);
    }
  }
}

TEST_CASE("squaring law through the Choi matrix") {
  Rng rng(54);
  for (int t = 0; t < 20; ++t) {
    const ChannelParams p(random_product_params(rng, 2, 3, true));
    const ChannelParams sq = power(p, 2);
    const ChoiMatrix lhs = choi_generic(sq);
    const ChoiMatrix rhs = choi_generic(
        [&p](const ComplexMatrix& x) { return apply_channel(p, apply_channel(p, x)); },
        channel_dim(p));
    CHECK(max_abs_diff(lhs.matrix, rhs.matrix) <= 1e-12);
  }
}

TEST_CASE("composition preserves row-stochastic mixing") {
  Rng rng(55);
  for (int t = 0; t < 100; ++t) {
    const DiagonalParams a = random_du_params(rng, 3, true, true);
    const DiagonalParams b = random_du_params(rng, 3, true, true);
    const DiagonalParams ab = compose(a, b);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(ab.mixing.row(i).sum() - Complex(1, 0)) <= 1e-12);
    }
  }
}

TEST_CASE("ppt2_check: U family") {
  const auto rep = ppt2_check(ChannelParams(UnitaryParams(3, {1, 0},
                                                          {0.25, 0})));
  CHECK(rep.ppt_of_phi.member);
  CHECK(rep.eb_of_phi_squared.member);
  CHECK(rep.conclusion == "holds");
  CHECK(std::get<UnitaryParams>(rep.phi_squared).lambda == Complex(0.0625, 0));

  // PT-interval member but not CP: not a PPT channel
  const auto not_cp =
      ppt2_check(ChannelParams(UnitaryParams(2, {1, 0}, {-0.9, 0})));
  CHECK_FALSE(not_cp.ppt_of_phi.member);
  CHECK(not_cp.conclusion == "inconclusive");
}

TEST_CASE("ppt2_check: DU(2)") {
  // genuine PPT channel: c12 = c21 = 0.5, lambda = 0.45
  ComplexMatrix off = ComplexMatrix::Zero(2, 2);
  off(0, 1) = 0.45;
  off(1, 0) = 0.45;
  ComplexMatrix mix(2, 2);
  mix << 0.5, 0.5, 0.5, 0.5;
  const auto rep = ppt2_check(ChannelParams(DiagonalParams(2, off, mix)));
  CHECK(rep.ppt_of_phi.member);
  CHECK(rep.eb_of_phi_squared.member);
  CHECK(rep.conclusion == "holds");

  // CP but with a negative partial transpose: not a PPT channel, so the
  // report is honest about it (the partial transpose block carries
  // eigenvalue 0.4 - 0.55 < 0 here)
  ComplexMatrix off2 = ComplexMatrix::Zero(2, 2);
  off2(0, 1) = 0.55;
  off2(1, 0) = 0.55;
  ComplexMatrix mix2(2, 2);
  mix2 << 0.6, 0.4, 0.4, 0.6;
  const auto rep2 = ppt2_check(ChannelParams(DiagonalParams(2, off2, mix2)));
  CHECK_FALSE(rep2.ppt_of_phi.member);
  CHECK(rep2.conclusion == "inconclusive");
}

TEST_CASE("ppt2_check: symmetric DU(3)") {
  const auto rep = ppt2_check(
      ChannelParams(DiagonalParams::symmetric_du3(0.4, {0.25, 0})));
  CHECK(rep.ppt_of_phi.member);
  CHECK(rep.eb_of_phi_squared.member);
  CHECK(rep.conclusion == "holds");
  CHECK(std::get<DiagonalParams>(rep.phi_squared).mixing(0, 0).real() ==
        doctest::Approx(0.34));

  // partial transpose bound is (1-p)/2 = 0.3 < 0.4
  const auto rep2 = ppt2_check(
      ChannelParams(DiagonalParams::symmetric_du3(0.4, {0.4, 0})));
  CHECK_FALSE(rep2.ppt_of_phi.member);
  CHECK(rep2.conclusion == "inconclusive");
}

TEST_CASE("ppt2_check: product family is evidence-only") {
  Rng rng(56);
  const Tolerance tol;
  int found = 0;
  while (found < 5) {
    const ProductParams p = random_cp_product_params(rng, 2, 2);
    const auto gate = ppt_channel(ChannelParams(p), tol);
    if (!gate.member) continue;
    ++found;
    const auto rep = ppt2_check(ChannelParams(p));
    CHECK(rep.ppt_of_phi.member);
    CHECK(rep.eb_of_phi_squared.member);  // numeric evidence fires
    CHECK(rep.conclusion == "inconclusive");
  }
}

TEST_CASE("ppt2_check: unsupported classes") {
  Rng rng(57);
  CHECK_THROWS_AS(
      ppt2_check(ChannelParams(random_du_params(rng, 4, true, true))),
      UnsupportedFamily);
  CHECK_THROWS_AS(
      ppt2_check(ChannelParams(random_du_params(rng, 3, true, true))),
      UnsupportedFamily);  // n = 3 but not the symmetric subclass
  CHECK_THROWS_AS(ppt2_check(ChannelParams(
                      ProductParams(3, 3, {1, 0}, {0, 0}, {0, 0}, {0, 0}))),
                  UnsupportedFamily);
}

TEST_CASE("ppt2 property: sampled PPT points always conclude holds (DU)") {
  Rng rng(58);
  for (int t = 0; t < 100; ++t) {
    // DU(2) sampler: |lambda|^2 <= min(c11 c22, c12 c21)
    const double c12 = rng.uniform();
    const double c21 = rng.uniform();
    const double bound =
        std::sqrt(std::min((1 - c12) * (1 - c21), c12 * c21));
    const double r = bound * std::sqrt(rng.uniform());
    const double phi = rng.uniform(0, 2 * 3.14159265358979323846);
    ComplexMatrix off = ComplexMatrix::Zero(2, 2);
    off(0, 1) = r * Complex(std::cos(phi), std::sin(phi));
    off(1, 0) = std::conj(off(0, 1));
    ComplexMatrix mix(2, 2);
    mix << 1 - c12, c12, c21, 1 - c21;
    const auto rep = ppt2_check(ChannelParams(DiagonalParams(2, off, mix)));
    CHECK(rep.conclusion == "holds");
  }
}
