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

#ifndef EQUICHAN_COMPOSE_HPP
#define EQUICHAN_COMPOSE_HPP

#include <string>
#include <vector>

#include "equichan/channels.hpp"
#include "equichan/classify.hpp"

namespace equichan {

// Parameter-level composition within one family; compose(p, q) represents
// "apply q, then p". Per-block scalars multiply; the DU mixing matrices
// compose as the ordinary matrix product C_p * C_q.
UnitaryParams compose(const UnitaryParams& p, const UnitaryParams& q);
DiagonalParams compose(const DiagonalParams& p, const DiagonalParams& q);
ProductParams compose(const ProductParams& p, const ProductParams& q);
ChannelParams compose(const ChannelParams& p, const ChannelParams& q);

/// Iterated composition, k >= 1.
ChannelParams power(const ChannelParams& p, int k);

/// PPT-squared verification record. conclusion is "holds" only when the PPT
/// test passes on Phi AND a genuine sufficient EB certificate fires on
/// Phi^2; otherwise "inconclusive". For the product family the EB field
/// carries numeric evidence only (Phi^2 PPT plus the necessary Schwarz
/// faces) and the conclusion stays inconclusive.
struct Ppt2Report {
  ChannelParams input;
  RegionVerdict ppt_of_phi;
  ChannelParams phi_squared;
  RegionVerdict eb_of_phi_squared;
  std::string conclusion;  // "holds" | "inconclusive"
  std::vector<std::string> details;
};

/// Supported classes: U(n), DU(2), the permutation-symmetric DU(3) family,
/// Product(2,2) and Product(2,3). Throws UnsupportedFamily elsewhere.
Ppt2Report ppt2_check(const ChannelParams& p, const Tolerance& tol = {});

}  // namespace equichan

#endif  // EQUICHAN_COMPOSE_HPP
