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

#ifndef EQUICHAN_CLASSIFY_HPP
#define EQUICHAN_CLASSIFY_HPP

#include <string>
#include <vector>

#include "equichan/channels.hpp"
#include "equichan/choi.hpp"
#include "equichan/linalg.hpp"

namespace equichan {

/// Outcome of one region membership test. margin is the minimum slack over
/// the region's defining inequalities (negative = violated); binding names
/// the tightest inequality. member <=> margin >= 0 for analytic predicates;
/// numeric predicates accept a -tol.eig_zero band.
struct RegionVerdict {
  bool member = false;
  double margin = 0.0;
  std::string binding;
  std::vector<std::string> notes;
};

// --------------------------------------------------------------------------
// U(n) family (unital, real lambda). Margins are interval slacks in lambda.
// --------------------------------------------------------------------------

/// Schwarz region lambda in [-1/n, 1].
RegionVerdict schwarz_u(int n, double lambda);
/// Completely positive region lambda in [-1/(n^2-1), 1].
RegionVerdict cp_u(int n, double lambda);
/// PPT region lambda in [-1/(n-1), 1/(n+1)]; coincides with the EB region
/// for this family.
RegionVerdict ppt_eb_u(int n, double lambda);

/// Variants taking a complex parameter; throw NonRealParameter when the
/// imaginary part is nonzero.
RegionVerdict schwarz_u(int n, Complex lambda);
RegionVerdict cp_u(int n, Complex lambda);
RegionVerdict ppt_eb_u(int n, Complex lambda);

// --------------------------------------------------------------------------
// DU(n) family
// --------------------------------------------------------------------------

/// Necessary Schwarz conditions for a unital, Hermiticity-preserving DU
/// channel: every c_kj in [0, 1], c_jj >= |lambda_ij|^2, and the two-column
/// 2x2 determinant condition over all ordered triples of distinct indices.
/// member=false proves not-Schwarz; member=true is inconclusive for n > 3.
RegionVerdict schwarz_necessary_du(const DiagonalParams& p);

/// Exact CP test: off-diagonal mixing entries nonnegative and the reduced
/// Choi block PSD.
RegionVerdict cp_du(const DiagonalParams& p, const Tolerance& tol = {});

/// Exact PPT test from the partial transpose block structure:
/// all mixing entries nonnegative and c_ij c_ji >= |lambda_ij|^2.
RegionVerdict ppt_du(const DiagonalParams& p);

struct Du2Verdicts {
  RegionVerdict schwarz;  // iff for n = 2
  RegionVerdict cp;
};

/// Qubit classification with c11 = 1 - c12 and c22 = 1 - c21 (row-stochastic
/// completion; the verdicts are identical under the transposed convention).
Du2Verdicts classify_du2(double c12, double c21, Complex lambda);

struct Du3Verdicts {
  RegionVerdict schwarz;
  RegionVerdict cp;
};

/// Closed-form reference regions of the permutation-symmetric qutrit family:
/// Schwarz |lambda|^2 <= min{p, 1-p}/2, CP |lambda| <= min{p, 1-p}.
/// Throws ParameterOutOfRange unless p in [0, 1].
Du3Verdicts classify_du3_symmetric(double p, Complex lambda);

// --------------------------------------------------------------------------
// Product family
// --------------------------------------------------------------------------

/// Necessary Schwarz conditions of a unital, Hermiticity-preserving product
/// channel: the twelve basis-probe inequalities expressed through the
/// constants a, b, c, d. For (2,2) the set coincides with the published
/// specialized list; the quadratic face and interval constraints are the
/// n1*n2-scaled members named in the bindings.
RegionVerdict schwarz_necessary_product(const ProductParams& p);

/// CP via the four closed-form Choi eigenvalue families (exact for factor
/// dimensions in {2, 3}); margin = min eigenvalue * n1 * n2. Outside that
/// range falls back to a numeric Choi PSD test and says so in the binding.
RegionVerdict cp_product_small(const ProductParams& p,
                               const Tolerance& tol = {});

// --------------------------------------------------------------------------
// Generic numeric predicates
// --------------------------------------------------------------------------

/// member iff the minimum eigenvalue of the partial transpose (second
/// factor) of the Choi matrix is >= -tol.eig_zero; margin = that eigenvalue.
RegionVerdict ppt_numeric(const ComplexMatrix& choi, int d1, int d2,
                          const Tolerance& tol = {});
RegionVerdict ppt_numeric(const ChoiMatrix& choi, const Tolerance& tol = {});

/// Entanglement-breaking tests.
///  - U family: exact, via the isotropic-state fidelity interval
///    |F| <= 1/n with F = (1 - lambda)/n^2 + lambda (margins in fidelity
///    units).
///  - DU family: sufficient only; fires when the Choi splits into separable
///    two-level pieces plus a nonnegative diagonal, i.e.
///    c_ii >= sum_{j != i} |lambda_ij| and c_ij >= |lambda_ij|.
/// Throws UnsupportedFamily for product parameters.
RegionVerdict eb_sufficient(const UnitaryParams& p);
RegionVerdict eb_sufficient(const DiagonalParams& p);
RegionVerdict eb_sufficient(const ChannelParams& p);

/// Channel-PPT: complete positivity AND positivity of the partial transpose
/// of the Choi matrix. Analytic for U and DU parameters, numeric for the
/// product family.
RegionVerdict ppt_channel(const ChannelParams& p, const Tolerance& tol = {});

}  // namespace equichan

#endif  // EQUICHAN_CLASSIFY_HPP
