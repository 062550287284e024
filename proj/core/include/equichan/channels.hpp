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

#ifndef EQUICHAN_CHANNELS_HPP
#define EQUICHAN_CHANNELS_HPP

#include <string>
#include <variant>
#include <vector>

#include "equichan/linalg.hpp"

namespace equichan {

// ---------------------------------------------------------------------------
// Parameter families
//
// Three symmetry classes of linear maps on M_n(C):
//   U     : Phi(X) = ((sigma - lambda)/n) tr(X) I_n + lambda X
//   DU    : entry-wise [Phi(X)]_ij = offdiag_ij X_ij (i != j) and the
//           diagonal vector mapped by the mixing matrix C, with the fixed
//           convention Phi(E_jj) = sum_k C(k, j) E_kk. Unital then means
//           every row of C sums to 1, and composition multiplies C matrices
//           in the usual order.
//   PROD  : Phi(X) = sum_ab lam_ab X_ab over the four-block decomposition of
//           M_{n1} (x) M_{n2} into identity/traceless tensor factors.
// ---------------------------------------------------------------------------

struct UnitaryParams {
  int n = 2;
  Complex sigma{1.0, 0.0};
  Complex lambda{1.0, 0.0};

  UnitaryParams() = default;
  UnitaryParams(int n_, Complex sigma_, Complex lambda_);
};

struct DiagonalParams {
  int n = 2;
  ComplexMatrix offdiag;  // n x n table; diagonal entries are never read
  ComplexMatrix mixing;   // n x n matrix C, column j = image of E_jj

  DiagonalParams() = default;
  DiagonalParams(int n_, ComplexMatrix offdiag_, ComplexMatrix mixing_);

  /// Identity channel of dimension n (offdiag all ones, mixing = I).
  static DiagonalParams identity(int n);
  /// Permutation-symmetric qutrit family: offdiag lambda (conjugated below
  /// the diagonal so the map is Hermiticity-preserving), mixing
  /// p*I + (1-p)/2 * (ones - I).
  static DiagonalParams symmetric_du3(double p, Complex lambda);
};

struct ProductParams {
  int n1 = 2;
  int n2 = 2;
  Complex lam00{1.0, 0.0};
  Complex lam01{1.0, 0.0};
  Complex lam10{1.0, 0.0};
  Complex lam11{1.0, 0.0};

  ProductParams() = default;
  ProductParams(int n1_, int n2_, Complex l00, Complex l01, Complex l10,
                Complex l11);

  int dim() const { return n1 * n2; }
};

using ChannelParams = std::variant<UnitaryParams, DiagonalParams, ProductParams>;

/// Input/output dimension of the channel described by the parameters.
int channel_dim(const ChannelParams& p);

/// "U", "DU" or "PROD".
std::string family_name(const ChannelParams& p);

// ---------------------------------------------------------------------------
// Application
// ---------------------------------------------------------------------------

ComplexMatrix apply_u(const UnitaryParams& p, const ComplexMatrix& x);
ComplexMatrix apply_du(const DiagonalParams& p, const ComplexMatrix& x);
ComplexMatrix apply_product(const ProductParams& p, const ComplexMatrix& x);
ComplexMatrix apply_channel(const ChannelParams& p, const ComplexMatrix& x);

/// The four mutually orthogonal components of X in
/// M_{n1} (x) M_{n2} = W00 + W01 + W10 + W11; they sum to X exactly.
struct ProductDecomposition {
  ComplexMatrix x00, x01, x10, x11;
};

ProductDecomposition decompose_product(const ComplexMatrix& x, int n1, int n2);

// ---------------------------------------------------------------------------
// Structural validation (exact, closed-form flag evaluation)
// ---------------------------------------------------------------------------

struct StructuralFlags {
  bool unital = false;
  bool hermiticity_preserving = false;
  std::vector<std::string> details;
};

StructuralFlags validate(const UnitaryParams& p);
StructuralFlags validate(const DiagonalParams& p);
StructuralFlags validate(const ProductParams& p);
StructuralFlags validate(const ChannelParams& p);

// ---------------------------------------------------------------------------
// Twirl: Frobenius-orthogonal projection of an arbitrary linear map (given as
// its Choi matrix) onto one equivariant family. residual is the Frobenius
// distance between the input Choi matrix and the Choi matrix of the projected
// channel; it vanishes exactly on equivariant inputs.
// ---------------------------------------------------------------------------

template <typename Params>
struct TwirlResult {
  Params params;
  double residual = 0.0;
};

TwirlResult<UnitaryParams> twirl_u(const ComplexMatrix& choi, int n);
TwirlResult<DiagonalParams> twirl_du(const ComplexMatrix& choi, int n);
TwirlResult<ProductParams> twirl_product(const ComplexMatrix& choi, int n1,
                                         int n2);

}  // namespace equichan

#endif  // EQUICHAN_CHANNELS_HPP
