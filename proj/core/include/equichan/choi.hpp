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

#ifndef EQUICHAN_CHOI_HPP
#define EQUICHAN_CHOI_HPP

#include <functional>
#include <vector>

#include "equichan/channels.hpp"
#include "equichan/linalg.hpp"

namespace equichan {

/// C = sum_ij E_ij (x) Phi(E_ij); block (i, j) of the matrix is Phi(E_ij).
struct ChoiMatrix {
  int dim_in = 0;
  int dim_out = 0;
  ComplexMatrix matrix;
};

using ChannelFn = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Brute-force Choi construction by summing over the canonical basis.
ChoiMatrix choi_generic(const ChannelFn& channel, int n_in);
ChoiMatrix choi_generic(const ChannelParams& params);

/// Closed form for the unital U(n) family:
/// lambda * sum_ij E_ij (x) E_ij + ((1 - lambda)/n) I_{n^2}.
/// Throws NotUnital unless sigma = 1.
ChoiMatrix choi_u_closed(const UnitaryParams& p);

/// Spectrum of choi_u_closed for real lambda:
/// { n*lambda + (1-lambda)/n  (x1),  (1-lambda)/n  (x n^2-1) }.
std::vector<std::pair<double, int>> choi_u_eigs(int n, double lambda);

/// The DU Choi matrix splits into n^2 - n decoupled diagonal entries (the
/// off-diagonal entries of the mixing matrix) plus one n x n block
/// sum_i c_ii E_ii + sum_{i != j} lambda_ij E_ij.
struct DuChoiReduced {
  std::vector<Complex> offdiag_entries;  // c_ij, i != j, row-major
  ComplexMatrix reduced;
};

DuChoiReduced choi_du_reduced(const DiagonalParams& p);

/// One closed-form Choi eigenvalue family of the product symmetry class.
struct ChoiEig {
  double value = 0.0;
  int multiplicity = 0;
};

struct ProductChoiSpectrum {
  std::vector<ChoiEig> eigs;  // four families, fixed order
  bool conjectured = false;   // true when either factor dimension exceeds 3
};

/// Closed-form Choi eigenvalues of a unital, Hermiticity-preserving product
/// channel. Exact for n1, n2 in {2, 3}; evaluated (and flagged conjectured)
/// outside that range. Throws NonRealParameter for complex lambdas and
/// NotUnital unless lam00 = 1.
ProductChoiSpectrum product_choi_eigs(const ProductParams& p);

}  // namespace equichan

#endif  // EQUICHAN_CHOI_HPP
