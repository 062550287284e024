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

#ifndef EQUICHAN_LINALG_HPP
#define EQUICHAN_LINALG_HPP

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "equichan/errors.hpp"

namespace equichan {

using Complex = std::complex<double>;

/// Dense complex square/rectangular matrix, row-major index convention
/// E_ij(i, j) = 1 (0-indexed).
using ComplexMatrix = Eigen::MatrixXcd;

/// Shared numerical thresholds. eig_zero bounds how negative an eigenvalue
/// may be while still counting as >= 0; herm_sym bounds the entry-wise
/// deviation |M - M^dagger| accepted as Hermitian.
struct Tolerance {
  double eig_zero = 1e-9;
  double herm_sym = 1e-9;
};

enum class Side { First, Second };

/// Canonical basis matrix E_ij of M_n, single 1 at (i, j), 0-indexed.
ComplexMatrix basis_matrix(int n, int i, int j);

/// max_ij |M - M^dagger|_ij; 0 for exactly Hermitian input.
double hermiticity_defect(const ComplexMatrix& m);

/// Frobenius inner product <A, B> = tr(A^dagger B).
Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// All eigenvalues of a Hermitian matrix, ascending, with multiplicity.
/// Throws DimensionMismatch if not square, NotHermitian if the defect
/// exceeds tol.herm_sym.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          const Tolerance& tol = {});

struct PsdVerdict {
  bool psd = false;
  double min_eig = 0.0;
};

/// PSD test: verdict true iff the smallest eigenvalue is >= -tol.eig_zero.
/// The signed minimum eigenvalue is always reported.
PsdVerdict is_psd(const ComplexMatrix& m, const Tolerance& tol = {});

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Transpose of one tensor factor of a (d1*d2)x(d1*d2) matrix.
ComplexMatrix partial_transpose(const ComplexMatrix& m, int d1, int d2,
                                Side side);

/// Trace over one tensor factor; the result has the other factor's dimension.
ComplexMatrix partial_trace(const ComplexMatrix& m, int d1, int d2, Side side);

/// Groups an ascending eigenvalue list into (value, multiplicity) clusters;
/// adjacent values closer than gap fall into the same cluster, which is
/// reported at its mean.
std::vector<std::pair<double, int>> cluster_eigenvalues(
    const std::vector<double>& ascending, double gap = 1e-8);

}  // namespace equichan

#endif  // EQUICHAN_LINALG_HPP
