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

#include "equichan/linalg.hpp"

#include <string>

namespace equichan {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch(std::string(what) + ": matrix is " +
                            std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected square");
  }
}

void require_bipartite(const ComplexMatrix& m, int d1, int d2,
                       const char* what) {
  require_square(m, what);
  if (d1 <= 0 || d2 <= 0 ||
      m.rows() != static_cast<Eigen::Index>(d1) * d2) {
    throw DimensionMismatch(std::string(what) + ": dim " +
                            std::to_string(m.rows()) + " != d1*d2 = " +
                            std::to_string(d1) + "*" + std::to_string(d2));
  }
}

}  // namespace

ComplexMatrix basis_matrix(int n, int i, int j) {
  if (n <= 0 || i < 0 || j < 0 || i >= n || j >= n) {
    throw DimensionMismatch("basis_matrix: index (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside M_" +
                            std::to_string(n));
  }
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("frobenius_inner: shape mismatch");
  }
  return (a.adjoint() * b).trace();
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          const Tolerance& tol) {
  require_square(m, "hermitian_eigenvalues");
  const double defect = hermiticity_defect(m);
  if (defect > tol.herm_sym) {
    throw NotHermitian("hermitian_eigenvalues: |M - M^dagger| = " +
                       std::to_string(defect) + " exceeds tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ((m + m.adjoint()) * 0.5).eval(), Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

PsdVerdict is_psd(const ComplexMatrix& m, const Tolerance& tol) {
  const auto eigs = hermitian_eigenvalues(m, tol);
  PsdVerdict v;
  v.min_eig = eigs.front();
  v.psd = v.min_eig >= -tol.eig_zero;
  return v;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, int d1, int d2,
                                Side side) {
  require_bipartite(m, d1, d2, "partial_transpose");
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d1; ++i) {
    for (int k = 0; k < d2; ++k) {
      for (int j = 0; j < d1; ++j) {
        for (int l = 0; l < d2; ++l) {
          // row index (i,k), column index (j,l)
          if (side == Side::Second) {
            out(i * d2 + k, j * d2 + l) = m(i * d2 + l, j * d2 + k);
          } else {
            out(i * d2 + k, j * d2 + l) = m(j * d2 + k, i * d2 + l);
          }
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int d1, int d2,
                            Side side) {
  require_bipartite(m, d1, d2, "partial_trace");
  if (side == Side::First) {
    ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
    for (int k = 0; k < d2; ++k) {
      for (int l = 0; l < d2; ++l) {
        for (int i = 0; i < d1; ++i) {
          out(k, l) += m(i * d2 + k, i * d2 + l);
        }
      }
    }
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
  for (int i = 0; i < d1; ++i) {
    for (int j = 0; j < d1; ++j) {
      for (int k = 0; k < d2; ++k) {
        out(i, j) += m(i * d2 + k, j * d2 + k);
      }
    }
  }
  return out;
}

std::vector<std::pair<double, int>> cluster_eigenvalues(
    const std::vector<double>& ascending, double gap) {
  std::vector<std::pair<double, int>> clusters;
  double last = 0.0;
  for (double v : ascending) {
    if (!clusters.empty() && v - last <= gap) {
      auto& [value, count] = clusters.back();
      value += (v - value) / (count + 1);  // running mean
      ++count;
    } else {
      clusters.emplace_back(v, 1);
    }
    last = v;
  }
  return clusters;
}

}  // namespace equichan
