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

#include "equichan/choi.hpp"

#include <cmath>

namespace equichan {

namespace {

constexpr double kExactTol = 1e-12;

double real_or_throw(Complex z, const char* what) {
  if (std::abs(z.imag()) > kExactTol) {
    throw NonRealParameter(std::string(what) +
                           ": parameter has imaginary part " +
                           std::to_string(z.imag()));
  }
  return z.real();
}

}  // namespace

ChoiMatrix choi_generic(const ChannelFn& channel, int n_in) {
  if (n_in < 1) throw DimensionMismatch("choi_generic: n_in must be positive");
  ComplexMatrix first = channel(basis_matrix(n_in, 0, 0));
  if (first.rows() != first.cols()) {
    throw DimensionMismatch("choi_generic: channel output is not square");
  }
  const int n_out = static_cast<int>(first.rows());
  ComplexMatrix c = ComplexMatrix::Zero(n_in * n_out, n_in * n_out);
  for (int i = 0; i < n_in; ++i) {
    for (int j = 0; j < n_in; ++j) {
      const ComplexMatrix block =
          (i == 0 && j == 0) ? first : channel(basis_matrix(n_in, i, j));
      if (block.rows() != n_out || block.cols() != n_out) {
        throw DimensionMismatch("choi_generic: inconsistent channel output");
      }
      c.block(i * n_out, j * n_out, n_out, n_out) = block;
    }
  }
  return ChoiMatrix{n_in, n_out, std::move(c)};
}

ChoiMatrix choi_generic(const ChannelParams& params) {
  const int n = channel_dim(params);
  return choi_generic(
      [&params](const ComplexMatrix& x) { return apply_channel(params, x); }, n);
}

ChoiMatrix choi_u_closed(const UnitaryParams& p) {
  if (std::abs(p.sigma - Complex(1.0, 0.0)) > kExactTol) {
    throw NotUnital("choi_u_closed: requires sigma = 1, got |sigma - 1| > 0");
  }
  const int n = p.n;
  ComplexMatrix c = ComplexMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c(i * n + i, j * n + j) += p.lambda;  // lambda * sum E_ij (x) E_ij
    }
  }
  const Complex diag = (Complex(1.0, 0.0) - p.lambda) / static_cast<double>(n);
  c.diagonal().array() += diag;
  return ChoiMatrix{n, n, std::move(c)};
}

std::vector<std::pair<double, int>> choi_u_eigs(int n, double lambda) {
  const double bulk = (1.0 - lambda) / n;
  return {{n * lambda + bulk, 1}, {bulk, n * n - 1}};
}

DuChoiReduced choi_du_reduced(const DiagonalParams& p) {
  DuChoiReduced r;
  r.reduced = ComplexMatrix::Zero(p.n, p.n);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (i == j) {
        r.reduced(i, i) = p.mixing(i, i);
      } else {
        r.reduced(i, j) = p.offdiag(i, j);
        r.offdiag_entries.push_back(p.mixing(i, j));
      }
    }
  }
  return r;
}

ProductChoiSpectrum product_choi_eigs(const ProductParams& p) {
  if (std::abs(p.lam00 - Complex(1.0, 0.0)) > kExactTol) {
    throw NotUnital("product_choi_eigs: requires lam00 = 1");
  }
  const double l01 = real_or_throw(p.lam01, "product_choi_eigs");
  const double l10 = real_or_throw(p.lam10, "product_choi_eigs");
  const double l11 = real_or_throw(p.lam11, "product_choi_eigs");
  const int m1 = p.n1 * p.n1 - 1;
  const int m2 = p.n2 * p.n2 - 1;
  const double dim = static_cast<double>(p.dim());
  ProductChoiSpectrum s;
  s.conjectured = p.n1 > 3 || p.n2 > 3;
  s.eigs = {
      {(1.0 + m2 * l01 + m1 * l10 + m1 * m2 * l11) / dim, 1},
      {(1.0 + m2 * l01 - l10 - m2 * l11) / dim, m1},
      {(1.0 - l01 + m1 * l10 - m1 * l11) / dim, m2},
      {(1.0 - l01 - l10 + l11) / dim, m1 * m2},
  };
  return s;
}

}  // namespace equichan
