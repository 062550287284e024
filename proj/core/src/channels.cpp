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

#include "equichan/channels.hpp"

#include <cmath>
#include <sstream>

#include "equichan/choi.hpp"

namespace equichan {

namespace {

constexpr double kExactTol = 1e-12;

void require_dim(const ComplexMatrix& x, int n, const char* what) {
  if (x.rows() != n || x.cols() != n) {
    throw DimensionMismatch(std::string(what) + ": input is " +
                            std::to_string(x.rows()) + "x" +
                            std::to_string(x.cols()) + ", expected " +
                            std::to_string(n) + "x" + std::to_string(n));
  }
}

void require_min_dim(int n, const char* family) {
  if (n < 2) {
    throw ParameterOutOfRange(std::string(family) +
                              ": n must be >= 2 (the n = 1 case is trivial)");
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

UnitaryParams::UnitaryParams(int n_, Complex sigma_, Complex lambda_)
    : n(n_), sigma(sigma_), lambda(lambda_) {
  require_min_dim(n, "UnitaryParams");
}

DiagonalParams::DiagonalParams(int n_, ComplexMatrix offdiag_,
                               ComplexMatrix mixing_)
    : n(n_), offdiag(std::move(offdiag_)), mixing(std::move(mixing_)) {
  require_min_dim(n, "DiagonalParams");
  if (offdiag.rows() != n || offdiag.cols() != n || mixing.rows() != n ||
      mixing.cols() != n) {
    throw DimensionMismatch("DiagonalParams: offdiag and mixing must be " +
                            std::to_string(n) + "x" + std::to_string(n));
  }
}

DiagonalParams DiagonalParams::identity(int n) {
  ComplexMatrix ones = ComplexMatrix::Ones(n, n);
  return DiagonalParams(n, ones, ComplexMatrix::Identity(n, n));
}

DiagonalParams DiagonalParams::symmetric_du3(double p, Complex lambda) {
  ComplexMatrix off = ComplexMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i < j) off(i, j) = lambda;
      if (i > j) off(i, j) = std::conj(lambda);
    }
  }
  const double q = (1.0 - p) / 2.0;
  ComplexMatrix mix = ComplexMatrix::Constant(3, 3, q);
  mix.diagonal().setConstant(p);
  return DiagonalParams(3, off, mix);
}

ProductParams::ProductParams(int n1_, int n2_, Complex l00, Complex l01,
                             Complex l10, Complex l11)
    : n1(n1_), n2(n2_), lam00(l00), lam01(l01), lam10(l10), lam11(l11) {
  require_min_dim(n1, "ProductParams");
  require_min_dim(n2, "ProductParams");
}

int channel_dim(const ChannelParams& p) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ProductParams>) {
          return v.dim();
        } else {
          return v.n;
        }
      },
      p);
}

std::string family_name(const ChannelParams& p) {
  if (std::holds_alternative<UnitaryParams>(p)) return "U";
  if (std::holds_alternative<DiagonalParams>(p)) return "DU";
  return "PROD";
}

ComplexMatrix apply_u(const UnitaryParams& p, const ComplexMatrix& x) {
  require_dim(x, p.n, "apply_u");
  const Complex scale = (p.sigma - p.lambda) / static_cast<double>(p.n);
  ComplexMatrix out = p.lambda * x;
  out.diagonal().array() += scale * x.trace();
  return out;
}

ComplexMatrix apply_du(const DiagonalParams& p, const ComplexMatrix& x) {
  require_dim(x, p.n, "apply_du");
  ComplexMatrix out(p.n, p.n);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      out(i, j) = (i == j) ? Complex(0, 0) : p.offdiag(i, j) * x(i, j);
    }
  }
  out.diagonal() = p.mixing * x.diagonal();
  return out;
}

ProductDecomposition decompose_product(const ComplexMatrix& x, int n1,
                                       int n2) {
  const int dim = n1 * n2;
  require_dim(x, dim, "decompose_product");
  const Complex tr = x.trace();
  ProductDecomposition d;
  d.x00 = (tr / static_cast<double>(dim)) * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix tr1 = partial_trace(x, n1, n2, Side::First);
  const ComplexMatrix tr2 = partial_trace(x, n1, n2, Side::Second);
  d.x01 = kron(ComplexMatrix::Identity(n1, n1) / static_cast<double>(n1),
               tr1 - (tr / static_cast<double>(n2)) *
                         ComplexMatrix::Identity(n2, n2));
  d.x10 = kron(tr2 - (tr / static_cast<double>(n1)) *
                         ComplexMatrix::Identity(n1, n1),
               ComplexMatrix::Identity(n2, n2) / static_cast<double>(n2));
  d.x11 = x - d.x00 - d.x01 - d.x10;
  return d;
}

ComplexMatrix apply_product(const ProductParams& p, const ComplexMatrix& x) {
  require_dim(x, p.dim(), "apply_product");
  const ProductDecomposition d = decompose_product(x, p.n1, p.n2);
  return p.lam00 * d.x00 + p.lam01 * d.x01 + p.lam10 * d.x10 +
         p.lam11 * d.x11;
}

ComplexMatrix apply_channel(const ChannelParams& p, const ComplexMatrix& x) {
  return std::visit(
      [&x](const auto& v) -> ComplexMatrix {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, UnitaryParams>) {
          return apply_u(v, x);
        } else if constexpr (std::is_same_v<T, DiagonalParams>) {
          return apply_du(v, x);
        } else {
          return apply_product(v, x);
        }
      },
      p);
}

StructuralFlags validate(const UnitaryParams& p) {
  StructuralFlags f;
  const double unital_defect = std::abs(p.sigma - Complex(1.0, 0.0));
  const double herm_defect =
      std::max(std::abs(p.sigma.imag()), std::abs(p.lambda.imag()));
  f.unital = unital_defect <= kExactTol;
  f.hermiticity_preserving = herm_defect <= kExactTol;
  f.details.push_back("|sigma - 1| = " + fmt(unital_defect));
  f.details.push_back("max |Im sigma|, |Im lambda| = " + fmt(herm_defect));
  return f;
}

StructuralFlags validate(const DiagonalParams& p) {
  StructuralFlags f;
  double unital_defect = 0.0;
  for (int i = 0; i < p.n; ++i) {
    unital_defect =
        std::max(unital_defect, std::abs(p.mixing.row(i).sum() - 1.0));
  }
  double herm_defect = 0.0;
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      herm_defect = std::max(herm_defect, std::abs(p.mixing(i, j).imag()));
      if (i != j) {
        herm_defect = std::max(
            herm_defect, std::abs(p.offdiag(i, j) - std::conj(p.offdiag(j, i))));
      }
    }
  }
  f.unital = unital_defect <= kExactTol;
  f.hermiticity_preserving = herm_defect <= kExactTol;
  f.details.push_back("max row-sum defect of C = " + fmt(unital_defect));
  f.details.push_back("max |lam_ij - conj(lam_ji)|, |Im c_ij| = " +
                      fmt(herm_defect));
  return f;
}

StructuralFlags validate(const ProductParams& p) {
  StructuralFlags f;
  const double unital_defect = std::abs(p.lam00 - Complex(1.0, 0.0));
  double herm_defect = 0.0;
  for (const Complex& l : {p.lam00, p.lam01, p.lam10, p.lam11}) {
    herm_defect = std::max(herm_defect, std::abs(l.imag()));
  }
  f.unital = unital_defect <= kExactTol;
  f.hermiticity_preserving = herm_defect <= kExactTol;
  f.details.push_back("|lam00 - 1| = " + fmt(unital_defect));
  f.details.push_back("max |Im lam_ab| = " + fmt(herm_defect));
  return f;
}

StructuralFlags validate(const ChannelParams& p) {
  return std::visit([](const auto& v) { return validate(v); }, p);
}

namespace {

void require_choi_dim(const ComplexMatrix& choi, int dim, const char* what) {
  if (choi.rows() != choi.cols() ||
      choi.rows() != static_cast<Eigen::Index>(dim) * dim) {
    throw DimensionMismatch(std::string(what) + ": Choi matrix is " +
                            std::to_string(choi.rows()) + "x" +
                            std::to_string(choi.cols()) + ", expected " +
                            std::to_string(dim * dim) + " square");
  }
}

double choi_distance(const ComplexMatrix& choi, const ChannelParams& p) {
  return (choi - choi_generic(p).matrix).norm();
}

}  // namespace

TwirlResult<UnitaryParams> twirl_u(const ComplexMatrix& choi, int n) {
  require_min_dim(n, "twirl_u");
  require_choi_dim(choi, n, "twirl_u");
  // sigma = tr L(I) / n; lambda = (HS-trace(L) - sigma) / (n^2 - 1).
  const Complex sigma = choi.trace() / static_cast<double>(n);
  Complex hs_trace(0, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      hs_trace += choi(i * n + i, j * n + j);  // <E_ij, L(E_ij)>
    }
  }
  const Complex lambda = (hs_trace - sigma) / static_cast<double>(n * n - 1);
  TwirlResult<UnitaryParams> r{UnitaryParams(n, sigma, lambda), 0.0};
  r.residual = choi_distance(choi, r.params);
  return r;
}

TwirlResult<DiagonalParams> twirl_du(const ComplexMatrix& choi, int n) {
  require_min_dim(n, "twirl_du");
  require_choi_dim(choi, n, "twirl_du");
  ComplexMatrix off = ComplexMatrix::Zero(n, n);
  ComplexMatrix mix = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) off(i, j) = choi(i * n + i, j * n + j);  // [L(E_ij)]_ij
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      mix(k, j) = choi(j * n + k, j * n + k);  // [L(E_jj)]_kk
    }
  }
  TwirlResult<DiagonalParams> r{DiagonalParams(n, off, mix), 0.0};
  r.residual = choi_distance(choi, r.params);
  return r;
}

TwirlResult<ProductParams> twirl_product(const ComplexMatrix& choi, int n1,
                                         int n2) {
  require_min_dim(n1, "twirl_product");
  require_min_dim(n2, "twirl_product");
  const int dim = n1 * n2;
  require_choi_dim(choi, dim, "twirl_product");
  // lam_ab = <P_ab, L>_HS / dim(W_ab), accumulated over the canonical basis.
  Complex num[4] = {};
  const double denom[4] = {1.0, static_cast<double>(n2 * n2 - 1),
                           static_cast<double>(n1 * n1 - 1),
                           static_cast<double>((n1 * n1 - 1) * (n2 * n2 - 1))};
  for (int bi = 0; bi < dim; ++bi) {
    for (int bj = 0; bj < dim; ++bj) {
      const ComplexMatrix block = choi.block(bi * dim, bj * dim, dim, dim);
      const ProductDecomposition d =
          decompose_product(basis_matrix(dim, bi, bj), n1, n2);
      num[0] += frobenius_inner(d.x00, block);
      num[1] += frobenius_inner(d.x01, block);
      num[2] += frobenius_inner(d.x10, block);
      num[3] += frobenius_inner(d.x11, block);
    }
  }
  ProductParams params(n1, n2, num[0] / denom[0], num[1] / denom[1],
                       num[2] / denom[2], num[3] / denom[3]);
  TwirlResult<ProductParams> r{params, 0.0};
  r.residual = choi_distance(choi, ChannelParams(params));
  return r;
}

}  // namespace equichan
