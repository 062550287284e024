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

#include "equichan/compose.hpp"

#include <cmath>
#include <sstream>

#include "equichan/choi.hpp"

namespace equichan {

namespace {

constexpr double kExactTol = 1e-12;

void require_same_n(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch " +
                            std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

UnitaryParams compose(const UnitaryParams& p, const UnitaryParams& q) {
  require_same_n(p.n, q.n, "compose(U)");
  return UnitaryParams(p.n, p.sigma * q.sigma, p.lambda * q.lambda);
}

DiagonalParams compose(const DiagonalParams& p, const DiagonalParams& q) {
  require_same_n(p.n, q.n, "compose(DU)");
  ComplexMatrix off = ComplexMatrix::Zero(p.n, p.n);
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (i != j) off(i, j) = p.offdiag(i, j) * q.offdiag(i, j);
    }
  }
  return DiagonalParams(p.n, off, p.mixing * q.mixing);
}

ProductParams compose(const ProductParams& p, const ProductParams& q) {
  if (p.n1 != q.n1 || p.n2 != q.n2) {
    throw DimensionMismatch("compose(PROD): factor dimensions differ");
  }
  return ProductParams(p.n1, p.n2, p.lam00 * q.lam00, p.lam01 * q.lam01,
                       p.lam10 * q.lam10, p.lam11 * q.lam11);
}

ChannelParams compose(const ChannelParams& p, const ChannelParams& q) {
  if (p.index() != q.index()) {
    throw FamilyMismatch("compose: cannot compose " + family_name(p) +
                         " with " + family_name(q));
  }
  return std::visit(
      [&q](const auto& a) -> ChannelParams {
        using T = std::decay_t<decltype(a)>;
        return compose(a, std::get<T>(q));
      },
      p);
}

ChannelParams power(const ChannelParams& p, int k) {
  if (k < 1) {
    throw ParameterOutOfRange("power: exponent must be >= 1, got " +
                              std::to_string(k));
  }
  ChannelParams out = p;
  for (int i = 1; i < k; ++i) out = compose(out, p);
  return out;
}

namespace {

// The permutation-symmetric qutrit subclass: all off-diagonal couplings share
// a single magnitude/phase pattern and the mixing matrix is
// p*I + (1-p)/2 * (ones - I).
bool is_symmetric_du3(const DiagonalParams& p, double* p_out) {
  if (p.n != 3) return false;
  const double diag = p.mixing(0, 0).real();
  const double off = (1.0 - diag) / 2.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double expect = (i == j) ? diag : off;
      if (std::abs(p.mixing(i, j) - Complex(expect, 0.0)) > kExactTol) {
        return false;
      }
    }
  }
  const Complex lam = p.offdiag(0, 1);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const Complex expect = (i < j) ? lam : std::conj(lam);
      if (std::abs(p.offdiag(i, j) - expect) > kExactTol) return false;
    }
  }
  if (p_out) *p_out = diag;
  return true;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

Ppt2Report ppt2_check(const ChannelParams& p, const Tolerance& tol) {
  Ppt2Report rep;
  rep.input = p;
  rep.conclusion = "inconclusive";

  if (std::holds_alternative<UnitaryParams>(p)) {
    rep.ppt_of_phi = ppt_channel(p, tol);
    rep.phi_squared = power(p, 2);
    rep.eb_of_phi_squared =
        eb_sufficient(std::get<UnitaryParams>(rep.phi_squared));
    if (rep.ppt_of_phi.member && rep.eb_of_phi_squared.member) {
      rep.conclusion = "holds";
    }
    return rep;
  }

  if (const auto* du = std::get_if<DiagonalParams>(&p)) {
    double sym_p = 0.0;
    if (du->n != 2 && !is_symmetric_du3(*du, &sym_p)) {
      throw UnsupportedFamily(
          "ppt2_check: DU parameters must be DU(2) or the symmetric DU(3) "
          "family");
    }
    rep.ppt_of_phi = ppt_channel(p, tol);
    rep.phi_squared = power(p, 2);
    const auto& sq = std::get<DiagonalParams>(rep.phi_squared);
    rep.eb_of_phi_squared = eb_sufficient(sq);
    // squared-diagonal-dominance values, for reference
    for (int i = 0; i < sq.n; ++i) {
      double row = 0.0;
      for (int j = 0; j < sq.n; ++j) {
        if (j != i) row += std::norm(sq.offdiag(i, j));
      }
      rep.details.push_back("dd-sq row " + std::to_string(i + 1) + ": c_ii - "
                            "sum |lam|^2 = " +
                            fmt(sq.mixing(i, i).real() - row));
    }
    if (rep.ppt_of_phi.member && rep.eb_of_phi_squared.member) {
      rep.conclusion = "holds";
    }
    return rep;
  }

  const auto& prod = std::get<ProductParams>(p);
  const bool supported = (prod.n1 == 2 && (prod.n2 == 2 || prod.n2 == 3));
  if (!supported) {
    throw UnsupportedFamily(
        "ppt2_check: product family supported for (n1, n2) = (2,2), (2,3)");
  }
  rep.ppt_of_phi = ppt_channel(p, tol);
  rep.phi_squared = power(p, 2);
  const auto& sq = std::get<ProductParams>(rep.phi_squared);
  const RegionVerdict sq_ppt = ppt_channel(rep.phi_squared, tol);
  const RegionVerdict sq_faces = schwarz_necessary_product(sq);
  RegionVerdict evidence;
  evidence.member = sq_ppt.member && sq_faces.member;
  if (sq_ppt.margin <= sq_faces.margin) {
    evidence.margin = sq_ppt.margin;
    evidence.binding = "phi^2 ppt: " + sq_ppt.binding;
  } else {
    evidence.margin = sq_faces.margin;
    evidence.binding = "phi^2 face: " + sq_faces.binding;
  }
  evidence.notes.push_back(
      "evidence-only: no executable EB certificate for the product family");
  rep.eb_of_phi_squared = evidence;
  rep.details.push_back("phi^2 numeric ppt margin = " + fmt(sq_ppt.margin));
  rep.details.push_back("phi^2 schwarz-necessary margin = " +
                        fmt(sq_faces.margin));
  return rep;
}

}  // namespace equichan
