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

#include "equichan/classify.hpp"

#include <algorithm>
#include <cmath>

namespace equichan {

namespace {

constexpr double kExactTol = 1e-12;

struct SlackSet {
  double margin = std::numeric_limits<double>::infinity();
  std::string binding;

  void add(const std::string& name, double slack) {
    if (slack < margin) {
      margin = slack;
      binding = name;
    }
  }

  RegionVerdict verdict(double accept_below = 0.0) const {
    RegionVerdict v;
    v.margin = margin;
    v.binding = binding;
    v.member = margin >= -accept_below;
    return v;
  }
};

double real_param(Complex z, const char* what) {
  if (std::abs(z.imag()) > kExactTol) {
    throw NonRealParameter(std::string(what) + ": lambda must be real, got " +
                           std::to_string(z.real()) + " + " +
                           std::to_string(z.imag()) + "i");
  }
  return z.real();
}

void require_unital_hermpres(const StructuralFlags& f, const char* what) {
  if (!f.unital || !f.hermiticity_preserving) {
    std::string msg = std::string(what) + ": requires a unital, "
                      "Hermiticity-preserving channel";
    for (const auto& d : f.details) msg += "; " + d;
    throw StructurallyInvalid(msg);
  }
}

void require_hermpres(const StructuralFlags& f, const char* what) {
  if (!f.hermiticity_preserving) {
    std::string msg =
        std::string(what) + ": requires a Hermiticity-preserving channel";
    for (const auto& d : f.details) msg += "; " + d;
    throw StructurallyInvalid(msg);
  }
}

std::string idx2(const char* name, int i, int j) {
  return std::string(name) + "[" + std::to_string(i + 1) + "][" +
         std::to_string(j + 1) + "]";
}

}  // namespace

RegionVerdict schwarz_u(int n, double lambda) {
  SlackSet s;
  s.add("lambda >= -1/n", lambda + 1.0 / n);
  s.add("lambda <= 1", 1.0 - lambda);
  return s.verdict();
}

RegionVerdict cp_u(int n, double lambda) {
  SlackSet s;
  s.add("lambda >= -1/(n^2-1)", lambda + 1.0 / (n * n - 1));
  s.add("lambda <= 1", 1.0 - lambda);
  return s.verdict();
}

RegionVerdict ppt_eb_u(int n, double lambda) {
  SlackSet s;
  s.add("lambda >= -1/(n-1)", lambda + 1.0 / (n - 1));
  s.add("lambda <= 1/(n+1)", 1.0 / (n + 1) - lambda);
  return s.verdict();
}

RegionVerdict schwarz_u(int n, Complex lambda) {
  return schwarz_u(n, real_param(lambda, "schwarz_u"));
}
RegionVerdict cp_u(int n, Complex lambda) {
  return cp_u(n, real_param(lambda, "cp_u"));
}
RegionVerdict ppt_eb_u(int n, Complex lambda) {
  return ppt_eb_u(n, real_param(lambda, "ppt_eb_u"));
}

RegionVerdict schwarz_necessary_du(const DiagonalParams& p) {
  require_unital_hermpres(validate(p), "schwarz_necessary_du");
  SlackSet s;
  for (int k = 0; k < p.n; ++k) {
    for (int j = 0; j < p.n; ++j) {
      const double c = p.mixing(k, j).real();
      s.add(idx2("c", k, j) + " >= 0", c);
      s.add(idx2("c", k, j) + " <= 1", 1.0 - c);
    }
  }
  for (int j = 0; j < p.n; ++j) {
    const double cjj = p.mixing(j, j).real();
    for (int i = 0; i < p.n; ++i) {
      if (i == j) continue;
      s.add(idx2("c", j, j) + " >= |" + idx2("lam", i, j) + "|^2",
            cjj - std::norm(p.offdiag(i, j)));
    }
  }
  // Two-column probe X = E_ij + E_ik: 2x2 determinant condition on the
  // {j, k} block of M_Phi(X), enumerated over ordered distinct triples.
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      for (int k = 0; k < p.n; ++k) {
        if (i == j || i == k || j == k) continue;
        const double f1 = p.mixing(j, j).real() + p.mixing(j, k).real() -
                          std::norm(p.offdiag(i, j));
        const double f2 = p.mixing(k, j).real() + p.mixing(k, k).real() -
                          std::norm(p.offdiag(i, k));
        const Complex cross =
            p.offdiag(j, k) - p.offdiag(j, i) * p.offdiag(i, k);
        s.add("mixed(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                  "," + std::to_string(k + 1) + ")",
              f1 * f2 - std::norm(cross));
      }
    }
  }
  RegionVerdict v = s.verdict();
  if (p.n > 3) {
    v.notes.push_back(
        "necessary-only: membership is inconclusive for n > 3");
  }
  return v;
}

RegionVerdict cp_du(const DiagonalParams& p, const Tolerance& tol) {
  require_hermpres(validate(p), "cp_du");
  const DuChoiReduced r = choi_du_reduced(p);
  SlackSet s;
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      if (i != j) s.add(idx2("c", i, j) + " >= 0", p.mixing(i, j).real());
    }
  }
  s.add("lmin(reduced block) >= 0", is_psd(r.reduced, tol).min_eig);
  return s.verdict(tol.eig_zero);
}

RegionVerdict ppt_du(const DiagonalParams& p) {
  require_hermpres(validate(p), "ppt_du");
  SlackSet s;
  for (int i = 0; i < p.n; ++i) {
    for (int j = 0; j < p.n; ++j) {
      s.add(idx2("c", i, j) + " >= 0", p.mixing(i, j).real());
    }
  }
  for (int i = 0; i < p.n; ++i) {
    for (int j = i + 1; j < p.n; ++j) {
      s.add("pt-block(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ")",
            p.mixing(i, j).real() * p.mixing(j, i).real() -
                std::norm(p.offdiag(i, j)));
    }
  }
  return s.verdict();
}

Du2Verdicts classify_du2(double c12, double c21, Complex lambda) {
  const double c11 = 1.0 - c12;
  const double c22 = 1.0 - c21;
  const double l2 = std::norm(lambda);
  Du2Verdicts out;
  {
    SlackSet s;
    s.add("c12 >= 0", c12);
    s.add("c12 <= 1", 1.0 - c12);
    s.add("c21 >= 0", c21);
    s.add("c21 <= 1", 1.0 - c21);
    s.add("c11 >= |lambda|^2", c11 - l2);
    s.add("c22 >= |lambda|^2", c22 - l2);
    out.schwarz = s.verdict();
  }
  {
    SlackSet s;
    s.add("c12 >= 0", c12);
    s.add("c21 >= 0", c21);
    s.add("c11*c22 >= |lambda|^2", c11 * c22 - l2);
    out.cp = s.verdict();
  }
  return out;
}

Du3Verdicts classify_du3_symmetric(double p, Complex lambda) {
  if (p < 0.0 || p > 1.0) {
    throw ParameterOutOfRange("classify_du3_symmetric: p = " +
                              std::to_string(p) + " outside [0, 1]");
  }
  const double m = std::min(p, 1.0 - p);
  Du3Verdicts out;
  {
    SlackSet s;
    s.add("|lambda|^2 <= min{p,1-p}/2", 0.5 * m - std::norm(lambda));
    out.schwarz = s.verdict();
  }
  {
    SlackSet s;
    s.add("|lambda| <= min{p,1-p}", m - std::abs(lambda));
    out.cp = s.verdict();
  }
  return out;
}

namespace {

struct AbcdConstants {
  double a, b, c, d;
};

AbcdConstants abcd(const ProductParams& p, const char* what) {
  const double l01 = real_param(p.lam01, what);
  const double l10 = real_param(p.lam10, what);
  const double l11 = real_param(p.lam11, what);
  AbcdConstants k{};
  k.a = (1.0 - l01 - l10 + l11) / p.dim();
  k.b = (l01 - l11) / p.n1;
  k.c = (l10 - l11) / p.n2;
  k.d = l11;
  return k;
}

}  // namespace

RegionVerdict schwarz_necessary_product(const ProductParams& p) {
  require_unital_hermpres(validate(p), "schwarz_necessary_product");
  const auto [a, b, c, d] = abcd(p, "schwarz_necessary_product");
  const double s4 = a + b + c + d;
  SlackSet s;
  // off-diagonal (x) off-diagonal probe
  s.add("a >= 0", a);
  s.add("a+b >= 0", a + b);
  s.add("a+c >= 0", a + c);
  s.add("quad-face: a+b+c+d(1-d) >= 0", a + b + c + d * (1.0 - d));
  // diagonal (x) off-diagonal probe
  s.add("a+b(1-b) >= 0", a + b * (1.0 - b));
  s.add("a+b(1-b)+c+d(1-2b-d) >= 0",
        a + b * (1.0 - b) + c + d * (1.0 - 2.0 * b - d));
  // off-diagonal (x) diagonal probe
  s.add("a+c(1-c) >= 0", a + c * (1.0 - c));
  s.add("a+b+c(1-c)+d(1-2c-d) >= 0",
        a + b + c * (1.0 - c) + d * (1.0 - 2.0 * c - d));
  // diagonal (x) diagonal probe: interval constraints in product form
  s.add("range: a(1-a) >= 0", a * (1.0 - a));
  s.add("range: (a+b)(1-(a+b)) >= 0", (a + b) * (1.0 - (a + b)));
  s.add("range: (a+c)(1-(a+c)) >= 0", (a + c) * (1.0 - (a + c)));
  s.add("range: (a+b+c+d)(1-(a+b+c+d)) >= 0", s4 * (1.0 - s4));
  RegionVerdict v = s.verdict();
  v.notes.push_back("necessary-only: membership does not certify Schwarz");
  return v;
}

RegionVerdict cp_product_small(const ProductParams& p, const Tolerance& tol) {
  require_unital_hermpres(validate(p), "cp_product_small");
  const double dim = p.dim();
  if (p.n1 <= 3 && p.n2 <= 3) {
    const ProductChoiSpectrum spec = product_choi_eigs(p);
    static const char* names[4] = {"family-a", "family-b", "family-c",
                                   "family-d"};
    SlackSet s;
    for (int i = 0; i < 4; ++i) {
      s.add(names[i], spec.eigs[i].value * dim);
    }
    return s.verdict();
  }
  const ChoiMatrix choi = choi_generic(ChannelParams(p));
  SlackSet s;
  s.add("numeric-choi-psd (closed forms conjectured for this size)",
        is_psd(choi.matrix, tol).min_eig * dim);
  return s.verdict(tol.eig_zero * dim);
}

RegionVerdict ppt_numeric(const ComplexMatrix& choi, int d1, int d2,
                          const Tolerance& tol) {
  if (hermiticity_defect(choi) > tol.herm_sym) {
    throw NotHermitian("ppt_numeric: Choi matrix is not Hermitian");
  }
  const ComplexMatrix pt = partial_transpose(choi, d1, d2, Side::Second);
  SlackSet s;
  s.add("lmin(partial transpose) >= 0", is_psd(pt, tol).min_eig);
  return s.verdict(tol.eig_zero);
}

RegionVerdict ppt_numeric(const ChoiMatrix& choi, const Tolerance& tol) {
  return ppt_numeric(choi.matrix, choi.dim_in, choi.dim_out, tol);
}

RegionVerdict eb_sufficient(const UnitaryParams& p) {
  require_unital_hermpres(validate(p), "eb_sufficient");
  const double lambda = p.lambda.real();
  const double fidelity = (1.0 - lambda) / (p.n * p.n) + lambda;
  const double bound = 1.0 / p.n;
  SlackSet s;
  s.add("F >= -1/n", fidelity + bound);
  s.add("F <= 1/n", bound - fidelity);
  RegionVerdict v = s.verdict();
  v.notes.push_back("exact for the U family (PPT <=> EB)");
  return v;
}

RegionVerdict eb_sufficient(const DiagonalParams& p) {
  require_hermpres(validate(p), "eb_sufficient");
  SlackSet s;
  for (int i = 0; i < p.n; ++i) {
    double row = 0.0;
    for (int j = 0; j < p.n; ++j) {
      if (j == i) continue;
      row += std::abs(p.offdiag(i, j));
      s.add(idx2("c", i, j) + " >= |" + idx2("lam", i, j) + "|",
            p.mixing(i, j).real() - std::abs(p.offdiag(i, j)));
    }
    s.add(idx2("c", i, i) + " >= sum |lam|", p.mixing(i, i).real() - row);
  }
  RegionVerdict v = s.verdict();
  v.notes.push_back("sufficient-only: failure is inconclusive");
  return v;
}

RegionVerdict eb_sufficient(const ChannelParams& p) {
  if (std::holds_alternative<ProductParams>(p)) {
    throw UnsupportedFamily(
        "eb_sufficient: no executable EB certificate for the product family");
  }
  if (const auto* u = std::get_if<UnitaryParams>(&p)) return eb_sufficient(*u);
  return eb_sufficient(std::get<DiagonalParams>(p));
}

RegionVerdict ppt_channel(const ChannelParams& p, const Tolerance& tol) {
  if (const auto* u = std::get_if<UnitaryParams>(&p)) {
    require_unital_hermpres(validate(*u), "ppt_channel");
    const double lambda = u->lambda.real();
    const RegionVerdict cp = cp_u(u->n, lambda);
    const RegionVerdict pt = ppt_eb_u(u->n, lambda);
    SlackSet s;
    s.add("cp: " + cp.binding, cp.margin);
    s.add("pt: " + pt.binding, pt.margin);
    return s.verdict();
  }
  if (const auto* du = std::get_if<DiagonalParams>(&p)) {
    const RegionVerdict cp = cp_du(*du, tol);
    const RegionVerdict pt = ppt_du(*du);
    SlackSet s;
    s.add("cp: " + cp.binding, cp.margin);
    s.add("pt: " + pt.binding, pt.margin);
    return s.verdict(tol.eig_zero);
  }
  const auto& prod = std::get<ProductParams>(p);
  require_hermpres(validate(prod), "ppt_channel");
  const ChoiMatrix choi = choi_generic(p);
  const RegionVerdict pt = ppt_numeric(choi, tol);
  SlackSet s;
  s.add("cp: lmin(choi) >= 0", is_psd(choi.matrix, tol).min_eig);
  s.add("pt: " + pt.binding, pt.margin);
  RegionVerdict v = s.verdict(tol.eig_zero);
  v.notes.push_back("numeric (product family)");
  return v;
}

}  // namespace equichan
