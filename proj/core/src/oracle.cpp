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

#include "equichan/oracle.hpp"

#include <atomic>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <functional>
#include <thread>

#include "equichan/rng.hpp"

namespace equichan {

double kadison_gap(const ChannelFn& channel, int n, const ComplexMatrix& x,
                   const Tolerance& tol) {
  if (x.rows() != n || x.cols() != n) {
    throw DimensionMismatch("kadison_gap: X is " + std::to_string(x.rows()) +
                            "x" + std::to_string(x.cols()) + ", expected " +
                            std::to_string(n));
  }
  const ComplexMatrix px = channel(x);
  ComplexMatrix m = channel((x.adjoint() * x).eval()) - px.adjoint() * px;
  const double defect = hermiticity_defect(m);
  if (defect > tol.herm_sym) {
    throw NotHermitianIntermediate(
        "kadison_gap: M_Phi(X) is not Hermitian (defect " +
        std::to_string(defect) + "); channel is not Hermiticity-preserving");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      ((m + m.adjoint()) * 0.5).eval(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double kadison_gap(const ChannelParams& p, const ComplexMatrix& x,
                   const Tolerance& tol) {
  return kadison_gap(
      [&p](const ComplexMatrix& in) { return apply_channel(p, in); }, channel_dim(p),
      x, tol);
}

std::optional<Witness> schwarz_falsify(const ChannelParams& p, int budget,
                                       uint64_t seed, const Tolerance& tol) {
  const StructuralFlags flags = validate(p);
  if (!flags.unital || !flags.hermiticity_preserving) {
    throw StructurallyInvalid(
        "schwarz_falsify: channel must be unital and Hermiticity-preserving");
  }
  const int n = channel_dim(p);
  const auto gap_of = [&](const ComplexMatrix& x) {
    return kadison_gap(p, x, tol);
  };
  const auto check = [&](ComplexMatrix x,
                         const std::string& probe) -> std::optional<Witness> {
    const double g = gap_of(x);
    if (g < -tol.eig_zero) return Witness{std::move(x), g, probe};
    return std::nullopt;
  };

  // canonical basis probes
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (auto w = check(basis_matrix(n, i, j),
                         "E(" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")")) {
        return w;
      }
    }
  }
  // two-entry combinations, row and column versions, fixed coefficient set
  static const Complex kCoef[3] = {{1, 0}, {-1, 0}, {0, 1}};
  for (int cix = 0; cix < 3; ++cix) {
    const Complex beta = kCoef[cix];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          ComplexMatrix row = basis_matrix(n, i, j);
          row(i, k) = beta;  // E_ij + beta E_ik
          if (auto w = check(std::move(row), "row-pair")) return w;
          ComplexMatrix col = basis_matrix(n, j, i);
          col(k, i) = beta;  // E_ji + beta E_ki
          if (auto w = check(std::move(col), "column-pair")) return w;
        }
      }
    }
  }
  // random probes
  Rng rng(seed);
  for (int s = 0; s < budget; ++s) {
    if (auto w = check(rng.unit_ginibre(n, n),
                       "random#" + std::to_string(s))) {
      return w;
    }
  }
  return std::nullopt;
}

std::optional<BlockPositivityWitness> block_positivity_falsify(
    const ComplexMatrix& choi, int d1, int d2, int budget, uint64_t seed,
    const Tolerance& tol) {
  if (hermiticity_defect(choi) > tol.herm_sym) {
    throw NotHermitian("block_positivity_falsify: Choi is not Hermitian");
  }
  if (choi.rows() != static_cast<Eigen::Index>(d1) * d2) {
    throw DimensionMismatch("block_positivity_falsify: dims do not match");
  }
  BlockPositivityWitness best;
  best.value = 0.0;
  bool found = false;
  const auto consider = [&](const Eigen::VectorXcd& v,
                            const Eigen::VectorXcd& w) {
    Eigen::VectorXcd vw(d1 * d2);
    for (int i = 0; i < d1; ++i) {
      vw.segment(i * d2, d2) = v(i) * w;
    }
    const double val = (vw.adjoint() * choi * vw)(0, 0).real();
    if (val < best.value) {
      best = {v, w, val};
      found = true;
    }
  };
  // basis product vectors first, then random ones
  for (int i = 0; i < d1; ++i) {
    for (int k = 0; k < d2; ++k) {
      consider(Eigen::VectorXcd::Unit(d1, i), Eigen::VectorXcd::Unit(d2, k));
    }
  }
  Rng rng(seed);
  for (int s = 0; s < budget; ++s) {
    consider(rng.unit_vector(d1), rng.unit_vector(d2));
  }
  if (found && best.value < -tol.eig_zero) return best;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Region scans
// ---------------------------------------------------------------------------

namespace {

double fixed_or(const ScanSpec& spec, const std::string& key, double fallback) {
  auto it = spec.fixed.find(key);
  return it == spec.fixed.end() ? fallback : it->second;
}

double require_fixed(const ScanSpec& spec, const std::string& key) {
  auto it = spec.fixed.find(key);
  if (it == spec.fixed.end()) {
    throw SpecInvalid("region_scan: missing fixed parameter '" + key +
                      "' for family " + spec.family);
  }
  return it->second;
}

struct PointContext {
  std::map<std::string, double> values;  // fixed + axis values

  double at(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) {
      throw SpecInvalid("region_scan: parameter '" + key +
                        "' neither fixed nor swept");
    }
    return it->second;
  }
};

ChannelParams build_point(const ScanSpec& spec, const PointContext& ctx) {
  if (spec.family == "U") {
    const int n = static_cast<int>(require_fixed(spec, "n"));
    const double sigma = ctx.values.count("sigma") ? ctx.at("sigma") : 1.0;
    return UnitaryParams(n, Complex(sigma, 0), Complex(ctx.at("lambda"), 0));
  }
  if (spec.family == "DU2") {
    const double c12 = ctx.at("c12");
    const double c21 = ctx.at("c21");
    const Complex lam(ctx.at("lambda"), 0.0);
    ComplexMatrix off = ComplexMatrix::Zero(2, 2);
    off(0, 1) = lam;
    off(1, 0) = std::conj(lam);
    ComplexMatrix mix(2, 2);
    mix << Complex(1.0 - c12, 0), Complex(c12, 0), Complex(c21, 0),
        Complex(1.0 - c21, 0);
    return DiagonalParams(2, off, mix);
  }
  if (spec.family == "DU3SYM") {
    return DiagonalParams::symmetric_du3(ctx.at("p"),
                                         Complex(ctx.at("lambda"), 0.0));
  }
  if (spec.family == "PROD") {
    const int n1 = static_cast<int>(require_fixed(spec, "n1"));
    const int n2 = static_cast<int>(require_fixed(spec, "n2"));
    return ProductParams(n1, n2, Complex(1, 0), Complex(ctx.at("lam01"), 0),
                         Complex(ctx.at("lam10"), 0),
                         Complex(ctx.at("lam11"), 0));
  }
  throw SpecInvalid("region_scan: unknown family '" + spec.family + "'");
}

RegionVerdict eval_predicate(const std::string& pred, const ScanSpec& spec,
                             const PointContext& ctx, const ChannelParams& p,
                             const Tolerance& tol) {
  if (spec.family == "U") {
    const auto& u = std::get<UnitaryParams>(p);
    if (pred == "schwarz") return schwarz_u(u.n, u.lambda);
    if (pred == "cp") return cp_u(u.n, u.lambda);
    if (pred == "ppt_eb" || pred == "ppt" || pred == "eb") {
      return ppt_eb_u(u.n, u.lambda);
    }
  } else if (spec.family == "DU2") {
    if (pred == "schwarz" || pred == "cp") {
      const Du2Verdicts v = classify_du2(ctx.at("c12"), ctx.at("c21"),
                                         Complex(ctx.at("lambda"), 0.0));
      return pred == "schwarz" ? v.schwarz : v.cp;
    }
    if (pred == "ppt") return ppt_du(std::get<DiagonalParams>(p));
    if (pred == "eb") return eb_sufficient(std::get<DiagonalParams>(p));
  } else if (spec.family == "DU3SYM") {
    if (pred == "schwarz" || pred == "cp") {
      const Du3Verdicts v =
          classify_du3_symmetric(ctx.at("p"), Complex(ctx.at("lambda"), 0.0));
      return pred == "schwarz" ? v.schwarz : v.cp;
    }
    if (pred == "ppt") return ppt_du(std::get<DiagonalParams>(p));
    if (pred == "eb") return eb_sufficient(std::get<DiagonalParams>(p));
    if (pred == "cp_exact") return cp_du(std::get<DiagonalParams>(p), tol);
  } else if (spec.family == "PROD") {
    const auto& prod = std::get<ProductParams>(p);
    if (pred == "schwarz") return schwarz_necessary_product(prod);
    if (pred == "cp") return cp_product_small(prod, tol);
    if (pred == "ppt") return ppt_numeric(choi_generic(p), tol);
  }
  throw SpecInvalid("region_scan: predicate '" + pred +
                    "' not available for family " + spec.family);
}

}  // namespace

ScanResult region_scan(const ScanSpec& spec, const Tolerance& tol) {
  if (spec.axes.size() > 3) {
    throw SpecInvalid("region_scan: at most 3 swept axes");
  }
  std::vector<long> counts;
  long total = 1;
  for (const auto& ax : spec.axes) {
    if (!(ax.step > 0.0)) throw SpecInvalid("region_scan: step must be > 0");
    if (ax.hi < ax.lo) throw SpecInvalid("region_scan: hi < lo");
    const long c = static_cast<long>(std::floor((ax.hi - ax.lo) / ax.step +
                                                1e-9)) +
                   1;
    counts.push_back(c);
    total *= c;
  }

  ScanResult result;
  for (const auto& ax : spec.axes) result.axis_names.push_back(ax.name);
  result.predicate_names = spec.predicates;
  result.rows.resize(total);

  // grid values are snapped to 12 decimals so that decimal steps land
  // exactly on region boundaries like 1.0 or -0.5
  const auto grid_value = [](double lo, long k, double step) {
    const double raw = lo + static_cast<double>(k) * step;
    return std::round(raw * 1e12) / 1e12;
  };

  const auto eval_row = [&](long index) {
    PointContext ctx;
    ctx.values.insert(spec.fixed.begin(), spec.fixed.end());
    ScanRow row;
    row.coords.resize(spec.axes.size());
    long rem = index;
    for (int a = static_cast<int>(spec.axes.size()) - 1; a >= 0; --a) {
      const long k = rem % counts[a];
      rem /= counts[a];
      row.coords[a] = grid_value(spec.axes[a].lo, k, spec.axes[a].step);
    }
    for (size_t a = 0; a < spec.axes.size(); ++a) {
      ctx.values[spec.axes[a].name] = row.coords[a];
    }
    const ChannelParams p = build_point(spec, ctx);
    for (const auto& pred : spec.predicates) {
      row.verdicts.push_back(eval_predicate(pred, spec, ctx, p, tol));
    }
    row.oracle_witness =
        schwarz_falsify(p, spec.oracle_budget, mix_seed(spec.seed, index), tol)
            .has_value();
    result.rows[index] = std::move(row);
  };

  const int threads = std::max(1, spec.threads);
  if (threads == 1 || total < 2) {
    for (long i = 0; i < total; ++i) eval_row(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<long> next{0};
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&]() {
        for (long i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
          eval_row(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  return result;
}

std::string scan_to_csv(const ScanResult& result) {
  std::string out;
  const auto fmt = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (size_t i = 0; i < result.axis_names.size(); ++i) {
    out += result.axis_names[i];
    out += ',';
  }
  for (const auto& pred : result.predicate_names) {
    out += pred + "_member," + pred + "_margin,";
  }
  out += "oracle_witness\n";
  for (const auto& row : result.rows) {
    for (double c : row.coords) {
      out += fmt(c);
      out += ',';
    }
    for (const auto& v : row.verdicts) {
      out += v.member ? "1," : "0,";
      out += fmt(v.margin);
      out += ',';
    }
    out += row.oracle_witness ? "1\n" : "0\n";
  }
  return out;
}

}  // namespace equichan
