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

#ifndef EQUICHAN_ORACLE_HPP
#define EQUICHAN_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "equichan/channels.hpp"
#include "equichan/choi.hpp"
#include "equichan/classify.hpp"

namespace equichan {

/// Minimum eigenvalue of M_Phi(X) = Phi(X^dagger X) - Phi(X)^dagger Phi(X).
/// Nonnegative for every X iff the (unital) channel is Schwarz. Throws
/// NotHermitianIntermediate when M fails the Hermiticity check, which
/// signals a channel that is not Hermiticity-preserving.
double kadison_gap(const ChannelFn& channel, int n, const ComplexMatrix& x,
                   const Tolerance& tol = {});
double kadison_gap(const ChannelParams& p, const ComplexMatrix& x,
                   const Tolerance& tol = {});

/// A concrete Kadison-inequality violation.
struct Witness {
  ComplexMatrix x;
  double gap = 0.0;
  std::string probe;  // which probe produced it
};

/// Searches for a Schwarz violation: canonical basis probes E_ij, two-entry
/// row/column combinations with a few fixed coefficient pairs, then `budget`
/// random unit-Frobenius Ginibre matrices. Returns the first witness with
/// gap < -tol.eig_zero, or nullopt. Deterministic given the seed. Absence of
/// a witness is NOT a Schwarz certificate.
std::optional<Witness> schwarz_falsify(const ChannelParams& p, int budget,
                                       uint64_t seed,
                                       const Tolerance& tol = {});

struct BlockPositivityWitness {
  Eigen::VectorXcd v;
  Eigen::VectorXcd w;
  double value = 0.0;
};

/// Samples product vectors v (x) w and returns the most negative
/// <v (x) w, C v (x) w> if it falls below -tol.eig_zero. Falsifier only.
std::optional<BlockPositivityWitness> block_positivity_falsify(
    const ComplexMatrix& choi, int d1, int d2, int budget, uint64_t seed,
    const Tolerance& tol = {});

// ---------------------------------------------------------------------------
// Region scans
// ---------------------------------------------------------------------------

struct ScanAxis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  double step = 1.0;
};

/// Grid scan request. family is one of "U", "DU2", "DU3SYM", "PROD";
/// `fixed` holds the non-swept parameters (e.g. n, sigma, lam01, ...).
/// Each grid point evaluates the requested analytic predicates and the
/// Schwarz falsifier (structured probes + oracle_budget random samples).
struct ScanSpec {
  std::string family;
  std::map<std::string, double> fixed;
  std::vector<ScanAxis> axes;  // at most 3
  std::vector<std::string> predicates;
  uint64_t seed = 0;
  int oracle_budget = 200;
  int threads = 1;
};

struct ScanRow {
  std::vector<double> coords;
  std::vector<RegionVerdict> verdicts;
  bool oracle_witness = false;
};

struct ScanResult {
  std::vector<std::string> axis_names;
  std::vector<std::string> predicate_names;
  std::vector<ScanRow> rows;
};

/// Deterministic row order (last axis fastest); per-point falsifier seeds are
/// derived from spec.seed and the row index, so the output is independent of
/// spec.threads.
ScanResult region_scan(const ScanSpec& spec, const Tolerance& tol = {});

/// CSV with header "axes..., <pred>_member, <pred>_margin, ..., oracle_witness";
/// floats printed with 17 significant digits.
std::string scan_to_csv(const ScanResult& result);

}  // namespace equichan

#endif  // EQUICHAN_ORACLE_HPP
