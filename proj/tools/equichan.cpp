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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "equichan/compose.hpp"
#include "equichan/json_io.hpp"
#include "equichan/oracle.hpp"
#include "equichan/rng.hpp"

namespace {

using equichan::ChannelParams;
using equichan::Complex;
using equichan::DiagonalParams;
using equichan::ProductParams;
using equichan::RegionVerdict;
using equichan::Tolerance;
using equichan::UnitaryParams;
using nlohmann::json;

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw equichan::SpecInvalid("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw equichan::SpecInvalid(path + ": malformed JSON at line " +
                                std::to_string(line) + " column " +
                                std::to_string(col));
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw equichan::SpecInvalid("cannot write '" + path + "'");
  out << text;
}

// Shared channel-parameter flags; either --params FILE or one of the
// family shortcuts.
struct ParamFlags {
  std::string params_file;
  std::string family;
  int n = 2;
  int n1 = 2;
  int n2 = 2;
  double sigma = 1.0;
  double lambda = 0.0;
  double c12 = 0.0;
  double c21 = 0.0;
  double p = 0.0;
  double lam01 = 0.0;
  double lam10 = 0.0;
  double lam11 = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--params", params_file,
                    "channel parameters JSON file (families U, DU, PROD)");
    cmd->add_option("--family", family, "U | DU2 | DU3SYM | PROD");
    cmd->add_option("--n", n, "dimension (family U)");
    cmd->add_option("--sigma", sigma, "sigma (family U, default 1)");
    cmd->add_option("--lambda", lambda, "lambda (families U, DU2, DU3SYM)");
    cmd->add_option("--c12", c12, "mixing entry c12 (family DU2)");
    cmd->add_option("--c21", c21, "mixing entry c21 (family DU2)");
    cmd->add_option("--p", p, "diagonal weight p (family DU3SYM)");
    cmd->add_option("--n1", n1, "first factor dimension (family PROD)");
    cmd->add_option("--n2", n2, "second factor dimension (family PROD)");
    cmd->add_option("--lam01", lam01, "lambda_01 (family PROD)");
    cmd->add_option("--lam10", lam10, "lambda_10 (family PROD)");
    cmd->add_option("--lam11", lam11, "lambda_11 (family PROD)");
  }

  ChannelParams build() const {
    if (!params_file.empty()) {
      return equichan::params_from_json(parse_json_file(params_file));
    }
    if (family == "U") {
      return UnitaryParams(n, Complex(sigma, 0), Complex(lambda, 0));
    }
    if (family == "DU2") {
      equichan::ComplexMatrix off = equichan::ComplexMatrix::Zero(2, 2);
      off(0, 1) = Complex(lambda, 0);
      off(1, 0) = Complex(lambda, 0);
      equichan::ComplexMatrix mix(2, 2);
      mix << Complex(1.0 - c12, 0), Complex(c12, 0), Complex(c21, 0),
          Complex(1.0 - c21, 0);
      return DiagonalParams(2, off, mix);
    }
    if (family == "DU3SYM") {
      return DiagonalParams::symmetric_du3(p, Complex(lambda, 0));
    }
    if (family == "PROD") {
      return ProductParams(n1, n2, Complex(1, 0), Complex(lam01, 0),
                           Complex(lam10, 0), Complex(lam11, 0));
    }
    throw equichan::SpecInvalid(
        "specify --params FILE or --family U|DU2|DU3SYM|PROD");
  }
};

struct RegionEntry {
  std::string name;
  RegionVerdict verdict;
  std::string method;
};

json class_report(const ChannelParams& params, const ParamFlags& flags,
                  const Tolerance& tol) {
  const equichan::StructuralFlags sf = equichan::validate(params);
  std::vector<RegionEntry> regions;
  const bool du3sym = flags.params_file.empty() && flags.family == "DU3SYM";

  if (const auto* u = std::get_if<UnitaryParams>(&params)) {
    if (sf.unital && sf.hermiticity_preserving) {
      const double l = u->lambda.real();
      regions.push_back({"schwarz", equichan::schwarz_u(u->n, l), "analytic"});
      regions.push_back({"cp", equichan::cp_u(u->n, l), "analytic"});
      // PPT and EB coincide for this family; reported for channels (CP and
      // partial-transpose constraints together).
      regions.push_back(
          {"ppt_eb", equichan::ppt_channel(params, tol), "analytic"});
    }
  } else if (const auto* du = std::get_if<DiagonalParams>(&params)) {
    if (sf.unital && sf.hermiticity_preserving) {
      if (du3sym) {
        const auto v = equichan::classify_du3_symmetric(
            flags.p, Complex(flags.lambda, 0));
        regions.push_back({"schwarz", v.schwarz, "analytic"});
        regions.push_back({"cp", v.cp, "analytic"});
      } else {
        regions.push_back({"schwarz", equichan::schwarz_necessary_du(*du),
                           du->n == 2 ? "analytic" : "necessary-only"});
        regions.push_back({"cp", equichan::cp_du(*du, tol), "analytic"});
      }
      regions.push_back({"ppt", equichan::ppt_du(*du), "analytic"});
      regions.push_back({"eb", equichan::eb_sufficient(*du),
                         "sufficient-only"});
    }
  } else {
    const auto& prod = std::get<ProductParams>(params);
    if (sf.unital && sf.hermiticity_preserving) {
      regions.push_back({"schwarz", equichan::schwarz_necessary_product(prod),
                         "necessary-only"});
      regions.push_back(
          {"cp", equichan::cp_product_small(prod, tol),
           (prod.n1 <= 3 && prod.n2 <= 3) ? "analytic" : "numeric"});
      regions.push_back(
          {"ppt", equichan::ppt_numeric(equichan::choi_generic(params), tol),
           "numeric"});
    }
  }

  json flags_json = equichan::flags_to_json(sf);
  json margins = json::object();
  json binding = json::object();
  json method = json::object();
  for (const auto& r : regions) {
    flags_json[r.name] = r.verdict.member;
    margins[r.name] = r.verdict.margin;
    binding[r.name] = r.verdict.binding;
    method[r.name] = r.method;
  }
  json out{{"family", equichan::family_name(params)},
           {"params", equichan::params_to_json(params)},
           {"flags", flags_json},
           {"margins", margins},
           {"binding", binding},
           {"method", method}};
  if (regions.empty()) {
    out["note"] =
        "region predicates need a unital, Hermiticity-preserving channel";
  }
  return out;
}

std::string spectra_csv(const ChannelParams& params, const Tolerance& tol) {
  const auto fmt = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  std::string csv = "eigenvalue,multiplicity,source\n";
  if (const auto* u = std::get_if<UnitaryParams>(&params)) {
    const auto sf = equichan::validate(*u);
    if (sf.unital && sf.hermiticity_preserving) {
      for (const auto& [value, mult] :
           equichan::choi_u_eigs(u->n, u->lambda.real())) {
        csv += fmt(value) + "," + std::to_string(mult) + ",analytic\n";
      }
    }
  } else if (const auto* du = std::get_if<DiagonalParams>(&params)) {
    if (equichan::validate(*du).hermiticity_preserving) {
      const auto reduced = equichan::choi_du_reduced(*du);
      std::vector<double> values;
      for (const auto& c : reduced.offdiag_entries) {
        values.push_back(c.real());
      }
      for (double e : equichan::hermitian_eigenvalues(reduced.reduced, tol)) {
        values.push_back(e);
      }
      std::sort(values.begin(), values.end());
      for (const auto& [value, mult] :
           equichan::cluster_eigenvalues(values)) {
        csv += fmt(value) + "," + std::to_string(mult) + ",analytic\n";
      }
    }
  } else {
    const auto& prod = std::get<ProductParams>(params);
    const auto sf = equichan::validate(prod);
    if (sf.unital && sf.hermiticity_preserving) {
      const auto spectrum = equichan::product_choi_eigs(prod);
      const char* source =
          spectrum.conjectured ? "analytic-conjectured" : "analytic";
      for (const auto& e : spectrum.eigs) {
        csv += fmt(e.value) + "," + std::to_string(e.multiplicity) + "," +
               source + "\n";
      }
    }
  }
  const equichan::ChoiMatrix choi = equichan::choi_generic(params);
  if (equichan::hermiticity_defect(choi.matrix) <= tol.herm_sym) {
    const auto eigs = equichan::hermitian_eigenvalues(choi.matrix, tol);
    for (const auto& [value, mult] : equichan::cluster_eigenvalues(eigs)) {
      csv += fmt(value) + "," + std::to_string(mult) + ",numeric\n";
    }
  }
  return csv;
}

// Uniform sample from the channel-PPT region of the requested family.
ChannelParams sample_ppt_point(const std::string& family,
                               const ParamFlags& flags, equichan::Rng& rng,
                               const Tolerance& tol) {
  if (family == "U") {
    const int n = flags.n;
    const double lo = -1.0 / (n * n - 1);
    const double hi = 1.0 / (n + 1);
    return UnitaryParams(n, Complex(1, 0),
                         Complex(rng.uniform(lo, hi), 0));
  }
  if (family == "DU2") {
    const double c12 = rng.uniform();
    const double c21 = rng.uniform();
    const double bound =
        std::sqrt(std::min((1.0 - c12) * (1.0 - c21), c12 * c21));
    const double r = bound * std::sqrt(rng.uniform());
    const double theta = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
    const Complex lam = r * Complex(std::cos(theta), std::sin(theta));
    equichan::ComplexMatrix off = equichan::ComplexMatrix::Zero(2, 2);
    off(0, 1) = lam;
    off(1, 0) = std::conj(lam);
    equichan::ComplexMatrix mix(2, 2);
    mix << Complex(1.0 - c12, 0), Complex(c12, 0), Complex(c21, 0),
        Complex(1.0 - c21, 0);
    return DiagonalParams(2, off, mix);
  }
  if (family == "DU3SYM") {
    const double p = rng.uniform();
    const double q = (1.0 - p) / 2.0;
    const double hi = std::min(p, q);        // CP and PT bounds, lambda >= 0
    const double lo = -std::min(p / 2.0, q); // CP bound flips for lambda < 0
    return DiagonalParams::symmetric_du3(p,
                                         Complex(rng.uniform(lo, hi), 0));
  }
  if (family == "PROD") {
    for (;;) {
      const ProductParams cand(flags.n1, flags.n2, Complex(1, 0),
                               Complex(rng.uniform(-1.0, 1.0), 0),
                               Complex(rng.uniform(-1.0, 1.0), 0),
                               Complex(rng.uniform(-1.0, 1.0), 0));
      const auto v = equichan::ppt_channel(ChannelParams(cand), tol);
      if (v.member && v.margin > tol.eig_zero) return cand;
    }
  }
  throw equichan::SpecInvalid("ppt2 sampling: unsupported family '" + family +
                              "'");
}

struct GlobalOptions {
  Tolerance tol;
  std::string out;
  uint64_t seed = 0;
  int threads = 1;
};

int run(int argc, char** argv) {
  CLI::App app{
      "equichan - symmetry-constrained channel construction, classification "
      "and verification"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--eig-zero", g.tol.eig_zero, "PSD eigenvalue tolerance");
  app.add_option("--herm-sym", g.tol.herm_sym, "Hermiticity tolerance");

  // classify ---------------------------------------------------------------
  auto* classify = app.add_subcommand("classify", "region membership report");
  ParamFlags classify_flags;
  classify_flags.attach(classify);
  std::string classify_out;
  classify->add_option("--out", classify_out, "output path (default stdout)");

  // choi -------------------------------------------------------------------
  auto* choi = app.add_subcommand("choi", "Choi matrix and spectra");
  ParamFlags choi_flags;
  choi_flags.attach(choi);
  std::string choi_out, choi_spectra;
  choi->add_option("--out", choi_out, "Choi matrix JSON path");
  choi->add_option("--spectra", choi_spectra, "spectra CSV path");

  // compose ----------------------------------------------------------------
  auto* compose_cmd = app.add_subcommand("compose", "compose channels");
  std::string compose_a, compose_b;
  int compose_power = 0;
  compose_cmd->add_option("--a", compose_a, "first params JSON")->required();
  compose_cmd->add_option("--b", compose_b,
                          "second params JSON (a after b)");
  compose_cmd->add_option("--power", compose_power, "iterate a k times");
  std::string compose_out;
  compose_cmd->add_option("--out", compose_out, "output path");

  // ppt2 -------------------------------------------------------------------
  auto* ppt2 = app.add_subcommand("ppt2", "PPT-squared verification");
  ParamFlags ppt2_flags;
  ppt2_flags.attach(ppt2);
  int ppt2_samples = 0;
  ppt2->add_option("--samples", ppt2_samples,
                   "sample this many PPT points instead of one report");
  ppt2->add_option("--seed", g.seed, "sampling seed");
  std::string ppt2_out;
  ppt2->add_option("--out", ppt2_out, "output path");

  // oracle -----------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "single-point Schwarz falsifier");
  ParamFlags oracle_flags;
  oracle_flags.attach(oracle);
  int oracle_budget = 2000;
  oracle->add_option("--budget", oracle_budget, "random probe budget");
  oracle->add_option("--seed", g.seed, "probe seed");
  std::string oracle_out;
  oracle->add_option("--out", oracle_out, "output path");

  // scan -------------------------------------------------------------------
  auto* scan = app.add_subcommand("scan", "parameter grid scan to CSV");
  std::string scan_spec_path, scan_out;
  scan->add_option("--spec", scan_spec_path, "ScanSpec JSON path")->required();
  scan->add_option("--out", scan_out, "CSV output path");
  scan->add_option("--threads", g.threads, "worker thread count");
  scan->add_option("--seed", g.seed, "override spec seed");

  // twirl ------------------------------------------------------------------
  auto* twirl = app.add_subcommand("twirl", "project a map onto a family");
  std::string twirl_choi, twirl_family, twirl_out;
  int twirl_n = 2, twirl_n1 = 2, twirl_n2 = 2;
  twirl->add_option("--choi", twirl_choi, "Choi matrix JSON")->required();
  twirl->add_option("--family", twirl_family, "U | DU | PROD")->required();
  twirl->add_option("--n", twirl_n, "dimension (U, DU)");
  twirl->add_option("--n1", twirl_n1, "first factor dimension (PROD)");
  twirl->add_option("--n2", twirl_n2, "second factor dimension (PROD)");
  twirl->add_option("--out", twirl_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (const char* env = std::getenv("EQUICHAN_SEED")) {
    g.seed = std::strtoull(env, nullptr, 10);
  }

  if (classify->parsed()) {
    const ChannelParams params = classify_flags.build();
    write_output(class_report(params, classify_flags, g.tol).dump(2) + "\n",
                 classify_out);
    return 0;
  }

  if (choi->parsed()) {
    const ChannelParams params = choi_flags.build();
    const equichan::ChoiMatrix c = equichan::choi_generic(params);
    write_output(equichan::matrix_to_json(c.matrix).dump(2) + "\n", choi_out);
    write_output(spectra_csv(params, g.tol), choi_spectra);
    return 0;
  }

  if (compose_cmd->parsed()) {
    ChannelParams a = equichan::params_from_json(parse_json_file(compose_a));
    ChannelParams result = a;
    if (!compose_b.empty()) {
      result = equichan::compose(
          a, equichan::params_from_json(parse_json_file(compose_b)));
    }
    if (compose_power > 0) {
      result = equichan::power(result, compose_power);
    }
    write_output(equichan::params_to_json(result).dump(2) + "\n", compose_out);
    return 0;
  }

  if (ppt2->parsed()) {
    if (ppt2_samples > 0) {
      equichan::Rng rng(g.seed);
      std::string lines;
      for (int s = 0; s < ppt2_samples; ++s) {
        const ChannelParams p =
            sample_ppt_point(ppt2_flags.family, ppt2_flags, rng, g.tol);
        lines +=
            equichan::ppt2_report_to_json(equichan::ppt2_check(p, g.tol))
                .dump() +
            "\n";
      }
      write_output(lines, ppt2_out);
      return 0;
    }
    const ChannelParams params = ppt2_flags.build();
    write_output(
        equichan::ppt2_report_to_json(equichan::ppt2_check(params, g.tol))
                .dump(2) +
            "\n",
        ppt2_out);
    return 0;
  }

  if (oracle->parsed()) {
    const ChannelParams params = oracle_flags.build();
    const auto witness =
        equichan::schwarz_falsify(params, oracle_budget, g.seed, g.tol);
    if (witness) {
      write_output(equichan::witness_to_json(*witness).dump(2) + "\n",
                   oracle_out);
    } else {
      write_output("none\n", oracle_out);
    }
    return 0;
  }

  if (scan->parsed()) {
    equichan::ScanSpec spec =
        equichan::scan_spec_from_json(parse_json_file(scan_spec_path));
    if (scan->count("--seed") > 0) spec.seed = g.seed;
    if (const char* env = std::getenv("EQUICHAN_SEED")) {
      spec.seed = std::strtoull(env, nullptr, 10);
    }
    if (scan->count("--threads") > 0) spec.threads = g.threads;
    write_output(equichan::scan_to_csv(equichan::region_scan(spec, g.tol)),
                 scan_out);
    return 0;
  }

  if (twirl->parsed()) {
    const equichan::ComplexMatrix choi_in =
        equichan::matrix_from_json(parse_json_file(twirl_choi));
    json out;
    if (twirl_family == "U") {
      const auto r = equichan::twirl_u(choi_in, twirl_n);
      out = {{"params", equichan::params_to_json(r.params)},
             {"residual", r.residual}};
    } else if (twirl_family == "DU") {
      const auto r = equichan::twirl_du(choi_in, twirl_n);
      out = {{"params", equichan::params_to_json(r.params)},
             {"residual", r.residual}};
    } else if (twirl_family == "PROD") {
      const auto r = equichan::twirl_product(choi_in, twirl_n1, twirl_n2);
      out = {{"params", equichan::params_to_json(r.params)},
             {"residual", r.residual}};
    } else {
      throw equichan::SpecInvalid("twirl: family must be U, DU or PROD");
    }
    write_output(out.dump(2) + "\n", twirl_out);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const equichan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
