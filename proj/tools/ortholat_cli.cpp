// Copyright 2026 The ortholat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ortholat: command-line front end.
//
//   ortholat verify    --suite all --dim 4 --trials 500 --seed 42
//   ortholat ortho     --a A.json --b B.json
//   ortholat decompose --a A.json
//   ortholat witness   --a S.json --b T.json --restarts 16 --iters 2000
//
// Exit status: 0 success, 1 verification failure or witness not found,
// 2 configuration or input error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ortholat/json_io.hpp"
#include "ortholat/ortholat.hpp"
#include "ortholat/suites.hpp"

namespace {

using ortholat::Json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr std::uint64_t kDefaultSeed = 42;

struct RunConfig {
  std::string suite = "all";
  std::size_t dim = 4;
  std::size_t trials = 100;
  std::optional<std::uint64_t> seed;
  std::string a_path;
  std::string b_path;
  std::string out_path;
  std::optional<double> tol_eq;
  std::optional<double> tol_zero;
  std::size_t restarts = 16;
  std::size_t iters = 2000;
  bool json = true;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (const char* env = std::getenv("ORTHOLAT_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t s = std::stoull(env, &used);
      if (used == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw ConfigError(std::string("ORTHOLAT_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

ortholat::Tolerances resolve_tolerances(const RunConfig& cfg) {
  ortholat::Tolerances tol;
  if (cfg.tol_eq) tol.tol_eq = *cfg.tol_eq;
  if (cfg.tol_zero) tol.tol_zero = *cfg.tol_zero;
  try {
    tol.validate();
  } catch (const ortholat::Error& e) {
    throw ConfigError(e.what());
  }
  return tol;
}

void validate(const RunConfig& cfg) {
  if (cfg.dim < 1 || cfg.dim > 64) throw ConfigError("--dim must be in [1, 64]");
  if (cfg.trials < 1) throw ConfigError("--trials must be at least 1");
  if (cfg.restarts < 1) throw ConfigError("--restarts must be at least 1");
  if (cfg.iters < 1) throw ConfigError("--iters must be at least 1");
}

void emit(const RunConfig& cfg, const Json& doc) {
  const std::string text = ortholat::dump_json(doc) + "\n";
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + cfg.out_path);
  out << text;
}

ortholat::ComplexMatrix load_matrix(const std::string& path, const char* flag) {
  if (path.empty()) throw ConfigError(std::string(flag) + " <path> is required");
  return ortholat::matrix_from_json(ortholat::read_json_file(path));
}

/// Loads a matrix expected to be Hermitian, warning when the asymmetry is
/// beyond tol_eq before symmetrizing.
ortholat::HermitianMatrix load_hermitian(const std::string& path, const char* flag, const ortholat::Tolerances& tol) {
  const ortholat::ComplexMatrix m = load_matrix(path, flag);
  const double asym = ortholat::relative_distance(m, m.adjoint());
  if (asym > tol.tol_eq) {
    std::cerr << "warning: " << path << " is not Hermitian (relative asymmetry " << asym
              << "); using (M + M*)/2\n";
  }
  return ortholat::HermitianMatrix(m);
}

int cmd_verify(const RunConfig& cfg) {
  std::vector<std::string> names;
  if (cfg.suite == "all") {
    names = ortholat::suite_names();
  } else if (ortholat::is_suite_name(cfg.suite)) {
    names = {cfg.suite};
  } else {
    throw ConfigError("unknown suite \"" + cfg.suite + "\"");
  }
  ortholat::SuiteConfig sc;
  sc.dim = cfg.dim;
  sc.lattice_dim = std::max<std::size_t>(cfg.dim, 16);
  sc.trials = cfg.trials;
  sc.seed = resolve_seed(cfg);
  sc.tol = resolve_tolerances(cfg);

  Json suites = Json::array();
  bool all_passed = true;
  for (const auto& name : names) {
    const ortholat::SuiteResult res = ortholat::run_suite(name, sc);
    all_passed = all_passed && res.passed;
    suites.push_back(ortholat::suite_result_to_json(res));
  }
  emit(cfg, Json{{"command", "verify"},
                 {"seed", sc.seed},
                 {"dim", sc.dim},
                 {"lattice_dim", sc.lattice_dim},
                 {"trials", sc.trials},
                 {"suites", std::move(suites)},
                 {"passed", all_passed}});
  return all_passed ? kExitOk : kExitFailure;
}

int cmd_ortho(const RunConfig& cfg) {
  const ortholat::Tolerances tol = resolve_tolerances(cfg);
  const auto a = load_hermitian(cfg.a_path, "--a", tol);
  const auto b = load_hermitian(cfg.b_path, "--b", tol);
  if (a.dim() != b.dim()) throw ConfigError("--a and --b have different dimensions");
  const ortholat::OrthReport t4 = ortholat::verify_theorem4(a, b, tol);
  emit(cfg, Json{{"command", "ortho"},
                 {"inf", ortholat::matrix_to_json(ortholat::ortho_inf(a, b, tol))},
                 {"sup", ortholat::matrix_to_json(ortholat::ortho_sup(a, b, tol))},
                 {"theorem4", ortholat::report_to_json(t4)}});
  return t4.holds ? kExitOk : kExitFailure;
}

int cmd_decompose(const RunConfig& cfg) {
  const ortholat::Tolerances tol = resolve_tolerances(cfg);
  const auto a = load_hermitian(cfg.a_path, "--a", tol);
  const ortholat::Spectrum spec = ortholat::hermitian_eigendecompose(a, tol);
  const ortholat::JordanParts parts = ortholat::jordan_decompose(a, tol);
  Json eig = Json::array();
  for (double x : spec.eigenvalues) eig.push_back(x);
  emit(cfg, Json{{"command", "decompose"},
                 {"eigenvalues", std::move(eig)},
                 {"pos", ortholat::matrix_to_json(parts.pos)},
                 {"neg", ortholat::matrix_to_json(parts.neg)},
                 {"abs", ortholat::matrix_to_json(parts.abs)}});
  return kExitOk;
}

int cmd_witness(const RunConfig& cfg) {
  const ortholat::Tolerances tol = resolve_tolerances(cfg);
  const auto s = load_hermitian(cfg.a_path, "--a", tol);
  const auto t = load_hermitian(cfg.b_path, "--b", tol);
  if (s.dim() != t.dim()) throw ConfigError("--a and --b have different dimensions");
  ortholat::WitnessOptions opt;
  opt.restarts = cfg.restarts;
  opt.iters = cfg.iters;
  opt.seed = resolve_seed(cfg);
  ortholat::WitnessResult w;
  try {
    w = ortholat::kadison_witness_search(s, t, opt, tol);
  } catch (const ortholat::ComparablePair& e) {
    throw ConfigError(e.what());
  }
  Json doc = ortholat::witness_to_json(w);
  doc["seed"] = opt.seed;
  emit(cfg, doc);
  if (!w.found) std::cerr << "no witness found; best margin " << w.margin << "\n";
  return w.found ? kExitOk : kExitFailure;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "master seed (falls back to ORTHOLAT_SEED, then 42)");
  sub->add_option("--out", cfg.out_path, "write the JSON report here instead of stdout");
  sub->add_option("--tol-eq", cfg.tol_eq, "matrix-equality tolerance");
  sub->add_option("--tol-zero", cfg.tol_zero, "zero-product tolerance");
  sub->add_flag("--json,!--no-json", cfg.json, "emit JSON (the only output format)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ortholat: ortho-infimum, ortho-supremum and orthogonality checks on M_n(C)_sa"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", cfg.suite, "suite name or \"all\"");
  verify->add_option("--dim", cfg.dim, "matrix dimension (1-64)");
  verify->add_option("--trials", cfg.trials, "instances per suite");
  add_common(verify, cfg);

  CLI::App* ortho = app.add_subcommand("ortho", "ortho-infimum and ortho-supremum of two matrices");
  ortho->add_option("--a", cfg.a_path, "matrix JSON");
  ortho->add_option("--b", cfg.b_path, "matrix JSON");
  add_common(ortho, cfg);

  CLI::App* decompose = app.add_subcommand("decompose", "spectrum and Jordan parts of a matrix");
  decompose->add_option("--a", cfg.a_path, "matrix JSON");
  add_common(decompose, cfg);

  CLI::App* witness = app.add_subcommand("witness", "search a lower bound of S, T not below S ortho-inf T");
  witness->add_option("--a", cfg.a_path, "S as matrix JSON");
  witness->add_option("--b", cfg.b_path, "T as matrix JSON");
  witness->add_option("--restarts", cfg.restarts, "independent restarts");
  witness->add_option("--iters", cfg.iters, "descent iterations per restart");
  add_common(witness, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    validate(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (ortho->parsed()) return cmd_ortho(cfg);
    if (decompose->parsed()) return cmd_decompose(cfg);
    if (witness->parsed()) return cmd_witness(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ortholat::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ortholat::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ortholat::Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitConfig;
}
