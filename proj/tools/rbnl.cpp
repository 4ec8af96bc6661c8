// Copyright 2026 The rbnl Authors
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

// rbnl: realism-based nonlocality and CHSH quantifiers from the command line.
//
//   rbnl sweep  [--mu-start A] [--mu-end B] [--steps N] [--samples M] [--out FILE]
//   rbnl state  FILE [--grid N] [--restarts R] [--seed S]
//   rbnl vol    --mu MU [--samples N] [--method angles|xyz] [--workers W] [--seed S]
//   rbnl decay  --t-max T [--steps N] [--out FILE]
//
// Exit codes: 0 success, 1 domain/validation error, 2 I/O error.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rbnl/rbnl.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

std::uint64_t default_seed() {
  const char* env = std::getenv("RNL_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw rbnl::DomainError("RNL_SEED", std::string("not an unsigned integer: ") + env);
  }
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw rbnl::IoError("cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f) throw rbnl::IoError("write failed for " + path.string());
}

/// Writes `text` to `out` (or stdout) plus a manifest next to the file.
void emit(const std::optional<std::string>& out, const std::string& text,
          const rbnl::RunManifest& manifest) {
  if (!out) {
    std::cout << text;
    return;
  }
  write_text(*out, text);
  write_text(*out + ".manifest.json", rbnl::to_json(manifest).dump(2) + "\n");
}

json vector_or_null(const std::optional<rbnl::BlochVector>& v) {
  if (!v) return nullptr;
  return json::array({v->x(), v->y(), v->z()});
}

json state_report(const rbnl::DensityMatrix& rho, const rbnl::OptimizerConfig& cfg) {
  json report;
  report["dims"] = {rho.dims().a, rho.dims().b};
  report["purity"] = rho.purity();
  if (rho.purity() > 1.0 - 1e-10) {
    const rbnl::Spectrum spec = rbnl::hermitian_spectrum(rho.matrix());
    rbnl::ComplexVector top = spec.eigenvectors.col(spec.eigenvectors.cols() - 1);
    top /= top.norm();
    const rbnl::PureNrbResult r = rbnl::nrb_pure(rbnl::PureState(top, rho.dims()));
    report["n_rb"] = r.value;
    report["argmax_u"] = vector_or_null(r.u);
    report["argmax_v"] = vector_or_null(r.v);
    report["eta"] = r.u && r.v ? json(std::abs(r.u->dot(*r.v))) : json(nullptr);
    report["method"] = "schmidt";
    return report;
  }
  if (rho.dims() != rbnl::Dims{2, 2}) {
    throw rbnl::DomainError("dims", "mixed states are supported only for two qubits (got " +
                                        std::to_string(rho.dims().a) + "x" +
                                        std::to_string(rho.dims().b) + ")");
  }
  const rbnl::NrbResult r = rbnl::nrb_two_qubit(rho, cfg);
  report["n_rb"] = r.value;
  report["argmax_u"] = json::array({r.u.x(), r.u.y(), r.u.z()});
  report["argmax_v"] = json::array({r.v.x(), r.v.y(), r.v.z()});
  report["eta"] = r.eta;
  report["method"] = "optimizer";
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Realism-based nonlocality and CHSH quantifiers for bipartite states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rbnl::kVersion));

  std::optional<std::uint64_t> seed_flag;
  std::optional<std::string> out;
  std::uint64_t samples = 0;
  unsigned workers = 1;
  std::string method = "angles";
  int steps = 101;

  auto* sweep = app.add_subcommand("sweep", "Werner-family sweep of N_rb, N_vol, N_max as CSV");
  double mu_start = 0.0, mu_end = 1.0;
  sweep->add_option("--mu-start", mu_start, "First mu")->capture_default_str();
  sweep->add_option("--mu-end", mu_end, "Last mu")->capture_default_str();
  sweep->add_option("--steps", steps, "Number of mu values")->capture_default_str();
  sweep->add_option("--samples", samples,
                    "Monte Carlo samples per mu for an extra <out>.mc.csv (0 = none)");
  sweep->add_option("--seed", seed_flag, "Seed (default: $RNL_SEED or 0)");
  sweep->add_option("--method", method, "Monte Carlo sampling space")
      ->check(CLI::IsMember({"angles", "xyz"}));
  sweep->add_option("--workers", workers, "Monte Carlo worker threads");
  sweep->add_option("--out", out, "Output CSV (default: stdout)");

  auto* state = app.add_subcommand("state", "N_rb of a state read from a JSON file");
  std::string state_file;
  int grid = 12;
  int restarts = 8;
  state->add_option("file", state_file, "State JSON file")->required();
  state->add_option("--grid", grid, "Polar grid points per sphere (azimuth uses twice as many)")
      ->capture_default_str();
  state->add_option("--restarts", restarts, "Simplex refinements")->capture_default_str();
  state->add_option("--seed", seed_flag, "Seed (default: $RNL_SEED or 0)");
  state->add_option("--out", out, "Output JSON (default: stdout)");

  auto* vol = app.add_subcommand("vol", "Monte Carlo volume of violation for a Werner state");
  double mu = 0.0;
  std::uint64_t vol_samples = 1'000'000;
  vol->add_option("--mu", mu, "Werner weight")->required();
  vol->add_option("--samples", vol_samples, "Sample count")->capture_default_str();
  vol->add_option("--seed", seed_flag, "Seed (default: $RNL_SEED or 0)");
  vol->add_option("--method", method, "Sampling space")
      ->check(CLI::IsMember({"angles", "xyz"}))
      ->capture_default_str();
  vol->add_option("--workers", workers, "Worker threads")->capture_default_str();
  vol->add_option("--out", out, "Output JSON (default: stdout)");

  auto* decay = app.add_subcommand("decay", "Normalized quantifiers along mu = exp(-t) as CSV");
  double t_max = 0.0;
  decay->add_option("--t-max", t_max, "Largest t")->required();
  decay->add_option("--steps", steps, "Number of t values")->capture_default_str();
  decay->add_option("--out", out, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    const std::uint64_t seed = seed_flag ? *seed_flag : default_seed();
    rbnl::RunManifest manifest{join_args(argc, argv), seed, 0, rbnl::kVersion,
                               rbnl::utc_timestamp()};

    if (*sweep) {
      const auto rows = rbnl::werner_sweep(mu_start, mu_end, steps);
      std::ostringstream csv;
      rbnl::write_sweep_csv(csv, rows);
      manifest.samples = samples;
      if (samples > 0 && !out) {
        throw rbnl::DomainError("out", "--samples needs --out for the Monte Carlo CSV");
      }
      emit(out, csv.str(), manifest);
      if (samples > 0) {
        std::ostringstream mc;
        mc << "mu,fraction,std_error,norm_fraction\n";
        const double reference = rbnl::nvol_analytic(1.0);
        for (const auto& r : rows) {
          rbnl::McConfig cfg;
          cfg.samples = samples;
          cfg.seed = seed;
          cfg.method = *rbnl::parse_mc_method(method);
          const rbnl::McEstimate e = rbnl::nvol_mc(r.mu, cfg, workers);
          mc << rbnl::format_number(r.mu) << ',' << rbnl::format_number(e.fraction) << ','
             << rbnl::format_number(e.std_error) << ','
             << rbnl::format_number(rbnl::normalized(e.fraction, reference)) << '\n';
        }
        write_text(*out + ".mc.csv", mc.str());
      }
    } else if (*state) {
      rbnl::OptimizerConfig cfg;
      cfg.theta_points = grid;
      cfg.phi_points = 2 * grid;
      cfg.restarts = restarts;
      cfg.seed = seed;
      cfg.validate();
      const rbnl::DensityMatrix rho = rbnl::read_state_file(state_file);
      emit(out, state_report(rho, cfg).dump(2) + "\n", manifest);
    } else if (*vol) {
      rbnl::McConfig cfg;
      cfg.samples = vol_samples;
      cfg.seed = seed;
      cfg.method = *rbnl::parse_mc_method(method);
      const rbnl::McEstimate e = rbnl::nvol_mc(mu, cfg, workers);
      const double analytic = rbnl::nvol_analytic(mu);
      json report;
      report["mu"] = mu;
      report["method"] = method;
      report["samples"] = e.n;
      report["seed"] = e.seed;
      report["violations"] = e.violations;
      report["fraction"] = e.fraction;
      report["std_error"] = e.std_error;
      report["analytic"] = analytic;
      if (e.std_error > 0.0) {
        report["z_score"] = (e.fraction - analytic) / e.std_error;
      } else if (e.fraction == analytic) {
        report["z_score"] = 0.0;
      } else {
        report["z_score"] = nullptr;
      }
      report["version"] = rbnl::kVersion;
      report["timestamp"] = manifest.timestamp;
      manifest.samples = vol_samples;
      emit(out, report.dump(2) + "\n", manifest);
    } else if (*decay) {
      const auto rows = rbnl::decay_rows(t_max, steps);
      std::ostringstream csv;
      rbnl::write_decay_csv(csv, rows);
      emit(out, csv.str(), manifest);
    }
  } catch (const rbnl::DomainError& e) {
    std::cerr << "rbnl: invalid input (" << e.invariant() << "): " << e.what() << '\n';
    return kExitDomain;
  } catch (const rbnl::IoError& e) {
    std::cerr << "rbnl: I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "rbnl: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}
