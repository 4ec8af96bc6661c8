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

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rbnl/chsh.hpp"
#include "rbnl/errors.hpp"
#include "rbnl/nrb.hpp"

#ifndef RBNL_VERSION
#define RBNL_VERSION "0.0.0"
#endif

namespace rbnl {

inline constexpr const char* kVersion = RBNL_VERSION;

/// The three Werner-state quantifiers at one mu, raw and normalized to mu = 1.
struct SweepRow {
  double mu = 0.0;
  double n_rb = 0.0;
  double n_vol = 0.0;
  double n_max = 0.0;
  double norm_rb = 0.0;
  double norm_vol = 0.0;
  double norm_max = 0.0;
};

/// x / reference with 0/0 := 0.
inline double normalized(double x, double reference) {
  return reference == 0.0 ? 0.0 : x / reference;
}

inline SweepRow werner_row(double mu) {
  SweepRow r;
  r.mu = mu;
  r.n_rb = nrb_werner_closed_form(mu);
  r.n_vol = nvol_analytic(mu);
  r.n_max = nmax_werner(mu);
  r.norm_rb = normalized(r.n_rb, nrb_werner_closed_form(1.0));
  r.norm_vol = normalized(r.n_vol, nvol_analytic(1.0));
  r.norm_max = normalized(r.n_max, nmax_werner(1.0));
  return r;
}

/// `steps` evenly spaced mu values from mu_start to mu_end inclusive.
inline std::vector<double> mu_grid(double mu_start, double mu_end, int steps) {
  if (!(mu_start >= 0.0 && mu_start < mu_end && mu_end <= 1.0)) {
    throw DomainError("mu range", "need 0 <= mu_start < mu_end <= 1");
  }
  if (steps < 2) throw DomainError("steps", "need at least 2 steps");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    out.push_back(i + 1 == steps ? mu_end : mu_start + (mu_end - mu_start) * i / (steps - 1));
  }
  return out;
}

inline std::vector<SweepRow> werner_sweep(double mu_start, double mu_end, int steps) {
  std::vector<SweepRow> rows;
  for (double mu : mu_grid(mu_start, mu_end, steps)) rows.push_back(werner_row(mu));
  return rows;
}

/// Werner weight mu = exp(-t) read as a noisy-channel time.
struct DecayRow {
  double t = 0.0;
  double mu = 1.0;
  double norm_rb = 1.0;
  double norm_vol = 1.0;
  double norm_max = 1.0;
};

inline std::vector<DecayRow> decay_rows(double t_max, int steps) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw DomainError("t range", "t_max must be > 0");
  if (steps < 2) throw DomainError("steps", "need at least 2 steps");
  std::vector<DecayRow> rows;
  for (int i = 0; i < steps; ++i) {
    const double t = i + 1 == steps ? t_max : t_max * i / (steps - 1);
    const SweepRow w = werner_row(std::exp(-t));
    rows.push_back({t, w.mu, w.norm_rb, w.norm_vol, w.norm_max});
  }
  return rows;
}

/*******************************************************************************
 * CSV output: ',' separator, '.' decimal, LF endings, 12 significant digits.
 ******************************************************************************/

inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "mu,n_rb,n_vol,n_max,norm_rb,norm_vol,norm_max\n";
  for (const SweepRow& r : rows) {
    out << format_number(r.mu) << ',' << format_number(r.n_rb) << ',' << format_number(r.n_vol)
        << ',' << format_number(r.n_max) << ',' << format_number(r.norm_rb) << ','
        << format_number(r.norm_vol) << ',' << format_number(r.norm_max) << '\n';
  }
}

inline void write_decay_csv(std::ostream& out, const std::vector<DecayRow>& rows) {
  out << "t,mu,norm_rb,norm_vol,norm_max\n";
  for (const DecayRow& r : rows) {
    out << format_number(r.t) << ',' << format_number(r.mu) << ',' << format_number(r.norm_rb)
        << ',' << format_number(r.norm_vol) << ',' << format_number(r.norm_max) << '\n';
  }
}

/*******************************************************************************
 * Run manifest, written next to every CSV.
 ******************************************************************************/

struct RunManifest {
  std::string command_line;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string version = kVersion;
  std::string timestamp;
};

/// Current UTC time as ISO 8601.
inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline nlohmann::json to_json(const RunManifest& m) {
  return {{"command_line", m.command_line},
          {"seed", m.seed},
          {"samples", m.samples},
          {"version", m.version},
          {"timestamp", m.timestamp}};
}

}  // namespace rbnl
