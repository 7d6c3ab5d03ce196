// Copyright 2026 The locfree Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The five subcommands of the command-line tool, independent of argument
// parsing. Each returns an exit code (0 ok, 1 mismatch, 2 usage, 3 cap)
// together with the table it produced.

#ifndef LOCFREE_COMMANDS_HPP
#define LOCFREE_COMMANDS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "locfree/acceptance.hpp"
#include "locfree/asymptotics.hpp"
#include "locfree/config.hpp"
#include "locfree/counting.hpp"
#include "locfree/explorer.hpp"
#include "locfree/spectral.hpp"
#include "locfree/table.hpp"

namespace locfree {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitCap = 3 };

struct CommandOutput {
  int exit_code = kExitOk;
  Table table;
  std::vector<std::string> messages;  // for stderr
};

// Largest n for which `spectral --flavor lf2` also runs power iteration on
// the full 2n^2-dimensional operator.
inline constexpr int kMaxExact2D = 60;
// Largest n for which `spectral --flavor lf2` also reports the DP ratio.
inline constexpr int kMaxDp2D = 20;
// Largest n for which `asympt` computes exact counts next to the formulas.
inline constexpr int kMaxExactAsympt1D = 5000;
inline constexpr int kMaxExactAsympt2D = 80;

inline CommandOutput cmd_count(const RunConfig& cfg) {
  cfg.validate();
  CommandOutput out{kExitOk, Table({"flavor", "n", "mu", "include_m0", "count"}), {}};
  for (int n : cfg.ns()) {
    for (int mu : cfg.mus()) {
      BigInt value = (is_free(cfg.flavor) && cfg.include_m0)
                         ? free_count(cfg.flavor, n, mu).value
                         : assemble_count(cfg.flavor, n, mu, cfg.include_m0).value;
      out.table.add_row({to_string(cfg.flavor), n, mu, cfg.include_m0, std::move(value)});
    }
  }
  return out;
}

inline BigInt predicted_sphere(Flavor flavor, int n, int mu) {
  return is_free(flavor) ? free_count(flavor, n, mu).value : assemble_count(flavor, n, mu, true).value;
}

// Breadth-first sphere sizes for mu = 0..mu_hi, checked against the
// counting formulas. LF2 differences are reported, not treated as failures.
inline CommandOutput cmd_oracle(const RunConfig& cfg) {
  cfg.validate();
  CommandOutput out{kExitOk,
                    Table({"flavor", "n", "mu", "sphere_size", "predicted", "match", "warning"}),
                    {}};
  for (int n : cfg.ns()) {
    const GroupSpec spec(cfg.flavor, n);
    BfsOptions opt;
    opt.dedup = cfg.dedup;
    opt.cap = cfg.cap;
    const SphereProfile p = bfs_spheres(spec, cfg.mu_hi(), opt);
    if (p.mismatches != 0) {
      out.exit_code = kExitMismatch;
      out.messages.push_back(std::string(to_string(cfg.flavor)) + " n=" + std::to_string(n) + ": " +
                             std::to_string(p.mismatches) + " rewrite/stack disagreements");
    }
    for (int mu = 0; mu <= p.mu_max(); ++mu) {
      const BigInt& seen = p.sizes[static_cast<std::size_t>(mu)];
      const BigInt predicted = predicted_sphere(cfg.flavor, n, mu);
      const bool match = seen == predicted;
      const bool warn = !match && cfg.flavor == Flavor::LF2;
      if (!match && !warn) out.exit_code = kExitMismatch;
      out.table.add_row({to_string(cfg.flavor), n, mu, seen, predicted, match, warn});
    }
    if (p.truncated) {
      out.messages.push_back(std::string(to_string(cfg.flavor)) + " n=" + std::to_string(n) + ": stored classes exceeded cap " +
                             std::to_string(p.cap) + " after mu=" + std::to_string(p.mu_max()));
      out.exit_code = kExitCap;
      return out;
    }
    if (cfg.flavor == Flavor::LF2 && out.exit_code == kExitOk) {
      for (const auto& row : out.table.rows())
        if (row[6].text == "true") {
          out.messages.emplace_back("lf2 sphere sizes differ from the assembled count (reported as data)");
          break;
        }
    }
  }
  return out;
}

inline CommandOutput cmd_spectral(const RunConfig& cfg) {
  cfg.validate();
  for (int n : cfg.ns())
    if (n < 2) throw UsageError("spectral needs n >= 2");
  CommandOutput out{kExitOk,
                    Table({"flavor", "n", "lambda_exact", "lambda_closed", "lambda1", "gap", "p1",
                           "p1_residual", "lambda1_scaled", "iterations", "power_residual",
                           "converged", "dp_ratio"}),
                    {}};
  for (int n : cfg.ns()) {
    std::vector<Cell> row(13);
    row[0] = to_string(cfg.flavor);
    row[1] = n;
    std::optional<SpectralReport> sr;
    const bool run_exact = cfg.flavor != Flavor::LF2 || n <= kMaxExact2D;
    if (run_exact) {
      sr = dominant_eigenvalue(TransferOperator(cfg.flavor, n), cfg.tol);
      row[2] = sr->lambda;
      row[9] = sr->iterations;
      row[10] = sr->residual;
      row[11] = sr->converged;
      if (!sr->converged) {
        out.exit_code = kExitMismatch;
        out.messages.push_back("power iteration did not converge for n=" + std::to_string(n));
      }
    }
    // theta(m_max) / theta(m_max - 1) from the exact recursion
    if (cfg.m_max >= 1 && (cfg.flavor != Flavor::LF2 || n <= kMaxDp2D)) {
      const CountTable t = theta(cfg.flavor, n, cfg.m_max);
      row[12] = ratio_of(t.at(cfg.m_max), t.at(cfg.m_max - 1));
    }
    switch (cfg.flavor) {
      case Flavor::LF1: {
        const ClosedForm1D c = eigen_closed_form_1d(n, 1);
        if (!c.singular) {
          row[3] = c.lambda;
          row[5] = sr->lambda - c.lambda;
        }
        break;
      }
      case Flavor::LF2: {
        if (n >= 3) {
          const Lambda1 l = lambda1_2d(n, std::max(cfg.tol, 1e-12));
          row[4] = l.lambda1;
          row[6] = l.p1;
          row[7] = l.residual;
          row[8] = l.scaled;
          if (sr) row[5] = sr->lambda - l.lambda1;
        }
        break;
      }
      case Flavor::FREE1:
      case Flavor::FREE2: {
        const double closed = GroupSpec(cfg.flavor, n).alphabet_size() - 1.0;
        row[3] = closed;
        row[5] = sr->lambda - closed;
        break;
      }
    }
    out.table.add_row(std::move(row));
  }
  return out;
}

// Formula values on a log scale, with the exact counts alongside when the
// dynamic programme is affordable.
inline CommandOutput cmd_asympt(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.flavor != Flavor::LF1 && cfg.flavor != Flavor::LF2)
    throw UsageError("asympt supports lf1 and lf2");
  for (int n : cfg.ns())
    if (n < 2) throw UsageError("asympt needs n >= 2");
  for (int mu : cfg.mus())
    if (mu < 1) throw UsageError("asympt needs mu >= 1");
  CommandOutput out{kExitOk,
                    Table({"flavor", "n", "mu", "log_exact", "log_asymptotic", "log_diff",
                           "exact_ratio", "asymptotic_ratio", "ratio_of_ratios", "f", "z_eff"}),
                    {}};
  const int limit = cfg.flavor == Flavor::LF1 ? kMaxExactAsympt1D : kMaxExactAsympt2D;
  const std::string name(to_string(cfg.flavor));
  for (int n : cfg.ns()) {
    const GrowthExponents f = growth_exponents(n);
    const double fv = cfg.flavor == Flavor::LF1 ? f.f1 : f.f2;
    const double z = z_eff_closed(cfg.flavor, n);
    const int lo = cfg.mus().front(), hi = cfg.mus().back();
    if (n <= limit) {
      for (const auto& r : compare_word_counts(cfg.flavor, n, n, lo, hi))
        out.table.add_row({name, n, r.arg, r.log_exact, r.log_asymptotic, r.log_diff, r.exact_ratio,
                           r.asymptotic_ratio, r.ratio_of_ratios, fv, z});
    } else {
      for (int mu = lo; mu <= hi; ++mu) {
        const auto a = cfg.flavor == Flavor::LF1 ? v1_asymptotic(n, mu) : v2_asymptotic(n, mu);
        const auto b = cfg.flavor == Flavor::LF1 ? v1_asymptotic(n, mu + 1) : v2_asymptotic(n, mu + 1);
        out.table.add_row({name, n, mu, Cell(), a.log_value, Cell(), Cell(),
                           std::exp(b.log_value - a.log_value), Cell(), fv, z});
      }
    }
  }
  return out;
}

// Runs the acceptance suite and writes the bundle into cfg.out (default
// "locfree-report"). The returned table is criteria.csv.
inline CommandOutput cmd_report(const RunConfig& cfg) {
  cfg.validate();
  AcceptanceOptions opt;
  opt.quick = cfg.quick;
  opt.seed = cfg.seed;
  opt.cap = cfg.cap;
  if (!cfg.golden_dir.empty()) opt.golden_dir = cfg.golden_dir;
  const std::filesystem::path dir = cfg.out.empty() ? "locfree-report" : cfg.out;
  const auto results = run_acceptance(opt);
  write_bundle(dir, opt, results);
  CommandOutput out{kExitOk, Table({"criterion", "title", "status", "detail"}), {}};
  for (const auto& r : results) {
    out.table.add_row({r.id, r.title, r.passed ? "PASS" : "FAIL", r.detail});
    if (!r.passed) out.exit_code = kExitMismatch;
  }
  out.messages.push_back("report written to " + dir.string());
  return out;
}

inline CommandOutput run_command(const RunConfig& cfg) {
  if (cfg.command == "count") return cmd_count(cfg);
  if (cfg.command == "oracle") return cmd_oracle(cfg);
  if (cfg.command == "spectral") return cmd_spectral(cfg);
  if (cfg.command == "asympt") return cmd_asympt(cfg);
  if (cfg.command == "report") return cmd_report(cfg);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace locfree

#endif  // LOCFREE_COMMANDS_HPP
