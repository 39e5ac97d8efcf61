// Copyright 2026 The rindlersim Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rindlersim/measures.hpp"
#include "rindlersim/rindler.hpp"
#include "rindlersim/selfcheck.hpp"
#include "rindlersim/sweep.hpp"
#include "rindlersim/teleport.hpp"

namespace {

using namespace rindlersim;

std::string fmt(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void print_kv(const std::string& key, double value) {
  std::cout << key << " = " << fmt(value) << "\n";
}

// Grid flags use the a:b:n shorthand for n evenly spaced points from a to b.
std::vector<double> parse_grid(const std::string& text, const char* flag) {
  double a = 0, b = 0;
  int n = 0;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &a, &b, &n, &trailing) != 3 ||
      n < 1) {
    throw CLI::ValidationError(flag, "expected a:b:n with n >= 1, got '" +
                                         text + "'");
  }
  return linspace(a, b, n);
}

void print_correlations(const DensityMatrix& channel, MeasuredSide side,
                        const std::string& suffix) {
  const CorrelationReport rep = discord(channel, side);
  print_kv("discord_" + suffix, rep.discord);
  print_kv("classical_correlation_" + suffix, rep.classical_correlation);
  print_kv("optimizer_evals_" + suffix, rep.optimizer_evals);
  print_kv("optimizer_theta_" + suffix, rep.optimizer_argmax.theta);
  print_kv("optimizer_phi_" + suffix, rep.optimizer_argmax.phi);
}

int cmd_point(double p, double r, double alpha2, double phase,
              const std::string& side) {
  const PureQubit psi(std::sqrt(alpha2),
                      std::polar(std::sqrt(1 - alpha2), phase));
  const DensityMatrix channel = alice_rob_state(p, r);
  const TeleportReport rep = run_protocol(psi, channel);

  print_kv("p", p);
  print_kv("r", r);
  print_kv("alpha2", alpha2);
  print_kv("phase", phase);
  for (const TeleportOutcome& o : rep.outcomes) {
    const std::string tag = std::to_string(o.i) + std::to_string(o.j);
    print_kv("probability_" + tag, o.probability);
    print_kv("fidelity_" + tag, o.fidelity);
  }
  print_kv("min_fidelity", rep.min_fidelity);
  print_kv("avg_fidelity", rep.avg_fidelity);
  print_kv("mutual_info", mutual_information(channel));
  print_kv("negativity", negativity(channel));
  if (side == "B" || side == "both") {
    print_correlations(channel, MeasuredSide::B, "B");
  }
  if (side == "A" || side == "both") {
    print_correlations(channel, MeasuredSide::A, "A");
  }
  return 0;
}

int cmd_sweep(const SweepSpec& spec, const std::string& out_path,
              int threads) {
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open --out path '" << out_path << "'\n";
    return 1;
  }
  run_sweep(spec, out, threads);
  out.flush();
  if (!out) {
    std::cerr << "error: writing '" << out_path << "' failed\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Teleportation fidelity and quantum correlations over a werner channel "
      "with a uniformly accelerated receiver"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Read defaults from a file of key = value lines grouped in "
                 "[point] / [sweep] sections; flags override it");

  double p = 0, r = 0, alpha2 = 0.5, phase = 0;
  std::string point_side = "B";
  CLI::App* point =
      app.add_subcommand("point", "Evaluate a single (p, r, alpha2) point");
  point->add_option("--p", p, "werner channel weight")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  point->add_option("--r", r, "acceleration parameter")
      ->required()
      ->check(CLI::Range(0.0, kMaxAcceleration));
  point->add_option("--alpha2", alpha2, "input-state weight |alpha|^2")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  point->add_option("--phase", phase,
                    "relative phase of the input state, radians");
  point->add_option("--measure-side", point_side, "discord measurement side")
      ->check(CLI::IsMember({"A", "B", "both"}));

  int figure = 0, threads = 0;
  std::string out_path, p_grid, r_grid, alpha2_grid, sweep_side = "both";
  CLI::App* sweep =
      app.add_subcommand("sweep", "Write a CSV over a (p, r, alpha2) grid");
  sweep->add_option("--out", out_path, "output CSV path")->required();
  sweep->add_option("--figure", figure,
                    "preset grid (1: r x alpha2 at p=1; 2: r at p=1; "
                    "3: p at r in {0, pi/4}; 4: r at p=1/3)")
      ->check(CLI::Range(1, 4));
  sweep->add_option("--p-grid", p_grid, "p grid as a:b:n");
  sweep->add_option("--r-grid", r_grid, "r grid as a:b:n");
  sweep->add_option("--alpha2-grid", alpha2_grid, "alpha2 grid as a:b:n");
  sweep->add_option("--measure-side", sweep_side,
                    "which discord columns to compute; the other is nan")
      ->check(CLI::IsMember({"A", "B", "both"}));
  sweep->add_option("--threads", threads, "worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "Run the cross-validation suite");

  CLI11_PARSE(app, argc, argv);

  try {
    if (point->parsed()) {
      return cmd_point(p, r, alpha2, phase, point_side);
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      if (sweep->count("--figure") > 0) spec = figure_preset(figure);
      if (sweep->count("--p-grid") > 0) {
        spec.p_grid = parse_grid(p_grid, "--p-grid");
      }
      if (sweep->count("--r-grid") > 0) {
        spec.r_grid = parse_grid(r_grid, "--r-grid");
      }
      if (sweep->count("--alpha2-grid") > 0) {
        spec.alpha2_grid = parse_grid(alpha2_grid, "--alpha2-grid");
      }
      if (sweep_side == "A") spec.outputs.discord_b = false;
      if (sweep_side == "B") spec.outputs.discord_a = false;
      return cmd_sweep(spec, out_path, threads);
    }
    if (selfcheck->parsed()) {
      return run_selfcheck(std::cout) ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return e.get_exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
