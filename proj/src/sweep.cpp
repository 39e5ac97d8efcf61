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

#include "rindlersim/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rindlersim/measures.hpp"
#include "rindlersim/rindler.hpp"
#include "rindlersim/teleport.hpp"

namespace rindlersim {

namespace {

constexpr char kCsvHeader[] =
    "p,r,alpha2,F_i0,F_i1,min_F,avg_F,discord_B,discord_A,negativity,"
    "mutual_info\n";

// Quantities that depend on the channel only, cached once per (p, r) pair so
// the alpha2 axis never repeats the discord optimization.
struct ChannelData {
  DensityMatrix state;
  double discord_b = std::numeric_limits<double>::quiet_NaN();
  double discord_a = std::numeric_limits<double>::quiet_NaN();
  double negativity = std::numeric_limits<double>::quiet_NaN();
  double mutual_information = std::numeric_limits<double>::quiet_NaN();
};

// Work-stealing loop over [0, count) with a shared index counter. The first
// exception thrown by any worker is rethrown on the caller's thread.
void parallel_for(int count, int threads,
                  const std::function<void(int)>& body) {
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
  }
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        body(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

void append_value(std::string& row, double value, bool enabled) {
  if (!enabled) {
    row += "nan";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  row += buf;
}

void check_grid(const std::vector<double>& grid, const char* name, double lo,
                double hi, const char* range) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string(name) + " grid is empty");
  }
  for (double v : grid) {
    if (!(v >= lo && v <= hi)) {
      throw std::invalid_argument(std::string(name) + " grid value " +
                                  std::to_string(v) + " outside " + range);
    }
  }
}

}  // namespace

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) {
    throw std::invalid_argument("linspace needs at least one point");
  }
  std::vector<double> values(n);
  values[0] = a;
  for (int i = 1; i + 1 < n; ++i) {
    values[i] = a + (b - a) * i / (n - 1);
  }
  if (n > 1) values[n - 1] = b;
  return values;
}

SweepSpec figure_preset(int figure, int points_per_axis) {
  const int n = points_per_axis;
  switch (figure) {
    case 1:
      return {{1.0}, linspace(0, kMaxAcceleration, n), linspace(0, 1, n), {}};
    case 2:
      return {{1.0}, linspace(0, kMaxAcceleration, n), {0.5}, {}};
    case 3:
      return {linspace(0, 1, n), {0.0, kMaxAcceleration}, {0.5}, {}};
    case 4:
      return {{1.0 / 3.0}, linspace(0, kMaxAcceleration, n), {0.5}, {}};
    default:
      throw std::invalid_argument("figure must be 1, 2, 3 or 4");
  }
}

void validate(const SweepSpec& spec) {
  check_grid(spec.p_grid, "p", 0.0, 1.0, "[0, 1]");
  check_grid(spec.r_grid, "r", 0.0, kMaxAcceleration, "[0, pi/4]");
  check_grid(spec.alpha2_grid, "alpha2", 0.0, 1.0, "[0, 1]");
}

void run_sweep(const SweepSpec& spec, std::ostream& out, int threads) {
  validate(spec);
  const int np = static_cast<int>(spec.p_grid.size());
  const int nr = static_cast<int>(spec.r_grid.size());
  const int na = static_cast<int>(spec.alpha2_grid.size());
  const SweepOutputs& flags = spec.outputs;

  std::vector<std::optional<ChannelData>> channels(np * nr);
  parallel_for(np * nr, threads, [&](int idx) {
    const double p = spec.p_grid[idx / nr];
    const double r = spec.r_grid[idx % nr];
    ChannelData data{alice_rob_state(p, r)};
    if (flags.discord_b) {
      const CorrelationReport rep = discord(data.state, MeasuredSide::B);
      data.discord_b = rep.discord;
      data.negativity = rep.negativity;
      data.mutual_information = rep.mutual_information;
    }
    if (flags.discord_a) {
      const CorrelationReport rep = discord(data.state, MeasuredSide::A);
      data.discord_a = rep.discord;
      data.negativity = rep.negativity;
      data.mutual_information = rep.mutual_information;
    }
    if (flags.negativity && std::isnan(data.negativity)) {
      data.negativity = negativity(data.state);
    }
    if (flags.mutual_information && std::isnan(data.mutual_information)) {
      data.mutual_information = mutual_information(data.state);
    }
    channels[idx].emplace(std::move(data));
  });

  const bool need_protocol = flags.fidelities || flags.min_fidelity;
  std::vector<std::string> rows(np * nr * na);
  parallel_for(np * nr * na, threads, [&](int idx) {
    const int ia = idx % na;
    const int ir = (idx / na) % nr;
    const int ip = idx / (na * nr);
    const ChannelData& channel = *channels[ip * nr + ir];
    const double alpha2 = spec.alpha2_grid[ia];

    double f_i0 = 0, f_i1 = 0, min_f = 0, avg_f = 0;
    if (need_protocol) {
      const PureQubit psi(std::sqrt(alpha2), std::sqrt(1 - alpha2));
      const TeleportReport rep = run_protocol(psi, channel.state);
      f_i0 = rep.outcomes[0].fidelity;
      f_i1 = rep.outcomes[1].fidelity;
      min_f = rep.min_fidelity;
      avg_f = rep.avg_fidelity;
    }

    std::string row;
    row.reserve(160);
    append_value(row, spec.p_grid[ip], true);
    row += ',';
    append_value(row, spec.r_grid[ir], true);
    row += ',';
    append_value(row, alpha2, true);
    row += ',';
    append_value(row, f_i0, flags.fidelities);
    row += ',';
    append_value(row, f_i1, flags.fidelities);
    row += ',';
    append_value(row, min_f, flags.min_fidelity);
    row += ',';
    append_value(row, avg_f, flags.fidelities);
    row += ',';
    append_value(row, channel.discord_b, flags.discord_b);
    row += ',';
    append_value(row, channel.discord_a, flags.discord_a);
    row += ',';
    append_value(row, channel.negativity, flags.negativity);
    row += ',';
    append_value(row, channel.mutual_information, flags.mutual_information);
    row += '\n';
    rows[idx] = std::move(row);
  });

  out << kCsvHeader;
  for (const std::string& row : rows) out << row;
}

}  // namespace rindlersim
