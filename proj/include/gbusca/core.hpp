// Apache License, Version 2.0, refer to LICENSE.txt

#ifndef GBUSCA_CORE_HPP
#define GBUSCA_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gbusca/errors.hpp"
#include "gbusca/matrix.hpp"

namespace gbusca {

// One process's event times: strictly increasing, all nonnegative.
class Timeline {
 public:
  Timeline() = default;

  explicit Timeline(std::vector<double> times) : times_(std::move(times)) {
    for (std::size_t i = 0; i < times_.size(); ++i) {
      if (!(times_[i] >= 0.0) || !std::isfinite(times_[i])) {
        std::ostringstream os;
        os << "timeline entry " << i << " is " << times_[i] << "; times must be finite and >= 0";
        throw ContractError(os.str());
      }
      if (i > 0 && !(times_[i - 1] < times_[i])) {
        std::ostringstream os;
        os << "timeline not strictly increasing at index " << i << " (" << times_[i - 1]
           << " then " << times_[i] << ")";
        throw ContractError(os.str());
      }
    }
  }

  std::size_t size() const { return times_.size(); }
  bool empty() const { return times_.empty(); }
  double operator[](std::size_t i) const { return times_[i]; }
  double front() const { return times_.front(); }
  double back() const { return times_.back(); }
  const std::vector<double>& times() const { return times_; }
  auto begin() const { return times_.begin(); }
  auto end() const { return times_.end(); }

 private:
  std::vector<double> times_;
};

// The full realization: K timelines plus the observation horizon.
// Immutable after construction and safe to share across threads.
class ProcessCollection {
 public:
  ProcessCollection(std::vector<Timeline> processes, double horizon)
      : processes_(std::move(processes)), horizon_(horizon) {
    if (processes_.empty()) throw ContractError("a collection needs at least one process");
    if (!std::isfinite(horizon_) || horizon_ < 0.0) {
      throw ContractError("horizon must be finite and nonnegative");
    }
    total_events_ = 0;
    for (std::size_t a = 0; a < processes_.size(); ++a) {
      total_events_ += processes_[a].size();
      if (!processes_[a].empty() && processes_[a].back() > horizon_) {
        std::ostringstream os;
        os << "process " << a << " has event at " << processes_[a].back()
           << " beyond horizon " << horizon_;
        throw ContractError(os.str());
      }
    }
  }

  std::size_t num_processes() const { return processes_.size(); }

  const Timeline& process(std::size_t a) const {
    if (a >= processes_.size()) {
      std::ostringstream os;
      os << "process id " << a << " out of range [0, " << processes_.size() << ")";
      throw ContractError(os.str());
    }
    return processes_[a];
  }

  double horizon() const { return horizon_; }
  std::size_t total_events() const { return total_events_; }

 private:
  std::vector<Timeline> processes_;
  double horizon_ = 0.0;
  std::size_t total_events_ = 0;
};

// Builds a collection from raw per-process event lists. Each list is
// sorted; exact duplicate times within one process are spread apart by
// j * eps where eps = 1e-9 times the process's mean inter-event gap
// (absolute 1e-9 when the process has no positive gap). The rule is
// deterministic; if the perturbed value would reach the next distinct
// time the input is rejected rather than silently reordered.
inline ProcessCollection build_collection(const std::vector<std::vector<double>>& event_lists,
                                          std::optional<double> horizon = std::nullopt) {
  if (event_lists.empty()) throw ContractError("a collection needs at least one process");

  std::vector<Timeline> timelines;
  timelines.reserve(event_lists.size());
  double max_time = 0.0;

  for (std::size_t a = 0; a < event_lists.size(); ++a) {
    std::vector<double> times = event_lists[a];
    for (double t : times) {
      if (!(t >= 0.0) || !std::isfinite(t)) {
        std::ostringstream os;
        os << "process " << a << ": timestamp " << t << " is negative or not finite";
        throw ContractError(os.str());
      }
    }
    std::sort(times.begin(), times.end());

    if (times.size() >= 2) {
      const double span = times.back() - times.front();
      const double mean_gap = span / static_cast<double>(times.size() - 1);
      const double eps = mean_gap > 0.0 ? 1e-9 * mean_gap : 1e-9;
      std::size_t dup = 0;
      for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] == times[i - 1 - dup]) {
          ++dup;
          const double shifted = times[i] + static_cast<double>(dup) * eps;
          const bool collides =
              (i + 1 < times.size() && shifted >= times[i + 1]) || shifted <= times[i - 1];
          if (collides) {
            std::ostringstream os;
            os << "process " << a << ": duplicate timestamp " << times[i]
               << " cannot be perturbed without reordering";
            throw ContractError(os.str());
          }
          times[i] = shifted;
        } else {
          dup = 0;
          if (times[i] <= times[i - 1]) {
            // A previous perturbation overtook this value.
            std::ostringstream os;
            os << "process " << a << ": duplicate timestamps too dense near " << times[i];
            throw ContractError(os.str());
          }
        }
      }
    }

    if (!times.empty()) max_time = std::max(max_time, times.back());
    timelines.emplace_back(std::move(times));
  }

  const double h = horizon.value_or(max_time);
  return ProcessCollection(std::move(timelines), h);
}

// Model parameters: row-stochastic Granger matrix G = [alpha_ba]
// (row b = influencer, column a = influenced), influence scales beta,
// exogenous rates mu.
struct ModelParams {
  Matrix granger;
  std::vector<double> beta;
  std::vector<double> mu;

  std::size_t dimension() const { return mu.size(); }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

inline constexpr double kRowSumTolerance = 1e-9;

// Checks every ModelParams invariant. Value violations are reported;
// a dimension mismatch between the pieces is a structural error.
inline ValidationReport validate_params(const ModelParams& params) {
  const std::size_t k = params.mu.size();
  if (params.beta.size() != k || params.granger.rows() != k || params.granger.cols() != k) {
    std::ostringstream os;
    os << "dimension mismatch: granger " << params.granger.rows() << "x" << params.granger.cols()
       << ", beta " << params.beta.size() << ", mu " << params.mu.size();
    throw ContractError(os.str());
  }

  ValidationReport report;
  auto fail = [&report](const std::string& msg) {
    report.ok = false;
    report.violations.push_back(msg);
  };

  for (std::size_t b = 0; b < k; ++b) {
    double sum = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      const double v = params.granger(b, a);
      if (!(v >= 0.0) || !std::isfinite(v)) {
        std::ostringstream os;
        os << "granger[" << b << "][" << a << "] = " << v << " is negative or not finite";
        fail(os.str());
      }
      sum += v;
    }
    if (!(std::abs(sum - 1.0) <= kRowSumTolerance)) {
      std::ostringstream os;
      os << "row " << b << " sums to " << sum;
      fail(os.str());
    }
  }
  for (std::size_t b = 0; b < k; ++b) {
    if (!(params.beta[b] >= 1.0) || !std::isfinite(params.beta[b])) {
      std::ostringstream os;
      os << "beta[" << b << "] < 1 or not finite (value " << params.beta[b] << ")";
      fail(os.str());
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    if (!(params.mu[a] >= 0.0) || !std::isfinite(params.mu[a])) {
      std::ostringstream os;
      os << "mu[" << a << "] = " << params.mu[a] << " is negative or not finite";
      fail(os.str());
    }
  }
  return report;
}

// Per-event cause labels. labels[a][i] is the process that caused event
// i of process a; the value K (num_processes) marks an exogenous event.
// Mutable and owned by exactly one fitting session.
class LatentState {
 public:
  LatentState() = default;

  explicit LatentState(std::size_t num_processes)
      : k_(num_processes),
        labels(num_processes),
        counts_ba(num_processes * num_processes, 0),
        counts_b(num_processes, 0) {}

  std::size_t num_processes() const { return k_; }
  std::uint32_t exogenous_label() const { return static_cast<std::uint32_t>(k_); }

  std::int64_t& n_ba(std::size_t b, std::size_t a) { return counts_ba[b * k_ + a]; }
  std::int64_t n_ba(std::size_t b, std::size_t a) const { return counts_ba[b * k_ + a]; }
  std::int64_t& n_b(std::size_t b) { return counts_b[b]; }
  std::int64_t n_b(std::size_t b) const { return counts_b[b]; }

  // Recomputes counts_ba and counts_b from the labels.
  void rebuild_counts() {
    std::fill(counts_ba.begin(), counts_ba.end(), 0);
    std::fill(counts_b.begin(), counts_b.end(), 0);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::uint32_t z : labels[a]) {
        if (z < k_) {
          ++n_ba(z, a);
          ++n_b(z);
        }
      }
    }
  }

  std::size_t num_exogenous() const {
    std::size_t n = 0;
    for (const auto& row : labels) {
      for (std::uint32_t z : row) {
        if (z == k_) ++n;
      }
    }
    return n;
  }

  std::size_t num_events() const {
    std::size_t n = 0;
    for (const auto& row : labels) n += row.size();
    return n;
  }

  // Verifies the count bookkeeping against the labels:
  // sum_a n_ba = n_b for every b, sum_b n_b + #exogenous = N, and each
  // n_ba matches a direct recount.
  bool counts_consistent() const {
    std::int64_t total_endogenous = 0;
    for (std::size_t b = 0; b < k_; ++b) {
      std::int64_t row = 0;
      for (std::size_t a = 0; a < k_; ++a) {
        if (n_ba(b, a) < 0) return false;
        row += n_ba(b, a);
      }
      if (row != counts_b[b]) return false;
      total_endogenous += counts_b[b];
    }
    if (static_cast<std::size_t>(total_endogenous) + num_exogenous() != num_events()) return false;

    std::vector<std::int64_t> recount(k_ * k_, 0);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::uint32_t z : labels[a]) {
        if (z < k_) ++recount[static_cast<std::size_t>(z) * k_ + a];
      }
    }
    return recount == counts_ba;
  }

  std::size_t k_ = 0;
  std::vector<std::vector<std::uint32_t>> labels;
  std::vector<std::int64_t> counts_ba;  // row-major [b * K + a]
  std::vector<std::int64_t> counts_b;
};

enum class SamplerMode { exact_gibbs, mh_fptree };

struct FitConfig {
  std::size_t iterations = 300;
  std::optional<double> alpha_prior;  // defaults to 1/K
  SamplerMode sampler_mode = SamplerMode::mh_fptree;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  std::optional<double> mu_floor;  // defaults to 1/horizon
  bool average_last_half = false;  // average the G estimate over the last half of the iterations
  bool audit_counts = false;       // verify count consistency after every resample (workers = 1)
};

}  // namespace gbusca

#endif  // GBUSCA_CORE_HPP
