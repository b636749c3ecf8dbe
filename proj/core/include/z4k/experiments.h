#ifndef Z4K_EXPERIMENTS_H
#define Z4K_EXPERIMENTS_H

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "z4k/decoder.h"
#include "z4k/noise.h"

namespace z4k {

/// Runs body(i) for i in [0, count) on `workers` threads (0 = hardware
/// concurrency). Work is handed out through an atomic counter; body must only
/// write to slots owned by i.
void parallel_for(size_t count, int workers, const std::function<void(size_t)> &body);

/// Observables name the logical whose action on the code space counts as a
/// failure: "X1" fails when the residual acts as a power of X1, which is
/// detected by a nonzero commutation with its partner Z1.
std::string conjugate_partner(const std::string &logical);

struct ThresholdConfig {
  bool defects = false;
  std::vector<int> sizes;
  std::vector<double> rates;
  long trials = 1000;
  std::vector<std::string> observables;  // empty: every basis logical
  uint64_t seed = 1;
  int workers = 1;
  NoiseUnit unit = NoiseUnit::Qubit;
};

struct ThresholdRow {
  std::string observable;
  int L = 0;
  double p = 0.0;
  long trials = 0;
  long failures = 0;
  double p_logical = 0.0;
  double std_error = 0.0;
};

std::vector<ThresholdRow> run_threshold(const ThresholdConfig &cfg);
std::string threshold_csv(const std::vector<ThresholdRow> &rows);

struct Crossing {
  bool found = false;
  double p = 0.0;
  double std_error = 0.0;  // propagated from the binomial errors of the four points
};

/// Crossing of the curves for sizes L_small < L_large. Among the intervals
/// where large - small changes sign, picks the one with the strongest
/// separation weighted by standard error, then interpolates linearly.
Crossing estimate_crossing(const std::vector<ThresholdRow> &rows, const std::string &observable,
                           int L_small, int L_large);

struct LifetimeConfig {
  bool defects = false;
  std::vector<int> sizes;
  std::vector<double> lambdas;
  long trials = 100;
  uint64_t seed = 1;
  int workers = 1;
  int stride = 1;            // decode after every stride-th accepted step
  double max_time = 1.0e4;   // cap in lifetime units; capped trials count as censored
};

struct LifetimeRow {
  double lambda = 0.0;
  int L = 0;
  long trials = 0;
  double mean_lifetime = 0.0;
  double std_error = 0.0;
  long censored = 0;
};

/// Lifetime of one chain in units of (number of qubits) Metropolis steps.
struct LifetimeSample {
  double time = 0.0;
  bool censored = false;
};

LifetimeSample lifetime_trial(const Decoder &decoder, const ThermalParams &params, uint64_t seed,
                              int stride, double max_time);

std::vector<LifetimeRow> run_lifetime(const LifetimeConfig &cfg);
std::string lifetime_csv(const std::vector<LifetimeRow> &rows);

}  // namespace z4k

#endif
