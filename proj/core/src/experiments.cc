#include "z4k/experiments.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace z4k {

void parallel_for(size_t count, int workers, const std::function<void(size_t)> &body) {
  if (workers <= 0) workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto &t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string conjugate_partner(const std::string &logical) {
  if (logical.size() < 2 || (logical[0] != 'X' && logical[0] != 'Z')) {
    throw std::invalid_argument("not a logical name: " + logical);
  }
  std::string out = logical;
  out[0] = logical[0] == 'X' ? 'Z' : 'X';
  return out;
}

namespace {

KagomeCode make_code(bool defects, int L) {
  return defects ? KagomeCode::build_with_defects(L) : KagomeCode::build(L);
}

double binomial_error(long failures, long trials) {
  if (trials <= 0) return 0.0;
  double p = static_cast<double>(failures) / trials;
  return std::sqrt(p * (1.0 - p) / trials);
}

uint64_t point_stream(bool defects, int L, size_t index) {
  return (static_cast<uint64_t>(defects) << 60) ^ (static_cast<uint64_t>(L) << 32) ^ index;
}

}  // namespace

std::vector<ThresholdRow> run_threshold(const ThresholdConfig &cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  for (double p : cfg.rates)
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("rates must lie in [0, 1]");
  std::vector<ThresholdRow> rows;
  for (int L : cfg.sizes) {
    KagomeCode code = make_code(cfg.defects, L);
    Decoder decoder(code);
    const auto active = active_qudits(code);

    std::vector<std::string> observables = cfg.observables;
    if (observables.empty())
      for (const auto &l : code.logicals()) observables.push_back(l.name);
    std::vector<int> detector;
    for (const auto &o : observables) detector.push_back(code.logical_index(conjugate_partner(o)));

    for (size_t pi = 0; pi < cfg.rates.size(); ++pi) {
      const double p = cfg.rates[pi];
      const uint64_t stream = point_stream(cfg.defects, L, pi);
      std::vector<std::vector<uint8_t>> residual(cfg.trials);
      parallel_for(cfg.trials, cfg.workers, [&](size_t t) {
        Rng rng(trial_seed(cfg.seed, stream, t));
        SparseWord err = sample_depolarizing(active, p, rng, cfg.unit);
        auto labels = decoder.labels_of(err);
        auto res = decoder.decode(syndrome_from_charges(decoder.charges_of(err)));
        for (size_t k = 0; k < labels.size(); ++k) labels[k] = (labels[k] + res.labels[k]) & 3;
        residual[t] = std::move(labels);
      });
      for (size_t o = 0; o < observables.size(); ++o) {
        ThresholdRow row;
        row.observable = observables[o];
        row.L = L;
        row.p = p;
        row.trials = cfg.trials;
        for (const auto &r : residual) row.failures += r[detector[o]] != 0;
        row.p_logical = static_cast<double>(row.failures) / row.trials;
        row.std_error = binomial_error(row.failures, row.trials);
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string threshold_csv(const std::vector<ThresholdRow> &rows) {
  std::string out = "observable,L,p,trials,failures,p_logical,stderr\n";
  char buf[256];
  for (const auto &r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%.6g,%ld,%ld,%.8f,%.8f\n", r.observable.c_str(), r.L, r.p, r.trials,
                  r.failures, r.p_logical, r.std_error);
    out += buf;
  }
  return out;
}

Crossing estimate_crossing(const std::vector<ThresholdRow> &rows, const std::string &observable, int L_small,
                           int L_large) {
  std::map<double, const ThresholdRow *> small, large;
  for (const auto &r : rows) {
    if (r.observable != observable) continue;
    if (r.L == L_small) small[r.p] = &r;
    if (r.L == L_large) large[r.p] = &r;
  }
  std::vector<double> ps;
  for (auto &[p, r] : small)
    if (large.count(p)) ps.push_back(p);
  // Signed significance of large - small at each rate. The crossing interval
  // is the split that best separates negative values below from positive
  // values above, so isolated low-count fluctuations do not capture it.
  const size_t n = ps.size();
  std::vector<double> g(n), z(n);
  for (size_t j = 0; j < n; ++j) {
    const auto *s = small[ps[j]], *l = large[ps[j]];
    g[j] = l->p_logical - s->p_logical;
    const double sigma = std::hypot(s->std_error, l->std_error);
    z[j] = sigma > 0 ? g[j] / sigma : 0.0;
  }
  Crossing c;
  double best = -std::numeric_limits<double>::infinity();
  size_t pick = n;
  for (size_t i = 0; i + 1 < n; ++i) {
    if (!(g[i] < 0 && g[i + 1] >= 0)) continue;
    double score = 0;
    for (size_t j = 0; j < n; ++j) score += j <= i ? -z[j] : z[j];
    if (score > best) {
      best = score;
      pick = i;
    }
  }
  if (pick == n) return c;
  const auto *s0 = small[ps[pick]], *s1 = small[ps[pick + 1]];
  const auto *l0 = large[ps[pick]], *l1 = large[ps[pick + 1]];
  const double g0 = g[pick], g1 = g[pick + 1];
  const double span = ps[pick + 1] - ps[pick];
  const double denom = g0 - g1;
  c.found = true;
  c.p = ps[pick] + g0 / denom * span;
  const double v0 = s0->std_error * s0->std_error + l0->std_error * l0->std_error;
  const double v1 = s1->std_error * s1->std_error + l1->std_error * l1->std_error;
  const double d0 = -span * g1 / (denom * denom);
  const double d1 = span * g0 / (denom * denom);
  c.std_error = std::sqrt(d0 * d0 * v0 + d1 * d1 * v1);
  return c;
}

LifetimeSample lifetime_trial(const Decoder &decoder, const ThermalParams &params, uint64_t seed, int stride,
                              double max_time) {
  const KagomeCode &code = decoder.code();
  MetropolisChain chain(code, params);
  Rng rng(seed);
  const double spins = 2.0 * code.num_active();
  const long max_steps = static_cast<long>(std::ceil(max_time * spins));
  if (stride < 1) stride = 1;
  long accepted = 0;
  while (chain.steps() < max_steps) {
    if (!chain.step(rng).accepted) continue;
    if (++accepted % stride) continue;
    const auto &labels = chain.labels();
    bool failed = false;
    if (chain.num_anyons() == 0) {
      for (auto l : labels) failed |= l != 0;
    } else {
      auto res = decoder.decode(syndrome_from_charges(chain.charges()));
      for (size_t k = 0; k < labels.size(); ++k) failed |= ((labels[k] + res.labels[k]) & 3) != 0;
    }
    if (failed) return {chain.steps() / spins, false};
  }
  return {chain.steps() / spins, true};
}

std::vector<LifetimeRow> run_lifetime(const LifetimeConfig &cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
  for (double l : cfg.lambdas)
    if (!(l > 0)) throw std::invalid_argument("lambda must be positive");
  std::vector<LifetimeRow> rows;
  for (size_t li = 0; li < cfg.lambdas.size(); ++li) {
    const double lambda = cfg.lambdas[li];
    const ThermalParams params = ThermalParams::from_lambda(lambda);
    for (int L : cfg.sizes) {
      KagomeCode code = make_code(cfg.defects, L);
      Decoder decoder(code);
      const uint64_t stream = point_stream(cfg.defects, L, 1000 + li);
      std::vector<LifetimeSample> samples(cfg.trials);
      parallel_for(cfg.trials, cfg.workers, [&](size_t t) {
        samples[t] = lifetime_trial(decoder, params, trial_seed(cfg.seed, stream, t), cfg.stride, cfg.max_time);
      });
      LifetimeRow row;
      row.lambda = lambda;
      row.L = L;
      row.trials = cfg.trials;
      double sum = 0, sum2 = 0;
      for (const auto &s : samples) {
        sum += s.time;
        sum2 += s.time * s.time;
        row.censored += s.censored;
      }
      row.mean_lifetime = sum / cfg.trials;
      double var = cfg.trials > 1 ? (sum2 - sum * sum / cfg.trials) / (cfg.trials - 1) : 0.0;
      row.std_error = std::sqrt(std::max(var, 0.0) / cfg.trials);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string lifetime_csv(const std::vector<LifetimeRow> &rows) {
  std::string out = "lambda,L,trials,mean_lifetime,stderr\n";
  char buf[256];
  for (const auto &r : rows) {
    std::snprintf(buf, sizeof buf, "%.6g,%d,%ld,%.8g,%.8g\n", r.lambda, r.L, r.trials, r.mean_lifetime,
                  r.std_error);
    out += buf;
  }
  return out;
}

}  // namespace z4k
