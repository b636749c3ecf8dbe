// z4k: command-line driver for threshold sweeps, lifetime runs, Clifford
// synthesis and the verification suites.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "z4k/clifford.h"
#include "z4k/distance.h"
#include "z4k/experiments.h"
#include "z4k/kagome.h"
#include "z4k/verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadConfig = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::vector<std::string> sizes;
  std::vector<std::string> lambdas{"1", "3", "5"};
  std::vector<std::string> observables;
  std::string out;
  std::string noise_unit = "qubit";
  std::string gate;
  double p_min = 0.02;
  double p_max = 0.30;
  int p_steps = 15;
  long trials = -1;
  uint64_t seed = 1;
  int workers = 1;
  bool defects = false;
  int stride = 1;
  double max_time = 1.0e4;
  int random = 0;
  int qudits = 2;
  bool table = false;
  std::vector<std::string> suites;
};

std::vector<std::string> split(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <class T>
std::vector<T> parse_list(const std::vector<std::string> &items, const char *what) {
  std::vector<T> out;
  for (const auto &item : items) {
    std::istringstream in(item);
    T v;
    if (!(in >> v) || !in.eof()) throw ConfigError(std::string("bad value '") + item + "' for --" + what);
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(std::string("--") + what + " is empty");
  return out;
}

std::vector<int> sizes_or(const Options &o, const char *fallback) {
  return parse_list<int>(o.sizes.empty() ? split(fallback) : o.sizes, "L");
}

z4k::NoiseUnit parse_unit(const std::string &s) {
  if (s == "qubit") return z4k::NoiseUnit::Qubit;
  if (s == "qudit") return z4k::NoiseUnit::Qudit;
  throw ConfigError("--noise-unit must be qubit or qudit");
}

void write_output(const Options &o, const std::string &text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ConfigError("cannot open " + o.out);
  f << text;
}

int cmd_validate(const Options &o) {
  bool ok = true;
  for (int L : sizes_or(o, o.defects ? "8,12" : "4,6,8")) {
    z4k::KagomeCode code = o.defects ? z4k::KagomeCode::build_with_defects(L) : z4k::KagomeCode::build(L);
    std::cout << "# L=" << L << (o.defects ? " with defect lines" : "") << "\n";
    for (const auto &c : z4k::validate_code(code)) {
      ok &= c.passed;
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    for (const auto &l : code.logicals()) {
      auto d = z4k::code_distance(code, l.name);
      std::cout << "distance " << l.name << " " << d.weight << "\n";
    }
  }
  return ok ? kExitOk : kExitFailed;
}

int cmd_threshold(const Options &o) {
  if (o.p_steps < 1) throw ConfigError("--p-steps must be at least 1");
  if (o.p_min > o.p_max) throw ConfigError("--p-min exceeds --p-max");
  z4k::ThresholdConfig cfg;
  cfg.defects = o.defects;
  cfg.sizes = sizes_or(o, "8,12,16");
  for (int k = 0; k < o.p_steps; ++k) {
    cfg.rates.push_back(o.p_steps == 1 ? o.p_min : o.p_min + (o.p_max - o.p_min) * k / (o.p_steps - 1));
  }
  cfg.trials = o.trials < 0 ? 1000 : o.trials;
  if (!o.observables.empty()) cfg.observables = o.observables;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.unit = parse_unit(o.noise_unit);
  auto rows = z4k::run_threshold(cfg);
  write_output(o, z4k::threshold_csv(rows));

  std::vector<int> sizes = cfg.sizes;
  std::sort(sizes.begin(), sizes.end());
  if (sizes.size() >= 2) {
    std::vector<std::string> names;
    for (const auto &r : rows)
      if (std::find(names.begin(), names.end(), r.observable) == names.end()) names.push_back(r.observable);
    for (const auto &name : names) {
      auto c = z4k::estimate_crossing(rows, name, sizes[sizes.size() - 2], sizes.back());
      if (c.found) {
        std::fprintf(stderr, "crossing %s L=%d/%d: p = %.4f +- %.4f\n", name.c_str(), sizes[sizes.size() - 2],
                     sizes.back(), c.p, c.std_error);
      } else {
        std::fprintf(stderr, "crossing %s: none in range\n", name.c_str());
      }
    }
  }
  return kExitOk;
}

int cmd_lifetime(const Options &o) {
  z4k::LifetimeConfig cfg;
  cfg.defects = o.defects;
  cfg.sizes = sizes_or(o, "8,12,16");
  cfg.lambdas = parse_list<double>(o.lambdas, "lambda");
  cfg.trials = o.trials < 0 ? 100 : o.trials;
  cfg.seed = o.seed;
  cfg.workers = o.workers;
  cfg.stride = o.stride;
  cfg.max_time = o.max_time;
  if (cfg.stride < 1) throw ConfigError("--stride must be at least 1");
  auto rows = z4k::run_lifetime(cfg);
  write_output(o, z4k::lifetime_csv(rows));
  for (const auto &r : rows) {
    if (r.censored) std::fprintf(stderr, "lambda=%g L=%d: %ld trials reached --max-time\n", r.lambda, r.L, r.censored);
  }
  return kExitOk;
}

int cmd_synth(const Options &o) {
  std::ostringstream out;
  bool ok = true;
  if (o.table) {
    for (const auto &[m, w] : z4k::word_search()) {
      auto d = z4k::display_matrix(m);
      out << "[[" << d[0] << "," << d[1] << "],[" << d[2] << "," << d[3] << "]] " << (w.empty() ? "1" : w) << "\n";
    }
  }
  if (!o.gate.empty()) {
    z4k::CliffordTableau target = z4k::gate_tableau(o.gate);
    z4k::GateWord w = z4k::synthesize(target);
    bool good = z4k::evaluate(w, target.n()) == target;
    ok &= good;
    out << o.gate << " (" << w.size() << " gates" << (good ? "" : ", MISMATCH") << "): " << z4k::to_string(w) << "\n";
  }
  if (o.random > 0) {
    if (o.qudits < 1) throw ConfigError("--qudits must be at least 1");
    std::mt19937_64 rng(o.seed);
    int good = 0;
    size_t longest = 0;
    for (int k = 0; k < o.random; ++k) {
      auto target = z4k::random_tableau(o.qudits, 10 * o.qudits + 10, rng);
      auto w = z4k::synthesize(target);
      good += z4k::evaluate(w, o.qudits) == target;
      longest = std::max(longest, w.size());
    }
    ok &= good == o.random;
    out << "random " << o.qudits << "-qudit tableaux: " << good << "/" << o.random << " verified, longest word "
        << longest << " gates\n";
  }
  if (!o.table && o.gate.empty() && o.random <= 0) throw ConfigError("synth needs --table, --gate or --random");
  write_output(o, out.str());
  return ok ? kExitOk : kExitFailed;
}

int cmd_verify(const Options &o) {
  std::vector<std::string> suites = o.suites;
  if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = z4k::verify_suites();
  for (const auto &s : suites) {
    const auto &known = z4k::verify_suites();
    if (std::find(known.begin(), known.end(), s) == known.end()) throw ConfigError("unknown verify suite '" + s + "'");
  }
  z4k::VerifyOptions vo;
  vo.seed = o.seed;
  if (!o.sizes.empty()) vo.code_sizes = parse_list<int>(o.sizes, "L");
  bool ok = true;
  std::string text;
  for (const auto &s : suites) {
    auto report = z4k::run_verify(s, vo);
    ok &= report.passed();
    text += report.text();
  }
  write_output(o, text);
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Z4 parafermion Kagome code workbench"};
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--L", o.sizes, "Comma-separated lattice sizes")->delimiter(',');
  app.add_option("--p-min", o.p_min, "Smallest physical error rate");
  app.add_option("--p-max", o.p_max, "Largest physical error rate");
  app.add_option("--p-steps", o.p_steps, "Number of error rates");
  app.add_option("--lambda", o.lambdas, "Comma-separated temperature ratios")->delimiter(',');
  app.add_option("--trials", o.trials, "Trials per point");
  app.add_option("--observable", o.observables, "Comma-separated logicals (default: all)")->delimiter(',');
  app.add_option("--seed", o.seed, "Base seed");
  app.add_option("--out", o.out, "Output file (default: stdout)");
  app.add_option("--workers", o.workers, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
  app.add_flag("--defects", o.defects, "Use the code with two defect lines");
  app.add_option("--noise-unit", o.noise_unit, "Depolarizing unit: qubit or qudit");
  app.add_option("--stride", o.stride, "Decode after every stride-th accepted step");
  app.add_option("--max-time", o.max_time, "Lifetime cap per trial");
  app.add_option("--gate", o.gate, "Library gate to synthesize (S, T, H, C_X, SWAP, C_st:s,t, ...)");
  app.add_option("--random", o.random, "Number of random tableaux to synthesize");
  app.add_option("--qudits", o.qudits, "Qudits per random tableau");
  app.add_flag("--table", o.table, "Print the S/T word for every element of SL(2,Z4)");

  auto *validate = app.add_subcommand("validate", "Check code invariants and distances");
  auto *threshold = app.add_subcommand("threshold", "Depolarizing threshold sweep (CSV)");
  auto *lifetime = app.add_subcommand("lifetime", "Thermal lifetime runs (CSV)");
  auto *synth = app.add_subcommand("synth", "Clifford synthesis from S, T, Z and C_Z");
  auto *verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", o.suites, "perturbation, braiding, clifford, matching, code or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*threshold) return cmd_threshold(o);
    if (*lifetime) return cmd_lifetime(o);
    if (*synth) return cmd_synth(o);
    if (*verify) return cmd_verify(o);
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitBadConfig;
}
