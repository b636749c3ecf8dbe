#ifndef Z4K_NOISE_H
#define Z4K_NOISE_H

#include <cstdint>
#include <random>
#include <vector>

#include "z4k/incidence.h"
#include "z4k/kagome.h"

namespace z4k {

using Rng = std::mt19937_64;

/// splitmix64 finaliser.
uint64_t splitmix64(uint64_t x);
/// Seed of one trial: splitmix64 chained over (base, stream, trial). `stream`
/// separates sweep points so that trial k of two points is independent.
uint64_t trial_seed(uint64_t base, uint64_t stream, uint64_t trial);

/// Accumulated error on the code. Phases are tracked but never matter for
/// syndromes or verdicts.
struct ErrorFrame {
  PhasedPauli word;
  long history = 0;  // number of elementary events composed in

  ErrorFrame() = default;
  explicit ErrorFrame(size_t num_qudits) : word(num_qudits) {}

  void apply(int q, QuditOp op);
  ErrorFrame &operator*=(const ErrorFrame &rhs);
};

/// Energies are in units of k_B T.
struct ThermalParams {
  double lambda = 1.0;
  double beta_energy_triangle = 1.0;  // lambda^2
  double beta_energy_hexagon = 1.0;   // lambda
  double J = 0.5;                     // triangle gap 2J
  double h = 0.0;                     // hexagon gap 2 (63/8) h^6 / (2J)^5

  static ThermalParams from_lambda(double lambda);
};

/// Gap of -(W + W^dagger) above the ground state for charge k, in units of the
/// plaquette gap: 0, 1, 2, 1.
int plaquette_energy(int k);

/// Uniform double in [0, 1) from the top 53 bits; uniform integer in [0, n).
inline double uniform01(Rng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
inline uint64_t uniform_below(Rng &rng, uint64_t n) { return rng() % n; }

/// Qubit: both qubits of every active qudit are hit independently.
/// Qudit: one conversion-table event per qudit with probability p.
enum class NoiseUnit { Qubit, Qudit };

/// Independent depolarizing events merged into one word per hit qudit (in
/// qudit order).
SparseWord sample_depolarizing(const std::vector<int> &active, double p, Rng &rng,
                               NoiseUnit unit = NoiseUnit::Qubit);

ErrorFrame apply_depolarizing(const KagomeCode &code, double p, Rng &rng,
                              NoiseUnit unit = NoiseUnit::Qubit);

struct MetropolisOutcome {
  bool accepted = false;
  double delta = 0.0;  // m * Delta_tri + n * Delta_hex
  int m = 0;           // energy change on triangle-type checks (pentagons included)
  int n = 0;           // energy change on hexagons
  int qudit = -1;
  QuditOp op{0, 0};
};

/// Metropolis dynamics on a frame with incremental charges and logical labels.
class MetropolisChain {
 public:
  MetropolisChain(const KagomeCode &code, ThermalParams params);
  MetropolisChain(const KagomeCode &code, ThermalParams params, const ErrorFrame &initial);

  MetropolisOutcome step(Rng &rng);
  /// Evaluates a proposal without drawing randomness; applies it iff `accept`
  /// says so given the energy change.
  MetropolisOutcome propose(int q, QuditOp op, double uniform);

  const ErrorFrame &frame() const { return frame_; }
  const std::vector<uint8_t> &charges() const { return charges_; }
  /// Commutation exponents (logical_k, frame) for the code's logical basis.
  const std::vector<uint8_t> &labels() const { return labels_; }
  int num_anyons() const { return num_anyons_; }
  long steps() const { return steps_; }
  const ThermalParams &params() const { return params_; }

 private:
  const KagomeCode *code_;
  ThermalParams params_;
  Incidence checks_;
  Incidence logicals_;
  std::vector<char> triangle_like_;
  std::vector<int> active_;
  ErrorFrame frame_;
  std::vector<uint8_t> charges_;
  std::vector<uint8_t> labels_;
  int num_anyons_ = 0;
  long steps_ = 0;
};

/// Single step on an explicit frame (recomputes charges; for tests and small
/// cases). Returns the new frame together with the outcome.
std::pair<ErrorFrame, MetropolisOutcome> metropolis_step(const KagomeCode &code,
                                                         const ThermalParams &params,
                                                         const ErrorFrame &frame, Rng &rng);

}  // namespace z4k

#endif
