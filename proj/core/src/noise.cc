#include "z4k/noise.h"

#include <cmath>
#include <stdexcept>

namespace z4k {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t trial_seed(uint64_t base, uint64_t stream, uint64_t trial) {
  return splitmix64(splitmix64(splitmix64(base) ^ stream) ^ trial);
}

void ErrorFrame::apply(int q, QuditOp op) {
  word.apply_right(q, op.a, op.b);
  ++history;
}

ErrorFrame &ErrorFrame::operator*=(const ErrorFrame &rhs) {
  word *= rhs.word;
  history += rhs.history;
  return *this;
}

ThermalParams ThermalParams::from_lambda(double lambda) {
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
  ThermalParams t;
  t.lambda = lambda;
  t.beta_energy_triangle = lambda * lambda;
  t.beta_energy_hexagon = lambda;
  // With 2J = 1 the hexagon gap 2 (63/8) h^6 / (2J)^5 equals 1/lambda.
  t.J = 0.5;
  t.h = std::pow(1.0 / (lambda * 2.0 * 63.0 / 8.0), 1.0 / 6.0);
  return t;
}

int plaquette_energy(int k) {
  static constexpr int kEnergy[4] = {0, 1, 2, 1};
  return kEnergy[k & 3];
}

namespace {

QuditOp draw_event(Rng &rng) {
  static constexpr Axis kAxes[3] = {Axis::X, Axis::Y, Axis::Z};
  Axis axis = kAxes[uniform_below(rng, 3)];
  const auto &row = conversion_row(axis);
  return row[uniform_below(rng, row.size())];
}

}  // namespace

SparseWord sample_depolarizing(const std::vector<int> &active, double p, Rng &rng, NoiseUnit unit) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  SparseWord out;
  for (int q : active) {
    int a = 0, b = 0;
    const int slots = unit == NoiseUnit::Qubit ? 2 : 1;
    for (int slot = 0; slot < slots; ++slot) {
      if (uniform01(rng) < p) {
        QuditOp e = draw_event(rng);
        a += e.a;
        b += e.b;
      }
    }
    if ((a | b) & 3) out.push_back({q, static_cast<uint8_t>(a & 3), static_cast<uint8_t>(b & 3)});
  }
  return out;
}

ErrorFrame apply_depolarizing(const KagomeCode &code, double p, Rng &rng, NoiseUnit unit) {
  ErrorFrame f(code.num_qudits());
  auto act = active_qudits(code);
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const int slots = unit == NoiseUnit::Qubit ? 2 : 1;
  for (int q : act) {
    for (int slot = 0; slot < slots; ++slot) {
      if (uniform01(rng) < p) f.apply(q, draw_event(rng));
    }
  }
  return f;
}

MetropolisChain::MetropolisChain(const KagomeCode &code, ThermalParams params)
    : MetropolisChain(code, params, ErrorFrame(code.num_qudits())) {}

MetropolisChain::MetropolisChain(const KagomeCode &code, ThermalParams params,
                                 const ErrorFrame &initial)
    : code_(&code),
      params_(params),
      checks_(check_incidence(code)),
      logicals_(logical_incidence(code)),
      active_(active_qudits(code)),
      frame_(initial) {
  for (const auto &c : code.checks()) triangle_like_.push_back(c.kind != CheckKind::Hexagon);
  charges_.assign(code.checks().size(), 0);
  for (size_t i = 0; i < charges_.size(); ++i) {
    charges_[i] = static_cast<uint8_t>(commutation_exponent(code.checks()[i].word, frame_.word));
    num_anyons_ += charges_[i] != 0;
  }
  for (const auto &l : code.logicals())
    labels_.push_back(static_cast<uint8_t>(commutation_exponent(l.op, frame_.word)));
}

MetropolisOutcome MetropolisChain::propose(int q, QuditOp op, double uniform) {
  MetropolisOutcome out;
  out.qudit = q;
  out.op = op;
  for (const auto &h : checks_.hits(q)) {
    int d = Incidence::delta(h, op.a, op.b);
    if (!d) continue;
    int old_k = charges_[h.word];
    int de = plaquette_energy(old_k + d) - plaquette_energy(old_k);
    (triangle_like_[h.word] ? out.m : out.n) += de;
  }
  out.delta = out.m * params_.beta_energy_triangle + out.n * params_.beta_energy_hexagon;
  out.accepted = out.delta <= 0.0 || uniform < std::exp(-out.delta);
  ++steps_;
  if (!out.accepted) return out;
  for (const auto &h : checks_.hits(q)) {
    int d = Incidence::delta(h, op.a, op.b);
    if (!d) continue;
    uint8_t &k = charges_[h.word];
    num_anyons_ -= k != 0;
    k = static_cast<uint8_t>((k + d) & 3);
    num_anyons_ += k != 0;
  }
  // label_k = (L_k, F); adding Z^a X^b on q adds (L_k restricted to q, Z^a X^b).
  for (const auto &h : logicals_.hits(q)) {
    labels_[h.word] = static_cast<uint8_t>((labels_[h.word] + Incidence::delta(h, op.a, op.b)) & 3);
  }
  frame_.apply(q, op);
  return out;
}

MetropolisOutcome MetropolisChain::step(Rng &rng) {
  uint64_t qubit = uniform_below(rng, 2 * active_.size());
  int q = active_[qubit / 2];
  QuditOp op = draw_event(rng);
  return propose(q, op, uniform01(rng));
}

std::pair<ErrorFrame, MetropolisOutcome> metropolis_step(const KagomeCode &code,
                                                         const ThermalParams &params,
                                                         const ErrorFrame &frame, Rng &rng) {
  MetropolisChain chain(code, params, frame);
  auto out = chain.step(rng);
  return {chain.frame(), out};
}

}  // namespace z4k
