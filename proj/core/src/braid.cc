#include "z4k/braid.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "z4k/clifford.h"
#include "z4k/dense.h"
#include "z4k/projector.h"

namespace z4k {

namespace {

constexpr size_t kClusterQudits = 4;

cplx omega_half(int k) { return eighth_root(k); }

Eigen::MatrixXcd diagonal_two_qudit(int (*phase)(int, int)) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(16, 16);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) m(4 * g + h, 4 * g + h) = omega_half(phase(g, h));
  return m;
}

int lambda_phase(int g, int h) { return 2 * g * h; }

int pair_braid_phase(int g, int h) { return monodromy_phase(Species::psi, g, Species::psi, h); }

PhasedPauli product(std::initializer_list<std::array<int, 3>> factors, int phase) {
  PhasedPauli p(kClusterQudits);
  p.set_phase_exp(phase);
  for (const auto &[q, a, b] : factors) p *= PhasedPauli::single(kClusterQudits, q, a, b);
  return p;
}

IdentityCheck check(std::string name, const Eigen::MatrixXcd &lhs, const Eigen::MatrixXcd &rhs, double tol) {
  IdentityCheck c;
  c.name = std::move(name);
  c.residual = (lhs - rhs).norm();
  c.passed = c.residual <= tol;
  return c;
}

}  // namespace

LogicalGate gate_matrix(const std::string &name) {
  if (name == "X" || name == "Z" || name == "S" || name == "T" || name == "H") {
    return {name, gate_unitary(name)};
  }
  if (name == "Htilde") {
    Eigen::MatrixXcd s = gate_unitary("S"), t = gate_unitary("T");
    return {name, s * t * s};
  }
  if (name == "Lambda" || name == "Λ") return {"Lambda", diagonal_two_qudit(lambda_phase)};
  if (name == "Lambda2" || name == "Λ²") {
    Eigen::MatrixXcd l = diagonal_two_qudit(lambda_phase);
    return {"Lambda2", l * l};
  }
  throw std::invalid_argument("unknown logical gate '" + name + "'");
}

std::vector<IdentityCheck> verify_identities(double tol) {
  const Eigen::MatrixXcd S = gate_matrix("S").matrix, T = gate_matrix("T").matrix, H = gate_matrix("H").matrix,
                         X = gate_matrix("X").matrix, Z = gate_matrix("Z").matrix,
                         Ht = gate_matrix("Htilde").matrix, L = gate_matrix("Lambda").matrix,
                         L2 = gate_matrix("Lambda2").matrix;
  const Eigen::MatrixXcd I4 = Eigen::MatrixXcd::Identity(4, 4), I16 = Eigen::MatrixXcd::Identity(16, 16);
  const cplx sqrt_i = omega_half(1);

  Eigen::MatrixXcd lambda_ref = Eigen::MatrixXcd::Zero(16, 16);
  for (int g = 0; g < 4; ++g)
    for (int h = 0; h < 4; ++h) {
      Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(16);
      ket(4 * g + h) = 1;
      lambda_ref.col(4 * g + h) = std::pow(cplx(0, 1), g * h) * ket;
    }

  std::vector<IdentityCheck> out;
  out.push_back(check("STS = TST", S * T * S, T * S * T, tol));
  out.push_back(check("STS = sqrt(i) H", S * T * S, sqrt_i * H, tol));
  out.push_back(check("sqrt(omega) H = Htilde", sqrt_i * H, Ht, tol));
  out.push_back(check("Htilde X Htilde^dag = Z", Ht * X * Ht.adjoint(), Z, tol));
  out.push_back(check("Htilde Z Htilde^dag = X^dag", Ht * Z * Ht.adjoint(), X.adjoint(), tol));
  Eigen::MatrixXcd s8 = I4, t8 = I4;
  for (int k = 0; k < 8; ++k) {
    s8 = s8 * S;
    t8 = t8 * T;
  }
  out.push_back(check("S^8 = 1", s8, I4, tol));
  out.push_back(check("T^8 = 1", t8, I4, tol));
  out.push_back(check("Lambda |g,h> = omega^(gh) |g,h>", L, lambda_ref, tol));
  out.push_back(check("Lambda2 = Lambda Lambda", L2, L * L, tol));
  out.push_back(check("pair braid = Lambda2", pair_braid_matrix(), L2, tol));
  out.push_back(check("hole braid = Lambda", hole_braid_matrix(), L, tol));
  for (const char *g : {"X", "Z", "S", "T", "H", "Htilde"}) {
    Eigen::MatrixXcd m = gate_matrix(g).matrix;
    out.push_back(check(std::string(g) + " unitary", m * m.adjoint(), I4, tol));
  }
  out.push_back(check("Lambda unitary", L * L.adjoint(), I16, tol));
  return out;
}

Species parse_species(const std::string &name) {
  if (name == "e") return Species::e;
  if (name == "m") return Species::m;
  if (name == "psi" || name == "ψ") return Species::psi;
  if (name == "r") return Species::r;
  throw std::invalid_argument("unknown anyon species '" + name + "'");
}

std::string to_string(Species s) {
  switch (s) {
    case Species::e:
      return "e";
    case Species::m:
      return "m";
    case Species::psi:
      return "psi";
    case Species::r:
      return "r";
  }
  return "?";
}

AnyonCharge anyon(Species s, int g) {
  g &= 3;
  switch (s) {
    case Species::e:
      return {g, 0};
    case Species::m:
    case Species::r:
      return {0, g};
    case Species::psi:
      return {g, g};
  }
  throw std::invalid_argument("unknown anyon species");
}

int monodromy_phase(const AnyonCharge &a, const AnyonCharge &b) { return (2 * (a.e * b.m + a.m * b.e)) & 7; }

int monodromy_phase(Species sa, int g, Species sb, int h) { return monodromy_phase(anyon(sa, g), anyon(sb, h)); }

AnyonCharge cross_defect_line(const AnyonCharge &a) { return {(-a.m) & 3, (-a.e) & 3}; }

int hole_braid_controlled_phase(int g, int h) {
  return monodromy_phase(Species::e, g, Species::m, h);
}

Eigen::MatrixXcd hole_braid_matrix() { return diagonal_two_qudit(hole_braid_controlled_phase); }

Eigen::MatrixXcd pair_braid_matrix() {
  // A psi_g pair braided around a psi_h pair; the phase table is the psi-psi monodromy.
  return diagonal_two_qudit(pair_braid_phase);
}

std::string FusionLabel::str() const { return sigma ? "sigma" : "psi" + std::to_string(psi); }

std::vector<FusionLabel> fuse(const FusionLabel &a, const FusionLabel &b) {
  if (a.sigma && b.sigma) {
    return {FusionLabel::psi_label(0), FusionLabel::psi_label(1), FusionLabel::psi_label(2),
            FusionLabel::psi_label(3)};
  }
  if (a.sigma || b.sigma) return {FusionLabel::sigma_label()};
  return {FusionLabel::psi_label(a.psi + b.psi)};
}

FusionState FusionState::operator*(const FusionState &o) const {
  FusionState out;
  out.outcomes_.clear();
  for (const auto &x : outcomes_)
    for (const auto &y : o.outcomes_)
      for (const auto &z : fuse(x, y)) out.outcomes_.push_back(z);
  std::sort(out.outcomes_.begin(), out.outcomes_.end());
  out.outcomes_.erase(std::unique(out.outcomes_.begin(), out.outcomes_.end()), out.outcomes_.end());
  return out;
}

std::string FusionState::str() const {
  std::string s;
  for (const auto &l : outcomes_) s += (s.empty() ? "" : " + ") + l.str();
  return s;
}

PhasedPauli ExchangeSpec::default_pair_term() {
  // Z on the shared cluster qudit, Z on the spectator that holds the second mode.
  return product({{{0, 1, 0}}, {{3, 1, 0}}}, 0);
}

ExchangeSpec ExchangeSpec::standard(int a, int b, int c) {
  ExchangeSpec s;
  s.a = a & 3;
  s.b = b & 3;
  s.c = c & 3;
  s.gamma = product({{{0, 1, 0}}, {{1, 0, 3}}, {{1, 1, 0}}, {{2, 1, 0}}}, 1 + 2 * s.a);
  s.pi = product({{{0, 0, 1}}, {{1, 0, 3}}, {{1, 1, 0}}, {{2, 1, 0}}}, 1 + 2 * s.b);
  s.phi = product({{{0, 0, 3}}, {{0, 1, 0}}}, 1 + 2 * s.c);
  s.pair = default_pair_term();
  return s;
}

std::string ExchangeSpec::validate() const {
  const size_t n = gamma.size();
  if (pi.size() != n || phi.size() != n || pair.size() != n) return "operators act on different registers";
  for (const auto &[name, op] : {std::pair<const char *, const PhasedPauli *>{"gamma", &gamma},
                                 {"pi", &pi},
                                 {"phi", &phi},
                                 {"pair", &pair}}) {
    if (!op->pow(4).is_identity()) return std::string(name) + "^4 is not 1";
  }
  if (commutation_exponent(gamma, pi) != 1) return "(gamma, pi) != 1";
  if (commutation_exponent(gamma, phi) != 3) return "(gamma, phi) != -1";
  if (commutation_exponent(pi, phi) != 3) return "(pi, phi) != -1";
  if (commutation_exponent(pair, gamma) != 0) return "pairing term does not commute with gamma";
  if (commutation_exponent(pair, pi) == 0 || commutation_exponent(pair, phi) == 0) {
    return "pairing term commutes with a move operator";
  }
  return {};
}

std::array<int, 4> ExchangeResult::relative() const {
  std::array<int, 4> r{};
  for (int g = 0; g < 4; ++g) r[g] = (phase[g] - phase[0]) & 7;
  return r;
}

ExchangeResult exchange_effect(const ExchangeSpec &spec) {
  std::string err = spec.validate();
  if (!err.empty()) throw std::invalid_argument("exchange spec: " + err);
  auto sectors = projector_sandwich({{spec.pair, 0}, {spec.phi, 0}, {spec.pi, 0}, {spec.pair, 0}}, spec.gamma);
  ExchangeResult out;
  for (const auto &s : sectors) {
    if (s.annihilated) {
      throw std::runtime_error("exchange annihilates gamma sector " + std::to_string(s.g));
    }
    const int g = (-s.g) & 3;
    out.phase[g] = s.phase_exp;
    out.magnitude[g] = s.magnitude;
  }
  return out;
}

bool equal_up_to_global(const std::array<int, 4> &x, const std::array<int, 4> &y) {
  for (int g = 1; g < 4; ++g) {
    if (((x[g] - x[0]) & 7) != ((y[g] - y[0]) & 7)) return false;
  }
  return true;
}

}  // namespace z4k
