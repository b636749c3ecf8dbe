#ifndef Z4K_BRAID_H
#define Z4K_BRAID_H

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "z4k/phased_pauli.h"

namespace z4k {

struct LogicalGate {
  std::string name;
  Eigen::MatrixXcd matrix;  // 4x4, or 16x16 for two-qudit gates (first qudit is the major index)
};

/// X, Z, S, T, H, Htilde (= STS), Lambda and Lambda2. "Λ" and "Λ²" are accepted
/// as aliases.
LogicalGate gate_matrix(const std::string &name);

struct IdentityCheck {
  std::string name;
  double residual = 0;
  bool passed = false;
};

/// Frobenius-norm residuals of the gate identities; passed iff residual <= tol.
std::vector<IdentityCheck> verify_identities(double tol = 1e-12);

// Anyons ---------------------------------------------------------------------

enum class Species { e, m, psi, r };

Species parse_species(const std::string &name);
std::string to_string(Species s);

/// Charge/flux content (e, m) of a D(Z4) anyon: e_g = (g,0), m_g = (0,g),
/// psi_g = (g,g), r_g = (0,g).
struct AnyonCharge {
  int e = 0;
  int m = 0;
  bool operator==(const AnyonCharge &o) const { return e == o.e && m == o.m; }
};

AnyonCharge anyon(Species s, int g);

/// Z8 exponent (units of omega^(1/2)) of a full clockwise monodromy.
int monodromy_phase(const AnyonCharge &a, const AnyonCharge &b);
int monodromy_phase(Species sa, int g, Species sb, int h);

/// Passing a defect line maps (e, m) -> (-m, -e); m_g becomes e_{-g}.
AnyonCharge cross_defect_line(const AnyonCharge &a);

/// Phase of braiding an e_g hole around an m_h hole, as a Z8 exponent.
int hole_braid_controlled_phase(int g, int h);

/// Diagonal two-qudit operators assembled from the phase tables above.
Eigen::MatrixXcd hole_braid_matrix();
Eigen::MatrixXcd pair_braid_matrix();

/// A label of the parafermion anyon model: psi_g or sigma.
struct FusionLabel {
  bool sigma = false;
  int psi = 0;

  static FusionLabel vacuum() { return {}; }
  static FusionLabel psi_label(int g) { return {false, g & 3}; }
  static FusionLabel sigma_label() { return {true, 0}; }

  bool operator==(const FusionLabel &o) const { return sigma == o.sigma && (sigma || psi == o.psi); }
  bool operator<(const FusionLabel &o) const {
    return sigma != o.sigma ? !sigma : (!sigma && psi < o.psi);
  }
  std::string str() const;
};

/// All outcomes of a x b, sorted and without repeats.
std::vector<FusionLabel> fuse(const FusionLabel &a, const FusionLabel &b);

/// A set of possible total charges of a group of anyons.
class FusionState {
 public:
  FusionState() : outcomes_{FusionLabel::vacuum()} {}
  explicit FusionState(const FusionLabel &l) : outcomes_{l} {}

  FusionState operator*(const FusionState &o) const;
  FusionState &operator*=(const FusionState &o) { return *this = *this * o; }
  bool operator==(const FusionState &o) const { return outcomes_ == o.outcomes_; }

  const std::vector<FusionLabel> &outcomes() const { return outcomes_; }
  bool definite() const { return outcomes_.size() == 1; }
  std::string str() const;

 private:
  std::vector<FusionLabel> outcomes_;
};

// Exchange of two parafermion modes ------------------------------------------

/// Operators on a three-qudit cluster plus one spectator qudit that carries the
/// far end of the pairing term.
///   gamma = w^((1+2a)/2) Z1 X2^dag Z2 Z3   parity of the exchanged pair
///   pi    = w^((1+2b)/2) X1 X2^dag Z2 Z3   first move
///   phi   = w^((1+2c)/2) X1^dag Z1         second move
///   pair  = the term that pairs the two intermediate modes
struct ExchangeSpec {
  int a = 2, b = 2, c = 2;
  PhasedPauli gamma, pi, phi, pair;

  static ExchangeSpec standard(int a, int b, int c);
  static ExchangeSpec standard() { return standard(2, 2, 2); }
  static PhasedPauli default_pair_term();

  /// Empty when all invariants hold, otherwise a description of the first
  /// violation.
  std::string validate() const;
};

struct ExchangeResult {
  /// phase[g] is the Z8 exponent acquired by a psi_g occupation of the pair,
  /// where psi_g is the eigenvalue omega^(-g) of gamma.
  std::array<int, 4> phase{};
  std::array<double, 4> magnitude{};

  /// Phases relative to psi_0.
  std::array<int, 4> relative() const;
};

/// Evaluates P_pair P_phi P_pi P_pair sector by sector. Throws if the spec is
/// invalid or any sector is annihilated.
ExchangeResult exchange_effect(const ExchangeSpec &spec);

/// True iff the phases x and y agree up to a global phase.
bool equal_up_to_global(const std::array<int, 4> &x, const std::array<int, 4> &y);

}  // namespace z4k

#endif
