#ifndef Z4K_CLIFFORD_H
#define Z4K_CLIFFORD_H

#include <array>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "z4k/phased_pauli.h"

namespace z4k {

/// Conjugation action U P U^dagger of an n-qudit Clifford, stored as the exact
/// images (with Z8 phases) of every Z_i and X_i.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  explicit CliffordTableau(int n);  // identity

  int n() const { return n_; }
  const PhasedPauli &image_z(int i) const { return z_[i]; }
  const PhasedPauli &image_x(int i) const { return x_[i]; }
  void set_image_z(int i, const PhasedPauli &p) { z_[i] = p; }
  void set_image_x(int i, const PhasedPauli &p) { x_[i] = p; }

  PhasedPauli conjugate(const PhasedPauli &p) const;

  /// Tableau of `gate` acting after this one; the gate acts on `qudits`
  /// (gate.n() of them) of this register.
  CliffordTableau then(const CliffordTableau &gate, const std::vector<int> &qudits) const;
  /// Composition: `next` applied after *this on the same register.
  CliffordTableau then(const CliffordTableau &next) const;

  /// 2n x 2n exponent matrix; column 2i (2i+1) is the image of Z_i (X_i) as
  /// (a_1, b_1, ..., a_n, b_n) with Z^a X^b per qudit.
  std::vector<std::vector<int>> matrix() const;

  /// Empty string when the images satisfy the commutation relations and lie
  /// in the orbit of X (phase exponent parity equals sum a_i b_i, at least one
  /// odd exponent); otherwise a description of the first violation.
  std::string validate() const;

  bool operator==(const CliffordTableau &o) const { return n_ == o.n_ && z_ == o.z_ && x_ == o.x_; }
  bool operator!=(const CliffordTableau &o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<PhasedPauli> z_, x_;
};

/// Dense unitaries of the library gates: S, T, Z, X, H (one qudit) and C_Z,
/// C_X, SWAP (two qudits, qudit 0 is the control / most significant).
Eigen::MatrixXcd gate_unitary(const std::string &name);
/// Reads the conjugation action off a unitary on n <= 2 qudits; throws if
/// the unitary is not Clifford.
CliffordTableau tableau_from_unitary(const Eigen::MatrixXcd &u, int n);

/// Exact tableau of a library gate; also accepts "C_st:s,t".
CliffordTableau gate_tableau(const std::string &name);
/// C_st = S_1^{st} C_X^s C_Z^t, so that X_1 -> w^{st/2} X_1 X_2^s Z_2^t.
CliffordTableau controlled_st_tableau(int s, int t);

enum class GateKind { S, T, Z, CZ };

/// One generator: single-qudit gates act on q, CZ on (q, q+1).
struct Gate {
  GateKind kind;
  int q;
  bool operator==(const Gate &o) const { return kind == o.kind && q == o.q; }
};

/// Generators in time order (first element is applied first).
using GateWord = std::vector<Gate>;

CliffordTableau evaluate(const GateWord &word, int n);
std::string to_string(const GateWord &word);
/// Inverse word: reversed, each generator raised to order - 1.
GateWord inverse(const GateWord &word);

/// 2x2 matrix over Z4 in row-major order {m00, m01, m10, m11}; columns are the
/// images of Z and X in (a, b) coordinates.
using Mat2 = std::array<int, 4>;

Mat2 single_qudit_matrix(const CliffordTableau &t);
/// Same matrix with the rows ordered (X exponent, Z exponent), the layout in
/// which S and T read [[0,1],[1,1]] and [[-1,1],[1,0]].
Mat2 display_matrix(const Mat2 &m);
Mat2 mat2_mul(const Mat2 &a, const Mat2 &b);
int mat2_det(const Mat2 &m);

/// All 2x2 matrices over Z4 with determinant 1.
std::vector<Mat2> enumerate_sl2z4();

/// Breadth-first search from the identity with generators M(S), M(T).
/// Each matrix maps to a shortest word in time order, e.g. "S", "TS".
std::map<Mat2, std::string> word_search();
/// Word of S and T gates on qudit q realising the exponent matrix m.
GateWord single_qudit_word(const Mat2 &m, int q);

/// Word equal by conjugation to the target (so equal up to a global phase),
/// using only S, T, Z and nearest-neighbour C_Z. Throws on invalid input.
GateWord synthesize(const CliffordTableau &target);

/// A valid tableau made by composing `depth` random library gates.
CliffordTableau random_tableau(int n, int depth, std::mt19937_64 &rng);

enum class PauliOrbit { Identity, Even, OddOdd, Mixed };

/// Spectral class: Identity for scalar words, Even when every exponent is
/// even (eigenvalues +-c), otherwise OddOdd when the fourth power is -1
/// (half-integer powers of omega) and Mixed when it is +1.
PauliOrbit classify_pauli_orbit(const PhasedPauli &p);
std::string to_string(PauliOrbit o);

}  // namespace z4k

#endif
