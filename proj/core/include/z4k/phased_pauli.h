// Copyright 2026 The z4kagome Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef Z4K_PHASED_PAULI_H
#define Z4K_PHASED_PAULI_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace z4k {

inline int mod4(int v) { return v & 3; }
inline int mod8(int v) { return v & 7; }

/// Generalized Pauli word over n Z4 qudits with a global phase exp(i*pi*k/4).
///
/// Each qudit holds Z^a X^b in that order. The phase exponent k lives in Z8,
/// so omega^(1/2) = exp(i*pi/4) is representable.
class PhasedPauli {
 public:
  PhasedPauli() = default;
  explicit PhasedPauli(size_t num_qudits);
  PhasedPauli(std::vector<uint8_t> z, std::vector<uint8_t> x, int phase_exp = 0);

  /// Z^a X^b on qudit q of an n-qudit register.
  static PhasedPauli single(size_t n, size_t q, int a, int b, int phase_exp = 0);

  /// Parses "k:ab.ab.ab" where k is the phase exponent and each ab pair is the
  /// (z, x) exponent of one qudit, e.g. "5:11" or "0:10.03".
  static PhasedPauli parse(std::string_view text);

  size_t size() const { return z_.size(); }
  int phase_exp() const { return phase_; }
  int z(size_t q) const { return z_[q]; }
  int x(size_t q) const { return x_[q]; }
  const std::vector<uint8_t> &z_exps() const { return z_; }
  const std::vector<uint8_t> &x_exps() const { return x_; }

  void set(size_t q, int a, int b);
  void set_phase_exp(int k) { phase_ = mod8(k); }
  PhasedPauli &add_phase(int k);

  size_t weight() const;
  std::vector<size_t> support() const;
  bool is_identity_word() const;
  bool is_identity() const { return phase_ == 0 && is_identity_word(); }
  bool same_word(const PhasedPauli &other) const;

  PhasedPauli &operator*=(const PhasedPauli &rhs);
  PhasedPauli pow(int k) const;
  PhasedPauli dagger() const;

  /// Multiplies Z^a X^b onto qudit q from the right.
  void apply_right(size_t q, int a, int b);

  bool operator==(const PhasedPauli &other) const;
  bool operator!=(const PhasedPauli &other) const { return !(*this == other); }

  /// Inverse of parse().
  std::string str() const;
  /// Human readable form, listing only non-identity qudits, e.g. "w^5/2 Z1X1@0".
  std::string sparse_str() const;

 private:
  std::vector<uint8_t> z_;
  std::vector<uint8_t> x_;
  int phase_ = 0;
};

PhasedPauli operator*(const PhasedPauli &a, const PhasedPauli &b);
PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q);

/// (P,Q) = sum a_i d_i - b_i c_i mod 4, so that PQ = omega^(P,Q) QP.
int commutation_exponent(const PhasedPauli &p, const PhasedPauli &q);

/// Tensor product p (x) q.
PhasedPauli tensor(const PhasedPauli &p, const PhasedPauli &q);

size_t hash_word(const PhasedPauli &p);

enum class Axis { X, Y, Z };

struct QubitPauliEvent {
  int qubit_slot;  // 1 or 2
  Axis axis;
};

struct QuditOp {
  uint8_t a;  // Z exponent
  uint8_t b;  // X exponent
  bool operator==(const QuditOp &o) const { return a == o.a && b == o.b; }
};

/// The qudit words a single-qubit Pauli turns into after projection.
/// The slot does not affect the row. Phases are dropped.
const std::vector<QuditOp> &conversion_row(Axis axis);

/// Uniform choice from conversion_row(e.axis); `uniform` must return a value
/// in [0, n) for its argument n.
QuditOp qubit_pauli_to_qudit(const QubitPauliEvent &e,
                             const std::function<size_t(size_t)> &uniform);

template <class URBG>
QuditOp qubit_pauli_to_qudit(const QubitPauliEvent &e, URBG &rng) {
  const auto &row = conversion_row(e.axis);
  return row[rng() % row.size()];
}

enum class Parity { Odd, Even };

struct ParafermionOp {
  int index;
  PhasedPauli rep;
};

/// Jordan-Wigner image of gamma_{2i-1} (Odd) or gamma_{2i} (Even), i is 1-based.
ParafermionOp parafermion_transform(int i, Parity which, size_t n);
/// Same, addressed by the parafermion index j in 1..2n.
ParafermionOp parafermion(int j, size_t n);

}  // namespace z4k

template <>
struct std::hash<z4k::PhasedPauli> {
  size_t operator()(const z4k::PhasedPauli &p) const { return z4k::hash_word(p) ^ p.phase_exp(); }
};

#endif
