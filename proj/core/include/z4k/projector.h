#ifndef Z4K_PROJECTOR_H
#define Z4K_PROJECTOR_H

#include <unordered_map>
#include <utility>
#include <vector>

#include "z4k/cyclotomic.h"
#include "z4k/phased_pauli.h"

namespace z4k {

/// Finite linear combination of Pauli words with exact coefficients in Z[z].
/// Keys always carry phase exponent 0; phases are folded into the coefficients.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(const PhasedPauli &term);

  void add(const PhasedPauli &term, const Cyclo8 &coeff = Cyclo8(1));
  PauliSum operator*(const PauliSum &rhs) const;

  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }
  Cyclo8 coefficient(const PhasedPauli &word) const;
  const std::unordered_map<PhasedPauli, Cyclo8> &terms() const { return terms_; }

 private:
  std::unordered_map<PhasedPauli, Cyclo8> terms_;
};

/// 4 * P_A^(k) = sum_m omega^(-k m) A^m, i.e. the eigenprojector of A for
/// eigenvalue omega^k scaled by 4. A must satisfy A^4 = 1.
PauliSum scaled_projector(const PhasedPauli &a, int k);

struct SectorPhase {
  int g = 0;              // eigenvalue omega^g of the reference operator
  bool annihilated = false;
  int phase_exp = 0;      // Z8 exponent, valid when !annihilated
  double magnitude = 0;   // |proportionality factor|
};

/// Evaluates prod_i P_{A_i}^(k_i) (leftmost factor applied last) and reports,
/// for each eigenvalue omega^g of `gamma`, the factor lambda_g with
///   O P_gamma^(g) = lambda_g P_{A_last}^(k_last) P_gamma^(g).
/// Throws if gamma does not commute with the boundary operators, if any
/// operator has A^4 != 1, or if a sector is not proportional.
std::vector<SectorPhase> projector_sandwich(const std::vector<std::pair<PhasedPauli, int>> &seq,
                                            const PhasedPauli &gamma);

}  // namespace z4k

#endif
