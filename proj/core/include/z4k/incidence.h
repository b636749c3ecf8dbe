#ifndef Z4K_INCIDENCE_H
#define Z4K_INCIDENCE_H

#include <cstdint>
#include <span>
#include <vector>

#include "z4k/kagome.h"

namespace z4k {

/// Per-qudit view of a list of sparse words: for every qudit, which words act
/// on it and with which exponents. Used to update charges and logical labels
/// from single-qudit events in O(1).
class Incidence {
 public:
  struct Hit {
    int word;
    uint8_t a;  // Z exponent of the word on this qudit
    uint8_t b;  // X exponent
  };

  Incidence() = default;
  Incidence(size_t num_qudits, const std::vector<SparseWord> &words);

  size_t num_words() const { return num_words_; }
  std::span<const Hit> hits(int q) const {
    return {hits_.data() + offset_[q], hits_.data() + offset_[q + 1]};
  }

  /// Commutation exponent (word, Z^a X^b on q) for one hit.
  static int delta(const Hit &h, int a, int b) { return (h.a * b - h.b * a) & 3; }

 private:
  size_t num_words_ = 0;
  std::vector<uint32_t> offset_;
  std::vector<Hit> hits_;
};

Incidence check_incidence(const KagomeCode &code);
Incidence logical_incidence(const KagomeCode &code);

/// Active qudits in increasing order.
std::vector<int> active_qudits(const KagomeCode &code);

}  // namespace z4k

#endif
