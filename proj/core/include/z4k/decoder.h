#ifndef Z4K_DECODER_H
#define Z4K_DECODER_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "z4k/incidence.h"
#include "z4k/kagome.h"

namespace z4k {

struct Anyon {
  int check;
  int charge;
};

/// Charges per check (in code.checks() order) and the nonzero ones split by
/// parity.
struct SyndromeConfig {
  std::vector<uint8_t> charges;
  std::vector<Anyon> odd;
  std::vector<Anyon> even;

  bool empty() const { return odd.empty() && even.empty(); }
  int total_charge() const;
};

SyndromeConfig syndrome_from_charges(std::vector<uint8_t> charges);
/// charge at check c = commutation_exponent(check_c, frame).
SyndromeConfig extract_syndrome(const KagomeCode &code, const PhasedPauli &frame);

/// A single-qudit word Z^a X^b on q that changes exactly two checks:
/// +du at u and -du at v.
struct Hop {
  int u;
  int v;
  int q;
  uint8_t a;
  uint8_t b;
  uint8_t du;
};

/// All-pairs hop distances on the check graph. The odd graph holds hops that
/// move an odd charge (du odd), the even graph hops that move charge 2.
class DistanceTable {
 public:
  enum Graph { kOdd = 0, kEven = 1 };

  explicit DistanceTable(const KagomeCode &code);

  int num_checks() const { return n_; }
  const std::vector<Hop> &hops() const { return hops_; }
  /// -1 when v is unreachable from u.
  int distance(int u, int v, Graph g) const {
    uint16_t d = dist_[g][static_cast<size_t>(u) * n_ + v];
    return d == kUnreachable ? -1 : d;
  }
  /// Hop indices of a shortest path from u to v.
  std::vector<int> witness(int u, int v, Graph g) const;
  /// Parity of hexagon/triangle species changes along the witness; pentagons
  /// are transparent.
  int crossing_parity(int u, int v, Graph g) const;
  /// Connected component label of a check.
  int component(int u, Graph g) const { return comp_[g][u]; }

 private:
  static constexpr uint16_t kUnreachable = 0xffff;
  int n_;
  std::vector<Hop> hops_;
  std::vector<uint8_t> species_;  // 0 hexagon, 1 triangle, 2 pentagon
  std::array<std::vector<std::vector<std::pair<int, int>>>, 2> adj_;
  std::array<std::vector<uint16_t>, 2> dist_;
  std::array<std::vector<int32_t>, 2> parent_;
  std::array<std::vector<int>, 2> comp_;
};

/// The syndrome argument is accepted for interface symmetry; the table always
/// covers all check pairs.
DistanceTable build_distance_table(const KagomeCode &code, const SyndromeConfig &syndrome = {});

struct DecodeResult {
  SparseWord correction;        // merged per qudit, qudit order
  std::vector<uint8_t> labels;  // (logical_k, correction)
  int moves = 0;                // elementary moves applied
  int odd_pairs = 0;
  int even_pairs = 0;
};

/// Two-round matching decoder. Immutable after construction; decode() may be
/// called concurrently.
class Decoder {
 public:
  explicit Decoder(const KagomeCode &code);

  const KagomeCode &code() const { return *code_; }
  const DistanceTable &table() const { return table_; }

  /// Round 1 pairs odd anyons and fuses each pair at the midpoint of its
  /// witness path; round 2 pairs the remaining charge-2 anyons. Throws if
  /// the correction does not reproduce the syndrome.
  DecodeResult decode(const SyndromeConfig &syndrome) const;

  std::vector<uint8_t> charges_of(const SparseWord &w) const;
  std::vector<uint8_t> labels_of(const SparseWord &w) const;

 private:
  const KagomeCode *code_;
  DistanceTable table_;
  Incidence checks_;
  Incidence logicals_;
};

/// Convenience wrapper that builds a Decoder.
PhasedPauli decode(const KagomeCode &code, const SyndromeConfig &syndrome);

struct Verdict {
  std::vector<std::string> names;
  std::vector<uint8_t> residual;  // (logical_k, frame * correction)
  bool failed(size_t k) const { return residual[k] != 0; }
  bool failed(const std::string &name) const;
  bool any_failed() const;
};

/// Throws std::invalid_argument if frame * correction has a nonzero syndrome.
Verdict logical_verdict(const KagomeCode &code, const PhasedPauli &frame, const PhasedPauli &correction);

}  // namespace z4k

#endif
