#ifndef Z4K_DISTANCE_H
#define Z4K_DISTANCE_H

#include <optional>
#include <string>
#include <vector>

#include "z4k/kagome.h"

namespace z4k {

struct DistanceResult {
  int weight = -1;                     // weight of the verified witness
  std::optional<PhasedPauli> witness;  // zero syndrome, labels of the target class
  long states_visited = 0;
};

/// Minimum weight over the class of the named basis logical.
///
/// The search walks anyon configurations of at most two adjacent charges on
/// the check graph, tracking commutation labels with the logical basis:
/// closed walks through anchors next to the support of a conjugate logical,
/// and open walks that start and end in charge-free configurations (strings
/// absorbed on defect lines). Every candidate is rebuilt and verified, so the
/// result is always an upper bound attained by a real operator.
DistanceResult code_distance(const KagomeCode &code, const std::string &logical_name);

/// Same for an arbitrary label vector (commutation exponents with the basis).
DistanceResult class_distance(const KagomeCode &code, const std::vector<int> &labels,
                              const std::optional<PhasedPauli> &seed = std::nullopt);

/// Exhaustive search over connected supports of size <= max_weight; each
/// support is tested with a Z4 linear solve. Returns weight -1 if nothing is
/// found within the bound.
DistanceResult brute_force_distance(const KagomeCode &code, const std::string &logical_name,
                                    int max_weight);

}  // namespace z4k

#endif
