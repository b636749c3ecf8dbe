#ifndef Z4K_CODE_ANALYSIS_H
#define Z4K_CODE_ANALYSIS_H

#include <optional>
#include <string>
#include <vector>

#include "z4k/kagome.h"
#include "z4k/z4_linalg.h"

namespace z4k {

/// Invariant factors of the check matrix (rows: checks, symplectic columns
/// over active qudits) or of the full E/M generator list when `all_generators`.
SmithForm generator_smith(const KagomeCode &code, bool all_generators = false);

/// Number of logical qudits, n_active - rank, valid when every invariant
/// factor is a unit.
int logical_qudit_count(const KagomeCode &code);

/// Multiplies `op` by powers of the symplectic pairs (basis[2k], basis[2k+1])
/// so that it commutes with each of them.
PhasedPauli symplectic_clean(PhasedPauli op, const std::vector<PhasedPauli> &pairs);

/// Some operator on active qudits commuting with every check whose
/// commutation exponents with `against` equal `labels`.
std::optional<PhasedPauli> solve_centralizer(const KagomeCode &code,
                                             const std::vector<PhasedPauli> &against,
                                             const std::vector<int> &labels);

/// Commutation exponents with each installed logical, in basis order.
std::vector<int> logical_labels(const KagomeCode &code, const PhasedPauli &op);

/// Checks that the installed basis has the canonical symplectic form and that
/// every logical commutes with every check. Returns an error message or "".
std::string validate_logical_basis(const KagomeCode &code);

}  // namespace z4k

#endif
