#ifndef Z4K_VERIFY_H
#define Z4K_VERIFY_H

#include <cstdint>
#include <string>
#include <vector>

namespace z4k {

class KagomeCode;

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckLine> lines;

  bool passed() const;
  /// One "PASS|FAIL name: detail" line per check.
  std::string text() const;
};

struct VerifyOptions {
  uint64_t seed = 20240601;
  int clifford_samples = 1000;
  int clifford_max_qudits = 3;
  int matching_graphs = 1000;
  int matching_max_nodes = 12;
  std::vector<int> code_sizes{4, 6, 8};
  std::vector<int> defect_sizes{8, 12};
};

/// Structural checks of a built code: pairwise commutation of generators and
/// defect terms, plaquette incidence, products of the S and R sets, the
/// generator rank (defect-free only) and the logical algebra.
std::vector<CheckLine> validate_code(const KagomeCode &code);

const std::vector<std::string> &verify_suites();

/// Suites: perturbation, braiding, clifford, matching, code. Throws
/// std::invalid_argument for an unknown suite.
VerifyReport run_verify(const std::string &suite, const VerifyOptions &opts = {});

}  // namespace z4k

#endif
