#include <stdexcept>

#include "z4k/code_analysis.h"
#include "z4k/distance.h"
#include "z4k/kagome.h"

namespace z4k {

namespace {

bool is_clean(const KagomeCode &code, const PhasedPauli &op) {
  for (size_t q = 0; q < op.size(); ++q) {
    if (!code.active(static_cast<int>(q)) && (op.z(q) | op.x(q))) return false;
  }
  for (const auto &c : code.checks()) {
    if (commutation_exponent(c.word, op)) return false;
  }
  return true;
}

}  // namespace

KagomeCode KagomeCode::build_with_defects(int L) { return build_with_defects(L, DefectLayout{}); }

KagomeCode KagomeCode::build_with_defects(int L, const DefectLayout &layout) {
  const bool allow_small = layout.allow_small;
  int length = layout.length;
  if (!allow_small && (L % 4 || L < 8)) {
    throw std::invalid_argument("defect code needs L divisible by 4 and at least 8");
  }
  if (L % 2 || L < 4) throw std::invalid_argument("L must be even and at least 4");
  if (length < 0) length = L / 2 + 1;
  KagomeCode code(L);
  const int i0 = L / 2, j0 = 0;
  code.add_defect_line(i0, j0, length, layout.bottom_left_first[0]);
  auto [di, dj] = layout.offset.value_or(std::pair<int, int>{0, L / 2});
  code.add_defect_line(i0 + di, j0 + dj, length, layout.bottom_left_first[1]);
  const auto &lat = code.lat_;

  int row = -1, column = -1;
  for (int r = L - 1; r >= 0 && row < 0; --r) {
    if (is_clean(code, torus_logical_z1(lat, r)) && is_clean(code, torus_logical_x2(lat, r))) row = r;
  }
  for (int c = 0; c < L && column < 0; ++c) {
    int cc = (i0 + 1 + c) % L;
    if (is_clean(code, torus_logical_x1(lat, cc)) && is_clean(code, torus_logical_z2(lat, cc))) column = cc;
  }
  if (row < 0 || column < 0) throw std::runtime_error("no clean row or column for torus logicals");
  std::vector<PhasedPauli> torus = {torus_logical_z1(lat, row), torus_logical_x1(lat, column),
                                    torus_logical_z2(lat, column), torus_logical_x2(lat, row)};

  // Z~_L: product of the line-A triangle stabilizers.
  PhasedPauli zl(lat.num_qudits());
  for (auto [h, t] : code.lines_[0].pentagons) zl *= code.M_pauli(t);
  zl.set_phase_exp(0);
  if (!is_clean(code, zl)) throw std::logic_error("line loop operator does not commute with checks");
  zl = symplectic_clean(zl, torus);
  zl.set_phase_exp(0);

  std::vector<PhasedPauli> against = torus;
  against.push_back(zl);
  auto xl = solve_centralizer(code, against, {0, 0, 0, 0, 1});
  if (!xl) throw std::runtime_error("no operator conjugate to the line loop");

  code.logicals_ = {{"Z1", torus[0]}, {"X1", torus[1]}, {"Z2", torus[2]},
                    {"X2", torus[3]}, {"ZL", zl},       {"XL", *xl}};
  std::string err = validate_logical_basis(code);
  if (!err.empty()) throw std::logic_error("logical basis: " + err);

  // Install the lightest representatives the search finds.
  for (const char *name : {"XL", "ZL"}) {
    auto r = code_distance(code, name);
    if (r.witness) code.set_logical(name, *r.witness);
  }
  err = validate_logical_basis(code);
  if (!err.empty()) throw std::logic_error("logical basis after minimisation: " + err);
  return code;
}

}  // namespace z4k
