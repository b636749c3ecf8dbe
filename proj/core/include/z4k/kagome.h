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

#ifndef Z4K_KAGOME_H
#define Z4K_KAGOME_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z4k/phased_pauli.h"

namespace z4k {

// Geometry
// --------
// Bravais vectors (2,0) and (1,sqrt3). Cell (i,j) holds three sites:
//   a at the cell origin, b at origin + (1,0), c at origin + (1/2, sqrt3/2).
// up(i,j)   = {a(i,j), b(i,j), c(i,j)}
// down(i,j) = {b(i,j), a(i+1,j), c(i+1,j-1)}
// hex(i,j) is centred at origin + (3/2, sqrt3/2); its corners, anticlockwise
// from the top-right, are
//   r = b(i,j+1), s = a(i,j+1), t = c(i,j), u = b(i,j), v = a(i+1,j), w = c(i+1,j).
// All indices are periodic mod L.

enum class Site : uint8_t { A = 0, B = 1, C = 2 };

struct SiteOp {
  int q;
  uint8_t a;  // Z exponent
  uint8_t b;  // X exponent
};
using SparseWord = std::vector<SiteOp>;

PhasedPauli to_pauli(const SparseWord &w, size_t n, int phase_exp = 0);
SparseWord to_sparse(const PhasedPauli &p);
/// commutation_exponent(w, p) for a sparse w.
int commutation_exponent(const SparseWord &w, const PhasedPauli &p);
int commutation_exponent(const SparseWord &w, const SparseWord &v);

class KagomeLattice {
 public:
  explicit KagomeLattice(int L);

  int L() const { return L_; }
  int num_qudits() const { return 3 * L_ * L_; }
  int num_hexagons() const { return L_ * L_; }
  int num_triangles() const { return 2 * L_ * L_; }

  int wrap(int i) const { return ((i % L_) + L_) % L_; }
  int cell(int i, int j) const { return wrap(i) * L_ + wrap(j); }
  int qudit(int i, int j, Site s) const { return 3 * cell(i, j) + static_cast<int>(s); }
  int hexagon(int i, int j) const { return cell(i, j); }
  int up(int i, int j) const { return cell(i, j); }
  int down(int i, int j) const { return L_ * L_ + cell(i, j); }
  bool is_up(int t) const { return t < L_ * L_; }

  std::pair<int, int> cell_of_qudit(int q) const { return {q / 3 / L_, q / 3 % L_}; }
  Site site_of_qudit(int q) const { return static_cast<Site>(q % 3); }
  std::pair<int, int> cell_of_hexagon(int h) const { return {h / L_, h % L_}; }
  std::pair<int, int> cell_of_triangle(int t) const {
    int c = t % (L_ * L_);
    return {c / L_, c % L_};
  }

  /// Corners r, s, t, u, v, w.
  std::array<int, 6> hex_corners(int h) const;
  std::array<int, 3> triangle_corners(int t) const;
  std::array<int, 2> hexagons_of_qudit(int q) const { return qudit_hex_[q]; }
  std::array<int, 2> triangles_of_qudit(int q) const { return qudit_tri_[q]; }

  /// The triangle sharing the r-w edge (top-right) or t-u edge (bottom-left).
  int top_right_triangle(int h) const;
  int bottom_left_triangle(int h) const;

  /// Cartesian position of a site in the unwrapped unit cell.
  std::pair<double, double> position(int q) const;

 private:
  int L_;
  std::vector<std::array<int, 2>> qudit_hex_;
  std::vector<std::array<int, 2>> qudit_tri_;
};

enum class CheckKind : uint8_t { Hexagon, Triangle, Pentagon };

/// One active stabilizer generator used for syndromes. Words are
///   hexagon:  E_h
///   triangle: M_t^dagger
///   pentagon: E_h M_t^dagger  (= R^dagger for the merged pair)
/// so that the charge of a frame F at a check W is commutation_exponent(W, F).
struct Check {
  CheckKind kind;
  int hexagon = -1;
  int triangle = -1;
  SparseWord word;
};

enum class DefectTerm : uint8_t { Y, XdagZ };

struct DefectLine {
  std::vector<int> qudits_on_line;
  std::vector<DefectTerm> term_types;
  /// Merged (hexagon, triangle) pairs in order along the line; the first and
  /// last are the endpoint regions.
  std::vector<std::pair<int, int>> pentagons;
  std::vector<int> removed_stabilizers;  // hexagons whose S_P is dropped
  std::vector<PhasedPauli> pentagon_stabilizers;  // retained R_P
  /// The strong single-qudit term on qudits_on_line[k].
  PhasedPauli term(size_t k, size_t n) const;
};

struct NamedLogical {
  std::string name;
  PhasedPauli op;
};

struct DefectLayout {
  int length = -1;                                // qudits per line; default L/2+1
  std::optional<std::pair<int, int>> offset;      // second line relative to the first; default (0, L/2)
  std::array<bool, 2> bottom_left_first{true, true};
  bool allow_small = false;
};

struct StabilizerSets {
  std::vector<PhasedPauli> S;
  std::vector<PhasedPauli> R;
};

class KagomeCode {
 public:
  /// Defect-free code; L even and >= 4.
  static KagomeCode build(int L);

  /// Two parallel defect lines with the full logical basis installed.
  /// Requires L % 4 == 0 and L >= 8 unless layout.allow_small is set.
  static KagomeCode build_with_defects(int L, const struct DefectLayout &layout);
  static KagomeCode build_with_defects(int L);

  const KagomeLattice &lattice() const { return lat_; }
  int L() const { return lat_.L(); }
  int num_qudits() const { return lat_.num_qudits(); }
  bool active(int q) const { return active_[q]; }
  int num_active() const;
  bool has_defects() const { return !lines_.empty(); }

  SparseWord E(int h) const;
  SparseWord M(int t) const;
  PhasedPauli E_pauli(int h) const { return to_pauli(E(h), num_qudits()); }
  PhasedPauli M_pauli(int t) const { return to_pauli(M(t), num_qudits()); }

  const std::vector<int> &phi() const { return phi_; }
  const std::vector<Check> &checks() const { return checks_; }
  const std::vector<DefectLine> &defect_lines() const { return lines_; }

  /// Basis in symplectic pairs: Z1, X1, Z2, X2 and, with defects, ZL, XL.
  const std::vector<NamedLogical> &logicals() const { return logicals_; }
  const PhasedPauli &logical(const std::string &name) const;
  int logical_index(const std::string &name) const;
  void set_logical(const std::string &name, const PhasedPauli &op);

  /// Adds a line whose first pentagon is (hex(i,j), top-right triangle), or
  /// (hex(i,j+1), bottom-left triangle) when bottom_left_first; the line runs
  /// along the (-1,+1) cell diagonal. Throws on overlap.
  void add_defect_line(int anchor_i, int anchor_j, int length, bool bottom_left_first = false);

  /// Recomputes checks from the current line set; called by add_defect_line.
  void rebuild_checks();

  /// Deterministic text description of plaquettes, generators and logicals.
  std::string export_text() const;

 private:
  explicit KagomeCode(int L);

  KagomeLattice lat_;
  std::vector<char> active_;
  std::vector<int> phi_;
  std::vector<int> hex_line_;  // line index owning the hexagon, or -1
  std::vector<int> tri_line_;
  std::vector<DefectLine> lines_;
  std::vector<Check> checks_;
  std::vector<NamedLogical> logicals_;

  friend class LogicalInstaller;
};

/// S_p = E_p for all hexagons not on a line, and R_p = M_p E_{phi^-1(p)}^dagger
/// for p in Im(phi), M_p otherwise. With defects, the merged pentagon pairs
/// appear only in R.
StabilizerSets transform_stabilizers(const KagomeCode &code);

/// Free-function form of KagomeCode::add_defect_line.
KagomeCode add_defect_line(const KagomeCode &code, std::pair<int, int> anchor, int length,
                           bool bottom_left_first = false);

/// Defect-free representatives on the given row / column.
PhasedPauli torus_logical_z1(const KagomeLattice &lat, int row);
PhasedPauli torus_logical_x1(const KagomeLattice &lat, int column);
PhasedPauli torus_logical_z2(const KagomeLattice &lat, int column);
PhasedPauli torus_logical_x2(const KagomeLattice &lat, int row);

/// Charge of `frame` at every check, in checks() order.
std::vector<int> syndrome_of(const KagomeCode &code, const PhasedPauli &frame);

}  // namespace z4k

#endif
