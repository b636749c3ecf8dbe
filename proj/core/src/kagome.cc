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

#include "z4k/kagome.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace z4k {

PhasedPauli to_pauli(const SparseWord &w, size_t n, int phase_exp) {
  PhasedPauli p(n);
  for (const auto &op : w) {
    p.set(op.q, p.z(op.q) + op.a, p.x(op.q) + op.b);
  }
  p.set_phase_exp(phase_exp);
  return p;
}

SparseWord to_sparse(const PhasedPauli &p) {
  SparseWord w;
  for (size_t q = 0; q < p.size(); ++q) {
    if (p.z(q) | p.x(q)) {
      w.push_back({static_cast<int>(q), static_cast<uint8_t>(p.z(q)), static_cast<uint8_t>(p.x(q))});
    }
  }
  return w;
}

int commutation_exponent(const SparseWord &w, const PhasedPauli &p) {
  int acc = 0;
  for (const auto &op : w) acc += op.a * p.x(op.q) - op.b * p.z(op.q);
  return mod4(acc);
}

int commutation_exponent(const SparseWord &w, const SparseWord &v) {
  std::map<int, std::pair<int, int>> m;
  for (const auto &op : v) m[op.q] = {op.a, op.b};
  int acc = 0;
  for (const auto &op : w) {
    auto it = m.find(op.q);
    if (it != m.end()) acc += op.a * it->second.second - op.b * it->second.first;
  }
  return mod4(acc);
}

namespace {

SparseWord sparse_multiply(const SparseWord &u, const SparseWord &v) {
  std::map<int, std::pair<int, int>> m;
  for (const auto &op : u) {
    auto &e = m[op.q];
    e.first += op.a;
    e.second += op.b;
  }
  for (const auto &op : v) {
    auto &e = m[op.q];
    e.first += op.a;
    e.second += op.b;
  }
  SparseWord out;
  for (auto &[q, e] : m) {
    int a = mod4(e.first), b = mod4(e.second);
    if (a | b) out.push_back({q, static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
  }
  return out;
}

SparseWord sparse_dagger(const SparseWord &w) {
  SparseWord out = w;
  for (auto &op : out) {
    op.a = static_cast<uint8_t>(mod4(-op.a));
    op.b = static_cast<uint8_t>(mod4(-op.b));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

KagomeLattice::KagomeLattice(int L) : L_(L) {
  if (L < 2) throw std::invalid_argument("lattice size must be at least 2");
  qudit_hex_.assign(num_qudits(), {-1, -1});
  qudit_tri_.assign(num_qudits(), {-1, -1});
  auto push = [](std::array<int, 2> &slot, int v) {
    if (slot[0] < 0)
      slot[0] = v;
    else
      slot[1] = v;
  };
  for (int h = 0; h < num_hexagons(); ++h) {
    for (int q : hex_corners(h)) push(qudit_hex_[q], h);
  }
  for (int t = 0; t < num_triangles(); ++t) {
    for (int q : triangle_corners(t)) push(qudit_tri_[q], t);
  }
}

std::array<int, 6> KagomeLattice::hex_corners(int h) const {
  auto [i, j] = cell_of_hexagon(h);
  return {qudit(i, j + 1, Site::B), qudit(i, j + 1, Site::A), qudit(i, j, Site::C),
          qudit(i, j, Site::B),     qudit(i + 1, j, Site::A), qudit(i + 1, j, Site::C)};
}

std::array<int, 3> KagomeLattice::triangle_corners(int t) const {
  auto [i, j] = cell_of_triangle(t);
  if (is_up(t)) return {qudit(i, j, Site::A), qudit(i, j, Site::B), qudit(i, j, Site::C)};
  return {qudit(i, j, Site::B), qudit(i + 1, j, Site::A), qudit(i + 1, j - 1, Site::C)};
}

int KagomeLattice::top_right_triangle(int h) const {
  auto [i, j] = cell_of_hexagon(h);
  return down(i, j + 1);
}

int KagomeLattice::bottom_left_triangle(int h) const {
  auto [i, j] = cell_of_hexagon(h);
  return up(i, j);
}

std::pair<double, double> KagomeLattice::position(int q) const {
  auto [i, j] = cell_of_qudit(q);
  const double s3 = std::sqrt(3.0);
  double x = 2.0 * i + 1.0 * j, y = s3 * j;
  switch (site_of_qudit(q)) {
    case Site::A:
      break;
    case Site::B:
      x += 1.0;
      break;
    case Site::C:
      x += 0.5;
      y += s3 / 2;
      break;
  }
  return {x, y};
}

// ---------------------------------------------------------------------------

PhasedPauli DefectLine::term(size_t k, size_t n) const {
  size_t q = qudits_on_line.at(k);
  if (term_types.at(k) == DefectTerm::Y) {
    // omega^(5/2) X^dagger Z^dagger
    PhasedPauli p = PhasedPauli::single(n, q, 0, 3) * PhasedPauli::single(n, q, 3, 0);
    return p.add_phase(5);
  }
  return PhasedPauli::single(n, q, 0, 3) * PhasedPauli::single(n, q, 1, 0);
}

KagomeCode::KagomeCode(int L) : lat_(L) {
  active_.assign(lat_.num_qudits(), 1);
  phi_.resize(lat_.num_hexagons());
  for (int h = 0; h < lat_.num_hexagons(); ++h) phi_[h] = lat_.top_right_triangle(h);
  hex_line_.assign(lat_.num_hexagons(), -1);
  tri_line_.assign(lat_.num_triangles(), -1);
}

KagomeCode KagomeCode::build(int L) {
  if (L < 4 || L % 2) throw std::invalid_argument("L must be even and at least 4");
  KagomeCode code(L);
  code.rebuild_checks();
  code.logicals_ = {{"Z1", torus_logical_z1(code.lat_, 0)},
                    {"X1", torus_logical_x1(code.lat_, 0)},
                    {"Z2", torus_logical_z2(code.lat_, 0)},
                    {"X2", torus_logical_x2(code.lat_, 0)}};
  return code;
}

int KagomeCode::num_active() const {
  return static_cast<int>(std::count(active_.begin(), active_.end(), 1));
}

SparseWord KagomeCode::E(int h) const {
  auto c = lat_.hex_corners(h);
  // X_r X+_s X_t X+_u X_v X+_w
  SparseWord w;
  for (int k = 0; k < 6; ++k) w.push_back({c[k], 0, static_cast<uint8_t>(k % 2 ? 3 : 1)});
  std::sort(w.begin(), w.end(), [](const SiteOp &x, const SiteOp &y) { return x.q < y.q; });
  return w;
}

SparseWord KagomeCode::M(int t) const {
  auto c = lat_.triangle_corners(t);
  uint8_t a = lat_.is_up(t) ? 1 : 3;
  SparseWord w;
  for (int q : c) w.push_back({q, a, 0});
  std::sort(w.begin(), w.end(), [](const SiteOp &x, const SiteOp &y) { return x.q < y.q; });
  return w;
}

const PhasedPauli &KagomeCode::logical(const std::string &name) const {
  return logicals_.at(logical_index(name)).op;
}

int KagomeCode::logical_index(const std::string &name) const {
  for (size_t k = 0; k < logicals_.size(); ++k) {
    if (logicals_[k].name == name) return static_cast<int>(k);
  }
  throw std::out_of_range("no logical named '" + name + "'");
}

void KagomeCode::set_logical(const std::string &name, const PhasedPauli &op) {
  for (auto &l : logicals_) {
    if (l.name == name) {
      l.op = op;
      return;
    }
  }
  logicals_.push_back({name, op});
}

void KagomeCode::add_defect_line(int i0, int j0, int length, bool bottom_left_first) {
  if (length < 1) throw std::invalid_argument("defect line needs at least one qudit");
  const int line_id = static_cast<int>(lines_.size());
  DefectLine line;
  const int m = length + 1;
  for (int p = 0; p < m; ++p) {
    const int s = p + (bottom_left_first ? 1 : 0);
    const int k = s / 2;
    int h, t;
    if (s % 2 == 0) {
      h = lat_.hexagon(i0 - k, j0 + k);
      t = lat_.top_right_triangle(h);
    } else {
      h = lat_.hexagon(i0 - k, j0 + k + 1);
      t = lat_.bottom_left_triangle(h);
    }
    if (hex_line_[h] >= 0 || tri_line_[t] >= 0) {
      throw std::invalid_argument("defect line overlaps an existing merged plaquette");
    }
    for (auto [hh, tt] : line.pentagons) {
      if (hh == h || tt == t) throw std::invalid_argument("defect line wraps onto itself");
    }
    line.pentagons.push_back({h, t});
  }
  auto shared_edge = [&](int h, int t) {
    std::vector<int> e;
    for (int q : lat_.hex_corners(h)) {
      auto tc = lat_.triangle_corners(t);
      if (std::find(tc.begin(), tc.end(), q) != tc.end()) e.push_back(q);
    }
    return e;
  };
  for (int p = 0; p + 1 < m; ++p) {
    auto e1 = shared_edge(line.pentagons[p].first, line.pentagons[p].second);
    auto e2 = shared_edge(line.pentagons[p + 1].first, line.pentagons[p + 1].second);
    std::vector<int> common;
    for (int q : e1) {
      if (std::find(e2.begin(), e2.end(), q) != e2.end()) common.push_back(q);
    }
    if (common.size() != 1) throw std::logic_error("pentagon chain is not edge-connected");
    int q = common[0];
    if (!active_[q]) throw std::invalid_argument("defect qudit already used by another line");
    line.qudits_on_line.push_back(q);
    line.term_types.push_back(lat_.site_of_qudit(q) == Site::B ? DefectTerm::Y : DefectTerm::XdagZ);
  }
  // Every plaquette around a defect qudit must be merged into this line.
  for (int q : line.qudits_on_line) {
    for (int h : lat_.hexagons_of_qudit(q)) {
      bool ok = false;
      for (auto [hh, tt] : line.pentagons) ok |= hh == h;
      if (!ok) throw std::logic_error("defect qudit hexagon outside the line");
    }
    for (int t : lat_.triangles_of_qudit(q)) {
      bool ok = false;
      for (auto [hh, tt] : line.pentagons) ok |= tt == t;
      if (!ok) throw std::logic_error("defect qudit triangle outside the line");
    }
  }
  for (auto [h, t] : line.pentagons) {
    for (int other = 0; other < lat_.num_hexagons(); ++other) {
      if (other != h && phi_[other] == t) throw std::invalid_argument("pentagon triangle already in Im(phi)");
    }
  }
  for (int q : line.qudits_on_line) active_[q] = 0;
  for (auto [h, t] : line.pentagons) {
    hex_line_[h] = line_id;
    tri_line_[t] = line_id;
    phi_[h] = t;
    line.removed_stabilizers.push_back(h);
    line.pentagon_stabilizers.push_back(
        to_pauli(sparse_multiply(M(t), sparse_dagger(E(h))), lat_.num_qudits()));
  }
  lines_.push_back(std::move(line));
  rebuild_checks();
}

void KagomeCode::rebuild_checks() {
  checks_.clear();
  for (int h = 0; h < lat_.num_hexagons(); ++h) {
    if (hex_line_[h] < 0) checks_.push_back({CheckKind::Hexagon, h, -1, E(h)});
  }
  for (int t = 0; t < lat_.num_triangles(); ++t) {
    if (tri_line_[t] < 0) checks_.push_back({CheckKind::Triangle, -1, t, sparse_dagger(M(t))});
  }
  for (const auto &line : lines_) {
    for (auto [h, t] : line.pentagons) {
      checks_.push_back({CheckKind::Pentagon, h, t, sparse_multiply(E(h), sparse_dagger(M(t)))});
    }
  }
  const size_t n = lat_.num_qudits();
  for (const auto &line : lines_) {
    for (size_t k = 0; k < line.qudits_on_line.size(); ++k) {
      PhasedPauli term = line.term(k, n);
      for (const auto &c : checks_) {
        if (commutation_exponent(c.word, term) != 0) {
          throw std::logic_error("check does not commute with a defect term");
        }
      }
    }
  }
}

std::string KagomeCode::export_text() const {
  std::ostringstream out;
  out << "kagome L=" << L() << " qudits=" << num_qudits() << " active=" << num_active()
      << " checks=" << checks_.size() << " lines=" << lines_.size() << "\n";
  for (int q = 0; q < num_qudits(); ++q) {
    auto [x, y] = lat_.position(q);
    auto [i, j] = lat_.cell_of_qudit(q);
    out << "site " << q << " cell " << i << "," << j << " " << "abc"[q % 3] << " pos " << x << ","
        << y << (active_[q] ? "" : " defect") << "\n";
  }
  auto word_str = [](const SparseWord &w) {
    std::ostringstream s;
    for (size_t k = 0; k < w.size(); ++k) {
      if (k) s << ' ';
      if (w[k].a) s << 'Z' << int(w[k].a);
      if (w[k].b) s << 'X' << int(w[k].b);
      s << '@' << w[k].q;
    }
    return s.str();
  };
  for (size_t c = 0; c < checks_.size(); ++c) {
    const auto &ch = checks_[c];
    const char *kind = ch.kind == CheckKind::Hexagon    ? "hexagon"
                       : ch.kind == CheckKind::Triangle ? "triangle"
                                                        : "pentagon";
    out << "check " << c << " " << kind << " h=" << ch.hexagon << " t=" << ch.triangle << " : "
        << word_str(ch.word) << "\n";
  }
  for (int h = 0; h < lat_.num_hexagons(); ++h) out << "phi " << h << " -> " << phi_[h] << "\n";
  for (size_t l = 0; l < lines_.size(); ++l) {
    const auto &line = lines_[l];
    out << "line " << l << " qudits";
    for (size_t k = 0; k < line.qudits_on_line.size(); ++k) {
      out << ' ' << line.qudits_on_line[k] << (line.term_types[k] == DefectTerm::Y ? ":Y" : ":XdZ");
    }
    out << "\n";
  }
  for (const auto &l : logicals_) out << "logical " << l.name << " : " << l.op.sparse_str() << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

StabilizerSets transform_stabilizers(const KagomeCode &code) {
  const auto &lat = code.lattice();
  const size_t n = lat.num_qudits();
  std::vector<int> inverse(lat.num_triangles(), -1);
  for (int h = 0; h < lat.num_hexagons(); ++h) inverse[code.phi()[h]] = h;
  std::set<int> removed;
  for (const auto &line : code.defect_lines()) {
    for (int h : line.removed_stabilizers) removed.insert(h);
  }
  StabilizerSets out;
  for (int h = 0; h < lat.num_hexagons(); ++h) {
    if (!removed.count(h)) out.S.push_back(code.E_pauli(h));
  }
  for (int t = 0; t < lat.num_triangles(); ++t) {
    PhasedPauli r = code.M_pauli(t);
    if (inverse[t] >= 0) r *= code.E_pauli(inverse[t]).dagger();
    out.R.push_back(r);
  }
  (void)n;
  return out;
}

KagomeCode add_defect_line(const KagomeCode &code, std::pair<int, int> anchor, int length,
                           bool bottom_left_first) {
  KagomeCode out = code;
  out.add_defect_line(anchor.first, anchor.second, length, bottom_left_first);
  return out;
}

PhasedPauli torus_logical_z1(const KagomeLattice &lat, int row) {
  PhasedPauli p(lat.num_qudits());
  for (int i = 0; i < lat.L(); ++i) {
    p.set(lat.qudit(i, row, Site::A), 1, 0);
    p.set(lat.qudit(i, row, Site::B), 1, 0);
  }
  return p;
}

PhasedPauli torus_logical_x1(const KagomeLattice &lat, int column) {
  PhasedPauli p(lat.num_qudits());
  for (int j = 0; j < lat.L(); ++j) {
    p.set(lat.qudit(column, j, Site::A), 0, 1);
    p.set(lat.qudit(column, j, Site::C), 0, 3);
  }
  return p;
}

PhasedPauli torus_logical_z2(const KagomeLattice &lat, int column) {
  PhasedPauli p(lat.num_qudits());
  for (int j = 0; j < lat.L(); ++j) {
    p.set(lat.qudit(column, j, Site::A), 1, 0);
    p.set(lat.qudit(column, j, Site::C), 1, 0);
  }
  return p;
}

PhasedPauli torus_logical_x2(const KagomeLattice &lat, int row) {
  PhasedPauli p(lat.num_qudits());
  for (int i = 0; i < lat.L(); ++i) {
    p.set(lat.qudit(i, row, Site::A), 0, 1);
    p.set(lat.qudit(i, row, Site::B), 0, 3);
  }
  return p;
}

std::vector<int> syndrome_of(const KagomeCode &code, const PhasedPauli &frame) {
  std::vector<int> s;
  s.reserve(code.checks().size());
  for (const auto &c : code.checks()) s.push_back(commutation_exponent(c.word, frame));
  return s;
}

}  // namespace z4k
