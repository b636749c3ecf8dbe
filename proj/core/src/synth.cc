#include <stdexcept>

#include "z4k/clifford.h"

namespace z4k {

namespace {

GateWord repeat(const GateWord &w, int times) {
  GateWord out;
  for (int k = 0; k < times; ++k) out.insert(out.end(), w.begin(), w.end());
  return out;
}

GateWord h_word(int q) { return {{GateKind::S, q}, {GateKind::T, q}, {GateKind::S, q}}; }
GateWord hdag_word(int q) { return repeat(h_word(q), 3); }

GateWord x_word(int q) {
  GateWord w = h_word(q);
  w.push_back({GateKind::Z, q});
  auto hd = hdag_word(q);
  w.insert(w.end(), hd.begin(), hd.end());
  return w;
}

GateWord cz_adjacent(int a, int b) { return {{GateKind::CZ, std::min(a, b)}}; }

// C_X with control c and target t, |c - t| = 1.
GateWord cx_adjacent(int c, int t) {
  GateWord w = h_word(t);
  w.push_back({GateKind::CZ, std::min(c, t)});
  auto hd = hdag_word(t);
  w.insert(w.end(), hd.begin(), hd.end());
  return w;
}

// Equal to SWAP(q, q+1) by conjugation.
GateWord swap_adjacent(int q) {
  GateWord w = repeat(h_word(q + 1), 2);
  auto a = cx_adjacent(q, q + 1);
  auto b = repeat(cx_adjacent(q + 1, q), 3);
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  w.insert(w.end(), a.begin(), a.end());
  return w;
}

// Wraps a gate on (j, j+1) so that it acts on (j, i) for i > j.
GateWord nonlocal(int j, int i, const GateWord &adjacent_gate) {
  GateWord w;
  for (int x = i; x > j + 1; --x) {
    auto s = swap_adjacent(x - 1);
    w.insert(w.end(), s.begin(), s.end());
  }
  w.insert(w.end(), adjacent_gate.begin(), adjacent_gate.end());
  for (int x = j + 2; x <= i; ++x) {
    auto s = swap_adjacent(x - 1);
    w.insert(w.end(), s.begin(), s.end());
  }
  return w;
}

class Reducer {
 public:
  explicit Reducer(const CliffordTableau &t) : cur_(t) {}

  void apply(const GateWord &w) {
    for (const auto &g : w) {
      cur_ = evaluate_one(g);
      applied_.push_back(g);
    }
  }
  const CliffordTableau &current() const { return cur_; }
  const GateWord &applied() const { return applied_; }

 private:
  CliffordTableau evaluate_one(const Gate &g) {
    GateWord one{g};
    return cur_.then(evaluate(one, cur_.n()));
  }
  CliffordTableau cur_;
  GateWord applied_;
};

int block_r(const PhasedPauli &p, const PhasedPauli &q, int k) {
  return (p.z(k) * q.x(k) - p.x(k) * q.z(k)) & 3;
}

// G^dagger for G = S_j^{st} C_X(j,i)^s C_Z(j,i)^t, i > j.
GateWord controlled_dagger(int j, int i, int s, int t) {
  GateWord w;
  for (int k = 0; k < ((-s * t) & 7); ++k) w.push_back({GateKind::S, j});
  GateWord adj = repeat(cx_adjacent(j, j + 1), (-s) & 3);
  auto cz = repeat(cz_adjacent(j, j + 1), (-t) & 3);
  adj.insert(adj.end(), cz.begin(), cz.end());
  auto nl = nonlocal(j, i, adj);
  w.insert(w.end(), nl.begin(), nl.end());
  return w;
}

void reduce_pivot(Reducer &red, int j) {
  const int n = red.current().n();
  auto P = [&] { return red.current().image_z(j); };
  auto Q = [&] { return red.current().image_x(j); };

  // Find a qudit whose 2x2 block has determinant 1.
  auto find_unit = [&]() {
    for (int k = j; k < n; ++k)
      if (block_r(P(), Q(), k) == 1) return k;
    return -1;
  };
  int k = find_unit();
  if (k < 0) {
    int k1 = -1, k2 = -1;
    for (int x = j; x < n && k1 < 0; ++x)
      if (block_r(P(), Q(), x) == 3) k1 = x;
    for (int x = j; x < n && k2 < 0; ++x)
      if (x != k1 && (block_r(P(), Q(), x) == 2 || block_r(P(), Q(), x) == 3)) k2 = x;
    if (k1 < 0 || k2 < 0) throw std::logic_error("no block pair to fix the pivot determinant");
    int lo = std::min(k1, k2), hi = std::max(k1, k2);
    // Search single-qudit frames on both blocks and a C_Z power.
    const auto group = enumerate_sl2z4();
    const PhasedPauli p = P(), q = Q();
    bool done = false;
    for (const auto &La : group) {
      for (const auto &Lb : group) {
        for (int m = 1; m < 4 && !done; ++m) {
          auto col = [&](const Mat2 &L, int a, int b) {
            return std::pair<int, int>{(L[0] * a + L[1] * b) & 3, (L[2] * a + L[3] * b) & 3};
          };
          auto [pa_lo, pb_lo] = col(La, p.z(lo), p.x(lo));
          auto [qa_lo, qb_lo] = col(La, q.z(lo), q.x(lo));
          auto [pa_hi, pb_hi] = col(Lb, p.z(hi), p.x(hi));
          auto [qa_hi, qb_hi] = col(Lb, q.z(hi), q.x(hi));
          // C_Z^m: a_lo += m b_hi, a_hi += m b_lo.
          int r_lo = ((pa_lo + m * pb_hi) * qb_lo - pb_lo * (qa_lo + m * qb_hi)) & 3;
          int r_hi = ((pa_hi + m * pb_lo) * qb_hi - pb_hi * (qa_hi + m * qb_lo)) & 3;
          if (r_lo != 1 && r_hi != 1) continue;
          red.apply(single_qudit_word(La, lo));
          red.apply(single_qudit_word(Lb, hi));
          red.apply(nonlocal(lo, hi, repeat(cz_adjacent(lo, lo + 1), m)));
          done = true;
        }
        if (done) break;
      }
      if (done) break;
    }
    if (!done) throw std::logic_error("determinant fix search failed");
    k = find_unit();
    if (k < 0) throw std::logic_error("determinant fix did not produce a unit block");
  }

  for (int x = k; x > j; --x) red.apply(swap_adjacent(x - 1));

  {
    const PhasedPauli p = P(), q = Q();
    // Block B = [[a, c], [b, d]]; B^{-1} = [[d, -c], [-b, a]].
    Mat2 inv{q.x(j), (-q.z(j)) & 3, (-p.x(j)) & 3, p.z(j)};
    red.apply(single_qudit_word(inv, j));
  }

  // Clear the tail of the X image.
  for (int i = j + 1; i < n; ++i) {
    const PhasedPauli q = Q();
    if (q.z(i) | q.x(i)) red.apply(controlled_dagger(j, i, q.x(i), q.z(i)));
  }
  red.apply(h_word(j));
  // The Z image is now X_j^dagger (x) P'; clear P' against X_j.
  for (int i = j + 1; i < n; ++i) {
    const PhasedPauli p = P();
    if (p.z(i) | p.x(i)) red.apply(controlled_dagger(j, i, (-p.x(i)) & 3, (-p.z(i)) & 3));
  }
  red.apply(hdag_word(j));

  const PhasedPauli p = P(), q = Q();
  for (int i = 0; i < n; ++i) {
    bool pivot = i == j;
    if (p.z(i) != (pivot ? 1 : 0) || p.x(i) || q.z(i) || q.x(i) != (pivot ? 1 : 0))
      throw std::logic_error("pivot reduction left a nontrivial tail");
  }
  if ((p.phase_exp() | q.phase_exp()) & 1) throw std::invalid_argument("image phase outside the orbit of X");
  // X Z X^dagger = w^-1 Z and Z X Z^dagger = w X.
  int u = p.phase_exp() / 2, v = q.phase_exp() / 2;
  red.apply(repeat(x_word(j), u & 3));
  red.apply(repeat({{GateKind::Z, j}}, (-v) & 3));
}

int order(GateKind k) { return k == GateKind::S || k == GateKind::T ? 8 : 4; }

// Merges runs of the same generator modulo its order.
GateWord simplify(const GateWord &w) {
  std::vector<std::pair<Gate, int>> runs;
  for (const auto &g : w) {
    if (!runs.empty() && runs.back().first == g) {
      if (++runs.back().second == order(g.kind)) runs.pop_back();
    } else {
      runs.push_back({g, 1});
    }
  }
  GateWord out;
  for (auto &[g, c] : runs)
    for (int k = 0; k < c; ++k) out.push_back(g);
  return out;
}

// Shortest S/T word for the matrix, then a Pauli to fix the phases; the
// result is on qudit q and equal to t as a tableau.
GateWord synthesize_single(const CliffordTableau &t, int q) {
  GateWord base = single_qudit_word(single_qudit_matrix(t), 0);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      GateWord w = repeat(x_word(0), b);
      for (int k = 0; k < a; ++k) w.push_back({GateKind::Z, 0});
      w.insert(w.end(), base.begin(), base.end());
      w = simplify(w);
      if (evaluate(w, 1) == t) {
        for (auto &g : w) g.q = q;
        return w;
      }
    }
  }
  throw std::logic_error("no single-qudit word found");
}

// Replaces each maximal run of single-qudit gates on one qudit (between C_Z
// gates touching it) by the shortest equivalent word.
GateWord compress_segments(const GateWord &w, int n) {
  std::vector<GateWord> pending(n);
  GateWord out;
  auto flush = [&](int q) {
    GateWord &seg = pending[q];
    if (seg.empty()) return;
    GateWord local = seg;
    for (auto &g : local) g.q = 0;
    GateWord best = synthesize_single(evaluate(local, 1), q);
    if (best.size() > seg.size()) best = seg;
    out.insert(out.end(), best.begin(), best.end());
    seg.clear();
  };
  for (const auto &g : w) {
    if (g.kind == GateKind::CZ) {
      flush(g.q);
      flush(g.q + 1);
      out.push_back(g);
    } else {
      pending[g.q].push_back(g);
    }
  }
  for (int q = 0; q < n; ++q) flush(q);
  return simplify(out);
}

}  // namespace

GateWord synthesize(const CliffordTableau &target) {
  std::string err = target.validate();
  if (!err.empty()) throw std::invalid_argument("invalid tableau: " + err);
  if (target.n() == 1) return synthesize_single(target, 0);
  Reducer red(target);
  for (int j = 0; j < target.n(); ++j) reduce_pivot(red, j);
  if (red.current() != CliffordTableau(target.n())) throw std::logic_error("reduction did not reach the identity");
  return compress_segments(inverse(red.applied()), target.n());
}

}  // namespace z4k
