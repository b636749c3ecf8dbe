#include "z4k/code_analysis.h"

#include <stdexcept>

namespace z4k {

namespace {

// Row of the linear form v -> commutation_exponent(w, v) over the columns
// (z of active qudit k, then x of active qudit k).
std::vector<uint8_t> form_row(const SparseWord &w, const std::vector<int> &column_of, int na) {
  std::vector<uint8_t> row(2 * na, 0);
  for (const auto &op : w) {
    int k = column_of[op.q];
    if (k < 0) continue;
    row[k] = static_cast<uint8_t>(mod4(-op.b));
    row[na + k] = static_cast<uint8_t>(mod4(op.a));
  }
  return row;
}

std::vector<int> active_columns(const KagomeCode &code, int &na) {
  std::vector<int> column_of(code.num_qudits(), -1);
  na = 0;
  for (int q = 0; q < code.num_qudits(); ++q) {
    if (code.active(q)) column_of[q] = na++;
  }
  return column_of;
}

std::vector<uint8_t> word_row(const SparseWord &w, const std::vector<int> &column_of, int na) {
  std::vector<uint8_t> row(2 * na, 0);
  for (const auto &op : w) {
    int k = column_of[op.q];
    if (k < 0) continue;
    row[k] = op.a;
    row[na + k] = op.b;
  }
  return row;
}

}  // namespace

SmithForm generator_smith(const KagomeCode &code, bool all_generators) {
  int na = 0;
  std::vector<int> column_of;
  Z4Matrix m;
  if (all_generators) {
    na = code.num_qudits();
    column_of.resize(na);
    for (int q = 0; q < na; ++q) column_of[q] = q;
    const auto &lat = code.lattice();
    for (int h = 0; h < lat.num_hexagons(); ++h) m.append_row(word_row(code.E(h), column_of, na));
    for (int t = 0; t < lat.num_triangles(); ++t) m.append_row(word_row(code.M(t), column_of, na));
  } else {
    column_of = active_columns(code, na);
    for (const auto &c : code.checks()) m.append_row(word_row(c.word, column_of, na));
  }
  return smith_normal_form(std::move(m));
}

int logical_qudit_count(const KagomeCode &code) {
  SmithForm s = generator_smith(code);
  return code.num_active() - s.rank();
}

PhasedPauli symplectic_clean(PhasedPauli op, const std::vector<PhasedPauli> &pairs) {
  if (pairs.size() % 2) throw std::invalid_argument("symplectic_clean needs (Z, X) pairs");
  for (size_t k = 0; k < pairs.size(); k += 2) {
    const auto &z = pairs[k];
    const auto &x = pairs[k + 1];
    if (commutation_exponent(z, x) != 1) throw std::invalid_argument("pair is not canonical");
    int c1 = commutation_exponent(z, op);
    int c2 = commutation_exponent(x, op);
    // (z, z^alpha x^beta) = beta, (x, z^alpha) = -alpha
    for (int i = 0; i < c2; ++i) op *= z;
    for (int i = 0; i < mod4(-c1); ++i) op *= x;
  }
  return op;
}

std::optional<PhasedPauli> solve_centralizer(const KagomeCode &code,
                                             const std::vector<PhasedPauli> &against,
                                             const std::vector<int> &labels) {
  if (against.size() != labels.size()) throw std::invalid_argument("labels size mismatch");
  int na = 0;
  auto column_of = active_columns(code, na);
  Z4Matrix m;
  std::vector<uint8_t> rhs;
  for (const auto &c : code.checks()) {
    m.append_row(form_row(c.word, column_of, na));
    rhs.push_back(0);
  }
  for (size_t k = 0; k < against.size(); ++k) {
    m.append_row(form_row(to_sparse(against[k]), column_of, na));
    rhs.push_back(static_cast<uint8_t>(mod4(labels[k])));
  }
  auto x = solve_z4(std::move(m), std::move(rhs));
  if (!x) return std::nullopt;
  PhasedPauli p(code.num_qudits());
  for (int q = 0; q < code.num_qudits(); ++q) {
    int k = column_of[q];
    if (k >= 0) p.set(q, (*x)[k], (*x)[na + k]);
  }
  return p;
}

std::vector<int> logical_labels(const KagomeCode &code, const PhasedPauli &op) {
  std::vector<int> out;
  for (const auto &l : code.logicals()) out.push_back(commutation_exponent(l.op, op));
  return out;
}

std::string validate_logical_basis(const KagomeCode &code) {
  const auto &ls = code.logicals();
  if (ls.size() % 2) return "odd number of basis logicals";
  for (size_t i = 0; i < ls.size(); ++i) {
    for (const auto &c : code.checks()) {
      if (commutation_exponent(c.word, ls[i].op)) return ls[i].name + " has a nonzero syndrome";
    }
    for (size_t q = 0; q < ls[i].op.size(); ++q) {
      if (!code.active(static_cast<int>(q)) && (ls[i].op.z(q) | ls[i].op.x(q))) {
        return ls[i].name + " acts on a defect qudit";
      }
    }
    for (size_t j = 0; j < ls.size(); ++j) {
      int want = 0;
      if (i / 2 == j / 2 && i != j) want = i % 2 == 0 ? 1 : 3;
      if (commutation_exponent(ls[i].op, ls[j].op) != want) {
        return "(" + ls[i].name + "," + ls[j].name + ") is not canonical";
      }
    }
  }
  return "";
}

}  // namespace z4k
