#include "z4k/z4_linalg.h"

#include <stdexcept>
#include <utility>

namespace z4k {

void Z4Matrix::append_row(const std::vector<uint8_t> &row) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row length mismatch");
  for (auto v : row) data_.push_back(v & 3);
  ++rows_;
}

namespace {

// Z4 is local with maximal ideal 2Z4, so a pivot of minimal 2-adic valuation
// divides everything left in the submatrix.
struct Reducer {
  Z4Matrix &m;
  std::vector<uint8_t> *rhs = nullptr;  // row operations are mirrored here
  Z4Matrix *colops = nullptr;           // column operations are mirrored here

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
    if (rhs) std::swap((*rhs)[a], (*rhs)[b]);
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
    if (colops) {
      for (int r = 0; r < colops->rows(); ++r) std::swap(colops->at(r, a), colops->at(r, b));
    }
  }
  void scale_row(int r, int k) {
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = (m.at(r, c) * k) & 3;
    if (rhs) (*rhs)[r] = ((*rhs)[r] * k) & 3;
  }
  // row t -= f * row s
  void sub_row(int t, int s, int f, int from) {
    for (int c = from; c < m.cols(); ++c) m.at(t, c) = (m.at(t, c) + 4 * 4 - f * m.at(s, c)) & 3;
    if (rhs) (*rhs)[t] = ((*rhs)[t] + 16 - f * (*rhs)[s]) & 3;
  }
  // col t -= f * col s
  void sub_col(int t, int s, int f, int from) {
    for (int r = from; r < m.rows(); ++r) m.at(r, t) = (m.at(r, t) + 16 - f * m.at(r, s)) & 3;
    if (colops) {
      for (int r = 0; r < colops->rows(); ++r)
        colops->at(r, t) = (colops->at(r, t) + 16 - f * colops->at(r, s)) & 3;
    }
  }

  // Returns the number of pivots; m(k,k) holds the invariant factors.
  int run() {
    const int R = m.rows(), C = m.cols();
    int k = 0;
    for (; k < R && k < C; ++k) {
      int pr = -1, pc = -1;
      for (int r = k; r < R && pr < 0; ++r) {
        for (int c = k; c < C; ++c) {
          if (m.at(r, c) & 1) {
            pr = r;
            pc = c;
            break;
          }
        }
      }
      if (pr < 0) {
        for (int r = k; r < R && pr < 0; ++r) {
          for (int c = k; c < C; ++c) {
            if (m.at(r, c)) {
              pr = r;
              pc = c;
              break;
            }
          }
        }
      }
      if (pr < 0) break;
      swap_rows(k, pr);
      swap_cols(k, pc);
      int p = m.at(k, k);
      if (p & 1) {
        if (p == 3) scale_row(k, 3);
        for (int r = k + 1; r < R; ++r) {
          if (m.at(r, k)) sub_row(r, k, m.at(r, k), k);
        }
        for (int c = k + 1; c < C; ++c) {
          if (m.at(k, c)) sub_col(c, k, m.at(k, c), k);
        }
      } else {
        // Everything remaining is 0 or 2.
        for (int r = k + 1; r < R; ++r) {
          if (m.at(r, k)) sub_row(r, k, 1, k);
        }
        for (int c = k + 1; c < C; ++c) {
          if (m.at(k, c)) sub_col(c, k, 1, k);
        }
      }
    }
    return k;
  }
};

}  // namespace

SmithForm smith_normal_form(Z4Matrix m) {
  Reducer red{m};
  int k = red.run();
  SmithForm out;
  for (int i = 0; i < k; ++i) {
    out.diagonal.push_back(m.at(i, i));
    if (m.at(i, i) == 1)
      ++out.units;
    else
      ++out.twos;
  }
  return out;
}

std::optional<std::vector<uint8_t>> solve_z4(Z4Matrix m, std::vector<uint8_t> b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("rhs length mismatch");
  const int C = m.cols();
  Z4Matrix v(C, C);
  for (int i = 0; i < C; ++i) v.at(i, i) = 1;
  for (auto &x : b) x &= 3;
  Reducer red{m, &b, &v};
  int k = red.run();
  std::vector<uint8_t> y(C, 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (i < k) {
      if (m.at(i, i) == 1) {
        y[i] = b[i];
      } else {
        if (b[i] & 1) return std::nullopt;
        y[i] = b[i] / 2;
      }
    } else if (b[i]) {
      return std::nullopt;
    }
  }
  std::vector<uint8_t> x(C, 0);
  for (int r = 0; r < C; ++r) {
    int acc = 0;
    for (int c = 0; c < C; ++c) acc += v.at(r, c) * y[c];
    x[r] = acc & 3;
  }
  return x;
}

}  // namespace z4k
