#include "z4k/dense.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace z4k {

cplx eighth_root(int k) {
  static const cplx table[8] = {
      {1, 0},
      {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2},
      {0, 1},
      {-std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2},
      {-1, 0},
      {-std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2},
      {0, -1},
      {std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2},
  };
  return table[mod8(k)];
}

Eigen::MatrixXcd dense_matrix(const PhasedPauli &p) {
  const size_t n = p.size();
  if (n > 6) throw std::invalid_argument("dense_matrix supports at most 6 qudits");
  const size_t dim = size_t{1} << (2 * n);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  const cplx global = eighth_root(p.phase_exp());
  for (size_t col = 0; col < dim; ++col) {
    size_t row = 0;
    int omega_exp = 0;
    for (size_t q = 0; q < n; ++q) {
      size_t shift = 2 * (n - 1 - q);
      int j = static_cast<int>((col >> shift) & 3);
      int jj = mod4(j + p.x(q));
      omega_exp += p.z(q) * jj;
      row |= static_cast<size_t>(jj) << shift;
    }
    m(row, col) = global * eighth_root(2 * omega_exp);
  }
  return m;
}

Eigen::Matrix4cd qudit_matrix(int a, int b) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (int j = 0; j < 4; ++j) {
    int jj = mod4(j + b);
    m(jj, j) = eighth_root(2 * a * jj);
  }
  return m;
}

namespace {

const cplx I(0, 1);

Eigen::Matrix2cd sx() { return (Eigen::Matrix2cd() << 0, 1, 1, 0).finished(); }
Eigen::Matrix2cd sy() { return (Eigen::Matrix2cd() << 0, -I, I, 0).finished(); }
Eigen::Matrix2cd sz() { return (Eigen::Matrix2cd() << 1, 0, 0, -1).finished(); }
Eigen::Matrix2cd id2() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
  Eigen::Matrix4cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

}  // namespace

Eigen::Matrix4cd qubit_pair_x() {
  return 0.5 * (kron2(sx(), id2()) + kron2(id2(), sx()) - I * kron2(sz(), sy()) +
                I * kron2(sy(), sz()));
}

Eigen::Matrix4cd qubit_pair_y() {
  return 0.5 * eighth_root(3) *
         (kron2(sy(), id2()) + I * kron2(id2(), sy()) + I * kron2(sx(), sz()) +
          kron2(sz(), sx()));
}

Eigen::Matrix4cd qubit_pair_z() {
  return (1.0 / std::numbers::sqrt2) * eighth_root(1) * (kron2(sz(), id2()) - I * kron2(id2(), sz()));
}

Eigen::Matrix4cd qubit_sigma(Axis axis, int slot) {
  if (slot != 1 && slot != 2) throw std::invalid_argument("qubit slot must be 1 or 2");
  Eigen::Matrix2cd s = axis == Axis::X ? sx() : axis == Axis::Y ? sy() : sz();
  return slot == 1 ? kron2(s, id2()) : kron2(id2(), s);
}

std::vector<std::vector<cplx>> pair_pauli_expansion(const Eigen::Matrix4cd &m) {
  Eigen::Matrix4cd x = qubit_pair_x(), z = qubit_pair_z();
  std::vector<std::vector<cplx>> c(4, std::vector<cplx>(4));
  Eigen::Matrix4cd za = Eigen::Matrix4cd::Identity();
  for (int a = 0; a < 4; ++a) {
    Eigen::Matrix4cd w = za;
    for (int b = 0; b < 4; ++b) {
      c[a][b] = (w.adjoint() * m).trace() / 4.0;
      w = w * x;
    }
    za = za * z;
  }
  return c;
}

}  // namespace z4k
