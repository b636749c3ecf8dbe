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

#include "z4k/phased_pauli.h"

#include <sstream>
#include <stdexcept>

namespace z4k {

namespace {

void check_same_size(const PhasedPauli &p, const PhasedPauli &q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("PhasedPauli length mismatch: " + std::to_string(p.size()) +
                                " vs " + std::to_string(q.size()));
  }
}

}  // namespace

PhasedPauli::PhasedPauli(size_t num_qudits) : z_(num_qudits, 0), x_(num_qudits, 0) {}

PhasedPauli::PhasedPauli(std::vector<uint8_t> z, std::vector<uint8_t> x, int phase_exp)
    : z_(std::move(z)), x_(std::move(x)), phase_(mod8(phase_exp)) {
  if (z_.size() != x_.size()) {
    throw std::invalid_argument("z and x exponent vectors differ in length");
  }
  for (auto &v : z_) v &= 3;
  for (auto &v : x_) v &= 3;
}

PhasedPauli PhasedPauli::single(size_t n, size_t q, int a, int b, int phase_exp) {
  if (q >= n) throw std::out_of_range("qudit index out of range");
  PhasedPauli p(n);
  p.set(q, a, b);
  p.phase_ = mod8(phase_exp);
  return p;
}

PhasedPauli PhasedPauli::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw std::invalid_argument("expected 'k:ab.ab...' but got '" + std::string(text) + "'");
  }
  int k = 0;
  for (char c : text.substr(0, colon)) {
    if (c < '0' || c > '9') throw std::invalid_argument("bad phase in '" + std::string(text) + "'");
    k = k * 10 + (c - '0');
  }
  std::vector<uint8_t> z, x;
  auto body = text.substr(colon + 1);
  size_t pos = 0;
  while (pos < body.size()) {
    if (pos + 2 > body.size() || body[pos] < '0' || body[pos] > '3' || body[pos + 1] < '0' ||
        body[pos + 1] > '3') {
      throw std::invalid_argument("bad qudit entry in '" + std::string(text) + "'");
    }
    z.push_back(body[pos] - '0');
    x.push_back(body[pos + 1] - '0');
    pos += 2;
    if (pos < body.size()) {
      if (body[pos] != '.') throw std::invalid_argument("expected '.' in '" + std::string(text) + "'");
      ++pos;
    }
  }
  return PhasedPauli(std::move(z), std::move(x), k);
}

void PhasedPauli::set(size_t q, int a, int b) {
  z_[q] = static_cast<uint8_t>(mod4(a));
  x_[q] = static_cast<uint8_t>(mod4(b));
}

PhasedPauli &PhasedPauli::add_phase(int k) {
  phase_ = mod8(phase_ + k);
  return *this;
}

size_t PhasedPauli::weight() const {
  size_t w = 0;
  for (size_t q = 0; q < z_.size(); ++q) w += (z_[q] | x_[q]) != 0;
  return w;
}

std::vector<size_t> PhasedPauli::support() const {
  std::vector<size_t> s;
  for (size_t q = 0; q < z_.size(); ++q) {
    if (z_[q] | x_[q]) s.push_back(q);
  }
  return s;
}

bool PhasedPauli::is_identity_word() const {
  for (size_t q = 0; q < z_.size(); ++q) {
    if (z_[q] | x_[q]) return false;
  }
  return true;
}

bool PhasedPauli::same_word(const PhasedPauli &other) const {
  return z_ == other.z_ && x_ == other.x_;
}

// (Z^a X^b)(Z^c X^d) = omega^(-bc) Z^(a+c) X^(b+d); one omega is 2 phase units.
PhasedPauli &PhasedPauli::operator*=(const PhasedPauli &rhs) {
  check_same_size(*this, rhs);
  int acc = phase_ + rhs.phase_;
  for (size_t q = 0; q < z_.size(); ++q) {
    acc -= 2 * x_[q] * rhs.z_[q];
    z_[q] = (z_[q] + rhs.z_[q]) & 3;
    x_[q] = (x_[q] + rhs.x_[q]) & 3;
  }
  phase_ = mod8(acc);
  return *this;
}

void PhasedPauli::apply_right(size_t q, int a, int b) {
  phase_ = mod8(phase_ - 2 * x_[q] * a);
  z_[q] = (z_[q] + a) & 3;
  x_[q] = (x_[q] + b) & 3;
}

PhasedPauli PhasedPauli::pow(int k) const {
  k = ((k % 8) + 8) % 8;  // every word has order dividing 8
  PhasedPauli r(size());
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

PhasedPauli PhasedPauli::dagger() const { return pow(7); }

bool PhasedPauli::operator==(const PhasedPauli &other) const {
  return phase_ == other.phase_ && z_ == other.z_ && x_ == other.x_;
}

std::string PhasedPauli::str() const {
  std::string s = std::to_string(phase_) + ":";
  for (size_t q = 0; q < z_.size(); ++q) {
    if (q) s.push_back('.');
    s.push_back(static_cast<char>('0' + z_[q]));
    s.push_back(static_cast<char>('0' + x_[q]));
  }
  return s;
}

std::string PhasedPauli::sparse_str() const {
  std::ostringstream out;
  out << "w^" << phase_ << "/2";
  for (size_t q = 0; q < z_.size(); ++q) {
    if (!(z_[q] | x_[q])) continue;
    out << ' ';
    if (z_[q]) out << 'Z' << int(z_[q]);
    if (x_[q]) out << 'X' << int(x_[q]);
    out << '@' << q;
  }
  return out.str();
}

PhasedPauli operator*(const PhasedPauli &a, const PhasedPauli &b) {
  PhasedPauli r = a;
  r *= b;
  return r;
}

PhasedPauli multiply(const PhasedPauli &p, const PhasedPauli &q) { return p * q; }

int commutation_exponent(const PhasedPauli &p, const PhasedPauli &q) {
  check_same_size(p, q);
  int acc = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    acc += p.z(i) * q.x(i) - p.x(i) * q.z(i);
  }
  return mod4(acc);
}

PhasedPauli tensor(const PhasedPauli &p, const PhasedPauli &q) {
  std::vector<uint8_t> z = p.z_exps(), x = p.x_exps();
  z.insert(z.end(), q.z_exps().begin(), q.z_exps().end());
  x.insert(x.end(), q.x_exps().begin(), q.x_exps().end());
  return PhasedPauli(std::move(z), std::move(x), p.phase_exp() + q.phase_exp());
}

size_t hash_word(const PhasedPauli &p) {
  size_t h = 1469598103934665603ull;
  for (size_t q = 0; q < p.size(); ++q) {
    h ^= static_cast<size_t>(p.z(q) * 4 + p.x(q));
    h *= 1099511628211ull;
  }
  return h;
}

const std::vector<QuditOp> &conversion_row(Axis axis) {
  // (a, b) means Z^a X^b.
  static const std::vector<QuditOp> kX = {{0, 1}, {0, 3}, {2, 1}, {2, 3}};
  static const std::vector<QuditOp> kY = {{1, 1}, {1, 3}, {3, 1}, {3, 3}};
  static const std::vector<QuditOp> kZ = {{1, 0}, {3, 0}};
  switch (axis) {
    case Axis::X:
      return kX;
    case Axis::Y:
      return kY;
    case Axis::Z:
      return kZ;
  }
  throw std::invalid_argument("bad axis");
}

QuditOp qubit_pauli_to_qudit(const QubitPauliEvent &e,
                             const std::function<size_t(size_t)> &uniform) {
  if (e.qubit_slot != 1 && e.qubit_slot != 2) throw std::invalid_argument("qubit slot must be 1 or 2");
  const auto &row = conversion_row(e.axis);
  return row[uniform(row.size())];
}

ParafermionOp parafermion_transform(int i, Parity which, size_t n) {
  if (i < 1 || static_cast<size_t>(i) > n) {
    throw std::out_of_range("parafermion qudit index " + std::to_string(i) + " outside 1.." +
                            std::to_string(n));
  }
  PhasedPauli p(n);
  size_t last = which == Parity::Odd ? static_cast<size_t>(i - 1) : static_cast<size_t>(i);
  for (size_t j = 0; j < last; ++j) p.set(j, 0, 1);
  p *= PhasedPauli::single(n, i - 1, 1, 0);
  if (which == Parity::Even) p.add_phase(5);
  return {which == Parity::Odd ? 2 * i - 1 : 2 * i, p};
}

ParafermionOp parafermion(int j, size_t n) {
  if (j < 1) throw std::out_of_range("parafermion index must be positive");
  return parafermion_transform((j + 1) / 2, j % 2 ? Parity::Odd : Parity::Even, n);
}

}  // namespace z4k
