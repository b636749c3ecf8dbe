#include "z4k/cyclotomic.h"

#include <cmath>
#include <numbers>
#include <sstream>

namespace z4k {

Cyclo8 Cyclo8::root(int k) {
  k = ((k % 8) + 8) % 8;
  Cyclo8 r;
  r.c_[k % 4] = k < 4 ? 1 : -1;
  return r;
}

Cyclo8 &Cyclo8::operator+=(const Cyclo8 &o) {
  for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclo8 &Cyclo8::operator-=(const Cyclo8 &o) {
  for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclo8 Cyclo8::operator*(const Cyclo8 &o) const {
  std::array<int64_t, 4> r{0, 0, 0, 0};
  for (int i = 0; i < 4; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; j < 4; ++j) {
      int k = i + j;
      if (k < 4) {
        r[k] += c_[i] * o.c_[j];
      } else {
        r[k - 4] -= c_[i] * o.c_[j];
      }
    }
  }
  return Cyclo8(r[0], r[1], r[2], r[3]);
}

// conj(z^k) = z^-k = -z^(4-k) for k = 1..3.
Cyclo8 Cyclo8::conj() const { return Cyclo8(c_[0], -c_[3], -c_[2], -c_[1]); }

std::complex<double> Cyclo8::to_complex() const {
  std::complex<double> z(std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2), acc = 0, p = 1;
  for (int i = 0; i < 4; ++i) {
    acc += static_cast<double>(c_[i]) * p;
    p *= z;
  }
  return acc;
}

std::string Cyclo8::str() const {
  std::ostringstream out;
  out << "(" << c_[0] << "," << c_[1] << "," << c_[2] << "," << c_[3] << ")";
  return out.str();
}

std::optional<int> ratio_phase(const Cyclo8 &num, const Cyclo8 &den) {
  if (num.is_zero() || den.is_zero()) return std::nullopt;
  Cyclo8 x = num * den.conj();
  for (int k = 0; k < 8; ++k) {
    Cyclo8 y = x.rotated(-k);
    if (!y.is_real()) continue;
    // y = a + b*sqrt(2) with a = y0, b = y1.
    double v = static_cast<double>(y[0]) + static_cast<double>(y[1]) * std::numbers::sqrt2;
    if (v > 0) return k;
  }
  return std::nullopt;
}

}  // namespace z4k
