#ifndef Z4K_CYCLOTOMIC_H
#define Z4K_CYCLOTOMIC_H

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace z4k {

/// Exact element c0 + c1 z + c2 z^2 + c3 z^3 of Z[z], z = exp(i*pi/4), z^4 = -1.
class Cyclo8 {
 public:
  Cyclo8() = default;
  explicit Cyclo8(int64_t v) : c_{v, 0, 0, 0} {}
  Cyclo8(int64_t c0, int64_t c1, int64_t c2, int64_t c3) : c_{c0, c1, c2, c3} {}

  /// z^k for any integer k.
  static Cyclo8 root(int k);

  int64_t operator[](int i) const { return c_[i]; }

  Cyclo8 &operator+=(const Cyclo8 &o);
  Cyclo8 &operator-=(const Cyclo8 &o);
  Cyclo8 operator*(const Cyclo8 &o) const;
  Cyclo8 operator+(const Cyclo8 &o) const { return Cyclo8(*this) += o; }
  Cyclo8 operator-(const Cyclo8 &o) const { return Cyclo8(*this) -= o; }
  Cyclo8 operator-() const { return Cyclo8(-c_[0], -c_[1], -c_[2], -c_[3]); }
  Cyclo8 scaled(int64_t k) const { return Cyclo8(k * c_[0], k * c_[1], k * c_[2], k * c_[3]); }
  Cyclo8 conj() const;
  /// Multiplication by z^k.
  Cyclo8 rotated(int k) const { return *this * root(k); }

  bool is_zero() const { return !c_[0] && !c_[1] && !c_[2] && !c_[3]; }
  bool operator==(const Cyclo8 &o) const { return c_ == o.c_; }
  bool operator!=(const Cyclo8 &o) const { return c_ != o.c_; }

  /// True iff the value is real, i.e. of the form a + b*sqrt(2).
  bool is_real() const { return c_[2] == 0 && c_[1] == -c_[3]; }

  std::complex<double> to_complex() const;
  std::string str() const;

 private:
  std::array<int64_t, 4> c_{0, 0, 0, 0};
};

/// If num/den = r z^k with r real and positive, returns k in 0..7.
std::optional<int> ratio_phase(const Cyclo8 &num, const Cyclo8 &den);

}  // namespace z4k

#endif
