#ifndef Z4K_Z4_LINALG_H
#define Z4K_Z4_LINALG_H

#include <cstdint>
#include <optional>
#include <vector>

namespace z4k {

/// Dense row-major matrix over Z4.
class Z4Matrix {
 public:
  Z4Matrix() = default;
  Z4Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint8_t &at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  uint8_t at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void append_row(const std::vector<uint8_t> &row);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint8_t> data_;
};

struct SmithForm {
  std::vector<uint8_t> diagonal;  // invariant factors 1 then 2, zeros dropped
  int units = 0;
  int twos = 0;
  int rank() const { return units + twos; }
};

SmithForm smith_normal_form(Z4Matrix m);

/// Some x with m x = b (mod 4), or nullopt.
std::optional<std::vector<uint8_t>> solve_z4(Z4Matrix m, std::vector<uint8_t> b);

}  // namespace z4k

#endif
