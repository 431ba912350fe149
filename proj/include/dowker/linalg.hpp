#ifndef DOWKER_LINALG_HPP
#define DOWKER_LINALG_HPP

#include <cstdint>
#include <vector>

namespace dowker {

/// Dense integer matrix, row-major.  Everything in this project is desk
/// scale, so no attempt at sparsity.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  static IntMatrix zero(int r, int c) {
    return IntMatrix{r, c, std::vector<long long>(static_cast<std::size_t>(r) * c, 0)};
  }
  static IntMatrix identity(int n) {
    IntMatrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& lhs, const IntMatrix& rhs);

/// Rank over the rationals, computed exactly.
int rank(const IntMatrix& m);

/// Basis of the right kernel {v : m v = 0}, computed exactly over the
/// rationals and scaled to primitive integer vectors (content 1, first
/// nonzero entry positive).  Deterministic: one vector per free column, in
/// column order.
std::vector<std::vector<long long>> kernel_basis(const IntMatrix& m);

/// Dense GF(2) matrix with bit-packed rows.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        bits_(rows, std::vector<std::uint64_t>((cols + 63) / 64, 0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool at(int i, int j) const {
    return (bits_[i][j >> 6] >> (j & 63)) & 1u;
  }
  void set(int i, int j, bool v) {
    if (v)
      bits_[i][j >> 6] |= (std::uint64_t{1} << (j & 63));
    else
      bits_[i][j >> 6] &= ~(std::uint64_t{1} << (j & 63));
  }

  int rank() const;  // Gaussian elimination on a copy

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::uint64_t>> bits_;
};

}  // namespace dowker

#endif  // DOWKER_LINALG_HPP
