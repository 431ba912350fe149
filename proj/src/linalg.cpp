#include "dowker/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace dowker {

IntMatrix multiply(const IntMatrix& lhs, const IntMatrix& rhs) {
  if (lhs.cols != rhs.rows) throw std::invalid_argument("multiply: shape mismatch");
  IntMatrix out = IntMatrix::zero(lhs.rows, rhs.cols);
  for (int i = 0; i < lhs.rows; ++i)
    for (int k = 0; k < lhs.cols; ++k) {
      long long v = lhs.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  return out;
}

namespace {

// Exact rational scalar for the elimination below.  Values stay tiny (the
// matrices here are incidence-like), so long long with gcd normalization is
// plenty.
struct Rat {
  long long num = 0, den = 1;

  Rat() = default;
  Rat(long long n) : num(n) {}
  Rat(long long n, long long d) : num(n), den(d) { norm(); }

  void norm() {
    if (den == 0) throw std::logic_error("rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  bool zero() const { return num == 0; }

  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.zero()) throw std::logic_error("rational: division by zero");
    return Rat(a.num * b.den, a.den * b.num);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
  }
};

struct Rref {
  std::vector<std::vector<Rat>> m;
  std::vector<int> pivot_cols;  // ascending
};

Rref rref_of(const IntMatrix& in) {
  Rref r;
  r.m.assign(in.rows, std::vector<Rat>(in.cols));
  for (int i = 0; i < in.rows; ++i)
    for (int j = 0; j < in.cols; ++j) r.m[i][j] = Rat(in.at(i, j));

  int row = 0;
  for (int col = 0; col < in.cols && row < in.rows; ++col) {
    int p = -1;
    for (int i = row; i < in.rows; ++i)
      if (!r.m[i][col].zero()) { p = i; break; }
    if (p < 0) continue;
    std::swap(r.m[p], r.m[row]);
    Rat inv = Rat(1) / r.m[row][col];
    for (int j = col; j < in.cols; ++j) r.m[row][j] = r.m[row][j] * inv;
    for (int i = 0; i < in.rows; ++i) {
      if (i == row || r.m[i][col].zero()) continue;
      Rat f = r.m[i][col];
      for (int j = col; j < in.cols; ++j) r.m[i][j] = r.m[i][j] - f * r.m[row][j];
    }
    r.pivot_cols.push_back(col);
    ++row;
  }
  return r;
}

}  // namespace

int rank(const IntMatrix& m) {
  return static_cast<int>(rref_of(m).pivot_cols.size());
}

std::vector<std::vector<long long>> kernel_basis(const IntMatrix& m) {
  Rref r = rref_of(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<long long>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols, Rat(0));
    v[free] = Rat(1);
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
      v[r.pivot_cols[k]] = Rat(0) - r.m[k][free];

    long long lcm = 1;
    for (const Rat& x : v) lcm = std::lcm(lcm, x.den);
    std::vector<long long> iv(m.cols);
    for (int j = 0; j < m.cols; ++j) iv[j] = v[j].num * (lcm / v[j].den);
    long long content = 0;
    for (long long x : iv) content = std::gcd(content, x < 0 ? -x : x);
    if (content > 1)
      for (long long& x : iv) x /= content;
    for (long long x : iv) {
      if (x == 0) continue;
      if (x < 0)
        for (long long& y : iv) y = -y;
      break;
    }
    basis.push_back(std::move(iv));
  }
  return basis;
}

int GF2Matrix::rank() const {
  std::vector<std::vector<std::uint64_t>> rows = bits_;
  int rk = 0;
  for (int col = 0; col < cols_ && rk < rows_; ++col) {
    int p = -1;
    for (int i = rk; i < rows_; ++i)
      if ((rows[i][col >> 6] >> (col & 63)) & 1u) { p = i; break; }
    if (p < 0) continue;
    std::swap(rows[p], rows[rk]);
    for (int i = 0; i < rows_; ++i) {
      if (i == rk) continue;
      if ((rows[i][col >> 6] >> (col & 63)) & 1u)
        for (std::size_t w = 0; w < rows[i].size(); ++w) rows[i][w] ^= rows[rk][w];
    }
    ++rk;
  }
  return rk;
}

}  // namespace dowker
