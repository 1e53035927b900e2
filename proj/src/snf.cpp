#include "strata/snf.hpp"

#include <limits>
#include <utility>

namespace strata {

namespace {

// Thrown by the checked 64-bit arithmetic; triggers the big-integer rerun.
struct FastPathOverflow {};

struct CheckedI64 {
  long long v = 0;
  CheckedI64() = default;
  CheckedI64(long long x) : v(x) {}

  friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
    long long r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw FastPathOverflow{};
    return r;
  }
  friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
    long long r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw FastPathOverflow{};
    return r;
  }
  friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
    long long r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw FastPathOverflow{};
    return r;
  }
  friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) {
    if (a.v == std::numeric_limits<long long>::min() && b.v == -1) throw FastPathOverflow{};
    return a.v / b.v;
  }
  friend CheckedI64 operator%(CheckedI64 a, CheckedI64 b) {
    if (a.v == std::numeric_limits<long long>::min() && b.v == -1) throw FastPathOverflow{};
    return a.v % b.v;
  }
  CheckedI64 operator-() const {
    if (v == std::numeric_limits<long long>::min()) throw FastPathOverflow{};
    return -v;
  }
  friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
  friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v != b.v; }
  friend bool operator<(CheckedI64 a, CheckedI64 b) { return a.v < b.v; }
};

template <class I>
I abs_val(const I& x) {
  return x < I(0) ? -x : x;
}

template <class I>
struct Reducer {
  int rows, cols;
  std::vector<std::vector<I>> a;

  explicit Reducer(const IntMatrix& m) : rows(m.rows), cols(m.cols) {
    a.assign(rows, std::vector<I>(cols, I(0)));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a[i][j] = I(m.at(i, j));
  }

  // Smallest nonzero absolute value in the trailing submatrix, earliest
  // (i, j) on ties; |1| short-circuits since nothing beats it.
  bool find_pivot(int s, int& pi, int& pj) const {
    bool found = false;
    I best(0);
    for (int i = s; i < rows; ++i) {
      for (int j = s; j < cols; ++j) {
        const I& x = a[i][j];
        if (x == I(0)) continue;
        I ax = abs_val(x);
        if (!found || ax < best) {
          found = true;
          best = ax;
          pi = i;
          pj = j;
          if (best == I(1)) return true;
        }
      }
    }
    return found;
  }

  void row_axpy(int dst, int src, const I& q) {  // row_dst -= q * row_src
    for (int j = 0; j < cols; ++j) a[dst][j] = a[dst][j] - q * a[src][j];
  }
  void col_axpy(int dst, int src, const I& q) {
    for (int i = 0; i < rows; ++i) a[i][dst] = a[i][dst] - q * a[i][src];
  }

  std::vector<I> run() {
    std::vector<I> diag;
    const int lim = rows < cols ? rows : cols;
    int s = 0;
    while (s < lim) {
      int pi, pj;
      if (!find_pivot(s, pi, pj)) break;
      std::swap(a[s], a[pi]);
      if (pj != s)
        for (int i = 0; i < rows; ++i) std::swap(a[i][s], a[i][pj]);

      // Clear row and column s modulo the pivot; remainders become the next,
      // strictly smaller pivot.
      bool leftover = false;
      for (int i = s + 1; i < rows; ++i) {
        if (a[i][s] == I(0)) continue;
        I q = a[i][s] / a[s][s];
        if (q != I(0)) row_axpy(i, s, q);
        if (a[i][s] != I(0)) leftover = true;
      }
      for (int j = s + 1; j < cols; ++j) {
        if (a[s][j] == I(0)) continue;
        I q = a[s][j] / a[s][s];
        if (q != I(0)) col_axpy(j, s, q);
        if (a[s][j] != I(0)) leftover = true;
      }
      if (leftover) continue;

      // Pivot isolated; enforce that it divides the rest of the submatrix.
      bool fixed = false;
      for (int i = s + 1; i < rows && !fixed; ++i)
        for (int j = s + 1; j < cols && !fixed; ++j)
          if (a[i][j] % a[s][s] != I(0)) {
            for (int c = 0; c < cols; ++c) a[s][c] = a[s][c] + a[i][c];
            fixed = true;
          }
      if (fixed) continue;

      diag.push_back(abs_val(a[s][s]));
      ++s;
    }
    return diag;
  }
};

BigInt to_bigint(const CheckedI64& x) { return BigInt(x.v); }

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  SmithResult result;
  try {
    Reducer<CheckedI64> fast(m);
    for (const CheckedI64& d : fast.run()) result.invariant_factors.push_back(to_bigint(d));
  } catch (const FastPathOverflow&) {
    result.used_bigint = true;
    result.invariant_factors.clear();
    Reducer<BigInt> big(m);
    for (const BigInt& d : big.run()) result.invariant_factors.push_back(d);
  }
  result.rank = static_cast<int>(result.invariant_factors.size());
  return result;
}

}  // namespace strata
