#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace strata {

using BigInt = boost::multiprecision::cpp_int;

// Dense row-major integer matrix.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
};

struct SmithResult {
  // Invariant factors d1 | d2 | ... (positive), one per nonzero diagonal.
  std::vector<BigInt> invariant_factors;
  int rank = 0;
  // The checked 64-bit fast path overflowed and the reduction was rerun on
  // arbitrary-precision integers.
  bool used_bigint = false;
};

// Diagonalize by unimodular row/column operations: smallest-absolute-value
// pivoting with index tie-breaks, so the run is deterministic.  Entries can
// grow during elimination; arithmetic is overflow-checked and falls back to
// arbitrary precision, never returning a silently wrapped answer.
SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace strata
