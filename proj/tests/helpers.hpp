#pragma once

#include <doctest.h>

#include "imprim/matrix.hpp"

namespace imprim::testing {

inline double dist(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

inline Matrix eye(int n) { return Matrix::Identity(n, n); }

// Exhaustive associativity scan, the oracle for Cayley-table validation.
inline bool associative_table(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

}  // namespace imprim::testing
