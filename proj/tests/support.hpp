#pragma once

// Small helpers shared by the unit tests: seeded random matrices and
// brute-force enumeration over tiny fields.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "relhom/linalg.hpp"

namespace relhom::testing {

inline Matrix random_matrix(std::mt19937_64& rng, Scalar p, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  Matrix m(p, rows, cols);
  for (auto& x : m.data()) x = d(rng);
  return m;
}

/// Calls fn on every vector of F_p^n (n small).
inline void for_each_vector(Scalar p, std::size_t n, const std::function<void(const std::vector<Scalar>&)>& fn) {
  std::vector<Scalar> v(n, 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < n && v[i] == p - 1) v[i++] = 0;
    if (i == n) return;
    ++v[i];
  }
}

inline Matrix combination(const std::vector<Matrix>& span, const std::vector<Scalar>& c) {
  Matrix out(span.front().modulus(), span.front().rows(), span.front().cols());
  for (std::size_t i = 0; i < span.size(); ++i) out += span[i].scaled(c[i]);
  return out;
}

}  // namespace relhom::testing
