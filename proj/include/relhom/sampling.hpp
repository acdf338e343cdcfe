#pragma once

// Seeded generators for modules, morphisms and matrices. One Rng per run;
// all draws go through it so reports are reproducible from the seed.

#include <cstdint>
#include <random>
#include <vector>

#include "relhom/module.hpp"

namespace relhom {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}
  std::uint64_t seed() const noexcept { return seed_; }
  Scalar scalar(Scalar p) { return std::uniform_int_distribution<Scalar>(0, p - 1)(engine_); }
  Scalar nonzero(Scalar p) { return std::uniform_int_distribution<Scalar>(1, p - 1)(engine_); }
  /// Uniform in [0, n); n must be positive.
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }
  bool coin() { return below(2) == 1; }
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

Matrix random_matrix(Rng& rng, Scalar p, std::size_t rows, std::size_t cols);
Matrix random_invertible(Rng& rng, Scalar p, std::size_t n);
/// Uniform element of Hom(m, n).
Morphism random_morphism(Rng& rng, const Module& m, const Module& n);
/// Cokernel of a random map between sums of at most `max_summands` indecomposable projectives.
Module random_module(Rng& rng, const AlgebraPtr& algebra, std::size_t max_summands = 2);
/// The same module after a random change of basis at every vertex.
Module random_conjugate(Rng& rng, const Module& m);
/// Sum of `count` modules drawn from `pool` (with repetition), conjugated.
Module random_sum(Rng& rng, const std::vector<Module>& pool, std::size_t count);

}  // namespace relhom
