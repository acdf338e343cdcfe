#include <gtest/gtest.h>

#include "relhom/kernels.hpp"
#include "support.hpp"

using namespace relhom;
using relhom::testing::random_matrix;

TEST(Kernels, MatmulMatchesSerial) {
  std::mt19937_64 rng(1);
  for (Scalar p : {2u, 3u, 65521u, 2147483647u}) {
    for (std::size_t n : {0u, 1u, 7u, 40u, 90u}) {
      auto a = random_matrix(rng, p, n, n + 3);
      auto b = random_matrix(rng, p, n + 3, n / 2 + 1);
      EXPECT_EQ(kernels::matmul(a, b), kernels::serial::matmul(a, b)) << "p=" << p << " n=" << n;
    }
  }
}

TEST(Kernels, RrefMatchesSerial) {
  std::mt19937_64 rng(2);
  for (Scalar p : {2u, 5u, 2147483647u}) {
    for (std::size_t n : {0u, 3u, 30u, 120u}) {
      auto m = random_matrix(rng, p, n, n + 5);
      if (n > 4) m.set_block(n - 1, 0, m.block(0, 0, 1, n + 5));
      auto a = m, b = m;
      auto pa = kernels::rref_inplace(a);
      auto pb = kernels::serial::rref_inplace(b);
      EXPECT_EQ(pa, pb);
      EXPECT_EQ(a, b);
    }
  }
}

TEST(Kernels, ProductIsAssociative) {
  std::mt19937_64 rng(4);
  auto a = random_matrix(rng, 7, 50, 60);
  auto b = random_matrix(rng, 7, 60, 40);
  auto c = random_matrix(rng, 7, 40, 30);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_GE(kernels::max_threads(), 1);
}
