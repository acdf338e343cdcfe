#include "relhom/kernels.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "relhom/errors.hpp"

namespace relhom::kernels {
namespace {

void check_product(const Matrix& a, const Matrix& b) {
  if (a.modulus() != b.modulus()) throw ContractViolation("matmul: field mismatch");
  if (a.cols() != b.rows()) throw ContractViolation("matmul: inner dimension mismatch");
}

// Number of products (each < (p-1)^2) that fit in a uint64 accumulator.
std::size_t accumulation_batch(Scalar p) {
  const std::uint64_t sq = std::uint64_t{p - 1} * (p - 1);
  if (sq == 0) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::max<std::uint64_t>(1, (std::numeric_limits<std::uint64_t>::max() - p) / sq));
}

void multiply_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i, std::size_t batch,
                  std::vector<std::uint64_t>& acc) {
  const Scalar p = a.modulus();
  const std::size_t n = b.cols();
  std::fill(acc.begin(), acc.end(), 0);
  std::size_t pending = 0;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const std::uint64_t x = a(i, k);
    if (x == 0) continue;
    const auto brow = b.row(k);
    for (std::size_t j = 0; j < n; ++j) acc[j] += x * brow[j];
    if (++pending == batch) {
      for (auto& v : acc) v %= p;
      pending = 0;
    }
  }
  auto orow = out.row(i);
  for (std::size_t j = 0; j < n; ++j) orow[j] = static_cast<Scalar>(acc[j] % p);
}

void eliminate_row(Matrix& m, std::size_t target, std::size_t pivot_row, std::size_t col) {
  const Scalar p = m.modulus();
  const Scalar f = m(target, col);
  if (f == 0) return;
  auto dst = m.row(target);
  const auto src = m.row(pivot_row);
  for (std::size_t j = col; j < m.cols(); ++j) {
    if (src[j] != 0) dst[j] = fp::sub(dst[j], fp::mul(f, src[j], p), p);
  }
}

template <bool Parallel>
std::vector<std::size_t> rref_impl(Matrix& m) {
  const Scalar p = m.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      auto a = m.row(sel);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Scalar iv = fp::inv(m(r, c), p);
    if (iv != 1) {
      for (auto& v : m.row(r).subspan(c)) v = fp::mul(v, iv, p);
    }
    if constexpr (Parallel) {
      const bool wide = rows * (cols - c) >= kParallelEliminationWork;
      const auto n = static_cast<long long>(rows);
#pragma omp parallel for schedule(static) if (wide)
      for (long long i = 0; i < n; ++i) {
        if (static_cast<std::size_t>(i) != r) eliminate_row(m, static_cast<std::size_t>(i), r, c);
      }
    } else {
      for (std::size_t i = 0; i < rows; ++i) {
        if (i != r) eliminate_row(m, i, r, c);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  Matrix out(a.modulus(), a.rows(), b.cols());
  if (out.empty()) return out;
  const std::size_t batch = accumulation_batch(a.modulus());
  const bool big = a.rows() * a.cols() * b.cols() >= kParallelMatmulWork;
  const auto n = static_cast<long long>(a.rows());
#pragma omp parallel if (big)
  {
    std::vector<std::uint64_t> acc(b.cols());
#pragma omp for schedule(static)
    for (long long i = 0; i < n; ++i) multiply_row(a, b, out, static_cast<std::size_t>(i), batch, acc);
  }
  return out;
}

std::vector<std::size_t> rref_inplace(Matrix& m) { return rref_impl<true>(m); }

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b) {
  check_product(a, b);
  const Scalar p = a.modulus();
  Matrix out(p, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = fp::add(s, fp::mul(a(i, k), b(k, j), p), p);
      out(i, j) = s;
    }
  }
  return out;
}

std::vector<std::size_t> rref_inplace(Matrix& m) { return rref_impl<false>(m); }

}  // namespace serial
}  // namespace relhom::kernels
