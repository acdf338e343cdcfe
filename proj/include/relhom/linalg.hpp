#pragma once

// Exact dense linear algebra over a prime field F_p.
//
// Matrices act on column vectors. Every matrix carries its modulus so that
// values are self-describing; combining matrices over different fields is a
// contract violation. Zero-row and zero-column matrices are ordinary values.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace relhom {

using Scalar = std::uint32_t;

namespace fp {

inline Scalar add(Scalar a, Scalar b, Scalar p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Scalar>(s >= p ? s - p : s);
}
inline Scalar sub(Scalar a, Scalar b, Scalar p) {
  return a >= b ? a - b : static_cast<Scalar>(std::uint64_t{a} + p - b);
}
inline Scalar neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }
inline Scalar mul(Scalar a, Scalar b, Scalar p) {
  return static_cast<Scalar>((std::uint64_t{a} * b) % p);
}
Scalar pow(Scalar a, std::uint64_t e, Scalar p);
/// Multiplicative inverse; `a` must be nonzero mod p.
Scalar inv(Scalar a, Scalar p);
/// Canonical residue of an arbitrary integer.
Scalar reduce(long long v, Scalar p);
bool is_prime(std::uint64_t n);

}  // namespace fp

/// Validated prime modulus, 2 <= p <= 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p = 2);
  Scalar modulus() const noexcept { return p_; }
  Scalar reduce(long long v) const { return fp::reduce(v, p_); }
  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Scalar p_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(Scalar p, std::size_t rows, std::size_t cols);

  static Matrix zero(Scalar p, std::size_t rows, std::size_t cols) { return {p, rows, cols}; }
  static Matrix identity(Scalar p, std::size_t n);
  /// Entries given as arbitrary integers, reduced mod p.
  static Matrix from_rows(Scalar p, std::initializer_list<std::initializer_list<long long>> rows);
  static Matrix from_rows(Scalar p, const std::vector<std::vector<long long>>& rows);
  static Matrix column(Scalar p, const std::vector<Scalar>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar modulus() const noexcept { return p_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Scalar>& data() const noexcept { return data_; }
  std::vector<Scalar>& data() noexcept { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;
  std::vector<Scalar> column_vector(std::size_t c) const;
  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix scaled(Scalar s) const;
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  Scalar p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(std::span<const Matrix> blocks);
Matrix power(const Matrix& m, std::uint64_t e);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Null space basis in the canonical form read off the RREF: column k is the
/// unique kernel vector with a 1 at free column `free_columns[k]` and zeros at
/// the other free columns. So the coordinates of any kernel vector are its
/// entries at the free columns.
struct NullSpace {
  Matrix basis;
  std::vector<std::size_t> free_columns;
};

NullSpace null_space(const Matrix& a);
Matrix kernel_basis(const Matrix& a);

struct Solution {
  Matrix particular;
  Matrix kernel;
};

/// Solves a·x = b for all columns of b at once. Absent when inconsistent.
std::optional<Solution> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
/// l with l·a = I, for `a` of full column rank.
Matrix left_inverse(const Matrix& a);
/// r with a·r = I, for `a` of full row rank.
Matrix right_inverse(const Matrix& a);
/// Basis (as columns) of the column space.
Matrix column_space(const Matrix& a);

bool is_nilpotent(const Matrix& s);

/// Fitting decomposition of an endomorphism of F_p^n: s^N for N a power of
/// two past stabilisation splits the space as image ⊕ kernel; `idempotent`
/// projects onto the image along the kernel and is a polynomial in s.
struct FittingDecomposition {
  Matrix stable_power;
  Matrix image;
  Matrix kernel;
  Matrix idempotent;
  std::uint64_t exponent = 1;
};

FittingDecomposition fitting_decomposition(const Matrix& s, std::uint64_t exponent_cap = 0);

struct IdempotentSearchOptions {
  bool allow_identity = false;
  std::size_t samples = 256;
  std::uint64_t seed = 0x5eed;
  /// Enumerate the whole span when it has at most this many elements.
  std::uint64_t exhaustive_limit = 1u << 16;
  std::uint64_t exponent_cap = 0;
};

using MatrixPredicate = std::function<bool(const Matrix&)>;

/// Looks for a nonzero idempotent in the linear span of `span` that passes
/// `accept` (and is not the identity unless allowed). Candidates are Fitting
/// idempotents of basis elements and of seeded random combinations; small
/// spans are enumerated exhaustively, which makes absence exact there.
std::optional<Matrix> split_idempotent_search(std::span<const Matrix> span,
                                              const MatrixPredicate& accept = {},
                                              const IdempotentSearchOptions& options = {});

/// Exact test that the multiplicative closure of a linear span of square
/// matrices consists of nilpotents, i.e. the descending chain S ⊇ S·S ⊇ ...
/// reaches 0. Only meaningful for spans closed under multiplication.
bool spans_nilpotent_algebra(std::span<const Matrix> span);

/// Basis of the span as flattened row vectors (rows of the result).
Matrix span_rows(std::span<const Matrix> span);
/// Coordinates of `m` w.r.t. `span` when it lies in it.
std::optional<std::vector<Scalar>> span_coordinates(std::span<const Matrix> span, const Matrix& m);

}  // namespace relhom
