#include "relhom/linalg.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "relhom/errors.hpp"
#include "relhom/kernels.hpp"

namespace relhom {

namespace fp {

Scalar pow(Scalar a, std::uint64_t e, Scalar p) {
  std::uint64_t result = 1 % p;
  std::uint64_t base = a % p;
  while (e > 0) {
    if (e & 1u) result = (result * base) % p;
    base = (base * base) % p;
    e >>= 1u;
  }
  return static_cast<Scalar>(result);
}

Scalar inv(Scalar a, Scalar p) {
  if (a % p == 0) throw ContractViolation("fp::inv: zero has no inverse");
  // Extended Euclid on signed 64-bit values.
  long long t = 0, new_t = 1;
  long long r = p, new_r = a % p;
  while (new_r != 0) {
    const long long q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t, p);
}

Scalar reduce(long long v, Scalar p) {
  long long m = v % static_cast<long long>(p);
  if (m < 0) m += p;
  return static_cast<Scalar>(m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace fp

PrimeField::PrimeField(std::uint64_t p) {
  if (p < 2 || p > (std::uint64_t{1} << 31) || !fp::is_prime(p)) {
    throw ContractViolation("PrimeField: modulus must be a prime in [2, 2^31], got " + std::to_string(p));
  }
  p_ = static_cast<Scalar>(p);
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Scalar p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p < 2) throw ContractViolation("Matrix: modulus must be at least 2");
}

Matrix Matrix::identity(Scalar p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Scalar p, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<std::vector<long long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(p, v);
}

Matrix Matrix::from_rows(Scalar p, const std::vector<std::vector<long long>>& rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : rows.front().size();
  Matrix m(p, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw ContractViolation("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = fp::reduce(rows[i][j], p);
  }
  return m;
}

Matrix Matrix::column(Scalar p, const std::vector<Scalar>& entries) {
  Matrix m(p, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i] % p;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Scalar v) { return v == 0; });
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<Scalar> Matrix::column_vector(std::size_t c) const {
  std::vector<Scalar> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ContractViolation("Matrix::block out of range");
  Matrix b(p_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ContractViolation("Matrix::set_block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(p_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) out(i, k) = (*this)(i, cols[k]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix out(p_, rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t j = 0; j < cols_; ++j) out(k, j) = (*this)(rows[k], j);
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (o.p_ != p_ || o.rows_ != rows_ || o.cols_ != cols_) throw ContractViolation("Matrix +=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = fp::add(data_[i], o.data_[i], p_);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (o.p_ != p_ || o.rows_ != rows_ || o.cols_ != cols_) throw ContractViolation("Matrix -=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = fp::sub(data_[i], o.data_[i], p_);
  return *this;
}

Matrix Matrix::scaled(Scalar s) const {
  Matrix out = *this;
  s %= p_;
  for (auto& v : out.data_) v = fp::mul(v, s, p_);
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& v : out.data_) v = fp::neg(v, p_);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << ']';
  return os.str();
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::matmul(a, b); }

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.modulus() != b.modulus()) throw ContractViolation("hstack: row mismatch");
  Matrix out(a.modulus(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.modulus() != b.modulus()) throw ContractViolation("vstack: column mismatch");
  Matrix out(a.modulus(), a.rows() + b.rows(), a.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), 0, b);
  return out;
}

Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t r = 0, c = 0;
  Scalar p = blocks.empty() ? 2 : blocks.front().modulus();
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix out(p, r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    out.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return out;
}

Matrix power(const Matrix& m, std::uint64_t e) {
  if (!m.is_square()) throw ContractViolation("power: matrix must be square");
  Matrix result = Matrix::identity(m.modulus(), m.rows());
  Matrix base = m;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Elimination

RrefResult rref(const Matrix& m) {
  RrefResult r{m, {}};
  r.pivots = kernels::rref_inplace(r.reduced);
  return r;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  Matrix copy = m;
  // Eliminating the shorter side is cheaper and gives the same rank.
  if (copy.rows() > copy.cols()) copy = copy.transpose();
  return kernels::rref_inplace(copy).size();
}

namespace {

NullSpace null_space_from_rref(const Matrix& reduced, const std::vector<std::size_t>& pivots, std::size_t ncols) {
  const Scalar p = reduced.modulus();
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) {
    if (c < ncols) is_pivot[c] = true;
  }
  NullSpace ns;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (!is_pivot[c]) ns.free_columns.push_back(c);
  }
  ns.basis = Matrix(p, ncols, ns.free_columns.size());
  for (std::size_t k = 0; k < ns.free_columns.size(); ++k) {
    const std::size_t f = ns.free_columns[k];
    ns.basis(f, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] >= ncols) break;
      ns.basis(pivots[i], k) = fp::neg(reduced(i, f), p);
    }
  }
  return ns;
}

}  // namespace

NullSpace null_space(const Matrix& a) {
  auto r = rref(a);
  return null_space_from_rref(r.reduced, r.pivots, a.cols());
}

Matrix kernel_basis(const Matrix& a) { return null_space(a).basis; }

std::optional<Solution> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ContractViolation("solve: a.rows != b.rows");
  if (a.modulus() != b.modulus()) throw ContractViolation("solve: field mismatch");
  const Scalar p = a.modulus();
  Matrix aug = hstack(a, b);
  auto pivots = kernels::rref_inplace(aug);
  for (auto c : pivots) {
    if (c >= a.cols()) return std::nullopt;
  }
  Solution s;
  s.particular = Matrix(p, a.cols(), b.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) s.particular(pivots[i], j) = aug(i, a.cols() + j);
  }
  s.kernel = null_space_from_rref(aug, pivots, a.cols()).basis;
  return s;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw ContractViolation("inverse: matrix must be square");
  auto s = solve(m, Matrix::identity(m.modulus(), m.rows()));
  if (!s || s->kernel.cols() != 0) return std::nullopt;
  return s->particular;
}

Matrix left_inverse(const Matrix& a) {
  auto s = solve(a.transpose(), Matrix::identity(a.modulus(), a.cols()));
  if (!s) throw ContractViolation("left_inverse: matrix lacks full column rank");
  return s->particular.transpose();
}

Matrix right_inverse(const Matrix& a) {
  auto s = solve(a, Matrix::identity(a.modulus(), a.rows()));
  if (!s) throw ContractViolation("right_inverse: matrix lacks full row rank");
  return s->particular;
}

Matrix column_space(const Matrix& a) {
  auto r = rref(a);
  return a.select_columns(r.pivots);
}

bool is_nilpotent(const Matrix& s) {
  if (!s.is_square()) throw ContractViolation("is_nilpotent: matrix must be square");
  if (s.rows() == 0) return true;
  Matrix q = s;
  std::uint64_t e = 1;
  while (e < s.rows()) {
    q = q * q;
    e *= 2;
    if (q.is_zero()) return true;
  }
  return q.is_zero();
}

FittingDecomposition fitting_decomposition(const Matrix& s, std::uint64_t exponent_cap) {
  if (!s.is_square()) throw ContractViolation("fitting_decomposition: matrix must be square");
  const std::size_t n = s.rows();
  const Scalar p = s.modulus();
  if (exponent_cap == 0) exponent_cap = std::max<std::uint64_t>(2, 2 * n);
  FittingDecomposition fd;
  Matrix cur = s;
  std::size_t cur_rank = rank(cur);
  std::uint64_t e = 1;
  for (;;) {
    Matrix next = cur * cur;
    const std::size_t next_rank = rank(next);
    if (next_rank == cur_rank) break;
    cur = std::move(next);
    cur_rank = next_rank;
    e *= 2;
    if (e > exponent_cap) throw Error("fitting_decomposition: powers failed to stabilise under the exponent cap");
  }
  fd.stable_power = cur;
  fd.exponent = e;
  fd.image = column_space(cur);
  fd.kernel = kernel_basis(cur);
  Matrix basis = hstack(fd.image, fd.kernel);
  auto binv = inverse(basis);
  if (!binv) throw Error("fitting_decomposition: image and kernel do not span");
  Matrix proj(p, n, n);
  for (std::size_t i = 0; i < fd.image.cols(); ++i) proj(i, i) = 1;
  fd.idempotent = basis * proj * *binv;
  return fd;
}

// ---------------------------------------------------------------------------
// Spans of matrices

namespace {

std::vector<Scalar> flatten(const Matrix& m) { return m.data(); }

Matrix unflatten(std::span<const Scalar> v, Scalar p, std::size_t rows, std::size_t cols) {
  Matrix m(p, rows, cols);
  std::copy(v.begin(), v.end(), m.data().begin());
  return m;
}

void check_square_family(std::span<const Matrix> span) {
  if (span.empty()) return;
  const auto n = span.front().rows();
  for (const auto& m : span) {
    if (!m.is_square() || m.rows() != n || m.modulus() != span.front().modulus()) {
      throw ContractViolation("matrix span: members must be square of equal size over one field");
    }
  }
}

std::vector<Matrix> independent_basis(std::span<const Matrix> span) {
  if (span.empty()) return {};
  Matrix rows = span_rows(span);
  std::vector<Matrix> out;
  out.reserve(rows.rows());
  const auto n = span.front().rows();
  for (std::size_t i = 0; i < rows.rows(); ++i) out.push_back(unflatten(rows.row(i), rows.modulus(), n, n));
  return out;
}

}  // namespace

Matrix span_rows(std::span<const Matrix> span) {
  if (span.empty()) return {};
  const Scalar p = span.front().modulus();
  const std::size_t width = span.front().rows() * span.front().cols();
  Matrix stacked(p, span.size(), width);
  for (std::size_t i = 0; i < span.size(); ++i) {
    const auto& d = span[i].data();
    std::copy(d.begin(), d.end(), stacked.row(i).begin());
  }
  auto r = rref(stacked);
  return r.reduced.block(0, 0, r.rank(), width);
}

std::optional<std::vector<Scalar>> span_coordinates(std::span<const Matrix> span, const Matrix& m) {
  if (span.empty()) {
    if (m.is_zero()) return std::vector<Scalar>{};
    return std::nullopt;
  }
  const Scalar p = m.modulus();
  const std::size_t width = m.rows() * m.cols();
  Matrix a(p, width, span.size());
  for (std::size_t k = 0; k < span.size(); ++k) {
    const auto& d = span[k].data();
    for (std::size_t i = 0; i < width; ++i) a(i, k) = d[i];
  }
  auto s = solve(a, Matrix::column(p, flatten(m)));
  if (!s) return std::nullopt;
  return s->particular.column_vector(0);
}

bool spans_nilpotent_algebra(std::span<const Matrix> span) {
  check_square_family(span);
  auto base = independent_basis(span);
  if (base.empty()) return true;
  const std::size_t n = base.front().rows();
  auto current = base;
  for (std::size_t step = 0; step <= n; ++step) {
    std::vector<Matrix> products;
    products.reserve(current.size() * base.size());
    for (const auto& c : current) {
      for (const auto& b : base) {
        Matrix prod = c * b;
        if (!prod.is_zero()) products.push_back(std::move(prod));
      }
    }
    auto next = independent_basis(products);
    if (next.empty()) return true;
    if (next.size() == current.size()) {
      // Equal dimension and containment means the chain has stalled at a
      // nonzero algebra S with S·S = S.
      std::vector<Matrix> both = current;
      both.insert(both.end(), next.begin(), next.end());
      if (independent_basis(both).size() == current.size()) return false;
    }
    current = std::move(next);
  }
  return current.empty();
}

std::optional<Matrix> split_idempotent_search(std::span<const Matrix> span, const MatrixPredicate& accept,
                                              const IdempotentSearchOptions& options) {
  check_square_family(span);
  auto base = independent_basis(span);
  if (base.empty()) return std::nullopt;
  const std::size_t n = base.front().rows();
  const Scalar p = base.front().modulus();
  const Matrix id = Matrix::identity(p, n);

  auto admissible = [&](const Matrix& e) {
    if (e.is_zero()) return false;
    if (!options.allow_identity && e == id) return false;
    if (!(e * e == e)) return false;
    if (!span_coordinates(base, e)) return false;
    return !accept || accept(e);
  };

  auto try_candidate = [&](const Matrix& s) -> std::optional<Matrix> {
    if (is_nilpotent(s)) return std::nullopt;
    auto fd = fitting_decomposition(s, options.exponent_cap);
    if (admissible(fd.idempotent)) return fd.idempotent;
    Matrix complement = id - fd.idempotent;
    if (admissible(complement)) return complement;
    return std::nullopt;
  };

  for (const auto& b : base) {
    if (auto e = try_candidate(b)) return e;
  }
  if (base.size() <= 16) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        if (auto e = try_candidate(base[i] + base[j])) return e;
      }
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<Scalar> coeff(0, p - 1);
  for (std::size_t k = 0; k < options.samples; ++k) {
    Matrix s(p, n, n);
    for (const auto& b : base) s += b.scaled(coeff(rng));
    if (auto e = try_candidate(s)) return e;
  }

  // Exhaustive sweep when the span is small enough to enumerate.
  long double count = 1;
  for (std::size_t i = 0; i < base.size(); ++i) count *= p;
  if (count <= static_cast<long double>(options.exhaustive_limit)) {
    std::vector<Scalar> c(base.size(), 0);
    for (;;) {
      std::size_t pos = 0;
      while (pos < c.size() && ++c[pos] == p) c[pos++] = 0;
      if (pos == c.size()) break;
      Matrix s(p, n, n);
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (c[i]) s += base[i].scaled(c[i]);
      }
      if (admissible(s)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace relhom
