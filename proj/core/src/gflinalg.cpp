#include "invforms/gflinalg.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "invforms/error.hpp"

namespace invforms::gf {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_reduce(std::int64_t a, std::uint32_t p) {
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw InvalidInput("zero has no inverse mod p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// ---------------------------------------------------------------------------
// PrimeMatrix

PrimeMatrix::PrimeMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols) {
  if (!is_prime(p)) throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
  if (p == 2) {
    words_ = (cols + 63) / 64;
    bits_.assign(rows * words_, 0);
  } else {
    dense_.assign(rows * cols, 0);
  }
}

PrimeMatrix PrimeMatrix::identity(std::uint32_t p, std::size_t n) {
  PrimeMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

PrimeMatrix PrimeMatrix::from_rows(std::uint32_t p,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  PrimeMatrix m(p, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::uint32_t PrimeMatrix::at(std::size_t i, std::size_t j) const {
  if (packed()) return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
  return dense_[i * cols_ + j];
}

void PrimeMatrix::set(std::size_t i, std::size_t j, std::int64_t value) {
  std::uint32_t v = mod_reduce(value, p_);
  if (packed()) {
    std::uint64_t& w = bits_[i * words_ + j / 64];
    std::uint64_t mask = std::uint64_t{1} << (j % 64);
    w = v ? (w | mask) : (w & ~mask);
  } else {
    dense_[i * cols_ + j] = v;
  }
}

Vec PrimeMatrix::row(std::size_t i) const {
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

void PrimeMatrix::set_row(std::size_t i, std::span<const std::uint32_t> values) {
  for (std::size_t j = 0; j < cols_; ++j) set(i, j, values[j]);
}

std::span<std::uint64_t> PrimeMatrix::bits(std::size_t i) {
  return {bits_.data() + i * words_, words_};
}

std::span<const std::uint64_t> PrimeMatrix::bits(std::size_t i) const {
  return {bits_.data() + i * words_, words_};
}

PrimeMatrix PrimeMatrix::transpose() const {
  PrimeMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (std::uint32_t v = at(i, j)) t.set(j, i, v);
  return t;
}

PrimeMatrix PrimeMatrix::operator*(const PrimeMatrix& rhs) const {
  if (p_ != rhs.p_ || cols_ != rhs.rows_) throw InvalidInput("matrix product shape mismatch");
  PrimeMatrix out(p_, rows_, rhs.cols_);
  if (packed()) {
    for (std::size_t i = 0; i < rows_; ++i) {
      auto dst = out.bits(i);
      for (std::size_t k = 0; k < cols_; ++k) {
        if (!at(i, k)) continue;
        auto src = rhs.bits(k);
        for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
      }
    }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t a = at(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        out.dense_[i * out.cols_ + j] =
            mod_add(out.dense_[i * out.cols_ + j], mod_mul(a, rhs.at(k, j), p_), p_);
    }
  return out;
}

Vec PrimeMatrix::apply(std::span<const std::uint32_t> x) const {
  if (x.size() != cols_) throw InvalidInput("vector length does not match matrix");
  Vec y(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t{at(i, j)} * x[j] % p_;
    y[i] = static_cast<std::uint32_t>(acc % p_);
  }
  return y;
}

bool PrimeMatrix::is_zero() const {
  if (packed()) return std::all_of(bits_.begin(), bits_.end(), [](auto w) { return w == 0; });
  return std::all_of(dense_.begin(), dense_.end(), [](auto v) { return v == 0; });
}

bool PrimeMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool operator==(const PrimeMatrix& a, const PrimeMatrix& b) {
  return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.dense_ == b.dense_ &&
         a.bits_ == b.bits_;
}

// ---------------------------------------------------------------------------
// Elimination

namespace {

Echelon reduce_packed(PrimeMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = r;
    while (pivot < m.rows() && !(m.bits(pivot)[w] & mask)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      auto a = m.bits(pivot), b = m.bits(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.bits(r);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      auto row = m.bits(i);
      if (!(row[w] & mask)) continue;
      // Words below w are already zero in the pivot row.
      for (std::size_t k = w; k < row.size(); ++k) row[k] ^= prow[k];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Echelon reduce_dense(const PrimeMatrix& src) {
  const std::uint32_t p = src.modulus();
  const std::size_t rows = src.rows(), cols = src.cols();
  std::vector<std::uint32_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = src.at(i, j);

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                       a.begin() + r * cols);
    const std::uint32_t inv = mod_inv(a[r * cols + c], p);
    for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = mod_mul(a[r * cols + j], inv, p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t f = a[i * cols + c];
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = mod_sub(a[i * cols + j], mod_mul(f, a[r * cols + j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  PrimeMatrix out(p, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i * cols + j]) out.set(i, j, a[i * cols + j]);
  return {std::move(out), std::move(pivots)};
}

}  // namespace

Echelon row_reduce(const PrimeMatrix& m) {
  return m.packed() ? reduce_packed(m) : reduce_dense(m);
}

Echelon row_reduce_generic(const PrimeMatrix& m) { return reduce_dense(m); }

std::size_t rank(const PrimeMatrix& m) { return row_reduce(m).rank(); }

std::vector<Vec> kernel_basis(const PrimeMatrix& m) {
  const Echelon e = row_reduce(m);
  const std::uint32_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = mod_sub(0, e.reduced.at(i, free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const PrimeMatrix& m, std::span<const std::uint32_t> b) {
  if (b.size() != m.rows()) throw InvalidInput("right-hand side length mismatch");
  PrimeMatrix aug(m.modulus(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (auto v = m.at(i, j)) aug.set(i, j, v);
    aug.set(i, m.cols(), b[i]);
  }
  const Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced.at(i, m.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim) {
  if (!is_prime(p)) throw InvalidInput("modulus is not prime");
}

Subspace::Subspace(std::uint32_t p, std::size_t dim, const std::vector<Vec>& spanning)
    : Subspace(p, dim) {
  for (const auto& v : spanning) insert(v);
}

Vec Subspace::reduce(std::span<const std::uint32_t> v) const {
  if (v.size() != dim_) throw InvalidInput("vector length does not match subspace ambient");
  Vec r(v.begin(), v.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const std::uint32_t f = r[pivots_[k]];
    if (!f) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      r[j] = mod_sub(r[j], mod_mul(f, basis_[k][j], p_), p_);
  }
  return r;
}

bool Subspace::insert(std::span<const std::uint32_t> v) {
  Vec r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](auto x) { return x != 0; });
  if (it == r.end()) return false;
  const std::size_t c = static_cast<std::size_t>(it - r.begin());
  const std::uint32_t inv = mod_inv(r[c], p_);
  for (auto& x : r) x = mod_mul(x, inv, p_);
  // Keep the basis fully reduced: clear column c in existing rows.
  for (auto& b : basis_) {
    const std::uint32_t f = b[c];
    if (!f) continue;
    for (std::size_t j = 0; j < dim_; ++j) b[j] = mod_sub(b[j], mod_mul(f, r[j], p_), p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, c);
  basis_.insert(basis_.begin() + idx, std::move(r));
  return true;
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const Vec& v) { return contains(v); });
}

// ---------------------------------------------------------------------------
// Integer matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

PrimeMatrix IntMatrix::reduce_mod(std::uint32_t p) const {
  PrimeMatrix m(p, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      BigInt r = at(i, j) % p;
      if (r < 0) r += p;
      m.set(i, j, static_cast<std::int64_t>(r));
    }
  return m;
}

BigInt det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a.at(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a,
                                                    std::span<const BigInt> b) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw InvalidInput("solve_rational needs a square system");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a.at(i, j));
    m[i][n] = Rational(b[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

}  // namespace invforms::gf
