#pragma once

// Exact linear algebra over prime fields GF(p) and over the integers.
//
// PrimeMatrix keeps its entries reduced mod p.  When p == 2 the rows are
// bit-packed into 64-bit words and elimination runs on whole words with XOR;
// for any other prime a dense row-major array of residues is used.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace invforms::gf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A vector over GF(p): residues in [0, p).
using Vec = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);

/// Modular helpers.  `p` is assumed prime and `a`, `b` reduced.
std::uint32_t mod_reduce(std::int64_t a, std::uint32_t p);
std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

class PrimeMatrix {
 public:
  PrimeMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static PrimeMatrix identity(std::uint32_t p, std::size_t n);
  static PrimeMatrix from_rows(std::uint32_t p,
                               const std::vector<std::vector<std::int64_t>>& rows);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool packed() const { return p_ == 2; }

  std::uint32_t at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::int64_t value);

  Vec row(std::size_t i) const;
  void set_row(std::size_t i, std::span<const std::uint32_t> values);

  PrimeMatrix transpose() const;
  PrimeMatrix operator*(const PrimeMatrix& rhs) const;
  Vec apply(std::span<const std::uint32_t> x) const;

  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const PrimeMatrix& a, const PrimeMatrix& b);

  /// Word storage of a packed row; only valid when packed().
  std::span<std::uint64_t> bits(std::size_t i);
  std::span<const std::uint64_t> bits(std::size_t i) const;
  std::size_t words_per_row() const { return words_; }

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_ = 0;
  std::vector<std::uint32_t> dense_;
  std::vector<std::uint64_t> bits_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  PrimeMatrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
};

/// Row-reduces with the packed XOR path when p == 2.
Echelon row_reduce(const PrimeMatrix& m);
/// Row-reduces on a dense residue array regardless of p.  Used to cross-check
/// the packed path.
Echelon row_reduce_generic(const PrimeMatrix& m);

std::size_t rank(const PrimeMatrix& m);
/// Basis of {x : m x = 0}; exactly cols - rank vectors.
std::vector<Vec> kernel_basis(const PrimeMatrix& m);
/// Some x with m x = b, if one exists.
std::optional<Vec> solve(const PrimeMatrix& m, std::span<const std::uint32_t> b);

/// A subspace of GF(p)^dim kept as a reduced row echelon basis.
class Subspace {
 public:
  Subspace(std::uint32_t p, std::size_t dim);
  Subspace(std::uint32_t p, std::size_t dim, const std::vector<Vec>& spanning);

  std::uint32_t modulus() const { return p_; }
  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

  /// Adds v to the span; returns false if v was already in it.
  bool insert(std::span<const std::uint32_t> v);
  bool contains(std::span<const std::uint32_t> v) const;
  bool contains(const Subspace& other) const;

 private:
  Vec reduce(std::span<const std::uint32_t> v) const;

  std::uint32_t p_;
  std::size_t dim_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BigInt& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  BigInt& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  IntMatrix transpose() const;
  PrimeMatrix reduce_mod(std::uint32_t p) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

/// Fraction-free (Bareiss) determinant.  Throws InvalidInput when not square.
BigInt det(const IntMatrix& m);

/// Unique solution of a square nonsingular system over the rationals, or
/// nullopt when the matrix is singular.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a,
                                                    std::span<const BigInt> b);

}  // namespace invforms::gf
