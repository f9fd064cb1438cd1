#pragma once

// Multilinear algebra over GF(p): tensor powers with the symmetric-group
// action, symmetric powers, bilinear and quadratic forms.
//
// Index tuples are 0-based and ordered lexicographically, so every sparse
// container iterates deterministically.

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "invforms/gflinalg.hpp"

namespace invforms::tensor {

using Multi = std::vector<int>;

/// Sparse element of the n-th tensor power of GF(p)^d.
class Tensor {
 public:
  Tensor(std::uint32_t p, int degree, int dim);
  static Tensor basis(std::uint32_t p, int dim, Multi index);

  std::uint32_t modulus() const { return p_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::map<Multi, std::uint32_t>& terms() const { return terms_; }
  std::uint32_t coeff(const Multi& index) const;

  void add(const Multi& index, std::int64_t c);
  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor scaled(std::int64_t c) const;
  bool is_zero() const { return terms_.empty(); }

  /// sigma . x, where sigma sends tensor slot j to slot sigma[j].
  Tensor permuted(std::span<const int> sigma) const;
  /// Invariant under every permutation of the slots.
  bool is_symmetric() const;

  /// Coordinates in the lexicographic basis of size d^n.
  gf::Vec to_dense() const;
  static Tensor from_dense(std::uint32_t p, int degree, int dim, std::span<const std::uint32_t> v);

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  void check(const Multi& index) const;

  std::uint32_t p_;
  int degree_;
  int dim_;
  std::map<Multi, std::uint32_t> terms_;
};

/// Sparse element of S^n(GF(p)^d), keyed by exponent vectors.
class SymPoly {
 public:
  SymPoly(std::uint32_t p, int degree, int dim);

  std::uint32_t modulus() const { return p_; }
  int degree() const { return degree_; }
  int dim() const { return dim_; }
  const std::map<Multi, std::uint32_t>& terms() const { return terms_; }
  std::uint32_t coeff(const Multi& exponents) const;

  void add(const Multi& exponents, std::int64_t c);
  SymPoly scaled(std::int64_t c) const;
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const SymPoly&, const SymPoly&) = default;

 private:
  std::uint32_t p_;
  int degree_;
  int dim_;
  std::map<Multi, std::uint32_t> terms_;
};

/// All exponent vectors of total degree n in d variables, lexicographically
/// descending (v1^n first).
std::vector<Multi> monomial_basis(int dim, int degree);

/// Bilinear form given by its Gram matrix b(e_i, e_j).
class BilForm {
 public:
  explicit BilForm(gf::PrimeMatrix gram);

  std::uint32_t modulus() const { return gram_.modulus(); }
  int dim() const { return static_cast<int>(gram_.rows()); }
  const gf::PrimeMatrix& gram() const { return gram_; }

  std::uint32_t operator()(std::span<const std::uint32_t> v, std::span<const std::uint32_t> w) const;
  bool is_symmetric() const;
  bool is_alternating() const;

  friend bool operator==(const BilForm&, const BilForm&) = default;

 private:
  gf::PrimeMatrix gram_;
};

/// Quadratic form sum_{i <= j} c_ij x_i x_j, stored upper-triangular.
class QuadForm {
 public:
  QuadForm(std::uint32_t p, int dim);
  /// Entries below the diagonal must be zero.
  explicit QuadForm(gf::PrimeMatrix upper);

  std::uint32_t modulus() const { return coeffs_.modulus(); }
  int dim() const { return static_cast<int>(coeffs_.rows()); }
  const gf::PrimeMatrix& coefficients() const { return coeffs_; }
  std::uint32_t coeff(int i, int j) const;
  void set(int i, int j, std::int64_t c);

  std::uint32_t operator()(std::span<const std::uint32_t> v) const;
  bool is_zero() const { return coeffs_.is_zero(); }

  friend bool operator==(const QuadForm&, const QuadForm&) = default;

 private:
  gf::PrimeMatrix coeffs_;
};

// --- maps between the carriers ---------------------------------------------

/// s(x) = sum over sigma of sigma x, computed orbit by orbit.
Tensor symmetrize(const Tensor& t);
/// alpha(x) = sum over sigma of sign(sigma) sigma x.
Tensor skew_symmetrize(const Tensor& t);
/// The multilinearization phi : S^n -> tensor power.
Tensor multilinearize(const SymPoly& s);
/// The quotient map rho : tensor power -> S^n.
SymPoly project_to_sym(const Tensor& t);
/// psi : symmetric tensors -> S^n.  Throws InvalidInput if t is not symmetric.
SymPoly psi(const Tensor& t);

Tensor to_tensor(const BilForm& b);
BilForm to_bilform(const Tensor& t);
SymPoly to_sympoly(const QuadForm& q);
QuadForm to_quadform(const SymPoly& s);
/// The strictly upper-triangular part of an alternating form, a preimage of b
/// under the quotient onto the second exterior power.
Tensor upper_lift(const BilForm& b);

/// Polar bilinear form b_q(v, w) = q(v + w) - q(v) - q(w).
BilForm polar(const QuadForm& q);

/// Left radical {v : b(v, -) = 0}.
gf::Subspace radical_bilinear(const BilForm& b);
/// {v in rad b_q : q(v) = 0}.
gf::Subspace radical_quadratic(const QuadForm& q);

/// A symmetric p-linear form f (degree p) is characteristic iff f(v,...,v)
/// vanishes identically, iff it is a symmetrized tensor.
bool is_characteristic(const Tensor& f);

/// Tignol's map on (tensor^2 V1) x (tensor^2 V2) -> S^2(V1 (x) V2), evaluated on
/// a pure tensor a (x) b.  Basis of V1 (x) V2 is e_i (x) f_j -> i * d2 + j.
SymPoly tignol_map(const Tensor& a, const Tensor& b);
/// The quadratic form on V1 (x) V2 attached to two alternating forms.
QuadForm tignol_product(const BilForm& b1, const BilForm& b2);

/// Dimensions around phi : S^p(V) -> S''_p(V) for dim V = d, char p.
struct PowerDims {
  std::size_t sym_power;          // dim S^p
  std::size_t symmetrized;        // dim S''_p = rank phi
  std::size_t kernel;             // dim ker phi
  std::size_t symmetric_tensors;  // dim S'_p
};
PowerDims symmetric_power_dims(int dim, std::uint32_t p);

}  // namespace invforms::tensor
