#pragma once

// Bilinear and quadratic forms on exterior powers of a symplectic space.
//
// Basis of V: index i < n is e_{i+1}, index n + i is f_{i+1}.  The integral
// companion form b_Z is symmetric with b_Z(e_i, f_i) = b_Z(f_i, e_i) = 1; it
// agrees with the symplectic form mod 2.  Lambda^r(V) uses the
// lexicographically ordered strictly increasing r-subsets as its basis.

#include <cstdint>
#include <random>
#include <vector>

#include "invforms/gflinalg.hpp"
#include "invforms/tensoralg.hpp"

namespace invforms::symp {

inline constexpr int kDefaultMaxN = 5;

class SymplecticSpace {
 public:
  explicit SymplecticSpace(int n, int max_n = kDefaultMaxN);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  /// Partner index: e_i <-> f_i.
  int partner(int i) const { return i < n_ ? i + n_ : i - n_; }
  /// Standard symplectic Gram matrix over GF(2).
  gf::PrimeMatrix gram() const;
  /// b_Z as an integer matrix.
  gf::IntMatrix integral_gram() const;

 private:
  int n_;
};

/// Strictly increasing r-subsets of {0..dim-1}, lexicographic.
std::vector<std::vector<int>> wedge_basis(int dim, int r);
/// Position of a strictly increasing subset in wedge_basis(dim, r).
std::size_t wedge_index(int dim, const std::vector<int>& subset);
std::string symbol_name(const SymplecticSpace& sp, const std::vector<int>& subset);

/// Gram of (b_Z)_(r) on the symbol basis: entries det(b_Z(x_i, y_j)).
gf::IntMatrix wedge_bilinear_integral(const SymplecticSpace& sp, int r);
/// b_(r) over GF(2).
tensor::BilForm wedge_bilinear(const SymplecticSpace& sp, int r);
/// The integral values (b_Z)_(r)(x, x) on the basis symbols.
std::vector<gf::BigInt> diagonal_values(const SymplecticSpace& sp, int r);

/// q_(r) over GF(2) for odd r, from halving the integral diagonal.
/// Throws InvalidInput for even r and InternalError on an odd diagonal value.
tensor::QuadForm wedge_quadratic(const SymplecticSpace& sp, int r);
/// x -> b_(r)(x, x) over GF(2); for even r.
tensor::QuadForm even_wedge_form(const SymplecticSpace& sp, int r);

/// Root-subgroup elements x_a(1) for the simple roots, their negatives and the
/// lowest root, as 2n x 2n matrices over GF(2) acting on columns.
std::vector<gf::PrimeMatrix> sp_generators(const SymplecticSpace& sp);
/// g^T J g == J.
bool preserves_form(const SymplecticSpace& sp, const gf::PrimeMatrix& g);

/// Action of g on Lambda^r(V): column S holds the r x r minors g[T, S].
gf::PrimeMatrix induced_action(const gf::PrimeMatrix& g, int r);

/// Span of the generator-type symbols in Lambda^r(V): the closure of
/// e_1 ^ ... ^ e_r under the induced generators.  Requires 1 <= r <= n.
gf::Subspace generator_submodule(const SymplecticSpace& sp, int r);

/// Wedge of r vectors of V, in the symbol basis.
gf::Vec wedge_of(const std::vector<gf::Vec>& vectors);
/// Random symbol v_1 ^ ... ^ v_r with the v_i independent and spanning a
/// totally isotropic subspace, built greedily.
gf::Vec random_generator_symbol(const SymplecticSpace& sp, int r, std::mt19937_64& rng);

/// True iff q(g z) = q(z) and b_q(g z, g z') = b_q(z, z') for all basis vectors
/// z, z' of W and each induced generator g, and q is preserved on
/// `random_sums` random elements of W.
bool verify_invariance(const tensor::QuadForm& q, const std::vector<gf::PrimeMatrix>& induced,
                       const gf::Subspace& w, int random_sums = 64, std::uint64_t seed = 1);

}  // namespace invforms::symp
