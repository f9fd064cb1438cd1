#pragma once

// The reduced Killing form of a split simple group in characteristic 2 and
// the orthogonality of the irreducible adjoint-type module L(highest root).

#include <optional>
#include <vector>

#include "invforms/gflinalg.hpp"
#include "invforms/rootsys.hpp"
#include "invforms/tensoralg.hpp"

namespace invforms::killing {

struct ReducedKilling {
  RootSystem rs;
  /// q(v) = v^T DC v / 2 on the coroot lattice, reduced mod 2.
  tensor::QuadForm toral_part;
  /// DC mod 2, the Gram of the polar of toral_part.
  gf::PrimeMatrix dc_mod2;
  /// Root planes spanned by short root vectors degenerate to a zero form when
  /// the length ratio is even.
  bool short_root_zero;
  int hyperbolic_count;
  int zero_block_count;
};

ReducedKilling reduced_killing(const RootSystem& rs);

/// U = ker(DC mod 2).
gf::Subspace toral_radical(const RootSystem& rs);

/// Whether L(highest root) carries a nonzero invariant quadratic form in
/// characteristic 2, i.e. whether the toral part vanishes on U.
bool adjoint_orthogonal(const RootSystem& rs);

struct AdjointRow {
  CartanType type;
  int rank;
  bool orthogonal;
  std::size_t radical_dim;
  /// dim H^1(G, L(highest root)); static literature annotation, not computed.
  std::optional<int> h1_annotation;
};

/// A_1..A_K, B_3..B_K, C_2..C_K, D_4..D_K, then E6, E7, E8, F4, G2.  K >= 8.
std::vector<AdjointRow> adjoint_table(int max_rank);

/// Looks up the H^1 annotation for a type; nullopt outside the tabulated ranges.
std::optional<int> h1_annotation(CartanType type, int rank);

}  // namespace invforms::killing
