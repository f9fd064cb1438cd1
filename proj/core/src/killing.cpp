#include "invforms/killing.hpp"

#include "invforms/error.hpp"

namespace invforms::killing {

ReducedKilling reduced_killing(const RootSystem& rs) {
  const int n = rs.rank();
  tensor::QuadForm q(2, n);
  gf::PrimeMatrix dc(2, n, n);
  for (int i = 0; i < n; ++i) {
    const std::int64_t di = rs.coroot_length(i);
    for (int j = 0; j < n; ++j) dc.set(i, j, di * rs.cartan(i, j));
    // (DC)_ii = 2 D_i, so the diagonal coefficient of v^T DC v / 2 is D_i.
    q.set(i, i, di);
    for (int j = i + 1; j < n; ++j) q.set(i, j, di * rs.cartan(i, j));
  }
  if (!(tensor::polar(q).gram() == dc)) throw InternalError("toral polar form differs from DC mod 2");

  const bool short_zero = rs.length_ratio() % 2 == 0;
  int hyperbolic = 0, zero = 0;
  for (const auto& beta : rs.positive_roots()) {
    const bool is_short = rs.length_ratio() > 1 && rs.root_square_length(beta) == 1;
    if (is_short && short_zero)
      ++zero;
    else
      ++hyperbolic;
  }
  return {rs, std::move(q), std::move(dc), short_zero, hyperbolic, zero};
}

gf::Subspace toral_radical(const RootSystem& rs) {
  const auto rk = reduced_killing(rs);
  return gf::Subspace(2, rs.rank(), gf::kernel_basis(rk.dc_mod2));
}

bool adjoint_orthogonal(const RootSystem& rs) {
  // Hyperbolic planes are nondegenerate and the degenerate short-root planes
  // carry the zero form, so only the toral part can obstruct vanishing.
  const auto rk = reduced_killing(rs);
  const gf::Subspace u(2, rs.rank(), gf::kernel_basis(rk.dc_mod2));
  const auto& basis = u.basis();
  if (basis.size() <= 20) {
    // Gray-code walk over all of U.
    gf::Vec v(rs.rank(), 0);
    const std::uint64_t count = std::uint64_t{1} << basis.size();
    for (std::uint64_t k = 1; k < count; ++k) {
      const int flip = __builtin_ctzll(k);
      for (int i = 0; i < rs.rank(); ++i) v[i] ^= basis[flip][i];
      if (rk.toral_part(v)) return false;
    }
    return true;
  }
  // q is additive on U, so the basis decides.
  for (const auto& b : basis)
    if (rk.toral_part(b)) return false;
  return true;
}

std::optional<int> h1_annotation(CartanType type, int n) {
  // dim H^1(G, L(highest root)) in characteristic 2 from the published
  // module structure of the adjoint Weyl module (Hiss).  Static data.
  switch (type) {
    case CartanType::A:
      if (n < 1) return std::nullopt;
      return (n % 4 == 0 || n % 4 == 2) ? 0 : 1;
    case CartanType::B:
      if (n < 3) return std::nullopt;
      return (n % 4 == 1 || n % 4 == 3) ? 0 : 1;
    case CartanType::C:
      if (n < 2) return std::nullopt;
      return 1;
    case CartanType::D:
      if (n < 4) return std::nullopt;
      return (n % 2 == 1) ? 1 : 2;
    case CartanType::E:
      return n == 7 ? 1 : 0;
    case CartanType::F:
    case CartanType::G:
      return 0;
  }
  return std::nullopt;
}

std::vector<AdjointRow> adjoint_table(int max_rank) {
  if (max_rank < 8) throw InvalidInput("adjoint table needs max rank >= 8 to include E8");
  std::vector<AdjointRow> rows;
  auto add = [&](CartanType t, int n) {
    RootSystem rs(t, n);
    rows.push_back({t, n, adjoint_orthogonal(rs), toral_radical(rs).dim(), h1_annotation(t, n)});
  };
  for (int n = 1; n <= max_rank; ++n) add(CartanType::A, n);
  for (int n = 3; n <= max_rank; ++n) add(CartanType::B, n);
  for (int n = 2; n <= max_rank; ++n) add(CartanType::C, n);
  for (int n = 4; n <= max_rank; ++n) add(CartanType::D, n);
  add(CartanType::E, 6);
  add(CartanType::E, 7);
  add(CartanType::E, 8);
  add(CartanType::F, 4);
  add(CartanType::G, 2);
  return rows;
}

}  // namespace invforms::killing
