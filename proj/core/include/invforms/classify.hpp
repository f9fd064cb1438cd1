#pragma once

// Decision procedures for invariant bilinear and quadratic forms on
// irreducible, Weyl, induced and tilting modules of split reductive groups.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "invforms/rootsys.hpp"

namespace invforms::classify {

enum class ModuleKind { irreducible, weyl, induced, tilting };
std::string to_string(ModuleKind k);
ModuleKind parse_module_kind(std::string_view s);

struct FormVerdict {
  ModuleKind kind;
  std::optional<std::int64_t> bilinear_dim;  // nullopt = unknown
  std::optional<bool> symplectic;
  std::optional<bool> orthogonal;
  /// dim H^1(G, Lambda^2 H^0(lambda)); only filled for induced modules in char 2.
  std::optional<int> h1_wedge2;
  std::string certificate;

  /// Irreducible and Weyl verdicts need all three answers; for induced and
  /// tilting modules the bilinear dimension is the question asked.
  bool decided() const {
    if (kind == ModuleKind::induced || kind == ModuleKind::tilting) return bilinear_dim.has_value();
    return bilinear_dim && symplectic && orthogonal;
  }
};

/// dim (Bil L(lambda))^G = dim (Bil V(lambda))^G: 1 iff lambda is self-dual.
int bilinear_dim_simple_or_weyl(const RootSystem& rs, const Weight& lambda);
int bilinear_dim_simple_or_weyl(const ProductDatum& datum, const ProductWeight& lambda);

enum class Indicator { orthogonal, symplectic, none };
std::string to_string(Indicator i);

/// <lambda, 2 rho^vee>, the sum of <lambda, beta^vee> over positive roots.
std::int64_t two_rho_pairing(const RootSystem& rs, const Weight& lambda);
/// Characteristic-0 type of V(lambda): none unless self-dual, otherwise
/// orthogonal iff <lambda, 2 rho^vee> is even.
Indicator classical_indicator(const RootSystem& rs, const Weight& lambda);
Indicator classical_indicator(const ProductDatum& datum, const ProductWeight& lambda);

enum class Char2Branch { orthogonal, sp_exception, not_self_dual };
std::string to_string(Char2Branch b);

/// lambda is the tautological weight of a single Sp_2n factor and vanishes
/// elsewhere.  Covers C_n omega_1 and the isomorphic A_1 omega_1, B_2 omega_2.
bool is_sp_exception(const ProductDatum& datum, const ProductWeight& lambda);

/// Trichotomy for V(lambda) in characteristic 2.  Rejects lambda = 0.
Char2Branch weyl_orthogonal_char2(const ProductDatum& datum, const ProductWeight& lambda);

struct NcritChain {
  bool not_sum_pos_roots;
  bool not_in_W2_orbit;
  bool implied_orthogonal;
};
/// Sufficient conditions for L(lambda) to be orthogonal in characteristic 2.
NcritChain ncrit_chain(const RootSystem& rs, const Weight& lambda);

enum class RadicalCase { case_i, case_ii, unknown };
std::string to_string(RadicalCase c);

/// Whether the invariant quadratic form on V(lambda) vanishes on its radical
/// (case_i, so L(lambda) is orthogonal) or not (case_ii).  Requires the
/// trichotomy to return orthogonal.
RadicalCase weyl_quadratic_radical_case(const ProductDatum& datum, const ProductWeight& lambda);

struct FiltrationTable {
  Weight lambda;
  std::map<Weight, std::int64_t> entries;  // mu -> [T(lambda) : H^0(mu)]
};
/// Throws InvalidInput unless entries[lambda] == 1, every mu is dominant with
/// mu <= lambda, and multiplicities are non-negative.
void validate(const RootSystem& rs, const FiltrationTable& t);

struct TiltingDim {
  std::int64_t dim;
  std::int64_t lambda_term;
};
/// sum_mu [T(-w0 lambda) : H^0(mu)] [T(lambda) : H^0(mu)].  tdual must be the
/// table of -w0 lambda; for self-dual lambda pass the same table twice.
TiltingDim tilting_bilinear_dim(const RootSystem& rs, const FiltrationTable& t,
                                const FiltrationTable& tdual);

/// dim (Bil H^0(highest root))^G in characteristic p (0 for characteristic 0).
int induced_adjoint_bilinear_dim(const RootSystem& rs, std::uint32_t p);

/// dim H^1(G, Lambda^2 H^0(lambda)) in characteristic 2.
int h1_wedge2_induced(const ProductDatum& datum, const ProductWeight& lambda);

/// For nonzero self-dual lambda, mu (which carry alternating forms in char 2),
/// V(lambda + mu) is orthogonal.  Throws InvalidInput if the hypotheses fail.
bool sum_rule_orthogonal(const ProductDatum& datum, const ProductWeight& lambda,
                         const ProductWeight& mu);

/// Full verdict for a module of the given kind.  p is 0 or a prime.  Tilting
/// modules need the filtration tables (simple datum only).
FormVerdict classify(const ProductDatum& datum, const ProductWeight& lambda, std::uint32_t p,
                     ModuleKind kind, const FiltrationTable* tilting = nullptr,
                     const FiltrationTable* tilting_dual = nullptr);

}  // namespace invforms::classify
