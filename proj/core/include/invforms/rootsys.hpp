#pragma once

// Root data for split simple types A-G and finite products with a torus.
//
// Conventions (Bourbaki numbering of simple roots):
//   cartan(i, j) = <alpha_i, alpha_j^vee>, so row i of the Cartan matrix is
//   alpha_i written in fundamental-weight coordinates.
//   root_length(i) is the square length of alpha_i normalised so short roots
//   have length 1 and long roots length r (the long/short ratio).
//   coroot_length(i) = r / root_length(i), the square length of alpha_i^vee
//   under the form that is 1 on short coroots.
// Weights are integer vectors in the fundamental-weight basis.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace invforms {

struct Weight {
  std::vector<std::int64_t> coords;

  Weight() = default;
  explicit Weight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<std::int64_t>(rank, 0)); }
  static Weight fundamental(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  bool is_dominant() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(std::int64_t k) const;

  auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w);
/// Parses "1,0,2".  Throws InvalidInput on malformed text.
Weight parse_weight(std::string_view text);

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class RootSystem {
 public:
  /// Validates the (type, rank) pair: A1+, B2+, C2+, D3+, E6-8, F4, G2.
  RootSystem(CartanType type, int rank);
  /// Parses "A5", "G2", ...
  static RootSystem parse(std::string_view label);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  std::int64_t cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<std::int64_t>>& cartan_matrix() const { return cartan_; }
  std::int64_t root_length(int i) const { return root_lengths_[i]; }
  std::int64_t coroot_length(int i) const { return coroot_lengths_[i]; }
  const std::vector<std::int64_t>& coroot_lengths() const { return coroot_lengths_; }
  /// Square-length ratio r of long to short roots (1, 2 or 3).
  std::int64_t length_ratio() const { return ratio_; }

  /// Positive roots in simple-root coordinates, sorted by height.
  const std::vector<std::vector<std::int64_t>>& positive_roots() const { return positive_roots_; }
  /// Square length of a root given in simple-root coordinates (1 or r).
  std::int64_t root_square_length(const std::vector<std::int64_t>& simple_coords) const;
  /// Coordinates of beta^vee in the simple coroot basis.
  std::vector<std::int64_t> coroot_of(const std::vector<std::int64_t>& simple_coords) const;

  Weight highest_root() const { return highest_root_; }
  Weight highest_short_root() const { return highest_short_root_; }
  /// Metadata only; not used in any computation.
  int dual_coxeter() const;

  Weight rho() const { return Weight(std::vector<std::int64_t>(rank_, 1)); }
  /// A root (simple-root coordinates) as a weight.
  Weight root_weight(const std::vector<std::int64_t>& simple_coords) const;
  /// <lambda, beta^vee> for beta a root in simple-root coordinates.
  std::int64_t pairing(const Weight& lambda, const std::vector<std::int64_t>& beta) const;
  /// Applies the simple reflection s_i.
  Weight reflect(const Weight& lambda, int i) const;

  /// Simple-root coordinates of lambda when they are integral.
  std::optional<std::vector<std::int64_t>> simple_root_coords(const Weight& lambda) const;

  void check_weight(const Weight& lambda) const;
  void check_dominant(const Weight& lambda) const;

 private:
  void build_cartan();
  void build_roots();

  CartanType type_;
  int rank_;
  std::int64_t ratio_ = 1;
  std::vector<std::vector<std::int64_t>> cartan_;
  std::vector<std::int64_t> root_lengths_;
  std::vector<std::int64_t> coroot_lengths_;
  std::vector<std::vector<std::int64_t>> positive_roots_;
  Weight highest_root_;
  Weight highest_short_root_;
  // det(C^T) * (C^T)^{-1}, used to move to simple-root coordinates.
  std::int64_t cartan_det_ = 1;
  std::vector<std::vector<std::int64_t>> adjugate_;
};

/// A weight of T0 x prod G_i: one component per simple factor plus the torus
/// coordinates, which only matter through whether they vanish.
struct ProductWeight {
  std::vector<Weight> components;
  std::vector<std::int64_t> torus;

  bool torus_nonzero() const;
  bool is_zero() const;
  ProductWeight operator+(const ProductWeight& o) const;
  auto operator<=>(const ProductWeight&) const = default;
};

std::string to_string(const ProductWeight& w);

class ProductDatum {
 public:
  ProductDatum(std::vector<RootSystem> factors, int torus_rank);
  static ProductDatum simple(RootSystem rs) { return ProductDatum({std::move(rs)}, 0); }
  /// Parses "A1xC3+T2".
  static ProductDatum parse(std::string_view text);

  const std::vector<RootSystem>& factors() const { return factors_; }
  int torus_rank() const { return torus_rank_; }
  std::size_t semisimple_rank() const;
  std::string label() const;

  /// Splits a flat comma list: semisimple coordinates, optionally followed by
  /// torus_rank torus coordinates.
  ProductWeight split(const Weight& flat) const;
  ProductWeight parse_weight(std::string_view text) const;
  ProductWeight lift(std::size_t factor, const Weight& component) const;
  void check_dominant(const ProductWeight& lambda) const;

 private:
  std::vector<RootSystem> factors_;
  int torus_rank_;
};

// --- weight combinatorics -------------------------------------------------

/// -w0 lambda, computed by negating and walking back to the dominant chamber.
Weight minus_w0(const RootSystem& rs, const Weight& lambda);
ProductWeight minus_w0(const ProductDatum& datum, const ProductWeight& lambda);

bool is_self_dual(const RootSystem& rs, const Weight& lambda);
bool is_self_dual(const ProductDatum& datum, const ProductWeight& lambda);

/// Whether multiplier * lambda lies in the root lattice.
bool in_root_lattice(const RootSystem& rs, const Weight& lambda, std::int64_t multiplier = 1);

/// mu <= lambda: lambda - mu is a non-negative integer sum of simple roots.
bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda);

/// For dominant lambda, membership in the root lattice is the same as being a
/// sum of positive roots.
bool is_sum_of_positive_roots(const RootSystem& rs, const Weight& lambda);

/// Representative of the W_p dot-orbit of lambda inside the closed bottom
/// alcove {mu : 0 <= <mu + rho, beta^vee> <= p for all beta > 0}.
Weight alcove_representative(const RootSystem& rs, const Weight& lambda, std::int64_t p);

/// lambda in W_p . 0 for the dot action of the affine Weyl group W x pZPhi.
bool in_affine_orbit_of_zero(const RootSystem& rs, const Weight& lambda, std::int64_t p);

/// Every simple type up to the given rank (A1.., B2.., C2.., D3.., E, F4, G2).
std::vector<RootSystem> simple_types_up_to_rank(int max_rank);

}  // namespace invforms
