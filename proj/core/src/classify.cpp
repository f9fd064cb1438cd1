#include "invforms/classify.hpp"

#include "invforms/error.hpp"
#include "invforms/killing.hpp"

namespace invforms::classify {

namespace {

std::vector<std::size_t> nonzero_factors(const ProductWeight& lambda) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lambda.components.size(); ++i)
    if (!lambda.components[i].is_zero()) out.push_back(i);
  return out;
}

bool is_tautological_sp(const RootSystem& rs, const Weight& w) {
  const int n = rs.rank();
  switch (rs.type()) {
    case CartanType::C:
      return w == Weight::fundamental(n, 0);
    case CartanType::A:  // SL_2 = Sp_2
      return n == 1 && w == Weight::fundamental(1, 0);
    case CartanType::B:  // Spin_5 = Sp_4; the 4-dim spin module
      return n == 2 && w == Weight::fundamental(2, 1);
    default:
      return false;
  }
}

void require_prime_or_zero(std::uint32_t p) {
  if (p != 0 && !gf::is_prime(p)) throw InvalidInput("characteristic must be 0 or a prime, got " + std::to_string(p));
}

}  // namespace

std::string to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::irreducible: return "irreducible";
    case ModuleKind::weyl: return "weyl";
    case ModuleKind::induced: return "induced";
    case ModuleKind::tilting: return "tilting";
  }
  return "?";
}

ModuleKind parse_module_kind(std::string_view s) {
  if (s == "irreducible") return ModuleKind::irreducible;
  if (s == "weyl") return ModuleKind::weyl;
  if (s == "induced") return ModuleKind::induced;
  if (s == "tilting") return ModuleKind::tilting;
  throw InvalidInput("unknown module kind '" + std::string(s) + "'");
}

std::string to_string(Indicator i) {
  switch (i) {
    case Indicator::orthogonal: return "orthogonal";
    case Indicator::symplectic: return "symplectic";
    case Indicator::none: return "none";
  }
  return "?";
}

std::string to_string(Char2Branch b) {
  switch (b) {
    case Char2Branch::orthogonal: return "orthogonal";
    case Char2Branch::sp_exception: return "sp_exception";
    case Char2Branch::not_self_dual: return "not_self_dual";
  }
  return "?";
}

std::string to_string(RadicalCase c) {
  switch (c) {
    case RadicalCase::case_i: return "case_i";
    case RadicalCase::case_ii: return "case_ii";
    case RadicalCase::unknown: return "unknown";
  }
  return "?";
}

int bilinear_dim_simple_or_weyl(const RootSystem& rs, const Weight& lambda) {
  rs.check_dominant(lambda);
  return is_self_dual(rs, lambda) ? 1 : 0;
}

int bilinear_dim_simple_or_weyl(const ProductDatum& datum, const ProductWeight& lambda) {
  datum.check_dominant(lambda);
  return is_self_dual(datum, lambda) ? 1 : 0;
}

std::int64_t two_rho_pairing(const RootSystem& rs, const Weight& lambda) {
  rs.check_weight(lambda);
  std::int64_t s = 0;
  for (const auto& beta : rs.positive_roots()) s += rs.pairing(lambda, beta);
  return s;
}

Indicator classical_indicator(const RootSystem& rs, const Weight& lambda) {
  rs.check_dominant(lambda);
  if (!is_self_dual(rs, lambda)) return Indicator::none;
  return two_rho_pairing(rs, lambda) % 2 == 0 ? Indicator::orthogonal : Indicator::symplectic;
}

Indicator classical_indicator(const ProductDatum& datum, const ProductWeight& lambda) {
  datum.check_dominant(lambda);
  if (!is_self_dual(datum, lambda)) return Indicator::none;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < datum.factors().size(); ++i)
    s += two_rho_pairing(datum.factors()[i], lambda.components[i]);
  return s % 2 == 0 ? Indicator::orthogonal : Indicator::symplectic;
}

bool is_sp_exception(const ProductDatum& datum, const ProductWeight& lambda) {
  datum.check_dominant(lambda);
  if (lambda.torus_nonzero()) return false;
  const auto nz = nonzero_factors(lambda);
  return nz.size() == 1 && is_tautological_sp(datum.factors()[nz[0]], lambda.components[nz[0]]);
}

Char2Branch weyl_orthogonal_char2(const ProductDatum& datum, const ProductWeight& lambda) {
  datum.check_dominant(lambda);
  if (lambda.is_zero()) throw InvalidInput("the characteristic-2 trichotomy needs a nonzero weight");
  if (!is_self_dual(datum, lambda)) return Char2Branch::not_self_dual;
  if (is_sp_exception(datum, lambda)) return Char2Branch::sp_exception;
  return Char2Branch::orthogonal;
}

NcritChain ncrit_chain(const RootSystem& rs, const Weight& lambda) {
  if (weyl_orthogonal_char2(ProductDatum::simple(rs), ProductDatum::simple(rs).lift(0, lambda)) !=
      Char2Branch::orthogonal)
    throw InvalidInput("the sufficient conditions assume V(lambda) is orthogonal");
  NcritChain c{};
  c.not_sum_pos_roots = !is_sum_of_positive_roots(rs, lambda);
  c.not_in_W2_orbit = !in_affine_orbit_of_zero(rs, lambda, 2);
  if (c.not_sum_pos_roots && !c.not_in_W2_orbit)
    throw InternalError("weight outside the root lattice found in the linkage class of 0");
  c.implied_orthogonal = c.not_sum_pos_roots || c.not_in_W2_orbit;
  return c;
}

RadicalCase weyl_quadratic_radical_case(const ProductDatum& datum, const ProductWeight& lambda) {
  if (weyl_orthogonal_char2(datum, lambda) != Char2Branch::orthogonal)
    throw InvalidInput("radical case is only defined when V(lambda) is orthogonal");
  const auto nz = nonzero_factors(lambda);
  // Tensor product of two modules with nondegenerate alternating forms.
  if (nz.size() >= 2) return RadicalCase::case_i;
  const RootSystem& rs = datum.factors()[nz[0]];
  const Weight& w = lambda.components[nz[0]];
  if (w == rs.highest_root())
    return killing::adjoint_orthogonal(rs) ? RadicalCase::case_i : RadicalCase::case_ii;
  if (ncrit_chain(rs, w).implied_orthogonal) return RadicalCase::case_i;
  return RadicalCase::unknown;
}

void validate(const RootSystem& rs, const FiltrationTable& t) {
  rs.check_dominant(t.lambda);
  auto it = t.entries.find(t.lambda);
  if (it == t.entries.end() || it->second != 1)
    throw InvalidInput("filtration table must have multiplicity 1 at its own highest weight");
  for (const auto& [mu, m] : t.entries) {
    rs.check_dominant(mu);
    if (m < 0) throw InvalidInput("negative multiplicity in filtration table");
    if (m > 0 && !dominance_leq(rs, mu, t.lambda))
      throw InvalidInput("filtration table entry " + to_string(mu) + " is not below " + to_string(t.lambda));
  }
}

TiltingDim tilting_bilinear_dim(const RootSystem& rs, const FiltrationTable& t,
                                const FiltrationTable& tdual) {
  validate(rs, t);
  validate(rs, tdual);
  if (tdual.lambda != minus_w0(rs, t.lambda))
    throw InvalidInput("second table must be for -w0 lambda = " + to_string(minus_w0(rs, t.lambda)));
  TiltingDim out{0, 0};
  for (const auto& [mu, m] : t.entries) {
    auto it = tdual.entries.find(mu);
    if (it == tdual.entries.end()) continue;
    out.dim += m * it->second;
    if (mu == t.lambda) out.lambda_term = m * it->second;
  }
  return out;
}

int induced_adjoint_bilinear_dim(const RootSystem& rs, std::uint32_t p) {
  require_prime_or_zero(p);
  if (p != 2) return 1;
  const int n = rs.rank();
  switch (rs.type()) {
    case CartanType::D:
      return (n >= 4 && n % 2 == 0) ? 4 : 1;
    case CartanType::B:
    case CartanType::C:
      return n >= 2 ? 2 : 1;
    default:
      // H^0/L is Lie(Z)^* with dim Lie(Z) <= 1 here, or L(short highest root) for F4.
      return 1;
  }
}

int h1_wedge2_induced(const ProductDatum& datum, const ProductWeight& lambda) {
  datum.check_dominant(lambda);
  if (lambda.is_zero()) return 0;
  return weyl_orthogonal_char2(datum, lambda) == Char2Branch::orthogonal ? 1 : 0;
}

bool sum_rule_orthogonal(const ProductDatum& datum, const ProductWeight& lambda,
                         const ProductWeight& mu) {
  datum.check_dominant(lambda);
  datum.check_dominant(mu);
  if (lambda.is_zero() || mu.is_zero())
    throw InvalidInput("both weights must be nonzero");
  if (!is_self_dual(datum, lambda) || !is_self_dual(datum, mu))
    throw InvalidInput("both weights must be self-dual");
  if (weyl_orthogonal_char2(datum, lambda + mu) != Char2Branch::orthogonal)
    throw InternalError("sum of weights with alternating forms is not orthogonal");
  return true;
}

FormVerdict classify(const ProductDatum& datum, const ProductWeight& lambda, std::uint32_t p,
                     ModuleKind kind, const FiltrationTable* tilting,
                     const FiltrationTable* tilting_dual) {
  require_prime_or_zero(p);
  datum.check_dominant(lambda);
  FormVerdict v{kind, std::nullopt, std::nullopt, std::nullopt, std::nullopt, ""};
  const bool self_dual = is_self_dual(datum, lambda);

  if (kind == ModuleKind::tilting) {
    if (datum.factors().size() != 1 || datum.torus_rank() != 0)
      throw InvalidInput("tilting tables are supported for a simple datum only");
    if (!tilting) throw InvalidInput("tilting modules need a filtration table");
    const RootSystem& rs = datum.factors()[0];
    if (tilting->lambda != lambda.components[0])
      throw InvalidInput("filtration table is for " + to_string(tilting->lambda) + ", not " +
                         to_string(lambda.components[0]));
    const FiltrationTable* dual = tilting_dual ? tilting_dual : tilting;
    const auto d = tilting_bilinear_dim(rs, *tilting, *dual);
    v.bilinear_dim = d.dim;
    v.certificate = "tilting dimension formula: sum over mu of [T(-w0 lambda):H0(mu)][T(lambda):H0(mu)] = " +
                    std::to_string(d.dim) + " (lambda term " + std::to_string(d.lambda_term) + ")";
    if (p == 0) {
      const auto ind = classical_indicator(datum, lambda);
      v.orthogonal = ind == Indicator::orthogonal;
      v.symplectic = ind == Indicator::symplectic;
    }
    return v;
  }

  if (lambda.is_zero()) {
    v.bilinear_dim = 1;
    v.symplectic = false;
    v.orthogonal = true;
    if (kind == ModuleKind::induced && p == 2) v.h1_wedge2 = 0;
    v.certificate = "trivial one-dimensional module: x^2 is invariant, no nonzero alternating form";
    return v;
  }

  if (kind == ModuleKind::induced) {
    if (p == 2) v.h1_wedge2 = h1_wedge2_induced(datum, lambda);
    const bool adjoint = datum.factors().size() == 1 && datum.torus_rank() == 0 &&
                         lambda.components[0] == datum.factors()[0].highest_root();
    if (adjoint) {
      v.bilinear_dim = induced_adjoint_bilinear_dim(datum.factors()[0], p);
      v.certificate = "invariant bilinear forms on H0(highest root) from the head of the adjoint Weyl module";
    } else if (p == 0) {
      v.bilinear_dim = self_dual ? 1 : 0;
    } else {
      v.certificate = "bilinear forms on reducible induced modules are not decided for this weight";
    }
    if (p == 0) {
      const auto ind = classical_indicator(datum, lambda);
      v.orthogonal = ind == Indicator::orthogonal;
      v.symplectic = ind == Indicator::symplectic;
      v.certificate = "characteristic 0: H0(lambda) = L(lambda); parity of <lambda, 2 rho^vee>";
    }
    return v;
  }

  // Irreducible and Weyl modules.
  v.bilinear_dim = self_dual ? 1 : 0;
  if (!self_dual) {
    v.symplectic = false;
    v.orthogonal = false;
    v.certificate = "lambda != -w0 lambda = " + to_string(minus_w0(datum, lambda)) +
                    ", so there is no nonzero invariant bilinear form";
    return v;
  }

  if (p != 2) {
    const auto ind = classical_indicator(datum, lambda);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < datum.factors().size(); ++i)
      s += two_rho_pairing(datum.factors()[i], lambda.components[i]);
    v.orthogonal = ind == Indicator::orthogonal;
    v.symplectic = ind == Indicator::symplectic;
    v.certificate = "self-dual; <lambda, 2 rho^vee> = " + std::to_string(s) +
                    (v.orthogonal.value() ? " is even, invariant form symmetric"
                                          : " is odd, invariant form alternating") +
                    (p == 0 ? "" : "; odd characteristic agrees with characteristic 0");
    return v;
  }

  // Characteristic 2, nonzero self-dual weight: the invariant form is alternating.
  v.symplectic = true;
  const auto branch = weyl_orthogonal_char2(datum, lambda);
  if (branch == Char2Branch::sp_exception) {
    v.orthogonal = false;
    v.certificate = "tautological representation of a symplectic factor: symplectic, not orthogonal";
    return v;
  }
  if (kind == ModuleKind::weyl) {
    v.orthogonal = true;
    v.certificate = "characteristic 2 trichotomy: self-dual, nonzero, not the symplectic exception, so V(lambda) is orthogonal";
    return v;
  }
  const auto rc = weyl_quadratic_radical_case(datum, lambda);
  switch (rc) {
    case RadicalCase::case_i:
      v.orthogonal = true;
      v.certificate = "V(lambda) orthogonal and its quadratic form vanishes on rad V(lambda), so it descends to L(lambda)";
      break;
    case RadicalCase::case_ii:
      v.orthogonal = false;
      v.certificate = "V(lambda) orthogonal but its quadratic form is nonzero on rad V(lambda); L(lambda) is not orthogonal";
      break;
    case RadicalCase::unknown:
      v.certificate = "V(lambda) orthogonal; whether its quadratic form vanishes on rad V(lambda) is not decided for this weight";
      break;
  }
  return v;
}

}  // namespace invforms::classify
