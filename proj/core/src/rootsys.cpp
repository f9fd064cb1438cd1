#include "invforms/rootsys.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "invforms/error.hpp"
#include "invforms/gflinalg.hpp"

namespace invforms {

// ---------------------------------------------------------------------------
// Weight

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  Weight w = zero(rank);
  w.coords.at(i) = 1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c == 0; });
}

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](auto c) { return c >= 0; });
}

Weight Weight::operator+(const Weight& o) const {
  if (o.rank() != rank()) throw InvalidInput("weight rank mismatch");
  Weight r = *this;
  for (std::size_t i = 0; i < rank(); ++i) r.coords[i] += o.coords[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const { return *this * -1; }

Weight Weight::operator*(std::int64_t k) const {
  Weight r = *this;
  for (auto& c : r.coords) c *= k;
  return r;
}

std::string to_string(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.coords[i]);
  }
  return s;
}

Weight parse_weight(std::string_view text) {
  Weight w;
  if (text.empty()) return w;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw InvalidInput("malformed weight '" + std::string(text) + "'");
    w.coords.push_back(v);
    start = end + 1;
  }
  return w;
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

bool valid_rank(CartanType t, int n) {
  switch (t) {
    case CartanType::A: return n >= 1;
    case CartanType::B: return n >= 2;
    case CartanType::C: return n >= 2;
    case CartanType::D: return n >= 3;
    case CartanType::E: return n >= 6 && n <= 8;
    case CartanType::F: return n == 4;
    case CartanType::G: return n == 2;
  }
  return false;
}

}  // namespace

RootSystem::RootSystem(CartanType type, int rank) : type_(type), rank_(rank) {
  if (!valid_rank(type, rank))
    throw InvalidInput("no simple root system of type " + std::string(1, static_cast<char>(type)) +
                       std::to_string(rank));
  build_cartan();
  build_roots();
}

RootSystem RootSystem::parse(std::string_view label) {
  while (!label.empty() && label.front() == ' ') label.remove_prefix(1);
  while (!label.empty() && label.back() == ' ') label.remove_suffix(1);
  if (label.size() < 2) throw InvalidInput("malformed root datum '" + std::string(label) + "'");
  char t = label.front();
  if (t >= 'a' && t <= 'g') t = static_cast<char>(t - 'a' + 'A');
  if (t < 'A' || t > 'G') throw InvalidInput("unknown Cartan type in '" + std::string(label) + "'");
  int n = 0;
  auto digits = label.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidInput("malformed rank in '" + std::string(label) + "'");
  return RootSystem(static_cast<CartanType>(t), n);
}

std::string RootSystem::label() const {
  return std::string(1, static_cast<char>(type_)) + std::to_string(rank_);
}

void RootSystem::build_cartan() {
  const int n = rank_;
  cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  auto bond = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };
  root_lengths_.assign(n, 1);

  switch (type_) {
    case CartanType::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      ratio_ = 1;
      break;
    case CartanType::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      // alpha_n short.
      cartan_[n - 2][n - 1] = -2;
      ratio_ = 2;
      std::fill(root_lengths_.begin(), root_lengths_.end(), 2);
      root_lengths_[n - 1] = 1;
      break;
    case CartanType::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      // alpha_n long.
      cartan_[n - 1][n - 2] = -2;
      ratio_ = 2;
      root_lengths_[n - 1] = 2;
      break;
    case CartanType::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      ratio_ = 1;
      break;
    case CartanType::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      ratio_ = 1;
      break;
    case CartanType::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      cartan_[1][2] = -2;
      ratio_ = 2;
      root_lengths_ = {2, 2, 1, 1};
      break;
    case CartanType::G:
      bond(0, 1);
      // alpha_1 short, alpha_2 long.
      cartan_[1][0] = -3;
      ratio_ = 3;
      root_lengths_ = {1, 3};
      break;
  }
  coroot_lengths_.resize(n);
  for (int i = 0; i < n; ++i) coroot_lengths_[i] = ratio_ / root_lengths_[i];

  // Adjugate of C^T for exact conversion to simple-root coordinates.
  gf::IntMatrix ct = gf::IntMatrix::from_rows(cartan_).transpose();
  gf::BigInt d = gf::det(ct);
  cartan_det_ = static_cast<std::int64_t>(d);
  adjugate_.assign(n, std::vector<std::int64_t>(n, 0));
  for (int j = 0; j < n; ++j) {
    std::vector<gf::BigInt> e(n, 0);
    e[j] = 1;
    auto col = gf::solve_rational(ct, e);
    if (!col) throw InternalError("singular Cartan matrix");
    for (int i = 0; i < n; ++i) {
      gf::Rational v = (*col)[i] * gf::Rational(d);
      if (denominator(v) != 1) throw InternalError("non-integral Cartan adjugate");
      adjugate_[i][j] = static_cast<std::int64_t>(numerator(v));
    }
  }
}

void RootSystem::build_roots() {
  const int n = rank_;
  auto reflect_root = [&](std::vector<std::int64_t> beta, int i) {
    std::int64_t c = 0;
    for (int j = 0; j < n; ++j) c += beta[j] * cartan_[j][i];
    beta[i] -= c;
    return beta;
  };
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> a(n, 0);
    a[i] = 1;
    if (seen.insert(a).second) frontier.push_back(a);
  }
  while (!frontier.empty()) {
    auto beta = std::move(frontier.back());
    frontier.pop_back();
    for (int i = 0; i < n; ++i) {
      auto g = reflect_root(beta, i);
      if (seen.insert(g).second) frontier.push_back(std::move(g));
    }
  }
  positive_roots_.clear();
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](auto c) { return c >= 0; })) positive_roots_.push_back(r);
  auto height = [](const auto& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); };
  std::sort(positive_roots_.begin(), positive_roots_.end(), [&](const auto& a, const auto& b) {
    auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  if (seen.size() != 2 * positive_roots_.size()) throw InternalError("root system not symmetric");

  highest_root_ = root_weight(positive_roots_.back());
  for (auto it = positive_roots_.rbegin(); it != positive_roots_.rend(); ++it) {
    if (root_square_length(*it) == 1) {
      highest_short_root_ = root_weight(*it);
      break;
    }
  }
}

std::int64_t RootSystem::root_square_length(const std::vector<std::int64_t>& beta) const {
  std::int64_t norm = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) norm += beta[i] * beta[j] * cartan_[i][j] * root_lengths_[j];
  return norm / 2;
}

std::vector<std::int64_t> RootSystem::coroot_of(const std::vector<std::int64_t>& beta) const {
  const std::int64_t len = root_square_length(beta);
  if (len <= 0) throw InvalidInput("not a root");
  std::vector<std::int64_t> c(rank_);
  for (int j = 0; j < rank_; ++j) {
    std::int64_t num = beta[j] * root_lengths_[j];
    if (num % len != 0) throw InternalError("non-integral coroot");
    c[j] = num / len;
  }
  return c;
}

int RootSystem::dual_coxeter() const {
  const int n = rank_;
  switch (type_) {
    case CartanType::A: return n + 1;
    case CartanType::B: return 2 * n - 1;
    case CartanType::C: return n + 1;
    case CartanType::D: return 2 * n - 2;
    case CartanType::E: return n == 6 ? 12 : n == 7 ? 18 : 30;
    case CartanType::F: return 9;
    case CartanType::G: return 4;
  }
  return 0;
}

Weight RootSystem::root_weight(const std::vector<std::int64_t>& beta) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w.coords[i] += beta[j] * cartan_[j][i];
  return w;
}

std::int64_t RootSystem::pairing(const Weight& lambda, const std::vector<std::int64_t>& beta) const {
  auto c = coroot_of(beta);
  std::int64_t s = 0;
  for (int j = 0; j < rank_; ++j) s += c[j] * lambda.coords[j];
  return s;
}

Weight RootSystem::reflect(const Weight& lambda, int i) const {
  Weight r = lambda;
  const std::int64_t c = lambda.coords[i];
  for (int j = 0; j < rank_; ++j) r.coords[j] -= c * cartan_[i][j];
  return r;
}

std::optional<std::vector<std::int64_t>> RootSystem::simple_root_coords(const Weight& lambda) const {
  check_weight(lambda);
  std::vector<std::int64_t> y(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < rank_; ++j) s += adjugate_[i][j] * lambda.coords[j];
    if (s % cartan_det_ != 0) return std::nullopt;
    y[i] = s / cartan_det_;
  }
  return y;
}

void RootSystem::check_weight(const Weight& lambda) const {
  if (lambda.rank() != static_cast<std::size_t>(rank_))
    throw InvalidInput("weight " + to_string(lambda) + " has " + std::to_string(lambda.rank()) +
                       " coordinates, " + label() + " needs " + std::to_string(rank_));
}

void RootSystem::check_dominant(const Weight& lambda) const {
  check_weight(lambda);
  if (!lambda.is_dominant()) throw InvalidInput("weight " + to_string(lambda) + " is not dominant");
}

// ---------------------------------------------------------------------------
// Products

bool ProductWeight::torus_nonzero() const {
  return std::any_of(torus.begin(), torus.end(), [](auto c) { return c != 0; });
}

bool ProductWeight::is_zero() const {
  return !torus_nonzero() &&
         std::all_of(components.begin(), components.end(), [](const Weight& w) { return w.is_zero(); });
}

ProductWeight ProductWeight::operator+(const ProductWeight& o) const {
  if (o.components.size() != components.size() || o.torus.size() != torus.size())
    throw InvalidInput("product weight shape mismatch");
  ProductWeight r = *this;
  for (std::size_t i = 0; i < components.size(); ++i) r.components[i] = components[i] + o.components[i];
  for (std::size_t i = 0; i < torus.size(); ++i) r.torus[i] += o.torus[i];
  return r;
}

std::string to_string(const ProductWeight& w) {
  std::string s;
  for (const auto& c : w.components) {
    if (!s.empty() && !c.coords.empty()) s += ',';
    s += to_string(c);
  }
  for (auto t : w.torus) {
    if (!s.empty()) s += ',';
    s += std::to_string(t);
  }
  return s;
}

ProductDatum::ProductDatum(std::vector<RootSystem> factors, int torus_rank)
    : factors_(std::move(factors)), torus_rank_(torus_rank) {
  if (factors_.empty()) throw InvalidInput("a root datum needs at least one simple factor");
  if (torus_rank_ < 0) throw InvalidInput("negative torus rank");
}

ProductDatum ProductDatum::parse(std::string_view text) {
  int torus = 0;
  std::string_view body = text;
  if (auto plus = text.find('+'); plus != std::string_view::npos) {
    body = text.substr(0, plus);
    std::string_view t = text.substr(plus + 1);
    if (t.empty() || (t.front() != 'T' && t.front() != 't'))
      throw InvalidInput("malformed torus suffix in '" + std::string(text) + "'");
    t.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), torus);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
      throw InvalidInput("malformed torus rank in '" + std::string(text) + "'");
  }
  std::vector<RootSystem> factors;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find_first_of("xX*", start);
    if (end == std::string_view::npos) end = body.size();
    factors.push_back(RootSystem::parse(body.substr(start, end - start)));
    start = end + 1;
  }
  return ProductDatum(std::move(factors), torus);
}

std::size_t ProductDatum::semisimple_rank() const {
  std::size_t r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

std::string ProductDatum::label() const {
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += 'x';
    s += f.label();
  }
  if (torus_rank_ > 0) s += "+T" + std::to_string(torus_rank_);
  return s;
}

ProductWeight ProductDatum::split(const Weight& flat) const {
  const std::size_t ss = semisimple_rank();
  if (flat.rank() != ss && flat.rank() != ss + torus_rank_)
    throw InvalidInput("weight " + to_string(flat) + " has " + std::to_string(flat.rank()) +
                       " coordinates; " + label() + " takes " + std::to_string(ss) +
                       (torus_rank_ ? " or " + std::to_string(ss + torus_rank_) : std::string()));
  ProductWeight w;
  std::size_t pos = 0;
  for (const auto& f : factors_) {
    Weight c(std::vector<std::int64_t>(flat.coords.begin() + pos, flat.coords.begin() + pos + f.rank()));
    w.components.push_back(std::move(c));
    pos += f.rank();
  }
  w.torus.assign(torus_rank_, 0);
  if (flat.rank() > ss)
    std::copy(flat.coords.begin() + ss, flat.coords.end(), w.torus.begin());
  return w;
}

ProductWeight ProductDatum::parse_weight(std::string_view text) const {
  return split(invforms::parse_weight(text));
}

ProductWeight ProductDatum::lift(std::size_t factor, const Weight& component) const {
  ProductWeight w;
  for (const auto& f : factors_) w.components.push_back(Weight::zero(f.rank()));
  w.torus.assign(torus_rank_, 0);
  factors_.at(factor).check_weight(component);
  w.components[factor] = component;
  return w;
}

void ProductDatum::check_dominant(const ProductWeight& lambda) const {
  if (lambda.components.size() != factors_.size() ||
      lambda.torus.size() != static_cast<std::size_t>(torus_rank_))
    throw InvalidInput("product weight does not match datum " + label());
  for (std::size_t i = 0; i < factors_.size(); ++i) factors_[i].check_dominant(lambda.components[i]);
}

// ---------------------------------------------------------------------------
// Weight combinatorics

Weight minus_w0(const RootSystem& rs, const Weight& lambda) {
  rs.check_dominant(lambda);
  Weight w = -lambda;
  for (;;) {
    auto it = std::find_if(w.coords.begin(), w.coords.end(), [](auto c) { return c < 0; });
    if (it == w.coords.end()) return w;
    w = rs.reflect(w, static_cast<int>(it - w.coords.begin()));
  }
}

ProductWeight minus_w0(const ProductDatum& datum, const ProductWeight& lambda) {
  datum.check_dominant(lambda);
  ProductWeight r = lambda;
  for (std::size_t i = 0; i < datum.factors().size(); ++i)
    r.components[i] = minus_w0(datum.factors()[i], lambda.components[i]);
  // w0 is trivial on the torus, so -w0 negates it.
  for (auto& t : r.torus) t = -t;
  return r;
}

bool is_self_dual(const RootSystem& rs, const Weight& lambda) {
  return minus_w0(rs, lambda) == lambda;
}

bool is_self_dual(const ProductDatum& datum, const ProductWeight& lambda) {
  return minus_w0(datum, lambda) == lambda;
}

bool in_root_lattice(const RootSystem& rs, const Weight& lambda, std::int64_t multiplier) {
  if (multiplier <= 0) throw InvalidInput("root-lattice multiplier must be positive");
  return rs.simple_root_coords(lambda * multiplier).has_value();
}

bool dominance_leq(const RootSystem& rs, const Weight& mu, const Weight& lambda) {
  rs.check_weight(mu);
  auto y = rs.simple_root_coords(lambda - mu);
  return y && std::all_of(y->begin(), y->end(), [](auto c) { return c >= 0; });
}

bool is_sum_of_positive_roots(const RootSystem& rs, const Weight& lambda) {
  rs.check_dominant(lambda);
  return in_root_lattice(rs, lambda, 1);
}

Weight alcove_representative(const RootSystem& rs, const Weight& lambda, std::int64_t p) {
  rs.check_weight(lambda);
  if (p <= 0) throw InvalidInput("alcove level must be positive");
  // Work with x = lambda + rho, where the dot action becomes linear.
  std::vector<std::int64_t> top;
  Weight top_weight = rs.highest_short_root();
  for (const auto& beta : rs.positive_roots())
    if (rs.root_weight(beta) == top_weight) top = beta;
  const auto top_coroot = rs.coroot_of(top);

  Weight x = lambda + rs.rho();
  for (;;) {
    auto it = std::find_if(x.coords.begin(), x.coords.end(), [](auto c) { return c < 0; });
    if (it != x.coords.end()) {
      x = rs.reflect(x, static_cast<int>(it - x.coords.begin()));
      continue;
    }
    std::int64_t h = 0;
    for (int j = 0; j < rs.rank(); ++j) h += top_coroot[j] * x.coords[j];
    if (h > p) {
      x = x - top_weight * (h - p);
      continue;
    }
    return x - rs.rho();
  }
}

bool in_affine_orbit_of_zero(const RootSystem& rs, const Weight& lambda, std::int64_t p) {
  rs.check_dominant(lambda);
  if (p < 2 || !gf::is_prime(static_cast<std::uint64_t>(p)))
    throw InvalidInput(std::to_string(p) + " is not prime");
  return alcove_representative(rs, lambda, p) ==
         alcove_representative(rs, Weight::zero(rs.rank()), p);
}

std::vector<RootSystem> simple_types_up_to_rank(int max_rank) {
  std::vector<RootSystem> out;
  for (int n = 1; n <= max_rank; ++n) out.emplace_back(CartanType::A, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(CartanType::B, n);
  for (int n = 2; n <= max_rank; ++n) out.emplace_back(CartanType::C, n);
  for (int n = 3; n <= max_rank; ++n) out.emplace_back(CartanType::D, n);
  for (int n = 6; n <= std::min(max_rank, 8); ++n) out.emplace_back(CartanType::E, n);
  if (max_rank >= 4) out.emplace_back(CartanType::F, 4);
  if (max_rank >= 2) out.emplace_back(CartanType::G, 2);
  return out;
}

}  // namespace invforms
