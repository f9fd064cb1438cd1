#include "invforms/tensoralg.hpp"

#include <algorithm>
#include <numeric>

#include "invforms/error.hpp"

namespace invforms::tensor {

namespace {

std::uint64_t factorial_mod(int n, std::uint32_t p) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f = f * k % p;
  return f;
}

// Size of the stabilizer of an index tuple, mod p.
std::uint64_t stabilizer_mod(const Multi& sorted_index, std::uint32_t p) {
  std::uint64_t s = 1;
  std::size_t i = 0;
  while (i < sorted_index.size()) {
    std::size_t j = i;
    while (j < sorted_index.size() && sorted_index[j] == sorted_index[i]) ++j;
    s = s * factorial_mod(static_cast<int>(j - i), p) % p;
    i = j;
  }
  return s;
}

bool has_repeat(const Multi& sorted_index) {
  return std::adjacent_find(sorted_index.begin(), sorted_index.end()) != sorted_index.end();
}

int inversion_parity(const Multi& x) {
  int inv = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] > x[j]) ++inv;
  return inv & 1;
}

Multi sorted(Multi m) {
  std::sort(m.begin(), m.end());
  return m;
}

Multi index_from_exponents(const Multi& e) {
  Multi idx;
  for (int i = 0; i < static_cast<int>(e.size()); ++i) idx.insert(idx.end(), e[i], i);
  return idx;
}

Multi exponents_from_index(const Multi& idx, int dim) {
  Multi e(dim, 0);
  for (int i : idx) ++e[i];
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tensor

Tensor::Tensor(std::uint32_t p, int degree, int dim) : p_(p), degree_(degree), dim_(dim) {
  if (!gf::is_prime(p)) throw InvalidInput("tensor modulus is not prime");
  if (degree < 0 || dim <= 0) throw InvalidInput("bad tensor shape");
}

Tensor Tensor::basis(std::uint32_t p, int dim, Multi index) {
  Tensor t(p, static_cast<int>(index.size()), dim);
  t.add(index, 1);
  return t;
}

void Tensor::check(const Multi& index) const {
  if (static_cast<int>(index.size()) != degree_) throw InvalidInput("index tuple has wrong degree");
  for (int i : index)
    if (i < 0 || i >= dim_) throw InvalidInput("tensor index out of range");
}

std::uint32_t Tensor::coeff(const Multi& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0 : it->second;
}

void Tensor::add(const Multi& index, std::int64_t c) {
  check(index);
  std::uint32_t v = gf::mod_reduce(c, p_);
  if (!v) return;
  auto [it, inserted] = terms_.try_emplace(index, v);
  if (!inserted) {
    it->second = gf::mod_add(it->second, v, p_);
    if (!it->second) terms_.erase(it);
  }
}

Tensor Tensor::operator+(const Tensor& o) const {
  if (o.p_ != p_ || o.degree_ != degree_ || o.dim_ != dim_) throw InvalidInput("tensor shape mismatch");
  Tensor r = *this;
  for (const auto& [k, c] : o.terms_) r.add(k, c);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + o.scaled(-1); }

Tensor Tensor::scaled(std::int64_t c) const {
  Tensor r(p_, degree_, dim_);
  const std::uint32_t f = gf::mod_reduce(c, p_);
  for (const auto& [k, v] : terms_) r.add(k, gf::mod_mul(v, f, p_));
  return r;
}

Tensor Tensor::permuted(std::span<const int> sigma) const {
  if (static_cast<int>(sigma.size()) != degree_) throw InvalidInput("permutation has wrong size");
  Tensor r(p_, degree_, dim_);
  for (const auto& [k, c] : terms_) {
    Multi moved(degree_);
    for (int j = 0; j < degree_; ++j) moved[sigma[j]] = k[j];
    r.add(moved, c);
  }
  return r;
}

bool Tensor::is_symmetric() const {
  for (const auto& [k, c] : terms_) {
    Multi a = sorted(k);
    do {
      if (coeff(a) != c) return false;
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return true;
}

gf::Vec Tensor::to_dense() const {
  std::size_t size = 1;
  for (int i = 0; i < degree_; ++i) size *= dim_;
  gf::Vec v(size, 0);
  for (const auto& [k, c] : terms_) {
    std::size_t idx = 0;
    for (int i : k) idx = idx * dim_ + i;
    v[idx] = c;
  }
  return v;
}

Tensor Tensor::from_dense(std::uint32_t p, int degree, int dim, std::span<const std::uint32_t> v) {
  Tensor t(p, degree, dim);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (!v[idx]) continue;
    Multi k(degree);
    std::size_t rest = idx;
    for (int j = degree - 1; j >= 0; --j) {
      k[j] = static_cast<int>(rest % dim);
      rest /= dim;
    }
    t.add(k, v[idx]);
  }
  return t;
}

// ---------------------------------------------------------------------------
// SymPoly

SymPoly::SymPoly(std::uint32_t p, int degree, int dim) : p_(p), degree_(degree), dim_(dim) {
  if (!gf::is_prime(p)) throw InvalidInput("modulus is not prime");
  if (degree < 0 || dim <= 0) throw InvalidInput("bad symmetric power shape");
}

std::uint32_t SymPoly::coeff(const Multi& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void SymPoly::add(const Multi& e, std::int64_t c) {
  if (static_cast<int>(e.size()) != dim_ ||
      std::accumulate(e.begin(), e.end(), 0) != degree_ ||
      std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
    throw InvalidInput("exponent vector does not have the right total degree");
  std::uint32_t v = gf::mod_reduce(c, p_);
  if (!v) return;
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second = gf::mod_add(it->second, v, p_);
    if (!it->second) terms_.erase(it);
  }
}

SymPoly SymPoly::scaled(std::int64_t c) const {
  SymPoly r(p_, degree_, dim_);
  const std::uint32_t f = gf::mod_reduce(c, p_);
  for (const auto& [k, v] : terms_) r.add(k, gf::mod_mul(v, f, p_));
  return r;
}

std::vector<Multi> monomial_basis(int dim, int degree) {
  std::vector<Multi> out;
  Multi e(dim, 0);
  // Recursive fill, first coordinate largest first.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == dim - 1) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (dim > 0) rec(rec, 0, degree);
  return out;
}

// ---------------------------------------------------------------------------
// Forms

BilForm::BilForm(gf::PrimeMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw InvalidInput("Gram matrix must be square");
}

std::uint32_t BilForm::operator()(std::span<const std::uint32_t> v,
                                  std::span<const std::uint32_t> w) const {
  auto gw = gram_.apply(w);
  std::uint64_t acc = 0;
  const std::uint32_t p = modulus();
  for (std::size_t i = 0; i < gw.size(); ++i) acc = (acc + std::uint64_t{v[i]} * gw[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

bool BilForm::is_symmetric() const { return gram_.is_symmetric(); }

bool BilForm::is_alternating() const {
  const std::uint32_t p = modulus();
  for (int i = 0; i < dim(); ++i) {
    if (gram_.at(i, i)) return false;
    for (int j = i + 1; j < dim(); ++j)
      if (gf::mod_add(gram_.at(i, j), gram_.at(j, i), p)) return false;
  }
  return true;
}

QuadForm::QuadForm(std::uint32_t p, int dim) : coeffs_(p, dim, dim) {}

QuadForm::QuadForm(gf::PrimeMatrix upper) : coeffs_(std::move(upper)) {
  if (coeffs_.rows() != coeffs_.cols()) throw InvalidInput("quadratic form coefficients must be square");
  for (std::size_t i = 0; i < coeffs_.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (coeffs_.at(i, j)) throw InvalidInput("quadratic form coefficients must be upper-triangular");
}

std::uint32_t QuadForm::coeff(int i, int j) const {
  if (i > j) std::swap(i, j);
  return coeffs_.at(i, j);
}

void QuadForm::set(int i, int j, std::int64_t c) {
  if (i > j) std::swap(i, j);
  coeffs_.set(i, j, c);
}

std::uint32_t QuadForm::operator()(std::span<const std::uint32_t> v) const {
  const std::uint32_t p = modulus();
  std::uint64_t acc = 0;
  for (int i = 0; i < dim(); ++i) {
    if (!v[i]) continue;
    for (int j = i; j < dim(); ++j) {
      const std::uint32_t c = coeffs_.at(i, j);
      if (c && v[j]) acc = (acc + std::uint64_t{c} * v[i] % p * v[j]) % p;
    }
  }
  return static_cast<std::uint32_t>(acc);
}

// ---------------------------------------------------------------------------
// Maps

Tensor symmetrize(const Tensor& t) {
  const std::uint32_t p = t.modulus();
  Tensor r(p, t.degree(), t.dim());
  for (const auto& [k, c] : t.terms()) {
    Multi a = sorted(k);
    const std::uint64_t weight = stabilizer_mod(a, p) * c % p;
    if (!weight) continue;
    do {
      r.add(a, static_cast<std::int64_t>(weight));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return r;
}

Tensor skew_symmetrize(const Tensor& t) {
  Tensor r(t.modulus(), t.degree(), t.dim());
  for (const auto& [k, c] : t.terms()) {
    Multi a = sorted(k);
    if (has_repeat(a)) continue;
    const int base = inversion_parity(k);
    do {
      const bool negative = (inversion_parity(a) ^ base) != 0;
      r.add(a, negative ? -static_cast<std::int64_t>(c) : static_cast<std::int64_t>(c));
    } while (std::next_permutation(a.begin(), a.end()));
  }
  return r;
}

Tensor multilinearize(const SymPoly& s) {
  Tensor h(s.modulus(), s.degree(), s.dim());
  for (const auto& [e, c] : s.terms()) h.add(index_from_exponents(e), c);
  return symmetrize(h);
}

SymPoly project_to_sym(const Tensor& t) {
  SymPoly r(t.modulus(), t.degree(), t.dim());
  for (const auto& [k, c] : t.terms()) r.add(exponents_from_index(k, t.dim()), c);
  return r;
}

SymPoly psi(const Tensor& t) {
  if (!t.is_symmetric()) throw InvalidInput("psi is only defined on symmetric tensors");
  return project_to_sym(t);
}

Tensor to_tensor(const BilForm& b) {
  Tensor t(b.modulus(), 2, b.dim());
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j)
      if (auto c = b.gram().at(i, j)) t.add({i, j}, c);
  return t;
}

BilForm to_bilform(const Tensor& t) {
  if (t.degree() != 2) throw InvalidInput("a bilinear form is a degree-2 tensor");
  gf::PrimeMatrix g(t.modulus(), t.dim(), t.dim());
  for (const auto& [k, c] : t.terms()) g.set(k[0], k[1], c);
  return BilForm(std::move(g));
}

SymPoly to_sympoly(const QuadForm& q) {
  SymPoly s(q.modulus(), 2, q.dim());
  for (int i = 0; i < q.dim(); ++i)
    for (int j = i; j < q.dim(); ++j)
      if (auto c = q.coeff(i, j)) {
        Multi e(q.dim(), 0);
        ++e[i];
        ++e[j];
        s.add(e, c);
      }
  return s;
}

QuadForm to_quadform(const SymPoly& s) {
  if (s.degree() != 2) throw InvalidInput("a quadratic form is a degree-2 symmetric power");
  QuadForm q(s.modulus(), s.dim());
  for (const auto& [e, c] : s.terms()) {
    Multi idx = index_from_exponents(e);
    q.set(idx[0], idx[1], c);
  }
  return q;
}

Tensor upper_lift(const BilForm& b) {
  if (!b.is_alternating()) throw InvalidInput("upper lift needs an alternating form");
  Tensor t(b.modulus(), 2, b.dim());
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j)
      if (auto c = b.gram().at(i, j)) t.add({i, j}, c);
  return t;
}

BilForm polar(const QuadForm& q) {
  const std::uint32_t p = q.modulus();
  gf::PrimeMatrix g(p, q.dim(), q.dim());
  for (int i = 0; i < q.dim(); ++i) {
    g.set(i, i, 2 * static_cast<std::int64_t>(q.coeff(i, i)));
    for (int j = i + 1; j < q.dim(); ++j) {
      g.set(i, j, q.coeff(i, j));
      g.set(j, i, q.coeff(i, j));
    }
  }
  return BilForm(std::move(g));
}

gf::Subspace radical_bilinear(const BilForm& b) {
  return gf::Subspace(b.modulus(), b.dim(), gf::kernel_basis(b.gram().transpose()));
}

gf::Subspace radical_quadratic(const QuadForm& q) {
  const gf::Subspace rad_b = radical_bilinear(polar(q));
  if (q.modulus() != 2) return rad_b;
  // On rad b_q over GF(2) the form is additive, so its zero set is the
  // kernel of the functional u_k -> q(u_k).
  const auto& u = rad_b.basis();
  gf::PrimeMatrix functional(2, 1, u.size());
  for (std::size_t k = 0; k < u.size(); ++k) functional.set(0, k, q(u[k]));
  gf::Subspace out(2, q.dim());
  for (const auto& coeffs : gf::kernel_basis(functional)) {
    gf::Vec v(q.dim(), 0);
    for (std::size_t k = 0; k < u.size(); ++k)
      if (coeffs[k])
        for (int j = 0; j < q.dim(); ++j) v[j] ^= u[k][j];
    out.insert(v);
  }
  return out;
}

bool is_characteristic(const Tensor& f) {
  if (static_cast<std::uint32_t>(f.degree()) != f.modulus())
    throw InvalidInput("characteristic forms have degree equal to the characteristic");
  if (!f.is_symmetric()) throw InvalidInput("is_characteristic needs a symmetric tensor");
  // Symmetric p-tensors split as symmetrized tensors plus the span of the
  // pure powers e_i^{(x)p}; the orbit of any other index has stabilizer
  // prime to p.
  for (int i = 0; i < f.dim(); ++i)
    if (f.coeff(Multi(f.degree(), i))) return false;
  return true;
}

SymPoly tignol_map(const Tensor& a, const Tensor& b) {
  if (a.degree() != 2 || b.degree() != 2 || a.modulus() != b.modulus())
    throw InvalidInput("tignol_map takes two degree-2 tensors over the same field");
  const int d2 = b.dim();
  const Tensor alt = skew_symmetrize(b);
  SymPoly out(a.modulus(), 2, a.dim() * d2);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : alt.terms()) {
      Multi e(a.dim() * d2, 0);
      ++e[ka[0] * d2 + kb[0]];
      ++e[ka[1] * d2 + kb[1]];
      out.add(e, static_cast<std::int64_t>(gf::mod_mul(ca, cb, a.modulus())));
    }
  return out;
}

QuadForm tignol_product(const BilForm& b1, const BilForm& b2) {
  if (!b1.is_alternating() || !b2.is_alternating())
    throw InvalidInput("tignol_product needs alternating forms");
  return to_quadform(tignol_map(upper_lift(b1), upper_lift(b2)));
}

PowerDims symmetric_power_dims(int dim, std::uint32_t p) {
  if (dim <= 0) throw InvalidInput("dimension must be positive");
  if (!gf::is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  const int n = static_cast<int>(p);
  const auto monomials = monomial_basis(dim, n);
  std::size_t tensor_size = 1;
  for (int i = 0; i < n; ++i) tensor_size *= dim;

  // Columns of phi are images of the monomial basis.
  gf::PrimeMatrix phi(p, tensor_size, monomials.size());
  for (std::size_t c = 0; c < monomials.size(); ++c) {
    SymPoly m(p, n, dim);
    m.add(monomials[c], 1);
    auto col = multilinearize(m).to_dense();
    for (std::size_t r = 0; r < tensor_size; ++r)
      if (col[r]) phi.set(r, c, col[r]);
  }
  const std::size_t rk = gf::rank(phi);
  // Symmetric tensors are the functions constant on slot-permutation orbits;
  // there is one orbit per monomial.
  return {monomials.size(), rk, monomials.size() - rk, monomials.size()};
}

}  // namespace invforms::tensor
