#include "invforms/sympforms.hpp"

#include <deque>
#include <string>

#include "invforms/error.hpp"

namespace invforms::symp {

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// Nonzero-ness of an r x r minor over GF(2), rows/cols given as index lists.
bool minor_mod2(const gf::PrimeMatrix& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t r = rows.size();
  std::uint64_t m[64];
  for (std::size_t a = 0; a < r; ++a) {
    std::uint64_t w = 0;
    for (std::size_t b = 0; b < r; ++b)
      if (g.at(rows[a], cols[b])) w |= std::uint64_t{1} << b;
    m[a] = w;
  }
  for (std::size_t c = 0; c < r; ++c) {
    const std::uint64_t bit = std::uint64_t{1} << c;
    std::size_t piv = c;
    while (piv < r && !(m[piv] & bit)) ++piv;
    if (piv == r) return false;
    std::swap(m[c], m[piv]);
    for (std::size_t a = c + 1; a < r; ++a)
      if (m[a] & bit) m[a] ^= m[c];
  }
  return true;
}

void check_r(const SymplecticSpace& sp, int r) {
  if (r < 1 || r > sp.dim()) throw InvalidInput("r must satisfy 1 <= r <= 2n");
}

}  // namespace

SymplecticSpace::SymplecticSpace(int n, int max_n) : n_(n) {
  if (n < 1) throw InvalidInput("n must be positive");
  if (n > max_n) throw InvalidInput("n = " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n));
  if (2 * n > 64) throw InvalidInput("n above 32 is not supported");
}

gf::PrimeMatrix SymplecticSpace::gram() const {
  gf::PrimeMatrix j(2, dim(), dim());
  for (int i = 0; i < n_; ++i) {
    j.set(i, i + n_, 1);
    j.set(i + n_, i, 1);
  }
  return j;
}

gf::IntMatrix SymplecticSpace::integral_gram() const {
  gf::IntMatrix b(dim(), dim());
  for (int i = 0; i < n_; ++i) {
    b.at(i, i + n_) = 1;
    b.at(i + n_, i) = 1;
  }
  return b;
}

std::vector<std::vector<int>> wedge_basis(int dim, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > dim) return out;
  std::vector<int> s(r);
  for (int i = 0; i < r; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    int k = r - 1;
    while (k >= 0 && s[k] == dim - r + k) --k;
    if (k < 0) break;
    ++s[k];
    for (int j = k + 1; j < r; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::size_t wedge_index(int dim, const std::vector<int>& subset) {
  const int r = static_cast<int>(subset.size());
  std::size_t idx = 0;
  int prev = -1;
  for (int k = 0; k < r; ++k) {
    if (subset[k] <= prev || subset[k] >= dim) throw InvalidInput("wedge symbol must be strictly increasing");
    for (int j = prev + 1; j < subset[k]; ++j) idx += binom(dim - 1 - j, r - 1 - k);
    prev = subset[k];
  }
  return idx;
}

std::string symbol_name(const SymplecticSpace& sp, const std::vector<int>& subset) {
  std::string s;
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k) s += "^";
    const int i = subset[k];
    s += (i < sp.n() ? "e" : "f") + std::to_string(i % sp.n() + 1);
  }
  return s;
}

gf::IntMatrix wedge_bilinear_integral(const SymplecticSpace& sp, int r) {
  check_r(sp, r);
  const auto basis = wedge_basis(sp.dim(), r);
  const gf::IntMatrix b = sp.integral_gram();
  gf::IntMatrix out(basis.size(), basis.size());
  gf::IntMatrix sub(r, r);
  for (std::size_t s = 0; s < basis.size(); ++s)
    for (std::size_t t = 0; t < basis.size(); ++t) {
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub.at(i, j) = b.at(basis[s][i], basis[t][j]);
      out.at(s, t) = gf::det(sub);
    }
  return out;
}

tensor::BilForm wedge_bilinear(const SymplecticSpace& sp, int r) {
  return tensor::BilForm(wedge_bilinear_integral(sp, r).reduce_mod(2));
}

std::vector<gf::BigInt> diagonal_values(const SymplecticSpace& sp, int r) {
  check_r(sp, r);
  const auto basis = wedge_basis(sp.dim(), r);
  const gf::IntMatrix b = sp.integral_gram();
  std::vector<gf::BigInt> out;
  out.reserve(basis.size());
  gf::IntMatrix sub(r, r);
  for (const auto& s : basis) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) sub.at(i, j) = b.at(s[i], s[j]);
    out.push_back(gf::det(sub));
  }
  return out;
}

tensor::QuadForm wedge_quadratic(const SymplecticSpace& sp, int r) {
  check_r(sp, r);
  if (r % 2 == 0) throw InvalidInput("q_(r) is defined for odd r only");
  const gf::IntMatrix g = wedge_bilinear_integral(sp, r);
  const std::size_t m = g.rows();
  tensor::QuadForm q(2, static_cast<int>(m));
  for (std::size_t s = 0; s < m; ++s) {
    const gf::BigInt& d = g.at(s, s);
    if (d % 2 != 0)
      throw InternalError("odd integral value on a basis symbol for odd r");
    q.set(s, s, static_cast<std::int64_t>((d / 2) % 2));
    for (std::size_t t = s + 1; t < m; ++t)
      if (g.at(s, t) % 2 != 0) q.set(s, t, 1);
  }
  return q;
}

tensor::QuadForm even_wedge_form(const SymplecticSpace& sp, int r) {
  check_r(sp, r);
  if (r % 2 != 0) throw InvalidInput("the diagonal form is used for even r");
  const auto diag = diagonal_values(sp, r);
  tensor::QuadForm q(2, static_cast<int>(diag.size()));
  for (std::size_t s = 0; s < diag.size(); ++s)
    if (diag[s] % 2 != 0) q.set(s, s, 1);
  return q;
}

std::vector<gf::PrimeMatrix> sp_generators(const SymplecticSpace& sp) {
  const int n = sp.n();
  std::vector<gf::PrimeMatrix> gens;
  auto unit = [&] { return gf::PrimeMatrix::identity(2, sp.dim()); };
  // x_{e_i - e_j}(1): e_j -> e_j + e_i, f_i -> f_i + f_j.
  auto short_root = [&](int i, int j) {
    auto g = unit();
    g.set(i, j, 1);
    g.set(n + j, n + i, 1);
    return g;
  };
  for (int i = 0; i + 1 < n; ++i) {
    gens.push_back(short_root(i, i + 1));
    gens.push_back(short_root(i + 1, i));
  }
  // x_{2e_i}(1): f_i -> f_i + e_i.  x_{-2e_i}(1): e_i -> e_i + f_i.
  auto plus_long = [&](int i) {
    auto g = unit();
    g.set(i, n + i, 1);
    return g;
  };
  auto minus_long = [&](int i) {
    auto g = unit();
    g.set(n + i, i, 1);
    return g;
  };
  gens.push_back(plus_long(n - 1));
  gens.push_back(minus_long(n - 1));
  // Lowest root -2e_1.
  if (n > 1) gens.push_back(minus_long(0));
  for (const auto& g : gens)
    if (!preserves_form(sp, g)) throw InternalError("generator does not preserve the symplectic form");
  return gens;
}

bool preserves_form(const SymplecticSpace& sp, const gf::PrimeMatrix& g) {
  const auto j = sp.gram();
  return g.transpose() * j * g == j;
}

gf::PrimeMatrix induced_action(const gf::PrimeMatrix& g, int r) {
  if (g.modulus() != 2 || g.rows() != g.cols()) throw InvalidInput("induced_action expects a square GF(2) matrix");
  const auto basis = wedge_basis(static_cast<int>(g.rows()), r);
  gf::PrimeMatrix out(2, basis.size(), basis.size());
  for (std::size_t s = 0; s < basis.size(); ++s)
    for (std::size_t t = 0; t < basis.size(); ++t)
      if (minor_mod2(g, basis[t], basis[s])) out.set(t, s, 1);
  return out;
}

gf::Subspace generator_submodule(const SymplecticSpace& sp, int r) {
  if (r < 1 || r > sp.n()) throw InvalidInput("generator-type symbols need 1 <= r <= n");
  std::vector<gf::PrimeMatrix> induced;
  for (const auto& g : sp_generators(sp)) induced.push_back(induced_action(g, r));
  const std::size_t m = binom(sp.dim(), r);
  gf::Subspace w(2, m);
  gf::Vec start(m, 0);
  start[0] = 1;  // e_1 ^ ... ^ e_r
  std::deque<gf::Vec> todo{start};
  w.insert(start);
  while (!todo.empty()) {
    const gf::Vec v = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : induced) {
      gf::Vec gv = g.apply(v);
      if (w.insert(gv)) todo.push_back(std::move(gv));
    }
  }
  return w;
}

gf::Vec wedge_of(const std::vector<gf::Vec>& vectors) {
  if (vectors.empty()) throw InvalidInput("empty wedge");
  const int d = static_cast<int>(vectors[0].size());
  const int r = static_cast<int>(vectors.size());
  gf::PrimeMatrix cols(2, d, r);
  for (int c = 0; c < r; ++c)
    for (int i = 0; i < d; ++i) cols.set(i, c, vectors[c][i]);
  std::vector<int> all(r);
  for (int c = 0; c < r; ++c) all[c] = c;
  const auto basis = wedge_basis(d, r);
  gf::Vec out(basis.size(), 0);
  for (std::size_t t = 0; t < basis.size(); ++t) out[t] = minor_mod2(cols, basis[t], all) ? 1 : 0;
  return out;
}

gf::Vec random_generator_symbol(const SymplecticSpace& sp, int r, std::mt19937_64& rng) {
  if (r < 1 || r > sp.n()) throw InvalidInput("isotropic r-tuples need 1 <= r <= n");
  const int d = sp.dim();
  const auto j = sp.gram();
  std::vector<gf::Vec> chosen;
  gf::Subspace span(2, d);
  while (static_cast<int>(chosen.size()) < r) {
    // Kernel of v -> (b(v_k, v))_k is the orthogonal complement of the span.
    gf::PrimeMatrix constraints(2, std::max<std::size_t>(chosen.size(), 1), d);
    for (std::size_t k = 0; k < chosen.size(); ++k) constraints.set_row(k, j.apply(chosen[k]));
    const auto perp = gf::kernel_basis(constraints);
    gf::Vec v(d, 0);
    for (const auto& b : perp)
      if (rng() & 1)
        for (int i = 0; i < d; ++i) v[i] ^= b[i];
    if (span.insert(v)) chosen.push_back(std::move(v));
  }
  return wedge_of(chosen);
}

bool verify_invariance(const tensor::QuadForm& q, const std::vector<gf::PrimeMatrix>& induced,
                       const gf::Subspace& w, int random_sums, std::uint64_t seed) {
  const auto& basis = w.basis();
  if (basis.empty()) return true;
  const gf::PrimeMatrix bq = tensor::polar(q).gram();
  gf::PrimeMatrix z(q.modulus(), basis.size(), w.ambient_dim());
  for (std::size_t a = 0; a < basis.size(); ++a) z.set_row(a, basis[a]);
  const gf::PrimeMatrix pairing = z * bq * z.transpose();
  for (const auto& g : induced) {
    const gf::PrimeMatrix gz = z * g.transpose();  // rows are g z_a
    for (std::size_t a = 0; a < basis.size(); ++a)
      if (q(gz.row(a)) != q(basis[a])) return false;
    if (!(gz * bq * gz.transpose() == pairing)) return false;
    std::mt19937_64 rng(seed);
    for (int s = 0; s < random_sums; ++s) {
      gf::Vec v(w.ambient_dim(), 0);
      for (const auto& b : basis)
        if (rng() & 1)
          for (std::size_t i = 0; i < v.size(); ++i) v[i] = gf::mod_add(v[i], b[i], q.modulus());
      if (q(g.apply(v)) != q(v)) return false;
    }
  }
  return true;
}

}  // namespace invforms::symp
