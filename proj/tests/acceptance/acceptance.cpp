// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "invforms/classify.hpp"
#include "invforms/killing.hpp"
#include "invforms/sympforms.hpp"
#include "invforms/tensoralg.hpp"
#include "invforms_cli/cli.hpp"
#include "oracles.hpp"

using namespace invforms;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

json run_json(const std::vector<std::string>& args, int& code) {
  std::ostringstream out;
  code = cli::run(args, out);
  return json::parse(out.str());
}

// Small elimination mod p for the brute-force spans.
std::size_t rank_mod(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    std::uint32_t inv = 1;
    while (inv * rows[rank][c] % p != 1) ++inv;
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c]) {
        const std::uint32_t f = rows[r][c];
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = (rows[r][k] + (p - f) * rows[rank][k]) % p;
      }
    ++rank;
  }
  return rank;
}

std::size_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool table_rule(CartanType t, int n) {
  switch (t) {
    case CartanType::A: return n % 4 != 1;
    case CartanType::B: return n % 4 != 2;
    case CartanType::C: return false;
    case CartanType::D: return n % 4 != 2;
    case CartanType::E: return n != 7;
    default: return true;
  }
}

bool tautological(const RootSystem& rs, const Weight& l) {
  return (rs.type() == CartanType::C && l == Weight::fundamental(rs.rank(), 0)) ||
         (rs.label() == "A1" && l == Weight({1})) || (rs.label() == "B2" && l == Weight({0, 1}));
}

// 1 ------------------------------------------------------------------------
Outcome table1() {
  int code = 0;
  const json j = run_json({"adjoint-table", "--max-rank", "12"}, code);
  if (code != 0) return {false, "exit code " + std::to_string(code)};
  std::set<std::string> expected;
  for (int n = 2; n <= 12; ++n) expected.insert("A" + std::to_string(n));
  for (int n = 3; n <= 12; ++n) expected.insert("B" + std::to_string(n));
  for (int n = 2; n <= 12; ++n) expected.insert("C" + std::to_string(n));
  for (int n = 4; n <= 12; ++n) expected.insert("D" + std::to_string(n));
  for (const char* e : {"E6", "E7", "E8", "F4", "G2"}) expected.insert(e);
  std::size_t matched = 0;
  for (const auto& row : j["rows"]) {
    const auto label = row["label"].get<std::string>();
    const auto t = static_cast<CartanType>(label[0]);
    if (row["orthogonal"].get<bool>() != table_rule(t, row["rank"].get<int>())) return {false, "mismatch at " + label};
    matched += expected.erase(label);
  }
  if (!expected.empty()) return {false, "missing row " + *expected.begin()};
  return {true, std::to_string(matched) + " rows match"};
}

// 2 ------------------------------------------------------------------------
Outcome exact_sequence() {
  int checked = 0;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int d = 1; d <= 4; ++d) {
      const int n = static_cast<int>(p);
      std::size_t size = 1;
      for (int i = 0; i < n; ++i) size *= d;
      auto decode = [&](std::size_t code) {
        std::vector<int> idx(n);
        for (int i = n - 1; i >= 0; --i) {
          idx[i] = static_cast<int>(code % d);
          code /= d;
        }
        return idx;
      };
      auto encode = [&](const std::vector<int>& idx) {
        std::size_t c = 0;
        for (int i : idx) c = c * d + i;
        return c;
      };
      // Monomials are the sorted index tuples; phi(m) is the full sum over
      // all n! slot permutations of the tuple.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::vector<int>> perms;
      do perms.push_back(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
      std::vector<std::vector<std::uint32_t>> images;
      std::size_t monomials = 0;
      for (std::size_t code = 0; code < size; ++code) {
        const auto idx = decode(code);
        if (!std::is_sorted(idx.begin(), idx.end())) continue;
        ++monomials;
        std::vector<std::uint32_t> v(size, 0);
        for (const auto& s : perms) {
          std::vector<int> moved(n);
          for (int k = 0; k < n; ++k) moved[s[k]] = idx[k];
          const auto c = encode(moved);
          v[c] = (v[c] + 1) % p;
        }
        images.push_back(v);
      }
      const std::size_t im = rank_mod(images, p);
      const std::size_t ker = monomials - im;
      // Symmetric tensors: one free coefficient per slot-permutation orbit.
      std::set<std::vector<int>> orbits;
      for (std::size_t code = 0; code < size; ++code) {
        auto idx = decode(code);
        std::sort(idx.begin(), idx.end());
        orbits.insert(idx);
      }
      const std::size_t sym_tensors = orbits.size();
      const auto lib = tensor::symmetric_power_dims(d, p);
      const bool ok = ker == static_cast<std::size_t>(d) && im == binom(d + n - 1, n) - d && sym_tensors == im + d &&
                      lib.kernel == ker && lib.symmetrized == im && lib.symmetric_tensors == sym_tensors;
      if (!ok) return {false, "d=" + std::to_string(d) + " p=" + std::to_string(p)};
      ++checked;
    }
  return {true, std::to_string(checked) + " (d, p) pairs"};
}

// 3 ------------------------------------------------------------------------
Outcome q3_sp6() {
  symp::SymplecticSpace sp(3);
  const auto q = symp::wedge_quadratic(sp, 3);
  const auto b = symp::wedge_bilinear(sp, 3);
  if (!(tensor::polar(q) == b)) return {false, "polar(q_(3)) != b_(3)"};

  // Independent sampler: rejection-sample pairwise orthogonal independent
  // triples and take 3x3 minors by hand.
  std::mt19937_64 rng(2024);
  auto pair = [](unsigned v, unsigned w) {
    return __builtin_popcount((v & 7) & (w >> 3)) + __builtin_popcount((v >> 3) & (w & 7));
  };
  const auto basis = symp::wedge_basis(6, 3);
  int sampled = 0;
  while (sampled < 200) {
    const unsigned v[3] = {static_cast<unsigned>(rng() % 64), static_cast<unsigned>(rng() % 64),
                           static_cast<unsigned>(rng() % 64)};
    if (pair(v[0], v[1]) % 2 || pair(v[0], v[2]) % 2 || pair(v[1], v[2]) % 2) continue;
    gf::Vec x(basis.size(), 0);
    bool nonzero = false;
    for (std::size_t s = 0; s < basis.size(); ++s) {
      int m[3][3];
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) m[i][k] = (v[k] >> basis[s][i]) & 1;
      const int det = m[0][0] * (m[1][1] * m[2][2] + m[1][2] * m[2][1]) + m[0][1] * (m[1][0] * m[2][2] + m[1][2] * m[2][0]) +
                      m[0][2] * (m[1][0] * m[2][1] + m[1][1] * m[2][0]);
      x[s] = det & 1;
      nonzero = nonzero || x[s];
    }
    if (!nonzero) continue;
    if (q(x) != 0) return {false, "q_(3) nonzero on a generator-type symbol"};
    ++sampled;
  }
  const auto w = symp::generator_submodule(sp, 3);
  if (w.dim() != 14 || binom(6, 3) - binom(6, 1) != 14) return {false, "submodule dim " + std::to_string(w.dim())};
  std::vector<gf::PrimeMatrix> induced;
  for (const auto& g : symp::sp_generators(sp)) induced.push_back(symp::induced_action(g, 3));
  if (!symp::verify_invariance(q, induced, w)) return {false, "not invariant on the submodule"};
  return {true, "polar 20x20 exact, 200 symbols, dim 14, invariant"};
}

// 4 ------------------------------------------------------------------------
Outcome tilting() {
  const std::string root = INVFORMS_FIXTURES;
  for (int p : {3, 5, 7}) {
    const std::string dir = root + "/sl3/p" + std::to_string(p) + "/";
    int code = 0;
    auto j2 = run_json({"classify", "--datum", "A2", "--char", std::to_string(p), "--kind", "tilting", "--table",
                        dir + "lambda2.json"},
                       code);
    if (code != 0 || j2["bilinear_dim"] != 2) return {false, "T(lambda2) at p=" + std::to_string(p)};
    auto j3 = run_json({"classify", "--datum", "A2", "--char", std::to_string(p), "--kind", "tilting", "--table",
                        dir + "lambda3.json", "--dual-table", dir + "lambda4.json"},
                       code);
    if (code != 0 || j3["bilinear_dim"] != 1) return {false, "T(lambda3) at p=" + std::to_string(p)};
  }
  return {true, "T(l2) = 2, T(l3) = 1 for p = 3, 5, 7"};
}

// 5 and 6 ------------------------------------------------------------------
Outcome trichotomy(bool h1) {
  std::size_t weights = 0, exceptions = 0;
  for (const auto& rs : simple_types_up_to_rank(4)) {
    const auto pd = ProductDatum::simple(rs);
    for (const auto& v : oracle::box(rs.rank(), 3)) {
      const Weight l(v);
      const auto pl = pd.lift(0, l);
      const bool self_dual = oracle::minus_w0(rs, v) == v;
      if (h1) {
        const int expect = (!l.is_zero() && self_dual && !tautological(rs, l)) ? 1 : 0;
        if (classify::h1_wedge2_induced(pd, pl) != expect) return {false, rs.label() + " " + to_string(l)};
        ++weights;
        continue;
      }
      if (l.is_zero()) continue;
      const auto b = classify::weyl_orthogonal_char2(pd, pl);
      const int fired = (b == classify::Char2Branch::orthogonal) + (b == classify::Char2Branch::sp_exception) +
                        (b == classify::Char2Branch::not_self_dual);
      if (fired != 1) return {false, "no single branch at " + rs.label() + " " + to_string(l)};
      if ((b == classify::Char2Branch::not_self_dual) == self_dual) return {false, "self-duality at " + rs.label()};
      if ((b == classify::Char2Branch::sp_exception) != tautological(rs, l))
        return {false, "exception at " + rs.label() + " " + to_string(l)};
      exceptions += b == classify::Char2Branch::sp_exception;
      ++weights;
    }
  }
  if (h1) return {true, std::to_string(weights) + " weights"};
  return {true, std::to_string(weights) + " weights, " + std::to_string(exceptions) +
                    " exceptions (C_n omega_1 incl. A1 = C1, B2 = C2)"};
}

// 7 ------------------------------------------------------------------------
Outcome a1_oracle() {
  const auto a1 = RootSystem::parse("A1");
  for (int m = 0; m <= 10; ++m) {
    const auto forms = oracle::invariant_forms(oracle::binary_forms(m));
    if (forms.size() != 1) return {false, "invariant pairing not unique at m=" + std::to_string(m)};
    const int s = oracle::symmetry_sign(forms[0]);
    const auto ind = classify::classical_indicator(a1, Weight({m}));
    const bool orth = ind == classify::Indicator::orthogonal;
    if (orth != (m % 2 == 0) || orth != (s == 1)) return {false, "m=" + std::to_string(m)};
  }
  return {true, "m = 0..10"};
}

// 8 ------------------------------------------------------------------------
Outcome comparable() {
  std::size_t checked = 0;
  auto leq = [](const RootSystem& rs, const oracle::IVec& a, const oracle::IVec& b) {
    oracle::IVec d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = b[i] - a[i];
    for (const auto& y : oracle::simple_coords(rs, d))
      if (denominator(y) != 1 || y < 0) return false;
    return true;
  };
  for (const auto& rs : simple_types_up_to_rank(4))
    for (const auto& v : oracle::box(rs.rank(), 4)) {
      const auto d = oracle::minus_w0(rs, v);
      if (d != v && (leq(rs, v, d) || leq(rs, d, v))) return {false, "counterexample " + rs.label()};
      if (minus_w0(rs, Weight(v)).coords != d) return {false, "-w0 disagrees at " + rs.label()};
      ++checked;
    }
  return {true, std::to_string(checked) + " weights, no counterexample"};
}

// 9 ------------------------------------------------------------------------
Outcome evenness() {
  std::size_t checked = 0;
  for (int n = 1; n <= 5; ++n) {
    symp::SymplecticSpace sp(n);
    for (int r = 1; r <= n; r += 2) {
      const auto basis = symp::wedge_basis(2 * n, r);
      const auto lib = symp::diagonal_values(sp, r);
      for (std::size_t s = 0; s < basis.size(); ++s) {
        // On a symbol, b_Z pairs e_i with f_i only: an unpaired index is a
        // zero row, and k complete pairs give (-1)^k.
        std::vector<int> idx = basis[s];
        std::int64_t value = 0;
        bool all_paired = true;
        for (int i : idx) all_paired = all_paired && std::count(idx.begin(), idx.end(), sp.partner(i)) == 1;
        if (all_paired) value = (idx.size() / 2) % 2 ? -1 : 1;
        if (lib[s] != value) return {false, "diagonal value mismatch"};
        if (lib[s] % 2 != 0) return {false, "odd value at n=" + std::to_string(n) + " r=" + std::to_string(r)};
        ++checked;
      }
      (void)symp::wedge_quadratic(sp, r);  // throws InternalError on an odd value
    }
  }
  return {true, std::to_string(checked) + " basis symbols, all even"};
}

}  // namespace

int main() {
  const std::vector<std::tuple<int, std::string, double, std::function<Outcome()>>> criteria{
      {1, "adjoint orthogonality table (adjoint-table --max-rank 12)", 5.0, table1},
      {2, "symmetric-power exact sequence, d <= 4, p in {2,3,5}", 60.0, exact_sequence},
      {3, "q_(3) on Sp6(F2)", 10.0, q3_sp6},
      {4, "SL3 tilting fixtures", 0.0, tilting},
      {5, "char-2 trichotomy sweep", 30.0, [] { return trichotomy(false); }},
      {6, "H1(G, Lambda^2 H0) corollary sweep", 0.0, [] { return trichotomy(true); }},
      {7, "A1 char-0 recipe vs binary-form pairings", 0.0, a1_oracle},
      {8, "comparable lambda, -w0 lambda are equal", 0.0, comparable},
      {9, "evenness of the integral diagonal", 0.0, evenness},
  };
  int failures = 0;
  for (const auto& [id, name, budget, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && secs > budget) {
      o.ok = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(budget)) + " s budget";
    }
    failures += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " [" << o.detail << "] ("
              << std::fixed << std::setprecision(3) << secs << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
