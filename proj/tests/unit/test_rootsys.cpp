#include <doctest.h>

#include "invforms/error.hpp"
#include "invforms/rootsys.hpp"
#include "oracles.hpp"

using namespace invforms;

namespace {

Weight W(std::vector<std::int64_t> c) { return Weight(std::move(c)); }

}  // namespace

TEST_CASE("parsing and rank ranges") {
  CHECK(RootSystem::parse("A1").rank() == 1);
  CHECK(RootSystem::parse("D3").label() == "D3");
  CHECK(RootSystem::parse("E8").rank() == 8);
  for (const char* bad : {"A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X2", "", "A", "A-1", "A1x"})
    CHECK_THROWS_AS(RootSystem::parse(bad), InvalidInput);
  CHECK(parse_weight("1,0,2") == W({1, 0, 2}));
  CHECK(parse_weight(" 3 , -1") == W({3, -1}));
  CHECK(parse_weight("").rank() == 0);
  for (const char* bad : {"1,,2", "a", "1,2,", ","}) CHECK_THROWS_AS(parse_weight(bad), InvalidInput);
}

TEST_CASE("Cartan matrices satisfy the symmetrizability convention") {
  for (const auto& rs : simple_types_up_to_rank(8)) {
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(rs.cartan(i, i) == 2);
      for (int j = 0; j < rs.rank(); ++j) {
        if (i != j) CHECK(rs.cartan(i, j) <= 0);
        CHECK(rs.coroot_length(i) * rs.cartan(i, j) == rs.coroot_length(j) * rs.cartan(j, i));
      }
    }
  }
}

TEST_CASE("positive root counts") {
  auto count = [](const char* l) { return RootSystem::parse(l).positive_roots().size(); };
  CHECK(count("A1") == 1);
  CHECK(count("A4") == 10);
  CHECK(count("B3") == 9);
  CHECK(count("C4") == 16);
  CHECK(count("D4") == 12);
  CHECK(count("D5") == 20);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
  CHECK(count("F4") == 24);
  CHECK(count("G2") == 6);
}

TEST_CASE("positive roots are closed under the Weyl group up to sign") {
  for (const char* l : {"B3", "C3", "G2", "F4", "D4"}) {
    const auto rs = RootSystem::parse(l);
    std::set<oracle::IVec> roots;
    for (const auto& b : rs.positive_roots()) roots.insert(rs.root_weight(b).coords);
    // Oracle: the roots are the W-orbits of the simple roots.
    std::set<oracle::IVec> all;
    for (int i = 0; i < rs.rank(); ++i) {
      oracle::IVec row(rs.rank());
      for (int j = 0; j < rs.rank(); ++j) row[j] = rs.cartan(i, j);
      for (const auto& v : oracle::weyl_orbit(rs, row)) all.insert(v);
    }
    CHECK(all.size() == 2 * roots.size());
    for (const auto& r : roots) CHECK(all.count(r));
  }
}

TEST_CASE("highest roots") {
  CHECK(RootSystem::parse("A3").highest_root() == W({1, 0, 1}));
  CHECK(RootSystem::parse("B4").highest_root() == W({0, 1, 0, 0}));
  CHECK(RootSystem::parse("C3").highest_root() == W({2, 0, 0}));
  CHECK(RootSystem::parse("D5").highest_root() == W({0, 1, 0, 0, 0}));
  CHECK(RootSystem::parse("E6").highest_root() == W({0, 1, 0, 0, 0, 0}));
  CHECK(RootSystem::parse("E7").highest_root() == W({1, 0, 0, 0, 0, 0, 0}));
  CHECK(RootSystem::parse("E8").highest_root() == W({0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(RootSystem::parse("F4").highest_root() == W({1, 0, 0, 0}));
  CHECK(RootSystem::parse("G2").highest_root() == W({0, 1}));
  CHECK(RootSystem::parse("G2").highest_short_root() == W({1, 0}));
  CHECK(RootSystem::parse("C3").highest_short_root() == W({0, 1, 0}));
}

TEST_CASE("minus_w0 agrees with the dominant element of W(-lambda)") {
  for (const auto& rs : simple_types_up_to_rank(4)) {
    for (const auto& v : oracle::box(rs.rank(), 2)) {
      CHECK(minus_w0(rs, Weight(v)).coords == oracle::minus_w0(rs, v));
    }
  }
  const auto e6 = RootSystem::parse("E6");
  CHECK(minus_w0(e6, Weight::fundamental(6, 0)) == Weight::fundamental(6, 5));
  CHECK(minus_w0(e6, Weight::fundamental(6, 1)) == Weight::fundamental(6, 1));
  CHECK(minus_w0(RootSystem::parse("D5"), W({0, 0, 0, 1, 0})) == W({0, 0, 0, 0, 1}));
  CHECK(minus_w0(RootSystem::parse("D4"), W({0, 0, 1, 0})) == W({0, 0, 1, 0}));
}

TEST_CASE("root lattice and dominance") {
  const auto a2 = RootSystem::parse("A2");
  CHECK(in_root_lattice(a2, W({1, 1})));
  CHECK_FALSE(in_root_lattice(a2, W({1, 0})));
  CHECK(in_root_lattice(a2, W({1, 0}), 3));
  CHECK_THROWS_AS(in_root_lattice(a2, W({1, 0}), 0), InvalidInput);
  CHECK(dominance_leq(a2, W({0, 0}), W({1, 1})));
  CHECK_FALSE(dominance_leq(a2, W({1, 0}), W({1, 1})));
  CHECK(dominance_leq(a2, W({1, 1}), W({3, 0})));
  // C_n: omega_i is in the root lattice iff i is even (epsilon coordinates).
  const auto c4 = RootSystem::parse("C4");
  for (int i = 0; i < 4; ++i) CHECK(is_sum_of_positive_roots(c4, Weight::fundamental(4, i)) == (i % 2 == 1));
  for (const auto& rs : simple_types_up_to_rank(3))
    for (const auto& v : oracle::box(rs.rank(), 3))
      CHECK(in_root_lattice(rs, Weight(v)) == oracle::in_scaled_root_lattice(rs, v, 1));
}

TEST_CASE("affine dot orbit of zero against the W.rho + pQ oracle") {
  for (const char* l : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    const auto rs = RootSystem::parse(l);
    for (std::int64_t p : {2, 3, 5}) {
      for (const auto& v : oracle::box(rs.rank(), static_cast<int>(2 * p))) {
        CHECK(in_affine_orbit_of_zero(rs, Weight(v), p) == oracle::in_affine_orbit_of_zero(rs, v, p));
      }
    }
  }
  CHECK_THROWS_AS(in_affine_orbit_of_zero(RootSystem::parse("A2"), W({0, 0}), 4), InvalidInput);
}

TEST_CASE("SL3 linkage of the tilting example weights") {
  const auto a2 = RootSystem::parse("A2");
  for (std::int64_t p : {3, 5, 7, 11}) {
    CHECK(in_affine_orbit_of_zero(a2, W({p - 2, p - 2}), p));
    CHECK(in_affine_orbit_of_zero(a2, W({p, p - 3}), p));
    CHECK(in_affine_orbit_of_zero(a2, W({p - 3, p}), p));
    CHECK_FALSE(in_affine_orbit_of_zero(a2, W({1, 0}), p));
  }
}

TEST_CASE("alcove representative lies in the closed bottom alcove") {
  for (const char* l : {"A2", "B2", "G2", "C3"}) {
    const auto rs = RootSystem::parse(l);
    for (const auto& v : oracle::box(rs.rank(), 6)) {
      const auto x = alcove_representative(rs, Weight(v), 3);
      const Weight shifted = x + rs.rho();
      for (const auto& b : rs.positive_roots()) {
        CHECK(rs.pairing(shifted, b) >= 0);
        CHECK(rs.pairing(shifted, b) <= 3);
      }
    }
  }
}

TEST_CASE("lemma: comparable lambda and -w0 lambda are equal") {
  for (const auto& rs : simple_types_up_to_rank(4))
    for (const auto& v : oracle::box(rs.rank(), 2)) {
      const Weight l(v);
      const Weight d = minus_w0(rs, l);
      if (dominance_leq(rs, l, d) || dominance_leq(rs, d, l)) CHECK(l == d);
    }
}

TEST_CASE("product data") {
  const auto pd = ProductDatum::parse("A1xC3+T2");
  CHECK(pd.factors().size() == 2);
  CHECK(pd.torus_rank() == 2);
  CHECK(pd.semisimple_rank() == 4);
  CHECK(pd.label() == "A1xC3+T2");
  const auto w = pd.parse_weight("1,0,1,0,0,0");
  CHECK(w.components[0] == W({1}));
  CHECK(w.components[1] == W({0, 1, 0}));
  CHECK_FALSE(w.torus_nonzero());
  CHECK(is_self_dual(pd, w));
  const auto t = pd.parse_weight("0,0,0,0,1,0");
  CHECK(t.torus_nonzero());
  CHECK_FALSE(is_self_dual(pd, t));
  CHECK(minus_w0(pd, t).torus == std::vector<std::int64_t>{-1, 0});
  // torus coordinates are optional
  CHECK(pd.parse_weight("1,0,0,0").torus == std::vector<std::int64_t>{0, 0});
  CHECK_THROWS_AS(pd.parse_weight("1,0"), InvalidInput);
  CHECK_THROWS_AS(ProductDatum::parse("A1xQ3"), InvalidInput);
  CHECK_THROWS_AS(ProductDatum::parse("A1+T"), InvalidInput);
  CHECK_THROWS_AS(pd.check_dominant(pd.parse_weight("-1,0,0,0")), InvalidInput);
  const auto a2 = ProductDatum::parse("A2xA2");
  CHECK_FALSE(is_self_dual(a2, a2.parse_weight("1,0,0,1")));
  CHECK(is_self_dual(a2, a2.parse_weight("1,1,0,0")));
}

TEST_CASE("simple types up to rank") {
  auto all = simple_types_up_to_rank(2);
  std::vector<std::string> labels;
  for (const auto& r : all) labels.push_back(r.label());
  CHECK(labels == std::vector<std::string>{"A1", "A2", "B2", "C2", "G2"});
  CHECK(simple_types_up_to_rank(4).size() == 4 + 3 + 3 + 2 + 1 + 1);
}
