#include <doctest.h>

#include <random>
#include <set>

#include "qgk/error.hpp"
#include "qgk/gk.hpp"

using namespace qgk;

namespace {
std::vector<std::pair<long, Integer>> S(std::initializer_list<std::pair<long, long>> v) {
  std::vector<std::pair<long, Integer>> o;
  for (auto [a, b] : v) o.push_back({a, Integer(b)});
  return o;
}
}  // namespace

TEST_SUITE("gk") {
  TEST_CASE("GK dimension spot checks") {
    auto a2 = RootSystem::build("A2");
    auto r0 = gk_dimension(ToralWeight::parse(a2, "q^0"));
    CHECK(r0.a_value == 3);
    CHECK(r0.d == 0);
    CHECK(r0.witness_length == 3);
    auto r1 = gk_dimension(ToralWeight::parse(a2, "q^{-2rho}"));
    CHECK(r1.a_value == 0);
    CHECK(r1.d == 3);
    CHECK(r1.witness_word == "e");
    auto b2 = RootSystem::build("B2");
    auto r2 = gk_dimension(ToralWeight::parse(b2, "t=0,c=0;t=1/4,c=-1"));
    CHECK(r2.d == 2);
    CHECK(r2.d == kappas(b2).k0);
    CHECK(r2.phi_label == "A1^LxA1^L");
    // Phi_Lambda empty: Verma simple
    auto r3 = gk_dimension(ToralWeight::parse(a2, "t=1/4;t=1/8"));
    CHECK(r3.d == 3);
  }

  TEST_CASE("d = 0 exactly on dominant integral weights") {
    for (auto type : {"A2", "B2"}) {
      auto rs = RootSystem::build(type);
      for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
          LatticeVector lam{Basis::Fundamental, {rat(a), rat(b)}};
          auto r = gk_dimension(ToralWeight::linear(rs, lam));
          CHECK((r.d == 0) == (a >= 0 && b >= 0));
        }
    }
  }

  TEST_CASE("orbit data shared by GK reports") {
    // d itself varies along an orbit (q^0 and q^{-2rho} are linked); the orbit fixes
    // Phi_Lambda and the antidominant point, and regular orbits biject onto W_Lambda
    std::mt19937 g(5);
    for (auto type : {"A2", "B2"}) {
      auto rs = RootSystem::build(type);
      for (int rep = 0; rep < 20; ++rep) {
        QVec t, c;
        for (int i = 0; i < rs->rank(); ++i) {
          t.push_back(rat(std::uniform_int_distribution<int>(0, 1)(g), 2));
          c.push_back(rat(std::uniform_int_distribution<int>(-4, 4)(g), std::uniform_int_distribution<int>(1, 2)(g)));
        }
        ToralWeight w(rs, t, c);
        auto L = linkage(w);
        auto base = gk_dimension(w);
        auto anti = minimal_antidominant_witness(L).antidominant;
        std::set<std::string> words;
        for (auto& x : orbit(L)) {
          auto r = gk_dimension(x);
          CHECK(r.phi_label == base.phi_label);
          CHECK(r.group_order == base.group_order);
          CHECK(minimal_antidominant_witness(linkage(x)).antidominant == anti);
          words.insert(r.witness_word);
        }
        if (is_regular(L)) CHECK(words.size() == L.group->size());
      }
    }
    auto a2 = RootSystem::build("A2");
    CHECK(gk_dimension(ToralWeight::parse(a2, "q^0")).d != gk_dimension(ToralWeight::parse(a2, "q^{-2rho}")).d);
  }

  TEST_CASE("kappa table") {
    CHECK(kappas(RootSystem::build("F4")) == Kappas{8, 8, 11});
    CHECK(kappas(RootSystem::build("D4")) == Kappas{6, 5, 5});
    CHECK(kappas(RootSystem::build("C3")) == Kappas{3, 3, 5});
    CHECK(kappas(RootSystem::build("G2")) == Kappas{3, 3, 5});
    CHECK(kappas(RootSystem::build("E8")) == Kappas{56, 29, 29});
    for (auto type : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "F4", "G2", "E6", "E7", "E8"}) {
      auto rs = RootSystem::build(type);
      auto k = kappas(rs);
      auto h = coxeter_numbers(*rs);
      CHECK(k.k1 == h.h_dual - 1);
      CHECK(k.k2 == h.h - 1);
    }
  }

  TEST_CASE("minimal GK dimension") {
    auto b3 = RootSystem::build("B3");
    CHECK(min_gk(b3) == 3);
    CHECK(min_gk(b3, {2, 2}) == 4);
    CHECK(min_gk(RootSystem::build("B2")) == 2);
    CHECK(min_gk(RootSystem::build("E8")) == 29);
    CHECK(min_gk(RootSystem::build("A3")) == 3);
    CHECK(min_gk(RootSystem::build("G2")) == 3);
  }

  TEST_CASE("cuspidal criterion") {
    CHECK(cuspidal_possible(parse_type("A3")));
    CHECK_FALSE(cuspidal_possible(parse_type("D4")));
    CHECK_FALSE(cuspidal_possible(parse_type("A1xG2")));
    CHECK(cuspidal_possible(parse_type("A1xB2xC3")));
    // agrees with min{k0, k1} = rank on small irreducible types
    for (auto type : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
      auto rs = RootSystem::build(type);
      auto k = kappas(rs);
      CHECK(cuspidal_possible(rs->type()) == (std::min(k.k0, k.k1) == rs->rank()));
    }
  }

  TEST_CASE("growth exponent") {
    auto a = growth_exponent(S({{3, 27}, {5, 125}, {7, 343}}));
    CHECK(a.exact);
    CHECK(*a.degree == 3);
    auto b = growth_exponent(S({{5, 5}, {7, 7}, {11, 11}}));
    CHECK(b.exact);
    CHECK(*b.degree == 1);
    auto c = growth_exponent(S({{5, 25}, {7, 49}}));
    CHECK_FALSE(c.exact);
    CHECK(c.exponent == doctest::Approx(2.0));
    auto d = growth_exponent(S({{5, 4}, {7, 4}, {11, 4}}));
    CHECK(*d.degree == 0);
    auto e = growth_exponent(S({{1, 1}, {2, 5}, {3, 11}, {4, 19}}));
    CHECK(*e.degree == 2);
    CHECK_THROWS_AS(growth_exponent(S({{5, 5}})), Error);
  }
}
