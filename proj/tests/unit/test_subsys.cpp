#include <doctest.h>

#include <algorithm>
#include <set>

#include "qgk/error.hpp"
#include "qgk/subsys.hpp"

using namespace qgk;

namespace {

int idx(const RootSystemPtr& rs, IVec v) { return rs->index_of(v); }

std::set<std::string> labels(const std::vector<MaximalClass>& v) {
  std::set<std::string> s;
  for (auto& m : v) s.insert(m.label);
  return s;
}

// brute-force: all subsets of positive roots closed under own reflections (tiny types only)
std::set<std::vector<int>> brute_subsystems(const RootSystemPtr& rs) {
  int np = rs->num_positive();
  std::set<std::vector<int>> out;
  for (unsigned m = 0; m < (1u << np); ++m) {
    std::vector<int> mem;
    for (int k = 0; k < np; ++k)
      if (m >> k & 1) {
        mem.push_back(k);
        mem.push_back(rs->negate(k));
      }
    bool ok = true;
    for (int a : mem)
      for (int b : mem)
        if (std::find(mem.begin(), mem.end(), rs->reflect(a, b)) == mem.end()) ok = false;
    if (ok) {
      std::sort(mem.begin(), mem.end());
      out.insert(mem);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("subsys") {
  TEST_CASE("closure examples") {
    auto a2 = RootSystem::build("A2");
    auto s = reflection_closure(a2, {0});
    CHECK(s.size() == 2);
    CHECK(s.label() == "A1");

    auto b2 = RootSystem::build("B2");
    auto lng = reflection_closure(b2, {idx(b2, {1, 0}), idx(b2, {1, 2})});
    CHECK(lng.size() == 4);
    CHECK(lng.label() == "A1^LxA1^L");
    CHECK(is_closed(lng));
    CHECK_FALSE(is_dual_closed(lng));
    for (int k : lng.members()) CHECK(b2->is_long(k));

    auto sh = reflection_closure(b2, {idx(b2, {0, 1}), idx(b2, {1, 1})});
    CHECK(sh.size() == 4);
    CHECK(sh.label() == "A1^SxA1^S");
    for (int k : sh.members()) CHECK_FALSE(b2->is_long(k));
    CHECK_FALSE(is_closed(sh));
    CHECK(is_dual_closed(sh));

    // short roots of B3 form A1^3 and are not closed
    auto b3 = RootSystem::build("B3");
    std::vector<int> shorts;
    for (int k = 0; k < b3->num_roots(); ++k)
      if (!b3->is_long(k)) shorts.push_back(k);
    auto s3 = reflection_closure(b3, shorts);
    CHECK(s3.size() == 6);
    CHECK(s3.label() == "A1^SxA1^SxA1^S");
    CHECK_FALSE(is_closed(s3));
  }

  TEST_CASE("parabolic subsystems are closed and dual-closed") {
    for (auto t : {"A3", "B3", "C3", "G2", "F4"}) {
      auto rs = RootSystem::build(t);
      int n = rs->rank();
      for (unsigned m = 0; m < (1u << n); ++m) {
        std::vector<int> seed;
        for (int i = 0; i < n; ++i)
          if (m >> i & 1) seed.push_back(i);
        auto s = reflection_closure(rs, seed);
        CHECK(is_closed(s));
        CHECK(is_dual_closed(s));
        CHECK(s.rank() == static_cast<int>(seed.size()));
      }
    }
  }

  TEST_CASE("subsystem invariants") {
    for (auto t : {"A3", "B3", "G2"}) {
      auto rs = RootSystem::build(t);
      for (const auto& s : enumerate_subsystems(rs)) {
        CHECK(s.size() == 2 * s.num_positive());
        for (int a : s.simple())
          for (int b : s.simple())
            if (a != b) CHECK(rs->inner(rs->root(a), rs->root(b)) <= 0);
        int cnt = 0;
        for (auto& c : s.components()) cnt += c.num_positive;
        CHECK(cnt == s.num_positive());
      }
    }
  }

  TEST_CASE("enumeration against brute force") {
    // every brute-force subsystem is conjugate to exactly one enumerated class
    for (auto t : {"A2", "B2", "G2", "A3", "A1xA1", "B3", "C3"}) {
      auto rs = RootSystem::build(t);
      WeylGroup W(rs);
      auto cls = enumerate_subsystems(rs);
      std::set<RootMask> reps;
      for (auto& s : cls) reps.insert(canonical_mask(W, s.mask()));
      CHECK(reps.size() == cls.size());
      std::set<RootMask> hit;
      for (auto& mem : brute_subsystems(rs)) {
        RootSubsystem s(rs, mem);
        auto c = canonical_mask(W, s.mask());
        CHECK(reps.count(c) == 1);
        hit.insert(c);
      }
      CHECK(hit.size() == reps.size());
    }
  }

  TEST_CASE("enumeration examples") {
    auto a2 = enumerate_subsystems(RootSystem::build("A2"));
    std::vector<std::string> l;
    for (auto& s : a2) l.push_back(s.label());
    CHECK(l == std::vector<std::string>{"empty", "A1", "A2"});

    std::multiset<std::string> b2;
    for (auto& s : enumerate_subsystems(RootSystem::build("B2"))) b2.insert(s.label());
    CHECK(b2 == std::multiset<std::string>{"empty", "A1^L", "A1^S", "A1^LxA1^L", "A1^SxA1^S", "B2"});

    std::set<std::string> g2;
    for (auto& s : enumerate_subsystems(RootSystem::build("G2"))) g2.insert(s.label());
    CHECK(g2.count("A2^L"));
    CHECK(g2.count("A2^S"));
    CHECK(g2.count("A1^LxA1^S"));

    CHECK_THROWS_AS(enumerate_subsystems(RootSystem::build("A7")), Error);
  }

  TEST_CASE("maximal subsystems match catalog at rank <= 3") {
    for (auto t : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
      auto rs = RootSystem::build(t);
      std::set<std::string> enumd;
      for (auto& s : maximal_subsystems_enumerated(rs)) enumd.insert(s.label());
      CAPTURE(t);
      CHECK(enumd == labels(table1_catalog(rs->type()[0])));
    }
    CHECK(labels(table1_catalog({'B', 3})) == std::set<std::string>{"A1^SxB2", "A3^L"});
    CHECK(labels(table1_catalog({'C', 3})) == std::set<std::string>{"A1^LxB2", "A3^S"});
    CHECK(labels(table1_catalog({'B', 2})) == std::set<std::string>{"A1^SxA1^S", "A1^LxA1^L"});
  }

  TEST_CASE("kappa0") {
    for (int n = 1; n <= 4; ++n) CHECK(kappa0(RootSystem::build("A" + std::to_string(n))) == n);
    for (int n = 2; n <= 4; ++n) {
      CHECK(kappa0(RootSystem::build("B" + std::to_string(n))) == n);
      CHECK(kappa0(RootSystem::build("C" + std::to_string(n))) == n);
    }
    CHECK(kappa0(RootSystem::build("D4")) == 6);
    CHECK(kappa0(RootSystem::build("G2")) == 3);
    CHECK(kappa0(RootSystem::build("E6")) == 16);
    CHECK(kappa0(RootSystem::build("E7")) == 27);
    CHECK(kappa0(RootSystem::build("E8")) == 56);
    CHECK(table1_psi_max({'E', 8}).label == "A1xE7");
    CHECK(table1_psi_max({'E', 8}).positive_count == 64);
    CHECK(table1_psi_max({'B', 3}).label == "A3^L");
    // catalog cardinalities agree with enumeration where both apply
    for (auto t : {"A3", "B3", "C3", "D4", "G2"}) {
      auto rs = RootSystem::build(t);
      CHECK(rs->num_positive() - table1_psi_max(rs->type()[0]).positive_count == kappa0(rs));
    }
  }

  TEST_CASE("gamma and Borel-de Siebenthal") {
    CHECK(gamma_invariant(*RootSystem::build("A4")) == 1);
    CHECK(gamma_invariant(*RootSystem::build("G2")) == 6);
    CHECK(gamma_invariant(*RootSystem::build("E8")) == 30);
    CHECK(gamma_invariant(*RootSystem::build("B3")) == 2);
    CHECK(gamma_invariant(*RootSystem::build("F4")) == 6);

    auto a2 = borel_de_siebenthal(RootSystem::build("A2"));
    REQUIRE(a2.size() == 1);
    CHECK(a2[0].sub.label() == "A1");

    std::set<std::string> b2;
    for (auto& c : borel_de_siebenthal(RootSystem::build("B2"))) b2.insert(c.sub.label());
    CHECK(b2 == std::set<std::string>{"A1^S", "A1^LxA1^L"});

    std::set<std::string> g2;
    for (auto& c : borel_de_siebenthal(RootSystem::build("G2"))) {
      g2.insert(c.sub.label());
      CHECK(c.extended);
      CHECK(is_closed(c.sub));
    }
    CHECK(g2 == std::set<std::string>{"A1^LxA1^S", "A2^L"});

    auto e8 = borel_de_siebenthal(RootSystem::build("E8"));
    std::set<std::string> e8l;
    for (auto& c : e8) e8l.insert(c.sub.label());
    CHECK(e8l.count("A1xE7"));
    CHECK(e8l.count("A8"));
    CHECK(e8l.count("A4xA4"));
    CHECK(e8l.count("A2xE6"));
    CHECK(e8l.count("D8"));
    CHECK_THROWS_AS(borel_de_siebenthal(RootSystem::build("A1xA1")), Error);
  }

  TEST_CASE("label normalization") {
    CHECK(normalize_label("B1xB2") == "A1^SxB2");
    CHECK(normalize_label("C1xC2") == "A1^LxB2");
    CHECK(normalize_label("D2^L") == "A1^LxA1^L");
    CHECK(normalize_label("D3^S") == "A3^S");
    CHECK(normalize_label("A0xA2") == "A2");
    CHECK(normalize_label("A2^LxA2^S") == "A2^LxA2^S");
    CHECK_THROWS_AS(normalize_label("Q3"), ParseError);
  }

  TEST_CASE("dual system") {
    auto b3 = RootSystem::build("B3");
    auto d = dual_root_system(*b3);
    CHECK(d->num_roots() == 18);
    CHECK(type_string(d->type()) == "C3");
    auto full = reflection_closure(b3, {0, 1, 2});
    CHECK(dual(full).size() == 18);
  }
}
