#include <doctest.h>

#include "qgk/report.hpp"

using namespace qgk;

namespace {
Json reparse(const Json& j) { return Json::parse(j.dump()); }
}  // namespace

TEST_SUITE("report") {
  TEST_CASE("family formulas") {
    CHECK(eval_family_formula("n", 5) == 5);
    CHECK(eval_family_formula("2n-3", 4) == 5);
    CHECK(eval_family_formula("2n-1", 3) == 5);
    CHECK(eval_family_formula("56", 8) == 56);
  }

  TEST_CASE("fixture rows") {
    Json t2 = load_fixture(default_data_dir() + "/table2.json");
    for (const char* t : {"A3", "B3", "D4", "G2", "E8"}) CHECK(table2_row(t, t2).match);
    auto b3 = table2_row("B3", t2);
    CHECK(b3.min_value == 3);
    Json t1 = load_fixture(default_data_dir() + "/table1.json");
    auto g2 = table1_row("G2", t1);
    CHECK(g2.match);
    CHECK(g2.expected == std::vector<std::string>{"A1^LxA1^S", "A2^L", "A2^S"});
    CHECK_THROWS_AS(table1_row("F4", t1), Error);
  }

  TEST_CASE("JSON round trips") {
    Json t2 = load_fixture(default_data_dir() + "/table2.json");
    auto r2 = table2_row("F4", t2);
    CHECK(table2_row_from_json(reparse(to_json(r2))) == r2);
    Json t1 = load_fixture(default_data_dir() + "/table1.json");
    auto r1 = table1_row("B3", t1);
    CHECK(table1_row_from_json(reparse(to_json(r1))) == r1);
    auto af = afunction_summary("B2");
    CHECK(af.checks);
    CHECK(afunction_summary_from_json(reparse(to_json(af))) == af);
    auto b2 = RootSystem::build("B2");
    auto w = ToralWeight::parse(b2, "t=0,c=0;t=1/4,c=-1");
    auto sr = subsystem_report(w);
    CHECK(subsystem_report_from_json(reparse(to_json(sr))) == sr);
    auto gk = gk_dimension(w);
    CHECK(to_json(gk_report_from_json(reparse(to_json(gk)))) == to_json(gk));
    JantzenCheck j{3, 3, true};
    auto jb = jantzen_from_json(reparse(to_json(j)));
    CHECK(jb.lhs == 3);
    CHECK(jb.rhs == 3);
    CHECK(jb.equal);
    auto a1 = RootSystem::build("A1");
    auto g = growth_experiment(ToralWeight::parse(a1, "t=1/4"), {5, 7, 11});
    CHECK(to_json(growth_report_from_json(reparse(to_json(g)))) == to_json(g));
    auto sys = RewriteSystem::build(b2, 4);
    PolyGram engine(sys, eval_symbolic(*b2));
    auto rep = engine.report({1, 1}, true);
    CHECK(reparse(to_json(rep)) == to_json(rep));
    CHECK(reparse(to_json(realize_report("B3", "long-roots", parse_field("D=4,g=1")))) ==
          to_json(realize_report("B3", "long-roots", parse_field("D=4,g=1"))));
  }

  TEST_CASE("realization reports") {
    for (const char* t : {"B2", "B3"}) {
      CHECK(!realize_report(t, "long-roots", parse_field("D=2,g=gamma")).feasible);
      auto r = realize_report(t, "long-roots", parse_field("D=4,g=1"));
      CHECK(r.feasible);
      CHECK(r.verified);
    }
    for (const char* t : {"B2", "G2"})
      for (auto& row : cartan_witnesses(t)) CHECK(row.verified);
    CHECK_THROWS_AS(parse_field("D=two"), ParseError);
    CHECK_THROWS_AS(parse_field("E=2"), ParseError);
    auto f = parse_field("D=inf,g=3");
    CHECK(f.D == 0);
    CHECK(f.g == 3);
  }
}
