#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgk/gk.hpp"
#include "qgk/hecke.hpp"
#include "qgk/verma.hpp"

namespace qgk {

using Json = nlohmann::ordered_json;

std::string default_data_dir();
Json load_fixture(const std::string& path);

// "n", "2n-3", "16"
int eval_family_formula(const std::string& f, int n);

struct Table2Row {
  std::string type;
  Kappas computed, expected;
  int min_value = 0;
  bool match = false;
  bool operator==(const Table2Row&) const = default;
};
Table2Row table2_row(const std::string& type, const Json& fixture);

struct Table1Row {
  std::string type;
  std::vector<std::string> computed, expected;
  bool match = false;
  bool operator==(const Table1Row&) const = default;
};
Table1Row table1_row(const std::string& type, const Json& fixture);

struct AFunctionSummary {
  std::string type;
  std::size_t group_order = 0;
  std::map<int, std::size_t> histogram;
  int cell_size = 0;        // |C|, elements with a unique reduced expression
  int w0_cell_value = 0;    // expected l(w0) - <rho, theta_s>
  bool checks = false;      // every property listed below holds
  std::vector<std::string> failures;
  bool operator==(const AFunctionSummary&) const = default;
};
AFunctionSummary afunction_summary(const std::string& type, bool allow_large = false);

struct SubsystemReport {
  std::string type, weight;
  std::vector<IVec> positive_roots;
  std::string label;
  std::size_t group_order = 0;
  bool dominant = false, antidominant = false, regular = false;
  std::vector<std::pair<long, IVec>> t_pairs;
  bool operator==(const SubsystemReport&) const = default;
};
SubsystemReport subsystem_report(const ToralWeight& w, std::size_t cap = WeylGroup::kDefaultCap);

struct RealizeReport {
  std::string type, target, label;
  FieldSpec field;
  bool feasible = false;
  std::string witness;
  bool verified = false;  // Phi_Lambda of the witness equals the target
};
// target: long-roots | short-roots
RealizeReport realize_report(const std::string& type, const std::string& target, const FieldSpec& field);
FieldSpec parse_field(const std::string& s);

struct CartanWitnessRow {
  std::string type, label, witness;
  int node = 0, mark = 0;
  bool verified = false;
};
std::vector<CartanWitnessRow> cartan_witnesses(const std::string& type);

Json to_json(const Kappas& k);
Json to_json(const Table2Row& r);
Json to_json(const Table1Row& r);
Json to_json(const AFunctionSummary& s);
Json to_json(const SubsystemReport& r);
Json to_json(const GkReport& r);
Json to_json(const RealizeReport& r);
Json to_json(const CartanWitnessRow& r);
Json to_json(const JantzenCheck& j);
Json to_json(const BabyVermaReport& b);
Json to_json(const GrowthReport& g);
Json to_json(const CrossCheck& c);
Json to_json(const GramReport<MPoly>& g, const VarNames& names = VarNames());
Json to_json(const std::vector<ShapovalovFactor>& f, const RootSystem& rs, const PolyEval& ev,
             const VarNames& names = VarNames());

Kappas kappas_from_json(const Json& j);
Table2Row table2_row_from_json(const Json& j);
Table1Row table1_row_from_json(const Json& j);
AFunctionSummary afunction_summary_from_json(const Json& j);
SubsystemReport subsystem_report_from_json(const Json& j);
JantzenCheck jantzen_from_json(const Json& j);
GkReport gk_report_from_json(const Json& j);
GrowthReport growth_report_from_json(const Json& j);

}  // namespace qgk
