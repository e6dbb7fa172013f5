#include "qgk/report.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#ifndef QGK_DATA_DIR
#define QGK_DATA_DIR "data"
#endif

namespace qgk {

std::string default_data_dir() {
  if (const char* env = std::getenv("QGK_DATA_DIR")) return env;
  return QGK_DATA_DIR;
}

Json load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InsufficientData, "cannot open fixture " + path);
  return Json::parse(in);
}

int eval_family_formula(const std::string& f, int n) {
  auto pos = f.find('n');
  if (pos == std::string::npos) return std::stoi(f);
  int a = pos == 0 ? 1 : std::stoi(f.substr(0, pos));
  int b = pos + 1 < f.size() ? std::stoi(f.substr(pos + 1)) : 0;
  return a * n + b;
}

Table2Row table2_row(const std::string& type, const Json& fixture) {
  TypeLabel t = parse_type(type);
  if (t.size() != 1) throw Error(ErrorKind::Reducible, "Table 2 rows need an irreducible type");
  auto rs = RootSystem::build(t);
  Table2Row row;
  row.type = type_string(t);
  row.computed = kappas(rs);
  const Json& fam = fixture.at("families");
  std::string key(1, t[0].letter);
  if (!fam.contains(key)) key += std::to_string(t[0].rank);
  if (!fam.contains(key)) throw Error(ErrorKind::InsufficientData, "no fixture row for " + row.type);
  const Json& e = fam.at(key);
  int n = t[0].rank;
  row.expected = {eval_family_formula(e.at("k0"), n), eval_family_formula(e.at("k1"), n),
                  eval_family_formula(e.at("k2"), n)};
  row.min_value = std::min(row.computed.k0, row.computed.k1);
  row.match = row.computed == row.expected;
  return row;
}

Table1Row table1_row(const std::string& type, const Json& fixture) {
  auto rs = RootSystem::build(type);
  Table1Row row;
  row.type = type_string(rs->type());
  const Json& rows = fixture.at("rows");
  if (!rows.contains(row.type)) throw Error(ErrorKind::InsufficientData, "no fixture row for " + row.type);
  std::set<std::string> exp, got;
  for (const char* col : {"rank_n_minus_1", "rank_n"})
    for (auto& l : rows.at(row.type).at(col)) exp.insert(normalize_label(l.get<std::string>()));
  for (auto& s : maximal_subsystems_enumerated(rs)) got.insert(s.label());
  row.expected.assign(exp.begin(), exp.end());
  row.computed.assign(got.begin(), got.end());
  row.match = row.expected == row.computed;
  return row;
}

AFunctionSummary afunction_summary(const std::string& type, bool allow_large) {
  auto W = CoxeterSystem::from_type(type);
  auto rs = RootSystem::build(type);
  KLBasis kl(W);
  auto a = a_function(kl, allow_large);
  auto cell = unique_reduced_expression_cell(W);
  AFunctionSummary s;
  s.type = type_string(rs->type());
  s.group_order = W.size();
  for (int v : a) ++s.histogram[v];
  s.cell_size = static_cast<int>(cell.size());
  const int N = rs->num_positive();
  const int w0 = W.longest();
  s.w0_cell_value = N - kappas(rs).k2;
  auto fail = [&](const std::string& m) { s.failures.push_back(m); };
  if (a[0] != 0) fail("a(e) != 0");
  if (a[w0] != N) fail("a(w0) != |Phi+|");
  std::set<int> in_cell(cell.begin(), cell.end());
  for (std::size_t w = 0; w < a.size(); ++w) {
    int wi = static_cast<int>(w);
    if (a[w] != a[W.inverse(wi)]) fail("a(w) != a(w^-1) at " + W.word_string(wi));
    if (in_cell.count(wi) && a[w] != 1) fail("a != 1 on the cell at " + W.word_string(wi));
    if (wi != 0 && wi != w0 && (a[w] < 1 || a[w] > s.w0_cell_value)) fail("a out of range at " + W.word_string(wi));
  }
  for (int c : cell) {
    int x = W.multiply(w0, c);
    if (a[x] != s.w0_cell_value) fail("a(w0 c) mismatch at " + W.word_string(x));
  }
  s.checks = s.failures.empty();
  return s;
}

SubsystemReport subsystem_report(const ToralWeight& w, std::size_t cap) {
  const RootSystem& rs = w.root_system();
  SubsystemReport r;
  r.type = type_string(rs.type());
  r.weight = w.literal();
  RootSubsystem phi = phi_lambda(w);
  for (int k : phi.positive()) r.positive_roots.push_back(rs.root(k));
  r.label = phi.label();
  LinkageData d = linkage(w, cap);
  r.group_order = d.group->size();
  r.dominant = is_dominant(w);
  r.antidominant = is_antidominant(w);
  r.regular = is_regular(d);
  for (auto& tp : t_set(w)) r.t_pairs.push_back({tp.m, rs.root(tp.root)});
  return r;
}

FieldSpec parse_field(const std::string& s) {
  FieldSpec f;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find(',', i);
    if (j == std::string::npos) j = s.size();
    std::string item = s.substr(i, j - i);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", i);
    std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    long val;
    if (v == "inf" || v == "infinity") val = 0;
    else if (v == "gamma") val = -1;
    else {
      try {
        std::size_t used = 0;
        val = std::stol(v, &used);
        if (used != v.size() || val < 1) throw ParseError("bad value", i + eq + 1);
      } catch (const std::logic_error&) {
        throw ParseError("bad value", i + eq + 1);
      }
    }
    if (k == "D") f.D = val;
    else if (k == "g") f.g = val;
    else throw ParseError("unknown key '" + k + "'", i);
    i = j + 1;
  }
  return f;
}

RealizeReport realize_report(const std::string& type, const std::string& target, const FieldSpec& field) {
  auto rs = RootSystem::build(type);
  RealizeReport r;
  r.type = type_string(rs->type());
  r.target = target;
  r.field = field;
  if (r.field.g < 0) r.field.g = gamma_invariant(*rs);
  if (r.field.D < 0) r.field.D = gamma_invariant(*rs);
  std::vector<int> members;
  for (int k = 0; k < rs->num_roots(); ++k) {
    bool lng = rs->is_long(k);
    if (target == "long-roots" ? lng : target == "short-roots" ? !lng : false) members.push_back(k);
  }
  if (target != "long-roots" && target != "short-roots")
    throw Error(ErrorKind::Domain, "target must be long-roots or short-roots");
  RootSubsystem psi(rs, members);
  r.label = psi.label();
  auto w = realize_subsystem(psi, r.field);
  r.feasible = w.has_value();
  if (w) {
    r.witness = w->literal();
    r.verified = phi_lambda(*w) == psi;
  }
  return r;
}

std::vector<CartanWitnessRow> cartan_witnesses(const std::string& type) {
  auto rs = RootSystem::build(type);
  std::vector<CartanWitnessRow> out;
  for (auto& cls : borel_de_siebenthal(rs)) {
    if (!cls.extended) continue;
    CartanWitnessRow row;
    row.type = type_string(rs->type());
    row.label = cls.sub.label();
    row.node = cls.node;
    row.mark = cls.mark;
    ToralWeight w = cartan_closed_witness(cls);
    row.witness = w.literal();
    row.verified = phi_lambda(w) == cls.sub;
    out.push_back(row);
  }
  return out;
}

Json to_json(const Kappas& k) { return Json{{"k0", k.k0}, {"k1", k.k1}, {"k2", k.k2}}; }

Json to_json(const Table2Row& r) {
  return Json{{"type", r.type}, {"computed", to_json(r.computed)}, {"expected", to_json(r.expected)},
              {"min", r.min_value}, {"match", r.match}};
}

Json to_json(const Table1Row& r) {
  return Json{{"type", r.type}, {"computed", r.computed}, {"expected", r.expected}, {"match", r.match}};
}

Json to_json(const AFunctionSummary& s) {
  Json h = Json::object();
  for (auto& [v, c] : s.histogram) h[std::to_string(v)] = c;
  return Json{{"type", s.type},           {"group_order", s.group_order},
              {"histogram", h},           {"cell_size", s.cell_size},
              {"w0_cell_value", s.w0_cell_value}, {"checks", s.checks},
              {"failures", s.failures}};
}

Json to_json(const SubsystemReport& r) {
  Json t = Json::array();
  for (auto& [m, a] : r.t_pairs) t.push_back(Json{{"m", m}, {"root", a}});
  return Json{{"type", r.type},
              {"weight", r.weight},
              {"positive_roots", r.positive_roots},
              {"label", r.label},
              {"group_order", r.group_order},
              {"dominant", r.dominant},
              {"antidominant", r.antidominant},
              {"regular", r.regular},
              {"t_set", t}};
}

Json to_json(const GkReport& r) {
  return Json{{"type", type_string(r.weight.root_system().type())},
              {"weight", r.weight.literal()},
              {"phi_label", r.phi_label},
              {"group_order", r.group_order},
              {"witness_word", r.witness_word},
              {"witness_length", r.witness_length},
              {"a_value", r.a_value},
              {"num_positive", r.num_positive},
              {"d", r.d}};
}

Json to_json(const RealizeReport& r) {
  Json j{{"type", r.type},
         {"target", r.target},
         {"label", r.label},
         {"field", Json{{"D", r.field.D}, {"g", r.field.g}}},
         {"result", r.feasible ? "feasible" : "infeasible"}};
  if (r.feasible) {
    j["witness"] = r.witness;
    j["verified"] = r.verified;
  }
  return j;
}

Json to_json(const CartanWitnessRow& r) {
  return Json{{"type", r.type}, {"label", r.label}, {"node", r.node + 1},
              {"mark", r.mark}, {"witness", r.witness}, {"verified", r.verified}};
}

Json to_json(const JantzenCheck& j) { return Json{{"lhs", j.lhs}, {"rhs", j.rhs}, {"equal", j.equal}}; }

Json to_json(const BabyVermaReport& b) {
  Json vals = Json::array();
  for (auto& v : b.lambda.values) vals.push_back(v.str());
  return Json{{"ell", b.ell},
              {"lambda", vals},
              {"per_degree", b.per_degree},
              {"truncation", b.truncation},
              {"total", b.total.get_str()}};
}

Json to_json(const GrowthReport& g) {
  Json rows = Json::array();
  for (auto& r : g.rows) {
    std::vector<std::string> pd;
    for (auto& d : r.sample.per_degree) pd.push_back(d.get_str());
    rows.push_back(Json{{"ell", r.sample.ell}, {"total_dim", r.sample.total.get_str()}, {"per_degree", pd},
                        {"J", r.agreement}});
  }
  Json est{{"exponent", g.estimate.exponent}, {"exact", g.estimate.exact}};
  est["degree"] = g.estimate.degree ? Json(*g.estimate.degree) : Json(nullptr);
  return Json{{"rows", rows}, {"estimate", est}, {"gk", g.gk}, {"agreement_ok", g.agreement_ok}};
}

Json to_json(const CrossCheck& c) {
  return Json{{"nu", c.nu}, {"unit", c.unit}, {"symbolic_checked", c.symbolic_checked},
              {"ratio_num", c.ratio.num().str()}, {"ratio_den", c.ratio.den().str()}};
}

Json to_json(const GramReport<MPoly>& g, const VarNames& names) {
  std::vector<std::string> basis;
  for (auto& w : g.basis) basis.push_back(word_string(w));
  Json m = Json::array();
  for (std::size_t i = 0; i < g.gram.rows; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.gram.cols; ++j) row.push_back(g.gram(i, j).str(names));
    m.push_back(row);
  }
  Json j{{"nu", g.nu}, {"basis", basis}, {"gram", m}, {"rank", g.rank}};
  if (g.det) j["det"] = g.det->str(names);
  return j;
}

Json to_json(const std::vector<ShapovalovFactor>& f, const RootSystem& rs, const PolyEval& ev, const VarNames& names) {
  Json out = Json::array();
  for (auto& x : f) {
    auto [n, d] = shapovalov_factor_value(rs, x, ev);
    out.push_back(Json{{"root", rs.root(x.root)},
                       {"m", x.m},
                       {"exponent", x.exponent},
                       {"factor", "(" + n.str(names) + ")/(" + d.str(names) + ")"}});
  }
  return out;
}

Kappas kappas_from_json(const Json& j) { return {j.at("k0"), j.at("k1"), j.at("k2")}; }

Table2Row table2_row_from_json(const Json& j) {
  Table2Row r;
  r.type = j.at("type");
  r.computed = kappas_from_json(j.at("computed"));
  r.expected = kappas_from_json(j.at("expected"));
  r.min_value = j.at("min");
  r.match = j.at("match");
  return r;
}

Table1Row table1_row_from_json(const Json& j) {
  Table1Row r;
  r.type = j.at("type");
  r.computed = j.at("computed").get<std::vector<std::string>>();
  r.expected = j.at("expected").get<std::vector<std::string>>();
  r.match = j.at("match");
  return r;
}

AFunctionSummary afunction_summary_from_json(const Json& j) {
  AFunctionSummary s;
  s.type = j.at("type");
  s.group_order = j.at("group_order");
  for (auto& [k, v] : j.at("histogram").items()) s.histogram[std::stoi(k)] = v.get<std::size_t>();
  s.cell_size = j.at("cell_size");
  s.w0_cell_value = j.at("w0_cell_value");
  s.checks = j.at("checks");
  s.failures = j.at("failures").get<std::vector<std::string>>();
  return s;
}

SubsystemReport subsystem_report_from_json(const Json& j) {
  SubsystemReport r;
  r.type = j.at("type");
  r.weight = j.at("weight");
  r.positive_roots = j.at("positive_roots").get<std::vector<IVec>>();
  r.label = j.at("label");
  r.group_order = j.at("group_order");
  r.dominant = j.at("dominant");
  r.antidominant = j.at("antidominant");
  r.regular = j.at("regular");
  for (auto& t : j.at("t_set")) r.t_pairs.push_back({t.at("m").get<long>(), t.at("root").get<IVec>()});
  return r;
}

JantzenCheck jantzen_from_json(const Json& j) { return {j.at("lhs"), j.at("rhs"), j.at("equal")}; }

GkReport gk_report_from_json(const Json& j) {
  auto rs = RootSystem::build(j.at("type").get<std::string>());
  return GkReport{ToralWeight::parse(rs, j.at("weight").get<std::string>()),
                  j.at("phi_label"),
                  j.at("group_order"),
                  j.at("witness_word"),
                  j.at("witness_length"),
                  j.at("a_value"),
                  j.at("num_positive"),
                  j.at("d")};
}

GrowthReport growth_report_from_json(const Json& j) {
  GrowthReport g;
  for (auto& r : j.at("rows")) {
    GrowthRow row;
    row.sample.ell = r.at("ell");
    row.sample.total = Integer(r.at("total_dim").get<std::string>());
    for (auto& d : r.at("per_degree")) row.sample.per_degree.push_back(Integer(d.get<std::string>()));
    row.agreement = r.at("J");
    g.rows.push_back(row);
  }
  const Json& e = j.at("estimate");
  g.estimate.exponent = e.at("exponent");
  g.estimate.exact = e.at("exact");
  if (!e.at("degree").is_null()) g.estimate.degree = e.at("degree").get<int>();
  g.gk = j.at("gk");
  g.agreement_ok = j.at("agreement_ok");
  return g;
}

}  // namespace qgk
