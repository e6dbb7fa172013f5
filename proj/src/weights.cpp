#include "qgk/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "qgk/error.hpp"

namespace qgk {

ToralWeight::ToralWeight(RootSystemPtr rs, QVec t, QVec c) : rs_(std::move(rs)), t_(std::move(t)), c_(std::move(c)) {
  std::size_t n = static_cast<std::size_t>(rs_->rank());
  if (t_.size() != n || c_.size() != n) throw Error(ErrorKind::Domain, "weight data has wrong length");
  for (auto& x : t_) {
    x.canonicalize();
    x = mod1(x);
  }
  for (auto& x : c_) x.canonicalize();
}

ToralWeight ToralWeight::linear(RootSystemPtr rs, const LatticeVector& lambda) {
  QVec f = rs->to_fundamental(lambda);
  int n = rs->rank();
  QVec c(n);
  for (int i = 0; i < n; ++i) c[i] = f[i] * rs->d(i);
  return ToralWeight(rs, QVec(n, Rational(0)), c);
}

ToralWeight ToralWeight::trivial(RootSystemPtr rs) {
  int n = rs->rank();
  return ToralWeight(rs, QVec(n, Rational(0)), QVec(n, Rational(0)));
}

namespace {

std::string trim(const std::string& s, std::size_t& offset) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  offset += a;
  return s.substr(a, b - a);
}

Rational parse_at(const std::string& s, std::size_t pos) {
  try {
    return parse_rational(s);
  } catch (const ParseError& e) {
    throw ParseError(std::string("bad rational '") + s + "'", pos + e.position());
  }
}

std::vector<std::pair<std::string, std::size_t>> split(const std::string& s, char sep, std::size_t base) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      std::size_t off = base + start;
      std::string piece = trim(s.substr(start, i - start), off);
      out.push_back({piece, off});
      start = i + 1;
    }
  return out;
}

ToralWeight parse_q(const RootSystemPtr& rs, const std::string& body, std::size_t base) {
  int n = rs->rank();
  std::string b = body;
  std::size_t off = base;
  if (!b.empty() && b.front() == '{') {
    if (b.back() != '}') throw ParseError("unbalanced brace", base + b.size());
    b = b.substr(1, b.size() - 2);
    ++off;
  }
  b = trim(b, off);
  if (b.empty()) throw ParseError("empty exponent", off);
  LatticeVector lam;
  lam.basis = Basis::Fundamental;
  auto r = b.find("rho");
  if (r != std::string::npos) {
    if (r + 3 != b.size()) throw ParseError("trailing text after rho", off + r + 3);
    std::string k = b.substr(0, r);
    Rational mult = 1;
    if (k == "-") mult = -1;
    else if (!k.empty() && k != "+") mult = parse_at(k, off);
    lam.c.assign(n, mult);
    return ToralWeight::linear(rs, lam);
  }
  auto parts = split(b, ',', off);
  if (parts.size() == 1 && parts[0].first == "0") {
    lam.c.assign(n, Rational(0));
    return ToralWeight::linear(rs, lam);
  }
  if (static_cast<int>(parts.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " fundamental coordinates", off);
  for (auto& [p, o] : parts) lam.c.push_back(parse_at(p, o));
  return ToralWeight::linear(rs, lam);
}

}  // namespace

ToralWeight ToralWeight::parse(RootSystemPtr rs, const std::string& literal) {
  std::size_t off = 0;
  std::string s = trim(literal, off);
  if (s.empty()) throw ParseError("empty weight literal", 0);
  if (s.rfind("q^", 0) == 0) return parse_q(rs, s.substr(2), off + 2);
  int n = rs->rank();
  QVec t(n, Rational(0)), c(n, Rational(0));
  auto entries = split(s, ';', off);
  if (static_cast<int>(entries.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " entries separated by ';'", off + s.size());
  for (int i = 0; i < n; ++i) {
    auto& [e, eo] = entries[i];
    if (e.empty()) throw ParseError("empty entry", eo);
    bool any = false;
    std::set<char> seen;
    for (auto& [kv, ko] : split(e, ',', eo)) {
      if (kv.size() < 3 || kv[1] != '=' || (kv[0] != 't' && kv[0] != 'c'))
        throw ParseError("expected t=<rational> or c=<rational>", ko);
      if (!seen.insert(kv[0]).second) throw ParseError("repeated key", ko);
      Rational v = parse_at(kv.substr(2), ko + 2);
      (kv[0] == 't' ? t : c)[i] = v;
      any = true;
    }
    if (!any) throw ParseError("empty entry", eo);
  }
  return ToralWeight(rs, t, c);
}

std::string ToralWeight::literal() const {
  std::string s;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i) s += ";";
    s += "t=" + to_string(t_[i]) + ",c=" + to_string(c_[i]);
  }
  return s;
}

Rational ToralWeight::torsion(const IVec& mu) const {
  Rational s = 0;
  for (std::size_t i = 0; i < t_.size(); ++i)
    if (mu[i]) s += t_[i] * mu[i];
  return mod1(s);
}

Rational ToralWeight::exponent(const IVec& mu) const {
  Rational s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (mu[i]) s += c_[i] * mu[i];
  return s;
}

Rational ToralWeight::torsion(const QVec& mu) const {
  Rational s = 0;
  for (std::size_t i = 0; i < t_.size(); ++i) s += t_[i] * mu[i];
  return mod1(s);
}

Rational ToralWeight::exponent(const QVec& mu) const {
  Rational s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) s += c_[i] * mu[i];
  return s;
}

ToralWeight ToralWeight::times_q(const QVec& mu) const {
  QVec c = c_;
  int n = rs_->rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i] += mu[j] * rs_->form(j, i);
  return ToralWeight(rs_, t_, c);
}

ToralWeight ToralWeight::times_sign(const QVec& sigma) const {
  QVec t = t_;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] += sigma[i];
  return ToralWeight(rs_, t, c_);
}

long ToralWeight::torsion_conductor() const {
  long n = 1;
  for (auto& x : t_) n = std::lcm(n, x.get_den().get_si());
  return n;
}

bool ToralWeight::integral_exponents() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.get_den() == 1; });
}

bool ToralWeight::operator<(const ToralWeight& o) const {
  if (t_ != o.t_) return std::lexicographical_compare(t_.begin(), t_.end(), o.t_.begin(), o.t_.end());
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

std::pair<Rational, Rational> evaluate(const ToralWeight& w, const IVec& mu) {
  return {w.torsion(mu), w.exponent(mu)};
}

bool in_phi_lambda(const ToralWeight& w, int k) {
  const RootSystem& rs = w.root_system();
  const IVec& a = rs.root(k);
  if (mod1(2 * w.torsion(a)) != 0) return false;
  Rational x = 2 * w.exponent(a) / rs.norm(k);
  return x.get_den() == 1;
}

RootSubsystem phi_lambda(const ToralWeight& w) {
  std::vector<int> m;
  for (int k = 0; k < w.root_system().num_roots(); ++k)
    if (in_phi_lambda(w, k)) m.push_back(k);
  return RootSubsystem(w.root_system_ptr(), m);
}

ExtendedWeylElement extended_identity(const RootSystem& rs) {
  Perm id(rs.num_roots());
  std::iota(id.begin(), id.end(), 0);
  return {QVec(rs.rank(), Rational(0)), id};
}

namespace {

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[p[k]] = static_cast<int>(k);
  return r;
}

long rho_inner(const RootSystem& rs, const IVec& b) {
  long s = 0;
  for (int i = 0; i < rs.rank(); ++i) s += static_cast<long>(b[i]) * rs.d(i);
  return s;
}

}  // namespace

ExtendedWeylElement compose(const RootSystem& rs, const ExtendedWeylElement& x, const ExtendedWeylElement& y) {
  Perm xinv = invert(x.w);
  int n = rs.rank();
  QVec s(n);
  for (int i = 0; i < n; ++i) {
    const IVec& b = rs.root(xinv[i]);
    Rational v = x.sigma[i];
    for (int j = 0; j < n; ++j) v += y.sigma[j] * b[j];
    s[i] = mod1(v);
  }
  return {s, qgk::compose(x.w, y.w)};
}

ExtendedWeylElement modified_reflection(const ToralWeight& w, int k) {
  const RootSystem& rs = w.root_system();
  if (!in_phi_lambda(w, k)) throw Error(ErrorKind::NotIntegralRoot, "root is not in the integral subsystem");
  int n = rs.rank();
  QVec sigma(n, Rational(0));
  if (w.torsion(rs.root(k)) == Rational(1, 2)) {
    for (int i = 0; i < n; ++i) {
      long p = 2 * rs.inner(rs.root(i), rs.root(k)) / rs.norm(k);
      sigma[i] = mod1(rat(p, 2));
    }
  }
  return {sigma, rs.reflection_perm(k)};
}

ToralWeight dot_action(const ExtendedWeylElement& x, const ToralWeight& w) {
  const RootSystem& rs = w.root_system();
  Perm inv = invert(x.w);
  int n = rs.rank();
  QVec t(n), c(n);
  for (int i = 0; i < n; ++i) {
    const IVec& b = rs.root(inv[i]);
    t[i] = w.torsion(b) + x.sigma[i];
    c[i] = w.exponent(b) + (rho_inner(rs, b) - rs.d(i));
  }
  return ToralWeight(w.root_system_ptr(), t, c);
}

long n_alpha(const ToralWeight& w, int k) {
  if (!in_phi_lambda(w, k)) throw Error(ErrorKind::NotIntegralRoot, "root is not in the integral subsystem");
  const RootSystem& rs = w.root_system();
  const IVec& a = rs.root(k);
  Rational v = rat(2 * rho_inner(rs, a), rs.norm(k)) + 2 * w.exponent(a) / rs.norm(k);
  v.canonicalize();
  return v.get_num().get_si();
}

std::vector<TPair> t_set(const ToralWeight& w) {
  std::vector<TPair> out;
  const RootSystem& rs = w.root_system();
  for (int k = 0; k < rs.num_positive(); ++k) {
    if (!in_phi_lambda(w, k)) continue;
    long m = n_alpha(w, k);
    if (m > 0) out.push_back({m, k});
  }
  return out;
}

bool verma_irreducible(const ToralWeight& w) { return t_set(w).empty(); }

bool is_dominant(const ToralWeight& w) {
  const RootSystem& rs = w.root_system();
  for (int k = 0; k < rs.num_positive(); ++k)
    if (in_phi_lambda(w, k) && n_alpha(w, k) < 0) return false;
  return true;
}

bool is_antidominant(const ToralWeight& w) {
  const RootSystem& rs = w.root_system();
  for (int k = 0; k < rs.num_positive(); ++k)
    if (in_phi_lambda(w, k) && n_alpha(w, k) > 0) return false;
  return true;
}

LinkageData linkage(const ToralWeight& w, std::size_t cap) {
  RootSubsystem phi = phi_lambda(w);
  auto group = std::make_shared<const WeylGroup>(w.root_system_ptr(), phi.simple(), cap);
  std::vector<ExtendedWeylElement> gens;
  for (int g : group->generators()) gens.push_back(modified_reflection(w, g));
  std::vector<ToralWeight> image;
  image.reserve(group->size());
  image.push_back(w);
  for (std::size_t e = 1; e < group->size(); ++e) {
    int s = group->word(static_cast<int>(e)).front();
    int rest = group->left(s, static_cast<int>(e));
    image.push_back(dot_action(gens[s], image[rest]));
  }
  return {w, phi, group, image};
}

std::vector<ToralWeight> orbit(const LinkageData& d) {
  std::vector<ToralWeight> v = d.image;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> stabilizer(const LinkageData& d) {
  std::vector<int> out;
  for (std::size_t e = 0; e < d.image.size(); ++e)
    if (d.image[e] == d.weight) out.push_back(static_cast<int>(e));
  return out;
}

bool is_regular(const LinkageData& d) { return stabilizer(d).size() == 1; }

AntidominantWitness minimal_antidominant_witness(const LinkageData& d) {
  for (std::size_t x = 0; x < d.image.size(); ++x)
    if (is_antidominant(d.image[x])) {
      int e = static_cast<int>(x);
      return {d.group->inverse(e), d.group->length(e), d.image[x]};
    }
  throw Error(ErrorKind::Domain, "no antidominant element in orbit");
}

SpecializedWeight specialize(const ToralWeight& w, long ell) {
  if (ell < 1) throw Error(ErrorKind::InadmissibleOrder, "order must be positive");
  if (!w.integral_exponents()) throw Error(ErrorKind::NonIntegralExponent, "specialization needs integral q-exponents");
  SpecializedWeight s;
  s.ell = ell;
  for (std::size_t i = 0; i < w.t().size(); ++i)
    s.values.push_back(Cyclotomic::root_of_unity(w.t()[i] + w.c()[i] / ell));
  return s;
}

bool is_admissible(long ell, const ToralWeight& w) {
  if (ell <= 1 || ell % 2 == 0) return false;
  for (auto& c : w.root_system().type())
    if (c.letter == 'G' && ell % 3 == 0) return false;
  return std::gcd(ell, w.torsion_conductor()) == 1;
}

}  // namespace qgk
