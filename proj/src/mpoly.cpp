#include "qgk/mpoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qgk/error.hpp"

namespace qgk {

namespace {

bool lex_greater(const Exponents& a, const Exponents& b) { return b < a; }

Exponents zero_exp() {
  Exponents e{};
  e.fill(0);
  return e;
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int k = 0; k < kMaxVars; ++k) r[k] = a[k] + b[k];
  return r;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (int k = 0; k < kMaxVars; ++k) r[k] = a[k] - b[k];
  return r;
}

// a - m*b where m is a monomial (c, e)
std::vector<MPoly::Term> merge_sub(const std::vector<MPoly::Term>& a, const std::vector<MPoly::Term>& b,
                                   const Cyclotomic& c, const Exponents& e) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Exponents eb = add_exp(b[j].first, e);
    if (i == a.size() || lex_greater(eb, a[i].first)) {
      out.emplace_back(eb, -(b[j].second * c));
      ++j;
    } else if (lex_greater(a[i].first, eb)) {
      out.push_back(a[i++]);
    } else {
      Cyclotomic s = a[i].second - b[j].second * c;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly::MPoly(const Cyclotomic& c) {
  if (!c.is_zero()) t_.emplace_back(zero_exp(), c);
}

MPoly MPoly::monomial(const Cyclotomic& c, const Exponents& e) {
  MPoly r;
  if (!c.is_zero()) r.t_.emplace_back(e, c);
  return r;
}

MPoly MPoly::var(int v, int power) {
  Exponents e = zero_exp();
  e[v] = power;
  return monomial(Cyclotomic(1), e);
}

bool MPoly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == zero_exp()); }

Cyclotomic MPoly::constant_term() const {
  for (const auto& [e, c] : t_) {
    if (e == zero_exp()) return c;
  }
  return Cyclotomic();
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : t_) {
    int s = 0;
    for (int k = 0; k < kMaxVars; ++k) s += e[k] < 0 ? -e[k] : e[k];
    d = std::max(d, s);
  }
  return d;
}

int MPoly::max_degree(int v) const {
  if (t_.empty()) return 0;
  int d = t_[0].first[v];
  for (const auto& [e, c] : t_) d = std::max(d, e[v]);
  return d;
}

int MPoly::min_degree(int v) const {
  if (t_.empty()) return 0;
  int d = t_[0].first[v];
  for (const auto& [e, c] : t_) d = std::min(d, e[v]);
  return d;
}

bool MPoly::involves(int v) const {
  for (const auto& [e, c] : t_) {
    if (e[v] != 0) return true;
  }
  return false;
}

void MPoly::canonicalize() {
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return lex_greater(a.first, b.first); });
  std::vector<Term> out;
  out.reserve(t_.size());
  for (auto& t : t_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  t_ = std::move(out);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.t_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size()) {
      out.push_back(std::move(t_[i++]));
    } else if (i == t_.size() || lex_greater(o.t_[j].first, t_[i].first)) {
      out.push_back(o.t_[j++]);
    } else if (lex_greater(t_[i].first, o.t_[j].first)) {
      out.push_back(std::move(t_[i++]));
    } else {
      Cyclotomic s = t_[i].second + o.t_[j].second;
      if (!s.is_zero()) out.emplace_back(t_[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  t_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  if (a.t_.empty() || b.t_.empty()) return r;
  if (a.t_.size() == 1 && b.t_.size() == 1) {
    return MPoly::monomial(a.t_[0].second * b.t_[0].second, add_exp(a.t_[0].first, b.t_[0].first));
  }
  r.t_.reserve(a.t_.size() * b.t_.size());
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) r.t_.emplace_back(add_exp(ea, eb), ca * cb);
  }
  r.canonicalize();
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i) {
    if (a.t_[i].first != b.t_[i].first || a.t_[i].second != b.t_[i].second) return false;
  }
  return true;
}

MPoly MPoly::scale(const Cyclotomic& c) const {
  if (c.is_zero()) return MPoly();
  MPoly r = *this;
  for (auto& t : r.t_) t.second *= c;
  return r;
}

MPoly MPoly::shift(const Exponents& e) const {
  MPoly r = *this;
  for (auto& t : r.t_) t.first = add_exp(t.first, e);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

MPoly MPoly::substitute(int v, const Cyclotomic& value) const {
  std::map<int, Cyclotomic> cache;
  MPoly r;
  for (const auto& [e, c] : t_) {
    int k = e[v];
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, value.pow(k)).first;
    Exponents f = e;
    f[v] = 0;
    r.t_.emplace_back(f, c * it->second);
  }
  r.canonicalize();
  return r;
}

MPoly MPoly::dilate(int v, int k) const {
  MPoly r = *this;
  for (auto& t : r.t_) t.first[v] *= k;
  r.canonicalize();
  return r;
}

namespace {

std::string coeff_str(const Cyclotomic& c, bool& neg) {
  neg = false;
  if (c.is_rational()) {
    Rational r = c.rational();
    if (r < 0) {
      neg = true;
      r = -r;
    }
    return r.get_str();
  }
  return "(" + c.str() + ")";
}

}  // namespace

std::string MPoly::str(const VarNames& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    bool neg;
    std::string cs = coeff_str(c, neg);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (int k = 0; k < kMaxVars; ++k) {
      if (e[k] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << names.names[k];
      Rational ex(e[k], k == 0 ? names.qden : 1);
      ex.canonicalize();
      if (ex != 1) {
        if (ex.get_den() == 1 && ex > 0) mono << "^" << ex.get_str();
        else mono << "^(" << ex.get_str() << ")";
      }
    }
    if (!any) {
      os << cs;
    } else {
      if (cs != "1") os << cs << "*";
      os << mono.str();
    }
  }
  return os.str();
}

std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
  if (a.is_zero()) return MPoly();
  if (b.is_monomial()) {
    const auto& [e, c] = b.terms()[0];
    Exponents ne;
    for (int k = 0; k < kMaxVars; ++k) ne[k] = -e[k];
    return a.shift(ne).scale(c.inverse());
  }
  Exponents ma, mb;
  for (int k = 0; k < kMaxVars; ++k) {
    ma[k] = a.min_degree(k);
    mb[k] = b.min_degree(k);
  }
  Exponents na, nb;
  for (int k = 0; k < kMaxVars; ++k) {
    na[k] = -ma[k];
    nb[k] = -mb[k];
  }
  MPoly A = a.shift(na), B = b.shift(nb);
  const auto& lb = B.terms()[0];
  Cyclotomic inv = lb.second.inverse();
  std::vector<MPoly::Term> r = A.terms();
  std::vector<MPoly::Term> q;
  while (!r.empty()) {
    const auto& lr = r[0];
    Exponents d = sub_exp(lr.first, lb.first);
    for (int k = 0; k < kMaxVars; ++k) {
      if (d[k] < 0) return std::nullopt;
    }
    Cyclotomic c = lr.second * inv;
    q.emplace_back(d, c);
    r = merge_sub(r, B.terms(), c, d);
  }
  MPoly Q;
  for (auto& t : q) Q += MPoly::monomial(t.second, t.first);
  return Q.shift(sub_exp(ma, mb));
}

MPoly divide_exact(const MPoly& a, const MPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw Error(ErrorKind::Domain, "inexact polynomial division");
  return *q;
}

RatFunc::RatFunc(const MPoly& n, const MPoly& d) : num_(n), den_(d) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroInput, "zero denominator");
  simplify();
}

void RatFunc::simplify() {
  if (num_.is_zero()) {
    den_ = MPoly(1);
    return;
  }
  if (den_.is_monomial()) {
    const auto& [e, c] = den_.terms()[0];
    Exponents ne;
    for (int k = 0; k < kMaxVars; ++k) ne[k] = -e[k];
    num_ = num_.shift(ne).scale(c.inverse());
    den_ = MPoly(1);
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::substitute(int v, const Cyclotomic& value) const {
  MPoly d = den_.substitute(v, value);
  if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "substitution hits a pole");
  return RatFunc(num_.substitute(v, value), d);
}

std::string RatFunc::str(const VarNames& names) const {
  if (den_ == MPoly(1)) return num_.str(names);
  return "(" + num_.str(names) + ")/(" + den_.str(names) + ")";
}

}  // namespace qgk
