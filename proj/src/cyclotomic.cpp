#include "qgk/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qgk/error.hpp"

namespace qgk {

Rational mod1(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(q);
  r.canonicalize();
  return r;
}

Rational rat(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational", 0);
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  bool seen_slash = false, digit = false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (s[k] == '/' && !seen_slash && digit) {
      seen_slash = true;
      digit = false;
    } else if (s[k] >= '0' && s[k] <= '9') {
      digit = true;
    } else {
      throw ParseError("bad rational '" + s + "'", k);
    }
  }
  if (!digit) throw ParseError("bad rational '" + s + "'", s.size());
  std::string body = s[0] == '+' ? s.substr(1) : s;
  Rational r;
  if (r.set_str(body, 10) != 0) throw ParseError("bad rational '" + s + "'", 0);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'", 0);
  r.canonicalize();
  return r;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

unsigned euler_phi(unsigned n) {
  unsigned r = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  }
  if (m > 1) r -= r / m;
  return r;
}

namespace {

using IPoly = std::vector<long>;

// exact quotient a / b for monic b
IPoly ipoly_div(IPoly a, const IPoly& b) {
  std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {0};
  IPoly q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    long c = a[k];
    if (c == 0) continue;
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  return q;
}

std::shared_ptr<CycloField> build_field(unsigned n) {
  auto f = std::make_shared<CycloField>();
  f->n = n;
  IPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = ipoly_div(p, cyclo_field(d).poly);
  }
  f->poly = p;
  f->phi = static_cast<unsigned>(p.size() - 1);
  unsigned phi = f->phi;
  f->power.assign(n, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    f->power[k] = cur;
    // multiply by x, reduce
    std::vector<long> nxt(phi, 0);
    long top = cur[phi - 1];
    for (unsigned j = phi - 1; j >= 1; --j) nxt[j] = cur[j - 1];
    if (phi >= 1) nxt[0] = 0;
    if (phi == 1) nxt[0] = 0;
    for (unsigned j = 0; j < phi; ++j) nxt[j] -= top * p[j];
    cur = nxt;
  }
  return f;
}

std::mutex g_field_mutex;
std::map<unsigned, std::shared_ptr<CycloField>> g_fields;

using QPolyV = std::vector<Rational>;

void qtrim(QPolyV& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

bool qzero(const QPolyV& a) { return a.size() == 1 && a[0] == 0; }

void qdivmod(const QPolyV& a, const QPolyV& b, QPolyV& q, QPolyV& r) {
  r = a;
  qtrim(r);
  std::size_t db = b.size() - 1;
  if (r.size() < b.size()) {
    q = {Rational(0)};
    return;
  }
  q.assign(r.size() - db, Rational(0));
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k] == 0) continue;
    Rational c = r[k] / b[db];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  r.resize(db == 0 ? 1 : db);
  qtrim(r);
  qtrim(q);
}

QPolyV qmul(const QPolyV& a, const QPolyV& b) {
  QPolyV c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  qtrim(c);
  return c;
}

QPolyV qsub(const QPolyV& a, const QPolyV& b) {
  QPolyV c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  qtrim(c);
  return c;
}

}  // namespace

const CycloField& cyclo_field(unsigned n) {
  if (n == 0) throw Error(ErrorKind::Domain, "conductor 0");
  {
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_fields.find(n);
    if (it != g_fields.end()) return *it->second;
  }
  auto f = build_field(n);
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto [it, inserted] = g_fields.emplace(n, f);
  return *it->second;
}

Cyclotomic Cyclotomic::zeta(unsigned n, long k) {
  if (n == 0) throw Error(ErrorKind::Domain, "conductor 0");
  long m = ((k % static_cast<long>(n)) + n) % n;
  if (n % 4 == 2) {
    // zeta_{2m} = -zeta_m^{(m+1)/2}, m odd
    unsigned h = n / 2;
    Cyclotomic z = zeta(h, static_cast<long>((h + 1) / 2) * m);
    return (m % 2) ? -z : z;
  }
  const CycloField& f = cyclo_field(n);
  std::vector<Rational> c(f.phi);
  for (unsigned j = 0; j < f.phi; ++j) c[j] = f.power[m][j];
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(const Rational& x) {
  Rational r = mod1(x);
  unsigned long den = r.get_den().get_ui();
  long num = r.get_num().get_si();
  return zeta(static_cast<unsigned>(den), num);
}

void Cyclotomic::normalize() {
  for (std::size_t j = 1; j < c_.size(); ++j) {
    if (c_[j] != 0) return;
  }
  c_.resize(1);
  n_ = 1;
}

bool Cyclotomic::is_zero() const { return n_ == 1 && c_[0] == 0; }
bool Cyclotomic::is_one() const { return n_ == 1 && c_[0] == 1; }

Rational Cyclotomic::rational() const {
  if (n_ != 1) throw Error(ErrorKind::Domain, "cyclotomic is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::lift(unsigned m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw Error(ErrorKind::Domain, "lift to non-multiple conductor");
  if (n_ == 1) {
    const CycloField& f = cyclo_field(m);
    std::vector<Rational> c(f.phi, Rational(0));
    c[0] = c_[0];
    Cyclotomic r;
    r.n_ = m;
    r.c_ = std::move(c);
    return r;
  }
  const CycloField& f = cyclo_field(m);
  unsigned step = m / n_;
  std::vector<Rational> c(f.phi, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const auto& p = f.power[(k * step) % m];
    for (unsigned j = 0; j < f.phi; ++j) {
      if (p[j] != 0) c[j] += c_[k] * p[j];
    }
  }
  Cyclotomic r;
  r.n_ = m;
  r.c_ = std::move(c);
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    c_[0] += o.c_[0];
    if (n_ == 1) return *this;
    normalize();
    return *this;
  }
  if (n_ != o.n_) {
    unsigned m = std::lcm(n_, o.n_);
    *this = lift(m);
    Cyclotomic b = o.lift(m);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += b.c_[j];
  } else {
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.n_ == 1) {
    if (o.c_[0] == 0) return *this = Cyclotomic();
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    if (s == 0) return *this = Cyclotomic();
    for (auto& x : c_) x *= s;
    return *this;
  }
  unsigned m = n_ == o.n_ ? n_ : std::lcm(n_, o.n_);
  const Cyclotomic a = n_ == m ? *this : lift(m);
  const Cyclotomic b = o.n_ == m ? o : o.lift(m);
  const CycloField& f = cyclo_field(m);
  unsigned phi = f.phi;
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> c(phi, Rational(0));
  for (unsigned k = 0; k < phi; ++k) c[k] = prod[k];
  for (unsigned k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& p = f.power[k % m];
    for (unsigned j = 0; j < phi; ++j) {
      if (p[j] != 0) c[j] += prod[k] * p[j];
    }
  }
  n_ = m;
  c_ = std::move(c);
  normalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorKind::ZeroInput, "inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const CycloField& f = cyclo_field(n_);
  QPolyV modp(f.poly.size());
  for (std::size_t j = 0; j < f.poly.size(); ++j) modp[j] = f.poly[j];
  QPolyV a = c_;
  qtrim(a);
  // extended Euclid: track s with s*a = r (mod Phi)
  QPolyV r0 = modp, r1 = a;
  QPolyV s0 = {Rational(0)}, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    QPolyV q, r;
    qdivmod(r0, r1, q, r);
    QPolyV s2 = qsub(s0, qmul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    if (qzero(r1)) throw Error(ErrorKind::Domain, "non-invertible cyclotomic");
  }
  if (qzero(r1)) throw Error(ErrorKind::Domain, "non-invertible cyclotomic");
  Rational inv = Rational(1) / r1[0];
  for (auto& x : s1) x *= inv;
  QPolyV q, rem;
  qdivmod(s1, modp, q, rem);
  std::vector<Rational> c(f.phi, Rational(0));
  for (std::size_t j = 0; j < rem.size() && j < f.phi; ++j) c[j] = rem[j];
  return Cyclotomic(n_, std::move(c));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic r(1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  if (a.n_ == 1 || b.n_ == 1) return false;  // normalized: non-rational differs
  unsigned m = std::lcm(a.n_, b.n_);
  return a.lift(m).c_ == b.lift(m).c_;
}

std::string Cyclotomic::str() const {
  if (n_ == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    Rational c = c_[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (k == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "z" << n_;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = n_;
  for (const auto& x : c_) {
    h = h * 1000003u ^ std::hash<std::string>()(x.get_str());
  }
  return h;
}

}  // namespace qgk
