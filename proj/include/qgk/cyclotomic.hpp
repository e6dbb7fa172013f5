#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qgk {

using Integer = mpz_class;
using Rational = mpq_class;

// reduced representative in [0,1)
Rational mod1(const Rational& x);
// canonical a/b
Rational rat(long a, long b = 1);
std::string to_string(const Rational& x);
Rational parse_rational(const std::string& s);
long lcm_long(long a, long b);

struct CycloField {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<long> poly;               // Phi_n, monic, low degree first
  std::vector<std::vector<long>> power;  // zeta^k in the power basis, 0 <= k < n
};

const CycloField& cyclo_field(unsigned n);
unsigned euler_phi(unsigned n);

// element of Q(zeta_N), stored in the power basis modulo Phi_N
class Cyclotomic {
 public:
  Cyclotomic() : c_(1) {}
  Cyclotomic(long v) : c_(1, Rational(v)) {}
  Cyclotomic(const Rational& r) : c_(1, r) { c_[0].canonicalize(); }

  static Cyclotomic zeta(unsigned n, long k = 1);
  // e^{2 pi i x}
  static Cyclotomic root_of_unity(const Rational& x);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return n_ == 1; }
  Rational rational() const;

  Cyclotomic lift(unsigned m) const;
  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // polynomial in z with z = zeta_N
  std::string str() const;
  std::size_t hash() const;

 private:
  Cyclotomic(unsigned n, std::vector<Rational> c) : n_(n), c_(std::move(c)) { normalize(); }
  void normalize();
  unsigned n_ = 1;
  std::vector<Rational> c_;
};

}  // namespace qgk
