#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgk/cyclotomic.hpp"

namespace qgk {

constexpr int kMaxVars = 6;
using Exponents = std::array<int, kMaxVars>;

// variable slots
enum Var : int { VQ = 0, VT = 1, VZ1 = 2, VZ2 = 3, VZ3 = 4, VZ4 = 5 };

struct VarNames {
  std::array<std::string, kMaxVars> names{"q", "t", "z1", "z2", "z3", "z4"};
  // exponents of slot 0 are printed divided by this
  int qden = 1;
};

// sparse multivariate Laurent polynomial over cyclotomic numbers;
// terms sorted by decreasing lex order of exponents
class MPoly {
 public:
  using Term = std::pair<Exponents, Cyclotomic>;

  MPoly() = default;
  MPoly(const Cyclotomic& c);
  MPoly(long c) : MPoly(Cyclotomic(c)) {}
  static MPoly monomial(const Cyclotomic& c, const Exponents& e);
  static MPoly var(int v, int power = 1);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return t_.size() == 1; }
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  Cyclotomic constant_term() const;
  int total_degree() const;
  int max_degree(int v) const;
  int min_degree(int v) const;
  bool involves(int v) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly scale(const Cyclotomic& c) const;
  MPoly shift(const Exponents& e) const;
  MPoly pow(unsigned e) const;
  // replace variable v by a constant value
  MPoly substitute(int v, const Cyclotomic& value) const;
  // replace x_v by x_v^k
  MPoly dilate(int v, int k) const;

  std::string str(const VarNames& names = VarNames()) const;

 private:
  void canonicalize();
  std::vector<Term> t_;
};

// exact quotient a/b if b divides a in the Laurent ring
std::optional<MPoly> try_divide(const MPoly& a, const MPoly& b);
MPoly divide_exact(const MPoly& a, const MPoly& b);

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(const MPoly& n) : num_(n), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}
  RatFunc(const Cyclotomic& c) : num_(c), den_(1) {}
  RatFunc(const MPoly& n, const MPoly& d);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  RatFunc substitute(int v, const Cyclotomic& value) const;
  std::string str(const VarNames& names = VarNames()) const;

 private:
  void simplify();
  MPoly num_, den_;
};

}  // namespace qgk
