#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qgk/cyclotomic.hpp"
#include "qgk/rootsys.hpp"
#include "qgk/subsys.hpp"

namespace qgk {

// K_mu -> exp(2 pi i t(mu)) q^{c(mu)}, t and c given on simple roots
class ToralWeight {
 public:
  ToralWeight(RootSystemPtr rs, QVec t, QVec c);
  // q^lambda
  static ToralWeight linear(RootSystemPtr rs, const LatticeVector& lambda);
  static ToralWeight trivial(RootSystemPtr rs);
  // "t=1/4,c=-1;t=0,c=0" (one entry per simple root) or "q^{a,b}" / "q^0" / "q^{-2rho}"
  static ToralWeight parse(RootSystemPtr rs, const std::string& literal);
  std::string literal() const;

  const RootSystem& root_system() const { return *rs_; }
  RootSystemPtr root_system_ptr() const { return rs_; }
  const QVec& t() const { return t_; }
  const QVec& c() const { return c_; }

  Rational torsion(const IVec& mu) const;  // in [0,1)
  Rational exponent(const IVec& mu) const;
  Rational torsion(const QVec& mu) const;
  Rational exponent(const QVec& mu) const;

  // Lambda * q^mu, mu in root coordinates
  ToralWeight times_q(const QVec& mu) const;
  // sigma * Lambda for a sign character with values in {0, 1/2}
  ToralWeight times_sign(const QVec& sigma) const;
  // lcm of torsion denominators
  long torsion_conductor() const;
  bool integral_exponents() const;

  bool operator==(const ToralWeight& o) const { return t_ == o.t_ && c_ == o.c_; }
  bool operator<(const ToralWeight& o) const;

 private:
  RootSystemPtr rs_;
  QVec t_, c_;
};

std::pair<Rational, Rational> evaluate(const ToralWeight& w, const IVec& mu);

RootSubsystem phi_lambda(const ToralWeight& w);
bool in_phi_lambda(const ToralWeight& w, int k);

struct ExtendedWeylElement {
  QVec sigma;  // values in {0, 1/2} on simple roots
  Perm w;      // permutation of the root list
  bool operator==(const ExtendedWeylElement&) const = default;
};

ExtendedWeylElement extended_identity(const RootSystem& rs);
// x * y
ExtendedWeylElement compose(const RootSystem& rs, const ExtendedWeylElement& x, const ExtendedWeylElement& y);
ExtendedWeylElement modified_reflection(const ToralWeight& w, int k);
ToralWeight dot_action(const ExtendedWeylElement& x, const ToralWeight& w);

// <rho, alpha^vee> + c(2 alpha)/(alpha, alpha)
long n_alpha(const ToralWeight& w, int k);

struct TPair {
  long m;
  int root;
  bool operator==(const TPair&) const = default;
};
std::vector<TPair> t_set(const ToralWeight& w);
bool verma_irreducible(const ToralWeight& w);
bool is_dominant(const ToralWeight& w);
bool is_antidominant(const ToralWeight& w);

// W_Lambda with the lifted dot action; image[e] = lift(e) . Lambda
struct LinkageData {
  ToralWeight weight;
  RootSubsystem phi;
  std::shared_ptr<const WeylGroup> group;
  std::vector<ToralWeight> image;
};
LinkageData linkage(const ToralWeight& w, std::size_t cap = WeylGroup::kDefaultCap);
std::vector<ToralWeight> orbit(const LinkageData& d);
std::vector<int> stabilizer(const LinkageData& d);
bool is_regular(const LinkageData& d);

struct AntidominantWitness {
  int element;  // index in the group of LinkageData
  int length;
  ToralWeight antidominant;
};
AntidominantWitness minimal_antidominant_witness(const LinkageData& d);

struct SpecializedWeight {
  long ell = 0;
  std::vector<Cyclotomic> values;  // on simple roots
};
SpecializedWeight specialize(const ToralWeight& w, long ell);
bool is_admissible(long ell, const ToralWeight& w);

}  // namespace qgk
