#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgk/cyclotomic.hpp"

namespace qgk {

struct Component {
  char letter = 'A';
  int rank = 1;
  bool operator==(const Component&) const = default;
};
using TypeLabel = std::vector<Component>;

TypeLabel parse_type(const std::string& s);
std::string type_string(const TypeLabel& t);

using IVec = std::vector<int>;
using QVec = std::vector<Rational>;
using Perm = std::vector<int>;

enum class Basis { Root, Fundamental };

struct LatticeVector {
  Basis basis = Basis::Root;
  QVec c;
};

class RootSystem {
 public:
  static std::shared_ptr<const RootSystem> build(const TypeLabel& type);
  static std::shared_ptr<const RootSystem> build(const std::string& type) { return build(parse_type(type)); }
  // symmetric integral Gram matrix of a simple system
  static std::shared_ptr<const RootSystem> from_gram(const std::vector<std::vector<long>>& gram,
                                                     const TypeLabel& type);

  const TypeLabel& type() const { return type_; }
  bool irreducible() const { return type_.size() == 1; }
  int rank() const { return n_; }
  long form(int i, int j) const { return gram_[i][j]; }
  int cartan(int i, int j) const { return static_cast<int>(2 * gram_[i][j] / gram_[i][i]); }
  int d(int i) const { return static_cast<int>(gram_[i][i] / 2); }
  const std::vector<std::vector<long>>& gram() const { return gram_; }

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return npos_; }
  const IVec& root(int k) const { return roots_[k]; }
  long norm(int k) const { return norms_[k]; }
  bool is_positive(int k) const { return k < npos_; }
  int negate(int k) const { return k < npos_ ? k + npos_ : k - npos_; }
  int height(int k) const;
  int index_of(const IVec& v) const;
  bool is_long(int k) const;
  int component_of(int k) const { return comp_of_root_[k]; }
  int component_of_simple(int i) const { return comp_of_simple_[i]; }
  std::vector<int> component_simples(int c) const;

  long inner(const IVec& a, const IVec& b) const;
  Rational inner(const QVec& a, const QVec& b) const;
  // 2(lambda, alpha)/(alpha, alpha) for a root index
  Rational pairing(const LatticeVector& lambda, int k) const;
  Rational pairing(const QVec& lambda_root, const IVec& alpha) const;
  QVec to_root(const LatticeVector& v) const;
  QVec to_fundamental(const LatticeVector& v) const;
  LatticeVector fundamental_weight(int i) const;
  LatticeVector rho() const;

  // s_beta(alpha) as an index
  int reflect(int beta, int alpha) const { return refl_[beta][alpha]; }
  // alpha + beta as an index, -1 if not a root
  int sum(int a, int b) const { return sum_[a][b]; }
  const Perm& simple_reflection(int i) const { return simple_perm_[i]; }
  Perm reflection_perm(int beta) const { return refl_[beta]; }

  // highest root of a component (index), highest short root
  int highest_root(int comp = 0) const;
  int highest_short_root(int comp = 0) const;
  IVec marks(int comp = 0) const;

 private:
  RootSystem() = default;
  void init();
  TypeLabel type_;
  int n_ = 0, npos_ = 0;
  std::vector<std::vector<long>> gram_;
  std::vector<std::vector<Rational>> gram_inv_;
  std::vector<IVec> roots_;
  std::vector<long> norms_;
  std::map<IVec, int> index_;
  std::vector<std::vector<int>> refl_, sum_;
  std::vector<Perm> simple_perm_;
  std::vector<int> comp_of_root_, comp_of_simple_;
  std::vector<long> comp_max_norm_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// reflection group generated by reflections in a simple system of a subsystem
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1200;
  WeylGroup(RootSystemPtr rs, std::vector<int> simple_roots, std::size_t cap = kDefaultCap);
  explicit WeylGroup(RootSystemPtr rs, std::size_t cap = kDefaultCap);

  const RootSystem& root_system() const { return *rs_; }
  RootSystemPtr root_system_ptr() const { return rs_; }
  const std::vector<int>& generators() const { return gens_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  std::size_t size() const { return perms_.size(); }
  int identity() const { return 0; }
  int longest() const { return longest_; }
  const Perm& perm(int e) const { return perms_[e]; }
  int length(int e) const { return length_[e]; }
  const std::vector<int>& word(int e) const { return words_[e]; }
  int right(int e, int s) const { return right_[e][s]; }
  int left(int s, int e) const { return left_[e][s]; }
  int inverse(int e) const { return inverse_[e]; }
  int multiply(int a, int b) const;
  int find(const Perm& p) const;
  int coxeter_m(int s, int t) const;
  // number of positive subsystem roots sent negative
  int inversion_count(int e) const;
  // root index image of the k-th root
  int apply(int e, int k) const { return perms_[e][k]; }
  // action on root-coordinate vectors
  QVec apply(int e, const QVec& v) const;

 private:
  void enumerate(std::size_t cap);
  IVec key(const Perm& p) const;
  RootSystemPtr rs_;
  std::vector<int> gens_;
  std::vector<Perm> perms_;
  std::vector<int> length_;
  std::vector<std::vector<int>> words_, right_, left_;
  std::vector<int> inverse_;
  std::map<IVec, int> lookup_;
  std::vector<int> positive_;
  int longest_ = 0;
};

Perm compose(const Perm& a, const Perm& b);  // a after b

std::vector<int> weyl_orbit(const RootSystem& rs, int root);

// multisets of positive roots summing to nu (root coordinates)
std::uint64_t kostant_partition(const RootSystem& rs, const IVec& nu);

class KostantTable {
 public:
  KostantTable(const RootSystem& rs, const IVec& bound);
  std::uint64_t operator()(const IVec& nu) const;

 private:
  IVec bound_;
  std::vector<std::uint64_t> table_;
};

// lambda in fundamental coordinates -> multiplicities keyed by fundamental coordinates
std::map<IVec, long> freudenthal_multiplicities(const RootSystem& rs, const IVec& lambda);

struct CoxeterNumbers {
  int h = 0, h_dual = 0;
};
CoxeterNumbers coxeter_numbers(const RootSystem& rs);

}  // namespace qgk
