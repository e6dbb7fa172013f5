#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qgk/laurent.hpp"
#include "qgk/rootsys.hpp"

namespace qgk {

using VPoly = Laurent<long>;

class CoxeterSystem {
 public:
  explicit CoxeterSystem(std::shared_ptr<const WeylGroup> W);
  static CoxeterSystem from_type(const std::string& type, std::size_t cap = WeylGroup::kDefaultCap);

  const WeylGroup& group() const { return *W_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return W_; }
  int size() const { return static_cast<int>(W_->size()); }
  int rank() const { return W_->num_generators(); }
  int length(int w) const { return W_->length(w); }
  const std::vector<int>& word(int w) const { return W_->word(w); }
  int left(int s, int w) const { return W_->left(s, w); }
  int right(int w, int s) const { return W_->right(w, s); }
  int inverse(int w) const { return W_->inverse(w); }
  int longest() const { return W_->longest(); }
  int multiply(int a, int b) const { return W_->multiply(a, b); }
  int m(int s, int t) const { return m_[s][t]; }
  bool left_descent(int s, int w) const { return length(left(s, w)) < length(w); }
  bool right_descent(int w, int s) const { return length(right(w, s)) < length(w); }
  // number of reduced words of w
  long reduced_word_count(int w) const { return nred_[w]; }
  bool bruhat_leq(int y, int w) const;
  std::string word_string(int w) const;

 private:
  std::shared_ptr<const WeylGroup> W_;
  std::vector<std::vector<int>> m_;
  std::vector<long> nred_;
  mutable std::vector<signed char> bruhat_;
};

// sum over w of coeff * T_w
struct HeckeElement {
  std::map<int, VPoly> terms;
  VPoly coeff(int w) const;
  void add(int w, const VPoly& p);
  bool operator==(const HeckeElement& o) const { return terms == o.terms; }
};

HeckeElement hecke_T(int w);
HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
HeckeElement scale(const HeckeElement& a, const VPoly& p);
// T_s * a
HeckeElement left_mul_Ts(const CoxeterSystem& W, int s, const HeckeElement& a);
HeckeElement multiply(const CoxeterSystem& W, const HeckeElement& a, const HeckeElement& b);
// T_w -> T_{w^-1}^{-1}, v -> v^-1
HeckeElement bar(const CoxeterSystem& W, const HeckeElement& a);

class KLBasis {
 public:
  explicit KLBasis(const CoxeterSystem& W);
  const CoxeterSystem& system() const { return W_; }
  // T-expansion of C_w
  HeckeElement element(int w) const;
  const VPoly& p(int y, int w) const { return p_[w][y]; }
  long mu(int z, int w) const;
  const std::vector<std::pair<int, long>>& mu_list(int w) const { return mu_[w]; }
  // C_s * C_y in the C-basis, accumulated into out with weight c
  void left_mul_Cs(int s, const std::vector<VPoly>& in, std::vector<VPoly>& out) const;
  // z -> h_{x,y,z} for all x at once: result[x][z]
  std::vector<std::vector<VPoly>> products_with(int y) const;
  std::map<int, VPoly> structure_constants(int x, int y) const;

 private:
  CoxeterSystem W_;
  std::vector<std::vector<VPoly>> p_;
  std::vector<std::vector<std::pair<int, long>>> mu_;
};

// a(z) = max deg h_{x,y,z}; groups above pair_limit need allow_large
std::vector<int> a_function(const KLBasis& kl, bool allow_large = false, std::size_t pair_limit = 400);
std::vector<int> unique_reduced_expression_cell(const CoxeterSystem& W);

}  // namespace qgk
