#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgk/gk.hpp"
#include "qgk/laurent.hpp"
#include "qgk/linalg.hpp"
#include "qgk/mpoly.hpp"
#include "qgk/weights.hpp"

namespace qgk {

using QPoly = Laurent<long>;
using Word = std::string;  // letters are simple-root indices stored as chars
using WordPoly = std::map<Word, QPoly>;

struct RewriteRule {
  Word lhs;
  WordPoly rhs;
};

std::string word_string(const Word& w);
IVec word_weight(const Word& w, int rank);

// normal forms of U_q^- for rank <= 2 by bounded completion of the quantum Serre relations
class RewriteSystem {
 public:
  static std::shared_ptr<const RewriteSystem> build(RootSystemPtr rs, int height, bool allow_g2 = false);

  const RootSystem& root_system() const { return *rs_; }
  RootSystemPtr root_system_ptr() const { return rs_; }
  int height_bound() const { return H_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  bool is_normal(const Word& w) const;
  WordPoly normal_form(const Word& w) const;
  // unmemoized reduction always rewriting the leftmost (or rightmost) redex
  WordPoly normal_form_by(const Word& w, bool rightmost) const;
  // normal words of weight nu in increasing order
  const std::vector<Word>& basis(const IVec& nu) const;

  struct Lowering {
    long pair;  // (alpha_i, weight of the letters after the removed one)
    std::vector<std::pair<int, QPoly>> vec;  // normal form in basis(nu - alpha_i)
  };
  // E_i applied to the c-th basis word of nu
  const std::vector<Lowering>& lowering(const IVec& nu, int c, int i) const;

 private:
  struct WeightData {
    std::vector<Word> words;
    std::unordered_map<Word, int> index;
    std::vector<std::vector<std::vector<Lowering>>> low;
    bool lowered = false;
  };
  RewriteSystem() = default;
  WeightData& data(const IVec& nu) const;
  void check_height(const IVec& nu) const;

  RootSystemPtr rs_;
  int H_ = 0;
  std::vector<RewriteRule> rules_;
  mutable std::recursive_mutex mu_;
  mutable std::unordered_map<Word, WordPoly> nf_;
  mutable std::map<IVec, WeightData> weights_;
};
using RewriteSystemPtr = std::shared_ptr<const RewriteSystem>;

// values of K_i (and inverses) in a coefficient ring, with the image of q
struct CycloEval {
  long ell = 1;
  std::vector<Cyclotomic> K, Kinv;
  Cyclotomic from_q(const QPoly& p) const;
  Cyclotomic q_power(long k) const;
};

struct PolyEval {
  int g = 1;  // q = s^g, s stored in the q slot
  std::vector<MPoly> K, Kinv;
  MPoly from_q(const QPoly& p) const;
  MPoly q_power(long k) const;
};

CycloEval eval_at_root_of_unity(const ToralWeight& w, long ell);
// generic q; with_t multiplies K_i by t^{d_i}
PolyEval eval_generic(const ToralWeight& w, bool with_t = false);
// K_i = z_i
PolyEval eval_symbolic(const RootSystem& rs);
// K_i = r_i rational
PolyEval eval_rational(const std::vector<Rational>& r);

template <class T>
struct GramReport {
  IVec nu;
  std::vector<Word> basis;
  Matrix<T> gram;
  std::size_t rank = 0;
  std::optional<T> det;
};

// Gram matrices of the contravariant form scaled by prod (q_i - q_i^-1)^{nu_i}
template <class T, class Ev>
class GramEngine {
 public:
  GramEngine(RewriteSystemPtr sys, Ev ev) : sys_(std::move(sys)), ev_(std::move(ev)) {}
  const Matrix<T>& gram(const IVec& nu);
  GramReport<T> report(const IVec& nu, bool with_det);
  const RewriteSystem& system() const { return *sys_; }

 private:
  RewriteSystemPtr sys_;
  Ev ev_;
  std::map<IVec, Matrix<T>> cache_;
};

using CycloGram = GramEngine<Cyclotomic, CycloEval>;
using PolyGram = GramEngine<MPoly, PolyEval>;

// all nu in Q+ of the given height
std::vector<IVec> weights_of_height(int rank, int height);

struct ShapovalovFactor {
  int root;
  int m;
  std::uint64_t exponent;
};
// every (alpha, m) with 1 <= m <= ht(nu); exponent p(nu - m alpha), zero when not in Q+
std::vector<ShapovalovFactor> shapovalov_factors(const RootSystem& rs, const IVec& nu);
// [m]_{q_alpha} (K_alpha q^r - K_alpha^-1 q^-r) and q_alpha - q_alpha^-1, r = (rho, alpha) - m d_alpha
std::pair<MPoly, MPoly> shapovalov_factor_value(const RootSystem& rs, const ShapovalovFactor& f, const PolyEval& ev);
// the product formula with K_i taken from ev, q = s^{ev.g}
RatFunc shapovalov_det_formula(const RootSystem& rs, const IVec& nu, const PolyEval& ev);

struct CrossCheck {
  IVec nu;
  bool unit = false;          // ratio nonzero and constant over substitutions
  bool symbolic_checked = false;
  RatFunc ratio;
};
CrossCheck det_formula_cross_check(RewriteSystemPtr sys, const IVec& nu, std::uint32_t seed, int substitutions = 10,
                                   int symbolic_height = 3);

std::vector<long> simple_graded_dims(RewriteSystemPtr sys, const ToralWeight& w, int height);

struct BabyVermaReport {
  long ell = 0;
  SpecializedWeight lambda;
  std::vector<long> per_degree;
  int truncation = 0;
  Integer total = 0;
};
BabyVermaReport baby_verma_head(RewriteSystemPtr sys, const ToralWeight& w, long ell);
int baby_verma_height(const RootSystem& rs, long ell);

struct JantzenCheck {
  long lhs = 0, rhs = 0;
  bool equal = false;
};
JantzenCheck jantzen_sum_check(RewriteSystemPtr sys, const ToralWeight& w, const IVec& nu);

struct GrowthRow {
  GrowthSample sample;
  long agreement = 0;  // J(ell)
};
struct GrowthReport {
  std::vector<GrowthRow> rows;
  GrowthEstimate estimate;
  int gk = 0;
  bool agreement_ok = false;  // J(ell) >= ell / m for every ell
};
GrowthReport growth_experiment(const ToralWeight& w, const std::vector<long>& ells, int m = 8);

}  // namespace qgk
