#include "qgk/hecke.hpp"

#include <algorithm>

#include "qgk/error.hpp"

namespace qgk {

namespace {

const VPoly kV = VPoly::monomial(1, 1);
const VPoly kVinv = VPoly::monomial(1, -1);
const VPoly kVdiff = VPoly::monomial(1, 1) - VPoly::monomial(1, -1);
const VPoly kVsum = VPoly::monomial(1, 1) + VPoly::monomial(1, -1);

}  // namespace

CoxeterSystem::CoxeterSystem(std::shared_ptr<const WeylGroup> W) : W_(std::move(W)) {
  int r = rank();
  m_.assign(r, std::vector<int>(r, 1));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t)
      if (s != t) {
        int v = W_->coxeter_m(s, t);
        if (v != 2 && v != 3 && v != 4 && v != 6) throw Error(ErrorKind::InvalidType, "non-crystallographic Coxeter matrix");
        m_[s][t] = v;
      }
  int n = size();
  nred_.assign(n, 0);
  nred_[0] = 1;
  for (int w = 1; w < n; ++w)
    for (int s = 0; s < r; ++s)
      if (right_descent(w, s)) nred_[w] += nred_[right(w, s)];
  bruhat_.assign(static_cast<std::size_t>(n) * n, -1);
}

CoxeterSystem CoxeterSystem::from_type(const std::string& type, std::size_t cap) {
  return CoxeterSystem(std::make_shared<const WeylGroup>(RootSystem::build(type), cap));
}

bool CoxeterSystem::bruhat_leq(int y, int w) const {
  auto& c = bruhat_[static_cast<std::size_t>(y) * size() + w];
  if (c >= 0) return c;
  bool r;
  if (length(y) > length(w)) r = false;
  else if (w == 0) r = y == 0;
  else {
    int s = word(w).front();
    int sw = left(s, w), sy = left(s, y);
    r = left_descent(s, y) ? bruhat_leq(sy, sw) : bruhat_leq(y, sw);
  }
  c = r;
  return r;
}

std::string CoxeterSystem::word_string(int w) const {
  if (word(w).empty()) return "e";
  std::string s;
  for (int g : word(w)) s += "s" + std::to_string(g + 1);
  return s;
}

VPoly HeckeElement::coeff(int w) const {
  auto it = terms.find(w);
  return it == terms.end() ? VPoly() : it->second;
}

void HeckeElement::add(int w, const VPoly& p) {
  if (p.is_zero()) return;
  auto& x = terms[w];
  x += p;
  if (x.is_zero()) terms.erase(w);
}

HeckeElement hecke_T(int w) {
  HeckeElement h;
  h.add(w, VPoly(1));
  return h;
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (auto& [w, p] : b.terms) r.add(w, p);
  return r;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (auto& [w, p] : b.terms) r.add(w, -p);
  return r;
}

HeckeElement scale(const HeckeElement& a, const VPoly& p) {
  HeckeElement r;
  for (auto& [w, q] : a.terms) r.add(w, q * p);
  return r;
}

HeckeElement left_mul_Ts(const CoxeterSystem& W, int s, const HeckeElement& a) {
  HeckeElement r;
  for (auto& [y, p] : a.terms) {
    int sy = W.left(s, y);
    r.add(sy, p);
    if (W.length(sy) < W.length(y)) r.add(y, p * kVdiff);
  }
  return r;
}

HeckeElement multiply(const CoxeterSystem& W, const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r;
  for (auto& [x, p] : a.terms) {
    HeckeElement t = b;
    const auto& w = W.word(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = left_mul_Ts(W, *it, t);
    r = r + scale(t, p);
  }
  return r;
}

HeckeElement bar(const CoxeterSystem& W, const HeckeElement& a) {
  HeckeElement r;
  for (auto& [x, p] : a.terms) {
    // T_{x^-1}^{-1} = T_{s1}^{-1} ... T_{sk}^{-1} for x = s1 ... sk
    HeckeElement t = hecke_T(0);
    const auto& w = W.word(x);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = left_mul_Ts(W, *it, t) - scale(t, kVdiff);
    r = r + scale(t, p.bar());
  }
  return r;
}

KLBasis::KLBasis(const CoxeterSystem& W) : W_(W) {
  int n = W.size();
  p_.assign(n, {});
  mu_.assign(n, {});
  for (int w = 0; w < n; ++w) {
    std::vector<VPoly> c(n);
    if (w == 0) {
      c[0] = VPoly(1);
    } else {
      int s = W.word(w).front();
      int x = W.left(s, w);
      // C_s C_x in the T-basis
      for (int y = 0; y < n; ++y) {
        const VPoly& q = p_[x][y];
        if (q.is_zero()) continue;
        int sy = W.left(s, y);
        c[sy] += q;
        if (W.length(sy) < W.length(y)) c[y] += q * kVdiff;
        c[y] += q * kVinv;
      }
      for (auto [z, m] : mu_[x])
        if (W.left_descent(s, z))
          for (int y = 0; y < n; ++y)
            if (!p_[z][y].is_zero()) c[y] -= p_[z][y] * VPoly(m);
    }
    p_[w] = std::move(c);
    for (int z = 0; z < n; ++z)
      if (z != w) {
        long m = p_[w][z].coeff(-1);
        if (m != 0) mu_[w].push_back({z, m});
      }
  }
}

HeckeElement KLBasis::element(int w) const {
  HeckeElement h;
  for (int y = 0; y < W_.size(); ++y) h.add(y, p_[w][y]);
  return h;
}

long KLBasis::mu(int z, int w) const {
  for (auto [x, m] : mu_[w])
    if (x == z) return m;
  return 0;
}

void KLBasis::left_mul_Cs(int s, const std::vector<VPoly>& in, std::vector<VPoly>& out) const {
  for (int y = 0; y < W_.size(); ++y) {
    const VPoly& q = in[y];
    if (q.is_zero()) continue;
    int sy = W_.left(s, y);
    if (W_.length(sy) < W_.length(y)) {
      out[y] += q * kVsum;
    } else {
      out[sy] += q;
      for (auto [z, m] : mu_[y])
        if (W_.left_descent(s, z)) out[z] += q * VPoly(m);
    }
  }
}

std::vector<std::vector<VPoly>> KLBasis::products_with(int y) const {
  int n = W_.size();
  std::vector<std::vector<VPoly>> P(n);
  P[0].assign(n, VPoly());
  P[0][y] = VPoly(1);
  for (int x = 1; x < n; ++x) {
    int s = W_.word(x).front();
    int xp = W_.left(s, x);
    std::vector<VPoly> r(n);
    left_mul_Cs(s, P[xp], r);
    for (auto [z, m] : mu_[xp])
      if (W_.left_descent(s, z))
        for (int u = 0; u < n; ++u)
          if (!P[z][u].is_zero()) r[u] -= P[z][u] * VPoly(m);
    P[x] = std::move(r);
  }
  return P;
}

std::map<int, VPoly> KLBasis::structure_constants(int x, int y) const {
  auto P = products_with(y);
  std::map<int, VPoly> out;
  for (int z = 0; z < W_.size(); ++z)
    if (!P[x][z].is_zero()) out[z] = P[x][z];
  return out;
}

std::vector<int> a_function(const KLBasis& kl, bool allow_large, std::size_t pair_limit) {
  const CoxeterSystem& W = kl.system();
  int n = W.size();
  if (static_cast<std::size_t>(n) > pair_limit && !allow_large)
    throw Error(ErrorKind::GroupTooLarge, "a-function over " + std::to_string(n) + " elements needs the opt-in flag");
  std::vector<int> a(n, 0);
  for (int y = 0; y < n; ++y) {
    auto P = kl.products_with(y);
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z)
        if (!P[x][z].is_zero()) a[z] = std::max(a[z], P[x][z].high());
  }
  return a;
}

std::vector<int> unique_reduced_expression_cell(const CoxeterSystem& W) {
  std::vector<int> out;
  for (int w = 1; w < W.size(); ++w)
    if (W.reduced_word_count(w) == 1) out.push_back(w);
  return out;
}

}  // namespace qgk
