#include "qgk/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "qgk/error.hpp"

namespace qgk {

TypeLabel parse_type(const std::string& s0) {
  // accept x, X, '*' and the multiplication sign as separators
  std::string s;
  for (std::size_t i = 0; i < s0.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(s0[i]);
    if (ch == 0xC3 && i + 1 < s0.size() && static_cast<unsigned char>(s0[i + 1]) == 0x97) {
      s += 'x';
      ++i;
    } else if (ch != ' ') {
      s += s0[i];
    }
  }
  TypeLabel out;
  std::size_t i = 0;
  if (s.empty()) throw Error(ErrorKind::InvalidType, "empty type label");
  while (i < s.size()) {
    char L = static_cast<char>(std::toupper(static_cast<unsigned char>(s[i])));
    if (L < 'A' || L > 'G') throw Error(ErrorKind::InvalidType, "bad letter in '" + s0 + "'");
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) throw Error(ErrorKind::InvalidType, "missing rank in '" + s0 + "'");
    int n = std::stoi(s.substr(i + 1, j - i - 1));
    bool ok = false;
    switch (L) {
      case 'A': ok = n >= 1; break;
      case 'B': ok = n >= 2; break;
      case 'C': ok = n >= 2; break;
      case 'D': ok = n >= 3; break;
      case 'E': ok = n >= 6 && n <= 8; break;
      case 'F': ok = n == 4; break;
      case 'G': ok = n == 2; break;
    }
    if (!ok) throw Error(ErrorKind::InvalidType, "no root system " + std::string(1, L) + std::to_string(n));
    out.push_back({L, n});
    i = j;
    if (i < s.size()) {
      if (s[i] != 'x' && s[i] != 'X' && s[i] != '*') throw Error(ErrorKind::InvalidType, "bad separator in '" + s0 + "'");
      ++i;
      if (i == s.size()) throw Error(ErrorKind::InvalidType, "trailing separator in '" + s0 + "'");
    }
  }
  return out;
}

std::string type_string(const TypeLabel& t) {
  std::string s;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += "x";
    s += t[k].letter;
    s += std::to_string(t[k].rank);
  }
  return s;
}

namespace {

using Gram = std::vector<std::vector<long>>;

Gram component_gram(const Component& c) {
  int n = c.rank;
  Gram g(n, std::vector<long>(n, 0));
  auto link = [&](int i, int j, long v) {
    g[i][j] = v;
    g[j][i] = v;
  };
  switch (c.letter) {
    case 'A':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) g[i][i] = i < n - 1 ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) g[i][i] = i < n - 1 ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) g[i][i] = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      g[0][0] = g[1][1] = 4;
      g[2][2] = g[3][3] = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      g[0][0] = 2;
      g[1][1] = 6;
      link(0, 1, -3);
      break;
  }
  return g;
}

std::vector<std::vector<Rational>> invert(const Gram& g) {
  std::size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(ErrorKind::InvalidType, "degenerate form");
    std::swap(a[p], a[c]);
    Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

}  // namespace

RootSystemPtr RootSystem::build(const TypeLabel& type) {
  if (type.empty()) throw Error(ErrorKind::InvalidType, "empty type label");
  int n = 0;
  for (const auto& c : type) n += c.rank;
  Gram g(n, std::vector<long>(n, 0));
  int off = 0;
  for (const auto& c : type) {
    Gram cg = component_gram(c);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) g[off + i][off + j] = cg[i][j];
    off += c.rank;
  }
  return from_gram(g, type);
}

RootSystemPtr RootSystem::from_gram(const Gram& gram, const TypeLabel& type) {
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->gram_ = gram;
  rs->type_ = type;
  rs->n_ = static_cast<int>(gram.size());
  rs->init();
  return rs;
}

void RootSystem::init() {
  int n = n_;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (gram_[i][j] != gram_[j][i]) throw Error(ErrorKind::InvalidType, "form not symmetric");
      if (i != j && (2 * gram_[i][j]) % gram_[i][i] != 0) throw Error(ErrorKind::InvalidType, "non-integral Cartan entry");
    }
  gram_inv_ = invert(gram_);
  // positive roots by closure under simple reflections
  std::set<IVec> pos;
  std::deque<IVec> todo;
  for (int i = 0; i < n; ++i) {
    IVec e(n, 0);
    e[i] = 1;
    pos.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IVec b = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      long ip = 0;
      for (int j = 0; j < n; ++j) ip += b[j] * gram_[j][i];
      long c = 2 * ip / gram_[i][i];
      IVec r = b;
      r[i] -= static_cast<int>(c);
      bool allpos = true, nonzero = false;
      for (int v : r) {
        if (v < 0) allpos = false;
        if (v != 0) nonzero = true;
      }
      if (allpos && nonzero && !pos.count(r)) {
        pos.insert(r);
        todo.push_back(r);
      }
      if (pos.size() > 100000) throw Error(ErrorKind::InvalidType, "root system is not finite");
    }
  }
  std::vector<IVec> p(pos.begin(), pos.end());
  std::sort(p.begin(), p.end(), [](const IVec& a, const IVec& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  npos_ = static_cast<int>(p.size());
  roots_ = p;
  for (const auto& r : p) {
    IVec m = r;
    for (auto& x : m) x = -x;
    roots_.push_back(m);
  }
  int N = num_roots();
  for (int k = 0; k < N; ++k) {
    index_[roots_[k]] = k;
    norms_.push_back(inner(roots_[k], roots_[k]));
  }
  refl_.assign(N, std::vector<int>(N, -1));
  sum_.assign(N, std::vector<int>(N, -1));
  for (int b = 0; b < N; ++b) {
    for (int a = 0; a < N; ++a) {
      long c = 2 * inner(roots_[a], roots_[b]) / norms_[b];
      IVec r = roots_[a];
      for (int j = 0; j < n; ++j) r[j] -= static_cast<int>(c * roots_[b][j]);
      refl_[b][a] = index_of(r);
      IVec s = roots_[a];
      for (int j = 0; j < n; ++j) s[j] += roots_[b][j];
      sum_[a][b] = index_of(s);
    }
  }
  for (int i = 0; i < n; ++i) simple_perm_.push_back(refl_[i]);
  // components of the Dynkin diagram
  comp_of_simple_.assign(n, -1);
  int nc = 0;
  for (int i = 0; i < n; ++i) {
    if (comp_of_simple_[i] >= 0) continue;
    std::deque<int> q{i};
    comp_of_simple_[i] = nc;
    while (!q.empty()) {
      int a = q.front();
      q.pop_front();
      for (int b = 0; b < n; ++b)
        if (gram_[a][b] != 0 && comp_of_simple_[b] < 0) {
          comp_of_simple_[b] = nc;
          q.push_back(b);
        }
    }
    ++nc;
  }
  comp_of_root_.assign(N, -1);
  comp_max_norm_.assign(nc, 0);
  for (int k = 0; k < N; ++k) {
    for (int j = 0; j < n; ++j)
      if (roots_[k][j] != 0) comp_of_root_[k] = comp_of_simple_[j];
    comp_max_norm_[comp_of_root_[k]] = std::max(comp_max_norm_[comp_of_root_[k]], norms_[k]);
  }
}

int RootSystem::height(int k) const { return std::accumulate(roots_[k].begin(), roots_[k].end(), 0); }

int RootSystem::index_of(const IVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

bool RootSystem::is_long(int k) const { return norms_[k] == comp_max_norm_[comp_of_root_[k]]; }

std::vector<int> RootSystem::component_simples(int c) const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (comp_of_simple_[i] == c) out.push_back(i);
  return out;
}

long RootSystem::inner(const IVec& a, const IVec& b) const {
  long s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) s += static_cast<long>(a[i]) * b[j] * gram_[i][j];
  }
  return s;
}

Rational RootSystem::inner(const QVec& a, const QVec& b) const {
  Rational s = 0;
  for (int i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n_; ++j) s += a[i] * b[j] * gram_[i][j];
  }
  return s;
}

QVec RootSystem::to_root(const LatticeVector& v) const {
  if (v.basis == Basis::Root) return v.c;
  // x = B^{-1} (d o lambda)
  QVec out(n_, Rational(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += gram_inv_[i][j] * v.c[j] * d(j);
  return out;
}

QVec RootSystem::to_fundamental(const LatticeVector& v) const {
  if (v.basis == Basis::Fundamental) return v.c;
  QVec out(n_, Rational(0));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) out[i] += v.c[j] * gram_[j][i];
    out[i] /= d(i);
  }
  return out;
}

Rational RootSystem::pairing(const QVec& lambda_root, const IVec& alpha) const {
  Rational ip = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) ip += lambda_root[i] * alpha[j] * gram_[i][j];
  return 2 * ip / inner(alpha, alpha);
}

Rational RootSystem::pairing(const LatticeVector& lambda, int k) const {
  return pairing(to_root(lambda), roots_[k]);
}

LatticeVector RootSystem::fundamental_weight(int i) const {
  LatticeVector v{Basis::Fundamental, QVec(n_, Rational(0))};
  v.c[i] = 1;
  return v;
}

LatticeVector RootSystem::rho() const { return {Basis::Fundamental, QVec(n_, Rational(1))}; }

int RootSystem::highest_root(int comp) const {
  int best = -1;
  for (int k = 0; k < npos_; ++k)
    if (comp_of_root_[k] == comp && (best < 0 || height(k) > height(best))) best = k;
  return best;
}

int RootSystem::highest_short_root(int comp) const {
  long mn = -1;
  for (int k = 0; k < npos_; ++k)
    if (comp_of_root_[k] == comp && (mn < 0 || norms_[k] < mn)) mn = norms_[k];
  int best = -1;
  for (int k = 0; k < npos_; ++k)
    if (comp_of_root_[k] == comp && norms_[k] == mn && (best < 0 || height(k) > height(best))) best = k;
  return best;
}

IVec RootSystem::marks(int comp) const {
  IVec out;
  const IVec& th = roots_[highest_root(comp)];
  for (int i : component_simples(comp)) out.push_back(th[i]);
  return out;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) r[k] = a[b[k]];
  return r;
}

WeylGroup::WeylGroup(RootSystemPtr rs, std::size_t cap) : rs_(std::move(rs)) {
  for (int i = 0; i < rs_->rank(); ++i) gens_.push_back(i);
  enumerate(cap);
}

WeylGroup::WeylGroup(RootSystemPtr rs, std::vector<int> simple_roots, std::size_t cap)
    : rs_(std::move(rs)), gens_(std::move(simple_roots)) {
  enumerate(cap);
}

IVec WeylGroup::key(const Perm& p) const {
  IVec k(rs_->rank());
  for (int i = 0; i < rs_->rank(); ++i) k[i] = p[i];
  return k;
}

void WeylGroup::enumerate(std::size_t cap) {
  const RootSystem& R = *rs_;
  int N = R.num_roots();
  std::vector<Perm> gp;
  for (int g : gens_) gp.push_back(R.reflection_perm(g));
  // positive roots of the subsystem: orbit of generators
  std::vector<char> in(N, 0);
  std::deque<int> q;
  for (int g : gens_) {
    in[g] = 1;
    q.push_back(g);
  }
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (const auto& p : gp) {
      int b = p[a];
      if (!in[b]) {
        in[b] = 1;
        q.push_back(b);
      }
      if (!in[R.negate(b)]) {
        in[R.negate(b)] = 1;
        q.push_back(R.negate(b));
      }
    }
  }
  for (int k = 0; k < R.num_positive(); ++k)
    if (in[k]) positive_.push_back(k);

  Perm id(N);
  std::iota(id.begin(), id.end(), 0);
  perms_.push_back(id);
  length_.push_back(0);
  words_.push_back({});
  lookup_[key(id)] = 0;
  int S = num_generators();
  for (std::size_t e = 0; e < perms_.size(); ++e) {
    std::vector<int> row(S);
    for (int s = 0; s < S; ++s) {
      Perm p = compose(perms_[e], gp[s]);
      IVec k = key(p);
      auto it = lookup_.find(k);
      if (it == lookup_.end()) {
        if (perms_.size() >= cap)
          throw Error(ErrorKind::GroupTooLarge, "reflection group exceeds cap " + std::to_string(cap));
        int idx = static_cast<int>(perms_.size());
        lookup_[k] = idx;
        perms_.push_back(p);
        length_.push_back(length_[e] + 1);
        auto w = words_[e];
        w.push_back(s);
        words_.push_back(w);
        row[s] = idx;
      } else {
        row[s] = it->second;
      }
    }
    right_.push_back(row);
  }
  std::size_t M = perms_.size();
  left_.assign(M, std::vector<int>(S));
  inverse_.assign(M, 0);
  for (std::size_t e = 0; e < M; ++e) {
    for (int s = 0; s < S; ++s) left_[e][s] = lookup_.at(key(compose(gp[s], perms_[e])));
  }
  for (std::size_t e = 0; e < M; ++e) {
    int x = 0;
    const auto& w = words_[e];
    for (auto it = w.rbegin(); it != w.rend(); ++it) x = right_[x][*it];
    inverse_[e] = x;
  }
  longest_ = static_cast<int>(std::max_element(length_.begin(), length_.end()) - length_.begin());
}

int WeylGroup::multiply(int a, int b) const {
  int x = a;
  for (int s : words_[b]) x = right_[x][s];
  return x;
}

int WeylGroup::find(const Perm& p) const {
  auto it = lookup_.find(key(p));
  return it == lookup_.end() ? -1 : it->second;
}

int WeylGroup::coxeter_m(int s, int t) const {
  int x = 0, m = 0;
  do {
    x = right_[right_[x][s]][t];
    ++m;
  } while (x != 0);
  return m;
}

int WeylGroup::inversion_count(int e) const {
  int c = 0;
  for (int k : positive_)
    if (!rs_->is_positive(perms_[e][k])) ++c;
  return c;
}

QVec WeylGroup::apply(int e, const QVec& v) const {
  int n = rs_->rank();
  QVec out(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    const IVec& img = rs_->root(perms_[e][i]);
    for (int j = 0; j < n; ++j) out[j] += v[i] * img[j];
  }
  return out;
}

std::vector<int> weyl_orbit(const RootSystem& rs, int root) {
  std::vector<char> seen(rs.num_roots(), 0);
  std::vector<int> out{root};
  seen[root] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (int i = 0; i < rs.rank(); ++i) {
      int b = rs.reflect(i, out[k]);
      if (!seen[b]) {
        seen[b] = 1;
        out.push_back(b);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

KostantTable::KostantTable(const RootSystem& rs, const IVec& bound) : bound_(bound) {
  std::size_t n = bound.size(), total = 1;
  for (int b : bound) total *= static_cast<std::size_t>(b + 1);
  table_.assign(total, 0);
  table_[0] = 1;
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = 1; i < n; ++i) stride[i] = stride[i - 1] * (bound[i - 1] + 1);
  // coin-change over the positive roots
  for (int k = 0; k < rs.num_positive(); ++k) {
    const IVec& a = rs.root(k);
    bool fits = true;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] > bound[i]) fits = false;
    if (!fits) continue;
    std::size_t off = 0;
    for (std::size_t i = 0; i < n; ++i) off += a[i] * stride[i];
    IVec cur(n, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i)
        if (cur[i] < a[i]) ok = false;
      if (ok) table_[idx] += table_[idx - off];
      for (std::size_t i = 0; i < n; ++i) {
        if (++cur[i] <= bound[i]) break;
        cur[i] = 0;
      }
    }
  }
}

std::uint64_t KostantTable::operator()(const IVec& nu) const {
  std::size_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 0) return 0;
    if (nu[i] > bound_[i]) throw Error(ErrorKind::Domain, "partition query outside the table");
    idx += nu[i] * stride;
    stride *= bound_[i] + 1;
  }
  return table_[idx];
}

std::uint64_t kostant_partition(const RootSystem& rs, const IVec& nu) {
  for (int v : nu)
    if (v < 0) return 0;
  return KostantTable(rs, nu)(nu);
}

std::map<IVec, long> freudenthal_multiplicities(const RootSystem& rs, const IVec& lambda) {
  int n = rs.rank();
  for (int v : lambda)
    if (v < 0) throw Error(ErrorKind::NonDominant, "weight is not dominant");
  // nu ranges over Q+ below lambda - w0 lambda
  QVec lr = rs.to_root({Basis::Fundamental, QVec(lambda.begin(), lambda.end())});
  IVec bound(n);
  {
    // lambda - w0 lambda: apply longest element through simple reflections
    IVec mu = lambda, nu(n, 0);
    // reflect to the antidominant chamber
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < n; ++i)
        if (mu[i] > 0) {
          int c = mu[i];
          for (int j = 0; j < n; ++j) mu[j] -= c * rs.cartan(j, i);
          nu[i] += c;
          moved = true;
        }
    }
    bound = nu;
  }
  // (lambda + rho, alpha_i) = d_i (lambda_i + 1)
  std::vector<long> lr_i(n);
  for (int i = 0; i < n; ++i) lr_i[i] = static_cast<long>(rs.d(i)) * (lambda[i] + 1);
  std::vector<long> l_i(n);
  for (int i = 0; i < n; ++i) l_i[i] = static_cast<long>(rs.d(i)) * lambda[i];

  auto is_weight = [&](const IVec& nu) {
    IVec mu(n), acc = nu;
    for (int i = 0; i < n; ++i) {
      long s = lambda[i];
      for (int j = 0; j < n; ++j) s -= static_cast<long>(nu[j]) * rs.cartan(i, j);
      mu[i] = static_cast<int>(s);
    }
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < n; ++i)
        if (mu[i] < 0) {
          int c = mu[i];
          for (int j = 0; j < n; ++j) mu[j] -= c * rs.cartan(j, i);
          acc[i] += c;
          moved = true;
        }
    }
    for (int v : acc)
      if (v < 0) return false;
    return true;
  };

  std::vector<IVec> box;
  IVec cur(n, 0);
  while (true) {
    box.push_back(cur);
    int i = 0;
    while (i < n && ++cur[i] > bound[i]) cur[i++] = 0;
    if (i == n) break;
  }
  std::sort(box.begin(), box.end(), [](const IVec& a, const IVec& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  std::map<IVec, long> mult;  // keyed by nu
  for (const IVec& nu : box) {
    if (!is_weight(nu)) continue;
    bool zero = std::all_of(nu.begin(), nu.end(), [](int v) { return v == 0; });
    if (zero) {
      mult[nu] = 1;
      continue;
    }
    long num = 0;
    for (int k = 0; k < rs.num_positive(); ++k) {
      const IVec& a = rs.root(k);
      for (int t = 1;; ++t) {
        IVec nn = nu;
        bool ok = true;
        for (int i = 0; i < n; ++i) {
          nn[i] -= t * a[i];
          if (nn[i] < 0) ok = false;
        }
        if (!ok) break;
        auto it = mult.find(nn);
        if (it == mult.end()) continue;
        // (mu + t alpha, alpha) with mu + t alpha = lambda - nn
        long ip = 0;
        for (int i = 0; i < n; ++i) ip += a[i] * l_i[i];
        ip -= rs.inner(nn, a);
        num += it->second * ip;
      }
    }
    long den = 0;
    for (int i = 0; i < n; ++i) den += 2 * nu[i] * lr_i[i];
    den -= rs.inner(nu, nu);
    num *= 2;
    if (den == 0 || num % den != 0) throw Error(ErrorKind::Domain, "Freudenthal recursion is not integral");
    if (num != 0) mult[nu] = num / den;
  }
  std::map<IVec, long> out;
  for (const auto& [nu, m] : mult) {
    IVec mu(n);
    for (int i = 0; i < n; ++i) {
      long s = lambda[i];
      for (int j = 0; j < n; ++j) s -= static_cast<long>(nu[j]) * rs.cartan(i, j);
      mu[i] = static_cast<int>(s);
    }
    out[mu] = m;
  }
  return out;
}

CoxeterNumbers coxeter_numbers(const RootSystem& rs) {
  if (!rs.irreducible()) throw Error(ErrorKind::Reducible, "Coxeter numbers need an irreducible type");
  Rational a = rs.pairing(rs.rho(), rs.highest_short_root());
  Rational b = rs.pairing(rs.rho(), rs.highest_root());
  return {static_cast<int>(a.get_num().get_si()) + 1, static_cast<int>(b.get_num().get_si()) + 1};
}

}  // namespace qgk
