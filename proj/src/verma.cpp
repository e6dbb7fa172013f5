#include "qgk/verma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

namespace qgk {

namespace {

void add_term(WordPoly& p, const Word& w, const QPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

// position of the leftmost (rightmost) occurrence of any rule lhs
std::pair<long, int> find_redex(const Word& w, const std::vector<RewriteRule>& rules, bool rightmost) {
  long best = -1;
  int which = -1;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    const Word& l = rules[r].lhs;
    auto pos = rightmost ? w.rfind(l) : w.find(l);
    if (pos == Word::npos) continue;
    long p = static_cast<long>(pos);
    if (best < 0 || (rightmost ? p > best : p < best)) {
      best = p;
      which = static_cast<int>(r);
    }
  }
  return {best, which};
}

WordPoly reduce_poly(WordPoly p, const std::vector<RewriteRule>& rules) {
  while (true) {
    bool changed = false;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
      auto [pos, r] = find_redex(it->first, rules, false);
      if (r < 0) continue;
      Word w = it->first;
      QPoly c = it->second;
      p.erase(w);
      const Word& l = rules[r].lhs;
      Word pre = w.substr(0, pos), post = w.substr(pos + l.size());
      for (auto& [u, cu] : rules[r].rhs) add_term(p, pre + u + post, c * cu);
      changed = true;
      break;
    }
    if (!changed) return p;
  }
}

bool is_unit(const QPoly& c) { return c.data().size() == 1 && (c.data()[0] == 1 || c.data()[0] == -1); }

WordPoly concat(const Word& a, const WordPoly& p, const Word& b) {
  WordPoly r;
  for (auto& [u, c] : p) r.emplace(a + u + b, c);
  return r;
}

WordPoly difference(WordPoly a, const WordPoly& b) {
  for (auto& [u, c] : b) add_term(a, u, -c);
  return a;
}

QPoly qmono(long c, long e) { return QPoly::monomial(c, static_cast<int>(e)); }

}  // namespace

std::string word_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (char ch : w) s += "F" + std::to_string(static_cast<int>(ch) + 1);
  return s;
}

IVec word_weight(const Word& w, int rank) {
  IVec nu(rank, 0);
  for (char ch : w) ++nu[static_cast<int>(ch)];
  return nu;
}

std::vector<IVec> weights_of_height(int rank, int height) {
  std::vector<IVec> out;
  IVec cur(rank, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (rank > 0) rec(0, height);
  std::sort(out.begin(), out.end());
  return out;
}

static int vec_height(const IVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::shared_ptr<const RewriteSystem> RewriteSystem::build(RootSystemPtr rs, int height, bool allow_g2) {
  if (rs->rank() > 2) throw Error(ErrorKind::UnsupportedType, "rewriting engine needs rank <= 2");
  for (auto& c : rs->type())
    if (c.letter == 'G' && !allow_g2) throw Error(ErrorKind::UnsupportedType, "G2 Gram support is disabled");
  if (height < 0 || height > 24) throw Error(ErrorKind::HeightTooLarge, "height bound must be in [0, 24]");
  std::shared_ptr<RewriteSystem> sys(new RewriteSystem());
  sys->rs_ = rs;
  sys->H_ = height;
  const int n = rs->rank();

  std::vector<WordPoly> pending;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int a = rs->cartan(i, j);
      int top = 1 - a;
      if (top + 1 > height) continue;
      WordPoly rel;
      for (int k = 0; k <= top; ++k) {
        QPoly c = quantum_binomial<long>(top, k, rs->d(i));
        if (k % 2) c = -c;
        add_term(rel, Word(top - k, char(i)) + char(j) + Word(k, char(i)), c);
      }
      pending.push_back(rel);
    }

  auto& rules = sys->rules_;
  auto add_pairs = [&](const RewriteRule& a, const RewriteRule& b) {
    std::size_t la = a.lhs.size(), lb = b.lhs.size();
    for (std::size_t k = 1; k < std::min(la, lb); ++k) {
      if (la + lb - k > static_cast<std::size_t>(height)) continue;
      if (a.lhs.compare(la - k, k, b.lhs, 0, k) != 0) continue;
      Word tail = b.lhs.substr(k), head = a.lhs.substr(0, la - k);
      pending.push_back(difference(concat("", a.rhs, tail), concat(head, b.rhs, "")));
    }
  };
  while (!pending.empty()) {
    std::sort(pending.begin(), pending.end(), [](const WordPoly& x, const WordPoly& y) {
      std::size_t lx = x.empty() ? 0 : x.begin()->first.size(), ly = y.empty() ? 0 : y.begin()->first.size();
      return lx > ly;
    });
    WordPoly p = reduce_poly(std::move(pending.back()), rules);
    pending.pop_back();
    if (p.empty()) continue;
    auto lead = std::prev(p.end());
    if (!is_unit(lead->second))
      throw Error(ErrorKind::NonConfluent, "completion produced a non-unit leading coefficient " + lead->second.str());
    RewriteRule rule;
    rule.lhs = lead->first;
    QPoly inv = qmono(-lead->second.data()[0], -lead->second.low());
    for (auto it = p.begin(); it != lead; ++it) rule.rhs.emplace(it->first, it->second * inv);
    std::vector<RewriteRule> kept;
    for (auto& r : rules) {
      if (r.lhs.find(rule.lhs) != Word::npos) {
        WordPoly back = r.rhs;
        add_term(back, r.lhs, QPoly(-1));
        pending.push_back(back);
      } else {
        kept.push_back(std::move(r));
      }
    }
    rules = std::move(kept);
    rules.push_back(rule);
    for (auto& r : rules) {
      add_pairs(rule, r);
      if (&r != &rules.back()) add_pairs(r, rule);
    }
  }
  for (auto& r : rules) r.rhs = reduce_poly(r.rhs, rules);
  std::sort(rules.begin(), rules.end(), [](const RewriteRule& a, const RewriteRule& b) {
    return a.lhs.size() != b.lhs.size() ? a.lhs.size() < b.lhs.size() : a.lhs < b.lhs;
  });

  // PBW count certification
  std::map<IVec, std::uint64_t> counts;
  Word cur;
  std::function<void()> dfs = [&]() {
    ++counts[word_weight(cur, n)];
    if (static_cast<int>(cur.size()) == height) return;
    for (int i = 0; i < n; ++i) {
      cur.push_back(char(i));
      bool ok = true;
      for (auto& r : rules)
        if (cur.size() >= r.lhs.size() && cur.compare(cur.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
          ok = false;
          break;
        }
      if (ok) dfs();
      cur.pop_back();
    }
  };
  dfs();
  for (int h = 0; h <= height; ++h)
    for (auto& nu : weights_of_height(n, h)) {
      auto it = counts.find(nu);
      std::uint64_t got = it == counts.end() ? 0 : it->second;
      if (got != kostant_partition(*rs, nu))
        throw Error(ErrorKind::NonConfluent, "normal-word count differs from the partition count");
    }
  return sys;
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (auto& r : rules_)
    if (w.find(r.lhs) != Word::npos) return false;
  return true;
}

void RewriteSystem::check_height(const IVec& nu) const {
  if (static_cast<int>(nu.size()) != rs_->rank()) throw Error(ErrorKind::Domain, "weight has the wrong rank");
  for (int v : nu)
    if (v < 0) throw Error(ErrorKind::Domain, "weight is not in the positive cone");
  if (vec_height(nu) > H_) throw Error(ErrorKind::HeightTooLarge, "height exceeds the rewrite bound");
}

WordPoly RewriteSystem::normal_form(const Word& w) const {
  if (static_cast<int>(w.size()) > H_) throw Error(ErrorKind::HeightTooLarge, "word longer than the rewrite bound");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = nf_.find(w);
  if (it != nf_.end()) return it->second;
  WordPoly out;
  auto [pos, r] = find_redex(w, rules_, false);
  if (r < 0) {
    out.emplace(w, QPoly(1));
  } else {
    const Word& l = rules_[r].lhs;
    Word pre = w.substr(0, pos), post = w.substr(pos + l.size());
    for (auto& [u, c] : rules_[r].rhs)
      for (auto& [v, cv] : normal_form(pre + u + post)) add_term(out, v, c * cv);
  }
  nf_.emplace(w, out);
  return out;
}

WordPoly RewriteSystem::normal_form_by(const Word& w, bool rightmost) const {
  WordPoly cur{{w, QPoly(1)}};
  WordPoly done;
  while (!cur.empty()) {
    auto it = std::prev(cur.end());
    Word x = it->first;
    QPoly c = it->second;
    cur.erase(it);
    auto [pos, r] = find_redex(x, rules_, rightmost);
    if (r < 0) {
      add_term(done, x, c);
      continue;
    }
    const Word& l = rules_[r].lhs;
    Word pre = x.substr(0, pos), post = x.substr(pos + l.size());
    for (auto& [u, cu] : rules_[r].rhs) add_term(cur, pre + u + post, c * cu);
  }
  return done;
}

RewriteSystem::WeightData& RewriteSystem::data(const IVec& nu) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = weights_.find(nu);
  if (it != weights_.end()) return it->second;
  WeightData d;
  const int n = rs_->rank();
  IVec left = nu;
  Word cur;
  std::function<void()> dfs = [&]() {
    if (vec_height(left) == 0) {
      d.words.push_back(cur);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (left[i] == 0) continue;
      cur.push_back(char(i));
      bool ok = true;
      for (auto& r : rules_)
        if (cur.size() >= r.lhs.size() && cur.compare(cur.size() - r.lhs.size(), r.lhs.size(), r.lhs) == 0) {
          ok = false;
          break;
        }
      if (ok) {
        --left[i];
        dfs();
        ++left[i];
      }
      cur.pop_back();
    }
  };
  dfs();
  std::sort(d.words.begin(), d.words.end());
  for (std::size_t k = 0; k < d.words.size(); ++k) d.index.emplace(d.words[k], static_cast<int>(k));
  return weights_.emplace(nu, std::move(d)).first->second;
}

const std::vector<Word>& RewriteSystem::basis(const IVec& nu) const {
  check_height(nu);
  return data(nu).words;
}

const std::vector<RewriteSystem::Lowering>& RewriteSystem::lowering(const IVec& nu, int c, int i) const {
  check_height(nu);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  WeightData& d = data(nu);
  if (!d.lowered) {
    const int n = rs_->rank();
    d.low.assign(d.words.size(), std::vector<std::vector<Lowering>>(n));
    for (int j = 0; j < n; ++j) {
      if (nu[j] == 0) continue;
      IVec sub = nu;
      --sub[j];
      WeightData& ds = data(sub);
      for (std::size_t k = 0; k < d.words.size(); ++k) {
        const Word& w = d.words[k];
        long pair = 0;
        for (long p = static_cast<long>(w.size()) - 1; p >= 0; --p) {
          if (w[p] == char(j)) {
            Lowering low;
            low.pair = pair;
            for (auto& [u, cu] : normal_form(w.substr(0, p) + w.substr(p + 1))) low.vec.emplace_back(ds.index.at(u), cu);
            d.low[k][j].push_back(std::move(low));
          }
          pair += rs_->form(j, static_cast<int>(w[p]));
        }
      }
    }
    d.lowered = true;
  }
  return d.low[c][i];
}

Cyclotomic CycloEval::q_power(long k) const {
  long e = ((k % ell) + ell) % ell;
  return Cyclotomic::zeta(static_cast<unsigned>(ell), e);
}

Cyclotomic CycloEval::from_q(const QPoly& p) const {
  Cyclotomic r;
  for (int e = p.low(); e <= p.high(); ++e) {
    long c = p.coeff(e);
    if (c) r += Cyclotomic(c) * q_power(e);
  }
  return r;
}

MPoly PolyEval::q_power(long k) const {
  Exponents e{};
  e[VQ] = static_cast<int>(g * k);
  return MPoly::monomial(Cyclotomic(1), e);
}

MPoly PolyEval::from_q(const QPoly& p) const {
  MPoly r;
  for (int e = p.low(); e <= p.high(); ++e) {
    long c = p.coeff(e);
    if (c) r += q_power(e).scale(Cyclotomic(c));
  }
  return r;
}

CycloEval eval_at_root_of_unity(const ToralWeight& w, long ell) {
  CycloEval ev;
  ev.ell = ell;
  ev.K = specialize(w, ell).values;
  for (auto& k : ev.K) ev.Kinv.push_back(k.inverse());
  return ev;
}

PolyEval eval_generic(const ToralWeight& w, bool with_t) {
  PolyEval ev;
  long g = 1;
  for (auto& c : w.c()) g = lcm_long(g, c.get_den().get_si());
  ev.g = static_cast<int>(g);
  const RootSystem& rs = w.root_system();
  for (int i = 0; i < rs.rank(); ++i) {
    Rational ci = w.c()[i] * g;
    Exponents e{};
    e[VQ] = static_cast<int>(ci.get_num().get_si());
    if (with_t) e[VT] = rs.d(i);
    Cyclotomic z = Cyclotomic::root_of_unity(w.t()[i]);
    ev.K.push_back(MPoly::monomial(z, e));
    Exponents ne{};
    for (int k = 0; k < kMaxVars; ++k) ne[k] = -e[k];
    ev.Kinv.push_back(MPoly::monomial(z.inverse(), ne));
  }
  return ev;
}

PolyEval eval_symbolic(const RootSystem& rs) {
  if (rs.rank() > 4) throw Error(ErrorKind::TooLarge, "at most four symbolic weight variables");
  PolyEval ev;
  for (int i = 0; i < rs.rank(); ++i) {
    ev.K.push_back(MPoly::var(VZ1 + i));
    ev.Kinv.push_back(MPoly::var(VZ1 + i, -1));
  }
  return ev;
}

PolyEval eval_rational(const std::vector<Rational>& r) {
  PolyEval ev;
  for (auto& x : r) {
    if (x == 0) throw Error(ErrorKind::ZeroInput, "weight value must be nonzero");
    ev.K.push_back(MPoly(Cyclotomic(x)));
    ev.Kinv.push_back(MPoly(Cyclotomic(Rational(1) / x)));
  }
  return ev;
}

template <class T, class Ev>
const Matrix<T>& GramEngine<T, Ev>::gram(const IVec& nu) {
  auto it = cache_.find(nu);
  if (it != cache_.end()) return it->second;
  const RewriteSystem& sys = *sys_;
  const auto& B = sys.basis(nu);
  const std::size_t N = B.size();
  Matrix<T> G(N, N);
  if (vec_height(nu) == 0) {
    G(0, 0) = T(1);
    return cache_.emplace(nu, std::move(G)).first->second;
  }
  const int n = sys.root_system().rank();
  // E_i on each basis word, as vectors over the basis of nu - alpha_i
  std::vector<std::vector<std::vector<T>>> E(n);
  for (int i = 0; i < n; ++i) {
    if (nu[i] == 0) continue;
    IVec sub = nu;
    --sub[i];
    std::size_t M = sys.basis(sub).size();
    E[i].assign(N, std::vector<T>(M, T(0)));
    for (std::size_t c = 0; c < N; ++c)
      for (auto& low : sys.lowering(nu, static_cast<int>(c), i)) {
        T br = ev_.K[i] * ev_.q_power(-low.pair) - ev_.Kinv[i] * ev_.q_power(low.pair);
        if (is_zero(br)) continue;
        for (auto& [b, qc] : low.vec) E[i][c][b] += br * ev_.from_q(qc);
      }
  }
  for (std::size_t r = 0; r < N; ++r) {
    const Word& u = B[r];
    int i = static_cast<int>(u[0]);
    IVec sub = nu;
    --sub[i];
    const Matrix<T>& Gs = gram(sub);
    const auto& Bs = sys.basis(sub);
    std::size_t rs = std::lower_bound(Bs.begin(), Bs.end(), u.substr(1)) - Bs.begin();
    for (std::size_t c = 0; c < N; ++c) {
      T acc(0);
      for (std::size_t b = 0; b < Bs.size(); ++b)
        if (!is_zero(E[i][c][b]) && !is_zero(Gs(rs, b))) acc += E[i][c][b] * Gs(rs, b);
      G(r, c) = acc;
    }
  }
  return cache_.emplace(nu, std::move(G)).first->second;
}

template <class T, class Ev>
GramReport<T> GramEngine<T, Ev>::report(const IVec& nu, bool with_det) {
  GramReport<T> rep;
  rep.nu = nu;
  rep.basis = sys_->basis(nu);
  rep.gram = gram(nu);
  if (with_det) {
    T det(0);
    rep.rank = bareiss(rep.gram, &det);
    rep.det = det;
  } else {
    rep.rank = rank(rep.gram);
  }
  return rep;
}

template class GramEngine<Cyclotomic, CycloEval>;
template class GramEngine<MPoly, PolyEval>;

std::vector<ShapovalovFactor> shapovalov_factors(const RootSystem& rs, const IVec& nu) {
  std::vector<ShapovalovFactor> out;
  int h = vec_height(nu);
  for (int k = 0; k < rs.num_positive(); ++k) {
    const IVec& a = rs.root(k);
    for (int m = 1; m <= h; ++m) {
      IVec rest = nu;
      bool ok = true;
      for (int i = 0; i < rs.rank(); ++i) {
        rest[i] -= m * a[i];
        if (rest[i] < 0) ok = false;
      }
      out.push_back({k, m, ok ? kostant_partition(rs, rest) : 0});
    }
  }
  return out;
}

std::pair<MPoly, MPoly> shapovalov_factor_value(const RootSystem& rs, const ShapovalovFactor& f, const PolyEval& ev) {
  const IVec& a = rs.root(f.root);
  long da = rs.norm(f.root) / 2;
  long rho_a = 0;
  MPoly Ka(1), Kinv(1);
  for (int i = 0; i < rs.rank(); ++i) {
    rho_a += a[i] * rs.d(i);
    Ka *= ev.K[i].pow(a[i]);
    Kinv *= ev.Kinv[i].pow(a[i]);
  }
  long r = rho_a - f.m * da;
  MPoly br = Ka * ev.q_power(r) - Kinv * ev.q_power(-r);
  MPoly qm = ev.from_q(quantum_int<long>(f.m, static_cast<int>(da)));
  return {qm * br, ev.q_power(da) - ev.q_power(-da)};
}

RatFunc shapovalov_det_formula(const RootSystem& rs, const IVec& nu, const PolyEval& ev) {
  MPoly num(1), den(1);
  for (auto& f : shapovalov_factors(rs, nu)) {
    if (f.exponent == 0) continue;
    auto [n, d] = shapovalov_factor_value(rs, f, ev);
    num *= n.pow(static_cast<unsigned>(f.exponent));
    den *= d.pow(static_cast<unsigned>(f.exponent));
  }
  return RatFunc(num, den);
}

CrossCheck det_formula_cross_check(RewriteSystemPtr sys, const IVec& nu, std::uint32_t seed, int substitutions,
                                   int symbolic_height) {
  const RootSystem& rs = sys->root_system();
  if (vec_height(nu) > 6) throw Error(ErrorKind::HeightTooLarge, "cross-check limited to height 6");
  CrossCheck out;
  out.nu = nu;
  std::mt19937 gen(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  bool ok = true;
  for (int s = 0; s < substitutions && ok; ++s) {
    std::vector<Rational> r;
    bool degenerate = true;
    while (degenerate) {
      r.clear();
      for (int i = 0; i < rs.rank(); ++i) {
        Rational x;
        do x = rat(num(gen), den(gen));
        while (x == 0);
        r.push_back(x);
      }
      // K_alpha = +-1 makes a factor vanish identically in q
      degenerate = false;
      for (int k = 0; k < rs.num_positive() && !degenerate; ++k) {
        Rational ka = 1;
        for (int i = 0; i < rs.rank(); ++i)
          for (int e = 0; e < std::abs(rs.root(k)[i]); ++e) ka *= rs.root(k)[i] > 0 ? r[i] : 1 / r[i];
        degenerate = ka * ka == 1;
      }
    }
    PolyEval ev = eval_rational(r);
    PolyGram engine(sys, ev);
    MPoly det = determinant(engine.gram(nu));
    if (det.is_zero()) {
      ok = false;
      break;
    }
    RatFunc ratio = RatFunc(det) / shapovalov_det_formula(rs, nu, ev);
    if (s == 0) out.ratio = ratio;
    else if (ratio != out.ratio) ok = false;
  }
  if (ok && vec_height(nu) <= symbolic_height) {
    PolyEval ev = eval_symbolic(rs);
    PolyGram engine(sys, ev);
    MPoly det = determinant(engine.gram(nu));
    ok = !det.is_zero() && RatFunc(det) == out.ratio * shapovalov_det_formula(rs, nu, ev);
    out.symbolic_checked = true;
  }
  out.unit = ok;
  return out;
}

std::vector<long> simple_graded_dims(RewriteSystemPtr sys, const ToralWeight& w, int height) {
  if (height > sys->height_bound()) throw Error(ErrorKind::HeightTooLarge, "height exceeds the rewrite bound");
  PolyGram engine(sys, eval_generic(w));
  std::vector<long> dims;
  for (int j = 0; j <= height; ++j) {
    long s = 0;
    for (auto& nu : weights_of_height(sys->root_system().rank(), j)) s += static_cast<long>(rank(engine.gram(nu)));
    dims.push_back(s);
  }
  return dims;
}

int baby_verma_height(const RootSystem& rs, long ell) {
  long h = 0;
  for (int k = 0; k < rs.num_positive(); ++k) h += rs.height(k);
  return static_cast<int>((ell - 1) * h);
}

namespace {

IVec two_rho(const RootSystem& rs) {
  IVec v(rs.rank(), 0);
  for (int k = 0; k < rs.num_positive(); ++k)
    for (int i = 0; i < rs.rank(); ++i) v[i] += rs.root(k)[i];
  return v;
}

}  // namespace

BabyVermaReport baby_verma_head(RewriteSystemPtr sys, const ToralWeight& w, long ell) {
  if (!is_admissible(ell, w)) throw Error(ErrorKind::InadmissibleOrder, "order " + std::to_string(ell) + " is not admissible");
  const RootSystem& rs = sys->root_system();
  BabyVermaReport rep;
  rep.ell = ell;
  rep.lambda = specialize(w, ell);
  rep.truncation = baby_verma_height(rs, ell);
  if (rep.truncation > sys->height_bound())
    throw Error(ErrorKind::HeightTooLarge, "baby Verma needs height " + std::to_string(rep.truncation));
  IVec box = two_rho(rs);
  for (auto& b : box) b *= static_cast<int>(ell - 1);
  CycloGram engine(sys, eval_at_root_of_unity(w, ell));
  for (int j = 0; j <= rep.truncation; ++j) {
    long s = 0;
    for (auto& nu : weights_of_height(rs.rank(), j)) {
      bool inside = true;
      for (int i = 0; i < rs.rank(); ++i)
        if (nu[i] > box[i]) inside = false;
      if (inside) s += static_cast<long>(rank(engine.gram(nu)));
    }
    rep.per_degree.push_back(s);
    rep.total += s;
  }
  return rep;
}

JantzenCheck jantzen_sum_check(RewriteSystemPtr sys, const ToralWeight& w, const IVec& nu) {
  const RootSystem& rs = sys->root_system();
  JantzenCheck out;
  PolyGram engine(sys, eval_generic(w, true));
  MPoly det = determinant(engine.gram(nu));
  out.lhs = vanishing_order(det, VT, Cyclotomic(1));
  for (auto& tp : t_set(w)) {
    IVec rest = nu;
    bool ok = true;
    for (int i = 0; i < rs.rank(); ++i) {
      rest[i] -= static_cast<int>(tp.m) * rs.root(tp.root)[i];
      if (rest[i] < 0) ok = false;
    }
    if (ok) out.rhs += static_cast<long>(kostant_partition(rs, rest));
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

GrowthReport growth_experiment(const ToralWeight& w, const std::vector<long>& ells, int m) {
  const RootSystem& rs = w.root_system();
  GrowthReport rep;
  if (ells.empty()) throw Error(ErrorKind::InsufficientData, "no orders given");
  int H = 0;
  for (long ell : ells) {
    if (!is_admissible(ell, w))
      throw Error(ErrorKind::InadmissibleOrder, "order " + std::to_string(ell) + " is not admissible");
    H = std::max(H, baby_verma_height(rs, ell));
  }
  auto sys = RewriteSystem::build(w.root_system_ptr(), H);
  PolyGram generic(sys, eval_generic(w));
  std::vector<long> lq;
  auto lq_dim = [&](int j) {
    while (static_cast<int>(lq.size()) <= j) {
      long s = 0;
      for (auto& nu : weights_of_height(rs.rank(), static_cast<int>(lq.size())))
        s += static_cast<long>(rank(generic.gram(nu)));
      lq.push_back(s);
    }
    return lq[j];
  };
  std::vector<GrowthSample> samples;
  rep.agreement_ok = true;
  for (long ell : ells) {
    BabyVermaReport b = baby_verma_head(sys, w, ell);
    GrowthRow row;
    row.sample.ell = ell;
    row.sample.total = b.total;
    for (long d : b.per_degree) row.sample.per_degree.push_back(Integer(d));
    long J = -1;
    for (int j = 0; j <= b.truncation; ++j) {
      if (b.per_degree[j] != lq_dim(j)) break;
      J = j;
    }
    row.agreement = J;
    if (static_cast<double>(J) < static_cast<double>(ell) / m) rep.agreement_ok = false;
    samples.push_back(row.sample);
    rep.rows.push_back(std::move(row));
  }
  rep.estimate = growth_exponent(samples);
  rep.gk = gk_dimension(w).d;
  return rep;
}

}  // namespace qgk
