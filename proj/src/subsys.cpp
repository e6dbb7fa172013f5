#include "qgk/subsys.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "qgk/error.hpp"

namespace qgk {

std::string SubComponent::str() const {
  std::string s = std::string(1, letter) + std::to_string(rank);
  if (tag) s += std::string("^") + tag;
  return s;
}

int positive_count(char letter, int r) {
  switch (letter) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return r == 6 ? 36 : r == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  throw Error(ErrorKind::InvalidType, std::string("unknown letter ") + letter);
}

std::string canonical_label(std::vector<SubComponent> comps) {
  if (comps.empty()) return "empty";
  std::sort(comps.begin(), comps.end(), [](const SubComponent& a, const SubComponent& b) {
    return std::tie(a.letter, a.rank, a.tag) < std::tie(b.letter, b.rank, b.tag);
  });
  std::string s;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i) s += "x";
    s += comps[i].str();
  }
  return s;
}

namespace {

bool parent_is_doubly(const RootSystem& rs, int k) {
  char l = rs.type()[rs.component_of(k)].letter;
  return l == 'B' || l == 'C' || l == 'F' || l == 'G';
}

SubComponent identify(const RootSystem& rs, const std::vector<int>& simples, const std::vector<int>& roots) {
  SubComponent c;
  c.rank = static_cast<int>(simples.size());
  std::set<long> norms;
  for (int s : simples) norms.insert(rs.norm(s));
  int nroots = static_cast<int>(roots.size());
  int r = c.rank;
  if (norms.size() == 1) {
    if (nroots == r * (r + 1)) c.letter = 'A';
    else if (nroots == 2 * r * (r - 1)) c.letter = 'D';
    else if (r >= 6 && r <= 8) c.letter = 'E';
    else throw Error(ErrorKind::Domain, "unrecognized simply-laced component");
    if (parent_is_doubly(rs, simples[0])) c.tag = rs.is_long(simples[0]) ? 'L' : 'S';
  } else {
    long lo = *norms.begin(), hi = *norms.rbegin();
    if (hi == 3 * lo) c.letter = 'G';
    else if (r == 2) c.letter = 'B';
    else if (r == 4 && nroots == 48) c.letter = 'F';
    else {
      int nshort = 0;
      for (int k : roots) nshort += rs.norm(k) == lo;
      c.letter = nshort == 2 * r ? 'B' : 'C';
    }
  }
  c.num_positive = positive_count(c.letter, c.rank);
  return c;
}

}  // namespace

RootSubsystem::RootSubsystem(RootSystemPtr parent, std::vector<int> members) : parent_(std::move(parent)) {
  const RootSystem& rs = *parent_;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
  for (int k : members_) {
    if (k < 0 || k >= rs.num_roots()) throw Error(ErrorKind::Domain, "root index out of range");
    mask_.set(k);
  }
  for (int a : members_)
    for (int b : members_)
      if (!mask_.test(rs.reflect(a, b))) throw Error(ErrorKind::Domain, "not a root subsystem");
  for (int k : members_)
    if (rs.is_positive(k)) positive_.push_back(k);
  std::vector<char> composite(rs.num_roots(), 0);
  for (int a : positive_)
    for (int b : positive_) {
      int s = rs.sum(a, b);
      if (s >= 0) composite[s] = 1;
    }
  for (int a : positive_)
    if (!composite[a]) simple_.push_back(a);

  // components of the simple system
  int m = static_cast<int>(simple_.size());
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int i = 0; i < m; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = nc;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int j = 0; j < m; ++j)
        if (comp[j] < 0 && rs.inner(rs.root(simple_[x]), rs.root(simple_[j])) != 0) {
          comp[j] = nc;
          stack.push_back(j);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> csimple(nc), croots(nc);
  for (int i = 0; i < m; ++i) csimple[comp[i]].push_back(simple_[i]);
  for (int k : members_)
    for (int i = 0; i < m; ++i)
      if (rs.inner(rs.root(k), rs.root(simple_[i])) != 0) {
        croots[comp[i]].push_back(k);
        break;
      }
  for (int c = 0; c < nc; ++c) comps_.push_back(identify(rs, csimple[c], croots[c]));
  std::sort(comps_.begin(), comps_.end(), [](const SubComponent& a, const SubComponent& b) {
    return std::tie(a.letter, a.rank, a.tag) < std::tie(b.letter, b.rank, b.tag);
  });
  label_ = canonical_label(comps_);
}

RootSubsystem reflection_closure(RootSystemPtr rs, const std::vector<int>& seed) {
  std::vector<char> in(rs->num_roots(), 0);
  std::vector<int> list;
  auto add = [&](int k) {
    if (!in[k]) {
      in[k] = 1;
      list.push_back(k);
    }
  };
  for (int k : seed) {
    if (k < 0 || k >= rs->num_roots()) throw Error(ErrorKind::Domain, "root index out of range");
    add(k);
  }
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      int x = list[i], y = list[j];
      add(rs->reflect(x, y));
      add(rs->reflect(y, x));
    }
  return RootSubsystem(rs, list);
}

bool is_closed(const RootSubsystem& s) {
  const RootSystem& rs = s.parent();
  for (int a : s.members())
    for (int b : s.members()) {
      int c = rs.sum(a, b);
      if (c >= 0 && !s.contains(c)) return false;
    }
  return true;
}

RootSystemPtr dual_root_system(const RootSystem& rs) {
  int n = rs.rank();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g[i][j] = rat(4 * rs.form(i, j), rs.form(i, i) * rs.form(j, j));
  std::vector<std::vector<long>> out(n, std::vector<long>(n));
  // rescale each component so its shortest coroot has norm 2
  std::vector<Rational> scale(n);
  for (std::size_t c = 0; c < rs.type().size(); ++c) {
    Rational m = -1;
    for (int i : rs.component_simples(static_cast<int>(c)))
      if (m < 0 || g[i][i] < m) m = g[i][i];
    for (int i : rs.component_simples(static_cast<int>(c))) scale[i] = 2 / m;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = g[i][j] * scale[i];
      if (v.get_den() != 1) throw Error(ErrorKind::Domain, "dual form not integral");
      out[i][j] = v.get_num().get_si();
    }
  TypeLabel t = rs.type();
  for (auto& c : t) {
    if (c.letter == 'B' && c.rank >= 3) c.letter = 'C';
    else if (c.letter == 'C') c.letter = 'B';
  }
  return RootSystem::from_gram(out, t);
}

namespace {

int coroot_index(const RootSystem& rs, const RootSystem& du, int k) {
  IVec v(rs.rank());
  const IVec& b = rs.root(k);
  for (int i = 0; i < rs.rank(); ++i) {
    long num = b[i] * rs.form(i, i);
    if (num % rs.norm(k) != 0) throw Error(ErrorKind::Domain, "coroot not integral");
    v[i] = static_cast<int>(num / rs.norm(k));
  }
  int idx = du.index_of(v);
  if (idx < 0) throw Error(ErrorKind::Domain, "coroot missing in dual system");
  return idx;
}

}  // namespace

RootSubsystem dual(const RootSubsystem& s) {
  auto du = dual_root_system(s.parent());
  std::vector<int> m;
  for (int k : s.members()) m.push_back(coroot_index(s.parent(), *du, k));
  return RootSubsystem(du, m);
}

bool is_dual_closed(const RootSubsystem& s) { return is_closed(dual(s)); }

RootMask apply_mask(const Perm& p, const RootMask& m, int nroots) {
  RootMask r;
  for (int k = 0; k < nroots; ++k)
    if (m.test(k)) r.set(p[k]);
  return r;
}

RootMask canonical_mask(const WeylGroup& W, const RootMask& m) {
  int N = W.root_system().num_roots();
  RootMask best = m;
  for (std::size_t e = 0; e < W.size(); ++e) {
    RootMask c = apply_mask(W.perm(static_cast<int>(e)), m, N);
    if (c < best) best = c;
  }
  return best;
}

namespace {

std::vector<int> mask_members(const RootMask& m, int n) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k)
    if (m.test(k)) out.push_back(k);
  return out;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_irreducible(const RootSystem& rs) {
  if (!rs.irreducible()) throw Error(ErrorKind::Reducible, "irreducible type required");
}

}  // namespace

std::vector<BdsClass> borel_de_siebenthal(RootSystemPtr rs, std::size_t cap) {
  require_irreducible(*rs);
  int n = rs->rank();
  IVec h = rs->marks(0);
  int theta = rs->highest_root(0);
  std::unique_ptr<WeylGroup> W;
  try {
    W = std::make_unique<WeylGroup>(rs, cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GroupTooLarge) throw;
  }
  std::vector<BdsClass> out;
  std::set<RootMask> seen_mask;
  std::set<std::string> seen_label;
  for (int i = 0; i < n; ++i) {
    bool ext;
    if (h[i] == 1) ext = false;
    else if (is_prime(h[i])) ext = true;
    else continue;
    std::vector<int> seed;
    for (int j = 0; j < n; ++j)
      if (j != i) seed.push_back(j);
    if (ext) seed.push_back(rs->negate(theta));
    RootSubsystem sub = reflection_closure(rs, seed);
    if (W) {
      if (!seen_mask.insert(canonical_mask(*W, sub.mask())).second) continue;
    } else if (!seen_label.insert(sub.label()).second) {
      continue;
    }
    out.push_back({sub, i, h[i], ext});
  }
  return out;
}

std::vector<RootSubsystem> enumerate_subsystems(RootSystemPtr rs, std::size_t cap) {
  int N = rs->num_roots();
  if (N > 48) throw Error(ErrorKind::TooLarge, "enumeration limited to 48 roots");
  WeylGroup W(rs, cap);
  std::set<RootMask> seen;
  std::vector<RootMask> order;
  RootMask empty;
  seen.insert(empty);
  order.push_back(empty);
  for (std::size_t i = 0; i < order.size(); ++i) {
    RootMask cur = order[i];
    std::vector<int> base = mask_members(cur, N);
    for (int r = 0; r < rs->num_positive(); ++r) {
      if (cur.test(r)) continue;
      auto seed = base;
      seed.push_back(r);
      RootSubsystem t = reflection_closure(rs, seed);
      RootMask c = canonical_mask(W, t.mask());
      if (seen.insert(c).second) order.push_back(c);
    }
  }
  std::vector<RootSubsystem> out;
  for (const auto& m : order) out.emplace_back(rs, mask_members(m, N));
  std::stable_sort(out.begin(), out.end(), [](const RootSubsystem& a, const RootSubsystem& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.mask() < b.mask();
  });
  return out;
}

std::vector<RootSubsystem> maximal_subsystems_enumerated(RootSystemPtr rs) {
  auto all = enumerate_subsystems(rs);
  int N = rs->num_roots();
  std::vector<RootSubsystem> out;
  for (const auto& s : all) {
    if (s.size() == N) continue;
    bool maximal = true;
    for (int r = 0; r < rs->num_positive() && maximal; ++r) {
      if (s.contains(r)) continue;
      auto seed = s.members();
      seed.push_back(r);
      if (reflection_closure(rs, seed).size() != N) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

namespace {

// rank-normalized component; empty result for rank 0
std::vector<SubComponent> norm_comp(char letter, int r, char tag) {
  std::vector<SubComponent> out;
  auto push = [&](char l, int k, char t) {
    SubComponent c;
    c.letter = l;
    c.rank = k;
    c.tag = t;
    c.num_positive = positive_count(l, k);
    out.push_back(c);
  };
  if (r <= 0) return out;
  if (letter == 'B' && r == 1) push('A', 1, 'S');
  else if (letter == 'C' && r == 1) push('A', 1, 'L');
  else if (letter == 'C' && r == 2) push('B', 2, 0);
  else if (letter == 'D' && r == 2) {
    push('A', 1, tag);
    push('A', 1, tag);
  } else if (letter == 'D' && r == 3) push('A', 3, tag);
  else push(letter, r, (letter == 'B' || letter == 'C' || letter == 'F' || letter == 'G') ? 0 : tag);
  return out;
}

MaximalClass make_class(std::initializer_list<std::tuple<char, int, char>> parts) {
  std::vector<SubComponent> comps;
  for (auto [l, r, t] : parts) {
    auto v = norm_comp(l, r, t);
    comps.insert(comps.end(), v.begin(), v.end());
  }
  int cnt = 0;
  for (auto& c : comps) cnt += c.num_positive;
  return {canonical_label(comps), cnt};
}

}  // namespace

std::vector<MaximalClass> table1_catalog(const Component& c) {
  std::vector<MaximalClass> out;
  int n = c.rank;
  auto add = [&](MaximalClass m) {
    for (auto& x : out)
      if (x.label == m.label) return;
    out.push_back(m);
  };
  switch (c.letter) {
    case 'A':
      for (int i = 0; i <= n - 1; ++i) add(make_class({{'A', i, 0}, {'A', n - i - 1, 0}}));
      break;
    case 'B':
      for (int i = 1; i <= n - 1; ++i) add(make_class({{'B', i, 0}, {'B', n - i, 0}}));
      add(make_class({{'D', n, 'L'}}));
      break;
    case 'C':
      for (int i = 1; i <= n - 1; ++i) add(make_class({{'C', i, 0}, {'C', n - i, 0}}));
      add(make_class({{'D', n, 'S'}}));
      break;
    case 'D':
      add(make_class({{'A', n - 1, 0}}));
      add(make_class({{'D', n - 1, 0}}));
      for (int i = 2; i <= n - 2; ++i) add(make_class({{'D', i, 0}, {'D', n - i, 0}}));
      break;
    case 'E':
      if (n == 6) {
        add(make_class({{'D', 5, 0}}));
        add(make_class({{'A', 1, 0}, {'A', 5, 0}}));
        add(make_class({{'A', 2, 0}, {'A', 2, 0}, {'A', 2, 0}}));
      } else if (n == 7) {
        add(make_class({{'E', 6, 0}}));
        add(make_class({{'A', 1, 0}, {'D', 6, 0}}));
        add(make_class({{'A', 7, 0}}));
        add(make_class({{'A', 2, 0}, {'A', 5, 0}}));
      } else {
        add(make_class({{'D', 8, 0}}));
        add(make_class({{'A', 1, 0}, {'E', 7, 0}}));
        add(make_class({{'A', 8, 0}}));
        add(make_class({{'A', 2, 0}, {'E', 6, 0}}));
        add(make_class({{'A', 4, 0}, {'A', 4, 0}}));
      }
      break;
    case 'F':
      add(make_class({{'B', 4, 0}}));
      add(make_class({{'C', 4, 0}}));
      add(make_class({{'A', 2, 'L'}, {'A', 2, 'S'}}));
      break;
    case 'G':
      add(make_class({{'A', 1, 'L'}, {'A', 1, 'S'}}));
      add(make_class({{'A', 2, 'L'}}));
      add(make_class({{'A', 2, 'S'}}));
      break;
    default:
      throw Error(ErrorKind::InvalidType, "unknown type");
  }
  return out;
}

MaximalClass table1_psi_max(const Component& c) {
  int n = c.rank;
  switch (c.letter) {
    case 'A': return make_class({{'A', n - 1, 0}});
    case 'B': return make_class({{'D', n, 'L'}});
    case 'C': return make_class({{'D', n, 'S'}});
    case 'D': return make_class({{'D', n - 1, 0}});
    case 'E':
      if (n == 6) return make_class({{'D', 5, 0}});
      if (n == 7) return make_class({{'E', 6, 0}});
      return make_class({{'A', 1, 0}, {'E', 7, 0}});
    case 'F': return make_class({{'B', 4, 0}});
    case 'G': return make_class({{'A', 2, 'L'}});
  }
  throw Error(ErrorKind::InvalidType, "unknown type");
}

namespace {

bool enumerable(const RootSystemPtr& rs) {
  if (rs->num_roots() > 48) return false;
  try {
    WeylGroup W(rs);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GroupTooLarge) throw;
    return false;
  }
}

}  // namespace

std::vector<MaximalClass> maximal_subsystems(RootSystemPtr rs) {
  require_irreducible(*rs);
  if (!enumerable(rs)) return table1_catalog(rs->type()[0]);
  std::vector<MaximalClass> out;
  for (const auto& s : maximal_subsystems_enumerated(rs)) {
    MaximalClass m{s.label(), s.num_positive()};
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

int kappa0(RootSystemPtr rs) {
  require_irreducible(*rs);
  if (!enumerable(rs)) return rs->num_positive() - table1_psi_max(rs->type()[0]).positive_count;
  int best = 0;
  for (const auto& s : enumerate_subsystems(rs))
    if (s.size() != rs->num_roots()) best = std::max(best, s.num_positive());
  return rs->num_positive() - best;
}

std::string normalize_label(const std::string& catalog_label) {
  std::vector<SubComponent> comps;
  std::size_t i = 0;
  const std::string& s = catalog_label;
  while (i < s.size()) {
    if (s[i] == 'x' || s[i] == '*' || s[i] == ' ') {
      ++i;
      continue;
    }
    char letter = s[i++];
    if (letter < 'A' || letter > 'G') throw ParseError("bad component letter", i - 1);
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw ParseError("missing rank", i);
    int r = std::stoi(s.substr(i, j - i));
    i = j;
    char tag = 0;
    if (i + 1 < s.size() && s[i] == '^') {
      tag = s[i + 1];
      if (tag != 'L' && tag != 'S') throw ParseError("bad length tag", i + 1);
      i += 2;
    }
    auto v = norm_comp(letter, r, tag);
    comps.insert(comps.end(), v.begin(), v.end());
  }
  return canonical_label(comps);
}

int gamma_invariant(const RootSystem& rs) {
  require_irreducible(rs);
  long g = 1;
  for (int h : rs.marks(0))
    if (is_prime(h)) g = std::lcm(g, static_cast<long>(h));
  return static_cast<int>(g);
}

}  // namespace qgk
