#include "qgk/gk.hpp"

#include <cmath>

#include "qgk/error.hpp"
#include "qgk/hecke.hpp"

namespace qgk {

GkReport gk_dimension(const ToralWeight& w, std::size_t cap, bool allow_large) {
  LinkageData L = linkage(w, cap);
  CoxeterSystem W(L.group);
  AntidominantWitness wit = minimal_antidominant_witness(L);
  int a = 0;
  if (W.size() > 1) {
    KLBasis kl(W);
    a = a_function(kl, allow_large)[wit.element];
  }
  GkReport r{w, L.phi.label(), L.group->size(), W.word_string(wit.element), wit.length, a,
             w.root_system().num_positive(), 0};
  r.d = r.num_positive - a;
  return r;
}

Kappas kappas(RootSystemPtr rs) {
  if (!rs->irreducible()) throw Error(ErrorKind::Reducible, "irreducible type required");
  LatticeVector rho = rs->rho();
  Rational k1 = rs->pairing(rho, rs->highest_root(0));
  Rational k2 = rs->pairing(rho, rs->highest_short_root(0));
  return {kappa0(rs), static_cast<int>(k1.get_num().get_si()), static_cast<int>(k2.get_num().get_si())};
}

namespace {

std::vector<RootSubsystem> kappa0_classes(const RootSystemPtr& rs, int k0) {
  int target = rs->num_positive() - k0;
  std::vector<RootSubsystem> out;
  try {
    if (rs->num_roots() <= 48) {
      for (auto& s : enumerate_subsystems(rs))
        if (s.num_positive() == target && s.size() != rs->num_roots()) out.push_back(s);
      return out;
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::GroupTooLarge) throw;
  }
  // catalog path: long roots and Borel-de Siebenthal representatives of the right size
  std::vector<int> lng;
  for (int k = 0; k < rs->num_roots(); ++k)
    if (rs->is_long(k)) lng.push_back(k);
  if (static_cast<int>(lng.size()) < rs->num_roots()) {
    RootSubsystem s(rs, lng);
    if (s.num_positive() == target) out.push_back(s);
  }
  for (auto& c : borel_de_siebenthal(rs))
    if (c.sub.num_positive() == target) out.push_back(c.sub);
  return out;
}

}  // namespace

int min_gk(RootSystemPtr rs, const FieldSpec& spec) {
  Kappas k = kappas(rs);
  if (k.k0 >= k.k1) return k.k1;
  for (auto& s : kappa0_classes(rs, k.k0))
    if (realize_subsystem(s, spec)) return k.k0;
  return k.k1;
}

int min_gk(RootSystemPtr rs) { return min_gk(rs, FieldSpec{0, gamma_invariant(*rs)}); }

bool cuspidal_possible(const TypeLabel& type) {
  if (type.empty()) throw Error(ErrorKind::InvalidType, "empty type");
  for (auto& c : type)
    if (c.letter != 'A' && c.letter != 'B' && c.letter != 'C') return false;
  return true;
}

GrowthEstimate growth_exponent(const std::vector<std::pair<long, Integer>>& s) {
  if (s.size() < 2) throw Error(ErrorKind::InsufficientData, "need at least two samples");
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i].first <= s[i - 1].first) throw Error(ErrorKind::InsufficientData, "samples must have increasing ell");
  for (auto& p : s)
    if (p.second <= 0) throw Error(ErrorKind::Domain, "dimensions must be positive");
  std::size_t n = s.size();
  // divided differences: degree k is certified when the (k+1)-th differences vanish
  std::vector<Rational> dd;
  for (auto& p : s) dd.push_back(Rational(p.second));
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::vector<Rational> next;
    for (std::size_t i = 0; i + 1 < dd.size(); ++i) {
      Rational q = (dd[i + 1] - dd[i]) / Rational(s[i + k + 1].first - s[i].first);
      next.push_back(q);
    }
    bool zero = std::all_of(next.begin(), next.end(), [](const Rational& x) { return x == 0; });
    if (zero) return {static_cast<double>(k), true, static_cast<int>(k)};
    dd = std::move(next);
  }
  // monomial C * ell^k with integer k
  if (n >= 3) {
    double est = std::log(s[n - 1].second.get_d() / s[0].second.get_d()) / std::log(double(s[n - 1].first) / s[0].first);
    long k = std::lround(est);
    if (k >= 0) {
      Integer p0 = 1;
      mpz_pow_ui(p0.get_mpz_t(), Integer(s[0].first).get_mpz_t(), k);
      Rational C = Rational(s[0].second) / Rational(p0);
      C.canonicalize();
      bool ok = true;
      for (auto& [ell, dim] : s) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), Integer(ell).get_mpz_t(), k);
        if (Rational(dim) != C * Rational(pk)) ok = false;
      }
      if (ok) return {static_cast<double>(k), true, static_cast<int>(k)};
    }
  }
  auto& a = s[n - 2];
  auto& b = s[n - 1];
  double slope = std::log(b.second.get_d() / a.second.get_d()) / std::log(double(b.first) / a.first);
  return {slope, false, std::nullopt};
}

GrowthEstimate growth_exponent(const std::vector<GrowthSample>& samples) {
  std::vector<std::pair<long, Integer>> s;
  for (auto& g : samples) s.push_back({g.ell, g.total});
  return growth_exponent(s);
}

}  // namespace qgk
