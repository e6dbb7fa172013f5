#include "qgk/realize.hpp"

#include <map>
#include <numeric>

#include "qgk/error.hpp"
#include "qgk/linalg.hpp"

namespace qgk {

namespace {

Matrix<Integer> to_matrix(const std::vector<IVec>& rows, int n) {
  Matrix<Integer> m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return m;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::vector<IVec> congruence_solutions(const std::vector<IVec>& rows, int n, long M, std::size_t limit) {
  if (M < 1) throw Error(ErrorKind::Domain, "modulus must be positive");
  Matrix<Integer> V = Matrix<Integer>::identity(n);
  std::vector<long> step(n, 1);
  if (!rows.empty()) {
    SmithForm f = smith_normal_form(to_matrix(rows, n));
    V = f.V;
    for (int i = 0; i < n && i < static_cast<int>(rows.size()); ++i) {
      Integer d = f.D(i, i) % M;
      step[i] = M / std::gcd(std::abs(d.get_si()), M);
    }
  }
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(M / step[i]);
    if (total > limit) throw Error(ErrorKind::TooLarge, "congruence search space too large");
  }
  std::vector<IVec> out;
  out.reserve(total);
  IVec k(n, 0);
  for (std::size_t c = 0; c < total; ++c) {
    IVec x(n, 0);
    for (int r = 0; r < n; ++r) {
      Integer s = 0;
      for (int j = 0; j < n; ++j) s += V(r, j) * (k[j] * step[j]);
      Integer q = s % M;
      if (q < 0) q += M;
      x[r] = static_cast<int>(q.get_si());
    }
    out.push_back(x);
    for (int j = n - 1; j >= 0; --j) {
      if (++k[j] < M / step[j]) break;
      k[j] = 0;
    }
  }
  return out;
}

std::optional<ToralWeight> realize_subsystem(const RootSubsystem& psi, const FieldSpec& spec) {
  const RootSystem& rs = psi.parent();
  int n = rs.rank();
  if (spec.D < 0 || spec.g < 1) throw Error(ErrorKind::Domain, "invalid field spec");
  std::vector<IVec> simple;
  for (int k : psi.simple()) simple.push_back(rs.root(k));

  long D = spec.D;
  if (D == 0) {
    long E = 1;
    if (!simple.empty()) {
      SmithForm f = smith_normal_form(to_matrix(simple, n));
      for (std::size_t i = 0; i < simple.size() && i < static_cast<std::size_t>(n); ++i)
        if (f.D(i, i) != 0) E = std::max(E, std::abs(f.D(i, i).get_si()));
    }
    D = 2 * E;
    if (psi.rank() < n) {
      long P = rs.num_positive() + 1;
      while (!is_prime(P) || D % P == 0) ++P;
      D *= P;
    }
  }

  // torsion classes a/D with 2 a.alpha = 0 mod D on the simple system
  std::vector<IVec> trows;
  for (auto& a : simple) {
    IVec r(n);
    for (int j = 0; j < n; ++j) r[j] = 2 * a[j];
    trows.push_back(r);
  }
  auto torsions = congruence_solutions(trows, n, D);

  // exponents u/g with 2 u.alpha = 0 mod g (alpha, alpha), periodic mod M
  long L = 1;
  for (int k = 0; k < rs.num_positive(); ++k) L = std::lcm(L, rs.norm(k));
  long M = spec.g * L;
  std::vector<IVec> crows;
  for (int k : psi.simple()) {
    long scale = M / (spec.g * rs.norm(k));
    IVec r(n);
    for (int j = 0; j < n; ++j) r[j] = static_cast<int>(2 * rs.root(k)[j] * scale);
    crows.push_back(r);
  }
  auto exps = congruence_solutions(crows, n, M);

  auto dot = [n](const IVec& a, const IVec& b) {
    long s = 0;
    for (int j = 0; j < n; ++j) s += static_cast<long>(a[j]) * b[j];
    return s;
  };

  std::map<RootMask, std::optional<IVec>> memo;
  for (const auto& a : torsions) {
    RootMask at;
    std::vector<int> bad;
    for (int k = 0; k < rs.num_positive(); ++k)
      if (mod(2 * dot(a, rs.root(k)), D) == 0) {
        at.set(k);
        if (!psi.contains(k)) bad.push_back(k);
      }
    auto it = memo.find(at);
    if (it == memo.end()) {
      std::optional<IVec> found;
      for (const auto& u : exps) {
        bool ok = true;
        for (int k : bad)
          if (mod(2 * dot(u, rs.root(k)), spec.g * rs.norm(k)) == 0) {
            ok = false;
            break;
          }
        if (ok) {
          found = u;
          break;
        }
      }
      it = memo.emplace(at, found).first;
    }
    if (!it->second) continue;
    const IVec& u = *it->second;
    QVec t(n), c(n);
    for (int j = 0; j < n; ++j) {
      t[j] = rat(a[j], D);
      long v = u[j] > M / 2 ? u[j] - M : u[j];
      c[j] = rat(v, spec.g);
    }
    ToralWeight w(psi.parent_ptr(), t, c);
    if (!(phi_lambda(w) == psi)) throw Error(ErrorKind::Domain, "internal: realized weight has wrong integral subsystem");
    return w;
  }
  return std::nullopt;
}

ToralWeight cartan_closed_witness(const BdsClass& cls) {
  if (!cls.extended || !is_prime(cls.mark))
    throw Error(ErrorKind::NotApplicable, "witness needs a deleted node with prime mark");
  const RootSystem& rs = cls.sub.parent();
  int n = rs.rank();
  QVec t(n, Rational(0)), c(n, Rational(0));
  t[cls.node] = rat(1, 2 * cls.mark);
  c[cls.node] = rs.d(cls.node);
  ToralWeight w(cls.sub.parent_ptr(), t, c);
  if (!(phi_lambda(w) == cls.sub)) throw Error(ErrorKind::Domain, "witness does not realize the subsystem");
  return w;
}

}  // namespace qgk
