#include <random>

#include "doctest.h"
#include "qgk/laurent.hpp"
#include "qgk/linalg.hpp"

using namespace qgk;

namespace {

// Leibniz expansion, independent of elimination
template <class T>
T leibniz(const Matrix<T>& m) {
  std::size_t n = m.rows;
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  T total(0);
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inv;
    T prod(1);
    for (std::size_t i = 0; i < n; ++i) prod = prod * m(i, p[i]);
    total = inv % 2 ? T(total - prod) : T(total + prod);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// textbook Gauss-Jordan over Q
std::size_t gauss_rank(Matrix<Rational> m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

Integer gcd_of_minors(const Matrix<Integer>& m, std::size_t k) {
  // all k x k minors
  Integer g = 0;
  std::vector<int> rs(m.rows, 0), cs(m.cols, 0);
  std::fill(rs.end() - k, rs.end(), 1);
  do {
    std::fill(cs.begin(), cs.end(), 0);
    std::fill(cs.end() - k, cs.end(), 1);
    do {
      Matrix<Integer> sub(k, k);
      std::size_t a = 0;
      for (std::size_t i = 0; i < m.rows; ++i) {
        if (!rs[i]) continue;
        std::size_t b = 0;
        for (std::size_t j = 0; j < m.cols; ++j) {
          if (!cs[j]) continue;
          sub(a, b++) = m(i, j);
        }
        ++a;
      }
      Integer d = leibniz(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    } while (std::next_permutation(cs.begin(), cs.end()));
  } while (std::next_permutation(rs.begin(), rs.end()));
  return g;
}

MPoly q_() { return MPoly::var(VQ); }
MPoly t_() { return MPoly::var(VT); }

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rational helpers") {
    CHECK(mod1(Rational(-1, 4)) == Rational(3, 4));
    CHECK(mod1(Rational(5, 2)) == Rational(1, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclo_field(1).poly == std::vector<long>{-1, 1});
    CHECK(cyclo_field(4).poly == std::vector<long>{1, 0, 1});
    CHECK(cyclo_field(6).poly == std::vector<long>{1, -1, 1});
    CHECK(cyclo_field(12).poly == std::vector<long>{1, 0, -1, 0, 1});
    for (unsigned n = 1; n <= 60; ++n) CHECK(cyclo_field(n).phi == euler_phi(n));
  }

  TEST_CASE("roots of unity") {
    for (unsigned n = 1; n <= 30; ++n) {
      Cyclotomic z = Cyclotomic::zeta(n);
      CHECK(z.pow(n) == Cyclotomic(1));
      if (n > 1) CHECK(z.pow(n - 1) != Cyclotomic(1));
    }
    for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      Cyclotomic s;
      for (unsigned k = 0; k < p; ++k) s += Cyclotomic::zeta(p, k);
      CHECK(s.is_zero());
      CHECK(s.conductor() == 1);
    }
    CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
    CHECK((Cyclotomic::zeta(4) * Cyclotomic::zeta(4)).conductor() == 1);
    // i * zeta5^-1 = zeta20^(5-4)
    CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(5, -1) == Cyclotomic::zeta(20, 1));
    CHECK(Cyclotomic::root_of_unity(Rational(3, 4)) == Cyclotomic::zeta(4, 3));
    CHECK(Cyclotomic::zeta(6) == -Cyclotomic::zeta(3, 2));
  }

  TEST_CASE("cyclotomic field operations") {
    std::mt19937 rng(11);
    for (unsigned n : {5u, 8u, 12u, 20u, 28u}) {
      for (int trial = 0; trial < 20; ++trial) {
        Cyclotomic a, b;
        for (int k = 0; k < 4; ++k) {
          a += Cyclotomic::zeta(n, rng() % n) * Cyclotomic(static_cast<long>(rng() % 7) - 3);
          b += Cyclotomic::zeta(n, rng() % n) * Cyclotomic(Rational(static_cast<long>(rng() % 5) + 1, 2));
        }
        if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
        CHECK((a + b) * (a - b) == a * a - b * b);
        if (!b.is_zero()) CHECK((a / b) * b == a);
      }
    }
    Cyclotomic i = Cyclotomic::zeta(4);
    Cyclotomic w = Cyclotomic::zeta(3);
    CHECK((i * w).conductor() == 12);
    CHECK((i * w) * (i * w).inverse() == Cyclotomic(1));
  }

  TEST_CASE("laurent polynomials") {
    using L = Laurent<long long>;
    CHECK(quantum_int<long long>(3) == L::monomial(1, 2) + L(1) + L::monomial(1, -2));
    CHECK(quantum_binomial<long long>(3, 1) == quantum_int<long long>(3));
    // [4,2] = [4][3]/[2]
    CHECK(quantum_binomial<long long>(4, 2) * quantum_int<long long>(2) == quantum_int<long long>(4) * quantum_int<long long>(3));
    CHECK(quantum_binomial<long long>(3, 1, 2) == quantum_int<long long>(3, 2));
    L x = L::monomial(1, 1) + L::monomial(2, -3);
    CHECK(x.bar().bar() == x);
    CHECK((x * x.bar()).bar() == x * x.bar());
    CHECK(x.nonneg_part() == L::monomial(1, 1));
  }

  TEST_CASE("multivariate polynomials and division") {
    MPoly q = q_(), t = t_();
    MPoly a = (q - MPoly(1)) * (t + q * q) * (q * t - MPoly(3));
    MPoly b = t + q * q;
    auto d = try_divide(a, b);
    REQUIRE(d.has_value());
    CHECK(*d == (q - MPoly(1)) * (q * t - MPoly(3)));
    CHECK_FALSE(try_divide(a, t - MPoly(5)).has_value());
    MPoly qi = MPoly::var(VQ, -1);
    MPoly c = (q - qi) * (q * t - qi);
    CHECK(divide_exact(c, q * t - qi) == q - qi);
    CHECK(a.substitute(VQ, Cyclotomic(1)).is_zero());
  }

  TEST_CASE("rank") {
    Matrix<Rational> id = Matrix<Rational>::identity(2);
    CHECK(rank(id) == 2);
    Matrix<Rational> p(2, 2);
    p(0, 1) = 1;
    p(1, 0) = 1;
    CHECK(rank(p) == 2);
    // A1 weight q^0, nu = alpha: [K;0] = 0
    Matrix<Cyclotomic> z(1, 1);
    z(0, 0) = Cyclotomic(1) - Cyclotomic(1);
    CHECK(rank(z) == 0);
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t r = 2 + rng() % 4, c = 2 + rng() % 4;
      Matrix<Rational> m(r, c);
      for (auto& x : m.a) x = Rational(static_cast<long>(rng() % 5) - 2);
      if (trial % 3 == 0) {
        for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j);
      }
      CHECK(rank(m) == gauss_rank(m));
      CHECK(rank(m) == rank(m.transpose()));
    }
  }

  TEST_CASE("determinant") {
    MPoly a = q_(), b = t_(), c = MPoly::var(VZ1), d = MPoly::var(VZ2);
    Matrix<MPoly> m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    CHECK(determinant(m) == a * d - b * c);
    Matrix<MPoly> one(1, 1);
    one(0, 0) = a;
    CHECK(determinant(one) == a);
    Matrix<MPoly> diag(2, 2);
    diag(0, 0) = a;
    diag(1, 1) = b;
    CHECK(determinant(diag) == a * b);
    CHECK_THROWS_AS(determinant(Matrix<MPoly>(2, 3)), Error);

    // multiplicativity over Q(zeta12)(q) and agreement with Leibniz
    std::mt19937 rng(7);
    auto rnd = [&]() {
      MPoly x;
      for (int k = 0; k < 2; ++k)
        x += MPoly::monomial(Cyclotomic::zeta(12, rng() % 12) * Cyclotomic(static_cast<long>(rng() % 3) + 1),
                             Exponents{static_cast<int>(rng() % 3) - 1, 0, 0, 0, 0, 0});
      return x;
    };
    for (std::size_t n : {2u, 3u}) {
      for (int trial = 0; trial < 4; ++trial) {
        Matrix<MPoly> x(n, n), y(n, n);
        for (auto& e : x.a) e = rnd();
        for (auto& e : y.a) e = rnd();
        MPoly dx = determinant(x), dy = determinant(y);
        CHECK(dx == leibniz(x));
        CHECK(determinant(x * y) == dx * dy);
      }
    }
  }

  TEST_CASE("rational function matrices") {
    MPoly q = q_();
    Matrix<RatFunc> m(2, 2);
    m(0, 0) = RatFunc(MPoly(1), q - MPoly(1));
    m(0, 1) = RatFunc(q);
    m(1, 0) = RatFunc(MPoly(1));
    m(1, 1) = RatFunc(q * q);
    CHECK(determinant(m) == RatFunc(q, q - MPoly(1)));
    CHECK(rank(m) == 2);
  }

  TEST_CASE("smith normal form") {
    Matrix<Integer> m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    SmithForm s = smith_normal_form(m);
    CHECK(s.D(0, 0) == 1);
    CHECK(s.D(1, 1) == 6);
    CHECK(s.U * m * s.V == s.D);
    Matrix<Integer> one(1, 1);
    one(0, 0) = 2;
    CHECK(smith_normal_form(one).D(0, 0) == 2);
    CHECK(smith_normal_form(Matrix<Integer>::identity(3)).D == Matrix<Integer>::identity(3));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
      Matrix<Integer> a(r, c);
      for (auto& x : a.a) x = static_cast<long>(rng() % 13) - 6;
      SmithForm f = smith_normal_form(a);
      CHECK(f.U * a * f.V == f.D);
      CHECK(abs(leibniz(f.U)) == 1);
      CHECK(abs(leibniz(f.V)) == 1);
      std::size_t k = std::min(r, c);
      Integer prod = 1;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < c; ++j)
          if (j != i) CHECK(f.D(i, j) == 0);
        if (i + 1 < k && f.D(i, i) != 0) CHECK(f.D(i + 1, i + 1) % f.D(i, i) == 0);
        // determinantal divisors
        prod *= f.D(i, i);
        CHECK(prod == gcd_of_minors(a, i + 1));
      }
    }
  }

  TEST_CASE("vanishing order") {
    MPoly t = t_(), q = q_();
    MPoly one(1);
    CHECK(vanishing_order(RatFunc((t - one) * (t - one)), VT, Cyclotomic(1)) == 2);
    CHECK(vanishing_order(RatFunc(one, t - one), VT, Cyclotomic(1)) == -1);
    MPoly qi = MPoly::var(VQ, -1), ti = MPoly::var(VT, -1);
    RatFunc f(t * q - qi * ti, q - qi);
    CHECK(vanishing_order(f, VT, Cyclotomic(1)) == 0);
    CHECK_THROWS_AS(vanishing_order(RatFunc(), VT, Cyclotomic(1)), Error);
    MPoly g = (t * t - one) * (t - Cyclotomic::zeta(3));
    MPoly h = (t - one).pow(3) * (t * q + one);
    CHECK(vanishing_order(g * h, VT, Cyclotomic(1)) ==
          vanishing_order(g, VT, Cyclotomic(1)) + vanishing_order(h, VT, Cyclotomic(1)));
    CHECK(vanishing_order(g, VT, Cyclotomic::zeta(3)) == 1);
  }
}
