#include "qgk/linalg.hpp"

#include <algorithm>

namespace qgk {

namespace {

// rows scaled by their denominators' product; returns the product of scalings
Matrix<MPoly> clear_denominators(const Matrix<RatFunc>& m, MPoly& scale) {
  Matrix<MPoly> out(m.rows, m.cols);
  scale = MPoly(1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    MPoly d(1);
    for (std::size_t j = 0; j < m.cols; ++j) {
      const MPoly& dj = m(i, j).den();
      if (dj == MPoly(1) || dj == d) continue;
      d = d * dj;
    }
    for (std::size_t j = 0; j < m.cols; ++j) {
      const RatFunc& x = m(i, j);
      out(i, j) = x.den() == MPoly(1) ? x.num() * d : x.num() * divide_exact(d, x.den());
    }
    scale = scale * d;
  }
  return out;
}

}  // namespace

std::size_t rank(const Matrix<RatFunc>& m) {
  MPoly s;
  return bareiss(clear_denominators(m, s));
}

RatFunc determinant(const Matrix<RatFunc>& m) {
  if (m.rows != m.cols) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
  MPoly s;
  Matrix<MPoly> p = clear_denominators(m, s);
  return RatFunc(determinant(p), s);
}

SmithForm smith_normal_form(const Matrix<Integer>& m0) {
  std::size_t n = m0.rows, c = m0.cols;
  Matrix<Integer> D = m0, U = Matrix<Integer>::identity(n), V = Matrix<Integer>::identity(c);
  auto row_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c; ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < n; ++j) std::swap(U(a, j), U(b, j));
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < n; ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < c; ++i) std::swap(V(i, a), V(i, b));
  };
  // row a -= f * row b
  auto row_add = [&](std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t j = 0; j < c; ++j) D(a, j) -= f * D(b, j);
    for (std::size_t j = 0; j < n; ++j) U(a, j) -= f * U(b, j);
  };
  auto col_add = [&](std::size_t a, std::size_t b, const Integer& f) {
    for (std::size_t i = 0; i < n; ++i) D(i, a) -= f * D(i, b);
    for (std::size_t i = 0; i < c; ++i) V(i, a) -= f * V(i, b);
  };
  std::size_t t = 0;
  while (t < std::min(n, c)) {
    // smallest nonzero entry in the remaining block
    std::size_t bi = n, bj = c;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (D(i, j) != 0 && (bi == n || abs(D(i, j)) < abs(D(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == n) break;
    row_swap(t, bi);
    col_swap(t, bj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (D(i, t) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        row_add(i, t, f);
        if (D(i, t) != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        col_add(j, t, f);
        if (D(t, j) != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // divisibility of the rest of the block
      for (std::size_t i = t + 1; i < n && clean; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            for (std::size_t k = 0; k < c; ++k) D(t, k) += D(i, k);
            for (std::size_t k = 0; k < n; ++k) U(t, k) += U(i, k);
            clean = false;
            break;
          }
    }
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < n; ++j) U(t, j) = -U(t, j);
    }
    ++t;
  }
  return {U, D, V};
}

int vanishing_order(const MPoly& f, int v, const Cyclotomic& value) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "vanishing order of zero");
  if (value.is_zero()) return f.min_degree(v);
  MPoly lin = MPoly::var(v) - MPoly(value);
  MPoly g = f;
  int k = 0;
  while (true) {
    auto q = try_divide(g, lin);
    if (!q) break;
    g = std::move(*q);
    ++k;
  }
  return k;
}

int vanishing_order(const RatFunc& f, int v, const Cyclotomic& value) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroInput, "vanishing order of zero");
  return vanishing_order(f.num(), v, value) - vanishing_order(f.den(), v, value);
}

}  // namespace qgk
