#pragma once

#include <cstddef>
#include <vector>

#include "qgk/error.hpp"
#include "qgk/mpoly.hpp"

namespace qgk {

template <class T>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> a;
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, T(0)) {}
  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  Matrix transpose() const {
    Matrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k)
        for (std::size_t j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    return r;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

// ring hooks used by the elimination templates
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline bool is_zero(const MPoly& x) { return x.is_zero(); }
inline Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
inline Cyclotomic exact_div(const Cyclotomic& a, const Cyclotomic& b) { return a / b; }
inline MPoly exact_div(const MPoly& a, const MPoly& b) { return divide_exact(a, b); }
inline std::size_t pivot_cost(const Rational&) { return 0; }
inline std::size_t pivot_cost(const Cyclotomic& x) { return x.conductor() == 1 ? 0 : 1; }
inline std::size_t pivot_cost(const MPoly& x) { return x.size() * 64 + static_cast<std::size_t>(x.total_degree()); }

// fraction-free elimination; returns rank, and determinant through det if square
template <class T>
std::size_t bareiss(Matrix<T> m, T* det = nullptr) {
  std::size_t n = m.rows, c = m.cols, r = 0;
  T prev(1);
  bool neg = false;
  std::vector<std::size_t> colperm(c);
  for (std::size_t j = 0; j < c; ++j) colperm[j] = j;
  for (std::size_t k = 0; k < c && r < n; ++k) {
    // full pivoting over the remaining block by least cost
    std::size_t bi = n, bj = c, best = static_cast<std::size_t>(-1);
    for (std::size_t i = r; i < n; ++i) {
      for (std::size_t j = k; j < c; ++j) {
        const T& x = m(i, j);
        if (is_zero(x)) continue;
        std::size_t cost = pivot_cost(x);
        if (cost < best) {
          best = cost;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == n) break;
    if (bi != r) {
      for (std::size_t j = 0; j < c; ++j) std::swap(m(bi, j), m(r, j));
      neg = !neg;
    }
    if (bj != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(m(i, bj), m(i, k));
      neg = !neg;
    }
    const T piv = m(r, k);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < c; ++j) {
        T v = piv * m(i, j) - m(i, k) * m(r, j);
        m(i, j) = r == 0 ? v : exact_div(v, prev);
      }
      m(i, k) = T(0);
    }
    prev = piv;
    ++r;
  }
  if (det) {
    if (n != c) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
    if (r < n) *det = T(0);
    else *det = neg ? T(T(0) - m(n - 1, n - 1)) : T(m(n - 1, n - 1));
  }
  return r;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return bareiss(m);
}

template <class T>
T determinant(const Matrix<T>& m) {
  if (m.rows != m.cols) throw Error(ErrorKind::NonSquare, "determinant of non-square matrix");
  if (m.rows == 0) return T(1);
  T d(0);
  bareiss(m, &d);
  return d;
}

std::size_t rank(const Matrix<RatFunc>& m);
RatFunc determinant(const Matrix<RatFunc>& m);

struct SmithForm {
  Matrix<Integer> U, D, V;
};
// U*m*V = D
SmithForm smith_normal_form(const Matrix<Integer>& m);

// order of vanishing of f at x_v = value
int vanishing_order(const MPoly& f, int v, const Cyclotomic& value);
int vanishing_order(const RatFunc& f, int v, const Cyclotomic& value);

}  // namespace qgk
