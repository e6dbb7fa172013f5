#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace qgk {

// dense univariate Laurent polynomial sum_k c_k x^(low+k)
template <class C>
class Laurent {
 public:
  Laurent() = default;
  Laurent(const C& c) {
    if (c != C(0)) c_.push_back(c);
  }
  static Laurent monomial(const C& c, int e) {
    Laurent r(c);
    r.low_ = e;
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  C coeff(int e) const {
    if (e < low_ || e > high()) return C(0);
    return c_[e - low_];
  }
  const std::vector<C>& data() const { return c_; }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Laurent& operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<C> c(hi - lo + 1, C(0));
    for (std::size_t k = 0; k < c_.size(); ++k) c[low_ - lo + k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) c[o.low_ - lo + k] += o.c_[k];
    low_ = lo;
    c_ = std::move(c);
    trim();
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += -o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    Laurent r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // x -> x^{-1}
  Laurent bar() const {
    Laurent r;
    if (is_zero()) return r;
    r.low_ = -high();
    r.c_.assign(c_.rbegin(), c_.rend());
    return r;
  }
  // x -> x^k
  Laurent dilate(int k) const {
    if (is_zero() || k == 1) return *this;
    if (k < 0) return bar().dilate(-k);
    Laurent r;
    r.low_ = low_ * k;
    r.c_.assign((c_.size() - 1) * k + 1, C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
  }
  // part with exponent >= 0 (resp. < 0)
  Laurent nonneg_part() const {
    Laurent r;
    for (int e = std::max(0, low_); e <= high(); ++e) r += monomial(coeff(e), e);
    return r;
  }

  std::string str(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e = high(); e >= low_; --e) {
      C c = coeff(e);
      if (c == C(0)) continue;
      bool neg = c < C(0);
      if (neg) c = -c;
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      if (e == 0) {
        os << c;
        continue;
      }
      if (c != C(1)) os << c << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    return os.str();
  }

 private:
  void trim() {
    std::size_t a = 0;
    while (a < c_.size() && c_[a] == C(0)) ++a;
    if (a == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    std::size_t b = c_.size();
    while (c_[b - 1] == C(0)) --b;
    c_ = std::vector<C>(c_.begin() + a, c_.begin() + b);
    low_ += static_cast<int>(a);
  }
  int low_ = 0;
  std::vector<C> c_;
};

// quantum integer [n]_{x^d}
template <class C>
Laurent<C> quantum_int(int n, int d = 1) {
  Laurent<C> r;
  if (n == 0) return r;
  int s = n > 0 ? 1 : -1;
  int m = n > 0 ? n : -n;
  for (int k = 0; k < m; ++k) r += Laurent<C>::monomial(C(s), d * (m - 1 - 2 * k));
  return r;
}

template <class C>
Laurent<C> quantum_binomial(int n, int k, int d = 1) {
  if (k < 0 || k > n) return Laurent<C>();
  // Pascal: [n,k] = x^{n-k}[n-1,k-1] + x^{-k}[n-1,k] (in x^d)
  std::vector<std::vector<Laurent<C>>> t(n + 1);
  for (int a = 0; a <= n; ++a) {
    t[a].assign(a + 1, Laurent<C>());
    t[a][0] = Laurent<C>(C(1));
    t[a][a] = Laurent<C>(C(1));
    for (int b = 1; b < a; ++b) {
      t[a][b] = Laurent<C>::monomial(C(1), d * (a - b)) * t[a - 1][b - 1] +
                Laurent<C>::monomial(C(1), -d * b) * t[a - 1][b];
    }
  }
  return t[n][k];
}

}  // namespace qgk
