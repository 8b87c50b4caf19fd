#pragma once
// Laurent polynomials in v (q = v^2) with exact rational coefficients, plus
// rational functions whose denominators are products of (1 - q^r). Equality
// of rational functions is decided exactly by cross-multiplication; series
// expansions are used only for display and for matching enumerated graded
// dimensions on an explicit window.

#include <map>
#include <set>

#include "nilhecke/field.hpp"

namespace nilhecke {

struct Laurent {
  std::map<int, Rational> c;  // v-exponent -> coefficient

  static Laurent zero() { return {}; }
  static Laurent one() { return vpow(0); }
  static Laurent vpow(int k, Rational a = Rational(1)) {
    Laurent l;
    if (!(a == Rational(0))) l.c[k] = a;
    return l;
  }
  static Laurent qpow(int k, Rational a = Rational(1)) { return vpow(2 * k, a); }

  // Balanced quantum integer [n] = v^{n-1} + v^{n-3} + ... + v^{1-n}.
  static Laurent quantum_int(int n) {
    Laurent l;
    nh_check(n >= 0, "quantum_int: negative");
    for (int k = n - 1; k >= 1 - n; k -= 2) l.c[k] = Rational(1);
    return l;
  }

  void add(int k, const Rational& a) {
    auto it = c.find(k);
    if (it == c.end()) {
      if (!(a == Rational(0))) c.emplace(k, a);
    } else {
      it->second += a;
      if (it->second == Rational(0)) c.erase(it);
    }
  }

  bool is_zero() const { return c.empty(); }
  Rational coeff(int k) const {
    auto it = c.find(k);
    return it == c.end() ? Rational(0) : it->second;
  }
  int min_exp() const {
    nh_check(!c.empty(), "min_exp of 0");
    return c.begin()->first;
  }
  int max_exp() const {
    nh_check(!c.empty(), "max_exp of 0");
    return c.rbegin()->first;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (auto& [k, v] : b.c) r.add(k, v);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (auto& [k, v] : b.c) r.add(k, -v);
    return r;
  }
  Laurent operator-() const {
    Laurent r;
    for (auto& [k, v] : c) r.c.emplace(k, -v);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [k1, v1] : a.c)
      for (auto& [k2, v2] : b.c) r.add(k1 + k2, v1 * v2);
    return r;
  }
  Laurent scaled(const Rational& a) const {
    Laurent r;
    if (a == Rational(0)) return r;
    for (auto& [k, v] : c) r.c.emplace(k, v * a);
    return r;
  }
  Laurent shifted(int d) const {  // multiply by v^d
    Laurent r;
    for (auto& [k, v] : c) r.c.emplace(k + d, v);
    return r;
  }
  Laurent bar() const {  // v -> v^{-1}
    Laurent r;
    for (auto& [k, v] : c) r.c.emplace(-k, v);
    return r;
  }
  Laurent truncated(int lo, int hi) const {
    Laurent r;
    for (auto& [k, v] : c)
      if (lo <= k && k <= hi) r.c.emplace(k, v);
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c == b.c; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  // Printed in v by default; str_q renders even-exponent elements in q.
  std::string str(const char* var = "v", int step = 1) const {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, v] : c) {
      nh_check(k % step == 0, "Laurent::str: exponent not a multiple of step");
      std::string cs = field_str(v);
      bool neg = cs[0] == '-';
      if (neg) cs = cs.substr(1);
      int e = k / step;
      std::string body;
      if (e == 0)
        body = cs;
      else {
        body = var;
        if (e != 1) body += "^" + std::to_string(e);
        if (cs != "1") body = cs + "*" + body;
      }
      if (first) {
        s = neg ? "-" + body : body;
        first = false;
      } else {
        s += neg ? " - " : " + ";
        s += body;
      }
    }
    return s;
  }
  bool even_only() const {
    for (auto& [k, v] : c)
      if (k % 2) return false;
    return true;
  }
  std::string str_q() const { return str("q", 2); }
};

// 1 - q^r as a Laurent polynomial in v.
inline Laurent one_minus_q(int r) {
  Laurent l = Laurent::one();
  l.add(2 * r, Rational(-1));
  return l;
}

// num / prod_{r in den} (1 - q^r). Exact arithmetic; no truncation except in
// expand().
struct RatFunc {
  Laurent num;
  std::multiset<int> den;

  static RatFunc zero() { return {}; }
  static RatFunc from(Laurent l) { return {std::move(l), {}}; }
  static RatFunc one() { return from(Laurent::one()); }

  static Laurent den_poly(const std::multiset<int>& d) {
    Laurent p = Laurent::one();
    for (int r : d) p = p * one_minus_q(r);
    return p;
  }

  RatFunc over(int r) const {  // divide by (1 - q^r)
    RatFunc f = *this;
    f.den.insert(r);
    return f;
  }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    RatFunc r{a.num * b.num, a.den};
    for (int x : b.den) r.den.insert(x);
    return r;
  }
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    // common denominator: union with max multiplicities
    std::multiset<int> d;
    std::set<int> keys(a.den.begin(), a.den.end());
    keys.insert(b.den.begin(), b.den.end());
    std::multiset<int> extra_a, extra_b;
    for (int r : keys) {
      std::size_t ma = a.den.count(r), mb = b.den.count(r), m = std::max(ma, mb);
      for (std::size_t i = 0; i < m; ++i) d.insert(r);
      for (std::size_t i = ma; i < m; ++i) extra_a.insert(r);
      for (std::size_t i = mb; i < m; ++i) extra_b.insert(r);
    }
    return {a.num * den_poly(extra_a) + b.num * den_poly(extra_b), d};
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + RatFunc{-b.num, b.den};
  }
  RatFunc scaled(const Rational& a) const { return {num.scaled(a), den}; }
  RatFunc shifted(int dv) const { return {num.shifted(dv), den}; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    // cross-multiply; denominators are nonzero polynomials
    return a.num * den_poly(b.den) == b.num * den_poly(a.den);
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  bool is_zero() const { return num.is_zero(); }

  // Power-series expansion (ascending in v), truncated to exponents <= hi.
  Laurent expand(int hi) const {
    Laurent r = num;
    if (r.is_zero()) return r;
    r = r.truncated(r.min_exp(), hi);
    for (int f : den) {
      if (r.is_zero()) return r;
      int terms = (hi - r.min_exp()) / (2 * f);
      Laurent geo;
      for (int k = 0; k <= std::max(0, terms); ++k) geo.add(2 * f * k, Rational(1));
      r = (r * geo).truncated(r.min_exp(), hi);
    }
    return r;
  }

  std::string str() const {
    std::string s = "(" + num.str() + ")";
    if (!den.empty()) {
      s += " / ";
      int last = -1, mult = 0;
      auto flush = [&] {
        if (mult == 0) return;
        s += "(1-q";
        if (last != 1) s += "^" + std::to_string(last);
        s += ")";
        if (mult > 1) s += "^" + std::to_string(mult);
      };
      for (int r : den) {
        if (r == last)
          ++mult;
        else {
          flush();
          last = r;
          mult = 1;
        }
      }
      flush();
    }
    return s;
  }
};

}  // namespace nilhecke
