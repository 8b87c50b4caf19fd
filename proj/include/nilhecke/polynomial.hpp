#pragma once
// Exact polynomials in x_1..x_n and a central variable y. They serve two
// roles: coefficient data of Hecke normal forms, and the carrier of the
// divided-difference representation used as an independent product oracle.
//
// Exponents are packed 6 bits per x-variable (<= 10 variables, exponent
// <= 63); every packing operation range-checks, so overflow is impossible
// rather than silent.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nilhecke/field.hpp"
#include "nilhecke/permutation.hpp"

namespace nilhecke {

constexpr int kMaxVars = 10;
constexpr int kMaxExp = 63;

using XPack = std::uint64_t;

inline int xp_get(XPack a, int i) {  // 1-based variable index
  return static_cast<int>((a >> (6 * (i - 1))) & 63u);
}

inline XPack xp_set(XPack a, int i, int e) {
  nh_check(1 <= i && i <= kMaxVars && 0 <= e && e <= kMaxExp, "xp_set: out of range");
  int sh = 6 * (i - 1);
  return (a & ~(63ull << sh)) | (static_cast<XPack>(e) << sh);
}

inline XPack xp_add_at(XPack a, int i, int e) {
  return xp_set(a, i, xp_get(a, i) + e);
}

inline XPack xp_add(XPack a, XPack b) {
  XPack r = a;
  for (int i = 1; i <= kMaxVars; ++i) {
    int e = xp_get(b, i);
    if (e) r = xp_add_at(r, i, e);
  }
  return r;
}

inline int xp_total(XPack a) {
  int t = 0;
  for (int i = 1; i <= kMaxVars; ++i) t += xp_get(a, i);
  return t;
}

// x_i -> x_{w(i)}; the new exponent at position w(i) is the old one at i.
inline XPack xp_apply_perm(XPack a, const Perm& w) {
  XPack r = 0;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    int e = xp_get(a, i);
    if (e) r = xp_set(r, w[i - 1] + 1, e);
  }
  for (int i = static_cast<int>(w.size()) + 1; i <= kMaxVars; ++i)
    nh_check(xp_get(a, i) == 0, "xp_apply_perm: exponent beyond permutation size");
  return r;
}

inline XPack xp_swap(XPack a, int i) {  // exchange exponents of x_i, x_{i+1}
  int p = xp_get(a, i), q = xp_get(a, i + 1);
  return xp_set(xp_set(a, i, q), i + 1, p);
}

inline XPack xp_shift(XPack a, int m) {  // x_i -> x_{m+i}
  XPack r = 0;
  for (int i = 1; i <= kMaxVars; ++i) {
    int e = xp_get(a, i);
    if (e) r = xp_set(r, i + m, e);
  }
  return r;
}

inline XPack xp_unshift(XPack a, int m) {
  XPack r = 0;
  for (int i = 1; i <= kMaxVars; ++i) {
    int e = xp_get(a, i);
    if (e) {
      nh_check(i > m, "xp_unshift: exponent below window");
      r = xp_set(r, i - m, e);
    }
  }
  return r;
}

// One-monomial divided difference:
//   d_i(x_i^p x_{i+1}^q . m) = sign(p - q) * sum_k x_i^k x_{i+1}^{p+q-1-k} . m
// with k running over [min(p,q), max(p,q) - 1]; zero when p = q. This is the
// single source of the Demazure formula; both the polynomial operator and the
// Hecke straightening rule call it.
inline std::vector<std::pair<XPack, int>> xp_divided_difference(XPack a, int i) {
  std::vector<std::pair<XPack, int>> out;
  int p = xp_get(a, i), q = xp_get(a, i + 1);
  if (p == q) return out;
  int sgn = p > q ? 1 : -1;
  int lo = std::min(p, q), hi = std::max(p, q);
  for (int k = lo; k <= hi - 1; ++k)
    out.push_back({xp_set(xp_set(a, i, k), i + 1, p + q - 1 - k), sgn});
  return out;
}

struct XKey {
  XPack px = 0;
  std::uint32_t y = 0;
  auto operator<=>(const XKey&) const = default;
};

// Append "x1^2*x3*y^4"-style factors to s (empty for the constant monomial).
inline void append_monomial_str(std::string& s, XPack px, std::uint32_t y) {
  auto star = [&s] {
    if (!s.empty()) s += '*';
  };
  for (int i = 1; i <= kMaxVars; ++i) {
    int e = xp_get(px, i);
    if (!e) continue;
    star();
    s += 'x';
    s += std::to_string(i);
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  if (y) {
    star();
    s += 'y';
    if (y > 1) {
      s += '^';
      s += std::to_string(y);
    }
  }
}

template <class F>
struct Poly {
  int n = 0;  // number of x-variables
  std::map<XKey, F> t;

  Poly() = default;
  explicit Poly(int n_) : n(n_) {}

  static Poly zero(int n) { return Poly(n); }
  static Poly constant(int n, F c) {
    Poly p(n);
    p.add_term(XKey{}, c);
    return p;
  }
  static Poly one(int n) { return constant(n, F(1)); }
  static Poly xvar(int n, int i) {
    nh_check(1 <= i && i <= n, "Poly::xvar: index out of range");
    Poly p(n);
    p.add_term(XKey{xp_set(0, i, 1), 0}, F(1));
    return p;
  }
  static Poly yvar(int n) {
    Poly p(n);
    p.add_term(XKey{0, 1}, F(1));
    return p;
  }

  void add_term(XKey k, F c) {
    auto it = t.find(k);
    if (it == t.end()) {
      if (!(c == F(0))) t.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == F(0)) t.erase(it);
    }
  }

  bool is_zero() const { return t.empty(); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    nh_check(a.n == b.n, "Poly +: rank mismatch");
    Poly r = a;
    for (auto& [k, c] : b.t) r.add_term(k, c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    nh_check(a.n == b.n, "Poly -: rank mismatch");
    Poly r = a;
    for (auto& [k, c] : b.t) r.add_term(k, -c);
    return r;
  }
  Poly operator-() const {
    Poly r(n);
    for (auto& [k, c] : t) r.t.emplace(k, -c);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    nh_check(a.n == b.n, "Poly *: rank mismatch");
    Poly r(a.n);
    for (auto& [k1, c1] : a.t)
      for (auto& [k2, c2] : b.t)
        r.add_term(XKey{xp_add(k1.px, k2.px), k1.y + k2.y}, c1 * c2);
    return r;
  }
  Poly scaled(F c) const {
    Poly r(n);
    if (c == F(0)) return r;
    for (auto& [k, v] : t) r.t.emplace(k, v * c);
    return r;
  }
  // Multiply by the monomial x^px y^ye.
  Poly mul_monomial(XPack px, std::uint32_t ye) const {
    Poly r(n);
    for (auto& [k, v] : t) r.t.emplace(XKey{xp_add(k.px, px), k.y + ye}, v);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n == b.n && a.t == b.t;
  }

  Poly apply_perm(const Perm& w) const {
    Poly r(n);
    for (auto& [k, c] : t) r.add_term(XKey{xp_apply_perm(k.px, w), k.y}, c);
    return r;
  }

  std::string str() const {
    if (t.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [k, c] : t) {
      std::string cs = field_str(c), body;
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      append_monomial_str(body, k.px, k.y);
      if (body.empty())
        body = cs;
      else if (cs != "1")
        body = cs + "*" + body;
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
};

// Demazure operator: d_i f = (f - s_i f) / (x_i - x_{i+1}), computed here
// termwise by the closed monomial formula (which is exact: no division).
template <class F>
Poly<F> demazure(const Poly<F>& f, int i) {
  nh_check(1 <= i && i < f.n, "demazure: index out of range");
  Poly<F> r(f.n);
  for (auto& [k, c] : f.t)
    for (auto& [px, sgn] : xp_divided_difference(k.px, i))
      r.add_term(XKey{px, k.y}, sgn > 0 ? c : -c);
  return r;
}

// Exact division by (x_j - y): returns true and fills q when p = q*(x_j - y);
// a nonzero remainder leaves q untouched and returns false.
template <class F>
bool divide_by_xj_minus_y(const Poly<F>& p, int j, Poly<F>& q) {
  Poly<F> rem = p, quot(p.n);
  for (;;) {
    // Leading term in x_j-degree.
    auto lead = rem.t.end();
    int best = 0;
    for (auto it = rem.t.begin(); it != rem.t.end(); ++it) {
      int e = xp_get(it->first.px, j);
      if (e > best) {
        best = e;
        lead = it;
      }
    }
    if (best == 0) break;
    XKey mk{xp_add_at(lead->first.px, j, -1), lead->first.y};
    F c = lead->second;
    quot.add_term(mk, c);
    // rem -= c * x^mk * (x_j - y)
    rem.add_term(lead->first, -c);
    rem.add_term(XKey{mk.px, mk.y + 1}, c);
  }
  if (!rem.is_zero()) return false;
  q = quot;
  return true;
}

}  // namespace nilhecke
