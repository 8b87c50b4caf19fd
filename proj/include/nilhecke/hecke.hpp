#pragma once
// The nil affine Hecke algebra H_n[y]: generators tau_1..tau_{n-1},
// x_1..x_n, central y, with tau_i^2 = 0, braid relations, tau_i x_r = x_r
// tau_i for r outside {i, i+1}, and tau_i x_i - x_{i+1} tau_i = 1 =
// x_i tau_i - tau_i x_{i+1}. Elements are kept in the normal form
// sum c * tau_w x^a y^b (tau leftmost); the product straightens via the
// divided-difference rule
//   tau_w x^a . tau_i = tau_{w s_i} s_i(x^a) + tau_w d_i(x^a)
// where the first term is dropped unless l(w s_i) = l(w) + 1.
//
// v-grading: deg tau_i = -2, deg x_i = deg y = 2, so a normal-form monomial
// has degree 2(|a| + b) - 2 l(w).

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include "nilhecke/polynomial.hpp"

namespace nilhecke {

constexpr int kMaxYExp = 255;

inline std::uint64_t pack_perm(const Perm& w) {
  nh_check(w.size() <= kMaxVars, "pack_perm: rank above 10");
  std::uint64_t r = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    std::uint64_t v = i < static_cast<int>(w.size()) ? w[i] : i;
    r |= v << (4 * i);
  }
  return r;
}

inline Perm unpack_perm(std::uint64_t p, int n) {
  Perm w(n);
  for (int i = 0; i < n; ++i) w[i] = static_cast<std::uint8_t>((p >> (4 * i)) & 15u);
  return w;
}

struct HKey {
  std::uint64_t wy = 0;  // packed permutation (bits 0..39) and y-exponent (40..47)
  XPack px = 0;
  auto operator<=>(const HKey&) const = default;
};

inline HKey hk_make(const Perm& w, XPack px, int yexp) {
  nh_check(0 <= yexp && yexp <= kMaxYExp, "hk_make: y-exponent out of range");
  return HKey{pack_perm(w) | (static_cast<std::uint64_t>(yexp) << 40), px};
}
inline Perm hk_perm(const HKey& k, int n) { return unpack_perm(k.wy, n); }
inline int hk_y(const HKey& k) { return static_cast<int>((k.wy >> 40) & 255u); }

inline int hk_vdeg(const HKey& k, int n) {
  return 2 * (xp_total(k.px) + hk_y(k)) - 2 * perm_len(hk_perm(k, n));
}

template <class F>
class HElem {
 public:
  int n = 0;
  std::map<HKey, F> t;

  HElem() = default;
  // Rank 0 is the polynomial algebra k[y].
  explicit HElem(int n_) : n(n_) { nh_check(0 <= n_ && n_ <= kMaxVars, "HElem: bad rank"); }

  static HElem zero(int n) { return HElem(n); }
  static HElem scalar(int n, F c) {
    HElem e(n);
    e.add_term(perm_id(n), 0, 0, c);
    return e;
  }
  static HElem unit(int n) { return scalar(n, F(1)); }
  static HElem xvar(int n, int i) {
    nh_check(1 <= i && i <= n, "HElem::xvar: index out of range");
    HElem e(n);
    e.add_term(perm_id(n), xp_set(0, i, 1), 0, F(1));
    return e;
  }
  static HElem yvar(int n) {
    HElem e(n);
    e.add_term(perm_id(n), 0, 1, F(1));
    return e;
  }
  static HElem tau(int n, int i) {
    HElem e(n);
    e.add_term(perm_s(n, i), 0, 0, F(1));
    return e;
  }
  static HElem tau_perm(int n, const Perm& w) {
    HElem e(n);
    e.add_term(w, 0, 0, F(1));
    return e;
  }
  static HElem tau_word(int n, const std::vector<int>& word) {
    HElem e = unit(n);
    for (int i : word) e = e.rmul_tau(i);
    return e;
  }
  static HElem monomial(int n, const Perm& w, XPack px, int yexp, F c) {
    HElem e(n);
    e.add_term(w, px, yexp, c);
    return e;
  }

  void add_term(const Perm& w, XPack px, int yexp, F c) { add_key(hk_make(w, px, yexp), c); }
  void add_key(HKey k, F c) {
    auto it = t.find(k);
    if (it == t.end()) {
      if (!(c == F(0))) t.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == F(0)) t.erase(it);
    }
  }

  bool is_zero() const { return t.empty(); }

  friend HElem operator+(const HElem& a, const HElem& b) {
    nh_check(a.n == b.n, "HElem +: rank mismatch");
    HElem r = a;
    for (auto& [k, c] : b.t) r.add_key(k, c);
    return r;
  }
  friend HElem operator-(const HElem& a, const HElem& b) {
    nh_check(a.n == b.n, "HElem -: rank mismatch");
    HElem r = a;
    for (auto& [k, c] : b.t) r.add_key(k, -c);
    return r;
  }
  HElem operator-() const {
    HElem r(n);
    for (auto& [k, c] : t) r.t.emplace(k, -c);
    return r;
  }
  HElem scaled(F c) const {
    HElem r(n);
    if (c == F(0)) return r;
    for (auto& [k, v] : t) r.t.emplace(k, v * c);
    return r;
  }

  friend bool operator==(const HElem& a, const HElem& b) {
    return a.n == b.n && a.t == b.t;
  }
  friend bool operator!=(const HElem& a, const HElem& b) { return !(a == b); }

  // Right multiplication by tau_i (the straightening step).
  HElem rmul_tau(int i) const {
    nh_check(1 <= i && i < n, "rmul_tau: index out of range");
    HElem r(n);
    for (auto& [k, c] : t) {
      Perm w = hk_perm(k, n);
      int ye = hk_y(k);
      if (!right_descent(w, i))  // l(w s_i) = l(w) + 1
        r.add_term(rmul_s(w, i), xp_swap(k.px, i), ye, c);
      for (auto& [px, sgn] : xp_divided_difference(k.px, i))
        r.add_term(w, px, ye, sgn > 0 ? c : -c);
    }
    return r;
  }

  // Left multiplication by tau_i: no straightening, just l-additivity.
  HElem lmul_tau(int i) const {
    nh_check(1 <= i && i < n, "lmul_tau: index out of range");
    HElem r(n);
    for (auto& [k, c] : t) {
      Perm w = hk_perm(k, n);
      if (!left_descent(w, i)) r.add_term(lmul_s(w, i), k.px, hk_y(k), c);
    }
    return r;
  }

  HElem rmul_monomial(XPack px, int yexp) const {
    HElem r(n);
    for (auto& [k, c] : t) {
      HKey nk = hk_make(hk_perm(k, n), xp_add(k.px, px), hk_y(k) + yexp);
      r.t.emplace(nk, c);
    }
    return r;
  }

  friend HElem operator*(const HElem& a, const HElem& b) {
    nh_check(a.n == b.n, "HElem *: rank mismatch");
    HElem acc(a.n);
    for (auto& [k, c] : b.t) {
      HElem cur = a;
      for (int i : reduced_word(hk_perm(k, a.n))) cur = cur.rmul_tau(i);
      cur = cur.rmul_monomial(k.px, hk_y(k));
      for (auto& [ck, cc] : cur.t) acc.add_key(ck, cc * c);
    }
    return acc;
  }

  HElem pow(int e) const {
    HElem r = unit(n);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  // Degree of a homogeneous element; nullopt for 0 or inhomogeneous input.
  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (auto& [k, c] : t) {
      int kd = hk_vdeg(k, n);
      if (!d)
        d = kd;
      else if (*d != kd)
        return std::nullopt;
    }
    return d;
  }

  // x_i -> x_{m+i}, tau_i -> tau_{m+i}, y -> x_r, ambient rank N. Valid as an
  // algebra map only when x_r commutes with the shifted image (r <= m, or r
  // beyond the moved window).
  HElem embed(int m, int r, int N) const {
    nh_check(r <= m || r >= m + n + 1 || n == 1, "embed: y-image collides with window");
    nh_check(1 <= r && r <= N && m + n <= N, "embed: bad parameters");
    HElem out(N);
    for (auto& [k, c] : t) {
      XPack px = xp_add_at(xp_shift(k.px, m), r, hk_y(k));
      out.add_term(perm_shift(hk_perm(k, n), m, N), px, 0, c);
    }
    return out;
  }

  // x_i -> x_{m+i}, tau_i -> tau_{m+i}, y -> y.
  HElem embed_y(int m, int N) const {
    nh_check(m + n <= N, "embed_y: bad parameters");
    HElem out(N);
    for (auto& [k, c] : t)
      out.add_term(perm_shift(hk_perm(k, n), m, N), xp_shift(k.px, m), hk_y(k), c);
    return out;
  }

  std::string str() const;
  static HElem parse(int n, const std::string& src);
};

// s_i = tau_i (x_i - x_{i+1}) - 1, an involution.
template <class F>
HElem<F> s_elem(int n, int i) {
  return HElem<F>::tau(n, i) * (HElem<F>::xvar(n, i) - HElem<F>::xvar(n, i + 1)) -
         HElem<F>::unit(n);
}

template <class F>
std::string HElem<F>::str() const {
  if (t.empty()) return "0";
  std::vector<std::pair<HKey, F>> terms(t.begin(), t.end());
  std::stable_sort(terms.begin(), terms.end(), [this](const auto& a, const auto& b) {
    Perm wa = hk_perm(a.first, n), wb = hk_perm(b.first, n);
    int la = perm_len(wa), lb = perm_len(wb);
    if (la != lb) return la < lb;
    if (wa != wb) return wa < wb;
    std::vector<int> ea, eb;
    for (int i = 1; i <= n; ++i) {
      ea.push_back(xp_get(a.first.px, i));
      eb.push_back(xp_get(b.first.px, i));
    }
    if (ea != eb) return ea > eb;  // higher monomials first, so "x1 - y"
    return hk_y(a.first) < hk_y(b.first);
  });
  std::string s;
  bool first = true;
  for (auto& [k, c] : terms) {
    std::string cs = field_str(c), body;
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    Perm w = hk_perm(k, n);
    if (!perm_is_id(w)) body = "t" + perm_str(w);
    append_monomial_str(body, k.px, hk_y(k));
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

template <class F>
HElem<F> HElem<F>::parse(int n, const std::string& src) {
  struct P {
    const std::string& s;
    std::size_t i = 0;
    void ws() {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eat(char c) {
      ws();
      if (i < s.size() && s[i] == c) {
        ++i;
        return true;
      }
      return false;
    }
    char peek() {
      ws();
      return i < s.size() ? s[i] : '\0';
    }
    long long integer() {
      ws();
      nh_check(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])),
               "parse: expected integer at position " + std::to_string(i));
      long long v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        v = v * 10 + (s[i] - '0');
        nh_check(v >= 0, "parse: integer overflow");
        ++i;
      }
      return v;
    }
  } p{src};

  auto factor = [&](void) -> HElem {
    char c = p.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long num = p.integer();
      F val(num);
      if (p.eat('/')) val = val / F(p.integer());
      return scalar(n, val);
    }
    if (c == 'y') {
      ++p.i;
      int e = p.eat('^') ? static_cast<int>(p.integer()) : 1;
      HElem r = unit(n);
      for (int k = 0; k < e; ++k) r = r.rmul_monomial(0, 1);
      return r;
    }
    if (c == 'x') {
      ++p.i;
      int idx = static_cast<int>(p.integer());
      int e = p.eat('^') ? static_cast<int>(p.integer()) : 1;
      nh_check(1 <= idx && idx <= n, "parse: x-index out of range");
      return unit(n).rmul_monomial(xp_set(0, idx, e), 0);
    }
    if (c == 't') {
      ++p.i;
      nh_check(p.eat('['), "parse: expected [ after t");
      Perm w;
      for (;;) {
        long long v = p.integer();
        nh_check(1 <= v && v <= n, "parse: permutation entry out of range");
        w.push_back(static_cast<std::uint8_t>(v - 1));
        if (!p.eat(',')) break;
      }
      nh_check(p.eat(']'), "parse: expected ]");
      nh_check(static_cast<int>(w.size()) == n, "parse: permutation has wrong size");
      Perm chk = w;
      std::sort(chk.begin(), chk.end());
      nh_check(chk == perm_id(n), "parse: not a permutation");
      return tau_perm(n, w);
    }
    nh_fail("parse: unexpected character '" + std::string(1, c) + "'");
  };

  auto term = [&](void) -> HElem {
    HElem r = factor();
    while (p.eat('*')) r = r * factor();
    return r;
  };

  HElem acc = zero(n);
  bool neg = false;
  if (p.eat('-'))
    neg = true;
  else
    p.eat('+');
  for (;;) {
    HElem tm = term();
    acc = neg ? acc - tm : acc + tm;
    if (p.eat('+'))
      neg = false;
    else if (p.eat('-'))
      neg = true;
    else
      break;
  }
  p.ws();
  nh_check(p.i == src.size(), "parse: trailing input at position " + std::to_string(p.i));
  return acc;
}

// All normal-form monomials of H_n[y] in v-degree d with every x-exponent and
// the y-exponent bounded by cap (use the defaults for a full graded piece; the
// packing limits already force exponents <= 63).
inline void compositions(int total, int parts, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& emit) {
  if (parts == 1) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions(total - v, parts - 1, cur, emit);
    cur.pop_back();
  }
}

inline std::vector<HKey> graded_piece_basis(int n, int d) {
  std::vector<HKey> out;
  if (d % 2) return out;
  for (const Perm& w : all_perms(n)) {
    int tot = d / 2 + perm_len(w);
    if (tot < 0) continue;
    nh_check(tot <= kMaxExp, "graded_piece_basis: degree beyond packing range");
    std::vector<int> cur;
    compositions(tot, n + 1, cur, [&](const std::vector<int>& e) {
      XPack px = 0;
      for (int i = 1; i <= n; ++i) px = xp_set(px, i, e[i - 1]);
      out.push_back(hk_make(w, px, e[n]));
    });
  }
  return out;
}

}  // namespace nilhecke
