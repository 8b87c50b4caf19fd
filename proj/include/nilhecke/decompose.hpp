#pragma once
// Decompositions of H_n[y] over its embedded subalgebras. The coset splits
// are purely syntactic on normal forms; the tag decomposition over iota_1 is
// a triangular elimination that checks itself by recomposition, so it either
// returns the (unique) coefficients or throws.

#include <utility>

#include "nilhecke/hecke.hpp"

namespace nilhecke {

// tag_r = tau_1 tau_2 ... tau_{r-1} in H_t (tag_1 = 1), the minimal-length
// representatives of the right cosets of the strand-2..t parabolic.
inline Perm tag_perm(int t, int r) {
  Perm w = perm_id(t);
  for (int i = 1; i <= r - 1; ++i) w = perm_mul(w, perm_s(t, i));
  return w;
}

template <class F>
HElem<F> tag_elem(int t, int r) {
  return HElem<F>::tau_perm(t, tag_perm(t, r));
}

template <class F>
std::map<int, HElem<F>> split_y(const HElem<F>& h) {
  std::map<int, HElem<F>> out;
  for (auto& [k, c] : h.t) {
    auto& e = out.try_emplace(hk_y(k), HElem<F>::zero(h.n)).first->second;
    e.add_term(hk_perm(k, h.n), k.px, 0, c);
  }
  return out;
}

// iota_1(a) * tag_r inside H_t.
template <class F>
HElem<F> iota1_times_tag(const HElem<F>& a, int r, int t) {
  HElem<F> e = a.embed(1, 1, t);
  for (int i = 1; i <= r - 1; ++i) e = e.rmul_tau(i);
  return e;
}

// Write y-free g in H_t as sum_{r=1}^t iota_1(a_r) tag_r with a_r in
// H_{t-1}[y] (iota_1: x_i -> x_{i+1}, tau_i -> tau_{i+1}, y -> x_1). The
// normal-form term tau_w x^f belongs to the tag r = w^{-1}(1); its top
// contribution is iota_1(tau_{u'} x^{g'} y^{g_1}) tag_r with w = u p_r and
// g = p_r(f), and all straightening corrections land at strictly smaller
// tags, so eliminating r = t..1 terminates. Result is indexed 1..t.
template <class F>
std::vector<HElem<F>> decompose_left_iota1(const HElem<F>& g0) {
  int t = g0.n;
  nh_check(t >= 1, "decompose_left_iota1: rank must be positive");
  for (auto& [k, c] : g0.t)
    nh_check(hk_y(k) == 0, "decompose_left_iota1: input must be y-free");
  std::vector<HElem<F>> out(static_cast<std::size_t>(t) + 1, HElem<F>::zero(t - 1));
  HElem<F> g = g0;
  for (int r = t; r >= 1; --r) {
    Perm pr = tag_perm(t, r);
    HElem<F> ar(t - 1);
    for (auto& [k, c] : g.t) {
      Perm w = hk_perm(k, t);
      if (perm_inv(w)[0] != r - 1) continue;
      Perm u = perm_mul(w, perm_inv(pr));
      nh_check(u[0] == 0, "decompose_left_iota1: coset representative mismatch");
      XPack gx = xp_apply_perm(k.px, pr);
      ar.add_term(perm_unshift(u, 1, t - 1), xp_unshift(xp_set(gx, 1, 0), 1),
                  xp_get(gx, 1), c);
    }
    out[r] = ar;
    g = g - iota1_times_tag(ar, r, t);
  }
  nh_check(g.is_zero(), "decompose_left_iota1: nonzero residual");
  return out;
}

// Split every term of h in H_{s+1}[y] as tau_{c_k} x_{s+1}^j * (element of
// H_s[y]): the slot basis of induction along the top strand. Keyed by (k, j).
template <class F>
std::map<std::pair<int, int>, HElem<F>> split_top_ind(const HElem<F>& h) {
  int N = h.n, s = N - 1;
  nh_check(s >= 0, "split_top_ind: rank must be positive");
  std::map<std::pair<int, int>, HElem<F>> out;
  for (auto& [k, c] : h.t) {
    auto [kk, wp] = split_coset_top(hk_perm(k, N));
    int j = xp_get(k.px, N);
    auto& slot = out.try_emplace({kk, j}, HElem<F>::zero(s)).first->second;
    slot.add_term(perm_unshift(wp, 0, s), xp_set(k.px, N, 0), hk_y(k), c);
  }
  return out;
}

// Split every term of h in H_{m+s}[y] as tau_c x_1^{e_1}..x_m^{e_m} *
// iota^y_m(element of H_s[y]) with c a minimal coset representative for the
// parabolic on strands m+1..m+s. Keyed by (c, e).
template <class F>
std::map<std::pair<Perm, XPack>, HElem<F>> split_parabolic_lowfree(const HElem<F>& h,
                                                                   int m) {
  int N = h.n, s = N - m;
  nh_check(m >= 0 && s >= 0, "split_parabolic_lowfree: bad window");
  std::vector<char> in_j(static_cast<std::size_t>(N) + 1, 0);
  for (int i = m + 1; i <= N - 1; ++i) in_j[i] = 1;
  std::map<std::pair<Perm, XPack>, HElem<F>> out;
  for (auto& [k, c] : h.t) {
    auto [cs, wpar] = split_parabolic_right(hk_perm(k, N), in_j);
    XPack low = 0, high = 0;
    for (int i = 1; i <= m; ++i) low = xp_set(low, i, xp_get(k.px, i));
    for (int i = m + 1; i <= N; ++i) high = xp_set(high, i, xp_get(k.px, i));
    auto& slot = out.try_emplace({cs, low}, HElem<F>::zero(s)).first->second;
    slot.add_term(perm_unshift(wpar, m, s), xp_unshift(high, m), hk_y(k), c);
  }
  return out;
}

}  // namespace nilhecke
