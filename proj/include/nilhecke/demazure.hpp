#pragma once
// The divided-difference (polynomial) representation of H_n[y] on
// k[x_1..x_n, y]: tau_i acts as the Demazure operator, x_i and y act by
// multiplication. The representation is faithful, which makes operator
// composition an independent oracle for the straightening product:
// act(a*b, f) == act(a, act(b, f)) must hold for every f.

#include "nilhecke/hecke.hpp"

namespace nilhecke {

template <class F>
Poly<F> act(const HElem<F>& h, const Poly<F>& f) {
  nh_check(h.n == f.n, "act: rank mismatch");
  Poly<F> out(f.n);
  for (auto& [k, c] : h.t) {
    // tau_w x^a y^b acts as d_{i1} ... d_{iL} . (x^a y^b . f) for any reduced
    // word w = s_{i1} ... s_{iL}; the rightmost letter acts first.
    Poly<F> g = f.mul_monomial(k.px, static_cast<std::uint32_t>(hk_y(k)));
    auto word = reduced_word(hk_perm(k, h.n));
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = demazure(g, *it);
    out = out + g.scaled(c);
  }
  return out;
}

}  // namespace nilhecke
