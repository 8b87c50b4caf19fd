#pragma once

// Standard complexes over the graded bimodule category and the canonical maps
// between them:
//   * the projective generators P_n^+ and P_n^-,
//   * the two-term complexes Y_{n,m} (one block of n "crossing" tags glued
//     above m untouched strands) and the three-term complexes X_n,
//   * the comparison maps f_n : Y_{n+1} -> X_n and the isomorphism
//     f'_n : E(Y_n) -> X_n, hence g_n = f'^{-1} f_n : Y_{n+1} -> E(Y_n),
//   * right-induction steps (Y_{n,m-1})E -> Y_{n,m} and the derived
//     r_{n,m} : (Y_n)E^m -> Y_{n,m}, g_{n,m} : Y_{n+1,m} -> E(Y_{n,m}) and
//     h_n : Y_n -> E^n(Y_0),
//   * the two commuting algebra actions on Y_{n,m} (high factor through the
//     tag window, low factor on the untouched strands),
//   * the faithful evaluation of chain maps Y_{n,m} -> Y_{n',m'} into
//     H_N[y]: kappa_{n,m} u^0(1) = q(u) kappa_{n',m'}, solved by exact
//     division.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilhecke/bimodule.hpp"
#include "nilhecke/bobject.hpp"

namespace nilhecke {

// ------------------------------------------------------------------ helpers

inline Module mod_part(const Module& m, int i) {
  nh_check(i >= 0 && i < static_cast<int>(m.parts.size()), "mod_part: index out of range");
  Module r;
  r.amb = m.amb;
  r.parts.push_back(m.parts[i]);
  return r;
}

// Relabels homological degrees by s without touching differentials; only
// meaningful for termwise (cell) computations.
template <class F>
BComplex<F> complex_hshift(BComplex<F> C, int s) {
  C.lo += s;
  return C;
}

// ------------------------------------------------- projective generators

template <class F>
BObject<F> make_P_plus(int n) {
  nh_check(n >= 0, "make_P_plus: negative rank");
  Module M = mod_of(sh_free(n));
  Module N = mod_zero_module(nrow_amb(n));
  return bobj_make<F>(n, M, N, modmap_zero<F>(N, M, 0));
}

template <class F>
BObject<F> make_P_minus(int n) {
  nh_check(n >= 1, "make_P_minus: rank must be positive");
  Module M = mod_of(sh_iota_quot(n, n));
  Module N = mod_of(sh_free(n - 1));
  ModMap<F> g = modmap_zero<F>(N, M, 0);
  g.img[0] = mod_gen<F>(M, 0);
  return bobj_make<F>(n, M, N, g);
}

// ------------------------------------------------------ standard complexes

// Y_{n,m}: for n = 0 the single term P_{m}^+; otherwise the two-term complex
//   [H_N[y]; 0] --Delta-like--> v^{2(n-1)} [H_N iota (x) tags; H_{N-1}[y] (x) tags]
// with N = n + m, the n tags glued above the m low strands, and gamma mapping
// tags to tags.
template <class F>
BComplex<F> make_Y(int n, int m) {
  nh_check(n >= 0 && m >= 0, "make_Y: negative parameters");
  int N = n + m;
  if (n == 0) return bcomplex_single<F>(N, make_P_plus<F>(N));
  BObject<F> Y0 = make_P_plus<F>(N);
  Module M1 = mod_of(sh_tag_prod(sh_iota_quot(N, N), n, m), 2 * (n - 1));
  Module N1 = mod_of(sh_tag_prod(sh_free(N - 1), n, m), 2 * (n - 1));
  BObject<F> Y1 = bobj_make<F>(N, M1, N1, modmap_gens_to_gens<F>(N1, M1));
  ModMap<F> d0M{Y0.M, M1, 0, {}};
  ModElem<F> im = mod_zero<F>(M1);
  im.comp[0] = delta_like<F>(M1.parts[0].sh, n);
  d0M.img.push_back(im);
  BComplex<F> C;
  C.n = N;
  C.lo = 0;
  C.terms = {Y0, Y1};
  C.diffs = {BMorphism<F>{d0M, modmap_zero<F>(Y0.N, N1, 0)}};
  return C;
}

// X_n: the three-term complex of rank n+1 objects
//   P_{n+1}^+ --(can, Delta-like)--> [B of the two exact sequences]
//           --(-Delta-like, can)--> [C of the two exact sequences]
// built so that its degree-1 differential literally is the pair of projection
// maps (mu', mu) of the exact sequences, reshifted by 2n-2.  X_0 degenerates
// to [P_1^+ -> P_1^-].
template <class F>
BComplex<F> make_X(int n) {
  nh_check(n >= 0, "make_X: negative parameter");
  BComplex<F> C;
  C.n = n + 1;
  C.lo = 0;
  BObject<F> X0 = make_P_plus<F>(n + 1);
  if (n == 0) {
    BObject<F> X1 = make_P_minus<F>(1);
    BMorphism<F> d0{modmap_gens_to_gens<F>(X0.M, X1.M), modmap_zero<F>(X0.N, X1.N, 0)};
    C.terms = {X0, X1};
    C.diffs = {d0};
    return C;
  }
  ModMap<F> d1M = modmap_reshifted(ses_two<F>(n).second, 2 * n - 2);
  ModMap<F> d1N = modmap_reshifted(ses_one<F>(n).second, 2 * n - 2);
  const Module& M1 = d1M.dom;
  const Module& N1 = d1N.dom;
  // gamma at degree 1: the unit on the plain parts, (x_n - y) tau_n through
  // the tags.
  ModMap<F> g1 = modmap_zero<F>(N1, M1, 0);
  g1.img[0] = mod_gen<F>(M1, 0);
  HElem<F> c =
      (HElem<F>::xvar(n + 1, n) - HElem<F>::yvar(n + 1)) * HElem<F>::tau(n + 1, n);
  const Shape& tp = M1.parts[1].sh;
  for (int r = 1; r <= n; ++r) {
    MElem<F> leafv = melem_zero<F>(*tp.inner);
    leafv.h = leaf_canonical(*tp.inner, c);
    ModElem<F> im = mod_zero<F>(M1);
    melem_add_kid(im.comp[1], SlotKey{static_cast<std::uint64_t>(r), 0}, leafv);
    g1.img[r] = im;
  }
  BObject<F> X1 = bobj_make<F>(n + 1, M1, N1, g1);
  BObject<F> X2 = bobj_make<F>(n + 1, d1M.cod, d1N.cod,
                               modmap_gens_to_gens<F>(d1N.cod, d1M.cod));
  ModMap<F> d0M{X0.M, M1, 0, {}};
  ModElem<F> im0 = mod_zero<F>(M1);
  im0.comp[0] = shape_gen<F>(M1.parts[0].sh, 0);
  im0.comp[1] = delta_like<F>(M1.parts[1].sh, n);
  d0M.img.push_back(im0);
  C.terms = {X0, X1, X2};
  C.diffs = {BMorphism<F>{d0M, modmap_zero<F>(X0.N, N1, 0)}, BMorphism<F>{d1M, d1N}};
  return C;
}

// ------------------------------------------------------- comparison maps

// f_n : Y_{n+1} -> X_n, the identity in degree 0 and the pair of inclusion
// maps (nu', nu) of the exact sequences in degree 1.
template <class F>
ChainMap<F> make_f(int n) {
  nh_check(n >= 0, "make_f: negative parameter");
  BComplex<F> Y = make_Y<F>(n + 1, 0);
  BComplex<F> X = make_X<F>(n);
  std::map<int, BMorphism<F>> comps;
  comps[0] = BMorphism<F>{modmap_identity<F>(Y.terms[0].M),
                          modmap_zero<F>(Y.terms[0].N, X.terms[0].N, 0)};
  if (n == 0)
    comps[1] = BMorphism<F>{modmap_gens_to_gens<F>(Y.terms[1].M, X.terms[1].M),
                            modmap_gens_to_gens<F>(Y.terms[1].N, X.terms[1].N)};
  else
    comps[1] = BMorphism<F>{modmap_reshifted(ses_two<F>(n).first, 2 * n - 2),
                            modmap_reshifted(ses_one<F>(n).first, 2 * n - 2)};
  return chainmap_make(Y, X, 0, comps);
}

// f'_n : E(Y_n) -> X_n.  Termwise it permutes the two direct summands in
// degree 1 and is -1 times the canonical identification in degree 2; all
// blocks send generators to generators.
template <class F>
ChainMap<F> make_fprime(int n) {
  nh_check(n >= 0, "make_fprime: negative parameter");
  BComplex<F> EY = apply_E(make_Y<F>(n, 0));
  BComplex<F> X = make_X<F>(n);
  std::map<int, BMorphism<F>> comps;
  comps[0] = BMorphism<F>{modmap_gens_to_gens<F>(EY.terms[0].M, X.terms[0].M),
                          modmap_zero<F>(EY.terms[0].N, X.terms[0].N, 0)};
  if (n == 0) {
    comps[1] = BMorphism<F>{modmap_gens_to_gens<F>(EY.terms[1].M, X.terms[1].M),
                            modmap_gens_to_gens<F>(EY.terms[1].N, X.terms[1].N)};
    return chainmap_make(EY, X, 0, comps);
  }
  {
    const Module& dm = EY.terms[1].M;
    const Module& cm = X.terms[1].M;
    ModMap<F> a = modmap_gens_to_gens<F>(mod_part(dm, 0), mod_part(cm, 1));
    ModMap<F> b = modmap_gens_to_gens<F>(mod_part(dm, 1), mod_part(cm, 0));
    ModMap<F> fM = modmap_assemble<F>(dm, cm, 0, {{0, 1, &a, F(1)}, {1, 0, &b, F(1)}});
    const Module& dn = EY.terms[1].N;
    const Module& cn = X.terms[1].N;
    ModMap<F> an = modmap_gens_to_gens<F>(mod_part(dn, 0), mod_part(cn, 1));
    ModMap<F> bn = modmap_gens_to_gens<F>(mod_part(dn, 1), mod_part(cn, 0));
    ModMap<F> fN = modmap_assemble<F>(dn, cn, 0, {{0, 1, &an, F(1)}, {1, 0, &bn, F(1)}});
    comps[1] = BMorphism<F>{fM, fN};
  }
  comps[2] =
      BMorphism<F>{modmap_scaled(modmap_gens_to_gens<F>(EY.terms[2].M, X.terms[2].M), F(-1)),
                   modmap_scaled(modmap_gens_to_gens<F>(EY.terms[2].N, X.terms[2].N), F(-1))};
  return chainmap_make(EY, X, 0, comps);
}

template <class F>
ChainMap<F> make_fprime_inv(int n) {
  nh_check(n >= 0, "make_fprime_inv: negative parameter");
  BComplex<F> EY = apply_E(make_Y<F>(n, 0));
  BComplex<F> X = make_X<F>(n);
  std::map<int, BMorphism<F>> comps;
  comps[0] = BMorphism<F>{modmap_gens_to_gens<F>(X.terms[0].M, EY.terms[0].M),
                          modmap_zero<F>(X.terms[0].N, EY.terms[0].N, 0)};
  if (n == 0) {
    comps[1] = BMorphism<F>{modmap_gens_to_gens<F>(X.terms[1].M, EY.terms[1].M),
                            modmap_gens_to_gens<F>(X.terms[1].N, EY.terms[1].N)};
    return chainmap_make(X, EY, 0, comps);
  }
  {
    const Module& dm = X.terms[1].M;
    const Module& cm = EY.terms[1].M;
    ModMap<F> a = modmap_gens_to_gens<F>(mod_part(dm, 0), mod_part(cm, 1));
    ModMap<F> b = modmap_gens_to_gens<F>(mod_part(dm, 1), mod_part(cm, 0));
    ModMap<F> fM = modmap_assemble<F>(dm, cm, 0, {{0, 1, &a, F(1)}, {1, 0, &b, F(1)}});
    const Module& dn = X.terms[1].N;
    const Module& cn = EY.terms[1].N;
    ModMap<F> an = modmap_gens_to_gens<F>(mod_part(dn, 0), mod_part(cn, 1));
    ModMap<F> bn = modmap_gens_to_gens<F>(mod_part(dn, 1), mod_part(cn, 0));
    ModMap<F> fN = modmap_assemble<F>(dn, cn, 0, {{0, 1, &an, F(1)}, {1, 0, &bn, F(1)}});
    comps[1] = BMorphism<F>{fM, fN};
  }
  comps[2] =
      BMorphism<F>{modmap_scaled(modmap_gens_to_gens<F>(X.terms[2].M, EY.terms[2].M), F(-1)),
                   modmap_scaled(modmap_gens_to_gens<F>(X.terms[2].N, EY.terms[2].N), F(-1))};
  return chainmap_make(X, EY, 0, comps);
}

// g_n = f'^{-1}_n f_n : Y_{n+1} -> E(Y_n)
template <class F>
ChainMap<F> make_g(int n) {
  return chainmap_compose(make_fprime_inv<F>(n), make_f<F>(n));
}

// step_{n,m} : (Y_{n,m-1})E -> Y_{n,m}, generators to generators in every
// term and row; an isomorphism.
template <class F>
ChainMap<F> make_step(int n, int m) {
  nh_check(m >= 1, "make_step: m must be positive");
  BComplex<F> A = apply_right_E(make_Y<F>(n, m - 1));
  BComplex<F> B = make_Y<F>(n, m);
  std::map<int, BMorphism<F>> comps;
  for (int k = A.lo; k <= A.hi(); ++k)
    comps[k] =
        BMorphism<F>{modmap_gens_to_gens<F>(A.terms[k - A.lo].M, B.terms[k - B.lo].M),
                     modmap_gens_to_gens<F>(A.terms[k - A.lo].N, B.terms[k - B.lo].N)};
  return chainmap_make(A, B, 0, comps);
}

template <class F>
ChainMap<F> make_step_inv(int n, int m) {
  nh_check(m >= 1, "make_step_inv: m must be positive");
  BComplex<F> A = apply_right_E(make_Y<F>(n, m - 1));
  BComplex<F> B = make_Y<F>(n, m);
  std::map<int, BMorphism<F>> comps;
  for (int k = A.lo; k <= A.hi(); ++k)
    comps[k] =
        BMorphism<F>{modmap_gens_to_gens<F>(B.terms[k - B.lo].M, A.terms[k - A.lo].M),
                     modmap_gens_to_gens<F>(B.terms[k - B.lo].N, A.terms[k - A.lo].N)};
  return chainmap_make(B, A, 0, comps);
}

// r_{n,m} : (Y_n)E^m -> Y_{n,m}
template <class F>
ChainMap<F> make_r(int n, int m) {
  if (m == 0) return chainmap_identity(make_Y<F>(n, 0));
  return chainmap_compose(make_step<F>(n, m), apply_right_E_chainmap(make_r<F>(n, m - 1)));
}

template <class F>
ChainMap<F> make_r_inv(int n, int m) {
  if (m == 0) return chainmap_identity(make_Y<F>(n, 0));
  return chainmap_compose(apply_right_E_chainmap(make_r_inv<F>(n, m - 1)),
                          make_step_inv<F>(n, m));
}

// g_{n,m} : Y_{n+1,m} -> E(Y_{n,m}), obtained from g_{n,m-1} by right
// induction, conjugated by the step maps and the commutation of the two
// induction functors.
template <class F>
ChainMap<F> make_g_nm(int n, int m) {
  if (m == 0) return make_g<F>(n);
  ChainMap<F> inner = apply_right_E_chainmap(make_g_nm<F>(n, m - 1));
  CommuteIso<F> ci = commute_iso(make_Y<F>(n, m - 1));
  ChainMap<F> a = chainmap_compose(ci.psi, inner);
  ChainMap<F> b = chainmap_compose(apply_E_chainmap(make_step<F>(n, m)), a);
  return chainmap_compose(b, make_step_inv<F>(n + 1, m));
}

// h_n : Y_n -> E^n(Y_0)
template <class F>
ChainMap<F> make_h(int n) {
  nh_check(n >= 0, "make_h: negative parameter");
  if (n == 0) return chainmap_identity(make_Y<F>(0, 0));
  return chainmap_compose(apply_E_chainmap(make_h<F>(n - 1)), make_g<F>(n - 1));
}

// ------------------------------------------------- algebra actions on Y

// Right multiplication by a homogeneous c in H_n[y] through the tag window of
// a one-part tag-product module.
template <class F>
ModMap<F> row_high_act(const Module& mm, const HElem<F>& c) {
  nh_check(mm.parts.size() == 1 && mm.parts[0].sh.kind == ShapeKind::kTensorTags,
           "row_high_act: expects a single tag product");
  const Shape& sh = mm.parts[0].sh;
  nh_check(c.n == sh.t, "row_high_act: rank mismatch");
  std::optional<int> dv = c.homogeneous_degree();
  nh_check(dv.has_value(), "row_high_act: inhomogeneous element");
  ModMap<F> f = modmap_zero<F>(mm, mm, *dv);
  for (int g = 0; g < mod_gen_count(mm); ++g) {
    ModElem<F> gen = mod_gen<F>(mm, g);
    ModElem<F> acc = mod_zero<F>(mm);
    for (auto& [b, cb] : split_y(c)) {
      ModElem<F> pe = mod_zero<F>(mm);
      pe.comp[0] = tag_rmul(sh, gen.comp[0], cb);
      if (b > 0) pe = mod_act(mm, HElem<F>::yvar(mm.amb).pow(b), pe);
      acc = mod_add(acc, pe);
    }
    f.img[g] = acc;
  }
  return f;
}

// Right multiplication by a homogeneous c in H_m[y] on the low strands of a
// one-part tag-product module glued at offset m.
template <class F>
ModMap<F> row_low_act(const Module& mm, const HElem<F>& c) {
  nh_check(mm.parts.size() == 1 && mm.parts[0].sh.kind == ShapeKind::kTensorTags,
           "row_low_act: expects a single tag product");
  const Shape& sh = mm.parts[0].sh;
  nh_check(c.n == sh.off, "row_low_act: rank mismatch");
  std::optional<int> dv = c.homogeneous_degree();
  nh_check(dv.has_value(), "row_low_act: inhomogeneous element");
  ModMap<F> f = modmap_zero<F>(mm, mm, *dv);
  for (int g = 0; g < mod_gen_count(mm); ++g) {
    ModElem<F> gen = mod_gen<F>(mm, g);
    ModElem<F> acc = mod_zero<F>(mm);
    for (auto& [b, cb] : split_y(c)) {
      ModElem<F> pe = mod_zero<F>(mm);
      pe.comp[0] = rmul_low(sh, gen.comp[0], cb);
      if (b > 0) pe = mod_act(mm, HElem<F>::yvar(mm.amb).pow(b), pe);
      acc = mod_add(acc, pe);
    }
    f.img[g] = acc;
  }
  return f;
}

// The chain map gamma_{n,m}(c) : Y_{n,m} -> Y_{n,m} given by right
// multiplication with c in the high factor H_n[y].
template <class F>
ChainMap<F> y_high_act(int n, int m, const HElem<F>& c) {
  nh_check(c.n == n, "y_high_act: rank mismatch");
  std::optional<int> dv = c.homogeneous_degree();
  nh_check(dv.has_value(), "y_high_act: inhomogeneous element");
  BComplex<F> Y = make_Y<F>(n, m);
  int N = n + m;
  std::map<int, BMorphism<F>> comps;
  {
    const Module& m0 = Y.terms[0].M;
    ModMap<F> fM = modmap_zero<F>(m0, m0, *dv);
    ModElem<F> im = mod_zero<F>(m0);
    im.comp[0].h = c.embed_y(m, N);
    fM.img[0] = im;
    comps[0] = BMorphism<F>{fM, modmap_zero<F>(Y.terms[0].N, Y.terms[0].N, *dv)};
  }
  if (n >= 1)
    comps[1] = BMorphism<F>{row_high_act<F>(Y.terms[1].M, c),
                            row_high_act<F>(Y.terms[1].N, c)};
  return chainmap_make(Y, Y, *dv, comps);
}

// The chain map Y_{n,m} -> Y_{n,m} given by right multiplication with c in
// the low factor H_m[y].
template <class F>
ChainMap<F> y_low_act(int n, int m, const HElem<F>& c) {
  nh_check(c.n == m, "y_low_act: rank mismatch");
  std::optional<int> dv = c.homogeneous_degree();
  nh_check(dv.has_value(), "y_low_act: inhomogeneous element");
  BComplex<F> Y = make_Y<F>(n, m);
  int N = n + m;
  std::map<int, BMorphism<F>> comps;
  {
    const Module& m0 = Y.terms[0].M;
    ModMap<F> fM = modmap_zero<F>(m0, m0, *dv);
    ModElem<F> im = mod_zero<F>(m0);
    im.comp[0].h = c.embed_y(0, N);
    fM.img[0] = im;
    comps[0] = BMorphism<F>{fM, modmap_zero<F>(Y.terms[0].N, Y.terms[0].N, *dv)};
  }
  if (n >= 1)
    comps[1] =
        BMorphism<F>{row_low_act<F>(Y.terms[1].M, c), row_low_act<F>(Y.terms[1].N, c)};
  return chainmap_make(Y, Y, *dv, comps);
}

// ------------------------------------------------- faithful evaluation

// Exact right division by (x_j - y): succeeds iff every normal-form
// tau-component of p lies in the right ideal (x_j - y) H, and then
// q (x_j - y) = p.
template <class F>
bool helem_divide_right(const HElem<F>& p, int j, HElem<F>& q) {
  int n = p.n;
  std::map<Perm, Poly<F>> byperm;
  for (auto& [k, c] : p.t) {
    auto it = byperm.try_emplace(hk_perm(k, n), Poly<F>(n)).first;
    it->second.add_term(XKey{k.px, static_cast<std::uint32_t>(hk_y(k))}, c);
  }
  HElem<F> out = HElem<F>::zero(n);
  for (auto& [w, pl] : byperm) {
    Poly<F> quot(n);
    if (!divide_by_xj_minus_y(pl, j, quot)) return false;
    for (auto& [k, c] : quot.t) out.add_term(w, k.px, static_cast<int>(k.y), c);
  }
  q = out;
  return true;
}

// The evaluation q(u) of a chain map u : Y_{n,m} -> Y_{n',m'} (same total
// rank N), defined by kappa_{n,m} u^0(1) = q(u) kappa_{n',m'}.  It is
// injective on chain maps, multiplicative against composition in the reverse
// order, and the identity on the two algebra actions.
template <class F>
HElem<F> q_of_chainmap(const ChainMap<F>& u, int n, int m, int n2, int m2) {
  int N = n + m;
  nh_check(n2 + m2 == N, "q_of_chainmap: totals differ");
  nh_check(u.dom.lo <= 0 && u.cod.lo <= 0, "q_of_chainmap: unexpected window");
  const BMorphism<F>& c0 = u.comp[0 - u.dom.lo];
  nh_check(!c0.fM.img.empty(), "q_of_chainmap: empty degree-0 image");
  HElem<F> r = kappa_elem<F>(n, m, N) * c0.fM.img[0].comp[0].h;
  for (int j = m2 + 1; j <= m2 + n2; ++j) {
    HElem<F> q = HElem<F>::zero(N);
    nh_check(helem_divide_right(r, j, q), "q_of_chainmap: division failed");
    r = q;
  }
  return r;
}

// --------------------------------------------------------------- checks

// kappa_{n,0} is central in H_n[y].
template <class F>
CheckResult kappa_central_check(int n) {
  HElem<F> kap = kappa_elem<F>(n, 0, n);
  std::vector<HElem<F>> gens = {HElem<F>::yvar(n)};
  for (int i = 1; i <= n; ++i) gens.push_back(HElem<F>::xvar(n, i));
  for (int i = 1; i < n; ++i) gens.push_back(HElem<F>::tau(n, i));
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!(kap * gens[i] == gens[i] * kap))
      return check_fail("kappa_" + std::to_string(n) + " fails to commute with generator " +
                        std::to_string(i));
  return {};
}

// kappa_{n,m} annihilates the top row of the degree-1 term of Y_{n,m}.
template <class F>
CheckResult kappa_kills_check(int n, int m) {
  nh_check(n >= 1, "kappa_kills_check: n must be positive");
  BComplex<F> Y = make_Y<F>(n, m);
  HElem<F> kap = kappa_elem<F>(n, m, n + m);
  const Module& m1 = Y.terms[1].M;
  for (int g = 0; g < mod_gen_count(m1); ++g)
    if (!mod_act(m1, kap, mod_gen<F>(m1, g)).is_zero())
      return check_fail("kappa does not annihilate the degree-1 term of Y_{" +
                        std::to_string(n) + "," + std::to_string(m) + "}");
  return {};
}

// 0 -> v^2 Ind(M) --(x_{amb} - y)--> Ind(M) --can--> Fold(M) -> 0 is exact
// degreewise for the top induction of any module.
template <class F>
CheckResult check_ind_fold_ses(const Module& m, int dlo, int dhi) {
  Module it = ind_top_module(m);
  Module fo = ind_fold_module(m);
  ModMap<F> can = modmap_gens_to_gens<F>(it, fo);
  Module dom = mod_shifted(it, 2);
  ModMap<F> mult{dom, it, 0, {}};
  HElem<F> c = HElem<F>::xvar(it.amb, it.amb) - HElem<F>::yvar(it.amb);
  for (int g = 0; g < mod_gen_count(it); ++g)
    mult.img.push_back(mod_act(it, c, mod_gen<F>(it, g)));
  return ses_check(mult, can, dlo, dhi);
}

// E applied to 0 -> v^2 P_1^+ --(x_1 - y)--> P_1^+ -> [H iota; 0] -> 0 stays
// a termwise short exact sequence in both rows.
template <class F>
CheckResult check_E_exact_example(int dlo, int dhi) {
  BObject<F> A = bobj_shifted(make_P_plus<F>(1), 2);
  BObject<F> B = make_P_plus<F>(1);
  Module Cm = mod_of(sh_iota_quot(1, 1));
  Module Cn = mod_zero_module(0);
  BObject<F> Cc = bobj_make<F>(1, Cm, Cn, modmap_zero<F>(Cn, Cm, 0));
  ModMap<F> aM{A.M, B.M, 0, {}};
  aM.img.push_back(
      mod_act(B.M, HElem<F>::xvar(1, 1) - HElem<F>::yvar(1), mod_gen<F>(B.M, 0)));
  BMorphism<F> am{aM, modmap_zero<F>(A.N, B.N, 0)};
  BMorphism<F> bm{modmap_gens_to_gens<F>(B.M, Cm), modmap_zero<F>(B.N, Cc.N, 0)};
  ChainMap<F> ua =
      chainmap_make(bcomplex_single<F>(1, A), bcomplex_single<F>(1, B), 0, {{0, am}});
  ChainMap<F> ub =
      chainmap_make(bcomplex_single<F>(1, B), bcomplex_single<F>(1, Cc), 0, {{0, bm}});
  std::string why;
  if (!chainmap_valid(ua, &why)) return check_fail("first map invalid: " + why);
  if (!chainmap_valid(ub, &why)) return check_fail("second map invalid: " + why);
  ChainMap<F> Ea = apply_E_chainmap(ua);
  ChainMap<F> Eb = apply_E_chainmap(ub);
  if (!chainmap_valid(Ea, &why)) return check_fail("induced first map invalid: " + why);
  if (!chainmap_valid(Eb, &why)) return check_fail("induced second map invalid: " + why);
  for (int k = 0; k <= 1; ++k) {
    CheckResult r = ses_check(Ea.comp[k].fM, Eb.comp[k].fM, dlo, dhi);
    if (!r.ok)
      return check_fail("top row not exact in induced degree " + std::to_string(k) + ": " +
                        r.detail);
    r = ses_check(Ea.comp[k].fN, Eb.comp[k].fN, dlo, dhi);
    if (!r.ok)
      return check_fail("bottom row not exact in induced degree " + std::to_string(k) +
                        ": " + r.detail);
  }
  return {};
}

// cone(Y_{1,m-1} -> P_m^+) is quasi-isomorphic to P_m^-.
template <class F>
CheckResult check_cone_generate(int m, int dlo, int dhi) {
  nh_check(m >= 1, "check_cone_generate: m must be positive");
  BComplex<F> Y = make_Y<F>(1, m - 1);
  BComplex<F> P = bcomplex_single<F>(m, make_P_plus<F>(m));
  std::map<int, BMorphism<F>> uc;
  uc[0] = bmor_identity(Y.terms[0]);
  ChainMap<F> u = chainmap_make(Y, P, 0, uc);
  std::string why;
  if (!chainmap_valid(u, &why)) return check_fail("collapse map invalid: " + why);
  BComplex<F> C = cone(u);
  BComplex<F> Pm = bcomplex_single<F>(m, make_P_minus<F>(m));
  const BObject<F>& c0 = C.terms[0 - C.lo];
  const BObject<F>& t = Pm.terms[0];
  ModMap<F> a = modmap_gens_to_gens<F>(mod_part(c0.M, 0), t.M);
  ModMap<F> b = modmap_gens_to_gens<F>(mod_part(c0.M, 1), t.M);
  ModMap<F> fM = modmap_assemble<F>(c0.M, t.M, 0, {{0, 0, &a, F(1)}, {1, 0, &b, F(1)}});
  ModMap<F> fN = modmap_gens_to_gens<F>(c0.N, t.N);
  std::map<int, BMorphism<F>> wc;
  wc[0] = BMorphism<F>{fM, fN};
  ChainMap<F> w = chainmap_make(C, Pm, 0, wc);
  if (!chainmap_valid(w, &why)) return check_fail("comparison map invalid: " + why);
  return quasi_iso_check(w, dlo, dhi);
}

}  // namespace nilhecke
