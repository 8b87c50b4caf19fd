#pragma once
// Two-row objects [M; N; gamma] over the nil affine Hecke algebras: M is a
// graded module over H_n[y], N one over H_{n-1}[y], and gamma: N -> M is a
// degree-0 H_{n-1}[y]-linear map whose image is annihilated by (y - x_n).
// Morphisms are pairs of module maps forming a square with the gamma's.
// This header provides those objects, bounded complexes of them, chain maps
// and cones, the induction functor E adding a new top strand (a two-row
// object goes to a two-term complex; complexes are totalized), the right
// induction functor adding a new bottom strand, and the commutation
// isomorphism between the two. Quasi-isomorphisms are certified row by row:
// a chain map is one exactly when both rows of its cone are degreewise
// acyclic, which the exactness engine checks with exact ranks.

#include "nilhecke/bimodule.hpp"
#include "nilhecke/exactness.hpp"

namespace nilhecke {

inline int nrow_amb(int n) { return n > 0 ? n - 1 : 0; }

inline Module module_with_amb(Module m, int amb) {
  if (m.parts.empty())
    m.amb = amb;
  else
    nh_check(m.amb == amb, "module_with_amb: ambient rank mismatch");
  return m;
}

// ---------------------------------------------------------- module wrappers

inline Module ind_top_module(const Module& m) {
  Module r;
  r.amb = m.amb + 1;
  for (auto& p : m.parts) r.parts.push_back({sh_ind_top(p.sh), p.shift});
  return r;
}

inline Module ind_fold_module(const Module& m) {
  Module r;
  r.amb = m.amb + 1;
  for (auto& p : m.parts) r.parts.push_back({sh_ind_top_fold(p.sh), p.shift});
  return r;
}

inline Module right_ind_module(const Module& m, int k) {
  Module r;
  r.amb = m.amb + k;
  for (auto& p : m.parts) r.parts.push_back({sh_right_ind(p.sh, k), p.shift});
  return r;
}

// 1 (x) v inside a partwise-wrapped module
template <class F>
ModElem<F> mod_wrap(const Module& w, const ModElem<F>& x) {
  nh_check(w.parts.size() == x.comp.size(), "mod_wrap: part count mismatch");
  ModElem<F> e = mod_zero<F>(w);
  for (std::size_t i = 0; i < x.comp.size(); ++i) {
    if (x.comp[i].is_zero()) continue;
    const Shape& sh = w.parts[i].sh;
    MElem<F> cell = melem_zero<F>(sh);
    switch (sh.kind) {
      case ShapeKind::kIndTop:
      case ShapeKind::kIndTopFold:
        melem_add_kid(cell, SlotKey{static_cast<std::uint64_t>(sh.amb), 0}, x.comp[i]);
        break;
      case ShapeKind::kRightInd:
        melem_add_kid(cell, SlotKey{pack_perm(perm_id(sh.amb)), 0}, x.comp[i]);
        break;
      default: nh_fail("mod_wrap: part is not a wrapper shape");
    }
    e.comp[i] = cell;
  }
  return e;
}

// The wrapped map 1 (x) v -> 1 (x) f(v) between partwise wrappers of f's
// dom/cod; generators correspond one to one.
template <class F>
ModMap<F> modmap_wrap(const Module& dom_w, const Module& cod_w, const ModMap<F>& f) {
  nh_check(dom_w.parts.size() == f.dom.parts.size() && cod_w.parts.size() == f.cod.parts.size(),
           "modmap_wrap: part count mismatch");
  ModMap<F> out{dom_w, cod_w, f.deg, {}};
  for (auto& im : f.img) out.img.push_back(mod_wrap(cod_w, im));
  return out;
}

// Generator-to-generator map; counts and degrees must line up.
template <class F>
ModMap<F> modmap_gens_to_gens(const Module& dom, const Module& cod, int deg = 0) {
  int gc = mod_gen_count(dom);
  nh_check(gc == mod_gen_count(cod), "modmap_gens_to_gens: generator count mismatch");
  ModMap<F> f{dom, cod, deg, {}};
  for (int g = 0; g < gc; ++g) {
    nh_check(mod_gen_degree(cod, g) == mod_gen_degree(dom, g) + deg,
             "modmap_gens_to_gens: generator degree mismatch");
    f.img.push_back(mod_gen<F>(cod, g));
  }
  return f;
}

template <class F>
ModMap<F> modmap_reshifted(ModMap<F> f, int ds) {
  f.dom = mod_shifted(f.dom, ds);
  f.cod = mod_shifted(f.cod, ds);
  return f;
}

// ----------------------------------------------------------- block assembly

template <class F>
ModElem<F> mod_inject(const Module& sum, int part_base, const Module& xmod, const ModElem<F>& x) {
  nh_check(part_base >= 0 &&
               part_base + static_cast<int>(xmod.parts.size()) <=
                   static_cast<int>(sum.parts.size()),
           "mod_inject: slice out of range");
  ModElem<F> e = mod_zero<F>(sum);
  for (std::size_t i = 0; i < xmod.parts.size(); ++i) {
    nh_check(shape_equal(sum.parts[part_base + i].sh, xmod.parts[i].sh) &&
                 sum.parts[part_base + i].shift == xmod.parts[i].shift,
             "mod_inject: slice does not match");
    e.comp[part_base + i] = x.comp[i];
  }
  return e;
}

template <class F>
struct MapBlock {
  int dom_part = 0;
  int cod_part = 0;
  const ModMap<F>* map = nullptr;
  F scale = F(1);
};

// Assemble dom -> cod from blocks; each block's map covers the slice of dom
// parts starting at dom_part and lands in the slice of cod parts starting at
// cod_part. Overlapping contributions add.
template <class F>
ModMap<F> modmap_assemble(const Module& dom, const Module& cod, int deg,
                          const std::vector<MapBlock<F>>& blocks) {
  ModMap<F> out = modmap_zero<F>(dom, cod, deg);
  for (auto& b : blocks) {
    const ModMap<F>& f = *b.map;
    nh_check(f.deg == deg, "modmap_assemble: block degree mismatch");
    nh_check(b.dom_part + static_cast<int>(f.dom.parts.size()) <=
                 static_cast<int>(dom.parts.size()),
             "modmap_assemble: dom slice out of range");
    for (std::size_t i = 0; i < f.dom.parts.size(); ++i)
      nh_check(shape_equal(dom.parts[b.dom_part + i].sh, f.dom.parts[i].sh) &&
                   dom.parts[b.dom_part + i].shift == f.dom.parts[i].shift,
               "modmap_assemble: dom slice does not match");
    int gbase = 0;
    for (int p = 0; p < b.dom_part; ++p) gbase += shape_gen_count(dom.parts[p].sh);
    for (std::size_t l = 0; l < f.img.size(); ++l)
      out.img[gbase + l] = mod_add(
          out.img[gbase + l], mod_inject(cod, b.cod_part, f.cod, mod_scaled(f.img[l], b.scale)));
  }
  return out;
}

// ------------------------------------------------------------------ objects

template <class F>
struct BObject {
  int n = 0;        // rank: M lives over H_n[y], N over H_{n-1}[y]
  Module M, N;
  ModMap<F> gamma;  // N -> M, degree 0
};

template <class F>
BObject<F> bobj_make(int n, Module M, Module N, ModMap<F> gamma) {
  M = module_with_amb(std::move(M), n);
  N = module_with_amb(std::move(N), nrow_amb(n));
  nh_check(n > 0 || N.parts.empty(), "bobj_make: rank-0 objects have empty second row");
  nh_check(module_equal(gamma.dom, N) && module_equal(gamma.cod, M) && gamma.deg == 0,
           "bobj_make: gamma endpoints mismatch");
  return BObject<F>{n, std::move(M), std::move(N), std::move(gamma)};
}

template <class F>
BObject<F> bobj_zero(int n) {
  Module M = mod_zero_module(n), N = mod_zero_module(nrow_amb(n));
  return BObject<F>{n, M, N, modmap_zero<F>(N, M, 0)};
}

template <class F>
bool bobj_valid(const BObject<F>& X, std::string* why = nullptr) {
  std::string w;
  if (!modmap_welldefined(X.gamma, &w)) {
    if (why) *why = "gamma ill-defined: " + w;
    return false;
  }
  if (!modmap_homogeneous(X.gamma, &w)) {
    if (why) *why = "gamma inhomogeneous: " + w;
    return false;
  }
  if (X.n >= 1) {
    HElem<F> cond = HElem<F>::yvar(X.n) - HElem<F>::xvar(X.n, X.n);
    for (auto& im : X.gamma.img)
      if (!mod_act(X.M, cond, im).is_zero()) {
        if (why) *why = "image of gamma not annihilated by (y - x_n)";
        return false;
      }
  }
  return true;
}

template <class F>
BObject<F> bobj_sum(const BObject<F>& a, const BObject<F>& b) {
  nh_check(a.n == b.n, "bobj_sum: rank mismatch");
  Module M = module_with_amb(mod_sum(a.M, b.M), a.n);
  Module N = module_with_amb(mod_sum(a.N, b.N), nrow_amb(a.n));
  std::vector<MapBlock<F>> blocks{{0, 0, &a.gamma, F(1)},
                                  {static_cast<int>(a.N.parts.size()),
                                   static_cast<int>(a.M.parts.size()), &b.gamma, F(1)}};
  ModMap<F> gamma = modmap_assemble<F>(N, M, 0, blocks);
  return BObject<F>{a.n, std::move(M), std::move(N), std::move(gamma)};
}

template <class F>
BObject<F> bobj_shifted(const BObject<F>& X, int ds) {
  BObject<F> r{X.n, mod_shifted(X.M, ds), mod_shifted(X.N, ds), X.gamma};
  r.gamma.dom = r.N;
  r.gamma.cod = r.M;
  return r;
}

template <class F>
bool bobj_equal(const BObject<F>& a, const BObject<F>& b) {
  return a.n == b.n && module_equal(a.M, b.M) && module_equal(a.N, b.N) &&
         modmap_equal(a.gamma, b.gamma);
}

// ---------------------------------------------------------------- morphisms

template <class F>
struct BMorphism {
  ModMap<F> fM, fN;
};

template <class F>
int bmor_deg(const BMorphism<F>& f) { return f.fM.deg; }

template <class F>
BMorphism<F> bmor_zero(const BObject<F>& dom, const BObject<F>& cod, int deg = 0) {
  return {modmap_zero<F>(dom.M, cod.M, deg), modmap_zero<F>(dom.N, cod.N, deg)};
}

template <class F>
BMorphism<F> bmor_identity(const BObject<F>& X) {
  return {modmap_identity<F>(X.M), modmap_identity<F>(X.N)};
}

template <class F>
BMorphism<F> bmor_compose(const BMorphism<F>& g, const BMorphism<F>& f) {
  return {modmap_compose(g.fM, f.fM), modmap_compose(g.fN, f.fN)};
}

template <class F>
BMorphism<F> bmor_add(const BMorphism<F>& a, const BMorphism<F>& b) {
  return {modmap_add(a.fM, b.fM), modmap_add(a.fN, b.fN)};
}

template <class F>
BMorphism<F> bmor_scaled(const BMorphism<F>& a, const F& c) {
  return {modmap_scaled(a.fM, c), modmap_scaled(a.fN, c)};
}

template <class F>
bool bmor_equal(const BMorphism<F>& a, const BMorphism<F>& b) {
  return modmap_equal(a.fM, b.fM) && modmap_equal(a.fN, b.fN);
}

template <class F>
bool bmor_is_zero(const BMorphism<F>& f) {
  for (auto& im : f.fM.img)
    if (!im.is_zero()) return false;
  for (auto& im : f.fN.img)
    if (!im.is_zero()) return false;
  return true;
}

template <class F>
bool bmor_valid(const BObject<F>& dom, const BObject<F>& cod, const BMorphism<F>& f,
                std::string* why = nullptr) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (!module_equal(f.fM.dom, dom.M) || !module_equal(f.fM.cod, cod.M) ||
      !module_equal(f.fN.dom, dom.N) || !module_equal(f.fN.cod, cod.N))
    return fail("endpoints mismatch");
  if (f.fM.deg != f.fN.deg) return fail("row degrees differ");
  std::string w;
  if (!modmap_welldefined(f.fM, &w)) return fail("top row ill-defined: " + w);
  if (!modmap_welldefined(f.fN, &w)) return fail("bottom row ill-defined: " + w);
  if (!modmap_homogeneous(f.fM, &w)) return fail("top row inhomogeneous: " + w);
  if (!modmap_homogeneous(f.fN, &w)) return fail("bottom row inhomogeneous: " + w);
  if (!modmap_equal(modmap_compose(f.fM, dom.gamma), modmap_compose(cod.gamma, f.fN)))
    return fail("gamma square does not commute");
  return true;
}

// ---------------------------------------------------------------- complexes

template <class F>
struct BComplex {
  int n = 0;
  int lo = 0;                       // homological degree of terms[0]
  std::vector<BObject<F>> terms;    // differentials raise homological degree
  std::vector<BMorphism<F>> diffs;  // diffs[i]: terms[i] -> terms[i+1]
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
};

template <class F>
BComplex<F> bcomplex_single(int n, BObject<F> X, int at = 0) {
  BComplex<F> C;
  C.n = n;
  C.lo = at;
  C.terms.push_back(std::move(X));
  return C;
}

template <class F>
BComplex<F> complex_window(const BComplex<F>& C, int lo, int hi) {
  nh_check(lo <= C.lo && hi >= C.hi(), "complex_window: window must grow");
  BComplex<F> R;
  R.n = C.n;
  R.lo = lo;
  for (int k = lo; k <= hi; ++k) {
    if (k >= C.lo && k <= C.hi())
      R.terms.push_back(C.terms[k - C.lo]);
    else
      R.terms.push_back(bobj_zero<F>(C.n));
  }
  for (int k = lo; k < hi; ++k) {
    if (k >= C.lo && k + 1 <= C.hi() && k - C.lo < static_cast<int>(C.diffs.size()))
      R.diffs.push_back(C.diffs[k - C.lo]);
    else
      R.diffs.push_back(bmor_zero(R.terms[k - lo], R.terms[k + 1 - lo]));
  }
  return R;
}

template <class F>
BComplex<F> bcomplex_shifted(const BComplex<F>& C, int ds) {
  BComplex<F> R;
  R.n = C.n;
  R.lo = C.lo;
  for (auto& t : C.terms) R.terms.push_back(bobj_shifted(t, ds));
  for (std::size_t i = 0; i < C.diffs.size(); ++i)
    R.diffs.push_back({modmap_reshifted(C.diffs[i].fM, ds), modmap_reshifted(C.diffs[i].fN, ds)});
  return R;
}

template <class F>
bool bcomplex_equal(const BComplex<F>& A, const BComplex<F>& B) {
  if (A.n != B.n || A.lo != B.lo || A.terms.size() != B.terms.size()) return false;
  for (std::size_t i = 0; i < A.terms.size(); ++i)
    if (!bobj_equal(A.terms[i], B.terms[i])) return false;
  for (std::size_t i = 0; i < A.diffs.size(); ++i)
    if (!bmor_equal(A.diffs[i], B.diffs[i])) return false;
  return true;
}

template <class F>
bool bcomplex_valid(const BComplex<F>& C, std::string* why = nullptr) {
  std::string w;
  for (std::size_t i = 0; i < C.terms.size(); ++i) {
    if (C.terms[i].n != C.n) {
      if (why) *why = "term rank mismatch";
      return false;
    }
    if (!bobj_valid(C.terms[i], &w)) {
      if (why) *why = "term " + std::to_string(C.lo + static_cast<int>(i)) + ": " + w;
      return false;
    }
  }
  nh_check(C.diffs.size() + 1 == C.terms.size() || (C.terms.size() <= 1 && C.diffs.empty()),
           "bcomplex_valid: differential count mismatch");
  for (std::size_t i = 0; i < C.diffs.size(); ++i) {
    if (bmor_deg(C.diffs[i]) != 0) {
      if (why) *why = "differential has nonzero degree";
      return false;
    }
    if (!bmor_valid(C.terms[i], C.terms[i + 1], C.diffs[i], &w)) {
      if (why) *why = "differential " + std::to_string(C.lo + static_cast<int>(i)) + ": " + w;
      return false;
    }
    if (i + 1 < C.diffs.size() && !bmor_is_zero(bmor_compose(C.diffs[i + 1], C.diffs[i]))) {
      if (why) *why = "d o d nonzero at " + std::to_string(C.lo + static_cast<int>(i));
      return false;
    }
  }
  return true;
}

// --------------------------------------------------------------- chain maps

template <class F>
struct ChainMap {
  BComplex<F> dom, cod;             // padded to a shared window
  int deg = 0;                      // added v-degree
  std::vector<BMorphism<F>> comp;   // comp[i]: dom.terms[i] -> cod.terms[i]
};

template <class F>
ChainMap<F> chainmap_make(const BComplex<F>& dom, const BComplex<F>& cod, int deg,
                          const std::map<int, BMorphism<F>>& comps) {
  int lo = std::min(dom.lo, cod.lo), hi = std::max(dom.hi(), cod.hi());
  ChainMap<F> u;
  u.dom = complex_window(dom, lo, hi);
  u.cod = complex_window(cod, lo, hi);
  u.deg = deg;
  for (int k = lo; k <= hi; ++k) {
    auto it = comps.find(k);
    if (it != comps.end())
      u.comp.push_back(it->second);
    else
      u.comp.push_back(bmor_zero(u.dom.terms[k - lo], u.cod.terms[k - lo], deg));
  }
  return u;
}

template <class F>
ChainMap<F> chainmap_zero(const BComplex<F>& dom, const BComplex<F>& cod, int deg = 0) {
  return chainmap_make(dom, cod, deg, {});
}

template <class F>
ChainMap<F> chainmap_identity(const BComplex<F>& C) {
  std::map<int, BMorphism<F>> comps;
  for (int k = C.lo; k <= C.hi(); ++k) comps.emplace(k, bmor_identity(C.terms[k - C.lo]));
  return chainmap_make(C, C, 0, comps);
}

template <class F>
ChainMap<F> chainmap_padded(const ChainMap<F>& u, int lo, int hi) {
  ChainMap<F> r;
  r.dom = complex_window(u.dom, lo, hi);
  r.cod = complex_window(u.cod, lo, hi);
  r.deg = u.deg;
  for (int k = lo; k <= hi; ++k) {
    if (k >= u.dom.lo && k <= u.dom.hi())
      r.comp.push_back(u.comp[k - u.dom.lo]);
    else
      r.comp.push_back(bmor_zero(r.dom.terms[k - lo], r.cod.terms[k - lo], u.deg));
  }
  return r;
}

template <class F>
ChainMap<F> chainmap_compose(const ChainMap<F>& g, const ChainMap<F>& f) {
  int lo = std::min(f.dom.lo, g.dom.lo), hi = std::max(f.dom.hi(), g.dom.hi());
  ChainMap<F> fp = chainmap_padded(f, lo, hi), gp = chainmap_padded(g, lo, hi);
  nh_check(bcomplex_equal(fp.cod, gp.dom), "chainmap_compose: middle complexes differ");
  ChainMap<F> r;
  r.dom = fp.dom;
  r.cod = gp.cod;
  r.deg = f.deg + g.deg;
  for (std::size_t i = 0; i < fp.comp.size(); ++i)
    r.comp.push_back(bmor_compose(gp.comp[i], fp.comp[i]));
  return r;
}

template <class F>
ChainMap<F> chainmap_add(const ChainMap<F>& a, const ChainMap<F>& b) {
  int lo = std::min(a.dom.lo, b.dom.lo), hi = std::max(a.dom.hi(), b.dom.hi());
  ChainMap<F> ap = chainmap_padded(a, lo, hi), bp = chainmap_padded(b, lo, hi);
  nh_check(bcomplex_equal(ap.dom, bp.dom) && bcomplex_equal(ap.cod, bp.cod) && a.deg == b.deg,
           "chainmap_add: shape mismatch");
  ChainMap<F> r = ap;
  for (std::size_t i = 0; i < r.comp.size(); ++i) r.comp[i] = bmor_add(r.comp[i], bp.comp[i]);
  return r;
}

template <class F>
ChainMap<F> chainmap_scaled(const ChainMap<F>& a, const F& c) {
  ChainMap<F> r = a;
  for (auto& f : r.comp) f = bmor_scaled(f, c);
  return r;
}

template <class F>
bool chainmap_equal(const ChainMap<F>& a, const ChainMap<F>& b) {
  int lo = std::min(a.dom.lo, b.dom.lo), hi = std::max(a.dom.hi(), b.dom.hi());
  ChainMap<F> ap = chainmap_padded(a, lo, hi), bp = chainmap_padded(b, lo, hi);
  if (!bcomplex_equal(ap.dom, bp.dom) || !bcomplex_equal(ap.cod, bp.cod)) return false;
  for (std::size_t i = 0; i < ap.comp.size(); ++i)
    if (!bmor_equal(ap.comp[i], bp.comp[i])) return false;
  return true;
}

template <class F>
bool chainmap_valid(const ChainMap<F>& u, std::string* why = nullptr) {
  std::string w;
  if (u.dom.lo != u.cod.lo || u.dom.terms.size() != u.cod.terms.size()) {
    if (why) *why = "windows differ";
    return false;
  }
  for (std::size_t i = 0; i < u.comp.size(); ++i) {
    if (bmor_deg(u.comp[i]) != u.deg) {
      if (why) *why = "component degree mismatch";
      return false;
    }
    if (!bmor_valid(u.dom.terms[i], u.cod.terms[i], u.comp[i], &w)) {
      if (why) *why = "component " + std::to_string(u.dom.lo + static_cast<int>(i)) + ": " + w;
      return false;
    }
  }
  for (std::size_t i = 0; i + 1 < u.comp.size(); ++i) {
    BMorphism<F> a = bmor_compose(u.cod.diffs[i], u.comp[i]);
    BMorphism<F> b = bmor_compose(u.comp[i + 1], u.dom.diffs[i]);
    if (!bmor_equal(a, b)) {
      if (why) *why = "square at " + std::to_string(u.dom.lo + static_cast<int>(i)) +
                      " does not commute";
      return false;
    }
  }
  return true;
}

// The cone of a degree-0 chain map u: A -> B has term k = A^{k+1} (+) B^k and
// differential [-d_A, 0; u, d_B].
template <class F>
BComplex<F> cone(const ChainMap<F>& u) {
  nh_check(u.deg == 0, "cone: expects a degree-0 chain map");
  const BComplex<F>& A = u.dom;
  const BComplex<F>& B = u.cod;
  int lo = A.lo, hi = A.hi();
  BComplex<F> C;
  C.n = A.n;
  C.lo = lo - 1;
  auto apiece = [&](int k) { return k >= lo && k <= hi ? A.terms[k - lo] : bobj_zero<F>(A.n); };
  auto bpiece = [&](int k) { return k >= lo && k <= hi ? B.terms[k - lo] : bobj_zero<F>(B.n); };
  for (int k = lo - 1; k <= hi; ++k) C.terms.push_back(bobj_sum(apiece(k + 1), bpiece(k)));
  for (int k = lo - 1; k < hi; ++k) {
    BObject<F> a1 = apiece(k + 1), a2 = apiece(k + 2);
    const BObject<F>& dom = C.terms[k - (lo - 1)];
    const BObject<F>& cod = C.terms[k + 1 - (lo - 1)];
    std::vector<MapBlock<F>> mb, nb;
    if (k + 1 >= lo && k + 1 < hi) {  // -d_A^{k+1}
      const BMorphism<F>& d = A.diffs[k + 1 - lo];
      mb.push_back({0, 0, &d.fM, F(-1)});
      nb.push_back({0, 0, &d.fN, F(-1)});
    }
    if (k + 1 >= lo && k + 1 <= hi) {  // u^{k+1}
      const BMorphism<F>& c = u.comp[k + 1 - lo];
      mb.push_back({0, static_cast<int>(a2.M.parts.size()), &c.fM, F(1)});
      nb.push_back({0, static_cast<int>(a2.N.parts.size()), &c.fN, F(1)});
    }
    if (k >= lo && k < hi) {  // d_B^k
      const BMorphism<F>& d = B.diffs[k - lo];
      mb.push_back({static_cast<int>(a1.M.parts.size()), static_cast<int>(a2.M.parts.size()),
                    &d.fM, F(1)});
      nb.push_back({static_cast<int>(a1.N.parts.size()), static_cast<int>(a2.N.parts.size()),
                    &d.fN, F(1)});
    }
    C.diffs.push_back({modmap_assemble<F>(dom.M, cod.M, 0, mb),
                       modmap_assemble<F>(dom.N, cod.N, 0, nb)});
  }
  return C;
}

// ------------------------------------------------------- rows and exactness

template <class F>
std::vector<ModMap<F>> complex_row(const BComplex<F>& C, bool mrow) {
  std::vector<ModMap<F>> d;
  for (auto& f : C.diffs) d.push_back(mrow ? f.fM : f.fN);
  return d;
}

// Degreewise acyclicity of both rows over a degree window.
template <class F>
CheckResult complex_rows_exact(const BComplex<F>& C, int dlo, int dhi) {
  for (bool mrow : {true, false}) {
    std::vector<ModMap<F>> d = complex_row(C, mrow);
    if (d.empty()) {
      for (int deg = dlo; deg <= dhi; ++deg)
        if (mod_dim(mrow ? C.terms[0].M : C.terms[0].N, deg) != 0)
          return check_fail("single-term complex has nonzero dimension");
      continue;
    }
    CheckResult r = complex_exact_check(d, dlo, dhi);
    if (!r.ok)
      return check_fail(std::string(mrow ? "top" : "bottom") + " row: " + r.detail);
  }
  return {};
}

// A degree-0 chain map is a quasi-isomorphism exactly when both rows of its
// cone are acyclic; this certifies that degree by degree.
template <class F>
CheckResult quasi_iso_check(const ChainMap<F>& u, int dlo, int dhi) {
  std::string w;
  if (!chainmap_valid(u, &w)) return check_fail("not a chain map: " + w);
  return complex_rows_exact(cone(u), dlo, dhi);
}

// ----------------------------------------------------- the induction functor

// E([M; N; gamma]) is the two-term complex of rank-(n+1) objects
//   [H(n+1)[y] (x) M; H(n)[y] (x) N; (x_n - y) tau_n (x) gamma]
//     --d--> [H(n+1)iota (x) M; M; 1 (x) -]
// with d the canonical map on top rows and a (x) m -> a gamma(m) on bottom.
template <class F>
struct EObj {
  BObject<F> e0, e1;
  BMorphism<F> dv;
};

template <class F>
EObj<F> apply_E_obj(const BObject<F>& X) {
  int n = X.n;
  EObj<F> r;
  Module M0 = ind_top_module(X.M);
  Module N0 = module_with_amb(ind_top_module(X.N), nrow_amb(n + 1));
  ModMap<F> g0 = modmap_zero<F>(N0, M0, 0);
  if (mod_gen_count(N0) > 0) {
    HElem<F> c = (HElem<F>::xvar(n + 1, n) - HElem<F>::yvar(n + 1)) * HElem<F>::tau(n + 1, n);
    for (int g = 0; g < mod_gen_count(N0); ++g)
      g0.img[g] = mod_act(M0, c, mod_wrap(M0, X.gamma.img[g]));
  }
  r.e0 = BObject<F>{n + 1, M0, N0, g0};

  Module M1 = ind_fold_module(X.M);
  Module N1 = X.M;
  ModMap<F> g1 = modmap_zero<F>(N1, M1, 0);
  for (int g = 0; g < mod_gen_count(N1); ++g) g1.img[g] = mod_wrap(M1, mod_gen<F>(X.M, g));
  r.e1 = BObject<F>{n + 1, M1, N1, g1};

  ModMap<F> dN{N0, N1, 0, {}};
  for (int g = 0; g < mod_gen_count(N0); ++g) dN.img.push_back(X.gamma.img[g]);
  r.dv = BMorphism<F>{modmap_gens_to_gens<F>(M0, M1), std::move(dN)};
  return r;
}

template <class F>
BComplex<F> apply_E(const BComplex<F>& C) {
  int lo = C.lo, hi = C.hi();
  std::vector<EObj<F>> eo;
  for (auto& t : C.terms) eo.push_back(apply_E_obj(t));
  BComplex<F> R;
  R.n = C.n + 1;
  R.lo = lo;
  for (int k = lo; k <= hi + 1; ++k) {
    bool has0 = k <= hi, has1 = k > lo;
    if (has0 && has1)
      R.terms.push_back(bobj_sum(eo[k - lo].e0, eo[k - 1 - lo].e1));
    else if (has0)
      R.terms.push_back(eo[k - lo].e0);
    else
      R.terms.push_back(eo[k - 1 - lo].e1);
  }
  // Wrapped differentials are built once and kept alive for block assembly.
  std::vector<BMorphism<F>> e0d, e1d;
  for (int k = lo; k < hi; ++k) {
    const BMorphism<F>& d = C.diffs[k - lo];
    e0d.push_back({modmap_wrap(eo[k - lo].e0.M, eo[k + 1 - lo].e0.M, d.fM),
                   modmap_wrap(eo[k - lo].e0.N, eo[k + 1 - lo].e0.N, d.fN)});
    e1d.push_back({modmap_wrap(eo[k - lo].e1.M, eo[k + 1 - lo].e1.M, d.fM), d.fM});
  }
  for (int k = lo; k <= hi; ++k) {
    const BObject<F>& dom = R.terms[k - lo];
    const BObject<F>& cod = R.terms[k + 1 - lo];
    bool dom_has0 = k <= hi, dom_has1 = k > lo, cod_has0 = k + 1 <= hi;
    int codoffM = cod_has0 ? static_cast<int>(eo[k + 1 - lo].e0.M.parts.size()) : 0;
    int codoffN = cod_has0 ? static_cast<int>(eo[k + 1 - lo].e0.N.parts.size()) : 0;
    F sign = (k % 2 == 0) ? F(1) : F(-1);
    std::vector<MapBlock<F>> mb, nb;
    if (dom_has0 && cod_has0) {
      mb.push_back({0, 0, &e0d[k - lo].fM, F(1)});
      nb.push_back({0, 0, &e0d[k - lo].fN, F(1)});
    }
    if (dom_has0) {
      mb.push_back({0, codoffM, &eo[k - lo].dv.fM, sign});
      nb.push_back({0, codoffN, &eo[k - lo].dv.fN, sign});
    }
    if (dom_has1) {
      int domoffM = dom_has0 ? static_cast<int>(eo[k - lo].e0.M.parts.size()) : 0;
      int domoffN = dom_has0 ? static_cast<int>(eo[k - lo].e0.N.parts.size()) : 0;
      mb.push_back({domoffM, codoffM, &e1d[k - 1 - lo].fM, F(1)});
      nb.push_back({domoffN, codoffN, &e1d[k - 1 - lo].fN, F(1)});
    }
    R.diffs.push_back({modmap_assemble<F>(dom.M, cod.M, 0, mb),
                       modmap_assemble<F>(dom.N, cod.N, 0, nb)});
  }
  return R;
}

template <class F>
ChainMap<F> apply_E_chainmap(const ChainMap<F>& u) {
  const BComplex<F>& A = u.dom;
  const BComplex<F>& B = u.cod;
  int lo = A.lo, hi = A.hi();
  BComplex<F> EA = apply_E(A), EB = apply_E(B);
  ChainMap<F> r;
  r.dom = EA;
  r.cod = EB;
  r.deg = u.deg;
  std::vector<BMorphism<F>> w0, w1;
  for (int k = lo; k <= hi; ++k) {
    const BMorphism<F>& c = u.comp[k - lo];
    w0.push_back({modmap_wrap(ind_top_module(A.terms[k - lo].M), ind_top_module(B.terms[k - lo].M),
                              c.fM),
                  modmap_wrap(module_with_amb(ind_top_module(A.terms[k - lo].N), nrow_amb(A.n + 1)),
                              module_with_amb(ind_top_module(B.terms[k - lo].N), nrow_amb(B.n + 1)),
                              c.fN)});
    w1.push_back({modmap_wrap(ind_fold_module(A.terms[k - lo].M),
                              ind_fold_module(B.terms[k - lo].M), c.fM),
                  c.fM});
  }
  for (int k = lo; k <= hi + 1; ++k) {
    bool has0 = k <= hi, has1 = k > lo;
    const BObject<F>& dom = EA.terms[k - lo];
    const BObject<F>& cod = EB.terms[k - lo];
    std::vector<MapBlock<F>> mb, nb;
    if (has0) {
      mb.push_back({0, 0, &w0[k - lo].fM, F(1)});
      nb.push_back({0, 0, &w0[k - lo].fN, F(1)});
    }
    if (has1) {
      int domoffM = has0 ? static_cast<int>(ind_top_module(A.terms[k - lo].M).parts.size()) : 0;
      int codoffM = has0 ? static_cast<int>(ind_top_module(B.terms[k - lo].M).parts.size()) : 0;
      int domoffN = has0 ? static_cast<int>(A.terms[k - lo].N.parts.size()) : 0;
      int codoffN = has0 ? static_cast<int>(B.terms[k - lo].N.parts.size()) : 0;
      mb.push_back({domoffM, codoffM, &w1[k - 1 - lo].fM, F(1)});
      nb.push_back({domoffN, codoffN, &w1[k - 1 - lo].fN, F(1)});
    }
    r.comp.push_back({modmap_assemble<F>(dom.M, cod.M, u.deg, mb),
                      modmap_assemble<F>(dom.N, cod.N, u.deg, nb)});
  }
  return r;
}

// ----------------------------------------------- the right induction functor

// (X)E glues a new bottom strand: both rows are induced through the inclusion
// that shifts all strands up by one, and gamma becomes 1 (x) gamma.
template <class F>
BObject<F> apply_right_E_obj(const BObject<F>& X) {
  Module M1 = right_ind_module(X.M, 1);
  Module N1 = module_with_amb(right_ind_module(X.N, 1), nrow_amb(X.n + 1));
  ModMap<F> g1 = modmap_zero<F>(N1, M1, 0);
  for (int g = 0; g < mod_gen_count(N1); ++g) g1.img[g] = mod_wrap(M1, X.gamma.img[g]);
  return BObject<F>{X.n + 1, M1, N1, g1};
}

template <class F>
BComplex<F> apply_right_E(const BComplex<F>& C) {
  BComplex<F> R;
  R.n = C.n + 1;
  R.lo = C.lo;
  for (auto& t : C.terms) R.terms.push_back(apply_right_E_obj(t));
  for (std::size_t i = 0; i < C.diffs.size(); ++i)
    R.diffs.push_back({modmap_wrap(R.terms[i].M, R.terms[i + 1].M, C.diffs[i].fM),
                       modmap_wrap(R.terms[i].N, R.terms[i + 1].N, C.diffs[i].fN)});
  return R;
}

template <class F>
ChainMap<F> apply_right_E_chainmap(const ChainMap<F>& u) {
  ChainMap<F> r;
  r.dom = apply_right_E(u.dom);
  r.cod = apply_right_E(u.cod);
  r.deg = u.deg;
  for (std::size_t i = 0; i < u.comp.size(); ++i)
    r.comp.push_back({modmap_wrap(r.dom.terms[i].M, r.cod.terms[i].M, u.comp[i].fM),
                      modmap_wrap(r.dom.terms[i].N, r.cod.terms[i].N, u.comp[i].fN)});
  return r;
}

// ------------------------------------------------ commutation of E and right E

// E((Z)E) and (E(Z))E agree part by part up to the order in which the two
// wrappers are applied, and the generator-to-generator maps in both
// directions are mutually inverse isomorphisms of complexes.
template <class F>
struct CommuteIso {
  BComplex<F> ere;  // E((Z)E)
  BComplex<F> ree;  // (E(Z))E
  ChainMap<F> phi;  // ere -> ree
  ChainMap<F> psi;  // ree -> ere
};

template <class F>
CommuteIso<F> commute_iso(const BComplex<F>& Z) {
  CommuteIso<F> r;
  r.ere = apply_E(apply_right_E(Z));
  r.ree = apply_right_E(apply_E(Z));
  std::map<int, BMorphism<F>> fwd, bwd;
  for (int k = r.ere.lo; k <= r.ere.hi(); ++k) {
    const BObject<F>& a = r.ere.terms[k - r.ere.lo];
    const BObject<F>& b = r.ree.terms[k - r.ree.lo];
    fwd.emplace(k, BMorphism<F>{modmap_gens_to_gens<F>(a.M, b.M),
                                modmap_gens_to_gens<F>(a.N, b.N)});
    bwd.emplace(k, BMorphism<F>{modmap_gens_to_gens<F>(b.M, a.M),
                                modmap_gens_to_gens<F>(b.N, a.N)});
  }
  r.phi = chainmap_make(r.ere, r.ree, 0, fwd);
  r.psi = chainmap_make(r.ree, r.ere, 0, bwd);
  return r;
}

}  // namespace nilhecke
