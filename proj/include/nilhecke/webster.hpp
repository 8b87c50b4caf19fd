#pragma once

// The diagram language of the one-red-strand tensor category: objects are
// E^a * E^b (a black strands left of the red strand *, b to its right),
// morphisms are words in whiskered layers of the generators
//   rho : *E -> E*,   lam : E* -> *E,   x@p (a dot),   tau@p (a crossing),
// composed right-to-left with the composition sign "o" (U+2218).
//
// This header provides
//   * the parser and the type checker (the red-strand position propagates
//     through dot/crossing layers and defaults to the smallest consistent
//     value, 0 if unconstrained),
//   * the degree function (deg rho = deg x = 2, deg tau = -2, deg lam = 0),
//   * eval_R: the algebra-valued evaluation into H_N[y] used as the equality
//     oracle.  Conventions (fixed by the anchor suite below, and applied
//     consistently everywhere):
//       - strand p of the diagram acts on ambient strand N + 1 - p,
//       - a dot on strand p evaluates to x_{N+1-p} - y,
//       - a crossing at (p, p+1) evaluates to MINUS tau_{N-p}; the sign makes
//         the mixed relation rho.E o *tau o lam.E - E.lam o tau* o E.rho = id
//         evaluate to +1 instead of -1,
//       - a composition evaluates to the product of the layer values in
//         application order (the evaluation is an anti-homomorphism),
//   * eval_Phi: the chain-map-valued evaluation into the Y complexes.  The
//     core values are rho_bar = [x_1 - y; 0] : Y_{0,1} -> Y_{1,0} and
//     lam_bar = [id; 0] : Y_{1,0} -> Y_{0,1}; dots and crossings act through
//     the two algebra actions of ycomplex.hpp; right whiskers are conjugation
//     by the right-induction step isomorphisms; left whiskers are transports
//     along the comparison maps g_{n,m}, unique by rigidity,
//   * the faithful-evaluation identity q_of_chainmap o eval_Phi = eval_R,
//   * the seven defining local relations and their whiskered checks,
//   * the twist substitution sigma_y : x_i -> x_i - y (an automorphism).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nilhecke/homsolver.hpp"
#include "nilhecke/ycomplex.hpp"

namespace nilhecke {

// --------------------------------------------------------------- word AST

enum class WGen { kRho, kLam, kX, kTau, kId };

inline int wgen_strands(WGen g) {
  switch (g) {
    case WGen::kTau:
      return 2;
    case WGen::kId:
      return 0;
    default:
      return 1;
  }
}

// Change of the red-strand position a across one layer.
inline int wgen_shift(WGen g) {
  return g == WGen::kRho ? 1 : (g == WGen::kLam ? -1 : 0);
}

inline int wgen_vdeg(WGen g) {
  switch (g) {
    case WGen::kRho:
    case WGen::kX:
      return 2;
    case WGen::kTau:
      return -2;
    default:
      return 0;
  }
}

inline std::string wgen_str(WGen g) {
  switch (g) {
    case WGen::kRho:
      return "rho";
    case WGen::kLam:
      return "lam";
    case WGen::kX:
      return "x";
    case WGen::kTau:
      return "tau";
    default:
      return "id";
  }
}

// One parsed layer E^lw . GEN . E^rw; a whisker count of -1 means the side
// was not written and is unconstrained.
struct WLayer {
  WGen gen = WGen::kId;
  int pos = 0;  // diagram strand position for kX / kTau (1-based)
  int lw = -1;
  int rw = -1;
};

// Layers in application order: layers[0] is the rightmost factor of the
// composition and acts first.
struct WWord {
  std::vector<WLayer> layers;
};

struct TypedLayer {
  WGen gen = WGen::kId;
  int pos = 0;
  int a_dom = 0, b_dom = 0;
  int a_cod = 0, b_cod = 0;
};

struct TypedWord {
  int total = 0;  // number of black strands N
  int a_dom = 0, b_dom = 0;
  int a_cod = 0, b_cod = 0;
  int deg = 0;
  std::vector<TypedLayer> layers;  // application order
};

// ----------------------------------------------------------------- parser

namespace detail {

inline bool parse_uint(const std::string& s, std::size_t& i, int& out) {
  std::size_t j = i;
  long v = 0;
  while (j < s.size() && s[j] >= '0' && s[j] <= '9') {
    v = v * 10 + (s[j] - '0');
    nh_check(v <= 1000000, "parse: number too large");
    ++j;
  }
  if (j == i) return false;
  out = static_cast<int>(v);
  i = j;
  return true;
}

inline WLayer parse_layer(const std::string& s, std::size_t at) {
  // s is a whitespace-free layer like "E^1.tau@2.E^0".
  std::vector<std::string> segs;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == '.') {
      segs.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  nh_check(!segs.empty() && !segs[0].empty(),
           "parse: empty layer at offset " + std::to_string(at));
  WLayer l;
  std::size_t g = 0, gend = segs.size();
  auto whisker = [&](const std::string& t, int& out) {
    if (t.size() < 3 || t[0] != 'E' || t[1] != '^') return false;
    std::size_t i = 2;
    int v = 0;
    if (!parse_uint(t, i, v) || i != t.size()) return false;
    out = v;
    return true;
  };
  if (segs.size() > 1 && whisker(segs.front(), l.lw)) g = 1;
  if (gend - g > 1 && whisker(segs.back(), l.rw)) --gend;
  nh_check(gend - g == 1, "parse: expected exactly one generator in layer at offset " +
                              std::to_string(at));
  const std::string& t = segs[g];
  auto gen_at = [&](const std::string& name, WGen w) {
    if (t.compare(0, name.size(), name) != 0) return false;
    std::size_t i = name.size();
    if (w == WGen::kX || w == WGen::kTau) {
      nh_check(i < t.size() && t[i] == '@',
               "parse: expected @position at offset " + std::to_string(at));
      ++i;
      nh_check(parse_uint(t, i, l.pos) && l.pos >= 1,
               "parse: bad strand position at offset " + std::to_string(at));
    }
    nh_check(i == t.size(), "parse: trailing characters in layer at offset " +
                                std::to_string(at));
    l.gen = w;
    return true;
  };
  if (!(gen_at("rho", WGen::kRho) || gen_at("lam", WGen::kLam) ||
        gen_at("tau", WGen::kTau) || gen_at("x", WGen::kX) || gen_at("id", WGen::kId)))
    nh_check(false, "parse: unknown generator '" + t + "' at offset " + std::to_string(at));
  return l;
}

}  // namespace detail

// Grammar:  word := layer | word "o" word   (right-to-left composition,
// "o" is U+2218);  layer := ["E^" INT "."] GEN ["." "E^" INT];
// GEN := "rho" | "lam" | "x@" INT | "tau@" INT | "id".  Whitespace is
// insignificant.
inline WWord parse_word(const std::string& text) {
  static const std::string kCirc = "\xe2\x88\x98";  // U+2218 RING OPERATOR
  std::vector<std::pair<std::string, std::size_t>> pieces;
  std::string cur;
  std::size_t curat = 0;
  auto flush = [&](std::size_t at) {
    nh_check(!cur.empty(), "parse: empty factor at offset " + std::to_string(at));
    pieces.emplace_back(cur, curat);
    cur.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    if (text.compare(i, kCirc.size(), kCirc) == 0) {
      flush(i);
      i += kCirc.size();
      curat = i;
      continue;
    }
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (cur.empty()) curat = i;
    cur += c;
    ++i;
  }
  flush(text.size());
  WWord w;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
    w.layers.push_back(detail::parse_layer(it->first, it->second));
  return w;
}

// ----------------------------------------------------------- type checking

// Resolves the strand count N and the red-strand position along the word.
// Explicit whiskers pin them; otherwise the smallest consistent values are
// chosen (so an unconstrained word starts with the red strand leftmost).
// force_total / force_adom (-1 = none) add external pins.
inline TypedWord type_word(const WWord& w, int force_total = -1, int force_adom = -1) {
  int k = static_cast<int>(w.layers.size());
  nh_check(k >= 1, "type_word: empty word");
  std::vector<int> prefix(k + 1, 0);
  for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + wgen_shift(w.layers[i].gen);

  std::optional<int> npin;
  auto pin_n = [&](int v, int layer) {
    nh_check(v >= 0, "type_word: negative strand count at layer " + std::to_string(layer));
    nh_check(!npin || *npin == v,
             "type_word: strand counts disagree at layer " + std::to_string(layer));
    npin = v;
  };
  int nmin = 0, slack = 2;
  for (int i = 0; i < k; ++i) {
    const WLayer& l = w.layers[i];
    int core = wgen_strands(l.gen);
    if (l.lw >= 0) slack += l.lw;
    if (l.rw >= 0) slack += l.rw;
    switch (l.gen) {
      case WGen::kX:
      case WGen::kTau:
        nh_check(l.lw < 0 || l.pos == l.lw + 1,
                 "type_word: whisker/position mismatch at layer " + std::to_string(i));
        if (l.lw >= 0 && l.rw >= 0) pin_n(l.lw + core + l.rw, i);
        else if (l.rw >= 0) pin_n(l.pos + core - 1 + l.rw, i);
        nmin = std::max(nmin, l.pos + core - 1);
        break;
      case WGen::kRho:
      case WGen::kLam:
        if (l.lw >= 0 && l.rw >= 0) pin_n(l.lw + 1 + l.rw, i);
        nmin = std::max(nmin, 1);
        if (l.lw >= 0) nmin = std::max(nmin, l.lw + 1);
        if (l.rw >= 0) nmin = std::max(nmin, l.rw + 1);
        break;
      case WGen::kId:
        if (l.lw >= 0 && l.rw >= 0) pin_n(l.lw + l.rw, i);
        if (l.lw >= 0) nmin = std::max(nmin, l.lw);
        if (l.rw >= 0) nmin = std::max(nmin, l.rw);
        break;
    }
  }
  if (force_total >= 0) pin_n(force_total, -1);

  auto try_type = [&](int N, bool final_n) -> std::optional<TypedWord> {
    std::optional<int> a1pin;
    auto pin_a = [&](int v, int layer) -> bool {
      if (a1pin && *a1pin != v) {
        nh_check(!final_n || !npin,
                 "type_word: red-strand positions disagree at layer " + std::to_string(layer));
        return false;
      }
      a1pin = v;
      return true;
    };
    for (int i = 0; i < k; ++i) {
      const WLayer& l = w.layers[i];
      if (l.gen == WGen::kRho) {
        if (l.lw >= 0 && !pin_a(l.lw - prefix[i], i)) return std::nullopt;
        if (l.rw >= 0 && !pin_a(N - 1 - l.rw - prefix[i], i)) return std::nullopt;
      } else if (l.gen == WGen::kLam) {
        if (l.lw >= 0 && !pin_a(l.lw + 1 - prefix[i], i)) return std::nullopt;
        if (l.rw >= 0 && !pin_a(N - l.rw - prefix[i], i)) return std::nullopt;
      }
    }
    if (force_adom >= 0 && !pin_a(force_adom, -1)) return std::nullopt;
    int a_from = a1pin ? *a1pin : 0;
    int a_to = a1pin ? *a1pin : N;
    for (int a1 = a_from; a1 <= a_to; ++a1) {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const WLayer& l = w.layers[i];
        int a = a1 + prefix[i];
        if (a < 0 || a > N || a + wgen_shift(l.gen) < 0 || a + wgen_shift(l.gen) > N)
          ok = false;
        else
          switch (l.gen) {
            case WGen::kRho:
              ok = a <= N - 1;
              break;
            case WGen::kLam:
              ok = a >= 1;
              break;
            case WGen::kX:
              ok = l.pos >= 1 && l.pos <= N;
              break;
            case WGen::kTau:
              ok = l.pos >= 1 && l.pos + 1 <= N && l.pos != a;
              break;
            case WGen::kId:
              break;
          }
      }
      if (!ok) continue;
      TypedWord r;
      r.total = N;
      for (int i = 0; i < k; ++i) {
        const WLayer& l = w.layers[i];
        TypedLayer t;
        t.gen = l.gen;
        t.pos = l.pos;
        t.a_dom = a1 + prefix[i];
        t.b_dom = N - t.a_dom;
        t.a_cod = a1 + prefix[i + 1];
        t.b_cod = N - t.a_cod;
        r.deg += wgen_vdeg(l.gen);
        r.layers.push_back(t);
      }
      r.a_dom = r.layers.front().a_dom;
      r.b_dom = r.layers.front().b_dom;
      r.a_cod = r.layers.back().a_cod;
      r.b_cod = r.layers.back().b_cod;
      return r;
    }
    return std::nullopt;
  };

  if (npin) {
    auto r = try_type(*npin, true);
    nh_check(r.has_value(), "type_word: no consistent red-strand position");
    return *r;
  }
  for (int N = nmin; N <= nmin + slack; ++N)
    if (auto r = try_type(N, false)) return *r;
  nh_check(false, "type_word: no consistent typing");
  return {};
}

inline TypedWord type_text(const std::string& text, int force_total = -1,
                           int force_adom = -1) {
  return type_word(parse_word(text), force_total, force_adom);
}

inline int degree(const TypedWord& w) { return w.deg; }

// Adds addl black strands on the left and addr on the right of every layer.
inline TypedWord whisker_word(TypedWord w, int addl, int addr) {
  nh_check(addl >= 0 && addr >= 0, "whisker_word: negative whisker");
  w.total += addl + addr;
  w.a_dom += addl;
  w.a_cod += addl;
  w.b_dom += addr;
  w.b_cod += addr;
  for (auto& l : w.layers) {
    l.a_dom += addl;
    l.a_cod += addl;
    l.b_dom += addr;
    l.b_cod += addr;
    if (l.gen == WGen::kX || l.gen == WGen::kTau) l.pos += addl;
  }
  return w;
}

// Debug rendering of a typed word (not re-parseable): layers in composition
// order with their red-strand positions.
inline std::string word_str(const TypedWord& w) {
  std::string s;
  for (auto it = w.layers.rbegin(); it != w.layers.rend(); ++it) {
    if (!s.empty()) s += " \xe2\x88\x98 ";
    s += wgen_str(it->gen);
    if (it->gen == WGen::kX || it->gen == WGen::kTau)
      s += "@" + std::to_string(it->pos);
    s += "{" + std::to_string(it->a_dom) + "," + std::to_string(it->b_dom) + "}";
  }
  return s + " [N=" + std::to_string(w.total) + "]";
}

// ------------------------------------------------------------------ eval_R

template <class F>
HElem<F> eval_layer_R(const TypedLayer& l, int N) {
  switch (l.gen) {
    case WGen::kRho:
    case WGen::kId:
      return HElem<F>::unit(N);
    case WGen::kLam:
      return HElem<F>::xvar(N, l.b_dom + 1) - HElem<F>::yvar(N);
    case WGen::kX:
      return HElem<F>::xvar(N, N + 1 - l.pos) - HElem<F>::yvar(N);
    case WGen::kTau:
      return -HElem<F>::tau(N, N - l.pos);
  }
  return HElem<F>::zero(N);
}

template <class F>
HElem<F> eval_R(const TypedWord& w) {
  HElem<F> r = HElem<F>::unit(w.total);
  for (const auto& l : w.layers) r = r * eval_layer_R<F>(l, w.total);
  return r;
}

template <class F>
HElem<F> eval_R_text(const std::string& text) {
  return eval_R<F>(type_text(text));
}

// Two words represent the same morphism iff they have equal endpoints and
// equal algebra values (the evaluation is faithful).
template <class F>
bool morphism_equal(const TypedWord& w1, const TypedWord& w2) {
  nh_check(w1.total == w2.total && w1.a_dom == w2.a_dom && w1.a_cod == w2.a_cod,
           "morphism_equal: domain/codomain mismatch");
  return eval_R<F>(w1) == eval_R<F>(w2);
}

// --------------------------------------------------------------- sigma_y

// The substitution x_i -> x_i - y, tau_i -> tau_i, y -> y; an algebra
// automorphism of H_n[y].
template <class F>
HElem<F> apply_sigma_y(const HElem<F>& h) {
  int n = h.n;
  HElem<F> out = HElem<F>::zero(n);
  for (const auto& [k, c] : h.t) {
    HElem<F> term = HElem<F>::monomial(n, hk_perm(k, n), 0, 0, c);
    for (int i = 1; i <= n; ++i) {
      int e = xp_get(k.px, i);
      if (e > 0)
        term = term * (HElem<F>::xvar(n, i) - HElem<F>::yvar(n)).pow(e);
    }
    int b = hk_y(k);
    if (b > 0) term = term * HElem<F>::yvar(n).pow(b);
    out = out + term;
  }
  return out;
}

// ---------------------------------------------------------------- eval_Phi

// rho_bar = [x_1 - y; 0] : Y_{0,1} -> Y_{1,0}, degree 2.
template <class F>
ChainMap<F> make_rho_bar() {
  BComplex<F> A = make_Y<F>(0, 1);
  BComplex<F> B = make_Y<F>(1, 0);
  const Module& am = A.terms[0].M;
  const Module& bm = B.terms[0].M;
  ModMap<F> fM = modmap_zero<F>(am, bm, 2);
  fM.img[0] = mod_act(bm, HElem<F>::xvar(1, 1) - HElem<F>::yvar(1), mod_gen<F>(bm, 0));
  std::map<int, BMorphism<F>> comps;
  comps[0] = BMorphism<F>{fM, modmap_zero<F>(A.terms[0].N, B.terms[0].N, 2)};
  return chainmap_make(A, B, 2, comps);
}

// lam_bar = [id; 0] : Y_{1,0} -> Y_{0,1}, degree 0.
template <class F>
ChainMap<F> make_lam_bar() {
  BComplex<F> A = make_Y<F>(1, 0);
  BComplex<F> B = make_Y<F>(0, 1);
  std::map<int, BMorphism<F>> comps;
  comps[0] = BMorphism<F>{modmap_gens_to_gens<F>(A.terms[0].M, B.terms[0].M),
                          modmap_zero<F>(A.terms[0].N, B.terms[0].N, 0)};
  return chainmap_make(A, B, 0, comps);
}

// u : Y_{p,q} -> Y_{r,s}  |->  (u)E : Y_{p,q+1} -> Y_{r,s+1}, by conjugating
// the right induction of u with the step isomorphisms.
template <class F>
ChainMap<F> phi_right_whisker(const ChainMap<F>& u, int p, int q, int r, int s) {
  ChainMap<F> t = chainmap_compose(apply_right_E_chainmap(u), make_step_inv<F>(p, q + 1));
  return chainmap_compose(make_step<F>(r, s + 1), t);
}

// u : Y_{p,q} -> Y_{r,s}  |->  E(u) : Y_{p+1,q} -> Y_{r+1,s}, as the unique
// chain map w with g_{r,s} o w = E(u) o g_{p,q}.
template <class F>
ChainMap<F> phi_left_whisker(const ChainMap<F>& u, int p, int q, int r, int s) {
  ChainMap<F> rhs = chainmap_compose(apply_E_chainmap(u), make_g_nm<F>(p, q));
  return transport(make_Y<F>(p + 1, q), make_Y<F>(r + 1, s), u.deg, make_g_nm<F>(r, s),
                   rhs);
}

template <class F>
ChainMap<F> eval_layer_Phi(const TypedLayer& l, int N) {
  int a = l.a_dom, b = l.b_dom;
  switch (l.gen) {
    case WGen::kId:
      return chainmap_identity(make_Y<F>(a, b));
    case WGen::kX: {
      int i = N + 1 - l.pos;
      if (i > b)
        return y_high_act<F>(a, b, HElem<F>::xvar(a, i - b) - HElem<F>::yvar(a));
      return y_low_act<F>(a, b, HElem<F>::xvar(b, i) - HElem<F>::yvar(b));
    }
    case WGen::kTau: {
      int i = N - l.pos;
      nh_check(i != b, "eval_layer_Phi: crossing across the red strand");
      if (i > b) return y_high_act<F>(a, b, -HElem<F>::tau(a, i - b));
      return y_low_act<F>(a, b, -HElem<F>::tau(b, i));
    }
    case WGen::kRho:
    case WGen::kLam: {
      bool is_rho = l.gen == WGen::kRho;
      int lwh = is_rho ? a : a - 1;
      int rwh = is_rho ? b - 1 : b;
      ChainMap<F> u = is_rho ? make_rho_bar<F>() : make_lam_bar<F>();
      int p = is_rho ? 0 : 1, q = is_rho ? 1 : 0;
      int r = 1 - p, s = 1 - q;
      for (int j = 0; j < lwh; ++j) {
        u = phi_left_whisker(u, p, q, r, s);
        ++p;
        ++r;
      }
      for (int j = 0; j < rwh; ++j) {
        u = phi_right_whisker(u, p, q, r, s);
        ++q;
        ++s;
      }
      return u;
    }
  }
  return ChainMap<F>{};
}

template <class F>
ChainMap<F> eval_Phi(const TypedWord& w) {
  std::optional<ChainMap<F>> acc;
  for (const auto& l : w.layers) {
    ChainMap<F> u = eval_layer_Phi<F>(l, w.total);
    acc = acc ? chainmap_compose(u, *acc) : u;
  }
  return *acc;
}

// The commuting triangle: the algebra value of a word equals the faithful
// evaluation of its chain-map value.
template <class F>
HElem<F> q_of_word(const TypedWord& w) {
  return q_of_chainmap(eval_Phi<F>(w), w.a_dom, w.b_dom, w.a_cod, w.b_cod);
}

// ------------------------------------------------------------- relations

// One side of a relation: a formal integer combination of words, each with
// optional external pins (force_total / force_adom, -1 = none).
struct RelTerm {
  int coeff = 1;
  std::string text;
  int force_total = -1;
  int force_adom = -1;
};

struct WebsterRelation {
  std::string name;
  std::vector<RelTerm> lhs, rhs;
};

// The seven defining local relations of the category; every other relation
// of the presentation is a whiskering of these.
inline const std::vector<WebsterRelation>& webster_relations() {
  static const std::vector<WebsterRelation> rels = {
      {"crossing-past-rho-rho",
       {{1, "tau@1 \xe2\x88\x98 E^1.rho \xe2\x88\x98 rho.E^1", -1, -1}},
       {{1, "E^1.rho \xe2\x88\x98 rho.E^1 \xe2\x88\x98 tau@1", -1, -1}}},
      {"crossing-past-lam-lam",
       {{1, "tau@1 \xe2\x88\x98 lam.E^1 \xe2\x88\x98 E^1.lam", -1, -1}},
       {{1, "lam.E^1 \xe2\x88\x98 E^1.lam \xe2\x88\x98 tau@1", -1, -1}}},
      {"dot-past-rho",
       {{1, "x@1 \xe2\x88\x98 rho", -1, -1}},
       {{1, "rho \xe2\x88\x98 x@1", -1, -1}}},
      {"dot-past-lam",
       {{1, "x@1 \xe2\x88\x98 lam", -1, -1}},
       {{1, "lam \xe2\x88\x98 x@1", -1, -1}}},
      {"lam-rho-is-dot",
       {{1, "lam \xe2\x88\x98 rho", -1, -1}},
       {{1, "x@1", 1, 0}}},
      {"rho-lam-is-dot",
       {{1, "rho \xe2\x88\x98 lam", -1, -1}},
       {{1, "x@1", 1, 1}}},
      {"mixed-EE-identity",
       {{1, "rho.E^1 \xe2\x88\x98 tau@1 \xe2\x88\x98 lam.E^1", -1, -1},
        {-1, "E^1.lam \xe2\x88\x98 tau@1 \xe2\x88\x98 E^1.rho", -1, -1}},
       {{1, "id", 2, 1}}}};
  return rels;
}

template <class F>
HElem<F> eval_side_R(const std::vector<RelTerm>& side, int addl, int addr) {
  std::optional<HElem<F>> acc;
  for (const auto& t : side) {
    TypedWord w = whisker_word(type_text(t.text, t.force_total, t.force_adom), addl, addr);
    HElem<F> v = eval_R<F>(w) * HElem<F>::scalar(w.total, F(t.coeff));
    acc = acc ? *acc + v : v;
  }
  return *acc;
}

template <class F>
ChainMap<F> eval_side_Phi(const std::vector<RelTerm>& side, int addl, int addr) {
  std::optional<ChainMap<F>> acc;
  for (const auto& t : side) {
    TypedWord w = whisker_word(type_text(t.text, t.force_total, t.force_adom), addl, addr);
    ChainMap<F> v = chainmap_scaled(eval_Phi<F>(w), F(t.coeff));
    acc = acc ? chainmap_add(*acc, v) : v;
  }
  return *acc;
}

// Endpoint sanity for a relation at a given whiskering: all words on both
// sides must connect the same pair of objects.
inline CheckResult relation_typing_check(const WebsterRelation& rel, int addl, int addr) {
  std::optional<std::array<int, 4>> sig;
  for (const auto* side : {&rel.lhs, &rel.rhs})
    for (const auto& t : *side) {
      TypedWord w = whisker_word(type_text(t.text, t.force_total, t.force_adom), addl, addr);
      std::array<int, 4> s{w.a_dom, w.b_dom, w.a_cod, w.b_cod};
      if (sig && *sig != s)
        return check_fail("relation " + rel.name + ": endpoint mismatch for '" + t.text +
                          "'");
      sig = s;
    }
  return {};
}

// Every defining relation, whiskered by E^a (-) E^b for all a + b <= bound,
// holds under the algebra evaluation.
template <class F>
CheckResult check_webster_relations(int bound) {
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (const auto& rel : webster_relations()) {
        CheckResult t = relation_typing_check(rel, a, b);
        if (!t.ok) return t;
        if (!(eval_side_R<F>(rel.lhs, a, b) == eval_side_R<F>(rel.rhs, a, b)))
          return check_fail("relation " + rel.name + " fails under whiskering E^" +
                            std::to_string(a) + " (-) E^" + std::to_string(b));
      }
  return {};
}

// The same relations compared as chain maps between the Y complexes.
template <class F>
CheckResult check_webster_relations_phi(int bound) {
  for (int a = 0; a <= bound; ++a)
    for (int b = 0; a + b <= bound; ++b)
      for (const auto& rel : webster_relations()) {
        if (!chainmap_equal(eval_side_Phi<F>(rel.lhs, a, b),
                            eval_side_Phi<F>(rel.rhs, a, b)))
          return check_fail("relation " + rel.name +
                            " fails as chain maps under whiskering E^" + std::to_string(a) +
                            " (-) E^" + std::to_string(b));
      }
  return {};
}

// --------------------------------------------------- anchors and randoms

// The identities that pin every convention of the evaluators; each is
// asserted exactly.
template <class F>
CheckResult check_webster_anchors() {
  using H = HElem<F>;
  auto fail = [](const std::string& s) { return check_fail("anchor: " + s); };
  const H one1 = H::unit(1);
  const H xy1 = H::xvar(1, 1) - H::yvar(1);
  if (!(eval_R_text<F>("rho") == one1)) return fail("rho must evaluate to 1");
  if (!(eval_R_text<F>("lam") == xy1)) return fail("lam must evaluate to x1 - y");
  if (type_text("rho").deg != 2 || type_text("lam").deg != 0 ||
      type_text("x@1").deg != 2 || type_text("tau@1").deg != -2)
    return fail("generator degrees");
  if (!(eval_R_text<F>("x@1 \xe2\x88\x98 rho") == xy1) ||
      !(eval_R_text<F>("rho \xe2\x88\x98 x@1") == xy1))
    return fail("dot conjugated by rho");
  if (!(eval_R_text<F>("lam \xe2\x88\x98 rho") == xy1) ||
      !(eval_R_text<F>("rho \xe2\x88\x98 lam") == xy1))
    return fail("lam o rho and rho o lam");
  const H mtau = -H::tau(2, 1);
  if (!(eval_R_text<F>("tau@1 \xe2\x88\x98 E^1.rho \xe2\x88\x98 rho.E^1") == mtau) ||
      !(eval_R_text<F>("E^1.rho \xe2\x88\x98 rho.E^1 \xe2\x88\x98 tau@1") == mtau))
    return fail("crossing conjugated by unit-valued maps keeps its value");
  {
    HElem<F> lhs = eval_R_text<F>("rho.E^1 \xe2\x88\x98 tau@1 \xe2\x88\x98 lam.E^1") -
                   eval_R_text<F>("E^1.lam \xe2\x88\x98 tau@1 \xe2\x88\x98 E^1.rho");
    if (!(lhs == H::unit(2))) return fail("mixed relation must evaluate to +1");
  }
  {
    // tau (xE - y) - (Ex - y) tau = 1, spelled on the two dots at (0,2).
    TypedWord tw = type_text("tau@1", 2, 0);
    TypedWord da = type_text("x@1", 2, 0);
    TypedWord db = type_text("x@2", 2, 0);
    HElem<F> T = eval_R<F>(tw), A = eval_R<F>(da), B = eval_R<F>(db);
    if (!(T * A - B * T == H::unit(2))) return fail("dot-crossing commutator");
  }
  if (!(q_of_word<F>(type_text("rho")) == one1)) return fail("q o Phi on rho");
  if (!(q_of_word<F>(type_text("lam")) == xy1)) return fail("q o Phi on lam");
  return {};
}

// A uniformly random well-typed word: a walk on the objects (a, b) with
// a + b = total.
inline TypedWord random_word(std::mt19937_64& rng, int total, int len) {
  nh_check(total >= 1 && len >= 1, "random_word: bad parameters");
  TypedWord w;
  w.total = total;
  int a = static_cast<int>(rng() % static_cast<std::uint64_t>(total + 1));
  w.a_dom = a;
  w.b_dom = total - a;
  for (int i = 0; i < len; ++i) {
    struct Cand {
      WGen g;
      int pos;
    };
    std::vector<Cand> cands;
    if (total - a >= 1) cands.push_back({WGen::kRho, 0});
    if (a >= 1) cands.push_back({WGen::kLam, 0});
    for (int p = 1; p <= total; ++p) cands.push_back({WGen::kX, p});
    for (int p = 1; p + 1 <= total; ++p)
      if (p != a) cands.push_back({WGen::kTau, p});
    cands.push_back({WGen::kId, 0});
    const Cand& c = cands[rng() % cands.size()];
    TypedLayer l;
    l.gen = c.g;
    l.pos = c.pos;
    l.a_dom = a;
    l.b_dom = total - a;
    a += wgen_shift(c.g);
    l.a_cod = a;
    l.b_cod = total - a;
    w.deg += wgen_vdeg(c.g);
    w.layers.push_back(l);
  }
  w.a_cod = a;
  w.b_cod = total - a;
  return w;
}

// q_of_chainmap o eval_Phi = eval_R on random words.
template <class F>
CheckResult check_q_phi_random(int count, int max_total, int max_len,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    int total = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_total));
    int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_len));
    TypedWord w = random_word(rng, total, len);
    if (!(q_of_word<F>(w) == eval_R<F>(w)))
      return check_fail("q o Phi differs from R on " + word_str(w));
  }
  return {};
}

}  // namespace nilhecke
