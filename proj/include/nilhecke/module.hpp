#pragma once
// Graded left H_amb[y]-modules assembled from a small family of shape atoms:
//
//   kFree        H_s[y] itself
//   kIotaQuot    H_s with y acting as right multiplication by x_j
//                (equivalently H_s[y]/(y - x_j); canonical form is y-free)
//   kBarQuot     the further quotient by right multiplication by
//                (x_s - x_{s-1}) (canonical form y-free and x_s-free)
//   kTensorTags  inner (x) tag module: t tags tag_r = tau_1..tau_{r-1} of
//                H_t glued over H_{t-1}[y] embedded at a strand offset; the
//                ambient acts per tag through inner
//   kIndTop      H_{s+1}[y] (x)_{H_s[y]} inner: slots tau_{c_k} x_{s+1}^j
//   kIndTopFold  same induction but glued with y -> x_{s+1}: slots tau_{c_k},
//                with x_{s+1} and the ambient y folding into inner's y
//   kRightInd    H_{s+m}[y] (x)_{H_s[y] shifted up by m} inner: slots
//                tau_c x_1^{e_1}..x_m^{e_m} over minimal coset reps c
//
// Every atom carries a canonical monomial basis (slot path + normal-form
// leaf); elements are stored canonically, so coordinates are read off, and
// each basis monomial lifts to (generator, ambient coefficient). Modules are
// finite sums of shifted shapes; maps are stored by generator images, which
// makes them linear by construction -- well-definedness is the separate,
// checkable condition that relations annihilate the images.

#include <memory>

#include "nilhecke/decompose.hpp"
#include "nilhecke/linalg.hpp"

namespace nilhecke {

enum class ShapeKind { kFree, kIotaQuot, kBarQuot, kTensorTags, kIndTop, kIndTopFold, kRightInd };

struct Shape {
  ShapeKind kind = ShapeKind::kFree;
  int amb = 0;  // rank of the acting algebra H_amb[y]
  int j = 0;    // kIotaQuot: folded variable; kRightInd: number of new low strands
  int t = 0;    // kTensorTags: tag count
  int off = 0;  // kTensorTags: gluing offset
  std::shared_ptr<const Shape> inner;
};

inline Shape sh_free(int s) {
  nh_check(s >= 0, "sh_free: bad rank");
  return {ShapeKind::kFree, s, 0, 0, 0, nullptr};
}
inline Shape sh_iota_quot(int s, int j) {
  nh_check(1 <= j && j <= s, "sh_iota_quot: bad variable");
  return {ShapeKind::kIotaQuot, s, j, 0, 0, nullptr};
}
inline Shape sh_bar_quot(int s) {
  nh_check(s >= 2, "sh_bar_quot: needs two strands");
  return {ShapeKind::kBarQuot, s, 0, 0, 0, nullptr};
}
inline Shape sh_tag_prod(Shape inner, int t, int off) {
  nh_check(t >= 1 && off >= 0 && off + t - 1 <= inner.amb, "sh_tag_prod: window overflow");
  int amb = inner.amb;
  return {ShapeKind::kTensorTags, amb, 0, t, off,
          std::make_shared<const Shape>(std::move(inner))};
}
inline Shape sh_ind_top(Shape inner) {
  int amb = inner.amb + 1;
  return {ShapeKind::kIndTop, amb, 0, 0, 0, std::make_shared<const Shape>(std::move(inner))};
}
inline Shape sh_ind_top_fold(Shape inner) {
  int amb = inner.amb + 1;
  return {ShapeKind::kIndTopFold, amb, 0, 0, 0,
          std::make_shared<const Shape>(std::move(inner))};
}
inline Shape sh_right_ind(Shape inner, int m) {
  nh_check(m >= 1, "sh_right_ind: need m >= 1");
  int amb = inner.amb + m;
  return {ShapeKind::kRightInd, amb, m, 0, 0,
          std::make_shared<const Shape>(std::move(inner))};
}

inline bool shape_is_leaf(const Shape& sh) {
  return sh.kind == ShapeKind::kFree || sh.kind == ShapeKind::kIotaQuot ||
         sh.kind == ShapeKind::kBarQuot;
}

inline int shape_leaf_rank(const Shape& sh) {
  return shape_is_leaf(sh) ? sh.amb : shape_leaf_rank(*sh.inner);
}

inline bool shape_equal(const Shape& a, const Shape& b) {
  if (a.kind != b.kind || a.amb != b.amb || a.j != b.j || a.t != b.t || a.off != b.off)
    return false;
  if (!a.inner != !b.inner) return false;
  return !a.inner || shape_equal(*a.inner, *b.inner);
}

inline std::string shape_str(const Shape& sh) {
  switch (sh.kind) {
    case ShapeKind::kFree: return "H" + std::to_string(sh.amb) + "[y]";
    case ShapeKind::kIotaQuot:
      return "H" + std::to_string(sh.amb) + "{y=x" + std::to_string(sh.j) + "}";
    case ShapeKind::kBarQuot:
      return "H" + std::to_string(sh.amb) + "{y=x" + std::to_string(sh.amb) + "=x" +
             std::to_string(sh.amb - 1) + "}";
    case ShapeKind::kTensorTags:
      return shape_str(*sh.inner) + " (x) tags" + std::to_string(sh.t) + "@" +
             std::to_string(sh.off);
    case ShapeKind::kIndTop: return "Ind^+ " + shape_str(*sh.inner);
    case ShapeKind::kIndTopFold: return "Ind^0 " + shape_str(*sh.inner);
    case ShapeKind::kRightInd:
      return "Ind_low" + std::to_string(sh.j) + " " + shape_str(*sh.inner);
  }
  return "?";
}

// ---------------------------------------------------------------- elements

using SlotKey = std::pair<std::uint64_t, std::uint64_t>;

template <class F>
struct MElem {
  bool leaf = true;
  HElem<F> h;
  std::map<SlotKey, MElem<F>> kids;

  bool is_zero() const { return leaf ? h.is_zero() : kids.empty(); }
};

template <class F>
MElem<F> melem_zero(const Shape& sh) {
  MElem<F> e;
  if (shape_is_leaf(sh)) {
    e.leaf = true;
    e.h = HElem<F>::zero(sh.amb);
  } else {
    e.leaf = false;
  }
  return e;
}

template <class F>
MElem<F> mscaled(const MElem<F>& a, const F& c) {
  MElem<F> r;
  r.leaf = a.leaf;
  if (a.leaf) {
    r.h = a.h.scaled(c);
    return r;
  }
  if (c == F(0)) return r;
  for (auto& [k, v] : a.kids) {
    MElem<F> s = mscaled(v, c);
    if (!s.is_zero()) r.kids.emplace(k, std::move(s));
  }
  return r;
}

template <class F>
void madd_into(MElem<F>& a, const MElem<F>& b, const F& c) {
  nh_check(a.leaf == b.leaf, "madd_into: structure mismatch");
  if (a.leaf) {
    a.h = a.h + b.h.scaled(c);
    return;
  }
  for (auto& [k, v] : b.kids) {
    auto it = a.kids.find(k);
    if (it == a.kids.end()) {
      MElem<F> nv = c == F(1) ? v : mscaled(v, c);
      if (!nv.is_zero()) a.kids.emplace(k, std::move(nv));
    } else {
      madd_into(it->second, v, c);
      if (it->second.is_zero()) a.kids.erase(it);
    }
  }
}

template <class F>
MElem<F> madd(const MElem<F>& a, const MElem<F>& b) {
  MElem<F> r = a;
  madd_into(r, b, F(1));
  return r;
}

template <class F>
bool mequal(const MElem<F>& a, const MElem<F>& b) {
  if (a.leaf != b.leaf) return false;
  if (a.leaf) return a.h == b.h;
  return a.kids == b.kids;
}

template <class F>
bool operator==(const MElem<F>& a, const MElem<F>& b) {
  return mequal(a, b);
}

// --------------------------------------------------------- canonical folds

template <class F>
HElem<F> fold_y_to_x(const HElem<F>& h, int j) {
  HElem<F> r(h.n);
  for (auto& [k, c] : h.t)
    r.add_term(hk_perm(k, h.n), xp_add_at(k.px, j, hk_y(k)), 0, c);
  return r;
}

template <class F>
HElem<F> fold_x_to_x(const HElem<F>& h, int from, int to) {
  HElem<F> r(h.n);
  for (auto& [k, c] : h.t) {
    XPack px = xp_add_at(xp_set(k.px, from, 0), to, xp_get(k.px, from));
    r.add_term(hk_perm(k, h.n), px, hk_y(k), c);
  }
  return r;
}

template <class F>
HElem<F> leaf_canonical(const Shape& sh, const HElem<F>& h) {
  switch (sh.kind) {
    case ShapeKind::kFree: return h;
    case ShapeKind::kIotaQuot: return fold_y_to_x(h, sh.j);
    case ShapeKind::kBarQuot:
      return fold_x_to_x(fold_y_to_x(h, sh.amb), sh.amb, sh.amb - 1);
    default: nh_fail("leaf_canonical: not a leaf shape");
  }
}

// Right multiplication of a leaf element by an algebra element (the leaves
// are subquotients of the algebra, so this is element multiplication plus
// canonical folding). Used for the tag modules' right gluing action.
template <class F>
MElem<F> leaf_rmul(const Shape& sh, const MElem<F>& x, const HElem<F>& g) {
  nh_check(shape_is_leaf(sh), "leaf_rmul: not a leaf");
  MElem<F> r = melem_zero<F>(sh);
  r.h = leaf_canonical(sh, x.h * g);
  return r;
}

// Embed a gluing coefficient a (over H_{glue}[y]) into the ambient of the
// leaf so that the coefficient's y matches the leaf's y-notion, then right
// multiply. off is the strand offset of the gluing.
template <class F>
MElem<F> leaf_rmul_glued(const Shape& sh, const MElem<F>& x, const HElem<F>& a, int off) {
  HElem<F> emb;
  switch (sh.kind) {
    case ShapeKind::kFree: emb = a.embed_y(off, sh.amb); break;
    case ShapeKind::kIotaQuot: emb = a.embed(off, sh.j, sh.amb); break;
    case ShapeKind::kBarQuot: emb = a.embed(off, sh.amb, sh.amb); break;
    default: nh_fail("leaf_rmul_glued: not a leaf");
  }
  return leaf_rmul(sh, x, emb);
}

// ------------------------------------------------------------ right actions

// Right action of H_t (y-free) on the tag factor of a kTensorTags module:
// (m (x) tag_r) . h = sum_s m . glue(a_s) (x) tag_s where tag_r h =
// sum_s iota_1(a_s) tag_s in H_t, and a_s acts on the inner leaf through the
// offset gluing embedding.
template <class F>
MElem<F> tag_rmul(const Shape& sh, const MElem<F>& x, const HElem<F>& h) {
  nh_check(sh.kind == ShapeKind::kTensorTags, "tag_rmul: wrong shape");
  nh_check(h.n == sh.t, "tag_rmul: rank mismatch");
  MElem<F> out = melem_zero<F>(sh);
  for (auto& [slot, kid] : x.kids) {
    HElem<F> moved = tag_elem<F>(sh.t, static_cast<int>(slot.first)) * h;
    std::vector<HElem<F>> parts = decompose_left_iota1(moved);
    for (int s = 1; s <= sh.t; ++s) {
      if (parts[s].is_zero()) continue;
      melem_add_kid(out, SlotKey{static_cast<std::uint64_t>(s), 0},
                    leaf_rmul_glued(*sh.inner, kid, parts[s], sh.off));
    }
  }
  return out;
}

// Right multiplication by an already-embedded inner-ambient element on the
// inner factor, per tag. Caller guarantees g commutes with the gluing image
// (e.g. g supported on strands below the gluing window).
template <class F>
MElem<F> tag_rmul_inner(const Shape& sh, const MElem<F>& x, const HElem<F>& g) {
  nh_check(sh.kind == ShapeKind::kTensorTags, "tag_rmul_inner: wrong shape");
  MElem<F> out = melem_zero<F>(sh);
  for (auto& [slot, kid] : x.kids)
    melem_add_kid(out, slot, leaf_rmul(*sh.inner, kid, g));
  return out;
}

// ------------------------------------------------------------- left action

template <class F>
MElem<F> act(const Shape& sh, const HElem<F>& a, const MElem<F>& x);

template <class F>
void act_accumulate(const Shape& sh, const HElem<F>& a, const MElem<F>& x, MElem<F>& out);

template <class F>
MElem<F> act(const Shape& sh, const HElem<F>& a, const MElem<F>& x) {
  MElem<F> out = melem_zero<F>(sh);
  act_accumulate(sh, a, x, out);
  return out;
}

template <class F>
void act_accumulate(const Shape& sh, const HElem<F>& a, const MElem<F>& x, MElem<F>& out) {
  nh_check(a.n == sh.amb, "act: rank mismatch");
  switch (sh.kind) {
    case ShapeKind::kFree:
    case ShapeKind::kIotaQuot:
    case ShapeKind::kBarQuot: {
      out.h = out.h + leaf_canonical(sh, a * x.h);
      return;
    }
    case ShapeKind::kTensorTags: {
      // ambient acts per tag through inner (same ambient rank)
      for (auto& [slot, kid] : x.kids) {
        MElem<F> r = act(*sh.inner, a, kid);
        if (r.is_zero()) continue;
        auto it = out.kids.find(slot);
        if (it == out.kids.end())
          out.kids.emplace(slot, std::move(r));
        else {
          madd_into(it->second, r, F(1));
          if (it->second.is_zero()) out.kids.erase(it);
        }
      }
      return;
    }
    case ShapeKind::kIndTop: {
      for (auto& [slot, kid] : x.kids) {
        HElem<F> slotelem =
            HElem<F>::tau_perm(sh.amb, coset_rep_top(sh.amb, static_cast<int>(slot.first)))
                .rmul_monomial(xp_set(0, sh.amb, static_cast<int>(slot.second)), 0);
        HElem<F> big = a * slotelem;
        for (auto& [sl2, coeff] : split_top_ind(big)) {
          MElem<F> r = act(*sh.inner, coeff, kid);
          if (r.is_zero()) continue;
          SlotKey key{static_cast<std::uint64_t>(sl2.first),
                      static_cast<std::uint64_t>(sl2.second)};
          auto it = out.kids.find(key);
          if (it == out.kids.end())
            out.kids.emplace(key, std::move(r));
          else {
            madd_into(it->second, r, F(1));
            if (it->second.is_zero()) out.kids.erase(it);
          }
        }
      }
      return;
    }
    case ShapeKind::kIndTopFold: {
      for (auto& [slot, kid] : x.kids) {
        HElem<F> slotelem =
            HElem<F>::tau_perm(sh.amb, coset_rep_top(sh.amb, static_cast<int>(slot.first)));
        for (auto& [b, ab] : split_y(a)) {
          HElem<F> big = ab * slotelem;  // y-free
          for (auto& [sl2, coeff] : split_top_ind(big)) {
            // x_{amb}-exponent and ambient y-exponent both fold to inner's y
            HElem<F> inner_coeff = coeff.rmul_monomial(0, sl2.second + b);
            MElem<F> r = act(*sh.inner, inner_coeff, kid);
            if (r.is_zero()) continue;
            SlotKey key{static_cast<std::uint64_t>(sl2.first), 0};
            auto it = out.kids.find(key);
            if (it == out.kids.end())
              out.kids.emplace(key, std::move(r));
            else {
              madd_into(it->second, r, F(1));
              if (it->second.is_zero()) out.kids.erase(it);
            }
          }
        }
      }
      return;
    }
    case ShapeKind::kRightInd: {
      int m = sh.j;
      for (auto& [slot, kid] : x.kids) {
        HElem<F> slotelem = HElem<F>::tau_perm(sh.amb, unpack_perm(slot.first, sh.amb))
                                .rmul_monomial(slot.second, 0);
        HElem<F> big = a * slotelem;
        for (auto& [sl2, coeff] : split_parabolic_lowfree(big, m)) {
          MElem<F> r = act(*sh.inner, coeff, kid);
          if (r.is_zero()) continue;
          SlotKey key{pack_perm(sl2.first), sl2.second};
          auto it = out.kids.find(key);
          if (it == out.kids.end())
            out.kids.emplace(key, std::move(r));
          else {
            madd_into(it->second, r, F(1));
            if (it->second.is_zero()) out.kids.erase(it);
          }
        }
      }
      return;
    }
  }
}

// Insert a child contribution (used by the structured map builders).
template <class F>
void melem_add_kid(MElem<F>& node, SlotKey slot, const MElem<F>& val) {
  if (val.is_zero()) return;
  node.leaf = false;
  auto it = node.kids.find(slot);
  if (it == node.kids.end())
    node.kids.emplace(slot, val);
  else {
    madd_into(it->second, val, F(1));
    if (it->second.is_zero()) node.kids.erase(it);
  }
}

// Right multiplication on the outer factor of a kRightInd module. Caller
// guarantees g commutes with the glued image of the inner algebra (strands
// above j, and y), e.g. g supported on the j new low strands.
template <class F>
MElem<F> rind_rmul_outer(const Shape& sh, const MElem<F>& x, const HElem<F>& g) {
  nh_check(sh.kind == ShapeKind::kRightInd, "rind_rmul_outer: wrong shape");
  nh_check(g.n == sh.amb, "rind_rmul_outer: rank mismatch");
  MElem<F> out = melem_zero<F>(sh);
  for (auto& [slot, kid] : x.kids) {
    HElem<F> big = HElem<F>::tau_perm(sh.amb, unpack_perm(slot.first, sh.amb))
                       .rmul_monomial(slot.second, 0) *
                   g;
    for (auto& [sl2, coeff] : split_parabolic_lowfree(big, sh.j))
      melem_add_kid(out, SlotKey{pack_perm(sl2.first), sl2.second},
                    act(*sh.inner, coeff, kid));
  }
  return out;
}

// Right action by a y-free element of the low strand window (rank = its own
// h.n), pushed functorially through top inductions down to the tag product
// or leaf, where it is an honest right multiplication.
template <class F>
MElem<F> rmul_low(const Shape& sh, const MElem<F>& x, const HElem<F>& h) {
  switch (sh.kind) {
    case ShapeKind::kFree:
    case ShapeKind::kIotaQuot:
    case ShapeKind::kBarQuot:
      return leaf_rmul(sh, x, h.embed_y(0, sh.amb));
    case ShapeKind::kTensorTags: {
      nh_check(h.n <= sh.off, "rmul_low: window collides with gluing");
      return tag_rmul_inner(sh, x, h.embed_y(0, sh.amb));
    }
    case ShapeKind::kIndTop:
    case ShapeKind::kIndTopFold: {
      MElem<F> out = melem_zero<F>(sh);
      for (auto& [slot, kid] : x.kids)
        melem_add_kid(out, slot, rmul_low(*sh.inner, kid, h));
      return out;
    }
    default: nh_fail("rmul_low: unsupported shape");
  }
}

// ------------------------------------------------ generators and relations

inline int shape_gen_count(const Shape& sh) {
  switch (sh.kind) {
    case ShapeKind::kFree:
    case ShapeKind::kIotaQuot:
    case ShapeKind::kBarQuot: return 1;
    case ShapeKind::kTensorTags: return sh.t * shape_gen_count(*sh.inner);
    default: return shape_gen_count(*sh.inner);
  }
}

inline int shape_gen_degree(const Shape& sh, int g) {
  switch (sh.kind) {
    case ShapeKind::kFree:
    case ShapeKind::kIotaQuot:
    case ShapeKind::kBarQuot: return 0;
    case ShapeKind::kTensorTags: {
      int ig = shape_gen_count(*sh.inner);
      int r = g / ig + 1;
      return -2 * (r - 1) + shape_gen_degree(*sh.inner, g % ig);
    }
    default: return shape_gen_degree(*sh.inner, g);
  }
}

template <class F>
MElem<F> shape_gen(const Shape& sh, int g) {
  MElem<F> e = melem_zero<F>(sh);
  switch (sh.kind) {
    case ShapeKind::kFree:
    case ShapeKind::kIotaQuot:
    case ShapeKind::kBarQuot:
      nh_check(g == 0, "shape_gen: index out of range");
      e.h = HElem<F>::unit(sh.amb);
      return e;
    case ShapeKind::kTensorTags: {
      int ig = shape_gen_count(*sh.inner);
      melem_add_kid(e, SlotKey{static_cast<std::uint64_t>(g / ig + 1), 0},
                    shape_gen<F>(*sh.inner, g % ig));
      return e;
    }
    case ShapeKind::kIndTop:
    case ShapeKind::kIndTopFold:
      melem_add_kid(e, SlotKey{static_cast<std::uint64_t>(sh.amb), 0},
                    shape_gen<F>(*sh.inner, g));
      return e;
    case ShapeKind::kRightInd:
      melem_add_kid(e, SlotKey{pack_perm(perm_id(sh.amb)), 0}, shape_gen<F>(*sh.inner, g));
      return e;
  }
  return e;
}

template <class F>
std::vector<std::pair<int, HElem<F>>> shape_relations(const Shape& sh) {
  std::vector<std::pair<int, HElem<F>>> out;
  switch (sh.kind) {
    case ShapeKind::kFree: return out;
    case ShapeKind::kIotaQuot:
      out.push_back({0, HElem<F>::yvar(sh.amb) - HElem<F>::xvar(sh.amb, sh.j)});
      return out;
    case ShapeKind::kBarQuot:
      out.push_back({0, HElem<F>::yvar(sh.amb) - HElem<F>::xvar(sh.amb, sh.amb)});
      out.push_back(
          {0, HElem<F>::xvar(sh.amb, sh.amb) - HElem<F>::xvar(sh.amb, sh.amb - 1)});
      return out;
    case ShapeKind::kTensorTags: {
      int ig = shape_gen_count(*sh.inner);
      for (int r = 1; r <= sh.t; ++r)
        for (auto& [g, rel] : shape_relations<F>(*sh.inner))
          out.push_back({(r - 1) * ig + g, rel});
      return out;
    }
    case ShapeKind::kIndTop:
      for (auto& [g, rel] : shape_relations<F>(*sh.inner))
        out.push_back({g, rel.embed_y(0, sh.amb)});
      return out;
    case ShapeKind::kIndTopFold: {
      for (auto& [g, rel] : shape_relations<F>(*sh.inner))
        out.push_back({g, rel.embed(0, sh.amb, sh.amb)});
      HElem<F> yrel = HElem<F>::yvar(sh.amb) - HElem<F>::xvar(sh.amb, sh.amb);
      for (int g = 0; g < shape_gen_count(*sh.inner); ++g) out.push_back({g, yrel});
      return out;
    }
    case ShapeKind::kRightInd:
      for (auto& [g, rel] : shape_relations<F>(*sh.inner))
        out.push_back({g, rel.embed_y(sh.j, sh.amb)});
      return out;
  }
  return out;
}

// --------------------------------------------------------- graded structure

// All normal-form monomials of degree d, optionally without y / without one
// x-variable (for the folded quotients).
inline std::vector<HKey> graded_monomials(int n, int d, bool with_y, int skip_var) {
  std::vector<HKey> out;
  if (d % 2) return out;
  std::vector<int> vars;
  for (int i = 1; i <= n; ++i)
    if (i != skip_var) vars.push_back(i);
  int parts = static_cast<int>(vars.size()) + (with_y ? 1 : 0);
  for (const Perm& w : all_perms(n)) {
    int tot = d / 2 + perm_len(w);
    if (tot < 0) continue;
    nh_check(tot <= kMaxExp, "graded_monomials: degree beyond packing range");
    if (parts == 0) {
      if (tot == 0) out.push_back(hk_make(w, 0, 0));
      continue;
    }
    std::vector<int> cur;
    compositions(tot, parts, cur, [&](const std::vector<int>& e) {
      XPack px = 0;
      for (std::size_t i = 0; i < vars.size(); ++i) px = xp_set(px, vars[i], e[i]);
      out.push_back(hk_make(w, px, with_y ? e.back() : 0));
    });
  }
  return out;
}

inline int shape_min_degree(const Shape& sh) {
  switch (sh.kind) {
    case ShapeKind::kFree:
    case ShapeKind::kIotaQuot:
    case ShapeKind::kBarQuot: return -sh.amb * (sh.amb - 1);
    case ShapeKind::kTensorTags: return shape_min_degree(*sh.inner) - 2 * (sh.t - 1);
    case ShapeKind::kIndTop:
    case ShapeKind::kIndTopFold:
      return shape_min_degree(*sh.inner) - 2 * (sh.amb - 1);
    case ShapeKind::kRightInd: {
      int s = sh.inner->amb;
      int lmax = sh.amb * (sh.amb - 1) / 2 - s * (s - 1) / 2;
      return shape_min_degree(*sh.inner) - 2 * lmax;
    }
  }
  return 0;
}

struct BasisKey {
  std::vector<SlotKey> path;
  HKey leaf;
  auto operator<=>(const BasisKey&) const = default;
};

inline int slot_degree(const Shape& sh, SlotKey slot) {
  switch (sh.kind) {
    case ShapeKind::kTensorTags: return -2 * (static_cast<int>(slot.first) - 1);
    case ShapeKind::kIndTop:
      return -2 * (sh.amb - static_cast<int>(slot.first)) +
             2 * static_cast<int>(slot.second);
    case ShapeKind::kIndTopFold: return -2 * (sh.amb - static_cast<int>(slot.first));
    case ShapeKind::kRightInd:
      return -2 * perm_len(unpack_perm(slot.first, sh.amb)) + 2 * xp_total(slot.second);
    default: nh_fail("slot_degree: leaf shape");
  }
}

// Minimal coset representatives for S_amb / (parabolic on strands m+1..amb).
inline std::vector<Perm> low_coset_reps(int amb, int m) {
  std::vector<Perm> out;
  for (const Perm& w : all_perms(amb)) {
    bool ok = true;
    for (int i = m + 1; i < amb && ok; ++i)
      if (right_descent(w, i)) ok = false;
    if (ok) out.push_back(w);
  }
  return out;
}

inline void shape_basis_rec(const Shape& sh, int d, std::vector<SlotKey>& path,
                            std::vector<BasisKey>& out) {
  switch (sh.kind) {
    case ShapeKind::kFree:
    case ShapeKind::kIotaQuot:
    case ShapeKind::kBarQuot: {
      bool with_y = sh.kind == ShapeKind::kFree;
      int skip = sh.kind == ShapeKind::kBarQuot ? sh.amb : 0;
      for (HKey k : graded_monomials(sh.amb, d, with_y, skip)) out.push_back({path, k});
      return;
    }
    case ShapeKind::kTensorTags: {
      for (int r = 1; r <= sh.t; ++r) {
        path.push_back({static_cast<std::uint64_t>(r), 0});
        shape_basis_rec(*sh.inner, d + 2 * (r - 1), path, out);
        path.pop_back();
      }
      return;
    }
    case ShapeKind::kIndTop: {
      int imin = shape_min_degree(*sh.inner);
      for (int k = 1; k <= sh.amb; ++k) {
        int base = d + 2 * (sh.amb - k);
        for (int j = 0; 2 * j <= base - imin; ++j) {
          path.push_back({static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(j)});
          shape_basis_rec(*sh.inner, base - 2 * j, path, out);
          path.pop_back();
        }
      }
      return;
    }
    case ShapeKind::kIndTopFold: {
      for (int k = 1; k <= sh.amb; ++k) {
        path.push_back({static_cast<std::uint64_t>(k), 0});
        shape_basis_rec(*sh.inner, d + 2 * (sh.amb - k), path, out);
        path.pop_back();
      }
      return;
    }
    case ShapeKind::kRightInd: {
      int m = sh.j, imin = shape_min_degree(*sh.inner);
      for (const Perm& c : low_coset_reps(sh.amb, m)) {
        int base = d + 2 * perm_len(c);
        int emax = (base - imin) / 2;
        if (emax < 0) continue;
        // enumerate e in N^m with |e| <= emax
        std::vector<int> stack;
        std::function<void(int, int)> go = [&](int idx, int rem) {
          if (idx == m) {
            int tot = 0;
            XPack e = 0;
            for (int i = 0; i < m; ++i) {
              e = xp_set(e, i + 1, stack[i]);
              tot += stack[i];
            }
            path.push_back({pack_perm(c), e});
            shape_basis_rec(*sh.inner, base - 2 * tot, path, out);
            path.pop_back();
            return;
          }
          for (int v = 0; v <= rem; ++v) {
            stack.push_back(v);
            go(idx + 1, rem - v);
            stack.pop_back();
          }
        };
        go(0, emax);
      }
      return;
    }
  }
}

inline std::vector<BasisKey> shape_basis(const Shape& sh, int d) {
  std::vector<BasisKey> out;
  std::vector<SlotKey> path;
  shape_basis_rec(sh, d, path, out);
  return out;
}

inline int shape_key_degree(const Shape& sh, const BasisKey& bk) {
  int d = hk_vdeg(bk.leaf, shape_leaf_rank(sh));
  const Shape* cur = &sh;
  for (SlotKey s : bk.path) {
    d += slot_degree(*cur, s);
    cur = cur->inner.get();
  }
  return d;
}

template <class F>
MElem<F> melem_of_basis(const Shape& sh, const BasisKey& bk, F c = F(1)) {
  MElem<F> leafe;
  leafe.leaf = true;
  const Shape* cur = &sh;
  for (std::size_t i = 0; i < bk.path.size(); ++i) cur = cur->inner.get();
  leafe.h = HElem<F>::zero(cur->amb);
  leafe.h.add_key(bk.leaf, c);
  // wrap from innermost out
  MElem<F> e = std::move(leafe);
  for (std::size_t i = bk.path.size(); i-- > 0;) {
    MElem<F> node;
    node.leaf = false;
    if (!e.is_zero()) node.kids.emplace(bk.path[i], std::move(e));
    e = std::move(node);
  }
  return e;
}

template <class F>
void melem_coords_rec(const MElem<F>& e, std::vector<SlotKey>& path,
                      std::map<BasisKey, F>& out) {
  if (e.leaf) {
    for (auto& [k, c] : e.h.t) out[BasisKey{path, k}] = c;
    return;
  }
  for (auto& [slot, kid] : e.kids) {
    path.push_back(slot);
    melem_coords_rec(kid, path, out);
    path.pop_back();
  }
}

template <class F>
std::map<BasisKey, F> melem_coords(const MElem<F>& e) {
  std::map<BasisKey, F> out;
  std::vector<SlotKey> path;
  melem_coords_rec(e, path, out);
  return out;
}

// Lift a basis monomial to (generator index, ambient coefficient A) with
// monomial = A . generator.
template <class F>
std::pair<int, HElem<F>> shape_lift(const Shape& sh, const BasisKey& bk,
                                    std::size_t depth = 0) {
  if (shape_is_leaf(sh)) {
    nh_check(depth == bk.path.size(), "shape_lift: path/shape mismatch");
    HElem<F> a(sh.amb);
    a.add_key(bk.leaf, F(1));
    return {0, a};
  }
  SlotKey slot = bk.path[depth];
  auto [g, A] = shape_lift<F>(*sh.inner, bk, depth + 1);
  switch (sh.kind) {
    case ShapeKind::kTensorTags: {
      int ig = shape_gen_count(*sh.inner);
      return {(static_cast<int>(slot.first) - 1) * ig + g, A};
    }
    case ShapeKind::kIndTop: {
      HElem<F> slotelem =
          HElem<F>::tau_perm(sh.amb, coset_rep_top(sh.amb, static_cast<int>(slot.first)))
              .rmul_monomial(xp_set(0, sh.amb, static_cast<int>(slot.second)), 0);
      return {g, slotelem * A.embed_y(0, sh.amb)};
    }
    case ShapeKind::kIndTopFold: {
      HElem<F> slotelem =
          HElem<F>::tau_perm(sh.amb, coset_rep_top(sh.amb, static_cast<int>(slot.first)));
      return {g, slotelem * A.embed(0, sh.amb, sh.amb)};
    }
    case ShapeKind::kRightInd: {
      HElem<F> slotelem = HElem<F>::tau_perm(sh.amb, unpack_perm(slot.first, sh.amb))
                              .rmul_monomial(slot.second, 0);
      return {g, slotelem * A.embed_y(sh.j, sh.amb)};
    }
    default: nh_fail("shape_lift: unexpected kind");
  }
}

// ------------------------------------------------------------------ modules

struct Module {
  int amb = 0;
  struct Part {
    Shape sh;
    int shift = 0;  // v^shift
  };
  std::vector<Part> parts;
};

inline Module mod_of(Shape sh, int shift = 0) {
  Module m;
  m.amb = sh.amb;
  m.parts.push_back({std::move(sh), shift});
  return m;
}

inline Module mod_sum(Module a, const Module& b) {
  nh_check(a.parts.empty() || b.parts.empty() || a.amb == b.amb, "mod_sum: rank mismatch");
  if (a.parts.empty()) a.amb = b.amb;
  for (auto& p : b.parts) a.parts.push_back(p);
  return a;
}

inline Module mod_zero_module(int amb) {
  Module m;
  m.amb = amb;
  return m;
}

inline Module mod_shifted(Module m, int dshift) {
  for (auto& p : m.parts) p.shift += dshift;
  return m;
}

inline bool module_equal(const Module& a, const Module& b) {
  if (a.amb != b.amb || a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i)
    if (a.parts[i].shift != b.parts[i].shift || !shape_equal(a.parts[i].sh, b.parts[i].sh))
      return false;
  return true;
}

inline std::string module_str(const Module& m) {
  if (m.parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < m.parts.size(); ++i) {
    if (i) s += " (+) ";
    if (m.parts[i].shift) s += "v^" + std::to_string(m.parts[i].shift) + " ";
    s += shape_str(m.parts[i].sh);
  }
  return s;
}

template <class F>
struct ModElem {
  std::vector<MElem<F>> comp;
  bool is_zero() const {
    for (auto& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }
  friend bool operator==(const ModElem& a, const ModElem& b) { return a.comp == b.comp; }
};

template <class F>
ModElem<F> mod_zero(const Module& m) {
  ModElem<F> e;
  for (auto& p : m.parts) e.comp.push_back(melem_zero<F>(p.sh));
  return e;
}

template <class F>
ModElem<F> mod_add(const ModElem<F>& a, const ModElem<F>& b) {
  nh_check(a.comp.size() == b.comp.size(), "mod_add: size mismatch");
  ModElem<F> r = a;
  for (std::size_t i = 0; i < r.comp.size(); ++i) madd_into(r.comp[i], b.comp[i], F(1));
  return r;
}

template <class F>
ModElem<F> mod_scaled(const ModElem<F>& a, const F& c) {
  ModElem<F> r;
  for (auto& x : a.comp) r.comp.push_back(mscaled(x, c));
  return r;
}

template <class F>
ModElem<F> mod_act(const Module& m, const HElem<F>& a, const ModElem<F>& x) {
  ModElem<F> r;
  for (std::size_t i = 0; i < m.parts.size(); ++i)
    r.comp.push_back(act(m.parts[i].sh, a, x.comp[i]));
  return r;
}

inline int mod_gen_count(const Module& m) {
  int c = 0;
  for (auto& p : m.parts) c += shape_gen_count(p.sh);
  return c;
}

inline std::pair<int, int> mod_gen_locate(const Module& m, int g) {  // (part, local)
  for (std::size_t p = 0; p < m.parts.size(); ++p) {
    int c = shape_gen_count(m.parts[p].sh);
    if (g < c) return {static_cast<int>(p), g};
    g -= c;
  }
  nh_fail("mod_gen_locate: generator index out of range");
}

inline int mod_gen_degree(const Module& m, int g) {
  auto [p, l] = mod_gen_locate(m, g);
  return shape_gen_degree(m.parts[p].sh, l) + m.parts[p].shift;
}

template <class F>
ModElem<F> mod_gen(const Module& m, int g) {
  auto [p, l] = mod_gen_locate(m, g);
  ModElem<F> e = mod_zero<F>(m);
  e.comp[p] = shape_gen<F>(m.parts[p].sh, l);
  return e;
}

template <class F>
std::vector<std::pair<int, HElem<F>>> mod_relations(const Module& m) {
  std::vector<std::pair<int, HElem<F>>> out;
  int base = 0;
  for (auto& p : m.parts) {
    for (auto& [g, rel] : shape_relations<F>(p.sh)) out.push_back({base + g, rel});
    base += shape_gen_count(p.sh);
  }
  return out;
}

struct ModBasisKey {
  int part = 0;
  BasisKey bk;
  auto operator<=>(const ModBasisKey&) const = default;
};

inline std::vector<ModBasisKey> mod_basis(const Module& m, int d) {
  std::vector<ModBasisKey> out;
  for (std::size_t p = 0; p < m.parts.size(); ++p)
    for (auto& bk : shape_basis(m.parts[p].sh, d - m.parts[p].shift))
      out.push_back({static_cast<int>(p), bk});
  return out;
}

inline int mod_dim(const Module& m, int d) {
  return static_cast<int>(mod_basis(m, d).size());
}

template <class F>
ModElem<F> mod_elem_of_basis(const Module& m, const ModBasisKey& k, F c = F(1)) {
  ModElem<F> e = mod_zero<F>(m);
  e.comp[k.part] = melem_of_basis(m.parts[k.part].sh, k.bk, c);
  return e;
}

template <class F>
std::map<ModBasisKey, F> mod_coords(const ModElem<F>& e) {
  std::map<ModBasisKey, F> out;
  for (std::size_t p = 0; p < e.comp.size(); ++p) {
    std::vector<SlotKey> path;
    std::map<BasisKey, F> part;
    melem_coords_rec(e.comp[p], path, part);
    for (auto& [bk, c] : part) out.emplace(ModBasisKey{static_cast<int>(p), bk}, c);
  }
  return out;
}

// Degree of a homogeneous element (shift-aware); nullopt for 0 or mixed.
template <class F>
std::optional<int> mod_degree(const Module& m, const ModElem<F>& e) {
  std::optional<int> d;
  for (auto& [k, c] : mod_coords(e)) {
    int kd = shape_key_degree(m.parts[k.part].sh, k.bk) + m.parts[k.part].shift;
    if (!d)
      d = kd;
    else if (*d != kd)
      return std::nullopt;
  }
  return d;
}

template <class F>
std::pair<int, HElem<F>> mod_lift(const Module& m, const ModBasisKey& k) {
  auto [g, A] = shape_lift<F>(m.parts[k.part].sh, k.bk);
  int base = 0;
  for (int p = 0; p < k.part; ++p) base += shape_gen_count(m.parts[p].sh);
  return {base + g, A};
}

// ---------------------------------------------------------------- mod maps

// A map is stored by generator images and extended linearly via the lift of
// basis monomials, so linearity holds by construction; well-definedness is
// the separate condition that relations annihilate images. dom.amb may be
// smaller than cod.amb, in which case coefficients act on the codomain
// through the standard inclusion (strands fixed, y -> y).
template <class F>
struct ModMap {
  Module dom, cod;
  int deg = 0;  // added v-degree
  std::vector<ModElem<F>> img;
};

template <class F>
ModMap<F> modmap_zero(Module dom, Module cod, int deg = 0) {
  ModMap<F> f{std::move(dom), std::move(cod), deg, {}};
  for (int g = 0; g < mod_gen_count(f.dom); ++g) f.img.push_back(mod_zero<F>(f.cod));
  return f;
}

template <class F>
ModMap<F> modmap_identity(const Module& m) {
  ModMap<F> f{m, m, 0, {}};
  for (int g = 0; g < mod_gen_count(m); ++g) f.img.push_back(mod_gen<F>(m, g));
  return f;
}

template <class F>
ModElem<F> modmap_apply(const ModMap<F>& f, const ModElem<F>& x) {
  nh_check(f.dom.amb <= f.cod.amb, "modmap_apply: ambient shrinks");
  ModElem<F> out = mod_zero<F>(f.cod);
  for (auto& [k, c] : mod_coords(x)) {
    auto [g, A] = mod_lift<F>(f.dom, k);
    HElem<F> a = f.dom.amb == f.cod.amb ? A : A.embed_y(0, f.cod.amb);
    out = mod_add(out, mod_scaled(mod_act(f.cod, a, f.img[g]), c));
  }
  return out;
}

template <class F>
ModMap<F> modmap_compose(const ModMap<F>& g, const ModMap<F>& f) {  // g after f
  ModMap<F> h{f.dom, g.cod, f.deg + g.deg, {}};
  for (auto& im : f.img) h.img.push_back(modmap_apply(g, im));
  return h;
}

template <class F>
ModMap<F> modmap_add(const ModMap<F>& a, const ModMap<F>& b) {
  ModMap<F> r = a;
  for (std::size_t i = 0; i < r.img.size(); ++i) r.img[i] = mod_add(r.img[i], b.img[i]);
  return r;
}

template <class F>
ModMap<F> modmap_scaled(const ModMap<F>& a, const F& c) {
  ModMap<F> r = a;
  for (auto& im : r.img) im = mod_scaled(im, c);
  return r;
}

template <class F>
bool modmap_equal(const ModMap<F>& a, const ModMap<F>& b) {
  if (a.img.size() != b.img.size()) return false;
  for (std::size_t i = 0; i < a.img.size(); ++i)
    if (!(a.img[i] == b.img[i])) return false;
  return true;
}

// Well-definedness: every presentation relation must annihilate the images.
template <class F>
bool modmap_welldefined(const ModMap<F>& f, std::string* why = nullptr) {
  for (auto& [g, rel] : mod_relations<F>(f.dom)) {
    HElem<F> a = f.dom.amb == f.cod.amb ? rel : rel.embed_y(0, f.cod.amb);
    if (!mod_act(f.cod, a, f.img[g]).is_zero()) {
      if (why)
        *why = "relation on generator " + std::to_string(g) + " not annihilated";
      return false;
    }
  }
  return true;
}

// Degree homogeneity: image of each generator must be homogeneous of degree
// gen_degree + f.deg (zero images always pass).
template <class F>
bool modmap_homogeneous(const ModMap<F>& f, std::string* why = nullptr) {
  for (int g = 0; g < mod_gen_count(f.dom); ++g) {
    if (f.img[g].is_zero()) continue;
    auto d = mod_degree(f.cod, f.img[g]);
    if (!d || *d != mod_gen_degree(f.dom, g) + f.deg) {
      if (why) *why = "generator " + std::to_string(g) + " image not homogeneous";
      return false;
    }
  }
  return true;
}

// Matrix of f on the degree-d graded piece (rows: codomain basis in degree
// d + f.deg, columns: domain basis in degree d).
template <class F>
SparseMat<F> modmap_matrix(const ModMap<F>& f, int d) {
  auto dom_b = mod_basis(f.dom, d);
  auto cod_b = mod_basis(f.cod, d + f.deg);
  std::map<ModBasisKey, int> row;
  for (std::size_t i = 0; i < cod_b.size(); ++i) row[cod_b[i]] = static_cast<int>(i);
  SparseMat<F> m(static_cast<int>(cod_b.size()), static_cast<int>(dom_b.size()));
  for (std::size_t jcol = 0; jcol < dom_b.size(); ++jcol) {
    ModElem<F> im = modmap_apply(f, mod_elem_of_basis<F>(f.dom, dom_b[jcol]));
    for (auto& [k, c] : mod_coords(im)) {
      auto it = row.find(k);
      nh_check(it != row.end(), "modmap_matrix: image leaves graded piece");
      m.add(it->second, static_cast<int>(jcol), c);
    }
  }
  return m;
}

}  // namespace nilhecke
