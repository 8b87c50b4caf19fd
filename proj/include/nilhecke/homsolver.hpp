#pragma once

// Linear solver for spaces of (chain) maps between bounded complexes of
// bimodule-category objects, in one fixed internal degree.
//
// Unknowns are the coordinates of the generator images in the forced graded
// pieces of the target rows.  Everything a map must satisfy is linear in
// these:
//   * well-definedness over the row relations,
//   * the gamma squares making each component a morphism of objects,
//   * the commuting squares with the differentials (optional: without them
//     the solver computes the termwise cell spaces of the Hom complex),
//   * pinned compositions "P o W = rhs" against known chain maps, which
//     yield transports along isomorphisms or quasi-isomorphisms with rigid
//     target.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nilhecke/bobject.hpp"
#include "nilhecke/linalg.hpp"
#include "nilhecke/ycomplex.hpp"

namespace nilhecke {

template <class F>
class ChainMapSolver {
 public:
  ChainMapSolver(const BComplex<F>& C, const BComplex<F>& D, int vdeg, bool chain_eqs = true)
      : vdeg_(vdeg) {
    nh_check(C.n == D.n, "ChainMapSolver: ambient ranks differ");
    lo_ = std::min(C.lo, D.lo);
    hi_ = std::max(C.hi(), D.hi());
    C_ = complex_window(C, lo_, hi_);
    D_ = complex_window(D, lo_, hi_);
    for (int k = lo_; k <= hi_; ++k)
      for (bool mrow : {true, false}) {
        const Module& cm = rowmod(C_, k, mrow);
        const Module& dm = rowmod(D_, k, mrow);
        for (int g = 0; g < mod_gen_count(cm); ++g) {
          VarBlock b;
          b.term = k;
          b.mrow = mrow;
          b.gen = g;
          b.keys = mod_basis(dm, mod_gen_degree(cm, g) + vdeg_);
          b.offset = nvars_;
          for (std::size_t i = 0; i < b.keys.size(); ++i)
            b.pos.emplace(b.keys[i], b.offset + static_cast<int>(i));
          nvars_ += static_cast<int>(b.keys.size());
          index_.emplace(std::make_tuple(k, mrow, g), static_cast<int>(blocks_.size()));
          blocks_.push_back(std::move(b));
        }
      }
    gs_.emplace(nvars_);
    add_welldef();
    add_gamma_squares();
    if (chain_eqs) add_chain_squares();
  }

  int var_count() const { return nvars_; }
  int dim() const { return gs_->nullity(); }
  bool consistent() const { return gs_->consistent(); }

  // Pins the composition P o W = rhs for a known chain map P out of the
  // target complex and a known chain map rhs out of the source.
  void add_composed_equals(const ChainMap<F>& P, const ChainMap<F>& rhs) {
    nh_check(rhs.deg == vdeg_ + P.deg, "add_composed_equals: degree mismatch");
    int ulo = std::min(lo_, std::min(P.dom.lo, rhs.dom.lo));
    int uhi = std::max(hi_, std::max(P.dom.hi(), rhs.dom.hi()));
    ChainMap<F> Pp = chainmap_padded(P, ulo, uhi);
    ChainMap<F> rp = chainmap_padded(rhs, ulo, uhi);
    nh_check(bcomplex_equal(complex_window(D_, ulo, uhi), Pp.dom),
             "add_composed_equals: middle complexes differ");
    nh_check(bcomplex_equal(complex_window(C_, ulo, uhi), rp.dom),
             "add_composed_equals: source complexes differ");
    nh_check(bcomplex_equal(Pp.cod, rp.cod), "add_composed_equals: target complexes differ");
    for (int k = lo_; k <= hi_; ++k)
      for (bool mrow : {true, false}) {
        const Module& cm = rowmod(C_, k, mrow);
        const BMorphism<F>& pk = Pp.comp[k - ulo];
        const BMorphism<F>& rk = rp.comp[k - ulo];
        const ModMap<F>& pm = mrow ? pk.fM : pk.fN;
        const ModMap<F>& rm = mrow ? rk.fM : rk.fN;
        for (int g = 0; g < mod_gen_count(cm); ++g) {
          Rows rows;
          acc_known_after_unknown(rows, pm, rowmod(D_, k, mrow), k, mrow, g, F(1));
          std::map<ModBasisKey, F> rhsmap;
          for (auto& [ck, cv] : mod_coords(rm.img[g])) {
            rhsmap.emplace(ck, cv);
            rows[ck];
          }
          flush(rows, &rhsmap);
        }
      }
  }

  ChainMap<F> materialize(const std::vector<F>& sol) const {
    std::map<int, BMorphism<F>> comps;
    for (int k = lo_; k <= hi_; ++k)
      comps.emplace(k, bmor_zero(C_.terms[k - lo_], D_.terms[k - lo_], vdeg_));
    for (auto& b : blocks_) {
      BMorphism<F>& mor = comps.at(b.term);
      ModMap<F>& mm = b.mrow ? mor.fM : mor.fN;
      const Module& dm = rowmod(D_, b.term, b.mrow);
      for (std::size_t i = 0; i < b.keys.size(); ++i) {
        const F& c = sol[b.offset + static_cast<int>(i)];
        if (c == F(0)) continue;
        mm.img[b.gen] = mod_add(mm.img[b.gen], mod_elem_of_basis<F>(dm, b.keys[i], c));
      }
    }
    return chainmap_make(C_, D_, vdeg_, comps);
  }

  std::vector<ChainMap<F>> basis() const {
    std::vector<ChainMap<F>> out;
    for (auto& v : gs_->nullspace()) out.push_back(materialize(v));
    return out;
  }

  ChainMap<F> particular_map() const {
    nh_check(gs_->consistent(), "particular_map: inconsistent system");
    return materialize(gs_->particular());
  }

  // Coordinate vector of a map container aligned with the solver's padded
  // domain and codomain.
  std::vector<F> coords_of(const ChainMap<F>& u) const {
    std::vector<F> v(nvars_, F(0));
    ChainMap<F> up = chainmap_padded(u, lo_, hi_);
    for (auto& b : blocks_) {
      const BMorphism<F>& mor = up.comp[b.term - lo_];
      const ModMap<F>& mm = b.mrow ? mor.fM : mor.fN;
      for (auto& [ck, cv] : mod_coords(mm.img[b.gen])) {
        auto it = b.pos.find(ck);
        nh_check(it != b.pos.end(), "coords_of: coordinate outside the graded piece");
        v[it->second] = cv;
      }
    }
    return v;
  }

  const BComplex<F>& domc() const { return C_; }
  const BComplex<F>& codc() const { return D_; }

 private:
  struct VarBlock {
    int term = 0;
    bool mrow = true;
    int gen = 0;
    int offset = 0;
    std::vector<ModBasisKey> keys;
    std::map<ModBasisKey, int> pos;
  };
  using Rows = std::map<ModBasisKey, std::map<int, F>>;

  static const Module& rowmod(const BComplex<F>& X, int k, bool mrow) {
    const BObject<F>& t = X.terms[k - X.lo];
    return mrow ? t.M : t.N;
  }

  // Adds to the accumulated rows the coordinates of P(W(gen)) for the
  // unknown block of the given generator.
  void acc_known_after_unknown(Rows& rows, const ModMap<F>& P, const Module& dm, int k,
                               bool mrow, int g, const F& scale) {
    auto it = index_.find(std::make_tuple(k, mrow, g));
    if (it == index_.end()) return;
    const VarBlock& b = blocks_[it->second];
    for (std::size_t i = 0; i < b.keys.size(); ++i) {
      ModElem<F> e = mod_elem_of_basis<F>(dm, b.keys[i], F(1));
      for (auto& [ck, cv] : mod_coords(modmap_apply(P, e))) {
        F v = cv * scale;
        if (!(v == F(0))) rows[ck][b.offset + static_cast<int>(i)] += v;
      }
    }
  }

  // Adds the coordinates of W(x) for a known element x of the (k, row)
  // module of the source.
  void acc_unknown_after_known(Rows& rows, int k, bool mrow, const ModElem<F>& x,
                               const F& scale) {
    const Module& cm = rowmod(C_, k, mrow);
    const Module& dm = rowmod(D_, k, mrow);
    for (auto& [bk, c] : mod_coords(x)) {
      auto [g, A] = mod_lift<F>(cm, bk);
      auto it = index_.find(std::make_tuple(k, mrow, g));
      nh_check(it != index_.end(), "ChainMapSolver: missing variable block");
      const VarBlock& b = blocks_[it->second];
      for (std::size_t i = 0; i < b.keys.size(); ++i) {
        ModElem<F> e = mod_elem_of_basis<F>(dm, b.keys[i], F(1));
        for (auto& [ck, cv] : mod_coords(mod_act(dm, A, e))) {
          F v = cv * c * scale;
          if (!(v == F(0))) rows[ck][b.offset + static_cast<int>(i)] += v;
        }
      }
    }
  }

  void flush(Rows& rows, const std::map<ModBasisKey, F>* rhs = nullptr) {
    for (auto& [ck, row] : rows) {
      std::map<int, F> r;
      for (auto& [col, v] : row)
        if (!(v == F(0))) r.emplace(col, v);
      F b = F(0);
      if (rhs) {
        auto it = rhs->find(ck);
        if (it != rhs->end()) b = it->second;
      }
      if (r.empty() && b == F(0)) continue;
      gs_->add_row(std::move(r), b);
    }
  }

  void add_welldef() {
    for (int k = lo_; k <= hi_; ++k)
      for (bool mrow : {true, false}) {
        const Module& cm = rowmod(C_, k, mrow);
        const Module& dm = rowmod(D_, k, mrow);
        for (auto& [g, rel] : mod_relations<F>(cm)) {
          auto it = index_.find(std::make_tuple(k, mrow, g));
          if (it == index_.end()) continue;
          const VarBlock& b = blocks_[it->second];
          Rows rows;
          for (std::size_t i = 0; i < b.keys.size(); ++i) {
            ModElem<F> e = mod_elem_of_basis<F>(dm, b.keys[i], F(1));
            for (auto& [ck, cv] : mod_coords(mod_act(dm, rel, e)))
              if (!(cv == F(0))) rows[ck][b.offset + static_cast<int>(i)] += cv;
          }
          flush(rows);
        }
      }
  }

  void add_gamma_squares() {
    for (int k = lo_; k <= hi_; ++k) {
      const BObject<F>& ct = C_.terms[k - lo_];
      const BObject<F>& dt = D_.terms[k - lo_];
      for (int g = 0; g < mod_gen_count(ct.N); ++g) {
        Rows rows;
        acc_unknown_after_known(rows, k, true, ct.gamma.img[g], F(1));
        acc_known_after_unknown(rows, dt.gamma, dt.N, k, false, g, F(-1));
        flush(rows);
      }
    }
  }

  void add_chain_squares() {
    for (int k = lo_; k < hi_; ++k) {
      const BMorphism<F>& dC = C_.diffs[k - lo_];
      const BMorphism<F>& dD = D_.diffs[k - lo_];
      for (bool mrow : {true, false}) {
        const ModMap<F>& dCm = mrow ? dC.fM : dC.fN;
        const ModMap<F>& dDm = mrow ? dD.fM : dD.fN;
        const Module& cm = rowmod(C_, k, mrow);
        for (int g = 0; g < mod_gen_count(cm); ++g) {
          Rows rows;
          acc_known_after_unknown(rows, dDm, rowmod(D_, k, mrow), k, mrow, g, F(1));
          acc_unknown_after_known(rows, k + 1, mrow, dCm.img[g], F(-1));
          flush(rows);
        }
      }
    }
  }

  int vdeg_ = 0;
  int lo_ = 0, hi_ = 0;
  int nvars_ = 0;
  BComplex<F> C_, D_;
  std::vector<VarBlock> blocks_;
  std::map<std::tuple<int, bool, int>, int> index_;
  std::optional<GaussSolver<F>> gs_;
};

// The unique chain map w : C -> D with P o w = rhs, for a known P : D -> E
// and rhs : C -> E.  Existence and uniqueness are asserted, which certifies
// rigidity of the configuration on the way.
template <class F>
ChainMap<F> transport(const BComplex<F>& C, const BComplex<F>& D, int vdeg,
                      const ChainMap<F>& P, const ChainMap<F>& rhs) {
  ChainMapSolver<F> s(C, D, vdeg, true);
  s.add_composed_equals(P, rhs);
  nh_check(s.consistent(), "transport: no solution");
  nh_check(s.dim() == 0, "transport: solution not unique");
  return s.particular_map();
}

// H^{-1} and H^{+1} of the Hom complex between two bounded complexes (at most
// two nonzero terms each) vanish in the given internal degree: no cells in
// negative Hom degree, and the Hom differential from degree 0 reaches all of
// degree 1.
template <class F>
CheckResult hom_rigidity_check(const BComplex<F>& C0, const BComplex<F>& D0, int d) {
  int lo = std::min(C0.lo, D0.lo), hi = std::max(C0.hi(), D0.hi());
  BComplex<F> C = complex_window(C0, lo, hi);
  BComplex<F> D = complex_window(D0, lo, hi);
  ChainMapSolver<F> sneg(C, complex_hshift(D, 1), d, false);
  if (sneg.dim() != 0)
    return check_fail("Hom cells of degree -1 are nonzero in internal degree " +
                      std::to_string(d));
  ChainMapSolver<F> s1(C, complex_hshift(D, -1), d, false);
  ChainMapSolver<F> s0(C, D, d, false);
  GaussSolver<F> gs(s1.var_count());
  for (auto& u : s0.basis()) {
    std::map<int, BMorphism<F>> comps;
    for (int k = lo; k <= hi; ++k) {
      const BObject<F>& dcod = (k + 1 <= hi) ? D.terms[k + 1 - lo] : bobj_zero<F>(D.n);
      BMorphism<F> t = bmor_zero(C.terms[k - lo], dcod, d);
      if (k + 1 <= hi) {
        t = bmor_compose(D.diffs[k - lo], u.comp[k - lo]);
        t = bmor_add(t, bmor_scaled(bmor_compose(u.comp[k + 1 - lo], C.diffs[k - lo]), F(-1)));
      }
      comps.emplace(k, t);
    }
    ChainMap<F> v = chainmap_make(C, complex_hshift(D, -1), d, comps);
    std::vector<F> cv = s1.coords_of(v);
    std::map<int, F> row;
    for (std::size_t i = 0; i < cv.size(); ++i)
      if (!(cv[i] == F(0))) row.emplace(static_cast<int>(i), cv[i]);
    gs.add_row(std::move(row));
  }
  if (gs.rank() != s1.dim())
    return check_fail("Hom cohomology in degree +1 is nonzero in internal degree " +
                      std::to_string(d) + ": image rank " + std::to_string(gs.rank()) +
                      " of " + std::to_string(s1.dim()));
  return {};
}

// Dimension of the chain-map space C -> D in internal degree d, after
// checking that no homotopy cells exist there (so the count equals the
// dimension of Hom in the homotopy category).
template <class F>
std::pair<int, CheckResult> hom_dim_at(const BComplex<F>& C, const BComplex<F>& D, int d) {
  ChainMapSolver<F> sneg(C, complex_hshift(D, 1), d, false);
  if (sneg.dim() != 0)
    return {0, check_fail("homotopy cells present in internal degree " + std::to_string(d))};
  ChainMapSolver<F> s(C, D, d, true);
  return {s.dim(), CheckResult{}};
}

}  // namespace nilhecke
