#pragma once
// Degreewise exactness checking for complexes of graded module maps with
// certified exact ranks. For a two-step sequence A -f-> B -g-> C that is
// claimed short exact, per degree the verification is:
//   dim A - dim B + dim C = 0, rank f = dim A, rank g = dim C,
// together with the one-off symbolic facts g o f = 0, well-definedness and
// homogeneity. Since rank f <= dim A and rank g <= dim C hold a priori,
// certifying the matching lower bounds pins the exact ranks, and the
// dimension count then forces im f = ker g. Lower bounds are certified by
// the cheapest sound method available: leading-entry matchings, a modular
// rank (a lower bound for rational matrices), then honest elimination.

#include "nilhecke/module.hpp"

namespace nilhecke {

template <class F>
bool rank_reaches(const SparseMat<F>& m, int target, std::string& method) {
  if (target <= 0) {
    method = "trivial";
    return true;
  }
  if (target > m.rows || target > m.cols) {
    method = "impossible";
    return false;
  }
  if (matching_lower_bound(m) >= target) {
    method = "matching";
    return true;
  }
  if constexpr (std::is_same_v<F, Rational>) {
    int r = rank_modp(m, 2147483647ull);
    if (r >= target) {
      method = "modp";
      return true;
    }
  }
  if (sparse_rank(m) >= target) {
    method = "elimination";
    return true;
  }
  method = "rank deficient";
  return false;
}

struct CheckResult {
  bool ok = true;
  std::string detail;
};

inline CheckResult check_fail(std::string s) { return {false, std::move(s)}; }

template <class F>
CheckResult ses_check(const ModMap<F>& f, const ModMap<F>& g, int dlo, int dhi) {
  nh_check(f.deg == 0 && g.deg == 0, "ses_check: expects degree-0 maps");
  if (!module_equal(f.cod, g.dom)) return check_fail("middle modules differ");
  std::string why;
  if (!modmap_welldefined(f, &why)) return check_fail("first map ill-defined: " + why);
  if (!modmap_welldefined(g, &why)) return check_fail("second map ill-defined: " + why);
  if (!modmap_homogeneous(f, &why)) return check_fail("first map inhomogeneous: " + why);
  if (!modmap_homogeneous(g, &why)) return check_fail("second map inhomogeneous: " + why);
  for (auto& im : modmap_compose(g, f).img)
    if (!im.is_zero()) return check_fail("composite g o f nonzero");
  for (int d = dlo; d <= dhi; ++d) {
    int a = mod_dim(f.dom, d), b = mod_dim(f.cod, d), c = mod_dim(g.cod, d);
    if (a - b + c != 0)
      return check_fail("Euler characteristic nonzero in degree " + std::to_string(d));
    if (a + c == 0) continue;
    std::string method;
    if (!rank_reaches(modmap_matrix(f, d), a, method))
      return check_fail("first map not injective in degree " + std::to_string(d));
    if (!rank_reaches(modmap_matrix(g, d), c, method))
      return check_fail("second map not surjective in degree " + std::to_string(d));
  }
  return {};
}

// Degreewise acyclicity of a bounded complex 0 -> C_0 -> ... -> C_k -> 0
// presented as its degree-0 differentials d_i: C_i -> C_{i+1}. Per v-degree,
// with n_i = dim (C_i)_d, the forced ranks are r_0 = n_0, r_i = n_i - r_{i-1};
// since im d_{i-1} <= ker d_i gives rank d_i <= n_i - rank d_{i-1} a priori,
// certifying rank d_i >= r_i pins every rank and forces exactness at every
// spot, including injectivity at the left end and (via r_{k-1} = n_k)
// surjectivity at the right end.
template <class F>
CheckResult complex_exact_check(const std::vector<ModMap<F>>& d, int dlo, int dhi) {
  std::string why;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].deg != 0) return check_fail("expects degree-0 differentials");
    if (i + 1 < d.size() && !module_equal(d[i].cod, d[i + 1].dom))
      return check_fail("modules do not chain at step " + std::to_string(i));
    if (!modmap_welldefined(d[i], &why))
      return check_fail("map " + std::to_string(i) + " ill-defined: " + why);
    if (!modmap_homogeneous(d[i], &why))
      return check_fail("map " + std::to_string(i) + " inhomogeneous: " + why);
    if (i + 1 < d.size())
      for (auto& im : modmap_compose(d[i + 1], d[i]).img)
        if (!im.is_zero()) return check_fail("composite nonzero at step " + std::to_string(i));
  }
  if (d.empty()) return {};
  for (int deg = dlo; deg <= dhi; ++deg) {
    std::vector<int> dims;
    dims.push_back(mod_dim(d[0].dom, deg));
    for (auto& f : d) dims.push_back(mod_dim(f.cod, deg));
    int forced = 0;
    bool all_zero = true;
    for (int n : dims) all_zero = all_zero && n == 0;
    if (all_zero) continue;
    for (std::size_t i = 0; i < d.size(); ++i) {
      forced = dims[i] - forced;
      if (forced < 0)
        return check_fail("dimension count obstructs exactness in degree " + std::to_string(deg) +
                          " at spot " + std::to_string(i));
      std::string method;
      if (!rank_reaches(modmap_matrix(d[i], deg), forced, method))
        return check_fail("rank deficient in degree " + std::to_string(deg) + " at spot " +
                          std::to_string(i));
    }
    if (forced != dims.back())
      return check_fail("not exact at the final spot in degree " + std::to_string(deg));
  }
  return {};
}

}  // namespace nilhecke
