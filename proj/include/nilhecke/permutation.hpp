#pragma once
// Permutations of {1..n} in one-line notation (0-based storage) with the word
// combinatorics the nil Hecke normal form needs: lengths, descents, reduced
// words, and minimal-coset splits. Generator indices are 1-based throughout
// the API: s_i swaps i and i+1.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "nilhecke/common.hpp"

namespace nilhecke {

using Perm = std::vector<std::uint8_t>;

inline Perm perm_id(int n) {
  Perm w(n);
  std::iota(w.begin(), w.end(), 0);
  return w;
}

inline Perm perm_s(int n, int i) {
  nh_check(1 <= i && i < n, "perm_s: index out of range");
  Perm w = perm_id(n);
  std::swap(w[i - 1], w[i]);
  return w;
}

// (u v)(i) = u(v(i))
inline Perm perm_mul(const Perm& u, const Perm& v) {
  nh_check(u.size() == v.size(), "perm_mul: size mismatch");
  Perm w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[v[i]];
  return w;
}

inline Perm perm_inv(const Perm& w) {
  Perm r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[w[i]] = static_cast<std::uint8_t>(i);
  return r;
}

inline int perm_len(const Perm& w) {
  int l = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++l;
  return l;
}

inline bool perm_is_id(const Perm& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != i) return false;
  return true;
}

// w s_i: transposes positions i, i+1.
inline Perm rmul_s(Perm w, int i) {
  std::swap(w[i - 1], w[i]);
  return w;
}

// s_i w: transposes values i, i+1.
inline Perm lmul_s(Perm w, int i) {
  for (auto& v : w) {
    if (v == i - 1)
      v = static_cast<std::uint8_t>(i);
    else if (v == i)
      v = static_cast<std::uint8_t>(i - 1);
  }
  return w;
}

// l(w s_i) < l(w)
inline bool right_descent(const Perm& w, int i) { return w[i - 1] > w[i]; }

// l(s_i w) < l(w)
inline bool left_descent(const Perm& w, int i) {
  int a = -1, b = -1;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == i - 1) a = static_cast<int>(j);
    if (w[j] == i) b = static_cast<int>(j);
  }
  return a > b;
}

inline int first_left_descent(const Perm& w) {  // 0 when w = id
  for (int i = 1; i < static_cast<int>(w.size()); ++i)
    if (left_descent(w, i)) return i;
  return 0;
}

// w = s_{i1} s_{i2} ... s_{iL}, word returned in that order.
inline std::vector<int> reduced_word(Perm w) {
  std::vector<int> word;
  for (;;) {
    int i = first_left_descent(w);
    if (!i) break;
    word.push_back(i);
    w = lmul_s(std::move(w), i);
  }
  return word;
}

// Embed S_n into S_N acting on strands m+1 .. m+n.
inline Perm perm_shift(const Perm& w, int m, int N) {
  nh_check(m + static_cast<int>(w.size()) <= N, "perm_shift: window overflow");
  Perm r = perm_id(N);
  for (std::size_t k = 0; k < w.size(); ++k)
    r[m + k] = static_cast<std::uint8_t>(m + w[k]);
  return r;
}

// Inverse of perm_shift; checks w really fixes everything outside the window.
inline Perm perm_unshift(const Perm& w, int m, int n) {
  Perm r(n);
  for (std::size_t j = 0; j < w.size(); ++j) {
    int v = w[j];
    if (static_cast<int>(j) < m || static_cast<int>(j) >= m + n) {
      nh_check(v == static_cast<int>(j), "perm_unshift: moves a strand outside window");
    } else {
      nh_check(m <= v && v < m + n, "perm_unshift: leaves window");
      r[j - m] = static_cast<std::uint8_t>(v - m);
    }
  }
  return r;
}

// Minimal-length representatives of S_n / S_{n-1}: c_k = s_k s_{k+1} ... s_{n-1}
// (c_n = id), characterized by c_k(n) = k and l(c_k) = n - k.
inline Perm coset_rep_top(int n, int k) {
  nh_check(1 <= k && k <= n, "coset_rep_top: bad k");
  Perm w = perm_id(n);
  for (int i = k; i <= n - 1; ++i) w = perm_mul(w, perm_s(n, i));
  return w;
}

// Split w in S_n as c_k w' with w' fixing n; lengths add automatically.
inline std::pair<int, Perm> split_coset_top(const Perm& w) {
  int n = static_cast<int>(w.size());
  int k = w[n - 1] + 1;
  Perm wp = perm_mul(perm_inv(coset_rep_top(n, k)), w);
  nh_check(wp[n - 1] == n - 1, "split_coset_top: representative mismatch");
  return {k, wp};
}

// w = c w' with w' in the parabolic generated by {s_i : in_j[i]} and
// l(w) = l(c) + l(w'); c is the minimal coset representative (no right
// descent inside the parabolic). in_j is indexed 1..n-1.
inline std::pair<Perm, Perm> split_parabolic_right(const Perm& w,
                                                   const std::vector<char>& in_j) {
  int n = static_cast<int>(w.size());
  Perm c = w, wp = perm_id(n);
  for (;;) {
    int found = 0;
    for (int i = 1; i < n; ++i) {
      if (in_j[i] && right_descent(c, i)) {
        c = rmul_s(std::move(c), i);
        wp = perm_mul(perm_s(n, i), wp);
        found = i;
        break;
      }
    }
    if (!found) break;
  }
  return {c, wp};
}

inline std::vector<Perm> all_perms(int n) {
  Perm w = perm_id(n);
  std::vector<Perm> out;
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::string perm_str(const Perm& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w[i] + 1);
  }
  return s + "]";
}

}  // namespace nilhecke
