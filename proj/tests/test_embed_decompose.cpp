#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilhecke/decompose.hpp"

using namespace nilhecke;
using E = HElem<Rational>;

namespace {

std::mt19937 rng(77001);

int rint(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

E random_elem(int n, int terms, int emax, int ymax) {
  E e(n);
  for (int t = 0; t < terms; ++t) {
    Perm w = perm_id(n);
    std::shuffle(w.begin(), w.end(), rng);
    XPack px = 0;
    for (int i = 1; i <= n; ++i) px = xp_set(px, i, rint(0, emax));
    int c = 0;
    while (!c) c = rint(-3, 3);
    e.add_term(w, px, rint(0, ymax), Rational(c));
  }
  return e;
}

}  // namespace

TEST_CASE("embeddings are algebra maps") {
  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      E a = random_elem(n, 2, 2, 2), b = random_elem(n, 2, 2, 2);
      // iota_1: shift by one, y -> x_1
      REQUIRE((a * b).embed(1, 1, n + 1) == a.embed(1, 1, n + 1) * b.embed(1, 1, n + 1));
      // iota_0: no shift, y -> x_{n+1}
      REQUIRE((a * b).embed(0, n + 1, n + 1) ==
              a.embed(0, n + 1, n + 1) * b.embed(0, n + 1, n + 1));
      // iota^y_2: shift by two, y -> y
      REQUIRE((a * b).embed_y(2, n + 2) == a.embed_y(2, n + 2) * b.embed_y(2, n + 2));
      // iota_m = iota_{m,m}: shift by m, y -> x_m
      REQUIRE((a * b).embed(2, 2, n + 2) == a.embed(2, 2, n + 2) * b.embed(2, 2, n + 2));
    }
  }
  E y0 = E::yvar(0);
  REQUIRE(y0.embed(1, 1, 1) == E::xvar(1, 1));  // H_0[y] = k[y] -> k[x_1]
}

TEST_CASE("tag decomposition over iota_1: pinned value") {
  // tau_1 x_1 = iota_1(1) * 1 ... no: = 1 * tag_1 + iota_1(x_1) * tau_1.
  auto a = decompose_left_iota1(E::tau(2, 1) * E::xvar(2, 1));
  REQUIRE(a[1] == HElem<Rational>::unit(1));
  REQUIRE(a[2] == HElem<Rational>::xvar(1, 1));

  // tau_1 itself is tag_2 with unit coefficient.
  auto b = decompose_left_iota1(E::tau(2, 1));
  REQUIRE(b[1].is_zero());
  REQUIRE(b[2] == HElem<Rational>::unit(1));

  // x_1 in H_1 is iota_1(y) for t = 1.
  auto c = decompose_left_iota1(E::xvar(1, 1));
  REQUIRE(c[1] == HElem<Rational>::yvar(0));
}

TEST_CASE("tag decomposition over iota_1: recomposition, t <= 4") {
  for (int t = 1; t <= 4; ++t) {
    for (int rep = 0; rep < 25; ++rep) {
      E g = random_elem(t, 4, 2, 0);
      auto a = decompose_left_iota1(g);
      E back = E::zero(t);
      for (int r = 1; r <= t; ++r) back = back + iota1_times_tag(a[r], r, t);
      REQUIRE(back == g);
      // coefficients live in H_{t-1}[y]
      for (int r = 1; r <= t; ++r) REQUIRE(a[r].n == t - 1);
    }
  }
}

TEST_CASE("top-strand coset split recomposes, rank 4") {
  for (int rep = 0; rep < 25; ++rep) {
    E h = random_elem(4, 5, 2, 2);
    E back = E::zero(4);
    for (auto& [slot, inner] : split_top_ind(h)) {
      auto [k, j] = slot;
      E piece = E::tau_perm(4, coset_rep_top(4, k)).rmul_monomial(xp_set(0, 4, j), 0) *
                inner.embed_y(0, 4);
      back = back + piece;
    }
    REQUIRE(back == h);
  }
}

TEST_CASE("parabolic low-free split recomposes, rank 4 window 2") {
  for (int rep = 0; rep < 25; ++rep) {
    E h = random_elem(4, 5, 2, 2);
    E back = E::zero(4);
    for (auto& [slot, inner] : split_parabolic_lowfree(h, 2)) {
      auto& [c, low] = slot;
      E piece = E::tau_perm(4, c).rmul_monomial(low, 0) * inner.embed_y(2, 4);
      back = back + piece;
    }
    REQUIRE(back == h);
  }
}
