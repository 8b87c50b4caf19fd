#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nilhecke/linalg.hpp"

using namespace nilhecke;
using Mat = SparseMat<Rational>;

namespace {

std::mt19937 rng(5150);

Mat random_rank_deficient(int n, int m, int r) {
  // product of random n x r and r x m integer matrices: rank <= r
  std::vector<std::vector<int>> a(n, std::vector<int>(r)), b(r, std::vector<int>(m));
  auto ri = [&] { return std::uniform_int_distribution<int>(-2, 2)(rng); };
  for (auto& row : a)
    for (auto& v : row) v = ri();
  for (auto& row : b)
    for (auto& v : row) v = ri();
  Mat out(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      int s = 0;
      for (int k = 0; k < r; ++k) s += a[i][k] * b[k][j];
      if (s) out.add(i, j, Rational(s));
    }
  return out;
}

}  // namespace

TEST_CASE("solver: rank, solution, nullspace") {
  // x + y = 3, x - y = 1  =>  x = 2, y = 1
  GaussSolver<Rational> g(2);
  REQUIRE(g.add_row({{0, Rational(1)}, {1, Rational(1)}}, Rational(3)));
  REQUIRE(g.add_row({{0, Rational(1)}, {1, Rational(-1)}}, Rational(1)));
  REQUIRE(g.rank() == 2);
  auto x = g.particular();
  REQUIRE(x[0] == Rational(2));
  REQUIRE(x[1] == Rational(1));
  REQUIRE(g.nullspace().empty());

  // inconsistent
  GaussSolver<Rational> h(1);
  REQUIRE(h.add_row({{0, Rational(1)}}, Rational(1)));
  REQUIRE(!h.add_row({{0, Rational(2)}}, Rational(3)));
  REQUIRE(!h.consistent());

  // underdetermined: x + y + z = 0 has nullity 2
  GaussSolver<Rational> u(3);
  u.add_row({{0, Rational(1)}, {1, Rational(1)}, {2, Rational(1)}});
  REQUIRE(u.nullity() == 2);
  for (auto& v : u.nullspace()) REQUIRE(v[0] + v[1] + v[2] == Rational(0));
  REQUIRE(u.in_row_span({{0, Rational(2)}, {1, Rational(2)}, {2, Rational(2)}}));
  REQUIRE(!u.in_row_span({{0, Rational(1)}}));
}

TEST_CASE("sparse_rank agrees with solver rank on random matrices") {
  for (int rep = 0; rep < 30; ++rep) {
    int n = 3 + rep % 8, m = 3 + (rep * 7) % 9, r = rep % 4;
    Mat a = random_rank_deficient(n, m, r);
    int rk = sparse_rank(a);
    REQUIRE(rk <= r);
    GaussSolver<Rational> g(m);
    for (int i = 0; i < n; ++i) {
      std::map<int, Rational> row;
      for (int j = 0; j < m; ++j)
        for (auto& [ii, v] : a.bycol[j])
          if (ii == i) row[j] = v;
      g.add_row(std::move(row));
    }
    REQUIRE(rk == g.rank());

    int bound = matching_lower_bound(a);
    REQUIRE(bound <= rk);

    int mp = rank_modp(a, 2147483647ull);
    REQUIRE(mp >= 0);
    REQUIRE(mp <= rk);
    // integer matrix, huge prime, tiny entries: equality expected here
    REQUIRE(mp == rk);
  }
}

TEST_CASE("matching certificate is sharp on triangular systems") {
  Mat t(4, 3);
  t.add(0, 0, Rational(5));
  t.add(1, 0, Rational(1));
  t.add(1, 1, Rational(7));
  t.add(3, 1, Rational(2));
  t.add(2, 2, Rational(1));
  // descending order: leads are rows 1, 3, 2 -> all distinct
  REQUIRE(matching_lower_bound(t) == 3);
  REQUIRE(sparse_rank(t) == 3);

  // custom key orders are tried too
  std::vector<int> weird = {3, 0, 1, 2};
  REQUIRE(matching_lower_bound(t, {weird}) >= 2);
}

TEST_CASE("rank_modp reports inapplicable primes") {
  Mat m(1, 1);
  m.add(0, 0, Rational(1, 7));
  REQUIRE(rank_modp(m, 7) == -1);
  REQUIRE(rank_modp(m, 5) == 1);
}
