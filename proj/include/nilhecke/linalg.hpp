#pragma once
// Exact sparse linear algebra and the rank certificates used by the
// degreewise verification engine:
//  - GaussSolver: incremental reduced echelon form for solving, nullspaces,
//    and exact ranks of small systems;
//  - sparse_rank: batch Markowitz-style elimination (exact rank, any field);
//  - matching_lower_bound: columns with distinct leading rows under some row
//    order form a triangular subsystem, so their count bounds rank below;
//  - rank over F_p as a one-sided bound for rational matrices
//    (rank_p <= rank_Q always; rank_p >= target therefore certifies).
// Every certificate is exact; nothing here is numerical.

#include <map>
#include <optional>
#include <vector>

#include "nilhecke/field.hpp"

namespace nilhecke {

template <class F>
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::map<int, F>> bycol;

  SparseMat() = default;
  SparseMat(int r, int c) : rows(r), cols(c), bycol(c) {}

  void add(int i, int j, const F& v) {
    nh_check(0 <= i && i < rows && 0 <= j && j < cols, "SparseMat::add: out of range");
    auto& col = bycol[j];
    auto it = col.find(i);
    if (it == col.end()) {
      if (!(v == F(0))) col.emplace(i, v);
    } else {
      it->second += v;
      if (it->second == F(0)) col.erase(it);
    }
  }
  long long nnz() const {
    long long z = 0;
    for (auto& c : bycol) z += static_cast<long long>(c.size());
    return z;
  }
};

// Incremental reduced row echelon form over F. Rows are added one at a time
// and kept fully reduced, so rank, consistency, particular solutions and the
// nullspace fall out directly. Intended for systems up to a few thousand
// unknowns; use sparse_rank for pure rank questions on bigger matrices.
template <class F>
class GaussSolver {
 public:
  explicit GaussSolver(int ncols) : ncols_(ncols), col_to_row_(ncols + 1, -1) {}

  // Row with optional right-hand side (stored in virtual column ncols).
  // Returns false iff the row reduces to 0 = nonzero.
  bool add_row(std::map<int, F> row, F rhs = F(0)) {
    if (!(rhs == F(0))) row[ncols_] = rhs;
    reduce(row);
    if (row.empty()) return true;
    int p = row.begin()->first;
    if (p == ncols_) {
      consistent_ = false;
      return false;
    }
    F inv = F(1) / row.begin()->second;
    for (auto& [j, v] : row) v *= inv;
    // eliminate p from all existing rows
    for (auto& er : rows_) {
      auto it = er.find(p);
      if (it == er.end()) continue;
      F c = it->second;
      for (auto& [j, v] : row) {
        auto jt = er.find(j);
        if (jt == er.end()) {
          er.emplace(j, -c * v);
        } else {
          jt->second -= c * v;
          if (jt->second == F(0)) er.erase(jt);
        }
      }
    }
    col_to_row_[p] = static_cast<int>(rows_.size());
    pivots_.push_back(p);
    rows_.push_back(std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int ncols() const { return ncols_; }
  int nullity() const { return ncols_ - rank(); }
  bool consistent() const { return consistent_; }

  // Reduce an arbitrary vector against the echelon rows (in place).
  void reduce(std::map<int, F>& row) const {
    for (auto it = row.begin(); it != row.end();) {
      int j = it->first;
      int r = j <= ncols_ && j < static_cast<int>(col_to_row_.size()) ? col_to_row_[j] : -1;
      if (r < 0 || j == ncols_) {
        ++it;
        continue;
      }
      F c = it->second;
      for (auto& [k, v] : rows_[r]) {
        auto kt = row.find(k);
        if (kt == row.end()) {
          row.emplace(k, -c * v);
        } else {
          kt->second -= c * v;
          if (kt->second == F(0)) row.erase(kt);
        }
      }
      it = row.upper_bound(j);  // j itself was cancelled
    }
  }

  // Is the vector in the row span (ignoring rhs column)?
  bool in_row_span(std::map<int, F> row) const {
    reduce(row);
    return row.empty();
  }

  // Solution with all free variables = 0. Requires a consistent system.
  std::vector<F> particular() const {
    nh_check(consistent_, "GaussSolver: inconsistent system");
    std::vector<F> x(ncols_, F(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto it = rows_[r].find(ncols_);
      x[pivots_[r]] = it == rows_[r].end() ? F(0) : it->second;
    }
    return x;
  }

  std::vector<std::vector<F>> nullspace() const {
    std::vector<std::vector<F>> basis;
    for (int j = 0; j < ncols_; ++j) {
      if (col_to_row_[j] >= 0) continue;
      std::vector<F> x(ncols_, F(0));
      x[j] = F(1);
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto it = rows_[r].find(j);
        if (it != rows_[r].end()) x[pivots_[r]] = -it->second;
      }
      basis.push_back(std::move(x));
    }
    return basis;
  }

 private:
  int ncols_;
  bool consistent_ = true;
  std::vector<std::map<int, F>> rows_;
  std::vector<int> pivots_;
  std::vector<int> col_to_row_;
};

// Exact rank by destructive sparse elimination with a Markowitz-flavoured
// pivot choice (smallest rows first, unit pivots and thin columns preferred).
template <class F>
int sparse_rank(const SparseMat<F>& m) {
  std::vector<std::map<int, F>> rows(m.rows);
  for (int j = 0; j < m.cols; ++j)
    for (auto& [i, v] : m.bycol[j]) rows[i].emplace(j, v);
  std::vector<int> colcount(m.cols, 0);
  for (auto& r : rows)
    for (auto& [j, v] : r) ++colcount[j];
  std::vector<char> active(rows.size(), 1);

  int rank = 0;
  for (;;) {
    // pick pivot among the thinnest rows
    int best_r = -1, best_c = -1;
    long long best_score = -1;
    std::size_t min_nnz = SIZE_MAX;
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (active[i] && !rows[i].empty()) min_nnz = std::min(min_nnz, rows[i].size());
    if (min_nnz == SIZE_MAX) break;
    int candidates = 0;
    for (std::size_t i = 0; i < rows.size() && candidates < 24; ++i) {
      if (!active[i] || rows[i].size() != min_nnz) continue;
      ++candidates;
      for (auto& [j, v] : rows[i]) {
        bool unit = v == F(1) || v == F(-1);
        long long score =
            (static_cast<long long>(min_nnz) - 1) * (colcount[j] - 1) * 4 + (unit ? 0 : 1);
        if (best_score < 0 || score < best_score) {
          best_score = score;
          best_r = static_cast<int>(i);
          best_c = j;
        }
      }
    }
    ++rank;
    auto piv = rows[best_r];
    F pw = piv.at(best_c);
    active[best_r] = 0;
    for (auto& [j, v] : piv) --colcount[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!active[i]) continue;
      auto it = rows[i].find(best_c);
      if (it == rows[i].end()) continue;
      F c = it->second / pw;
      for (auto& [j, v] : piv) {
        auto jt = rows[i].find(j);
        if (jt == rows[i].end()) {
          rows[i].emplace(j, -c * v);
          ++colcount[j];
        } else {
          jt->second -= c * v;
          if (jt->second == F(0)) {
            rows[i].erase(jt);
            --colcount[j];
          }
        }
      }
    }
  }
  return rank;
}

// Lower bound: pick, for each column, its maximal nonzero row under the key
// order; columns with pairwise distinct leading rows are triangular, hence
// independent. keys[i] ranks row i (bigger = later); several key vectors may
// be tried, the best bound wins. An empty keys list uses ascending and
// descending row index.
template <class F>
int matching_lower_bound(const SparseMat<F>& m, std::vector<std::vector<int>> keys = {}) {
  if (keys.empty()) {
    std::vector<int> asc(m.rows), desc(m.rows);
    for (int i = 0; i < m.rows; ++i) {
      asc[i] = i;
      desc[i] = m.rows - 1 - i;
    }
    keys.push_back(std::move(asc));
    keys.push_back(std::move(desc));
  }
  int best = 0;
  for (auto& key : keys) {
    nh_check(static_cast<int>(key.size()) == m.rows, "matching_lower_bound: bad key size");
    std::map<int, int> lead_count;
    for (int j = 0; j < m.cols; ++j) {
      int lead = -1, lead_key = -1;
      for (auto& [i, v] : m.bycol[j])
        if (key[i] > lead_key) {
          lead_key = key[i];
          lead = i;
        }
      if (lead >= 0) ++lead_count[lead];
    }
    best = std::max(best, static_cast<int>(lead_count.size()));
  }
  return best;
}

// Rank of a rational matrix over F_p: a lower bound for the rational rank.
// Returns -1 when some denominator vanishes mod p (certificate inapplicable).
// The global Fp modulus is saved and restored.
inline int rank_modp(const SparseMat<Rational>& m, std::uint64_t prime) {
  std::uint64_t saved = Fp::p;
  Fp::set_modulus(prime);
  SparseMat<Fp> mp(m.rows, m.cols);
  for (int j = 0; j < m.cols; ++j)
    for (auto& [i, v] : m.bycol[j]) {
      Fp out;
      if (!fp_from_rational(v, out)) {
        Fp::p = saved;
        return -1;
      }
      if (out != Fp(0)) mp.bycol[j].emplace(i, out);
    }
  int r = sparse_rank(mp);
  Fp::p = saved;
  return r;
}

}  // namespace nilhecke
