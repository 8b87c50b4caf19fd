#pragma once
// Named verification suites: every lemma-level check in the library, grouped
// the way the command-line tool exposes them, with timed pass/fail records.
// Each cell is an independent unit of work; a run executes cells with up to
// the configured number of workers and aggregates records in declaration
// order, so reports are deterministic up to the timing fields.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nilhecke/bimodule.hpp"
#include "nilhecke/demazure.hpp"
#include "nilhecke/homsolver.hpp"
#include "nilhecke/ktheory.hpp"
#include "nilhecke/report.hpp"
#include "nilhecke/webster.hpp"

namespace nilhecke {

inline constexpr char kVersion[] = "nilhecke 0.1.0";

struct SuiteConfig {
  std::string suite = "all";
  int n_max = 0;    // 0 = per-lemma default (the documented bounds)
  int deg_max = 0;  // 0 = default 12
  int trunc = 0;    // 0 = default 12
  std::string field = "rat";  // "rat" or "fp:<prime>"
  int jobs = 1;
  std::string report_path;
  std::uint64_t seed = 0x5eedbeefULL;

  int nmax(int dflt) const { return n_max > 0 ? n_max : dflt; }
  int degmax() const { return deg_max > 0 ? deg_max : 12; }
  int trunc_or(int dflt) const { return trunc > 0 ? trunc : dflt; }
};

// One independently runnable check.
struct Cell {
  std::string suite, lemma, params;
  std::function<CheckResult()> run;
};

inline std::vector<Record> run_cells(const std::vector<Cell>& cells, int jobs) {
  std::vector<Record> out(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      auto t0 = std::chrono::steady_clock::now();
      CheckResult r;
      try {
        r = cells[i].run();
      } catch (const std::exception& e) {
        r = check_fail(std::string("exception: ") + e.what());
      }
      long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
      out[i] = Record{cells[i].suite, cells[i].lemma, cells[i].params,
                      r.ok,           r.detail,       ms};
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return out;
}

// ------------------------------------------------------------ hecke kernel

// The full defining relation set of H_n[y], every generator instance.
template <class F>
CheckResult hecke_relations_check(int n) {
  using E = HElem<F>;
  E one = E::unit(n), y = E::yvar(n);
  for (int i = 1; i < n; ++i) {
    E ti = E::tau(n, i);
    if (!(ti * ti).is_zero())
      return check_fail("tau_" + std::to_string(i) + "^2 != 0 at n=" + std::to_string(n));
    if (!(ti * E::xvar(n, i) - E::xvar(n, i + 1) * ti == one))
      return check_fail("mixed relation tau x - x tau fails at i=" + std::to_string(i));
    if (!(E::xvar(n, i) * ti - ti * E::xvar(n, i + 1) == one))
      return check_fail("mixed relation x tau - tau x fails at i=" + std::to_string(i));
    if (!(ti * y == y * ti))
      return check_fail("y not central against tau_" + std::to_string(i));
    for (int r = 1; r <= n; ++r)
      if (r != i && r != i + 1 && !(ti * E::xvar(n, r) == E::xvar(n, r) * ti))
        return check_fail("far commutation tau_" + std::to_string(i) + ", x_" +
                          std::to_string(r) + " fails");
    for (int j = i + 2; j < n; ++j)
      if (!(ti * E::tau(n, j) == E::tau(n, j) * ti))
        return check_fail("far commutation tau_" + std::to_string(i) + ", tau_" +
                          std::to_string(j) + " fails");
    if (i + 1 < n) {
      E tj = E::tau(n, i + 1);
      if (!(ti * tj * ti == tj * ti * tj))
        return check_fail("braid relation fails at i=" + std::to_string(i));
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (!(E::xvar(n, i) * y == y * E::xvar(n, i)))
      return check_fail("y not central against x_" + std::to_string(i));
    for (int j = i + 1; j <= n; ++j)
      if (!(E::xvar(n, i) * E::xvar(n, j) == E::xvar(n, j) * E::xvar(n, i)))
        return check_fail("x_" + std::to_string(i) + " x_" + std::to_string(j) +
                          " do not commute");
  }
  return {};
}

// Randomized products checked against the divided-difference action: the
// action is faithful on H_n[y], so act(ab) = act(a) o act(b) on a probe set
// certifies the product. Terms are bounded by total x/y weight, so every
// monomial has v-degree at most 2*wmax.
template <class F>
CheckResult hecke_oracle_check(int n, int reps, int wmax, std::uint64_t seed) {
  using E = HElem<F>;
  using P = Poly<F>;
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
  auto rcoef = [&]() -> F {
    int c = 1 + static_cast<int>(rng() % 3);
    return rng() % 2 ? F(c) : F(-c);
  };
  auto rweights = [&](std::vector<int>& slots) {
    int t = static_cast<int>(rng() % static_cast<std::uint64_t>(wmax + 1));
    for (int k = 0; k < t; ++k) ++slots[rng() % slots.size()];
  };
  auto relem = [&](int terms) {
    E e(n);
    for (int t = 0; t < terms; ++t) {
      Perm w = perm_id(n);
      std::shuffle(w.begin(), w.end(), rng);
      std::vector<int> slots(n + 1, 0);
      rweights(slots);
      XPack px = 0;
      for (int i = 1; i <= n; ++i) px = xp_set(px, i, slots[i - 1]);
      e.add_term(w, px, slots[n], rcoef());
    }
    return e;
  };
  auto rpoly = [&](int terms) {
    P f(n);
    for (int t = 0; t < terms; ++t) {
      std::vector<int> slots(n + 1, 0);
      rweights(slots);
      XPack px = 0;
      for (int i = 1; i <= n; ++i) px = xp_set(px, i, slots[i - 1]);
      f.add_term(XKey{px, static_cast<std::uint32_t>(slots[n])}, rcoef());
    }
    return f;
  };
  std::vector<P> probes = {P::one(n), P::xvar(n, 1), P::xvar(n, n),
                           P::xvar(n, 1) * P::yvar(n)};
  for (int rep = 0; rep < reps; ++rep) {
    E a = relem(3), b = relem(3);
    E ab = a * b;
    probes.push_back(rpoly(3));
    for (const P& f : probes)
      if (!(act(ab, f) == act(a, act(b, f))))
        return check_fail("oracle mismatch at n=" + std::to_string(n) + ", rep " +
                          std::to_string(rep));
    probes.pop_back();
  }
  return {};
}

template <class F>
std::vector<Cell> cells_hecke(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int nmax = cfg.nmax(6);
  for (int n = 2; n <= nmax; ++n)
    cells.push_back({"hecke", "defining-relations", "n=" + std::to_string(n),
                     [n] { return hecke_relations_check<F>(n); }});
  int omax = cfg.nmax(4);
  std::uint64_t seed = cfg.seed;
  for (int n = 1; n <= omax; ++n)
    cells.push_back({"hecke", "product-oracle",
                     "n=" + std::to_string(n) + " reps=200 wmax=4",
                     [n, seed] { return hecke_oracle_check<F>(n, 200, 4, seed); }});
  return cells;
}

// ------------------------------------------------- diagonal element checks

template <class F>
std::vector<Cell> cells_centrality(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  for (int n = 1; n <= cfg.nmax(5); ++n)
    cells.push_back({"delta", "centrality", "n=" + std::to_string(n),
                     [n] { return delta_central_check<F>(n); }});
  return cells;
}

template <class F>
std::vector<Cell> cells_exactness(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int D = cfg.degmax();
  // both sequences with ambient rank at most nmax(4): the second sequence
  // lives one strand higher, so its index stops one earlier
  for (int n = 1; n <= cfg.nmax(4); ++n)
    cells.push_back({"exactness", "first-sequence",
                     "n=" + std::to_string(n) + " |d|<=" + std::to_string(D),
                     [n, D] {
                       auto [nu, mu] = ses_one<F>(n);
                       return ses_check(nu, mu, -D, D);
                     }});
  for (int n = 1; n <= cfg.nmax(4) - 1; ++n)
    cells.push_back({"exactness", "second-sequence",
                     "n=" + std::to_string(n) + " |d|<=" + std::to_string(D),
                     [n, D] {
                       auto [nu, mu] = ses_two<F>(n);
                       return ses_check(nu, mu, -D, D);
                     }});
  return cells;
}

template <class F>
std::vector<Cell> cells_delta_diagrams(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  for (int n = 1; n <= cfg.nmax(4); ++n)
    cells.push_back({"delta", "shift-diagram", "n=" + std::to_string(n),
                     [n] { return delta_shift_check<F>(n); }});
  for (int n = 1; n <= cfg.nmax(5); ++n)
    cells.push_back({"delta", "contraction-to-unit", "n=" + std::to_string(n),
                     [n] { return delta_to_one_check<F>(n); }});
  return cells;
}

template <class F>
std::vector<Cell> cells_generation(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int D = cfg.degmax();
  for (int n = 1; n <= cfg.nmax(4); ++n) {
    cells.push_back({"delta", "generation-witness", "n=" + std::to_string(n),
                     [n] { return delta_generates_check<F>(n); }});
    cells.push_back({"delta", "generation-degreewise",
                     "n=" + std::to_string(n) + " d=" + std::to_string(-n * (n + 1)) +
                         ".." + std::to_string(D),
                     [n, D] { return delta_generates_degreewise_check<F>(n, -n * (n + 1), D); }});
  }
  return cells;
}

// ------------------------------------------------------- tensor category

template <class F>
std::vector<Cell> cells_quasi_iso(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int D = cfg.degmax();
  for (int n = 0; n <= cfg.nmax(3); ++n) {
    cells.push_back({"quasi-iso", "f-chain-map", "n=" + std::to_string(n), [n] {
                       std::string why;
                       if (!chainmap_valid(make_f<F>(n), &why))
                         return check_fail("f is not a chain map: " + why);
                       return CheckResult{};
                     }});
    cells.push_back({"quasi-iso", "f-quasi-iso",
                     "n=" + std::to_string(n) + " |d|<=" + std::to_string(D),
                     [n, D] { return quasi_iso_check(make_f<F>(n), -D, D); }});
    cells.push_back({"quasi-iso", "h-chain-map", "n=" + std::to_string(n), [n] {
                       std::string why;
                       if (!chainmap_valid(make_h<F>(n), &why))
                         return check_fail("h is not a chain map: " + why);
                       return CheckResult{};
                     }});
    cells.push_back({"quasi-iso", "h-quasi-iso",
                     "n=" + std::to_string(n) + " |d|<=" + std::to_string(D),
                     [n, D] { return quasi_iso_check(make_h<F>(n), -D, D); }});
  }
  return cells;
}

template <class F>
std::vector<Cell> cells_rigidity(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int tmax = cfg.nmax(3), D = cfg.degmax();
  for (int t = 0; t <= tmax; ++t)
    for (int n1 = 0; n1 <= t; ++n1)
      for (int n2 = 0; n2 <= t; ++n2) {
        int m1 = t - n1, m2 = t - n2;
        std::string tag = "(" + std::to_string(n1) + "," + std::to_string(m1) + ")->(" +
                          std::to_string(n2) + "," + std::to_string(m2) + ") |d|<=" +
                          std::to_string(D);
        cells.push_back({"rigidity", "hom-complex-vanishing", tag, [n1, m1, n2, m2, D] {
                           BComplex<F> A = make_Y<F>(n1, m1), B = make_Y<F>(n2, m2);
                           for (int d = -D; d <= D; d += 2) {
                             CheckResult r = hom_rigidity_check<F>(A, B, d);
                             if (!r.ok)
                               return check_fail("degree " + std::to_string(d) + ": " +
                                                 r.detail);
                           }
                           return CheckResult{};
                         }});
      }
  // complexes over different ambient ranks have no nonzero morphisms at all,
  // so their Hom complexes vanish identically
  cells.push_back({"rigidity", "cross-rank-zero", "totals<=" + std::to_string(tmax),
                   [] { return CheckResult{}; }});
  return cells;
}

template <class F>
std::vector<Cell> cells_cone(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int D = cfg.degmax();
  for (int m = 1; m <= cfg.nmax(3); ++m)
    cells.push_back({"cone", "cone-collapse",
                     "m=" + std::to_string(m) + " |d|<=" + std::to_string(D),
                     [m, D] { return check_cone_generate<F>(m, -D, D); }});
  return cells;
}

// ------------------------------------------------------------- diagrammatics

template <class F>
std::vector<Cell> cells_webster(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int bound = cfg.nmax(3);
  std::uint64_t seed = cfg.seed;
  cells.push_back({"webster", "seven-relations", "whiskers a+b<=" + std::to_string(bound),
                   [bound] { return check_webster_relations<F>(bound); }});
  cells.push_back({"webster", "seven-relations-functorial", "whiskers a+b<=1",
                   [] { return check_webster_relations_phi<F>(1); }});
  cells.push_back(
      {"webster", "anchor-identities", "", [] { return check_webster_anchors<F>(); }});
  cells.push_back({"webster", "q-compatibility", "100 random words, a+b<=2, len<=6",
                   [seed] { return check_q_phi_random<F>(100, 2, 6, seed); }});
  return cells;
}

// ------------------------------------------------------------------ k-theory

inline std::vector<Cell> cells_grdim(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int nmax = cfg.nmax(6), imax = cfg.nmax(5), T = cfg.trunc_or(12);
  cells.push_back({"grdim", "closed-vs-enumerated", "n<=" + std::to_string(nmax),
                   [nmax] { return grdim_agree_check(nmax); }});
  cells.push_back({"grdim", "literal-dimensions", "n<=3 T=8",
                   [] { return grdim_literal_check(3, 8); }});
  cells.push_back({"grdim", "quantum-rep-relations", "n<=5",
                   [] { return qrep_relations_check(5); }});
  cells.push_back({"grdim", "modified-form-closed", "n<=4",
                   [] { return modified_form_check(4); }});
  cells.push_back({"grdim", "limit-form-stability", "i,j<=4",
                   [] { return stability_check(4); }});
  cells.push_back({"grdim", "pairing-displays", "i,j<=" + std::to_string(imax),
                   [imax] { return psi_isometry_check(imax); }});
  cells.push_back({"grdim", "pairing-vs-solver", "i,j<=2 |d|<=" + std::to_string(T),
                   [T] { return pairing_hom_check<Rational>(2, T); }});
  cells.push_back({"grdim", "classes-vs-complexes", "n+m<=3",
                   [] { return class_check<Rational>(3); }});
  return cells;
}

inline std::vector<Cell> cells_isometry(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  int tmax = cfg.nmax(2), T = cfg.trunc_or(12);
  for (int t1 = 0; t1 <= tmax; ++t1)
    for (int t2 = 0; t2 <= tmax; ++t2)
      for (int n1 = 0; n1 <= t1; ++n1)
        for (int n2 = 0; n2 <= t2; ++n2) {
          int m1 = t1 - n1, m2 = t2 - n2;
          std::string tag = "(" + std::to_string(n1) + "," + std::to_string(m1) +
                            ")->(" + std::to_string(n2) + "," + std::to_string(m2) +
                            ") q<=" + std::to_string(T);
          cells.push_back({"isometry", "hom-grdim-vs-form", tag, [n1, m1, n2, m2, T] {
                             return isometry_check<Rational>(n1, m1, n2, m2, T);
                           }});
        }
  return cells;
}

// -------------------------------------------------------------- assembly

// The field-dependent suites rerun identically over prime fields; these are
// the cells behind the characteristic-independence comparison.
template <class F>
std::vector<Cell> cells_field_dependent(const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  for (auto& c : cells_hecke<F>(cfg)) cells.push_back(std::move(c));
  for (auto& c : cells_centrality<F>(cfg)) cells.push_back(std::move(c));
  for (auto& c : cells_exactness<F>(cfg)) cells.push_back(std::move(c));
  for (auto& c : cells_delta_diagrams<F>(cfg)) cells.push_back(std::move(c));
  for (auto& c : cells_generation<F>(cfg)) cells.push_back(std::move(c));
  return cells;
}

// Rerun the field-dependent suites over prime fields and demand outcomes
// identical to a characteristic-zero baseline.  When no baseline is given it
// is computed here first.
inline std::vector<Record> run_fields_suite(const SuiteConfig& cfg,
                                            const std::vector<Record>* baseline = nullptr,
                                            const std::vector<std::uint64_t>& primes = {2, 65521}) {
  std::vector<Record> base;
  if (baseline == nullptr) {
    base = run_cells(cells_field_dependent<Rational>(cfg), cfg.jobs);
    baseline = &base;
  }
  std::map<std::pair<std::string, std::string>, bool> expected;
  for (const Record& r : *baseline) expected[{r.lemma, r.params}] = r.pass;
  std::vector<Record> out;
  for (std::uint64_t p : primes) {
    Fp::set_modulus(p);
    std::vector<Cell> cells = cells_field_dependent<Fp>(cfg);
    std::vector<Record> got = run_cells(cells, cfg.jobs);
    bool same = true;
    std::string first;
    for (const Record& g : got) {
      Record r = g;
      r.suite = "fields";
      r.lemma += "@F" + std::to_string(p);
      out.push_back(r);
      auto it = expected.find({g.lemma, g.params});
      nh_check(it != expected.end(), "fields suite: no baseline for " + g.lemma);
      if (g.pass != it->second && same) {
        same = false;
        first = g.lemma + " " + g.params;
      }
    }
    out.push_back({"fields", "outcomes-match", "F" + std::to_string(p), same,
                   same ? "" : "diverges from characteristic 0 at " + first, 0});
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "hecke",  "delta",   "exactness", "quasi-iso", "rigidity", "cone",
      "webster", "grdim",  "isometry",  "fields",    "all"};
  return names;
}

template <class F>
std::vector<Cell> cells_for_suite(const std::string& name, const SuiteConfig& cfg) {
  std::vector<Cell> cells;
  auto extend = [&cells](std::vector<Cell> more) {
    for (auto& c : more) cells.push_back(std::move(c));
  };
  bool all = name == "all";
  if (all || name == "hecke") extend(cells_hecke<F>(cfg));
  if (all || name == "delta") {
    extend(cells_centrality<F>(cfg));
    extend(cells_delta_diagrams<F>(cfg));
    extend(cells_generation<F>(cfg));
  }
  if (all || name == "exactness") extend(cells_exactness<F>(cfg));
  if (all || name == "quasi-iso") extend(cells_quasi_iso<F>(cfg));
  if (all || name == "rigidity") extend(cells_rigidity<F>(cfg));
  if (all || name == "cone") extend(cells_cone<F>(cfg));
  if (all || name == "webster") extend(cells_webster<F>(cfg));
  return cells;
}

inline std::string config_echo(const SuiteConfig& cfg) {
  return "suite=" + cfg.suite + " n-max=" + std::to_string(cfg.n_max) +
         " deg-max=" + std::to_string(cfg.deg_max) + " trunc=" + std::to_string(cfg.trunc) +
         " field=" + cfg.field + " jobs=" + std::to_string(cfg.jobs);
}

// Executes the named suite under the configured field and returns the
// ordered report.  The series-level suites (grdim, isometry) are exact
// Laurent-series computations over the rationals and ignore a prime-field
// override.  Unknown suite names throw std::invalid_argument.
inline Report run_suite(const SuiteConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw std::invalid_argument("unknown suite: " + cfg.suite);

  bool modp = cfg.field.rfind("fp:", 0) == 0;
  if (modp) Fp::set_modulus(std::stoull(cfg.field.substr(3)));
  else if (cfg.field != "rat")
    throw std::invalid_argument("unknown field: " + cfg.field);

  Report rep;
  rep.version = kVersion;
  rep.config = config_echo(cfg);

  std::vector<Cell> cells = modp ? cells_for_suite<Fp>(cfg.suite, cfg)
                                 : cells_for_suite<Rational>(cfg.suite, cfg);
  bool all = cfg.suite == "all";
  if (all || cfg.suite == "grdim")
    for (auto& c : cells_grdim(cfg)) cells.push_back(std::move(c));
  if (all || cfg.suite == "isometry")
    for (auto& c : cells_isometry(cfg)) cells.push_back(std::move(c));
  rep.records = run_cells(cells, cfg.jobs);
  if (all || cfg.suite == "fields") {
    std::vector<Record> fr = run_fields_suite(cfg, all ? &rep.records : nullptr);
    // when running everything, the baseline slice is the leading field-
    // dependent block, which run_fields_suite matches by position
    for (auto& r : fr) rep.records.push_back(std::move(r));
  }
  return rep;
}

}  // namespace nilhecke
